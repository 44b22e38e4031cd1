# tests/test_separatrix.py
import pytest
from sympy.polys.domains import QQ

from folpol.algebra.puiseux import newton_puiseux
from folpol.algebra.truncation import adaptive, over_fields
from folpol.catalog import GERMS
from folpol.core.exceptions import NotASeparatrix
from folpol.foliation.forms import multiplicity
from folpol.foliation.leaves import is_invariant_branch
from folpol.reduction.invariants import divisor_valuations, pure_multiplicity, pure_valuations, tangency_excess
from folpol.reduction.reducer import reduce
from folpol.separatrix.balanced import balanced_equation, blown_up_balanced, check_balanced, local_balanced
from folpol.separatrix.extraction import point_sequence, separatrices
from folpol.utils.parser import parse_form

TRUNC = 24


def test_node_separatrices(form):
    w = form("2x dy - 3y dx")
    branches = separatrices(reduce(w), TRUNC)
    # two axes and two sample curvets
    assert len(branches) == 4
    assert all(is_invariant_branch(w, b) for b in branches)


def test_radial_curvets(form):
    branches = separatrices(reduce(form("x dy - y dx")), TRUNC)
    assert len(branches) == 2
    assert all(b.tag == "curvet" for b in branches)


def test_balanced_equation_of_node_is_xy(form):
    divisor = balanced_equation(reduce(form("2x dy - 3y dx")), TRUNC)
    assert divisor.order() == 2
    assert len(divisor.zeros) == 2
    assert divisor.poles == []


def test_radial_balanced_equation_has_two_zeros(form):
    tree = reduce(form("x dy - y dx"))
    divisor = balanced_equation(tree, TRUNC)
    check_balanced(tree, divisor)
    assert [item.coefficient for item in divisor.items] == [1, 1]


def test_one_three_node_takes_one_curvet(form):
    tree = reduce(form("x dy - 3y dx"))
    divisor = balanced_equation(tree, TRUNC)
    assert divisor.component_sum(3) == 1


@pytest.mark.parametrize(
    "text",
    [
        "-3x^2 dx + 2y dy",
        "x dy - y dx",
        "2x dy - 3y dx",
        "-y dx + x^2 dy",
        "-y^2 dx + (x^2 + x*y) dy",
        "-y^3 dx + (x^3 + x*y^2) dy",
        "(2x*y - y^2) dx + (x^2 - 2x*y) dy",
    ],
)
def test_multiplicity_identity(form, text):
    w = form(text)
    tree = reduce(w)
    divisor = balanced_equation(tree, TRUNC)
    assert multiplicity(w) == divisor.order() - 1 + tangency_excess(tree)


def test_valuations_split_into_pure_part(form):
    tree = reduce(form("2x dy - 3y dx"))
    divisor = balanced_equation(tree, TRUNC)
    nu = divisor_valuations(tree, divisor)
    pure = pure_valuations(tree, divisor)
    for comp in tree.components:
        assert nu[comp.id] == pure[comp.id] + comp.epsilon
        assert nu[comp.id] > 0


def test_adapted_radial_equation(form, curve):
    tree = reduce(form("x dy - y dx"))
    (line,) = newton_puiseux(curve("x"), TRUNC)
    divisor = balanced_equation(tree, TRUNC, adapt_to=[line])
    assert len(divisor.adapted_keys) == 1
    check_balanced(tree, divisor)


def test_adapting_to_a_non_leaf_fails(form, curve):
    tree = reduce(form("2x dy - 3y dx"))
    (line,) = newton_puiseux(curve("y - x"), TRUNC)
    with pytest.raises(NotASeparatrix):
        balanced_equation(tree, TRUNC, adapt_to=[line])


def test_pure_multiplicity_of_radial(form):
    tree = reduce(form("x dy - y dx"))
    divisor = balanced_equation(tree, TRUNC)
    assert pure_multiplicity(tree, divisor) == 1
    assert pure_valuations(tree, divisor) == {1: 2}


def test_pure_multiplicity_of_saddle_node(form):
    # both axes are isolated separatrices
    tree = reduce(form("-y dx + x^2 dy"))
    divisor = balanced_equation(tree, TRUNC)
    assert pure_multiplicity(tree, divisor) == 1


@pytest.mark.parametrize("text", ["2x dy - 3y dx", "x dy - 3y dx", "x dy - 2y dx"])
def test_transported_equation_matches_local_multiplicity(form, text):
    tree = reduce(form(text))
    divisor = balanced_equation(tree, TRUNC)
    for node in tree.nodes[1:]:
        if node.sing.is_singular:
            local = local_balanced(tree, divisor, node.id)
            assert local.order() - 1 == multiplicity(node.form), node.id


def test_invariant_line_enters_the_transform(form):
    tree = reduce(form("2x dy - 3y dx"))
    divisor = balanced_equation(tree, TRUNC)
    child = tree.nodes[tree.root.children[0]]
    local = blown_up_balanced(tree, divisor, tree.root.id, child.point)
    assert [item.attachment for item in local.items].count("divisor") == 1
    assert all(item.coefficient == 1 for item in local.items)


def test_generic_point_of_dicritical_line_sees_a_unit(form):
    tree = reduce(form("x dy - y dx"))
    divisor = balanced_equation(tree, TRUNC)
    local = blown_up_balanced(tree, divisor, tree.root.id, ("X", QQ(5)))
    assert local.items == []
    assert local.order() == 0


@pytest.mark.parametrize("entry", GERMS, ids=lambda g: g["name"])
def test_balanced_order_and_valuations_across_catalogue(entry):
    def run(K):
        w = parse_form(entry["form"]).to_field(K)
        tree = reduce(w)
        divisor = adaptive(lambda n: balanced_equation(tree, n), start=TRUNC)
        return w, tree, divisor

    w, tree, divisor = over_fields(run)
    assert multiplicity(w) == divisor.order() - 1 + tangency_excess(tree)
    nu = divisor_valuations(tree, divisor)
    pure = pure_valuations(tree, divisor)
    for comp in tree.components:
        assert nu[comp.id] == pure[comp.id] + comp.epsilon
        assert nu[comp.id] > 0


def test_curvet_points_run_zero_infinity_then_integers():
    points = point_sequence(QQ)
    assert [next(points) for _ in range(4)] == [("X", QQ(0)), ("Y", None), ("X", QQ(1)), ("X", QQ(2))]
