# tests/test_reduction.py
import pytest

from folpol.algebra.puiseux import newton_puiseux
from folpol.core.exceptions import CeilingExceeded
from folpol.reduction.invariants import (
    branch_valuation,
    branch_valuations,
    is_generalized_curve_tree,
    locate_branch,
    is_second_type,
    recount_valences,
    tangency_excess,
    tree_invariants,
)
from folpol.reduction.reducer import reduce
from folpol.reduction.tree import serialize


def _components(tree):
    return [(c.rho, c.nu, c.dicritical) for c in tree.components]


def test_euclid_tree_of_two_three_node(form):
    tree = reduce(form("2x dy - 3y dx"))
    assert tree.length == 3
    assert _components(tree) == [(1, 1, False), (1, 2, False), (2, 5, True)]
    (dicritical,) = tree.dicritical_components()
    assert dicritical.valence == 2
    assert tree.neighbours(dicritical.id) == [1, 2]


def test_euclid_tree_of_one_three_node(form):
    tree = reduce(form("x dy - 3y dx"))
    assert tree.length == 3
    assert [c.dicritical for c in tree.components] == [False, False, True]
    assert tree.component(3).valence == 1


def test_radial_needs_one_blowup(form):
    tree = reduce(form("x dy - y dx"))
    assert tree.length == 1
    assert tree.component(1).dicritical
    assert tree.component(1).valence == 0
    assert tree.leaves() == []


def test_reduced_germ_has_empty_tree(form):
    tree = reduce(form("x dy + 2y dx"))
    assert tree.length == 0
    assert len(tree.leaves()) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tangent_saddle_node_family(form, k):
    tree = reduce(form(f"-y^{k + 1} dx + (x^{k + 1} + x*y^{k}) dy"))
    assert tree.length == 1
    assert tangency_excess(tree) == k
    assert not is_second_type(tree)
    assert not is_generalized_curve_tree(tree)
    (tangent,) = [leaf for leaf in tree.leaves() if leaf.is_tangent_saddle_node]
    assert tangent.weak_component == 1
    assert tangent.weak_index == k + 1
    assert tangent.weak_index == tangent.sing.weak_index


def test_saddle_node_is_second_type(form):
    tree = reduce(form("-y dx + x^2 dy"))
    assert is_second_type(tree)
    assert not is_generalized_curve_tree(tree)
    assert tangency_excess(tree) == 0


def test_generalized_curves(form):
    for text in ["-3x^2 dx + 2y dy", "2x dy - 3y dx", "(2x*y - y^2) dx + (x^2 - 2x*y) dy"]:
        assert is_generalized_curve_tree(reduce(form(text)))


def test_valences_match_recount(form):
    tree = reduce(form("-4x^3 dx + 3y^2 dy"))
    assert recount_valences(tree) == {c.id: c.valence for c in tree.components}


def test_blowup_ceiling(form):
    with pytest.raises(CeilingExceeded):
        reduce(form("2x dy - 5y dx"), max_blowups=2)


def test_serialized_tree(form):
    tree = reduce(form("x dy - 2y dx"))
    data = serialize(tree)
    assert data["length"] == tree.length
    assert data["nodes"][0]["parent"] is None
    assert tree_invariants(tree)["second_type"] is True


def test_branch_valuations_follow_the_weights(form, curve):
    # the dicritical component carries the weights x -> 2, y -> 3
    tree = reduce(form("2x dy - 3y dx"))
    (x_axis,) = newton_puiseux(curve("y"), 16)
    (y_axis,) = newton_puiseux(curve("x"), 16)
    assert branch_valuations(tree, locate_branch(tree, x_axis)) == {1: 1, 2: 2, 3: 3}
    assert branch_valuations(tree, locate_branch(tree, y_axis)) == {1: 1, 2: 1, 3: 2}
    assert branch_valuation(tree, locate_branch(tree, x_axis), 3) == 3


def test_located_branch_ends_at_a_leaf(form, curve):
    tree = reduce(form("2x dy - 3y dx"))
    (x_axis,) = newton_puiseux(curve("y"), 16)
    path = locate_branch(tree, x_axis)
    assert not path.is_curvet
    assert path.key[0] == "leaf"


def test_poincare_dulac_hides_a_tangent_saddle_node(form):
    tree = reduce(form("x dy - (2y + x^2) dx"))
    (tangent,) = [leaf for leaf in tree.leaves() if leaf.is_tangent_saddle_node]
    assert tangent.weak_index == tangent.sing.weak_index == 2
    assert tangency_excess(tree) == 1
    assert not is_second_type(tree)
