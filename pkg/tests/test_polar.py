# tests/test_polar.py
import pytest

from folpol.algebra.intersection import branch_intersection, branch_milnor
from folpol.algebra.poly import diff_x, diff_y, to_field
from folpol.algebra.puiseux import blow_up_branch, branch_tangent, newton_puiseux
from folpol.algebra.truncation import adaptive, over_fields
from folpol.catalog import GERMS
from folpol.foliation.forms import OneForm, blow_up, is_dicritical_first_blowup, multiplicity, pull_back
from folpol.polar.excess import (
    branch_excess,
    excess_ledger,
    is_generalized_curve_polar,
    polar_excess,
    polar_excess_rel,
)
from folpol.polar.gsv import gsv_by_polars, gsv_direct
from folpol.polar.numbers import divisor_polar, polar_intersection, polar_ledger
from folpol.reduction.invariants import is_generalized_curve_tree, is_second_type
from folpol.reduction.reducer import reduce
from folpol.separatrix.balanced import balanced_equation, blown_up_balanced
from folpol.utils.parser import parse_form, parse_poly

TRUNC = 24
SEED = 7


def _branches(*curves):
    result = []
    for text in curves:
        result.extend(newton_puiseux(parse_poly(text), TRUNC))
    return result


def test_polar_of_cusp_differential(form):
    (cusp,) = _branches("y^2 - x^3")
    assert polar_intersection(form("-3x^2 dx + 2y dy"), cusp, SEED) == 3
    assert branch_milnor(cusp) == 2


def test_radial_gsv():
    w = parse_form("x dy - y dx")
    assert gsv_direct(w, _branches("x")) == 1
    assert gsv_direct(w, _branches("x", "y")) == 0


def test_radial_gsv_through_balanced_equation():
    w = parse_form("x dy - y dx")
    tree = reduce(w)
    for curves, expected in [(("x",), 1), (("x", "y"), 0)]:
        record = gsv_by_polars(w, tree, _branches(*curves), TRUNC, SEED)
        assert record["value"] == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_saddle_node_weak_branch_excess(k):
    w = parse_form(f"-{k}y dx + x^{k + 1} dy")
    tree = reduce(w)
    divisor = balanced_equation(tree, TRUNC, adapt_to=_branches("y"))
    keys = list(divisor.adapted_keys)
    assert polar_excess(w, divisor, keys, SEED) == k
    record = gsv_by_polars(w, tree, _branches("y"), TRUNC, SEED)
    assert record["value"] == gsv_direct(w, _branches("y")) == k + 1


def test_strong_branch_has_no_excess():
    w = parse_form("-2y dx + x^3 dy")
    divisor = balanced_equation(reduce(w), TRUNC, adapt_to=_branches("x"))
    assert polar_excess(w, divisor, list(divisor.adapted_keys), SEED) == 0


def test_ledgers_cover_the_zero_part():
    w = parse_form("2x dy - 3y dx")
    divisor = balanced_equation(reduce(w), TRUNC)
    assert len(excess_ledger(w, divisor, SEED)) == len(divisor.zeros)
    assert all(row["var"] == 0 for row in excess_ledger(w, divisor, SEED))
    assert polar_ledger(w, divisor, SEED)


@pytest.mark.parametrize("entry", [g for g in GERMS if "generalized_curve" in g], ids=lambda g: g["name"])
def test_generalized_curve_tests_agree(entry):
    def both(K):
        w = parse_form(entry["form"]).to_field(K)
        tree = reduce(w)
        by_polar = adaptive(lambda n: is_generalized_curve_polar(w, tree, n, SEED), start=TRUNC)
        return is_generalized_curve_tree(tree), by_polar, is_second_type(tree)

    by_tree, by_polar, second_type = over_fields(both)
    assert by_tree == entry["generalized_curve"]
    assert second_type == entry["second_type"]
    assert by_polar == by_tree


# ----------------------------------------------------------------------------
# Relative polar excess
# ----------------------------------------------------------------------------

def _against_rest(divisor, keys):
    curve = [divisor.item(key).branch for key in keys]
    rest = [item.branch for item in divisor.zeros if item.key not in keys]
    return sum(branch_intersection(c, z) for c in curve for z in rest)


def _against_poles(divisor, keys):
    curve = [divisor.item(key).branch for key in keys]
    return sum(-p.coefficient * branch_intersection(c, p.branch) for c in curve for p in divisor.poles)


def test_relative_excess_of_radial_line():
    w = parse_form("x dy - y dx")
    line = _branches("x")
    divisor = balanced_equation(reduce(w), TRUNC, adapt_to=line)
    keys = list(divisor.adapted_keys)
    assert polar_excess(w, divisor, keys, SEED) == 0
    assert polar_excess_rel(w, divisor, keys, SEED) == 1
    assert _against_rest(divisor, keys) == 1
    assert gsv_direct(w, line) == 1


@pytest.mark.parametrize("k", [1, 2])
def test_relative_excess_of_saddle_node_weak_branch(k):
    w = parse_form(f"-{k}y dx + x^{k + 1} dy")
    weak = _branches("y")
    divisor = balanced_equation(reduce(w), TRUNC, adapt_to=weak)
    keys = list(divisor.adapted_keys)
    assert polar_excess(w, divisor, keys, SEED) == k
    assert polar_excess_rel(w, divisor, keys, SEED) == k + 1
    assert gsv_direct(w, weak) == k + 1


@pytest.mark.parametrize(
    "text,single",
    [("y dx + x dy", 1), ("(2x*y - y^2) dx + (x^2 - 2x*y) dy", 2)],
)
def test_relative_excess_of_two_lines(text, single):
    w = parse_form(text)
    lines = _branches("x", "y")
    divisor = balanced_equation(reduce(w), TRUNC, adapt_to=lines)
    first, second = divisor.adapted_keys
    assert polar_excess_rel(w, divisor, [first], SEED) == single
    assert polar_excess_rel(w, divisor, [second], SEED) == single
    pair = polar_excess_rel(w, divisor, [first, second], SEED)
    assert pair == 2 * single - 2 * branch_intersection(*lines)
    assert pair == gsv_direct(w, lines) + _against_poles(divisor, [first, second])


# ----------------------------------------------------------------------------
# Catalogue-wide identities
# ----------------------------------------------------------------------------

def _on_germ(entry, check):
    def run(K):
        w = parse_form(entry["form"]).to_field(K)
        return adaptive(lambda n: check(w, n), start=TRUNC)

    return over_fields(run)


def _sub_curves(divisor):
    items = [item for item in divisor.zeros if not item.branch.formal]
    chosen = []
    for part in (items[:1], items[:2], items, items[-1:]):
        keys = [item.key for item in part]
        if part and keys not in [[i.key for i in c] for c in chosen]:
            chosen.append(part)
    return [[item.branch for item in part] for part in chosen]


@pytest.mark.parametrize("entry", GERMS, ids=lambda g: g["name"])
def test_excess_is_never_negative(entry):
    def check(w, n):
        return excess_ledger(w, balanced_equation(reduce(w), n), SEED)

    rows = _on_germ(entry, check)
    assert all(row["var"] >= 0 for row in rows), rows


@pytest.mark.parametrize("entry", GERMS, ids=lambda g: g["name"])
def test_gsv_routes_and_relative_excess_agree(entry):
    def check(w, n):
        tree = reduce(w)
        seen = 0
        for branches in _sub_curves(balanced_equation(tree, n)):
            record = gsv_by_polars(w, tree, branches, n, SEED)
            divisor = record["divisor"]
            keys = list(divisor.adapted_keys)
            direct = gsv_direct(w, branches)
            rel = polar_excess_rel(w, divisor, keys, SEED)
            assert record["value"] == direct
            assert record["var"] == rel - _against_rest(divisor, keys)
            assert rel == direct + _against_poles(divisor, keys)
            if len(keys) == 2:
                singles = sum(polar_excess_rel(w, divisor, [key], SEED) for key in keys)
                assert rel == singles - 2 * branch_intersection(*branches)
            seen += 1
        return seen

    assert _on_germ(entry, check) >= 1


# ----------------------------------------------------------------------------
# Behaviour under the first blow-up
# ----------------------------------------------------------------------------

@pytest.mark.parametrize("entry", GERMS, ids=lambda g: g["name"])
def test_foliation_polars_under_first_blow_up(entry):
    def check(w, n):
        dicritical = is_dicritical_first_blowup(w)
        k = multiplicity(w) + 1 if dicritical else multiplicity(w)
        for item in balanced_equation(reduce(w), n).zeros:
            point = branch_tangent(item.branch)
            lifted = blow_up_branch(item.branch, *point)
            before = polar_intersection(w, item.branch, SEED)
            undivided = OneForm(*pull_back(w, *point))
            assert polar_intersection(undivided, lifted, SEED) == before + lifted.multiplicity
            divided = blow_up(w, point[0], point[1], dicritical)
            expected = before - k * item.branch.multiplicity + lifted.multiplicity
            assert polar_intersection(divided, lifted, SEED) == expected

    _on_germ(entry, check)


@pytest.mark.parametrize("text", sorted({c for g in GERMS for c in g["curves"]}))
def test_differential_polars_under_first_blow_up(text):
    def check(K):
        f = to_field(parse_poly(text), K)
        df = OneForm(diff_x(f), diff_y(f))
        for branch in newton_puiseux(f, TRUNC):
            point = branch_tangent(branch)
            lifted = blow_up_branch(branch, *point)
            pulled = OneForm(*pull_back(df, *point))
            assert polar_intersection(pulled, lifted, SEED) == polar_intersection(df, branch, SEED) + lifted.multiplicity

    over_fields(check)


@pytest.mark.parametrize("entry", GERMS, ids=lambda g: g["name"])
def test_excess_drops_by_tangency_excess_at_first_blow_up(entry):
    def check(w, n):
        tree = reduce(w)
        if not tree.root.blown_up:
            return False
        divisor = balanced_equation(tree, n)
        dicritical = is_dicritical_first_blowup(w)
        epsilon = 0 if dicritical else 1
        tau = multiplicity(w) + 1 - divisor.order()
        for item in divisor.zeros:
            point = branch_tangent(item.branch)
            m = item.branch.multiplicity
            local = blown_up_balanced(tree, divisor, tree.root.id, point)
            lifted = local.item(item.key).branch
            expected = divisor_polar(divisor, item.key, SEED) - (divisor.order() - epsilon) * m + lifted.multiplicity
            assert divisor_polar(local, item.key, SEED) == expected
            divided = blow_up(w, point[0], point[1], dicritical)
            assert branch_excess(w, divisor, item.key, SEED) == branch_excess(divided, local, item.key, SEED) + tau * m
        return True

    if not _on_germ(entry, check):
        pytest.skip("reduced at the origin")
