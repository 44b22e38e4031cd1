# folpol/separatrix/extraction.py
"""
Separatrix Extraction - Isolated separatrices of the leaves and curvets of dicritical components
"""

import dataclasses
from itertools import count
from typing import Iterable, Iterator, List, Tuple

import structlog

from folpol.algebra.puiseux import Branch, ChartPoint, describe_point, push_param
from folpol.algebra.series import PuiseuxSeries, series_ring
from folpol.foliation.forms import blow_up
from folpol.foliation.leaves import invariant_curve_jet
from folpol.reduction.invariants import BranchKey
from folpol.reduction.tree import ReductionTree

logger = structlog.get_logger("separatrix")

# Precision given to coordinates that vanish identically.
EXACT_ZERO_PREC = 10 ** 6


def push_down(tree: ReductionTree, node_id: int, branch: Branch) -> Branch:
    """Image at the origin of a branch given in the coordinates of a node."""
    node = tree.node(node_id)
    xs, ys = branch.x, branch.y
    while node.parent is not None:
        xs, ys = push_param(xs, ys, node.point)
        node = tree.node(node.parent)
    return dataclasses.replace(branch, x=xs, y=ys)


def axis_branch(K, axis: str, trunc: int) -> Branch:
    """The coordinate axis {axis = 0} as a branch."""
    t = series_ring(K).gens[0]
    line = PuiseuxSeries(t, trunc)
    zero = PuiseuxSeries.zero(K, EXACT_ZERO_PREC)
    if axis == "x":
        return Branch(zero, line, tag="divisor")
    return Branch(line, zero, tag="divisor")


# ============================================================================
# Isolated separatrices
# ============================================================================

def isolated_separatrices(tree: ReductionTree, trunc: int) -> List[Tuple[BranchKey, Branch]]:
    """
    Separatrices through the leaves, transverse to the divisor, pushed to the origin.

    Weak separatrices of saddle-nodes are tagged formal.
    """
    result = []
    for leaf in tree.leaves():
        node = tree.node(leaf.node)
        for idx, leaf_direction in enumerate(tree.leaf_directions(leaf.node)):
            if leaf_direction.divisor is not None:
                continue
            jet = invariant_curve_jet(node.form, leaf_direction.direction, trunc)
            branch = push_down(tree, node.id, jet)
            tag = "formal" if leaf_direction.formal else "isolated"
            branch = branch.retag(tag=tag, formal=leaf_direction.formal, label=f"S{node.id}.{idx}")
            result.append((("leaf", node.id, idx), branch))
    logger.debug("isolated_separatrices", count=len(result), trunc=trunc)
    return result


# ============================================================================
# Curvets
# ============================================================================

def point_sequence(K) -> Iterator[ChartPoint]:
    """
    Curvet points of an exceptional line in a fixed order.

    The u-coordinate runs 0, infinity, 1, 2, 3, ...: the X-origin first,
    then the Y-origin, then the X-chart points u = n.
    """
    yield ("X", K.zero)
    yield ("Y", None)
    for n in count(1):
        yield ("X", K.convert(n))


def is_curvet_point(tree: ReductionTree, component: int, point: ChartPoint) -> bool:
    """True for a regular point of the component that is neither a corner nor blown up."""
    node_id = tree.component(component).node
    child = tree.child_at(node_id, point)
    if child is None:
        return True
    return not child.blown_up and not child.sing.is_singular and not child.is_corner


def curvet_points(
    tree: ReductionTree,
    component: int,
    exclude: Iterable[ChartPoint] = (),
) -> Iterator[ChartPoint]:
    """Deterministic sequence of points of a dicritical component carrying curvets."""
    excluded = list(exclude)
    for point in point_sequence(tree.field):
        if point in excluded:
            continue
        if is_curvet_point(tree, component, point):
            yield point


def curvet(tree: ReductionTree, component: int, point: ChartPoint, trunc: int) -> Branch:
    """The leaf through a point of a dicritical component, pushed to the origin."""
    comp = tree.component(component)
    center = tree.node(comp.node)
    child = tree.child_at(center.id, point)
    if child is not None:
        local = child.form
    else:
        local = blow_up(center.form, point[0], point[1], dicritical=True)
    jet = invariant_curve_jet(local, None, trunc)
    xs, ys = push_param(jet.x, jet.y, point)
    branch = push_down(tree, center.id, Branch(xs, ys))
    label = f"C{component}@{describe_point(tree.field, point)}"
    return branch.retag(tag="curvet", component=component, label=label)


def separatrices(tree: ReductionTree, trunc: int, curvets_per_component: int = 2) -> List[Branch]:
    """
    Isolated separatrices followed by sample curvets of every dicritical component.

    Args:
        tree: Reduction tree
        trunc: Truncation order of the parametrizations at the leaves
        curvets_per_component: Number of representatives per dicritical component

    Returns:
        Branches at the origin
    """
    branches = [branch for _, branch in isolated_separatrices(tree, trunc)]
    for comp in tree.dicritical_components():
        points = curvet_points(tree, comp.id)
        for _ in range(curvets_per_component):
            branches.append(curvet(tree, comp.id, next(points), trunc))
    return branches

