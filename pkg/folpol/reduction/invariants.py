# folpol/reduction/invariants.py
"""
Tree Invariants - Branch paths, valuations, pure valuations and tangency excess
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import structlog

from folpol.algebra.puiseux import Branch, ChartPoint, blow_up_branch, branch_tangent, describe_point
from folpol.core.config import settings
from folpol.core.exceptions import CeilingExceeded
from folpol.reduction.tree import ReductionTree

logger = structlog.get_logger("tree_invariants")

# ("leaf", node id, direction index) or ("curvet", component id, chart point)
BranchKey = Tuple[Any, ...]


@dataclass(frozen=True)
class BranchPath:
    """
    Route of a branch through the tree.

    ``steps`` holds (node id, multiplicity of the strict transform there)
    for every node the branch passes through.
    """

    steps: Tuple[Tuple[int, int], ...]
    key: BranchKey
    local: Branch

    @property
    def is_curvet(self) -> bool:
        return self.key[0] == "curvet"

    def multiplicity_at(self, node_id: int) -> int:
        for nid, m in self.steps:
            if nid == node_id:
                return m
        return 0

    def to_dict(self, K) -> Dict[str, Any]:
        if self.is_curvet:
            terminal = {"component": self.key[1], "point": describe_point(K, self.key[2])}
        else:
            terminal = {"leaf": self.key[1], "direction": self.key[2]}
        return {
            "steps": [{"node": nid, "multiplicity": m} for nid, m in self.steps],
            "terminal": terminal,
        }


def _direction_index(tree: ReductionTree, node_id: int, branch: Branch) -> Optional[int]:
    chart, center = branch_tangent(branch)
    for idx, leaf_direction in enumerate(tree.leaf_directions(node_id)):
        v1, v2 = leaf_direction.direction
        if chart == "Y" and not v1:
            return idx
        if chart == "X" and v1 and v2 == v1 * center:
            return idx
    return None


def locate_branch(tree: ReductionTree, branch: Branch) -> BranchPath:
    """
    Follow a branch through the tree to a leaf or to a regular point of a component.

    Args:
        tree: Reduction tree of the germ
        branch: Branch at the origin

    Returns:
        BranchPath with the visited nodes and the terminal key
    """
    node = tree.root
    current = branch
    steps: List[Tuple[int, int]] = []
    for _ in range(4 * settings.MAX_BLOWUPS):
        steps.append((node.id, current.multiplicity))
        if not node.blown_up:
            key = ("leaf", node.id, _direction_index(tree, node.id, current))
            return BranchPath(tuple(steps), key, current)
        point: ChartPoint = branch_tangent(current)
        lifted = blow_up_branch(current, *point)
        child = tree.child_at(node.id, point)
        if child is None or (not child.blown_up and not child.sing.is_singular):
            return BranchPath(tuple(steps), ("curvet", node.component, point), lifted)
        node, current = child, lifted
    raise CeilingExceeded(4 * settings.MAX_BLOWUPS, "branch lifts")


# ============================================================================
# Valuations
# ============================================================================

def branch_valuations(tree: ReductionTree, path: BranchPath) -> Dict[int, int]:
    """nu_E(B) = m_p(B) + sum of nu_D(B) over the components D through the center p of E."""
    values: Dict[int, int] = {}
    for comp in tree.components:
        center = tree.node(comp.node)
        values[comp.id] = path.multiplicity_at(center.id) + sum(values[d] for d in center.component_ids)
    return values


def branch_valuation(tree: ReductionTree, path: BranchPath, component: int) -> int:
    return branch_valuations(tree, path)[component]


def _items(divisor: Any) -> Iterable[Tuple[BranchPath, int]]:
    """(path, coefficient) pairs of a branch divisor."""
    return [(item.path, item.coefficient) for item in divisor.items]


def divisor_valuations(tree: ReductionTree, divisor: Any) -> Dict[int, int]:
    """nu_D of a branch divisor: the coefficient-weighted sum of branch valuations."""
    totals = {comp.id: 0 for comp in tree.components}
    for path, coefficient in _items(divisor):
        for comp_id, value in branch_valuations(tree, path).items():
            totals[comp_id] += coefficient * value
    return totals


def local_order(tree: ReductionTree, divisor: Any, node_id: int) -> int:
    """
    nu_p of the transformed balanced equation at a node: strict transforms
    with their coefficients, plus one for every invariant component through p.
    """
    node = tree.node(node_id)
    order = sum(coefficient * path.multiplicity_at(node_id) for path, coefficient in _items(divisor))
    order += sum(1 for c in node.component_ids if not tree.component(c).dicritical)
    return order


def pure_multiplicity(tree: ReductionTree, divisor: Any) -> int:
    """nu*_0 = nu_0 of the balanced equation minus one."""
    return local_order(tree, divisor, tree.root.id) - 1


def pure_valuations(tree: ReductionTree, divisor: Any) -> Dict[int, int]:
    """
    Pure valuations nu*_E along every component.

    For E created at p: nu*_E = nu*_p + (1 - eps(E)) + sum of nu*_D over
    the components D through p, where nu*_p is the local pure multiplicity
    of the transformed balanced equation.
    """
    values: Dict[int, int] = {}
    for comp in tree.components:
        center = tree.node(comp.node)
        local = local_order(tree, divisor, center.id) - 1
        values[comp.id] = local + (1 - comp.epsilon) + sum(values[d] for d in center.component_ids)
    return values


# ============================================================================
# Saddle-node data
# ============================================================================

def tangency_excess(tree: ReductionTree) -> int:
    """tau: sum over tangent saddle-nodes of rho(D) (Ind - 1) along the divisor holding the weak separatrix."""
    total = 0
    for leaf in tree.leaves():
        if leaf.is_tangent_saddle_node:
            rho = tree.component(leaf.weak_component).rho
            total += rho * (leaf.weak_index - 1)
    return total


def is_second_type(tree: ReductionTree) -> bool:
    return not any(leaf.is_tangent_saddle_node for leaf in tree.leaves())


def is_generalized_curve_tree(tree: ReductionTree) -> bool:
    return not any(leaf.is_saddle_node for leaf in tree.leaves())


# ============================================================================
# Recounts from the raw tree structure
# ============================================================================

def recount_adjacency(tree: ReductionTree) -> Set[FrozenSet[int]]:
    """Pairs of components meeting at a corner that was never blown up."""
    edges = set()
    for node in tree.nodes:
        if not node.blown_up and node.is_corner:
            edges.add(frozenset(node.component_ids))
    return edges


def recount_valences(tree: ReductionTree) -> Dict[int, int]:
    edges = recount_adjacency(tree)
    return {comp.id: sum(1 for edge in edges if comp.id in edge) for comp in tree.components}


def tree_invariants(tree: ReductionTree) -> Dict[str, Any]:
    return {
        "length": tree.length,
        "tau": tangency_excess(tree),
        "second_type": is_second_type(tree),
        "generalized_curve": is_generalized_curve_tree(tree),
        "components": [comp.to_dict() for comp in tree.components],
    }
