# folpol/separatrix/balanced.py
"""
Balanced Equations - Divisors of separatrices, adaptation and blow-up transforms
"""

import dataclasses
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import structlog

from folpol.algebra.puiseux import Branch, ChartPoint, blow_up_branch, branch_tangent, describe_point
from folpol.core.exceptions import InvariantViolation, NotASeparatrix
from folpol.foliation.leaves import is_invariant_branch
from folpol.reduction.invariants import BranchKey, BranchPath, locate_branch
from folpol.reduction.tree import ReductionTree
from folpol.separatrix.extraction import axis_branch, curvet, curvet_points, isolated_separatrices

logger = structlog.get_logger("balanced")

Attachment = Union[str, int]


@dataclass(frozen=True)
class DivisorItem:
    """One branch of a divisor with its integer coefficient."""

    branch: Branch
    coefficient: int
    attachment: Attachment
    key: BranchKey
    path: Optional[BranchPath] = None

    @property
    def is_zero(self) -> bool:
        return self.coefficient > 0

    @property
    def is_pole(self) -> bool:
        return self.coefficient < 0

    def to_dict(self, K) -> Dict[str, Any]:
        data = {
            "coefficient": self.coefficient,
            "attachment": self.attachment,
            "branch": self.branch.to_dict(),
        }
        if self.key[0] == "curvet":
            data["point"] = describe_point(K, self.key[2])
        return data


@dataclass
class BranchDivisor:
    """
    Formal product of branches with integer exponents.

    Zeros have positive coefficients and poles negative ones; the
    product is never expanded.
    """

    items: List[DivisorItem] = field(default_factory=list)
    adapted_keys: Tuple[BranchKey, ...] = ()

    @property
    def zeros(self) -> List[DivisorItem]:
        return [item for item in self.items if item.is_zero]

    @property
    def poles(self) -> List[DivisorItem]:
        return [item for item in self.items if item.is_pole]

    @property
    def keys(self) -> List[BranchKey]:
        return [item.key for item in self.items]

    def item(self, key: BranchKey) -> DivisorItem:
        for item in self.items:
            if item.key == key:
                return item
        raise KeyError(key)

    def adapted_items(self) -> List[DivisorItem]:
        return [self.item(key) for key in self.adapted_keys]

    def order(self) -> int:
        """nu_0 of the divisor."""
        return sum(item.coefficient * item.branch.multiplicity for item in self.items)

    def component_sum(self, component: int) -> int:
        return sum(item.coefficient for item in self.items if item.attachment == component)

    def to_dict(self) -> Dict[str, Any]:
        K = self.items[0].branch.field if self.items else None
        return {
            "order": self.order(),
            "zeros": [item.to_dict(K) for item in self.zeros],
            "poles": [item.to_dict(K) for item in self.poles],
        }


def check_balanced(tree: ReductionTree, divisor: BranchDivisor) -> None:
    """
    Verify the defining conditions of a balanced equation.

    Raises:
        InvariantViolation: If a condition fails
    """
    keys = divisor.keys
    if len(set(map(repr, keys))) != len(keys):
        raise InvariantViolation("distinct branches", len(set(map(repr, keys))), len(keys))
    for item in divisor.items:
        if item.attachment == "isolated" and item.coefficient != 1:
            raise InvariantViolation("isolated coefficient", item.coefficient, 1)
    for comp in tree.dicritical_components():
        total = divisor.component_sum(comp.id)
        if total != 2 - comp.valence:
            raise InvariantViolation(f"balance of {comp.label}", total, 2 - comp.valence)


# ============================================================================
# Construction
# ============================================================================

def _point_index(points: Sequence[ChartPoint], point: ChartPoint) -> Optional[int]:
    for idx, candidate in enumerate(points):
        if candidate == point:
            return idx
    return None


def _locate_adapted(
    tree: ReductionTree,
    branches: Iterable[Branch],
) -> List[Tuple[BranchPath, Branch]]:
    located = []
    for branch in branches:
        if not is_invariant_branch(tree.germ, branch):
            raise NotASeparatrix(branch.label or "adapted branch")
        located.append((locate_branch(tree, branch), branch))
    return located


def balanced_equation(
    tree: ReductionTree,
    trunc: int,
    adapt_to: Optional[Sequence[Branch]] = None,
) -> BranchDivisor:
    """
    Balanced equation of separatrices, optionally adapted to a curve of separatrices.

    Isolated separatrices get coefficient +1; every dicritical component D
    gets curvets whose coefficients add up to 2 - val(D). Adapted curvets
    enter with +1 and the component is rebalanced with poles or zeros
    taken from the unused points of its curvet sequence.

    Args:
        tree: Reduction tree of the germ
        trunc: Truncation order of the computed parametrizations
        adapt_to: Branches that must belong to the zero part

    Returns:
        The BranchDivisor, with ``adapted_keys`` in the order of adapt_to

    Raises:
        NotASeparatrix: If an adapted branch is not invariant or not a separatrix
    """
    # Step 1: Isolated separatrices
    isolated = isolated_separatrices(tree, trunc)
    items: List[DivisorItem] = [
        DivisorItem(branch, 1, "isolated", key, locate_branch(tree, branch)) for key, branch in isolated
    ]

    # Step 2: Adapted branches
    adapted_keys: List[BranchKey] = []
    adapted_by_component: Dict[int, List[Tuple[ChartPoint, Branch, BranchPath]]] = {}
    for path, branch in _locate_adapted(tree, adapt_to or ()):
        if path.is_curvet:
            _, comp_id, point = path.key
            if not tree.component(comp_id).dicritical:
                raise NotASeparatrix(branch.label or "adapted branch")
            adapted_by_component.setdefault(comp_id, []).append((point, branch, path))
            key = ("curvet", comp_id, point)
        else:
            key = path.key
            known = [i for i, item in enumerate(items) if item.key == key]
            if not known:
                raise NotASeparatrix(branch.label or "adapted branch")
            old = items[known[0]]
            items[known[0]] = dataclasses.replace(old, branch=branch.retag(tag=old.branch.tag, formal=old.branch.formal), path=path)
        if key not in adapted_keys:
            adapted_keys.append(key)

    # Step 3: Curvets of the dicritical components
    for comp in tree.dicritical_components():
        items.extend(_component_curvets(tree, comp.id, comp.valence, adapted_by_component.get(comp.id, []), trunc))

    divisor = BranchDivisor(items, tuple(adapted_keys))
    check_balanced(tree, divisor)
    logger.debug(
        "balanced_equation_built",
        zeros=len(divisor.zeros),
        poles=len(divisor.poles),
        adapted=len(adapted_keys),
    )
    return divisor


def _component_curvets(
    tree: ReductionTree,
    component: int,
    valence: int,
    adapted: List[Tuple[ChartPoint, Branch, BranchPath]],
    trunc: int,
) -> List[DivisorItem]:
    target = 2 - valence
    sequence = curvet_points(tree, component)

    # Default choice: |target| points with the sign of target
    chosen: List[ChartPoint] = []
    coefficients: List[int] = []
    sign = 1 if target > 0 else -1
    for _ in range(abs(target)):
        chosen.append(next(sequence))
        coefficients.append(sign)

    # Adapted points become zeros
    given: Dict[int, Tuple[Branch, BranchPath]] = {}
    for point, branch, path in adapted:
        idx = _point_index(chosen, point)
        if idx is None:
            chosen.append(point)
            coefficients.append(1)
            idx = len(chosen) - 1
        else:
            coefficients[idx] = 1
        given[idx] = (branch, path)

    # Rebalance from unused points
    total = sum(coefficients)
    fresh = curvet_points(tree, component, exclude=chosen)
    while total != target:
        step = -1 if total > target else 1
        chosen.append(next(fresh))
        coefficients.append(step)
        total += step

    items = []
    for idx, (point, coefficient) in enumerate(zip(chosen, coefficients)):
        if idx in given:
            branch, path = given[idx]
            branch = branch.retag(tag="curvet", component=component)
        else:
            branch = curvet(tree, component, point, trunc)
            path = locate_branch(tree, branch)
        items.append(DivisorItem(branch, coefficient, component, ("curvet", component, point), path))
    return items


# ============================================================================
# Behaviour under blow-ups
# ============================================================================

def blown_up_balanced(tree: ReductionTree, divisor: BranchDivisor, node_id: int, point: ChartPoint) -> BranchDivisor:
    """
    Transform of a balanced equation at a point of the exceptional line of a node.

    Strict transforms of the branches through the point keep their
    coefficients; the exceptional line enters with +1 when it is invariant.

    Args:
        tree: Reduction tree
        divisor: Balanced equation in the coordinates of the node
        node_id: A blown-up node
        point: Chart point of its exceptional line

    Returns:
        Balanced equation of the transformed germ at the point
    """
    node = tree.node(node_id)
    comp = tree.component(node.component)
    items = []
    for item in divisor.items:
        if branch_tangent(item.branch) == point:
            items.append(dataclasses.replace(item, branch=blow_up_branch(item.branch, *point), path=None))
    if not comp.dicritical:
        trunc = max((item.branch.prec for item in divisor.items), default=16)
        axis = "x" if point[0] == "X" else "y"
        line = axis_branch(tree.field, axis, trunc).retag(label=comp.label, component=comp.id)
        items.append(DivisorItem(line, 1, "divisor", ("divisor", comp.id)))
    return BranchDivisor(items)


def local_balanced(tree: ReductionTree, divisor: BranchDivisor, node_id: int) -> BranchDivisor:
    """Balanced equation transported from the origin down to a node."""
    chain = list(reversed(tree.path_to_root(node_id)))
    local = divisor
    for parent, child in zip(chain, chain[1:]):
        local = blown_up_balanced(tree, local, parent.id, child.point)
    return local
