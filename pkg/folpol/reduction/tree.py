# folpol/reduction/tree.py
"""
Reduction Tree - Infinitely near points, exceptional components and leaves
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple

from folpol.algebra.puiseux import ChartPoint, describe_point
from folpol.foliation.forms import OneForm
from folpol.foliation.leaves import divisor_index
from folpol.foliation.singularity import (
    Direction,
    NonDegenerate,
    SaddleNode,
    SingClass,
    describe_direction,
    eigen_directions,
)

# (axis, component id): axis "x" is {x = 0}, axis "y" is {y = 0}
DivisorRecord = Tuple[str, int]


@dataclass
class ExceptionalComponent:
    """An exceptional line of the reduction with its bookkeeping."""

    id: int
    node: int
    rho: int
    nu: int
    dicritical: bool
    valence: int = 0

    @property
    def label(self) -> str:
        return f"E{self.id}"

    @property
    def epsilon(self) -> int:
        return 0 if self.dicritical else 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "label": self.label,
            "node": self.node,
            "rho": self.rho,
            "nu": self.nu,
            "dicritical": self.dicritical,
            "valence": self.valence,
            "epsilon": self.epsilon,
        }


@dataclass
class TreeNode:
    """An infinitely near point with its local germ in chart coordinates."""

    id: int
    parent: Optional[int]
    point: Optional[ChartPoint]
    form: OneForm
    divisors: Tuple[DivisorRecord, ...]
    sing: SingClass
    depth: int = 0
    blown_up: bool = False
    component: Optional[int] = None
    children: List[int] = field(default_factory=list)

    @property
    def is_corner(self) -> bool:
        return len(self.divisors) >= 2

    @property
    def component_ids(self) -> Tuple[int, ...]:
        return tuple(comp for _, comp in self.divisors)

    def axis_of(self, component: int) -> Optional[str]:
        for axis, comp in self.divisors:
            if comp == component:
                return axis
        return None

    def to_dict(self) -> Dict[str, Any]:
        K = self.form.field
        return {
            "id": self.id,
            "parent": self.parent,
            "point": describe_point(K, self.point) if self.point else None,
            "depth": self.depth,
            "form": self.form.to_dict(),
            "divisors": [{"axis": axis, "component": comp} for axis, comp in self.divisors],
            "class": self.sing.to_dict(),
            "blown_up": self.blown_up,
            "component": self.component,
        }


@dataclass(frozen=True)
class LeafDirection:
    """A separatrix direction at a reduced singular point."""

    direction: Direction
    formal: bool
    divisor: Optional[int]


@dataclass(frozen=True)
class Leaf:
    """A reduced singular point at the end of the reduction."""

    node: int
    sing: SingClass
    components: Tuple[int, ...]
    weak_component: Optional[int] = None
    weak_index: Optional[int] = None

    @property
    def is_saddle_node(self) -> bool:
        return isinstance(self.sing, SaddleNode)

    @property
    def is_tangent_saddle_node(self) -> bool:
        return self.weak_component is not None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "node": self.node,
            "class": self.sing.to_dict(),
            "components": list(self.components),
            "tangent_saddle_node": self.is_tangent_saddle_node,
        }
        if self.is_tangent_saddle_node:
            data["weak_component"] = self.weak_component
            data["weak_index"] = self.weak_index
        return data


def along_axis(direction: Direction, axis: str) -> bool:
    """True when the direction is tangent to the coordinate axis {axis = 0}."""
    v1, v2 = direction
    return not v1 if axis == "x" else not v2


@dataclass
class ReductionTree:
    """
    Result of the reduction of singularities of a germ.

    Nodes are stored in creation order; node 0 is the origin. Components
    are numbered from 1 in the order of the blow-ups creating them.
    """

    germ: OneForm
    nodes: List[TreeNode] = field(default_factory=list)
    components: List[ExceptionalComponent] = field(default_factory=list)
    edges: Set[FrozenSet[int]] = field(default_factory=set)

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    @property
    def field(self):
        return self.germ.field

    @property
    def length(self) -> int:
        """Number of blow-ups."""
        return len(self.components)

    def node(self, node_id: int) -> TreeNode:
        return self.nodes[node_id]

    def component(self, component_id: int) -> ExceptionalComponent:
        return self.components[component_id - 1]

    def child_at(self, node_id: int, point: ChartPoint) -> Optional[TreeNode]:
        for child_id in self.nodes[node_id].children:
            child = self.nodes[child_id]
            if child.point == point:
                return child
        return None

    def dicritical_components(self) -> List[ExceptionalComponent]:
        return [c for c in self.components if c.dicritical]

    def neighbours(self, component_id: int) -> List[int]:
        result = []
        for edge in self.edges:
            if component_id in edge:
                (other,) = edge - {component_id}
                result.append(other)
        return sorted(result)

    def path_to_root(self, node_id: int) -> List[TreeNode]:
        """Nodes from node_id up to the origin, node_id first."""
        chain = []
        current: Optional[int] = node_id
        while current is not None:
            node = self.nodes[current]
            chain.append(node)
            current = node.parent
        return chain

    # ------------------------------------------------------------------
    # Leaves
    # ------------------------------------------------------------------

    def leaves(self) -> List[Leaf]:
        result = []
        for node in self.nodes:
            if node.blown_up or not node.sing.is_singular:
                continue
            weak_component = None
            weak_index = None
            if isinstance(node.sing, SaddleNode):
                for axis, comp in node.divisors:
                    if along_axis(node.sing.weak_direction, axis):
                        weak_component = comp
                        weak_index = int(divisor_index(node.form, axis))
            result.append(Leaf(node.id, node.sing, node.component_ids, weak_component, weak_index))
        return result

    def leaf_directions(self, node_id: int) -> List[LeafDirection]:
        """Separatrix directions at a leaf, each with the divisor it lies in (if any)."""
        node = self.nodes[node_id]
        sing = node.sing
        if isinstance(sing, SaddleNode):
            pairs = [(sing.weak_direction, True), (sing.strong_direction, False)]
        elif isinstance(sing, NonDegenerate):
            pairs = [(v, False) for _, v in eigen_directions(node.form)]
        else:
            return []
        result = []
        for direction, formal in pairs:
            divisor = None
            for axis, comp in node.divisors:
                if along_axis(direction, axis):
                    divisor = comp
            result.append(LeafDirection(direction, formal, divisor))
        return result

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        K = self.field
        leaves = []
        for leaf in self.leaves():
            data = leaf.to_dict()
            data["directions"] = [
                {
                    "direction": describe_direction(K, d.direction),
                    "formal": d.formal,
                    "divisor": d.divisor,
                }
                for d in self.leaf_directions(leaf.node)
            ]
            leaves.append(data)
        return {
            "germ": self.germ.to_dict(),
            "length": self.length,
            "nodes": [node.to_dict() for node in self.nodes],
            "edges": sorted(sorted(edge) for edge in self.edges),
            "components": [comp.to_dict() for comp in self.components],
            "leaves": leaves,
        }


def serialize(tree: ReductionTree) -> Dict[str, Any]:
    return tree.to_dict()
