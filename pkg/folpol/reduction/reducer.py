# folpol/reduction/reducer.py
"""
Reducer - Seidenberg reduction of a germ with minimal separatrix conventions
"""

from collections import deque
from functools import lru_cache
from typing import Deque, List, Optional, Tuple

import structlog

from folpol.algebra.poly import coefficient
from folpol.algebra.puiseux import ChartPoint
from folpol.core.config import settings
from folpol.core.exceptions import CeilingExceeded
from folpol.core.logging_config import FolpolLogger
from folpol.foliation.forms import (
    OneForm,
    blow_up,
    exceptional_centers,
    is_dicritical_first_blowup,
    multiplicity,
)
from folpol.foliation.singularity import classify
from folpol.reduction.tree import DivisorRecord, ExceptionalComponent, ReductionTree, TreeNode

logger = structlog.get_logger("reducer")


class Reducer:
    """Builds the reduction tree of one germ, breadth first."""

    def __init__(self, w: OneForm, max_blowups: Optional[int] = None):
        self.max_blowups = max_blowups or settings.MAX_BLOWUPS
        self.tree = ReductionTree(germ=w.deflate())

    def run(self) -> ReductionTree:
        root = self._add_node(None, None, self.tree.germ.with_divisors(()), ())
        pending: Deque[int] = deque()
        if self.needs_blowup(root):
            pending.append(root.id)

        while pending:
            node = self.tree.node(pending.popleft())
            for child in self._blow_up(node):
                if self.needs_blowup(child):
                    pending.append(child.id)

        for comp in self.tree.components:
            comp.valence = len(self.tree.neighbours(comp.id))

        logger.info(
            "reduction_complete",
            germ=self.tree.germ.format(),
            blowups=self.tree.length,
            dicritical=[c.id for c in self.tree.dicritical_components()],
        )
        return self.tree

    # ------------------------------------------------------------------
    # Decisions
    # ------------------------------------------------------------------

    def needs_blowup(self, node: TreeNode) -> bool:
        """
        A node is blown up when it is not reduced, when it is a singular
        point of a dicritical component, a regular point where the foliation
        is tangent to a dicritical component, or a corner of two dicritical
        components.
        """
        if not node.sing.is_reduced:
            return True
        dicritical_axes = [
            axis for axis, comp in node.divisors if self.tree.component(comp).dicritical
        ]
        if not dicritical_axes:
            return False
        if node.sing.is_singular or len(dicritical_axes) == 2:
            return True
        w = node.form
        for axis in dicritical_axes:
            if axis == "x" and not coefficient(w.b, 0, 0):
                return True
            if axis == "y" and not coefficient(w.a, 0, 0):
                return True
        return False

    # ------------------------------------------------------------------
    # Tree growth
    # ------------------------------------------------------------------

    def _add_node(
        self,
        parent: Optional[TreeNode],
        point: Optional[ChartPoint],
        form: OneForm,
        divisors: Tuple[DivisorRecord, ...],
    ) -> TreeNode:
        node = TreeNode(
            id=len(self.tree.nodes),
            parent=parent.id if parent else None,
            point=point,
            form=form,
            divisors=divisors,
            sing=classify(form),
            depth=parent.depth + 1 if parent else 0,
        )
        self.tree.nodes.append(node)
        if parent:
            parent.children.append(node.id)
        return node

    def _blow_up(self, node: TreeNode) -> List[TreeNode]:
        if self.tree.length >= self.max_blowups:
            raise CeilingExceeded(self.max_blowups)

        # Step 1: Component data
        w = node.form
        nu = multiplicity(w)
        dicritical = is_dicritical_first_blowup(w)
        through = [self.tree.component(c) for c in node.component_ids]
        rho = sum(c.rho for c in through) or 1
        nu_e = nu + int(dicritical) + sum(c.nu for c in through)
        comp = ExceptionalComponent(
            id=self.tree.length + 1, node=node.id, rho=rho, nu=nu_e, dicritical=dicritical
        )
        self.tree.components.append(comp)
        node.blown_up = True
        node.component = comp.id

        # Step 2: Adjacency
        for other in through:
            self.tree.edges.add(frozenset((comp.id, other.id)))
        if len(through) == 2:
            self.tree.edges.discard(frozenset((through[0].id, through[1].id)))

        FolpolLogger.log_blowup(node.id, comp.id, dicritical, nu)

        # Step 3: Transforms at the points worth visiting
        children = []
        for point in self._visit_points(node, dicritical):
            chart, center = point
            form = blow_up(w, chart, center, dicritical)
            divisors = self._child_divisors(node, point, comp.id)
            children.append(self._add_node(node, point, form.with_divisors(tuple(a for a, _ in divisors)), divisors))
        return children

    def _visit_points(self, node: TreeNode, dicritical: bool) -> List[ChartPoint]:
        K = node.form.field
        centers = list(exceptional_centers(node.form, dicritical))
        points: List[ChartPoint] = [("X", c) for c in centers]
        has_y_divisor = any(axis == "y" for axis, _ in node.divisors)
        if has_y_divisor and all(c for c in centers):
            points.append(("X", K.zero))
        points.append(("Y", None))
        return points

    @staticmethod
    def _child_divisors(node: TreeNode, point: ChartPoint, component: int) -> Tuple[DivisorRecord, ...]:
        chart, center = point
        if chart == "X":
            divisors: List[DivisorRecord] = [("x", component)]
            if not center:
                divisors.extend(rec for rec in node.divisors if rec[0] == "y")
            return tuple(divisors)
        divisors = [("y", component)]
        divisors.extend(rec for rec in node.divisors if rec[0] == "x")
        return tuple(divisors)


@lru_cache(maxsize=128)
def _reduce_cached(w: OneForm, max_blowups: int) -> ReductionTree:
    return Reducer(w, max_blowups).run()


def reduce(w: OneForm, max_blowups: Optional[int] = None) -> ReductionTree:
    """
    Reduction of singularities of a germ.

    Args:
        w: Germ at the origin
        max_blowups: Ceiling on the number of blow-ups

    Returns:
        The finished tree; cached per germ, treat it as read-only

    Raises:
        NeedsAlgebraicExtension: If a singular point is not defined over the field
        CeilingExceeded: If more than max_blowups blow-ups are needed
    """
    return _reduce_cached(w, max_blowups or settings.MAX_BLOWUPS)
