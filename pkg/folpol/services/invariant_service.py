# folpol/services/invariant_service.py
"""
Invariant Service - Command-level computations on a parsed input document
"""

from functools import reduce as fold
from itertools import combinations
from typing import Any, Callable, Dict, List, TypeVar

import structlog
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from folpol.algebra.fields import field_label
from folpol.algebra.intersection import branch_intersection, noether_intersection
from folpol.algebra.poly import format_poly, to_field
from folpol.algebra.puiseux import Branch, newton_puiseux
from folpol.algebra.truncation import adaptive, over_fields, start_trunc
from folpol.core.exceptions import FolpolException, InvalidInput, InvariantViolation, UnknownCommand
from folpol.core.logging_config import FolpolLogger
from folpol.domain.models import COMMANDS
from folpol.domain.validators import InputDocument
from folpol.foliation.forms import OneForm, milnor, milnor_recursion, multiplicity
from folpol.foliation.leaves import weak_separatrix_jet
from folpol.foliation.singularity import SaddleNode, classify
from folpol.linsneto.pencil import pencil_degree, radial_local_terms
from folpol.polar.excess import excess_ledger, is_generalized_curve_polar, polar_excess, polar_excess_rel
from folpol.polar.gsv import gsv_by_polars, gsv_direct
from folpol.polar.numbers import polar_ledger
from folpol.projective.foliation import (
    ProjectiveCurve,
    ProjectiveFoliation,
    bezout_check,
    curve_from_chart,
    degree_of,
    from_chart,
    lins_neto,
    singular_locus,
)
from folpol.projective.poincare import brunella_identity, poincare_bound
from folpol.reduction.invariants import (
    divisor_valuations,
    is_generalized_curve_tree,
    is_second_type,
    pure_multiplicity,
    pure_valuations,
    tangency_excess,
    tree_invariants,
)
from folpol.reduction.reducer import reduce
from folpol.reduction.tree import ReductionTree, serialize
from folpol.separatrix.balanced import balanced_equation, local_balanced
from folpol.separatrix.extraction import separatrices
from folpol.utils.time_utils import Stopwatch

logger = structlog.get_logger("invariant_service")

T = TypeVar("T")


class InvariantService:
    """Service running one command on an input document"""

    def __init__(self, document: InputDocument):
        self.document = document
        self.options = document.options
        self.seed = document.options.resolved_seed()
        self.max_blowups = document.options.resolved_max_blowups()
        self.field = QQ

    def run(self, command: str) -> Dict[str, Any]:
        """
        Run a command over the rationals, or over a quadratic field when required.

        Args:
            command: One of the documented commands

        Returns:
            Dictionary with the command data and the working field

        Raises:
            UnknownCommand: If the command is not documented
            FolpolException: Mathematical or input errors, logged and re-raised
        """
        if command not in COMMANDS:
            raise UnknownCommand(command)
        handler: Callable[[Any], Dict[str, Any]] = getattr(self, "_cmd_" + command.replace("-", "_"))
        watch = Stopwatch()

        try:
            # Step 1: Run over Q, restarting once over Q(sqrt d) on request
            data = over_fields(lambda K: self._in_field(K, handler))
        except FolpolException as exc:
            FolpolLogger.log_command(command, False, watch.elapsed_ms, code=exc.code)
            raise

        # Step 2: Record the outcome
        FolpolLogger.log_command(command, True, watch.elapsed_ms, field=field_label(self.field))
        return {"data": data, "field": field_label(self.field), "duration_ms": round(watch.elapsed_ms, 2)}

    def _in_field(self, K, handler: Callable[[Any], Dict[str, Any]]) -> Dict[str, Any]:
        self.field = K
        return handler(K)

    # ------------------------------------------------------------------------
    # Shared helpers
    # ------------------------------------------------------------------------

    def _form(self, K) -> OneForm:
        return self.document.require_form().to_field(K)

    def _tree(self, w: OneForm) -> ReductionTree:
        return reduce(w, self.max_blowups)

    def _adaptive(self, fn: Callable[[int], T], polys: List[PolyElement]) -> T:
        if self.options.trunc:
            return adaptive(fn, start=self.options.trunc, ceiling=self.options.trunc)
        return adaptive(fn, start=start_trunc(polys))

    def _curve_branches(self, K, trunc: int) -> List[Branch]:
        branches: List[Branch] = []
        for idx, curve in enumerate(self.document.require_curves(), start=1):
            pieces = newton_puiseux(to_field(curve, K), trunc)
            if not pieces:
                raise InvalidInput("curve does not pass through the origin", details={"curve": format_poly(curve)})
            for jdx, branch in enumerate(pieces, start=1):
                branches.append(branch.retag(label=f"C{idx}.{jdx}"))
        return branches

    @staticmethod
    def _pairings(branches: List[Branch]) -> List[Dict[str, Any]]:
        """Intersection of each pair of branches, by orders and by shared infinitely near points."""
        rows = []
        for b1, b2 in combinations(branches, 2):
            value = branch_intersection(b1, b2)
            noether = noether_intersection(b1, b2)
            if value != noether:
                raise InvariantViolation(f"intersection of {b1.label} and {b2.label}", value, noether)
            rows.append({"branches": [b1.label, b2.label], "intersection": value})
        return rows

    def _polys(self, w: OneForm) -> List[PolyElement]:
        return [w.a, w.b, *self.document.curves]

    # ------------------------------------------------------------------------
    # Local commands
    # ------------------------------------------------------------------------

    def _cmd_reduce(self, K) -> Dict[str, Any]:
        tree = self._tree(self._form(K))
        return {"tree": serialize(tree), "invariants": tree_invariants(tree)}

    def _cmd_invariants(self, K) -> Dict[str, Any]:
        w = self._form(K)
        tree = self._tree(w)
        nu = multiplicity(w)
        mu = milnor(w, seed=self.seed)

        def compute(trunc: int) -> Dict[str, Any]:
            divisor = balanced_equation(tree, trunc)
            valuations = divisor_valuations(tree, divisor)
            pure = pure_valuations(tree, divisor)
            return {
                "balanced_order": divisor.order(),
                "pure_multiplicity": pure_multiplicity(tree, divisor),
                "valuations": {
                    tree.component(c).label: {
                        "nu": valuations[c],
                        "pure": pure[c],
                        "epsilon": tree.component(c).epsilon,
                        "holds": valuations[c] == pure[c] + tree.component(c).epsilon and valuations[c] > 0,
                    }
                    for c in valuations
                },
            }

        balanced = self._adaptive(compute, self._polys(w))
        tau = tangency_excess(tree)
        sing = classify(w)
        report = {
            "form": w.to_dict(),
            "singularity": sing.to_dict(),
            "multiplicity": nu,
            "milnor": mu,
            "milnor_bound_holds": nu * (nu + 1) // 2 <= mu,
            "milnor_recursion": milnor_recursion(w),
            "tree": tree_invariants(tree),
            "balanced_order": balanced["balanced_order"],
            "pure_multiplicity": balanced["pure_multiplicity"],
            "multiplicity_identity": {
                "nu": nu,
                "rhs": balanced["balanced_order"] - 1 + tau,
                "holds": nu == balanced["balanced_order"] - 1 + tau,
            },
            "valuations": balanced["valuations"],
        }
        if isinstance(sing, SaddleNode):
            report["weak_separatrix"] = self._adaptive(
                lambda trunc: weak_separatrix_jet(w, trunc).to_dict(), self._polys(w)
            )
        return report

    def _cmd_separatrices(self, K) -> Dict[str, Any]:
        w = self._form(K)
        tree = self._tree(w)
        branches = self._adaptive(lambda trunc: separatrices(tree, trunc), self._polys(w))
        return {"count": len(branches), "separatrices": [b.to_dict() for b in branches]}

    def _cmd_balanced(self, K) -> Dict[str, Any]:
        w = self._form(K)
        tree = self._tree(w)

        def compute(trunc: int) -> Dict[str, Any]:
            adapt_to = self._curve_branches(K, trunc) if self.document.curves else None
            divisor = balanced_equation(tree, trunc, adapt_to=adapt_to)
            transforms = [
                {
                    "node": node.id,
                    "order": local_balanced(tree, divisor, node.id).order(),
                    "multiplicity": multiplicity(node.form),
                }
                for node in tree.nodes[1:]
                if node.sing.is_singular
            ]
            return {"balanced": divisor.to_dict(), "transforms": transforms}

        return self._adaptive(compute, self._polys(w))

    def _cmd_var(self, K) -> Dict[str, Any]:
        w = self._form(K)
        tree = self._tree(w)

        def compute(trunc: int) -> Dict[str, Any]:
            divisor = balanced_equation(tree, trunc, adapt_to=self._curve_branches(K, trunc))
            keys = list(divisor.adapted_keys)
            return {
                "var": polar_excess(w, divisor, keys, self.seed),
                "var_rel": polar_excess_rel(w, divisor, keys, self.seed),
                "branches": excess_ledger(w, divisor, self.seed),
                "polars": polar_ledger(w, divisor, self.seed),
            }

        return self._adaptive(compute, self._polys(w))

    def _cmd_gsv(self, K) -> Dict[str, Any]:
        w = self._form(K)
        tree = self._tree(w)

        def compute(trunc: int) -> Dict[str, Any]:
            branches = self._curve_branches(K, trunc)
            direct = gsv_direct(w, branches)
            record = gsv_by_polars(w, tree, branches, trunc, self.seed)
            if direct != record["value"]:
                raise InvariantViolation("gsv", direct, record["value"])
            return {
                "gsv": direct,
                "direct": direct,
                "pairings": self._pairings(branches),
                "polar_route": {k: v for k, v in record.items() if k != "divisor"},
            }

        return self._adaptive(compute, self._polys(w))

    def _cmd_generalized_curve(self, K) -> Dict[str, Any]:
        w = self._form(K)
        tree = self._tree(w)
        by_tree = is_generalized_curve_tree(tree)
        by_polar = self._adaptive(lambda trunc: is_generalized_curve_polar(w, tree, trunc, self.seed), self._polys(w))
        if by_tree != by_polar:
            raise InvariantViolation("generalized curve", by_polar, by_tree)
        return {"generalized_curve": by_tree, "by_tree": by_tree, "by_polar": by_polar}

    def _cmd_second_type(self, K) -> Dict[str, Any]:
        tree = self._tree(self._form(K))
        tau = tangency_excess(tree)
        tangent = [leaf.to_dict() for leaf in tree.leaves() if leaf.is_tangent_saddle_node]
        return {"second_type": is_second_type(tree), "tau": tau, "tangent_saddle_nodes": tangent}

    # ------------------------------------------------------------------------
    # Projective commands
    # ------------------------------------------------------------------------

    def _foliation(self, K) -> ProjectiveFoliation:
        if self.document.example == "lins-neto" and self.document.alpha is not None:
            num, den = self.document.alpha
            if num.b or den.b or den.is_zero():
                raise InvalidInput("pencil members are built for rational alpha only", details={"alpha": f"({num})/({den})"})
            F = lins_neto(f"{num.a}/{den.a}")
        else:
            F = from_chart(self.document.require_form(), self.options.chart, self.document.example or "")
        return F.to_field(K)

    def _curve(self, K) -> ProjectiveCurve:
        product = fold(lambda p, q: p * q, self.document.require_curves())
        return curve_from_chart(product, self.options.chart).to_field(K)

    def _cmd_bezout(self, K) -> Dict[str, Any]:
        F = self._foliation(K)
        report = bezout_check(F)
        report["degree_by_tangencies"] = degree_of(F, self.seed)
        return report

    def _cmd_poincare(self, K) -> Dict[str, Any]:
        F = self._foliation(K)
        points = singular_locus(F)
        return poincare_bound(F, self._curve(K), self.seed, self.max_blowups, points, self.options.workers)

    def _cmd_brunella(self, K) -> Dict[str, Any]:
        F = self._foliation(K)
        points = singular_locus(F)
        return brunella_identity(F, self._curve(K), self.seed, self.max_blowups, points, self.options.workers)

    # ------------------------------------------------------------------------
    # Pencil arithmetic
    # ------------------------------------------------------------------------

    def _cmd_linsneto(self, K) -> Dict[str, Any]:
        num, den = self.document.alpha or (2, 1)
        return {
            "pencil": pencil_degree(num, den),
            "radial": [radial_local_terms(n, self.options.trunc) for n in self.document.lines],
        }


def run_command(command: str, document: InputDocument) -> Dict[str, Any]:
    return InvariantService(document).run(command)

