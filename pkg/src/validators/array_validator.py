"""Feasibility validation for candidate intersection arrays."""

import logging

from src.drg.params import basic_inequalities, intersection_numbers
from src.errors import InfeasibleArrayError
from src.schemas.models import IntersectionArray, InequalityReport
from src.spectral.eigen import feasibility_check

logger = logging.getLogger(__name__)


class ArrayValidator:
    """Runs the parameter-level checks an array must pass to be realizable.

    No graph is consulted: the quadrangle-dependent Terwilliger inequality is
    skipped, everything else is necessary for any distance-regular graph.
    """

    def __init__(self, arr: IntersectionArray):
        self.arr = arr
        self.errors: list[str] = []
        self.reports: list[InequalityReport] = []

    def _collect(self, reports: list[InequalityReport]) -> bool:
        self.reports.extend(reports)
        failed = [r for r in reports if not r.holds]
        for r in failed:
            detail = f" ({r.note})" if r.note else ""
            self.errors.append(f"{self.arr.describe()}: {r.name}{detail}")
        return not failed

    def validate_parameters(self) -> bool:
        """2 lambda <= k + mu and the c_3 bounds."""
        return self._collect(basic_inequalities(self.arr, has_quadrangle=False))

    def validate_intersection_numbers(self) -> bool:
        """Every p^s_ij is a non-negative integer."""
        try:
            intersection_numbers(self.arr)
        except InfeasibleArrayError as e:
            self.errors.append(str(e))
            return False
        return True

    def validate_spectrum(self) -> bool:
        """Layer sizes and Biggs multiplicities are integral and add up to n."""
        return self._collect(feasibility_check(self.arr))

    def validate(self) -> bool:
        """Run every check, stopping at the first failing stage."""
        self.errors = []
        self.reports = []
        ok = (
            self.validate_parameters()
            and self.validate_intersection_numbers()
            and self.validate_spectrum()
        )
        if not ok:
            logger.debug(f"[Validator] {self.arr.describe()} rejected: {self.errors[0]}")
        return ok
