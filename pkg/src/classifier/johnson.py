"""Johnson graphs from a large spectral gap and connected local graphs."""

import logging

from src.classifier.base import BasePipeline, mismatch_flag
from src.drg.params import johnson_array
from src.schemas.models import (
    ClassificationOutcome,
    ClassifierConfig,
    CliqueGeometryReport,
    IntersectionArray,
    InequalityReport,
    NeighborhoodKind,
    OutcomeLabel,
    SpectralProfile,
)

logger = logging.getLogger(__name__)

JOHNSON_MIN_DEGREE = 29


class JohnsonPipeline(BasePipeline):
    """theta_1 + 1 > (1 - eps*) b_1, connected X(v) and k >= max(m^3, 29) give J(k/d + d, d)."""

    @property
    def pipeline_name(self) -> str:
        return "johnson"

    def _checklist(
        self,
        arr: IntersectionArray,
        profile: SpectralProfile,
        geometry: CliqueGeometryReport,
    ) -> list[InequalityReport]:
        d, k, m = arr.d, arr.k, geometry.m
        eps_star = self.config.epsilon_star
        checks = [
            self.geometric_entry(geometry),
            InequalityReport.compare("d>=2", d, ">=", 2),
        ]
        if d < 2:
            return checks
        b1 = arr.b_at(1)
        checks.append(InequalityReport.compare("mu>=2", arr.mu, ">=", 2))
        checks.append(
            InequalityReport.compare(
                "theta1+1>(1-eps*)b1",
                profile.theta1 + 1,
                ">",
                (1 - eps_star) * b1,
                {"theta1": profile.theta1, "b1": b1, "epsilon_star": eps_star},
            )
        )
        if m is None:
            checks.append(InequalityReport.flag("k>=max(m^3,29)", False, note="m unknown"))
        else:
            checks.append(
                InequalityReport.compare(
                    "k>=max(m^3,29)", k, ">=", max(m**3, JOHNSON_MIN_DEGREE), {"m": m}
                )
            )
        checks.append(
            InequalityReport.flag(
                "ConnectedLocal",
                geometry.neighborhood_kind == NeighborhoodKind.CONNECTED,
                psi1=geometry.psi1,
            )
        )
        checks.append(
            InequalityReport.compare(
                "lambda>2",
                arr.lambda_,
                ">",
                2,
                note="follows from k >= m^3 and m >= 2, since lambda >= k/m - 1",
            )
        )
        return checks

    def _conclude(
        self,
        arr: IntersectionArray,
        profile: SpectralProfile,
        geometry: CliqueGeometryReport,
        checklist: list[InequalityReport],
    ) -> ClassificationOutcome:
        d, k = arr.d, arr.k
        if k % d:
            flag = mismatch_flag(
                geometry, f"theorem-hypothesis-vs-array mismatch: d = {d} does not divide k = {k}"
            )
            return self.inconclusive(checklist, flags=[flag])
        s = k // d + d
        try:
            expected = johnson_array(s, d)
        except ValueError as e:
            flag = mismatch_flag(
                geometry, f"theorem-hypothesis-vs-array mismatch: J({s},{d}) invalid ({e})"
            )
            return self.inconclusive(checklist, flags=[flag])
        if expected.key() != arr.key():
            flag = mismatch_flag(
                geometry,
                f"theorem-hypothesis-vs-array mismatch: {arr.describe()} is not "
                f"J({s},{d}) = {expected.describe()}",
            )
            return self.inconclusive(checklist, flags=[flag])
        return ClassificationOutcome(
            pipeline=self.pipeline_name,
            label=OutcomeLabel.JOHNSON,
            s=s,
            d=d,
            checklist=checklist,
        )


def johnson_hypotheses(
    arr: IntersectionArray,
    profile: SpectralProfile,
    geometry: CliqueGeometryReport,
    config: ClassifierConfig,
) -> ClassificationOutcome:
    return JohnsonPipeline(config).run(arr, profile, geometry)
