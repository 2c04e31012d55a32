"""Hamming graphs from a spectral gap, disjoint-clique local graphs and a dominant distance."""

import logging

from src.classifier.base import BasePipeline, mismatch_flag
from src.classifier.lemmas import first_thin_layer
from src.drg.params import hamming_array
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

DOOB_ALPHABET = 4


class HammingPipeline(BasePipeline):
    @property
    def pipeline_name(self) -> str:
        return "hamming"

    def _checklist(
        self,
        arr: IntersectionArray,
        profile: SpectralProfile,
        geometry: CliqueGeometryReport,
    ) -> list[InequalityReport]:
        d, k, m = arr.d, arr.k, geometry.m
        eps, tol = self.config.epsilon, self.tol()
        checks = [
            self.geometric_entry(geometry),
            InequalityReport.compare("d>=2", d, ">=", 2),
        ]
        if d < 2:
            return checks
        checks.append(
            InequalityReport.flag(
                "DisjointCliquesLocal",
                geometry.neighborhood_kind == NeighborhoodKind.DISJOINT_CLIQUES,
                psi1=geometry.psi1,
            )
        )
        checks.append(InequalityReport.compare("mu>=2", arr.mu, ">=", 2))
        b1 = arr.b_at(1)
        checks.append(
            InequalityReport.compare(
                "theta1>=(1-eps)b1",
                profile.theta1,
                ">=",
                (1 - eps) * b1,
                {"theta1": profile.theta1, "b1": b1, "epsilon": eps},
                tol=tol,
            )
        )
        t = first_thin_layer(arr, eps, tol)
        if t is None:
            checks.append(
                InequalityReport.flag(
                    "exists t: c_t,b_t<=eps k", False, note="no such t", eps_k=eps * k
                )
            )
        else:
            checks.append(
                InequalityReport.compare(
                    "exists t: c_t,b_t<=eps k",
                    max(arr.c_at(t), arr.b_at(t)),
                    "<=",
                    eps * k,
                    {"t": t, "c_t": arr.c_at(t), "b_t": arr.b_at(t)},
                    tol=tol,
                )
            )
        if m is None:
            checks.append(InequalityReport.flag("eps<1/(6m^4 d)", False, note="m unknown"))
        else:
            checks.append(
                InequalityReport.compare("eps<1/(6m^4 d)", eps, "<", 1 / (6 * m**4 * d), {"m": m})
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
        s = 1 + k // d
        expected = hamming_array(d, s)
        if expected.key() != arr.key():
            flag = mismatch_flag(
                geometry,
                f"theorem-hypothesis-vs-array mismatch: {arr.describe()} is not "
                f"H({d},{s}) = {expected.describe()}",
            )
            return self.inconclusive(checklist, flags=[flag])

        label = OutcomeLabel.HAMMING
        notes = []
        if s == DOOB_ALPHABET:
            notes.append(f"Doob graphs of diameter {d} share this array")
            if k < 6 * d:
                label = OutcomeLabel.DOOB_POSSIBLE
                notes.append(f"k = {k} < 6d = {6 * d}, so the array cannot exclude a Doob graph")
        return ClassificationOutcome(
            pipeline=self.pipeline_name,
            label=label,
            s=s,
            d=d,
            checklist=checklist,
            notes=notes,
        )


def hamming_pipeline(
    arr: IntersectionArray,
    profile: SpectralProfile,
    geometry: CliqueGeometryReport,
    config: ClassifierConfig,
) -> ClassificationOutcome:
    return HammingPipeline(config).run(arr, profile, geometry)
