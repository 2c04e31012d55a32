"""Base class for the family-recognition pipelines."""

import logging
from abc import ABC, abstractmethod

from src.config import Settings, get_settings
from src.schemas.models import (
    ClassificationOutcome,
    ClassifierConfig,
    CliqueGeometryReport,
    Flag,
    IntersectionArray,
    InequalityReport,
    OutcomeLabel,
    Severity,
    SpectralProfile,
)
from src.spectral.constants import epsilon_star
from src.utils.logging import log_event

logger = logging.getLogger(__name__)


def make_config(
    d: int,
    epsilon: float | None = None,
    eta_d: float | None = None,
    m_d: int | None = None,
    settings: Settings | None = None,
) -> ClassifierConfig:
    """Classifier constants for diameter ``d``; explicit arguments win over settings.

    With no epsilon configured, epsilon = min(1 / (6 m_d^4 d), eps_d) / 2.
    """
    settings = settings or get_settings()
    eta = settings.eta_d if eta_d is None else eta_d
    m = settings.m_d if m_d is None else m_d
    eps = settings.epsilon if epsilon is None else epsilon
    if eps is None:
        eps = 0.5 * min(1.0 / (6 * m**4 * max(d, 1)), settings.eps_d)
    return ClassifierConfig(
        epsilon=float(eps),
        epsilon_star=epsilon_star(),
        eta_d=eta,
        eps_d=settings.eps_d,
        m_d=m,
        compare_tol=settings.compare_tol,
    )


def mismatch_flag(geometry: CliqueGeometryReport, message: str) -> Flag:
    """Hypotheses held but the conclusion failed.

    On an explicit graph this contradicts a theorem; on array-level geometry
    it only shows the array has no realization.
    """
    if geometry.source == "graph":
        logger.error(f"[Classifier] contradiction: {message}")
        if get_settings().event_log:
            log_event("contradiction", {"message": message})
        return Flag(severity=Severity.CONTRADICTION, message=message)
    return Flag(severity=Severity.UNREALIZABLE, message=message)


class BasePipeline(ABC):
    """Template for a theorem pipeline.

    ``run`` evaluates the hypothesis checklist and only asks the subclass for
    a conclusion when every entry holds.
    """

    def __init__(self, config: ClassifierConfig):
        self.config = config

    @property
    @abstractmethod
    def pipeline_name(self) -> str:
        """Name recorded on every outcome."""

    @abstractmethod
    def _checklist(
        self,
        arr: IntersectionArray,
        profile: SpectralProfile,
        geometry: CliqueGeometryReport,
    ) -> list[InequalityReport]:
        """Hypotheses of the theorem, in the order they are stated."""

    @abstractmethod
    def _conclude(
        self,
        arr: IntersectionArray,
        profile: SpectralProfile,
        geometry: CliqueGeometryReport,
        checklist: list[InequalityReport],
    ) -> ClassificationOutcome:
        """Conclusion once the whole checklist holds."""

    def run(
        self,
        arr: IntersectionArray,
        profile: SpectralProfile,
        geometry: CliqueGeometryReport,
    ) -> ClassificationOutcome:
        checklist = self._checklist(arr, profile, geometry)
        failed = [r.name for r in checklist if not r.holds]
        if failed:
            logger.info(f"[{self.pipeline_name}] {arr.describe()}: failed {failed}")
            notes = [f"hypothesis fails: {name}" for name in failed]
            return self.inconclusive(checklist, notes=notes)
        outcome = self._conclude(arr, profile, geometry, checklist)
        logger.info(f"[{self.pipeline_name}] {arr.describe()}: {outcome.display_label()}")
        return outcome

    def inconclusive(
        self,
        checklist: list[InequalityReport],
        flags: list[Flag] | None = None,
        notes: list[str] | None = None,
    ) -> ClassificationOutcome:
        return ClassificationOutcome(
            pipeline=self.pipeline_name,
            label=OutcomeLabel.INCONCLUSIVE,
            checklist=checklist,
            flags=flags or [],
            notes=notes or [],
        )

    def tol(self) -> float:
        return self.config.compare_tol

    @staticmethod
    def geometric_entry(geometry: CliqueGeometryReport) -> InequalityReport:
        return InequalityReport.flag(
            "geometric",
            geometry.is_geometric and geometry.m is not None,
            note=None if geometry.is_geometric else "; ".join(geometry.violations) or None,
            source=geometry.source,
            m=geometry.m,
        )
