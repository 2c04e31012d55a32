"""Pydantic report and record types for drg-motion."""

from src.schemas.models import (
    AnalysisDocument,
    CaseTag,
    ClassificationOutcome,
    ClassifierConfig,
    ClassifyDocument,
    CliqueGeometryReport,
    DichotomyReport,
    DualDocument,
    DualReport,
    EigRange,
    Flag,
    GeneratorSpec,
    GeometryDocument,
    GraphFamily,
    InequalityReport,
    IntersectionArray,
    LocalLineGraphReport,
    MetschReport,
    MotionBound,
    MotionReport,
    NeighborhoodKind,
    NeighborhoodReport,
    OutcomeLabel,
    RootGraphReport,
    ScanRecord,
    Severity,
    SpectralProfile,
    SpectrumDocument,
)

__all__ = [
    "AnalysisDocument",
    "CaseTag",
    "ClassificationOutcome",
    "ClassifierConfig",
    "ClassifyDocument",
    "CliqueGeometryReport",
    "DichotomyReport",
    "DualDocument",
    "DualReport",
    "EigRange",
    "Flag",
    "GeneratorSpec",
    "GeometryDocument",
    "GraphFamily",
    "InequalityReport",
    "IntersectionArray",
    "LocalLineGraphReport",
    "MetschReport",
    "MotionBound",
    "MotionReport",
    "NeighborhoodKind",
    "NeighborhoodReport",
    "OutcomeLabel",
    "RootGraphReport",
    "ScanRecord",
    "Severity",
    "SpectralProfile",
    "SpectrumDocument",
]
