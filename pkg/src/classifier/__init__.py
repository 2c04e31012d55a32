"""Theorem pipelines recognizing Johnson and Hamming graphs from their parameters."""

from src.classifier.appendix import appendix_inequality_verify
from src.classifier.base import BasePipeline, make_config
from src.classifier.hamming import HammingPipeline, hamming_pipeline
from src.classifier.johnson import JohnsonPipeline, johnson_hypotheses
from src.classifier.lemmas import (
    gamma_d,
    induced_bipartite_bound,
    mu_eigen_gate,
    multiplicity_dichotomy,
    standard_sequence_lower_bounds,
    tau_monotonicity,
)

__all__ = [
    "BasePipeline",
    "HammingPipeline",
    "JohnsonPipeline",
    "appendix_inequality_verify",
    "gamma_d",
    "hamming_pipeline",
    "induced_bipartite_bound",
    "johnson_hypotheses",
    "make_config",
    "mu_eigen_gate",
    "multiplicity_dichotomy",
    "standard_sequence_lower_bounds",
    "tau_monotonicity",
]
