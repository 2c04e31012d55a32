"""Automorphism groups, motion and motion lower bounds."""

from src.motion.automorphisms import (
    Automorphism,
    AutomorphismGroup,
    automorphism_group,
    enumerate_automorphisms,
    refine,
)
from src.motion.bounds import (
    array_motion_bounds,
    distinguishing_bound,
    dual_motion_transfer,
    exact_motion,
    max_common_neighbours,
    mixing_lemma_bound,
    thickness_bound,
)

__all__ = [
    "Automorphism",
    "AutomorphismGroup",
    "array_motion_bounds",
    "automorphism_group",
    "distinguishing_bound",
    "dual_motion_transfer",
    "enumerate_automorphisms",
    "exact_motion",
    "max_common_neighbours",
    "mixing_lemma_bound",
    "refine",
    "thickness_bound",
]
