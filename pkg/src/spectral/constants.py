"""Smallest-eigenvalue constants for locally bounded graphs."""

import logging
from functools import lru_cache

from scipy.optimize import brentq

from src.schemas.models import HOFFMAN_LIMIT, VARTHETA_BRACKET, EigRange

logger = logging.getLogger(__name__)


def vartheta_polynomial(theta: float) -> float:
    """theta^2 (theta^2 - 1)^2 (theta^2 - 3) (theta^2 - 4) - 1."""
    sq = theta * theta
    return sq * (sq - 1) ** 2 * (sq - 3) * (sq - 4) - 1


def solve_vartheta(tolerance: float = 1e-9) -> EigRange:
    """Root of the defining polynomial in [-2.1, -2.0] and the derived epsilon*."""
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    low, high = VARTHETA_BRACKET
    # the polynomial is steep near the root, so the residual needs a tighter xtol
    root = brentq(vartheta_polynomial, low, high, xtol=min(tolerance, 1e-12))
    epsilon_star = (-2.0 - root) / (-1.0 - root)
    residual = abs(vartheta_polynomial(root))
    logger.debug(f"[Constants] vartheta_1={root:.12f}, epsilon*={epsilon_star:.9f}")
    return EigRange(
        vartheta_1=root, epsilon_star=epsilon_star, residual=residual, limit=HOFFMAN_LIMIT
    )


@lru_cache(maxsize=1)
def epsilon_star() -> float:
    return solve_vartheta().epsilon_star
