"""Exhaustive check of the rational inequality used in the multiplicity bound.

For integers 2 <= t <= x + 1 <= m,

    (m - x)(m - 1)^2 / (m - x + t - 2)^2 >= (m - 1) / (t - 1),

checked cross-multiplied so every comparison is an exact int64 one.
"""

import logging

import numpy as np

from src.errors import ParameterError
from src.schemas.models import InequalityReport

logger = logging.getLogger(__name__)


def appendix_slack(m: int, x: int, t: int) -> int:
    """(m - x)(m - 1)^2 (t - 1) - (m - 1)(m - x + t - 2)^2."""
    return (m - x) * (m - 1) ** 2 * (t - 1) - (m - 1) * (m - x + t - 2) ** 2


def appendix_inequality_verify(m_max: int) -> InequalityReport:
    """Minimum slack over all triples with m <= ``m_max`` and its lexicographic (m, x, t) argmin."""
    if m_max < 2:
        raise ParameterError(f"m_max must be at least 2, got {m_max}")

    best: int | None = None
    argmin = (0, 0, 0)
    triples = violations = 0
    for m in range(2, m_max + 1):
        x, t = np.meshgrid(
            np.arange(1, m, dtype=np.int64), np.arange(2, m + 1, dtype=np.int64), indexing="ij"
        )
        valid = t <= x + 1
        x, t = x[valid], t[valid]
        slack = (m - x) * (m - 1) ** 2 * (t - 1) - (m - 1) * (m - x + t - 2) ** 2
        triples += slack.size
        violations += int((slack < 0).sum())
        # x-major order, so argmin is the lexicographically first minimum
        pos = int(slack.argmin())
        low = int(slack[pos])
        if best is None or low < best:
            best, argmin = low, (m, int(x[pos]), int(t[pos]))

    m, x, t = argmin
    logger.info(f"[Appendix] m_max={m_max}: {triples} triples, min slack {best} at {argmin}")
    return InequalityReport.compare(
        "appendix inequality",
        best,
        ">=",
        0,
        {"m": m, "x": x, "t": t, "m_max": m_max, "triples": triples, "violations": violations},
        note="cross-multiplied: (m-x)(m-1)^2(t-1) - (m-1)(m-x+t-2)^2",
    )
