"""Enumerate intersection arrays, keep the feasible ones and classify them."""

import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from functools import partial

from src.classifier.base import make_config
from src.config import get_settings
from src.errors import ParameterError
from src.geometry.clique_geometry import geometry_from_array
from src.schemas.models import ClassifierConfig, IntersectionArray, ScanRecord
from src.spectral.eigen import eigen_solve
from src.utils.logging import log_event
from src.validators.array_validator import ArrayValidator
from src.workflow.case_analysis import run_case_analysis

logger = logging.getLogger(__name__)

K_MAX_LIMIT = 10_000


def _b_sequences(k: int, d: int) -> Iterator[tuple[int, ...]]:
    def extend(b: list[int]) -> Iterator[tuple[int, ...]]:
        if len(b) == d:
            yield tuple(b)
            return
        # a_1 = k - b_1 - 1 >= 0
        top = b[-1] if len(b) > 1 else k - 1
        for value in range(1, top + 1):
            yield from extend([*b, value])

    yield from extend([k])


def _c_sequences(k: int, b: tuple[int, ...], d: int) -> Iterator[tuple[int, ...]]:
    def b_at(i: int) -> int:
        return b[i] if i < d else 0

    def extend(c: list[int], size: int) -> Iterator[tuple[int, ...]]:
        i = len(c) + 1
        if i > d:
            yield tuple(c)
            return
        # a_i >= 0 and c_i <= b_{d-i}
        top = min(k - b_at(i), b_at(d - i) if i < d else k)
        for value in range(c[-1], top + 1):
            grown = size * b[i - 1]
            if grown % value:
                continue
            yield from extend([*c, value], grown // value)

    yield from extend([1], k)


def enumerate_arrays(d: int, k_max: int) -> Iterator[IntersectionArray]:
    """Monotone arrays with integral layer sizes, in lexicographic (b, c) order."""
    if d < 2:
        raise ParameterError(f"scan needs d >= 2, got d={d}")
    if not 1 <= k_max <= K_MAX_LIMIT:
        raise ParameterError(f"k_max must lie in [1, {K_MAX_LIMIT}], got {k_max}")
    for k in range(2, k_max + 1):
        for b in _b_sequences(k, d):
            for c in _c_sequences(k, b, d):
                yield IntersectionArray(d=d, b=list(b), c=list(c))


def classify_candidate(arr: IntersectionArray, config: ClassifierConfig) -> ScanRecord | None:
    """Case analysis on array-level geometry; None when the array is infeasible."""
    if not ArrayValidator(arr).validate():
        return None
    profile = eigen_solve(arr)
    geometry = geometry_from_array(arr, profile)
    outcome = run_case_analysis(arr, profile, geometry, None, config)
    return ScanRecord(array=arr, outcome=outcome)


def scan(
    d: int,
    k_max: int,
    epsilon: float | None = None,
    eta_d: float | None = None,
    m_d: int | None = None,
    workers: int | None = None,
) -> Iterator[ScanRecord]:
    """Classify every feasible array with diameter ``d`` and valency at most ``k_max``.

    Work fans out over a thread pool; ``map`` keeps the input order so the
    stream is the same on every run.
    """
    settings = get_settings()
    workers = settings.scan_workers if workers is None else workers
    config = make_config(d, epsilon=epsilon, eta_d=eta_d, m_d=m_d)
    candidates = list(enumerate_arrays(d, k_max))
    logger.info("=" * 60)
    logger.info(
        f"[Scan] d={d}, k_max={k_max}: {len(candidates)} candidates, eps={config.epsilon:.6g}"
    )

    kept = 0
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for record in pool.map(partial(classify_candidate, config=config), candidates):
            if record is not None:
                kept += 1
                yield record

    logger.info(f"[Scan] {kept} feasible arrays classified")
    logger.info("=" * 60)
    if settings.event_log:
        log_event("scan", {"d": d, "k_max": k_max, "candidates": len(candidates), "feasible": kept})
