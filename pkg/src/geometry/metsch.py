"""Metsch's sufficient conditions for a clique geometry, and the lines they yield."""

import logging

from src.core.graph import Graph
from src.core.search import enumerate_maximal_cliques
from src.errors import ParameterError
from src.schemas.models import IntersectionArray, InequalityReport, MetschReport

logger = logging.getLogger(__name__)


def metsch_criterion(arr: IntersectionArray, m: int) -> MetschReport:
    """Evaluate the four conditions for a distance-regular array.

    Adjacent pairs have exactly lambda common neighbours, so the lower and
    upper adjacency bounds coincide; non-adjacent pairs have at most
    max(mu, 1) (the theorem needs a bound of at least one).
    """
    if m < 1:
        raise ParameterError(f"Metsch criterion needs m >= 1, got m={m}")
    k, lam = arr.k, arr.lambda_
    mu = max(arr.mu, 1)
    witness = {"k": k, "lambda": lam, "mu": mu, "m": m}

    details = [
        InequalityReport.flag("adjacent pairs have lambda common neighbours", True, **witness),
        InequalityReport.flag(
            "non-adjacent pairs have at most mu common neighbours", True, **witness
        ),
        InequalityReport.compare(
            "2lambda1-lambda2>(2m-1)(mu-1)-1",
            2 * lam - lam,
            ">",
            (2 * m - 1) * (mu - 1) - 1,
            witness,
        ),
        InequalityReport.compare(
            "k<(m+1)(lambda1+1)-m(m+1)(mu-1)/2",
            k,
            "<",
            (m + 1) * (lam + 1) - m * (m + 1) * (mu - 1) / 2,
            witness,
        ),
    ]
    threshold = lam + 2 - (m - 1) * (mu - 1)
    report = MetschReport(
        m=m,
        lambda1=lam,
        lambda2=lam,
        mu_bound=mu,
        conditions_hold=[r.holds for r in details],
        line_threshold=threshold,
        details=details,
    )
    logger.debug(f"[Metsch] {arr.describe()} m={m}: {report.conditions_hold}, lines >= {threshold}")
    return report


def metsch_lines(g: Graph, report: MetschReport) -> tuple[list[tuple[int, ...]], InequalityReport]:
    """Maximal cliques of size at least the line threshold, and whether they partition the edges."""
    size = max(report.line_threshold, 2)
    lines = enumerate_maximal_cliques(g, min_size=size)
    cover: dict[tuple[int, int], int] = dict.fromkeys(g.edges(), 0)
    for line in lines:
        for i, u in enumerate(line):
            for v in line[i + 1 :]:
                cover[(u, v)] += 1
    bad = next(((e, c) for e, c in cover.items() if c != 1), None)
    if bad is None:
        check = InequalityReport.flag("every edge on a unique line", True, lines=len(lines))
    else:
        (u, v), count = bad
        check = InequalityReport.flag(
            "every edge on a unique line",
            False,
            note=f"edge ({u}, {v}) lies on {count} lines",
            lines=len(lines),
        )
    return lines, check
