"""LangGraph state machine walking the final case analysis.

    diameter -> case_a -> case_b -> case_c -> c1 -> c2 | c3 -> END

Every node either settles the outcome (and routes to END) or hands over to
the next test. The order of the tests is fixed, so each array gets exactly
one case tag.
"""

import logging

from langgraph.graph import END, START, StateGraph
from pydantic import BaseModel, ConfigDict, Field

from src.classifier.base import mismatch_flag
from src.classifier.hamming import hamming_pipeline
from src.classifier.johnson import johnson_hypotheses
from src.classifier.lemmas import (
    GAMMA_PRIME_NOTE,
    at_most,
    first_distinguishing_layer,
    first_thin_layer,
    gamma_d,
    mu_eigen_gate,
)
from src.core.graph import Graph
from src.geometry.polygons import classify_mu1_dual
from src.motion.bounds import exact_motion
from src.schemas.models import (
    CaseTag,
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

logger = logging.getLogger(__name__)

PIPELINE = "case-analysis"

# graphs above this size are not enumerated for the exact-motion cross-check
MAX_CROSS_CHECK_VERTICES = 400


class CaseState(BaseModel):
    """State carried between case-analysis nodes."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    arr: IntersectionArray
    profile: SpectralProfile
    geometry: CliqueGeometryReport
    config: ClassifierConfig
    graph: Graph | None = None

    checklist: list[InequalityReport] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    outcome: ClassificationOutcome | None = None
    t: int | None = Field(default=None, description="Thin layer found by case C")


def _fraction(state: CaseState, tag: CaseTag, value: float | None, note: str) -> dict:
    outcome = ClassificationOutcome(
        pipeline=PIPELINE,
        label=OutcomeLabel.MOTION_FRACTION,
        fraction=value,
        case_tag=tag,
        checklist=state.checklist,
        notes=[*state.notes, note],
    )
    return {"outcome": outcome}


def _inconclusive(state: CaseState, note: str, tag: CaseTag | None = None) -> dict:
    outcome = ClassificationOutcome(
        pipeline=PIPELINE,
        label=OutcomeLabel.INCONCLUSIVE,
        case_tag=tag,
        checklist=state.checklist,
        notes=[*state.notes, note],
    )
    return {"outcome": outcome}


def diameter_node(state: CaseState) -> dict:
    d = state.arr.d
    check = InequalityReport.compare("d>=2", d, ">=", 2)
    update: dict = {"checklist": [*state.checklist, check]}
    if not check.holds:
        update |= _inconclusive(state.model_copy(update=update), "case analysis needs d >= 2")
    return update


def case_a_node(state: CaseState) -> dict:
    geometry, m_d = state.geometry, state.config.m_d
    geometric = geometry.is_geometric and geometry.m is not None
    check = InequalityReport.flag(
        "geometric with m<=m_d",
        geometric and geometry.m <= m_d,
        m=geometry.m,
        m_d=m_d,
        source=geometry.source,
    )
    update: dict = {"checklist": [*state.checklist, check]}
    if not check.holds:
        reason = "not geometric" if not geometric else f"smallest eigenvalue -{geometry.m} < -m_d"
        update |= _fraction(
            state.model_copy(update=update),
            CaseTag.A,
            None,
            f"{reason}: motion >= gamma_d' n with gamma_d' unknown",
        )
    return update


def case_b_node(state: CaseState) -> dict:
    arr, eps = state.arr, state.config.epsilon
    j = first_distinguishing_layer(arr, eps, state.config.compare_tol)
    if j is None:
        return {}
    check = InequalityReport.compare(
        "b_j,c_{j+1}>=eps k",
        min(arr.b_at(j), arr.c_at(j + 1)),
        ">=",
        eps * arr.k,
        {"j": j, "b_j": arr.b_at(j), "c_j+1": arr.c_at(j + 1)},
        tol=state.config.compare_tol,
    )
    update: dict = {"checklist": [*state.checklist, check]}
    update |= _fraction(
        state.model_copy(update=update),
        CaseTag.B,
        eps / arr.d,
        f"distinguishing bound at j = {j}: motion >= (eps/d) n for primitive graphs",
    )
    return update


def case_c_node(state: CaseState) -> dict:
    arr, config = state.arr, state.config
    t = first_thin_layer(arr, config.epsilon, config.compare_tol)
    if t is None:
        return _inconclusive(state, "neither case B nor case C applies")
    check = InequalityReport.compare(
        "c_t,b_t<=eps k",
        max(arr.c_at(t), arr.b_at(t)),
        "<=",
        config.epsilon * arr.k,
        {"t": t, "c_t": arr.c_at(t), "b_t": arr.b_at(t)},
        tol=config.compare_tol,
    )
    return {"checklist": [*state.checklist, check], "t": t}


def c1_node(state: CaseState) -> dict:
    arr, config = state.arr, state.config
    threshold = config.c1_threshold()
    if arr.k >= threshold:
        return {}
    n_d = config.n_d(arr.d)
    return _fraction(
        state,
        CaseTag.C1,
        2 / n_d,
        f"k = {arr.k} < {threshold:.6g}, so n <= N_d = {n_d:.6g} and every mover moves 2 points",
    )


def c2_node(state: CaseState) -> dict:
    arr, profile, geometry, config = state.arr, state.profile, state.geometry, state.config
    b1, eps = arr.b_at(1), config.epsilon
    gap = InequalityReport.compare(
        "theta1>=(1-eps)b1",
        profile.theta1,
        ">=",
        (1 - eps) * b1,
        {"b1": b1},
        tol=config.compare_tol,
    )
    checklist = [*state.checklist, gap]
    if not gap.holds:
        k, lam, mu = arr.k, arr.lambda_, arr.mu
        lambda_mu = InequalityReport.compare("2lambda<=mu+k", 2 * lam, "<=", mu + k, {"k": k})
        quarter = InequalityReport.compare("b1>=k/4", b1, ">=", k / 4, {"lambda": lam, "mu": mu})
        settled = state.model_copy(update={"checklist": [*checklist, lambda_mu, quarter]})
        if not (lambda_mu.holds and quarter.holds):
            return _inconclusive(settled, "b_1 >= k/4 fails, no mixing-lemma bound", CaseTag.C2_I)
        return _fraction(
            settled,
            CaseTag.C2_I,
            eps / 4,
            "mixing lemma: xi + q <= k - eps b_1 <= (1 - eps/4) k",
        )

    if arr.mu >= 3:
        tag = CaseTag.C2_II
        outcome = johnson_hypotheses(arr, profile, geometry, config)
        gate, *bipartite = mu_eigen_gate(geometry, profile, arr, state.graph)
        checklist.extend([gate, *bipartite])
        flags = list(outcome.flags)
        if gate.applicable and not gate.holds:
            flags.append(
                mismatch_flag(
                    geometry,
                    f"{arr.describe()}: psi_1 = 1 and mu >= 3 force theta_1 + 1 <= 5 b_1 / 7",
                )
            )
        flags.extend(
            mismatch_flag(geometry, f"{arr.describe()}: {r.name} fails on an induced witness")
            for r in bipartite
            if r.applicable and not r.holds
        )
        outcome = outcome.model_copy(update={"flags": flags})
    else:
        tag = CaseTag.C2_III
        outcome = hamming_pipeline(arr, profile, geometry, config)
    return {
        "outcome": outcome.model_copy(
            update={
                "pipeline": f"{PIPELINE}/{outcome.pipeline}",
                "case_tag": tag,
                "checklist": [*checklist, *outcome.checklist],
                "notes": [*state.notes, *outcome.notes],
            }
        )
    }


def c3_node(state: CaseState) -> dict:
    arr, geometry, config = state.arr, state.geometry, state.config
    m = geometry.m or 0
    if m >= 3:
        return _fraction(
            state,
            CaseTag.C3_I,
            config.eta_d / 4,
            f"mu = 1 with m = {m} >= 3: motion >= (eta_d/4) n",
        )
    if m == 2:
        kind, notes = classify_mu1_dual(arr)
        return _fraction(
            state.model_copy(update={"notes": [*state.notes, f"dual kind: {kind}", *notes]}),
            CaseTag.C3_II,
            1 / 16,
            "mu = 1 with m = 2: the graph is the line graph of its dual; motion >= n/16",
        )
    return _inconclusive(state, f"mu = 1 with m = {m} is not reachable for d >= 2")


def settled(state: CaseState) -> str:
    return "end" if state.outcome is not None else "next"


def route_mu(state: CaseState) -> str:
    if state.outcome is not None:
        return "end"
    return "c2" if state.arr.mu >= 2 else "c3"


def create_case_workflow() -> StateGraph:
    """Build the case-analysis graph; call ``.compile()`` before invoking."""
    workflow = StateGraph(CaseState)

    workflow.add_node("diameter", diameter_node)
    workflow.add_node("case_a", case_a_node)
    workflow.add_node("case_b", case_b_node)
    workflow.add_node("case_c", case_c_node)
    workflow.add_node("c1", c1_node)
    workflow.add_node("c2", c2_node)
    workflow.add_node("c3", c3_node)

    workflow.add_edge(START, "diameter")
    for node, following in (
        ("diameter", "case_a"),
        ("case_a", "case_b"),
        ("case_b", "case_c"),
        ("case_c", "c1"),
    ):
        workflow.add_conditional_edges(node, settled, {"next": following, "end": END})
    workflow.add_conditional_edges("c1", route_mu, {"c2": "c2", "c3": "c3", "end": END})
    workflow.add_edge("c2", END)
    workflow.add_edge("c3", END)
    return workflow


def _cross_check(outcome: ClassificationOutcome, g: Graph) -> ClassificationOutcome:
    """Compare a motion fraction with the exact motion of a small explicit graph."""
    if outcome.fraction is None or g.n > MAX_CROSS_CHECK_VERTICES:
        return outcome
    report = exact_motion(g)
    if report.exact_motion is None:
        return outcome
    exact = report.exact_motion / g.n
    note = f"exact motion {report.exact_motion} = {exact:.6g} n"
    flags = list(outcome.flags)
    if not at_most(outcome.fraction, exact, 1e-9):
        flags.append(
            Flag(
                severity=Severity.INFO,
                message=f"fraction {outcome.fraction:.6g} exceeds exact {exact:.6g}; "
                "the case relies on primitivity or on the configured eta_d, eps_d",
            )
        )
    return outcome.model_copy(update={"flags": flags, "notes": [*outcome.notes, note]})


def run_case_analysis(
    arr: IntersectionArray,
    profile: SpectralProfile,
    geometry: CliqueGeometryReport,
    g: Graph | None,
    config: ClassifierConfig,
) -> ClassificationOutcome:
    """Run the case analysis and attach gamma_d."""
    logger.debug("=" * 60)
    logger.debug(f"[CaseAnalysis] {arr.describe()} eps={config.epsilon:.6g} m_d={config.m_d}")

    app = create_case_workflow().compile()
    initial = CaseState(arr=arr, profile=profile, geometry=geometry, config=config, graph=g)
    result = app.invoke(initial)
    final = CaseState(**result)
    outcome = final.outcome
    if outcome is None:
        outcome = ClassificationOutcome(
            pipeline=PIPELINE,
            label=OutcomeLabel.INCONCLUSIVE,
            checklist=final.checklist,
            notes=["no case node settled the outcome"],
        )

    if arr.d >= 1:
        outcome = outcome.model_copy(
            update={
                "gamma_d": gamma_d(config, arr.d),
                "flags": [*outcome.flags, Flag(severity=Severity.INFO, message=GAMMA_PRIME_NOTE)],
            }
        )
    if g is not None:
        outcome = _cross_check(outcome, g)

    logger.info(f"[CaseAnalysis] {arr.describe()}: {outcome.display_label()}")
    logger.debug("=" * 60)
    return outcome
