import pytest

from src.classifier.base import make_config
from src.classifier.lemmas import GAMMA_PRIME_NOTE
from src.core.graph import Graph
from src.core.io import format_graph
from src.drg.params import hamming_array, johnson_array
from src.errors import NotGeometricError, ParameterError
from src.geometry.clique_geometry import detect_clique_geometry
from src.schemas.models import (
    CaseTag,
    GeneratorSpec,
    GraphFamily,
    IntersectionArray,
    OutcomeLabel,
    Severity,
)
from src.spectral.eigen import eigen_solve
from src.utils.file_ops import FileOps
from src.workflow.analysis import (
    analyze_graph,
    classify_array,
    classify_graph,
    dual_document,
    geometry_document,
    load_graph,
    motion_document,
    parse_array,
)
from src.workflow.case_analysis import CaseState, c2_node, c3_node
from src.workflow.scan import enumerate_arrays, scan

# Loading


def test_load_graph_needs_exactly_one_source(tmp_path):
    with pytest.raises(ParameterError):
        load_graph()
    with pytest.raises(ParameterError):
        load_graph(tmp_path / "x.g", GeneratorSpec(family=GraphFamily.COMPLETE, s=3))


def test_load_graph_labels_by_file_stem(tmp_path):
    path = tmp_path / "triangle.g"
    path.write_text(format_graph(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])))
    assert load_graph(path).label == "triangle"


def test_load_graph_takes_the_label_from_the_sidecar(tmp_path):
    ops = FileOps(tmp_path)
    ops.write_file("square.g", "4 4\n0 1\n1 2\n2 3\n0 3\n")
    ops.write_file("square.g.json", GeneratorSpec(family=GraphFamily.CYCLE, s=4).model_dump_json())
    assert load_graph(tmp_path / "square.g").label == "C4"


def test_load_graph_from_family():
    g = load_graph(spec=GeneratorSpec(family=GraphFamily.JOHNSON, s=5, d=2))
    assert (g.n, g.label) == (10, "J(5,2)")


def test_parse_array():
    arr = parse_array('{"d": 2, "b": [4, 2], "c": [1, 2]}')
    assert arr.key() == hamming_array(2, 3).key()


# Documents


def test_analyze_graph(j52):
    doc = analyze_graph(j52)
    assert doc.array.b == [6, 2]
    assert all(r.holds for r in doc.feasibility)
    assert doc.theta1_is_b1_minus_one
    assert doc.spectrum.multiplicities == [1, 4, 5]


def test_geometry_document_of_johnson(j52):
    doc = geometry_document(j52)
    assert doc.geometry.is_geometric
    assert doc.local_line_graph is not None and doc.local_line_graph.holds
    assert doc.metsch is not None
    assert not doc.metsch.holds


def test_geometry_document_of_hamming(h23):
    doc = geometry_document(h23)
    assert doc.local_line_graph is None
    assert doc.metsch.conditions_hold == [True, True, False, False]
    assert all(r.holds for r in doc.identities)


def test_dual_document_of_hamming(h23):
    doc = dual_document(h23)
    assert doc.root_graph is not None and doc.root_graph.line_graph_matches
    assert doc.spectrum_check.holds
    checks = {c.name: c for c in doc.dual.checks}
    assert not checks["dual mu = 1"].applicable
    assert doc.mu_one == []


def test_dual_document_of_line_petersen(line_petersen):
    doc = dual_document(line_petersen)
    assert doc.mu_one[0] == "dual kind: moore"
    assert doc.dual.vertices == 10


def test_dual_document_needs_a_geometry(petersen):
    with pytest.raises(NotGeometricError):
        dual_document(petersen)


def test_motion_document_adds_the_dual_transfer(h23):
    report = motion_document(h23)
    assert report.exact_motion == 6
    bounds = {b.name: b for b in report.bounds}
    assert list(bounds) == ["mixing", "distinguishing[j=1]", "dual-transfer"]
    assert bounds["dual-transfer"].value == pytest.approx(1.5)


# Case analysis


def test_large_hamming_array_reaches_the_hamming_pipeline():
    doc = classify_array(hamming_array(3, 2000), epsilon=6e-4)
    outcome = doc.outcome
    assert outcome.label == OutcomeLabel.HAMMING
    assert outcome.case_tag == CaseTag.C2_III
    assert outcome.pipeline == "case-analysis/hamming"
    assert (outcome.d, outcome.s) == (3, 2000)
    assert outcome.gamma_d is not None
    assert any(f.severity == Severity.INFO and f.message == GAMMA_PRIME_NOTE for f in outcome.flags)
    assert not outcome.has_contradiction
    assert doc.dichotomy is not None
    assert doc.dichotomy.branch == "exceptional"


def test_small_valency_settles_in_case_c1():
    outcome = classify_array(hamming_array(2, 3), epsilon=0.6).outcome
    assert outcome.label == OutcomeLabel.MOTION_FRACTION
    assert outcome.case_tag == CaseTag.C1
    assert outcome.fraction == pytest.approx(2 / (2400**2 + 1))


def test_johnson_array_reaches_the_johnson_pipeline():
    outcome = classify_array(johnson_array(17, 2), epsilon=0.2, eta_d=0.5, m_d=2).outcome
    assert outcome.label == OutcomeLabel.JOHNSON
    assert outcome.case_tag == CaseTag.C2_II
    assert outcome.pipeline == "case-analysis/johnson"
    assert outcome.display_label() == "Johnson(17,2)"
    names = [r.name for r in outcome.checklist]
    assert "theta1+1<=5b1/7" in names
    assert "ConnectedLocal" in names


def test_diameter_one_is_inconclusive():
    doc = classify_array(IntersectionArray(d=1, b=[4], c=[1]))
    assert doc.outcome.label == OutcomeLabel.INCONCLUSIVE
    assert "case analysis needs d >= 2" in doc.outcome.notes
    assert doc.dichotomy is None


def test_non_geometric_graph_lands_in_case_a(petersen):
    outcome = classify_graph(petersen).outcome
    assert outcome.case_tag == CaseTag.A
    assert outcome.fraction is None
    assert outcome.display_label() == "MotionFraction(unknown, A)"


def test_case_b_is_cross_checked_against_exact_motion(h23):
    doc = classify_graph(h23)
    outcome = doc.outcome
    assert outcome.case_tag == CaseTag.B
    assert outcome.fraction == pytest.approx(make_config(2).epsilon / 2)
    assert any(note.startswith("exact motion 6") for note in outcome.notes)
    assert doc.geometry.source == "graph"


@pytest.fixture
def line_petersen_state(line_petersen, drg_data):
    arr, profile = drg_data(line_petersen)
    geometry = detect_clique_geometry(line_petersen, arr, profile)
    return CaseState(
        arr=arr, profile=profile, geometry=geometry, config=make_config(3), graph=line_petersen
    )


def test_mu_one_with_m_two_is_a_line_graph(line_petersen_state):
    outcome = c3_node(line_petersen_state)["outcome"]
    assert outcome.case_tag == CaseTag.C3_II
    assert outcome.fraction == pytest.approx(1 / 16)
    assert "dual kind: moore" in outcome.notes


def test_mu_one_with_m_three(line_petersen_state):
    state = line_petersen_state.model_copy(
        update={"geometry": line_petersen_state.geometry.model_copy(update={"m": 3})}
    )
    outcome = c3_node(state)["outcome"]
    assert outcome.case_tag == CaseTag.C3_I
    assert outcome.fraction == pytest.approx(state.config.eta_d / 4)


# Scan


def test_enumerate_arrays():
    found = {arr.describe() for arr in enumerate_arrays(2, 6)}
    for expected in ["{4,2;1,2}", "{3,2;1,1}", "{6,2;1,4}", "{6,3;1,2}", "{4,1;1,4}", "{3,2;1,2}"]:
        assert expected in found


def test_enumerate_arrays_rejects_bad_ranges():
    with pytest.raises(ParameterError):
        list(enumerate_arrays(1, 5))
    with pytest.raises(ParameterError):
        list(enumerate_arrays(2, 0))


def test_scan_keeps_feasible_arrays(tmp_path):
    records = list(scan(2, 6, workers=2))
    found = {r.array.describe() for r in records}
    assert {"{4,2;1,2}", "{3,2;1,1}", "{6,2;1,4}"} <= found
    assert "{3,2;1,2}" not in found
    assert not any(r.outcome.has_contradiction for r in records)
    assert list(tmp_path.glob("logs/events_*.jsonl"))


def test_scan_order_is_stable():
    first = [r.array.key() for r in scan(2, 5, workers=1)]
    second = [r.array.key() for r in scan(2, 5, workers=3)]
    assert first == second


@pytest.fixture
def h23_state(h23, drg_data):
    arr, profile = drg_data(h23)
    geometry = detect_clique_geometry(h23, arr, profile)
    return CaseState(
        arr=arr, profile=profile, geometry=geometry, config=make_config(2, epsilon=0.1), graph=h23
    )


def test_spectral_gap_settles_case_c2i(h23_state):
    # theta_1 = 1 < (1 - 0.1) b_1 = 1.8
    outcome = c2_node(h23_state)["outcome"]
    assert outcome.case_tag == CaseTag.C2_I
    assert outcome.label == OutcomeLabel.MOTION_FRACTION
    assert outcome.fraction == pytest.approx(0.1 / 4)
    checks = {r.name: r for r in outcome.checklist}
    assert not checks["theta1>=(1-eps)b1"].holds
    assert checks["2lambda<=mu+k"].holds
    assert (checks["2lambda<=mu+k"].lhs, checks["2lambda<=mu+k"].rhs) == (2, 6)
    assert checks["b1>=k/4"].holds
    assert (checks["b1>=k/4"].lhs, checks["b1>=k/4"].rhs) == (2, 1)


def test_case_c2i_without_a_quarter_of_k_is_inconclusive(h23_state):
    # CP(4) = {6,1;1,6}: theta_1 = 0 and b_1 = 1 < k/4
    arr = IntersectionArray(d=2, b=[6, 1], c=[1, 6])
    state = h23_state.model_copy(update={"arr": arr, "profile": eigen_solve(arr), "graph": None})
    outcome = c2_node(state)["outcome"]
    assert outcome.case_tag == CaseTag.C2_I
    assert outcome.label == OutcomeLabel.INCONCLUSIVE
    assert not {r.name: r for r in outcome.checklist}["b1>=k/4"].holds
