"""Unified Pydantic models for distance-regular graph analysis."""

from enum import Enum
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

# Constants
HOFFMAN_LIMIT = -1.0 - 2.0**0.5
VARTHETA_BRACKET = (-2.1, -2.0)
FEIT_HIGMAN_POLYGONS = (4, 6, 8, 12)

Relation = Literal["<=", ">=", "<", ">", "=="]
Scalar = int | float | str | bool | None


class GraphFamily(str, Enum):
    """Graph families the generator understands."""

    JOHNSON = "johnson"
    HAMMING = "hamming"
    DOOB = "doob"
    SHRIKHANDE = "shrikhande"
    COCKTAIL_PARTY = "cocktail-party"
    COMPLETE_BIPARTITE_LINE = "complete-bipartite-line"
    COMPLETE = "complete"
    CYCLE = "cycle"


class GeneratorSpec(BaseModel):
    """Parameters for one of the named graph families."""

    family: GraphFamily = Field(..., description="Graph family")
    s: int | None = Field(default=None, description="Family size parameter")
    d: int | None = Field(default=None, description="Diameter / dimension parameter")
    doob_t: int | None = Field(default=None, description="Doob: number of K4 factors")
    doob_l: int | None = Field(default=None, description="Doob: number of Shrikhande factors")


class IntersectionArray(BaseModel):
    """Intersection array {b_0..b_{d-1}; c_1..c_d} with derived parameters.

    Shape, monotonicity and a_i >= 0 are validated on construction. Layer-size
    integrality is not: an array with fractional k_i can still be built so that
    feasibility checks can report on it.
    """

    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=1, description="Diameter")
    b: list[int] = Field(..., description="b_0 .. b_{d-1}")
    c: list[int] = Field(..., description="c_1 .. c_d")
    realized: bool = Field(
        default=False, description="True when the array was read off an explicit graph"
    )

    @model_validator(mode="after")
    def _check_shape(self) -> "IntersectionArray":
        if len(self.b) != self.d or len(self.c) != self.d:
            raise ValueError(
                f"expected {self.d} entries in b and c, got {len(self.b)}/{len(self.c)}"
            )
        if self.c[0] != 1:
            raise ValueError(f"c_1 must be 1, got {self.c[0]}")
        if any(x < 1 for x in self.b):
            raise ValueError("b_i must be positive for i < d")
        for i in range(self.d - 1):
            if self.b[i + 1] > self.b[i]:
                raise ValueError(f"b is not non-increasing at i={i + 1}")
            if self.c[i + 1] < self.c[i]:
                raise ValueError(f"c is not non-decreasing at i={i + 2}")
        k = self.b[0]
        for i in range(self.d + 1):
            if k - self.b_at(i) - self.c_at(i) < 0:
                raise ValueError(f"a_{i} = k - b_{i} - c_{i} is negative")
        return self

    def b_at(self, i: int) -> int:
        """b_i with the convention b_d = 0."""
        return self.b[i] if i < self.d else 0

    def c_at(self, i: int) -> int:
        """c_i with the convention c_0 = 0."""
        return self.c[i - 1] if i >= 1 else 0

    @computed_field
    @property
    def k(self) -> int:
        return self.b[0]

    @computed_field
    @property
    def a(self) -> list[int]:
        return [self.k - self.b_at(i) - self.c_at(i) for i in range(self.d + 1)]

    @computed_field(alias="lambda")
    @property
    def lambda_(self) -> int:
        return self.a[1]

    @computed_field
    @property
    def mu(self) -> int:
        return self.c[1] if self.d >= 2 else 0

    def layer_fractions(self) -> list[Fraction]:
        """k_0..k_d from k_{i+1} = k_i b_i / c_{i+1}, exact."""
        sizes = [Fraction(1)]
        for i in range(self.d):
            sizes.append(sizes[-1] * self.b[i] / self.c[i])
        return sizes

    @computed_field
    @property
    def k_i(self) -> list[int] | None:
        sizes = self.layer_fractions()
        if any(s.denominator != 1 for s in sizes):
            return None
        return [int(s) for s in sizes]

    @computed_field
    @property
    def n(self) -> int | None:
        sizes = self.k_i
        return sum(sizes) if sizes is not None else None

    def n_fraction(self) -> Fraction:
        return sum(self.layer_fractions(), Fraction(0))

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(self.b), tuple(self.c)

    def describe(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


class InequalityReport(BaseModel):
    """One checked inequality or identity with its instantiated numbers."""

    name: str = Field(..., description="Identifier of the checked statement")
    holds: bool = Field(..., description="Whether the statement holds")
    relation: Relation | None = Field(default=None, description="lhs <relation> rhs")
    lhs: float | None = Field(default=None)
    rhs: float | None = Field(default=None)
    slack: float | None = Field(
        default=None, description="Margin; >= 0 (or > 0 for strict relations) iff it holds"
    )
    applicable: bool = Field(default=True, description="False when the hypotheses do not apply")
    witness: dict[str, Scalar] = Field(default_factory=dict)
    note: str | None = Field(default=None)

    @classmethod
    def compare(
        cls,
        name: str,
        lhs: float,
        relation: Relation,
        rhs: float,
        witness: dict[str, Scalar] | None = None,
        tol: float = 0.0,
        note: str | None = None,
    ) -> "InequalityReport":
        """Evaluate ``lhs relation rhs``; ``tol`` is relative to max(1, |lhs|, |rhs|)."""
        lhs_f, rhs_f = float(lhs), float(rhs)
        slack = lhs_f - rhs_f if relation in (">=", ">") else rhs_f - lhs_f
        allowance = tol * max(1.0, abs(lhs_f), abs(rhs_f))
        if relation in ("<=", ">="):
            holds = slack >= -allowance
            if holds and slack < 0:
                slack = 0.0
        elif relation == "==":
            slack = -abs(lhs_f - rhs_f)
            holds = slack >= -allowance
            if holds:
                slack = 0.0
        else:
            holds = slack > 0
        return cls(
            name=name,
            holds=holds,
            relation=relation,
            lhs=lhs_f,
            rhs=rhs_f,
            slack=slack,
            witness=witness or {},
            note=note,
        )

    @classmethod
    def skipped(cls, name: str, note: str, witness: dict[str, Scalar] | None = None):
        return cls(name=name, holds=True, applicable=False, note=note, witness=witness or {})

    @classmethod
    def flag(cls, name: str, holds: bool, note: str | None = None, **witness: Scalar):
        return cls(name=name, holds=holds, witness=dict(witness), note=note)


class SpectralProfile(BaseModel):
    """Eigen-data of the intersection matrix."""

    eigenvalues: list[float] = Field(..., description="theta_0 > ... > theta_d")
    multiplicities: list[int] = Field(..., description="Biggs multiplicities, rounded")
    multiplicity_values: list[float] = Field(..., description="Biggs multiplicities, raw")
    multiplicity_residuals: list[float] = Field(..., description="|raw - rounded| per eigenvalue")
    standard_sequences: list[list[float]] = Field(..., description="u_0..u_d for each theta_j")
    b_plus: float | None = Field(default=None, description="b_1 / (theta_1 + 1)")
    b_minus: float | None = Field(default=None, description="b_1 / (theta_d + 1)")
    xi: float = Field(..., description="Zero-weight spectral radius max(|theta_1|, |theta_d|)")
    integral_flags: list[bool] = Field(..., description="Eigenvalue snapped to an integer")

    @property
    def theta1(self) -> float:
        return self.eigenvalues[1]

    @property
    def theta_min(self) -> float:
        return self.eigenvalues[-1]


class EigRange(BaseModel):
    """The constant vartheta_1 and the derived epsilon*."""

    vartheta_1: float = Field(..., description="Smallest root in [-2.1, -2.0]")
    epsilon_star: float = Field(..., description="(-2 - vartheta_1) / (-1 - vartheta_1)")
    residual: float = Field(..., description="|p(vartheta_1) + 1 - 1| at the returned root")
    limit: float = Field(default=HOFFMAN_LIMIT, description="-1 - sqrt(2)")


class NeighborhoodKind(str, Enum):
    CONNECTED = "ConnectedLocal"
    DISJOINT_CLIQUES = "DisjointCliquesLocal"
    OTHER = "Other"


class NeighborhoodReport(BaseModel):
    """Shape of the local graphs X(v) over all vertices."""

    kind: NeighborhoodKind = Field(..., description="Kind of X(v) (of vertex 0 if mixed)")
    uniform: bool = Field(..., description="Every vertex has the same kind")
    clique_count: int | None = Field(default=None, description="Cliques per X(v) when disjoint")
    clique_size: int | None = Field(default=None)
    kinds_seen: list[NeighborhoodKind] = Field(default_factory=list)
    first_mismatch: int | None = Field(default=None, description="First vertex differing from 0")


class LocalLineGraphReport(BaseModel):
    """Whether every X(v) is the rows x cols rook's graph L(K_{rows,cols})."""

    rows: int
    cols: int
    holds: bool
    failing_vertices: list[int] = Field(default_factory=list)


class CliqueGeometryReport(BaseModel):
    """Delsarte clique geometry and its parameters."""

    is_geometric: bool = Field(..., description="Edges partitioned by Delsarte cliques")
    source: Literal["graph", "array"] = Field(
        default="graph", description="'array' means inferred from parameters only"
    )
    m: int | None = Field(default=None, description="-theta_d when integral")
    delsarte_size: float = Field(..., description="1 - k / theta_d")
    cliques: list[list[int]] = Field(default_factory=list)
    psi: list[int] = Field(default_factory=list, description="psi_0 .. psi_{d-1}")
    tau: list[int] = Field(default_factory=list, description="tau_1 .. tau_d")
    neighborhood_kind: NeighborhoodKind | None = Field(default=None)
    violations: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def psi1(self) -> int | None:
        return self.psi[1] if len(self.psi) > 1 else None

    @property
    def tau2(self) -> int | None:
        return self.tau[1] if len(self.tau) > 1 else None


class MetschReport(BaseModel):
    m: int
    lambda1: int
    lambda2: int
    mu_bound: int
    conditions_hold: list[bool] = Field(..., min_length=4, max_length=4)
    line_threshold: int
    details: list[InequalityReport] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(self.conditions_hold)


class DualReport(BaseModel):
    """Parameters of the dual graph on the clique geometry."""

    vertices: int
    k_tilde: int
    lambda_tilde: int
    diameter: int | None
    cliques: list[list[int]] = Field(..., description="clique_of_vertex, indexed by dual vertex")
    checks: list[InequalityReport] = Field(default_factory=list)


class RootGraphReport(BaseModel):
    vertices: int
    edges: int
    edge_to_vertex: list[int] = Field(..., description="Image of the i-th root edge in X")
    line_graph_matches: bool


class MotionBound(BaseModel):
    name: str
    value: float
    provenance: str
    applicable: bool = True
    note: str | None = None
    unchecked_hypotheses: list[str] = Field(default_factory=list)


class MotionReport(BaseModel):
    n: int
    exact_motion: int | None = Field(default=None, description="Minimum support, if enumerated")
    group_order: int | None = Field(default=None)
    rigid: bool = Field(default=False, description="No non-identity automorphism")
    truncated: bool = Field(default=False)
    upper_bound: int | None = Field(default=None, description="Min support among found elements")
    bounds: list[MotionBound] = Field(default_factory=list)
    thickness_bound: float | None = Field(default=None)


class ClassifierConfig(BaseModel):
    """Constants used by the theorem pipelines and the case analysis."""

    epsilon: float = Field(..., gt=0, description="Relaxation parameter")
    epsilon_star: float = Field(..., gt=0, description="(-2 - vartheta_1) / (-1 - vartheta_1)")
    eta_d: float = Field(default=0.01, gt=0, le=0.5)
    eps_d: float = Field(default=0.01, gt=0)
    m_d: int = Field(default=6, ge=1)
    compare_tol: float = Field(default=1e-9, ge=0)

    def c1_threshold(self) -> float:
        """max(29, 2 m_d^3, 4 m_d / eta_d)."""
        return max(29.0, 2.0 * self.m_d**3, 4.0 * self.m_d / self.eta_d)

    def n_d(self, d: int) -> float:
        """Vertex bound max(29, 2 m_d^3, 4 m_d / eta_d)^d + 1 for case C.1."""
        try:
            return self.c1_threshold() ** d + 1
        except OverflowError:
            return float("inf")


class OutcomeLabel(str, Enum):
    JOHNSON = "Johnson"
    HAMMING = "Hamming"
    DOOB_POSSIBLE = "DoobPossible"
    MOTION_FRACTION = "MotionFraction"
    INCONCLUSIVE = "Inconclusive"


class CaseTag(str, Enum):
    A = "A"
    B = "B"
    C1 = "C.1"
    C2_I = "C.2.i"
    C2_II = "C.2.ii"
    C2_III = "C.2.iii"
    C3_I = "C.3.i"
    C3_II = "C.3.ii"


class Severity(str, Enum):
    INFO = "info"
    UNREALIZABLE = "unrealizable"
    CONTRADICTION = "contradiction"


class Flag(BaseModel):
    severity: Severity
    message: str


class ClassificationOutcome(BaseModel):
    """Result of a theorem pipeline or of the case analysis."""

    pipeline: str = Field(..., description="Which procedure produced this outcome")
    label: OutcomeLabel
    s: int | None = Field(default=None, description="Family parameter s (Johnson / Hamming)")
    d: int | None = Field(default=None, description="Family parameter d (Johnson / Hamming)")
    fraction: float | None = Field(default=None, description="Motion fraction of n")
    case_tag: CaseTag | None = Field(default=None)
    gamma_d: float | None = Field(default=None, description="min over the known case fractions")
    checklist: list[InequalityReport] = Field(default_factory=list)
    flags: list[Flag] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def has_contradiction(self) -> bool:
        return any(f.severity == Severity.CONTRADICTION for f in self.flags)

    @property
    def is_conclusive(self) -> bool:
        return self.label != OutcomeLabel.INCONCLUSIVE

    def display_label(self) -> str:
        if self.label in (OutcomeLabel.JOHNSON, OutcomeLabel.HAMMING, OutcomeLabel.DOOB_POSSIBLE):
            if self.label == OutcomeLabel.JOHNSON:
                return f"Johnson({self.s},{self.d})"
            return f"{self.label.value}({self.d},{self.s})"
        if self.label == OutcomeLabel.MOTION_FRACTION:
            value = "unknown" if self.fraction is None else f"{self.fraction:.6g}"
            tag = self.case_tag.value if self.case_tag else "-"
            return f"MotionFraction({value}, {tag})"
        return self.label.value


class DichotomyReport(BaseModel):
    """Which side of the f_1 <= k - 1 dichotomy an array lands on."""

    hypotheses_hold: bool
    checklist: list[InequalityReport] = Field(default_factory=list)
    t: int | None = None
    f1: float
    k: int
    branch: Literal["f1<=k-1", "exceptional", "neither"]
    flags: list[Flag] = Field(default_factory=list)


# CLI documents


class AnalysisDocument(BaseModel):
    label: str | None = None
    array: IntersectionArray
    intersection_numbers: list[list[list[int]]] | None = None
    inequalities: list[InequalityReport] = Field(default_factory=list)
    spectrum: SpectralProfile
    feasibility: list[InequalityReport] = Field(default_factory=list)
    local_bounds: list[InequalityReport] = Field(default_factory=list)
    theta1_is_b1_minus_one: bool = False


class GeometryDocument(BaseModel):
    label: str | None = None
    geometry: CliqueGeometryReport
    identities: list[InequalityReport] = Field(default_factory=list)
    neighborhood: NeighborhoodReport | None = None
    local_line_graph: LocalLineGraphReport | None = None
    metsch: MetschReport | None = None


class DualDocument(BaseModel):
    label: str | None = None
    dual: DualReport
    spectrum_check: InequalityReport
    root_graph: RootGraphReport | None = None
    mu_one: list[str] = Field(default_factory=list)


class SpectrumDocument(BaseModel):
    array: IntersectionArray
    spectrum: SpectralProfile
    feasibility: list[InequalityReport] = Field(default_factory=list)


class ClassifyDocument(BaseModel):
    array: IntersectionArray
    geometry: CliqueGeometryReport
    outcome: ClassificationOutcome
    dichotomy: DichotomyReport | None = None


class ScanRecord(BaseModel):
    array: IntersectionArray
    outcome: ClassificationOutcome
