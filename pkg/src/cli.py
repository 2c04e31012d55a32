"""CLI entry point for drg-motion: invariants, geometry and motion of distance-regular graphs."""

import csv
import io
import json
from collections.abc import Callable, Iterable
from enum import Enum
from pathlib import Path
from typing import Annotated

import typer
from pydantic import BaseModel, ValidationError
from rich.box import ROUNDED
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.style import Style
from rich.table import Table
from rich.text import Text

from src.classifier.appendix import appendix_inequality_verify
from src.core.graph import Graph
from src.core.io import format_graph
from src.drg.params import check_distance_regular
from src.errors import DRGError, NotGeometricError, ParameterError
from src.schemas.models import (
    AnalysisDocument,
    ClassificationOutcome,
    ClassifyDocument,
    DualDocument,
    GeneratorSpec,
    GeometryDocument,
    GraphFamily,
    InequalityReport,
    IntersectionArray,
    MotionReport,
    ScanRecord,
    Severity,
    SpectralProfile,
    SpectrumDocument,
)
from src.utils.file_ops import FileOps
from src.utils.logging import setup_logging
from src.workflow.analysis import (
    analyze_graph,
    classify_array,
    classify_graph,
    dual_document,
    geometry_document,
    load_graph,
    motion_document,
    parse_array,
    spectrum_document,
)
from src.workflow.scan import scan as scan_arrays

app = typer.Typer(
    name="drg",
    help="Invariants, clique geometry and motion bounds for distance-regular graphs",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2
EXIT_CONTRADICTION = 3

SCHEMA_DOCUMENTS: dict[str, type[BaseModel]] = {
    "generator": GeneratorSpec,
    "analyze": AnalysisDocument,
    "spectrum": SpectrumDocument,
    "geometry": GeometryDocument,
    "dual": DualDocument,
    "motion": MotionReport,
    "classify": ClassifyDocument,
    "scan": ScanRecord,
    "verify-appendix": InequalityReport,
}


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


# Shared options
Family = Annotated[
    GraphFamily | None, typer.Option("--family", help="Named graph family to generate")
]
SizeS = Annotated[int | None, typer.Option("--s", help="Family size parameter s")]
SizeD = Annotated[int | None, typer.Option("--d", help="Diameter / dimension parameter d")]
DoobT = Annotated[int | None, typer.Option("--doob-t", help="Doob: number of K4 factors")]
DoobL = Annotated[int | None, typer.Option("--doob-l", help="Doob: number of Shrikhande factors")]
InputPath = Annotated[
    Path | None, typer.Option("--input", help="Graph file in the 'n m' edge-list format")
]
ArrayJson = Annotated[
    str | None,
    typer.Option("--array", help='Intersection array as JSON: {"d":2,"b":[4,2],"c":[1,2]}'),
]
Epsilon = Annotated[float | None, typer.Option("--epsilon", help="Relaxation parameter epsilon")]
Eta = Annotated[float | None, typer.Option("--eta", help="Motion constant eta_d")]
MD = Annotated[int | None, typer.Option("--m-d", help="Smallest-eigenvalue cutoff m_d")]
Format = Annotated[OutputFormat, typer.Option("--format", help="Report format")]
Output = Annotated[Path | None, typer.Option("-o", "--output", help="Write to file, not stdout")]
Verbose = Annotated[bool, typer.Option("-v", "--verbose", help="Show debug logging")]


def _guard[T](action: Callable[[], T]) -> T:
    """Run ``action``, mapping package and validation errors onto exit codes."""
    try:
        return action()
    except NotGeometricError as e:
        err_console.print(f"[yellow]Not applicable: {escape(str(e))}[/yellow]")
        raise typer.Exit(EXIT_INCONCLUSIVE) from e
    except (DRGError, ValidationError) as e:
        err_console.print(f"[red]Error: {escape(str(e))}[/red]")
        raise typer.Exit(EXIT_ERROR) from e
    except OSError as e:
        err_console.print(f"[red]Error: {escape(str(e))}[/red]")
        raise typer.Exit(EXIT_ERROR) from e


def _generator_spec(
    family: GraphFamily | None,
    s: int | None,
    d: int | None,
    doob_t: int | None,
    doob_l: int | None,
) -> GeneratorSpec | None:
    if family is None:
        return None
    return GeneratorSpec(family=family, s=s, d=d, doob_t=doob_t, doob_l=doob_l)


def _graph(input_path, family, s, d, doob_t, doob_l) -> Graph:
    return load_graph(input_path, _generator_spec(family, s, d, doob_t, doob_l))


def _write(text: str, output: Path | None) -> None:
    if output is None:
        typer.echo(text, nl=False)
        return
    ops, name = FileOps.for_file(output)
    path = ops.write_file(name, text)
    err_console.print(f"[dim]→[/dim] [cyan]Wrote[/cyan] [white]{escape(str(path))}[/white]")


# Flat numeric summaries for CSV and text output


def _array_fields(arr: IntersectionArray) -> dict:
    return {
        "d": arr.d,
        "k": arr.k,
        "b": " ".join(map(str, arr.b)),
        "c": " ".join(map(str, arr.c)),
        "n": arr.n,
    }


def _spectrum_rows(arr: IntersectionArray, profile: SpectralProfile) -> list[dict]:
    return [
        {**_array_fields(arr), "j": j, "theta": theta, "multiplicity": f}
        for j, (theta, f) in enumerate(
            zip(profile.eigenvalues, profile.multiplicities, strict=True)
        )
    ]


def _outcome_fields(outcome: ClassificationOutcome) -> dict:
    return {
        "label": outcome.display_label(),
        "case": outcome.case_tag.value if outcome.case_tag else None,
        "fraction": outcome.fraction,
        "gamma_d": outcome.gamma_d,
    }


def _check_rows(reports: Iterable[InequalityReport]) -> list[dict]:
    return [
        {"name": r.name, "holds": r.holds, "lhs": r.lhs, "rhs": r.rhs, "slack": r.slack}
        for r in reports
    ]


def _summary_rows(doc: BaseModel) -> list[dict]:
    match doc:
        case AnalysisDocument() | SpectrumDocument():
            return _spectrum_rows(doc.array, doc.spectrum)
        case GeometryDocument():
            g = doc.geometry
            return [
                {
                    "geometric": g.is_geometric,
                    "m": g.m,
                    "delsarte_size": g.delsarte_size,
                    "cliques": len(g.cliques),
                    "psi": " ".join(map(str, g.psi)),
                    "tau": " ".join(map(str, g.tau)),
                }
            ]
        case DualDocument():
            r = doc.dual
            return [
                {
                    "vertices": r.vertices,
                    "k_tilde": r.k_tilde,
                    "lambda_tilde": r.lambda_tilde,
                    "diameter": r.diameter,
                    "spectrum_contained": doc.spectrum_check.holds,
                }
            ]
        case MotionReport():
            head = {"n": doc.n, "exact_motion": doc.exact_motion, "group_order": doc.group_order}
            if not doc.bounds:
                return [{**head, "bound": None, "value": None}]
            return [{**head, "bound": b.name, "value": b.value} for b in doc.bounds]
        case ClassifyDocument() | ScanRecord():
            return [{**_array_fields(doc.array), **_outcome_fields(doc.outcome)}]
        case InequalityReport():
            return _check_rows([doc])
    return []


def _to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _to_table(rows: list[dict], title: str) -> Table:
    table = Table(title=f"[bold]{title}[/bold]", box=ROUNDED, header_style="bold cyan")
    for column in rows[0] if rows else []:
        table.add_column(column, style="cyan" if column in ("label", "name", "bound") else None)
    for row in rows:
        table.add_row(*(_cell(v) for v in row.values()))
    return table


def _render(rows: list[dict], title: str, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.CSV:
        return _to_csv(rows)
    recorder = Console(record=True, file=io.StringIO(), width=120)
    recorder.print(_to_table(rows, title))
    return recorder.export_text()


def _emit(doc: BaseModel, fmt: OutputFormat, output: Path | None, title: str) -> None:
    if fmt == OutputFormat.JSON:
        _write(doc.model_dump_json(indent=2) + "\n", output)
    elif fmt == OutputFormat.TEXT and output is None:
        console.print(_to_table(_summary_rows(doc), title))
    else:
        _write(_render(_summary_rows(doc), title, fmt), output)


def _classify_exit(doc: ClassifyDocument) -> int:
    flags = [*doc.outcome.flags, *(doc.dichotomy.flags if doc.dichotomy else [])]
    if any(f.severity == Severity.CONTRADICTION for f in flags):
        return EXIT_CONTRADICTION
    if not doc.outcome.is_conclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _print_outcome(doc: ClassifyDocument) -> None:
    outcome = doc.outcome
    colour = "green" if outcome.is_conclusive else "yellow"
    if outcome.has_contradiction:
        colour = "red"
    body = Text.assemble(
        (outcome.display_label(), f"{colour} bold"),
        ("\nArray: ", "dim"),
        (doc.array.describe(), "cyan"),
        ("\nPipeline: ", "dim"),
        (outcome.pipeline, "cyan"),
    )
    for flag in outcome.flags:
        if flag.severity != Severity.INFO:
            body.append(f"\n{flag.severity.value}: {flag.message}", style="red")
    err_console.print(
        Panel.fit(body, title="Classification", box=ROUNDED, style=Style(color=colour))
    )


@app.command()
def generate(
    family: Family = None,
    s: SizeS = None,
    d: SizeD = None,
    doob_t: DoobT = None,
    doob_l: DoobL = None,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Generate a named graph as an edge list.

    Example:
        drg generate --family johnson --s 5 --d 2 -o j52.g
    """
    setup_logging(verbose=verbose)

    def run() -> None:
        spec = _generator_spec(family, s, d, doob_t, doob_l)
        g = load_graph(None, spec)
        if output is None:
            typer.echo(format_graph(g), nl=False)
            return
        ops, name = FileOps.for_file(output)
        path = ops.write_graph(name, g, sidecar=spec)
        err_console.print(
            Panel.fit(
                Text.assemble(
                    (g.label or "graph", "cyan bold"),
                    (f"\n{g.n} vertices, {g.num_edges} edges", "white"),
                    ("\nOutput: ", "dim"),
                    (str(path), "cyan"),
                ),
                title="Generated",
                box=ROUNDED,
                style=Style(color="green"),
            )
        )

    _guard(run)


@app.command()
def analyze(
    input_path: InputPath = None,
    family: Family = None,
    s: SizeS = None,
    d: SizeD = None,
    doob_t: DoobT = None,
    doob_l: DoobL = None,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Intersection array, intersection numbers, inequalities and spectrum of a graph."""
    setup_logging(verbose=verbose)
    doc = _guard(lambda: analyze_graph(_graph(input_path, family, s, d, doob_t, doob_l)))
    _guard(lambda: _emit(doc, fmt, output, f"Analysis {doc.label or ''}".strip()))


@app.command()
def spectrum(
    array: ArrayJson = None,
    input_path: InputPath = None,
    family: Family = None,
    s: SizeS = None,
    d: SizeD = None,
    doob_t: DoobT = None,
    doob_l: DoobL = None,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Eigenvalues, multiplicities and feasibility of an array (or of a graph's array)."""
    setup_logging(verbose=verbose)

    def run() -> SpectrumDocument:
        if array is not None:
            if input_path is not None or family is not None:
                raise ParameterError("give either --array or a graph source, not both")
            return spectrum_document(parse_array(array))
        g = _graph(input_path, family, s, d, doob_t, doob_l)
        return spectrum_document(check_distance_regular(g))

    doc = _guard(run)
    _guard(lambda: _emit(doc, fmt, output, f"Spectrum {doc.array.describe()}"))


@app.command()
def geometry(
    input_path: InputPath = None,
    family: Family = None,
    s: SizeS = None,
    d: SizeD = None,
    doob_t: DoobT = None,
    doob_l: DoobL = None,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Delsarte clique geometry, local graphs and Metsch's conditions."""
    setup_logging(verbose=verbose)
    doc = _guard(lambda: geometry_document(_graph(input_path, family, s, d, doob_t, doob_l)))
    _guard(lambda: _emit(doc, fmt, output, f"Geometry {doc.label or ''}".strip()))


@app.command()
def dual(
    input_path: InputPath = None,
    family: Family = None,
    s: SizeS = None,
    d: SizeD = None,
    doob_t: DoobT = None,
    doob_l: DoobL = None,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Dual graph of a geometric graph; exits 2 when the graph is not geometric."""
    setup_logging(verbose=verbose)
    doc = _guard(lambda: dual_document(_graph(input_path, family, s, d, doob_t, doob_l)))
    _guard(lambda: _emit(doc, fmt, output, f"Dual {doc.label or ''}".strip()))


@app.command()
def motion(
    input_path: InputPath = None,
    family: Family = None,
    s: SizeS = None,
    d: SizeD = None,
    doob_t: DoobT = None,
    doob_l: DoobL = None,
    max_group: Annotated[
        int | None, typer.Option("--max-group", help="Automorphism enumeration cap")
    ] = None,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Exact motion by enumeration, with every applicable lower bound."""
    setup_logging(verbose=verbose)
    doc = _guard(
        lambda: motion_document(_graph(input_path, family, s, d, doob_t, doob_l), max_group)
    )
    _guard(lambda: _emit(doc, fmt, output, "Motion"))


@app.command()
def classify(
    array: ArrayJson = None,
    input_path: InputPath = None,
    family: Family = None,
    s: SizeS = None,
    d: SizeD = None,
    doob_t: DoobT = None,
    doob_l: DoobL = None,
    epsilon: Epsilon = None,
    eta: Eta = None,
    m_d: MD = None,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Final case analysis for an array or a graph.

    Exits 2 when the outcome is inconclusive and 3 on a contradiction.

    Example:
        drg classify --array '{"d":2,"b":[4,2],"c":[1,2]}'
    """
    setup_logging(verbose=verbose)

    def run() -> ClassifyDocument:
        if array is not None:
            if input_path is not None or family is not None:
                raise ParameterError("give either --array or a graph source, not both")
            return classify_array(parse_array(array), epsilon=epsilon, eta_d=eta, m_d=m_d)
        g = _graph(input_path, family, s, d, doob_t, doob_l)
        return classify_graph(g, epsilon=epsilon, eta_d=eta, m_d=m_d)

    doc = _guard(run)
    _guard(lambda: _emit(doc, fmt, output, "Classification"))
    if fmt != OutputFormat.JSON or verbose:
        _print_outcome(doc)
    code = _classify_exit(doc)
    if code != EXIT_OK:
        raise typer.Exit(code)


@app.command()
def scan(
    d: Annotated[int, typer.Option("--d", help="Diameter of the scanned arrays")] = 2,
    k_max: Annotated[int, typer.Option("--k-max", help="Largest valency scanned")] = 12,
    epsilon: Epsilon = None,
    eta: Eta = None,
    m_d: MD = None,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Classify every feasible array with diameter d and valency up to k_max.

    JSON output is one record per line, in lexicographic array order.
    """
    setup_logging(verbose=verbose)
    stream = _guard(lambda: scan_arrays(d, k_max, epsilon=epsilon, eta_d=eta, m_d=m_d))
    records: list[ScanRecord] = []

    def run() -> None:
        for record in stream:
            records.append(record)
            if fmt == OutputFormat.JSON and output is None:
                typer.echo(record.model_dump_json())

    _guard(run)
    if fmt == OutputFormat.JSON:
        if output is not None:
            _guard(lambda: _write("".join(r.model_dump_json() + "\n" for r in records), output))
    else:
        rows = [row for r in records for row in _summary_rows(r)]
        if fmt == OutputFormat.TEXT and output is None:
            if rows:
                console.print(_to_table(rows, f"Scan d={d}, k<={k_max}"))
        else:
            _guard(lambda: _write(_render(rows, f"Scan d={d}, k<={k_max}", fmt), output))

    if any(r.outcome.has_contradiction for r in records):
        raise typer.Exit(EXIT_CONTRADICTION)


@app.command("verify-appendix")
def verify_appendix(
    m_max: Annotated[int, typer.Option("--m-max", help="Largest m checked")] = 50,
    fmt: Format = OutputFormat.JSON,
    output: Output = None,
    verbose: Verbose = False,
) -> None:
    """Exhaustive check of the multiplicity-bound inequality for every m <= m_max."""
    setup_logging(verbose=verbose)
    report = _guard(lambda: appendix_inequality_verify(m_max))
    _guard(lambda: _emit(report, fmt, output, f"Appendix inequality, m <= {m_max}"))
    if not report.holds:
        raise typer.Exit(EXIT_CONTRADICTION)


@app.command()
def schema(output: Output = None) -> None:
    """JSON Schema of every document the CLI emits."""
    schemas = {name: model.model_json_schema() for name, model in SCHEMA_DOCUMENTS.items()}
    _guard(lambda: _write(json.dumps(schemas, indent=2, sort_keys=True) + "\n", output))


def main():
    """Entry point."""
    app()


if __name__ == "__main__":
    main()
