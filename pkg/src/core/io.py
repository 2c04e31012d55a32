"""Plain-text edge-list codec.

Format: optional "# label" comment, a header line "n m", then m lines "u v"
with 0 <= u < v < n.
"""

from src.core.graph import Graph
from src.errors import GraphFormatError


def format_graph(g: Graph) -> str:
    lines = []
    if g.label:
        lines.append(f"# {g.label}")
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as e:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from e


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; errors carry the 1-based line number."""
    label: str | None = None
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if label is None and header is None:
                label = line[1:].strip() or None
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two fields, got {len(tokens)}", lineno)
        first, second = _ints(tokens, lineno)
        if header is None:
            if first < 0 or second < 0:
                raise GraphFormatError("header counts must be non-negative", lineno)
            header = (first, second)
            continue
        n = header[0]
        if not 0 <= first < second < n:
            raise GraphFormatError(f"edge {first} {second} violates 0 <= u < v < {n}", lineno)
        if (first, second) in seen:
            raise GraphFormatError(f"duplicate edge {first} {second}", lineno)
        if len(edges) == header[1]:
            raise GraphFormatError(f"more than the declared {header[1]} edges", lineno)
        seen.add((first, second))
        edges.append((first, second))

    if header is None:
        raise GraphFormatError("missing 'n m' header", max(last_line, 1))
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"header declares {header[1]} edges but {len(edges)} were read", max(last_line, 1)
        )
    return Graph.from_edges(header[0], edges, label=label)
