"""Atomic writes for graph files, reports and their JSON sidecars."""

import shutil
from pathlib import Path

from pydantic import BaseModel

from src.core.graph import Graph
from src.core.io import format_graph, parse_graph
from src.errors import ParameterError

SIDECAR_SUFFIX = ".json"


class FileOps:
    """Reads and writes under one base directory; every write goes through a temp file."""

    def __init__(self, base_path: Path):
        self.base_path = Path(base_path).resolve()
        self.base_path.mkdir(parents=True, exist_ok=True)

    @classmethod
    def for_file(cls, path: Path) -> tuple["FileOps", str]:
        """FileOps rooted at the parent of ``path``, plus the file name."""
        path = Path(path)
        return cls(path.parent), path.name

    def _resolve(self, rel_path: str) -> Path:
        """Resolve path with traversal protection."""
        path = (self.base_path / rel_path).resolve()
        if not path.is_relative_to(self.base_path):
            raise ParameterError(f"path escapes {self.base_path}: {rel_path}")
        return path

    def write_file(self, rel_path: str, content: str) -> Path:
        file_path = self._resolve(rel_path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        tmp = file_path.with_suffix(file_path.suffix + ".tmp")
        tmp.write_text(content, encoding="utf-8", newline="\n")
        try:
            tmp.replace(file_path)
        except OSError:
            # Windows: target may be open
            shutil.move(str(tmp), str(file_path))
        return file_path

    def read_file(self, rel_path: str) -> str:
        return self._resolve(rel_path).read_text(encoding="utf-8")

    def sidecar_path(self, rel_path: str) -> str:
        return rel_path + SIDECAR_SUFFIX

    def write_graph(self, rel_path: str, g: Graph, sidecar: BaseModel | None = None) -> Path:
        """Write ``g`` as an edge list; ``sidecar`` goes next to it as ``<name>.json``.

        The sidecar is written first so a graph file never appears without it.
        """
        if sidecar is not None:
            self.write_file(self.sidecar_path(rel_path), sidecar.model_dump_json(indent=2) + "\n")
        return self.write_file(rel_path, format_graph(g))

    def read_graph(self, rel_path: str) -> Graph:
        g = parse_graph(self.read_file(rel_path))
        return g if g.label else g.with_label(Path(rel_path).stem)

    def has_sidecar(self, rel_path: str) -> bool:
        return self._resolve(self.sidecar_path(rel_path)).is_file()

    def read_sidecar[M: BaseModel](self, rel_path: str, model: type[M]) -> M:
        return model.model_validate_json(self.read_file(self.sidecar_path(rel_path)))
