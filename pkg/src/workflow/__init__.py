"""Case analysis state graph, CLI compositions and the array scanner."""

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
from src.workflow.case_analysis import create_case_workflow, run_case_analysis
from src.workflow.scan import enumerate_arrays, scan

__all__ = [
    "analyze_graph",
    "classify_array",
    "classify_graph",
    "create_case_workflow",
    "dual_document",
    "enumerate_arrays",
    "geometry_document",
    "load_graph",
    "motion_document",
    "parse_array",
    "run_case_analysis",
    "scan",
    "spectrum_document",
]
