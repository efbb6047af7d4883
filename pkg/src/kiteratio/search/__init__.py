from .extremal import (
    Candidates,
    IngestStats,
    ScanStats,
    SearchError,
    SearchResult,
    find_extremal,
    graph_from_mask,
    ingest_graph6,
    scan_labeled,
)
from .kiteopt import KiteOptimum, kite_optimize
from .perturb import PerturbationError, PerturbationReport, perturb_analysis
from .structure import StructureReport, is_kite, structure_check

__all__ = [
    "Candidates",
    "IngestStats",
    "KiteOptimum",
    "PerturbationError",
    "PerturbationReport",
    "ScanStats",
    "SearchError",
    "SearchResult",
    "StructureReport",
    "find_extremal",
    "graph_from_mask",
    "ingest_graph6",
    "is_kite",
    "kite_optimize",
    "perturb_analysis",
    "scan_labeled",
    "structure_check",
]
