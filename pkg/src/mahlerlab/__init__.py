"""mahlerlab: Mahler measures, zero geometry, and bound verification for
integer and complex polynomials with controlled precision."""

from .bounds import PaperConstants, solve_constants, verify_all
from .measure import MeasureResult, mahler, mahler_from_roots, mahler_graeffe
from .polycore import NormBundle, Polynomial, StructureFlags, norms, structural_flags
from .reporting import BoundEntry, BoundReport, Verdict
from .rootfind import Root, RootSet, count_in_disk, count_real, roots
from .search import SearchRecord, search_min_mahler
from .structure import THETA0, EthetaVerdict, classify_E_theta, cyclotomic

__version__ = "1.0.0"

__all__ = [
    "Polynomial",
    "NormBundle",
    "StructureFlags",
    "norms",
    "structural_flags",
    "Root",
    "RootSet",
    "roots",
    "count_in_disk",
    "count_real",
    "MeasureResult",
    "mahler",
    "mahler_from_roots",
    "mahler_graeffe",
    "THETA0",
    "EthetaVerdict",
    "classify_E_theta",
    "cyclotomic",
    "PaperConstants",
    "solve_constants",
    "verify_all",
    "BoundEntry",
    "BoundReport",
    "Verdict",
    "SearchRecord",
    "search_min_mahler",
    "__version__",
]
