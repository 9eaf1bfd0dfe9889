from .problem import Candidate, SearchProblem, WeightedCurve, residual, verify_witness_exact
from .lm import SearchResult, search_isometry, search_report

__all__ = [
    "Candidate",
    "SearchProblem",
    "WeightedCurve",
    "residual",
    "verify_witness_exact",
    "SearchResult",
    "search_isometry",
    "search_report",
]
