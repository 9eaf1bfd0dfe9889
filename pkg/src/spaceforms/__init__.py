"""Exact certificates and numeric search for shared Kähler submanifolds
of complex space forms."""

from .scalars import GaussianRational
from .germs import SignedGermSystem, TruncatedGerm, taylor_matrix_rank
from .hermitian import (
    BiSeries,
    HermitianSeries,
    exp_truncate,
    hermitian_mul,
    hermitian_pow,
    log_truncate,
    norm_square_system,
    polarize,
    restrict,
)
from .expansion import (
    DiagonalExpansion,
    RemarkWitness,
    embedding_dimension,
    expand_fubini_power,
    remark_witness,
)
from .reduction import Inertia, inertia, signature_reduce
from .forms import SpaceForm, flat_space, fubini_study, parse_form
from .decider import (
    Verdict,
    check_necessary,
    check_plane,
    check_sufficient,
    decide_relatives,
    evaluate_rules,
    ratio_reduce,
)
from .search import (
    Candidate,
    SearchProblem,
    SearchResult,
    WeightedCurve,
    residual,
    search_isometry,
    search_report,
    verify_witness_exact,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "TruncatedGerm",
    "SignedGermSystem",
    "taylor_matrix_rank",
    "HermitianSeries",
    "BiSeries",
    "norm_square_system",
    "polarize",
    "restrict",
    "hermitian_mul",
    "hermitian_pow",
    "log_truncate",
    "exp_truncate",
    "DiagonalExpansion",
    "RemarkWitness",
    "expand_fubini_power",
    "embedding_dimension",
    "remark_witness",
    "Inertia",
    "inertia",
    "signature_reduce",
    "SpaceForm",
    "flat_space",
    "fubini_study",
    "parse_form",
    "Verdict",
    "decide_relatives",
    "evaluate_rules",
    "ratio_reduce",
    "check_necessary",
    "check_sufficient",
    "check_plane",
    "Candidate",
    "WeightedCurve",
    "SearchProblem",
    "SearchResult",
    "residual",
    "verify_witness_exact",
    "search_isometry",
    "search_report",
    "__version__",
]
