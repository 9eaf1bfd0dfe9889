"""Degree-truncated germs of holomorphic functions at the origin.

A :class:`TruncatedGerm` is a polynomial stand-in for a germ: a sparse map
from multi-indices of degree <= max_degree to coefficient scalars.  Germs
that enter norm-square identities are normalized to vanish at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, DomainError, ModeError
from .indices import Index, add, degree, grlex_key, indices_up_to, zero_index
from .scalars import (
    GaussianRational,
    Scalar,
    as_scalar,
    is_exact,
    scalar_from_json_parts,
    scalar_json_parts,
)


class TruncatedGerm:
    """Truncated power series of a holomorphic germ at the origin."""

    __slots__ = ("num_vars", "max_degree", "coeffs")

    def __init__(self, num_vars: int, max_degree: int, coeffs=None):
        if num_vars < 1 or max_degree < 1:
            raise DomainError("num_vars and max_degree must be positive")
        clean: dict[Index, Scalar] = {}
        for alpha, c in (coeffs or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != num_vars or any(a < 0 for a in alpha):
                raise DimensionMismatchError(f"bad index {alpha} for {num_vars} variables")
            if degree(alpha) > max_degree:
                raise DomainError(f"index {alpha} exceeds truncation degree {max_degree}")
            c = as_scalar(c)
            if c:
                clean[alpha] = c
        self.num_vars = num_vars
        self.max_degree = max_degree
        self.coeffs = clean

    @classmethod
    def monomial(cls, num_vars: int, max_degree: int, alpha, c=1) -> "TruncatedGerm":
        return cls(num_vars, max_degree, {tuple(alpha): c})

    @classmethod
    def zero(cls, num_vars: int, max_degree: int) -> "TruncatedGerm":
        return cls(num_vars, max_degree, {})

    def coeff(self, alpha) -> Scalar:
        return self.coeffs.get(tuple(alpha), GaussianRational(0))

    @property
    def base_point_value(self) -> Scalar:
        return self.coeff(zero_index(self.num_vars))

    def vanishes_at_origin(self) -> bool:
        return not self.base_point_value

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_compatible(self, other: "TruncatedGerm"):
        if self.num_vars != other.num_vars:
            raise DimensionMismatchError(
                f"germs in {self.num_vars} and {other.num_vars} variables"
            )

    def __add__(self, other: "TruncatedGerm") -> "TruncatedGerm":
        self._check_compatible(other)
        d = min(self.max_degree, other.max_degree)
        out = {a: c for a, c in self.coeffs.items() if degree(a) <= d}
        for a, c in other.coeffs.items():
            if degree(a) <= d:
                out[a] = out.get(a, GaussianRational(0)) + c
        return TruncatedGerm(self.num_vars, d, out)

    def __sub__(self, other: "TruncatedGerm") -> "TruncatedGerm":
        return self + other.scale(-1)

    def scale(self, c) -> "TruncatedGerm":
        c = as_scalar(c)
        return TruncatedGerm(
            self.num_vars, self.max_degree, {a: c * v for a, v in self.coeffs.items()}
        )

    def __mul__(self, other: "TruncatedGerm") -> "TruncatedGerm":
        self._check_compatible(other)
        d = min(self.max_degree, other.max_degree)
        out: dict[Index, Scalar] = {}
        for a1, c1 in self.coeffs.items():
            for a2, c2 in other.coeffs.items():
                a = add(a1, a2)
                if degree(a) <= d:
                    out[a] = out.get(a, GaussianRational(0)) + c1 * c2
        return TruncatedGerm(self.num_vars, d, out)

    def to_approximate(self) -> "TruncatedGerm":
        return TruncatedGerm(
            self.num_vars, self.max_degree,
            {a: complex(c) for a, c in self.coeffs.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedGerm):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and self.max_degree == other.max_degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.num_vars, self.max_degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = ", ".join(
            f"{a}:{c!r}" for a, c in sorted(self.coeffs.items(), key=lambda t: grlex_key(t[0]))
        )
        return f"TruncatedGerm({self.num_vars}, {self.max_degree}, {{{terms}}})"

    def to_json(self) -> dict:
        entries = []
        for a in sorted(self.coeffs, key=grlex_key):
            re, im = scalar_json_parts(self.coeffs[a])
            entries.append({"alpha": list(a), "re": re, "im": im})
        return {"num_vars": self.num_vars, "max_degree": self.max_degree, "coeffs": entries}

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedGerm":
        coeffs = {
            tuple(e["alpha"]): scalar_from_json_parts(e["re"], e["im"])
            for e in obj.get("coeffs", [])
        }
        return cls(int(obj["num_vars"]), int(obj["max_degree"]), coeffs)


@dataclass(frozen=True)
class SignedGermSystem:
    """Finitely many germs with nonzero real rational weights.

    Represents the finite-rank element sum_i weight_i * |germ_i|^2.
    """

    germs: tuple[TruncatedGerm, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.germs) != len(self.weights):
            raise DimensionMismatchError("germ and weight counts differ")
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if any(w == 0 for w in self.weights):
            raise DomainError("weights must be nonzero")
        for g in self.germs[1:]:
            if (g.num_vars, g.max_degree) != (
                self.germs[0].num_vars,
                self.germs[0].max_degree,
            ):
                raise DimensionMismatchError("germs disagree on variables or degree")

    def __len__(self):
        return len(self.germs)

    def to_json(self) -> dict:
        return {
            "weights": [str(w) for w in self.weights],
            "germs": [g.to_json() for g in self.germs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SignedGermSystem":
        return cls(
            tuple(TruncatedGerm.from_json(g) for g in obj.get("germs", [])),
            tuple(Fraction(w) for w in obj.get("weights", [])),
        )


def taylor_matrix(germs, degree_cap: int):
    """Matrix of Taylor coefficients: one row per multi-index of degree
    1..degree_cap (graded-lex), one column per germ."""
    if degree_cap < 1:
        raise DomainError("degree must be at least 1")
    if not germs:
        return []
    n = germs[0].num_vars
    for g in germs:
        if g.num_vars != n:
            raise DimensionMismatchError("germs disagree on variable count")
        if not g.vanishes_at_origin():
            raise DomainError("germs must vanish at the base point")
    rows = []
    for alpha in indices_up_to(n, degree_cap, min_deg=1):
        rows.append([_exact_coeff(g, alpha) for g in germs])
    return rows


def _exact_coeff(germ: TruncatedGerm, alpha) -> GaussianRational:
    c = germ.coeff(alpha)
    if not is_exact(c):
        raise ModeError("rank computation requires exact coefficients")
    return c if isinstance(c, GaussianRational) else GaussianRational(c)


def exact_rank(rows) -> int:
    """Rank of a matrix of GaussianRationals by exact Gaussian elimination."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = GaussianRational(1) / rows[row][col]
        for i in range(row + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[row])]
        row += 1
        rank += 1
        if row == len(rows):
            break
    return rank


def taylor_matrix_rank(germs, degree_cap: int):
    """Exact rank of the Taylor-coefficient matrix.

    Returns (rank, independent): independent is True iff the germs are
    linearly independent over the complex scalars at this truncation, i.e.
    the rank equals the number of germs.
    """
    rows = taylor_matrix(germs, degree_cap)
    r = exact_rank(rows)
    return r, r == len(germs)
