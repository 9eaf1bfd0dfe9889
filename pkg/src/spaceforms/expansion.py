"""Exact expansion of (1 + b|Z|^2)^r into weighted squared monomials.

For positive curvature b and a positive integer power r,

    (1 + b(|z_1|^2 + ... + |z_n|^2))^r = 1 + sum_alpha c_alpha |Z^alpha|^2,

with one term per multi-index 1 <= |alpha| <= r and

    c_alpha = b^|alpha| * r! / ((r - |alpha|)! * alpha!).

The number of terms, binomial(r+n, r) - 1, is the dimension the degree-r
monomial curve map needs; :func:`remark_witness` builds the weighted
monomial curve that matches a diagonal line when one curvature is an
integer multiple of the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .hermitian import HermitianSeries
from .indices import Index, grlex_key, indices_up_to, zero_index
from .scalars import parse_rational, rational_str


@dataclass(frozen=True)
class DiagonalExpansion:
    """Diagonal Hermitian expansion of a Fubini–Study potential power."""

    num_vars: int
    curvature: Fraction
    power: int
    terms: tuple[tuple[Index, Fraction], ...]  # graded-lex ordered

    def coefficients(self) -> list[Fraction]:
        """Coefficients in graded-lex monomial order."""
        return [c for _, c in self.terms]

    def monomials(self) -> list[Index]:
        return [a for a, _ in self.terms]

    def to_series(self, max_degree: int | None = None) -> HermitianSeries:
        """As a HermitianSeries 1 + sum c_alpha |Z^alpha|^2, truncated."""
        d = max_degree if max_degree is not None else self.power
        z = zero_index(self.num_vars)
        entries = {(z, z): Fraction(1)}
        for alpha, c in self.terms:
            if sum(alpha) <= d:
                entries[(alpha, alpha)] = c
        return HermitianSeries(self.num_vars, d, entries)

    def to_json(self) -> dict:
        return {
            "n": self.num_vars,
            "b": rational_str(self.curvature),
            "r": self.power,
            "terms": [
                {"alpha": list(a), "c": rational_str(c)} for a, c in self.terms
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DiagonalExpansion":
        return cls(
            int(obj["n"]),
            parse_rational(obj["b"]),
            int(obj["r"]),
            tuple((tuple(t["alpha"]), parse_rational(t["c"])) for t in obj["terms"]),
        )


def expand_fubini_power(n: int, b, r: int) -> DiagonalExpansion:
    """Exact diagonal expansion of (1 + b|Z|^2)^r in n variables."""
    b = Fraction(b)
    if n < 1 or r < 1:
        raise DomainError("n and r must be positive integers")
    if b <= 0:
        raise DomainError("curvature b must be positive (the expansion is finite only there)")
    terms = []
    for alpha in indices_up_to(n, r, min_deg=1):
        d = sum(alpha)
        alpha_fact = math.prod(math.factorial(a) for a in alpha)
        c = b ** d * Fraction(math.factorial(r), math.factorial(r - d) * alpha_fact)
        terms.append((alpha, c))
    return DiagonalExpansion(n, b, r, tuple(terms))


def embedding_dimension(n: int, r: int) -> int:
    """Number of monomial components of the degree-r expansion in n variables."""
    if n < 1 or r < 1:
        raise DomainError("n and r must be positive integers")
    return math.comb(r + n, r) - 1


@dataclass(frozen=True)
class RemarkWitness:
    """Weighted monomial curve matching a diagonal line.

    The host curve z -> (sqrt(w_1) z, ..., sqrt(w_q) z^q) in the form of
    curvature q*a satisfies, exactly as polynomials in t = |z|^2,

        1 + q*a * sum_j w_j t^j = (1 + a*m*t)^q,

    where m is the number of components of the diagonal z -> (z, ..., z)
    on the curvature-a side.  Weights are kept as squared magnitudes so the
    identity stays rational.
    """

    host_weights: tuple[Fraction, ...]
    diagonal_multiplicity: int


def remark_witness(q: int, a, m: int) -> RemarkWitness:
    """Weights w_j = (a*m)^j * binomial(q, j) / (q*a) for j = 1..q."""
    a = Fraction(a)
    if q < 1 or m < 1 or a <= 0:
        raise DomainError("q, m must be positive integers and a a positive rational")
    weights = tuple(
        (a * m) ** j * Fraction(math.comb(q, j)) / (q * a) for j in range(1, q + 1)
    )
    return RemarkWitness(weights, m)


def witness_identity_holds(w: RemarkWitness, q: int, a) -> bool:
    """Check 1 + q*a*sum_j w_j t^j == (1 + a*m*t)^q exactly (coefficients in t)."""
    a = Fraction(a)
    lhs = [Fraction(1)] + [q * a * wj for wj in w.host_weights]
    rhs = [
        (a * w.diagonal_multiplicity) ** j * math.comb(q, j) for j in range(q + 1)
    ]
    return lhs == rhs
