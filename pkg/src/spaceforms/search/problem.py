"""Feasibility problems for the shared-submanifold curve identity.

Two definite forms F(n, b) and F(m, a) with commensurable curvatures share
a common curve exactly when holomorphic curve maps H (m components) and
K (n components) through the origin satisfy

    (1 + a * sum_i |h_i(z)|^2)^s  =  (1 + b * sum_j |k_j(z)|^2)^r,

with coprime positive integers s, r fixed by s*a = r*b.  Polarization
turns this into equality of finitely many bicoefficients once the curves
are degree-truncated, so feasibility of the truncated identity is a
finite, exact question.  Curves carry optional positive rational weights
multiplying their squared magnitude, which lets monomial witnesses whose
components would need square-root coefficients stay rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import DimensionMismatchError, ModeError, ValidationError
from ..forms import SpaceForm
from ..germs import SignedGermSystem, TruncatedGerm
from ..hermitian import HermitianSeries, hermitian_pow, norm_square_system
from ..indices import pair_grlex_key
from ..scalars import (
    abs_sq,
    as_scalar,
    is_exact,
    rational_str,
    scalar_from_json_parts,
    scalar_json_parts,
)


@dataclass(frozen=True)
class WeightedCurve:
    """One curve component: coefficients of z^1..z^D and a positive weight
    multiplying its squared magnitude."""

    coeffs: tuple
    weight: Fraction | float = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_scalar(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValidationError("curves need at least degree 1")
        w = self.weight
        if isinstance(w, (int, Fraction)):
            w = Fraction(w)
            object.__setattr__(self, "weight", w)
        if not float(w) > 0:
            raise ValidationError("curve weights must be positive")

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_exact(self) -> bool:
        return isinstance(self.weight, Fraction) and all(is_exact(c) for c in self.coeffs)

    def to_json(self) -> dict:
        out = []
        for c in self.coeffs:
            re, im = scalar_json_parts(c)
            out.append({"re": re, "im": im})
        w = rational_str(self.weight) if isinstance(self.weight, Fraction) else float(self.weight)
        return {"weight": w, "coeffs": out}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightedCurve":
        coeffs = tuple(scalar_from_json_parts(e["re"], e["im"]) for e in obj["coeffs"])
        w = obj.get("weight", "1")
        weight = Fraction(w) if isinstance(w, str) else float(w)
        return cls(coeffs, weight)

    @classmethod
    def monomial(cls, degree: int, power: int, weight) -> "WeightedCurve":
        """sqrt(weight) * z^power, stored as the weighted curve z^power."""
        coeffs = [0] * degree
        coeffs[power - 1] = 1
        return cls(tuple(coeffs), Fraction(weight))

    @classmethod
    def zero(cls, degree: int) -> "WeightedCurve":
        return cls((0,) * degree)


@dataclass(frozen=True)
class Candidate:
    """Candidate curve pair: h maps into F(m, a), k maps into F(n, b)."""

    h: tuple[WeightedCurve, ...]
    k: tuple[WeightedCurve, ...]

    def __post_init__(self):
        degs = {c.degree for c in self.h} | {c.degree for c in self.k}
        if len(degs) != 1:
            raise DimensionMismatchError("all curves must share one truncation degree")

    @property
    def degree(self) -> int:
        return self.h[0].degree

    def is_exact(self) -> bool:
        return all(c.is_exact() for c in self.h) and all(c.is_exact() for c in self.k)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "h": [c.to_json() for c in self.h],
            "k": [c.to_json() for c in self.k],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Candidate":
        return cls(
            tuple(WeightedCurve.from_json(c) for c in obj["h"]),
            tuple(WeightedCurve.from_json(c) for c in obj["k"]),
        )


@dataclass(frozen=True)
class SearchProblem:
    """A pair of definite forms plus the truncation of candidate curves.

    host1 = F(n, b) receives the k curves, host2 = F(m, a) the h curves;
    s, r are the coprime integers with s*a = r*b.  cap bounds the bidegree
    at which the two sides are compared; the default 2*degree*max(s, r)
    covers every bicoefficient either side can produce.
    """

    host1: SpaceForm
    host2: SpaceForm
    degree: int
    cap: int = 0

    def __post_init__(self):
        for f in (self.host1, self.host2):
            if f.is_flat or not f.is_definite:
                raise ValidationError("search hosts must be definite non-flat forms")
        if self.host1.curvature_unit != self.host2.curvature_unit:
            raise ValidationError("search hosts need commensurable curvatures")
        if self.host1.curvature_sign != self.host2.curvature_sign:
            raise ValidationError("search hosts need curvatures of the same sign")
        if self.degree < 1:
            raise ValidationError("truncation degree must be positive")
        if self.cap == 0:
            object.__setattr__(self, "cap", 2 * self.degree * max(self.s, self.r))
        if self.cap < self.degree:
            raise ValidationError("cap cannot be below the curve degree")

    @property
    def n(self) -> int:
        return self.host1.dim

    @property
    def m(self) -> int:
        return self.host2.dim

    @property
    def b(self) -> Fraction:
        return self.host1.curvature

    @property
    def a(self) -> Fraction:
        return self.host2.curvature

    @property
    def _curvature_ratio(self) -> Fraction:
        # b/a > 0 whenever both hosts share a curvature sign
        return Fraction(self.b, self.a)

    @property
    def s(self) -> int:
        return self._curvature_ratio.numerator

    @property
    def r(self) -> int:
        return self._curvature_ratio.denominator

    def to_json(self) -> dict:
        return {
            "form1": self.host1.render(),
            "form2": self.host2.render(),
            "n": self.n,
            "m": self.m,
            "b": rational_str(self.b),
            "a": rational_str(self.a),
            "s": self.s,
            "r": self.r,
            "degree": self.degree,
            "cap": self.cap,
        }

    def random_candidate(self, rng) -> Candidate:
        """Unit-weight candidate with re/im parts uniform on [-1, 1]."""
        def curve():
            parts = rng.uniform(-1.0, 1.0, size=2 * self.degree)
            coeffs = tuple(complex(parts[2 * i], parts[2 * i + 1]) for i in range(self.degree))
            return WeightedCurve(coeffs, 1.0)

        return Candidate(
            tuple(curve() for _ in range(self.m)),
            tuple(curve() for _ in range(self.n)),
        )


def _check_dims(c: Candidate, p: SearchProblem):
    if len(c.h) != p.m or len(c.k) != p.n:
        raise DimensionMismatchError(
            f"candidate has {len(c.h)}/{len(c.k)} curves, problem needs {p.m}/{p.n}"
        )
    if c.degree > p.cap:
        raise DimensionMismatchError("curve degree exceeds the bicoefficient cap")


def _exact_side(curves, scale: Fraction, power: int, cap: int) -> HermitianSeries:
    """(1 + scale * sum w_i |curve_i|^2)^power as an exact 1-variable series."""
    germs, weights = [], []
    for c in curves:
        if c.coeffs and any(c.coeffs):
            coeffs = {(j + 1,): v for j, v in enumerate(c.coeffs) if v}
            germs.append(TruncatedGerm(1, cap, coeffs))
            weights.append(Fraction(c.weight))
    one = HermitianSeries.one(1, cap)
    if not germs:
        return one
    sq = norm_square_system(SignedGermSystem(tuple(germs), tuple(weights)))
    return hermitian_pow(one + sq.scale(scale), power)


def exact_sides(c: Candidate, p: SearchProblem):
    """The two exact truncated series (left: h side, right: k side)."""
    if not c.is_exact():
        raise ModeError("exact evaluation requires exact candidate coefficients")
    _check_dims(c, p)
    left = _exact_side(c.h, p.a, p.s, p.cap)
    right = _exact_side(c.k, p.b, p.r, p.cap)
    return left, right


def residual(c: Candidate, p: SearchProblem):
    """Sum of squared magnitudes of all bicoefficient differences.

    Exact candidates give an exact Fraction (zero iff the truncated
    identity holds); approximate candidates give a float computed by the
    selected kernel backend.
    """
    _check_dims(c, p)
    if c.is_exact():
        left, right = exact_sides(c, p)
        diff = left - right
        return sum((abs_sq(v) for v in diff.entries.values()), Fraction(0))
    from . import kernels

    hc, kc = candidate_arrays(c, p)
    f = kernels.identity_residual(hc, kc, float(p.a), float(p.b), p.s, p.r, p.cap)
    return float(np.dot(f, f))


def verify_witness_exact(c: Candidate, p: SearchProblem):
    """(ok, first_mismatch): exact check of the truncated identity.

    first_mismatch is None when ok, else (alpha, beta, lhs, rhs) for the
    graded-lex-first differing bicoefficient.
    """
    left, right = exact_sides(c, p)
    keys = set(left.entries) | set(right.entries)
    mismatches = sorted(
        (k for k in keys if left.entry(*k) != right.entry(*k)),
        key=lambda k: pair_grlex_key(*k),
    )
    if not mismatches:
        return True, None
    a, b = mismatches[0]
    return False, (a, b, left.entry(a, b), right.entry(a, b))


def candidate_arrays(c: Candidate, p: SearchProblem):
    """Pack a candidate into complex arrays, folding weights into coefficients.

    Weighted curves scale by sqrt(weight); valid for residual purposes
    because only squared magnitudes enter the identity.
    """
    _check_dims(c, p)

    def pack(curves):
        out = np.zeros((len(curves), p.degree), dtype=np.complex128)
        for i, cur in enumerate(curves):
            w = float(cur.weight) ** 0.5
            for j, v in enumerate(cur.coeffs):
                out[i, j] = w * complex(v)
        return out

    return pack(c.h), pack(c.k)


def candidate_from_arrays(hc: np.ndarray, kc: np.ndarray) -> Candidate:
    return Candidate(
        tuple(WeightedCurve(tuple(complex(v) for v in row), 1.0) for row in hc),
        tuple(WeightedCurve(tuple(complex(v) for v in row), 1.0) for row in kc),
    )
