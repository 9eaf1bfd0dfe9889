"""Hermitian (real-analytic) series and their truncated calculus.

A :class:`HermitianSeries` stores a germ of a real-analytic function

    f(Z, conj(Z)) = sum over (alpha, beta) of c[alpha, beta] Z^alpha conj(Z)^beta

as a sparse map keyed on index pairs, subject to Hermitian symmetry
c[beta, alpha] = conj(c[alpha, beta]).  Truncation caps the degree of
alpha and beta separately (matching the product of two truncated
holomorphic germs), not their sum.

The finite-rank elements sum_i r_i |chi_i|^2 produced by
:func:`norm_square_system` are the central objects: potentials of
constant-curvature metrics, their logs, exps and powers all live here.
:func:`polarize` reinterprets a series over independent variables (z, w),
where coefficient equality is equivalent to functional equality.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatchError, DomainError, NormalizationError
from .germs import SignedGermSystem
from .indices import Index, add, degree, grlex_key, zero_index
from .scalars import (
    GaussianRational,
    Scalar,
    as_scalar,
    conj,
    is_exact,
    scalar_from_json_parts,
    scalar_json_parts,
)

IndexPair = tuple[Index, Index]


def _clean_entries(num_vars, max_degree, entries) -> dict[IndexPair, Scalar]:
    clean: dict[IndexPair, Scalar] = {}
    for (alpha, beta), c in entries.items():
        alpha, beta = tuple(alpha), tuple(beta)
        if len(alpha) != num_vars or len(beta) != num_vars:
            raise DimensionMismatchError(
                f"index pair {(alpha, beta)} does not have {num_vars} variables"
            )
        if degree(alpha) > max_degree or degree(beta) > max_degree:
            raise DomainError(
                f"index pair {(alpha, beta)} exceeds truncation degree {max_degree}"
            )
        c = as_scalar(c)
        if c:
            clean[(alpha, beta)] = c
    return clean


def _hermitize(entries: dict[IndexPair, Scalar]) -> dict[IndexPair, Scalar]:
    """Restore exact conjugate symmetry after float accumulation."""
    out = {}
    for (a, b), c in entries.items():
        mirror = entries.get((b, a), complex(0))
        out[(a, b)] = 0.5 * (complex(c) + complex(mirror).conjugate())
    return {k: v for k, v in out.items() if v != 0}


class HermitianSeries:
    """Truncated Hermitian coefficient array of a real-analytic germ."""

    __slots__ = ("num_vars", "max_degree", "entries")

    def __init__(self, num_vars: int, max_degree: int, entries=None, validate=True):
        if num_vars < 1 or max_degree < 1:
            raise DomainError("num_vars and max_degree must be positive")
        self.num_vars = num_vars
        self.max_degree = max_degree
        self.entries = _clean_entries(num_vars, max_degree, entries or {})
        if validate:
            self.check_hermitian()

    def check_hermitian(self):
        """Raise unless entry(beta, alpha) == conj(entry(alpha, beta))."""
        for (a, b), c in self.entries.items():
            mirror = self.entries.get((b, a))
            if is_exact(c):
                if mirror is None or mirror != conj(c):
                    raise NormalizationError(f"entry {(a, b)} has no conjugate mirror")
            else:
                if mirror is None or complex(mirror) != complex(c).conjugate():
                    raise NormalizationError(f"entry {(a, b)} has no conjugate mirror")

    # -- construction ----------------------------------------------------

    @classmethod
    def constant(cls, value, num_vars: int, max_degree: int) -> "HermitianSeries":
        z = zero_index(num_vars)
        return cls(num_vars, max_degree, {(z, z): value})

    @classmethod
    def one(cls, num_vars: int, max_degree: int) -> "HermitianSeries":
        return cls.constant(1, num_vars, max_degree)

    # -- accessors -------------------------------------------------------

    def entry(self, alpha, beta) -> Scalar:
        return self.entries.get((tuple(alpha), tuple(beta)), GaussianRational(0))

    @property
    def constant_term(self) -> Scalar:
        z = zero_index(self.num_vars)
        return self.entry(z, z)

    def is_zero(self) -> bool:
        return not self.entries

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.entries.values())

    def support(self) -> list[Index]:
        """Holomorphic-side monomial support, graded-lex ordered."""
        seen = {a for a, _ in self.entries} | {b for _, b in self.entries}
        return sorted(seen, key=grlex_key)

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda t: (grlex_key(t[0][0]), grlex_key(t[0][1])))

    # -- ring operations -------------------------------------------------

    def _check_vars(self, other):
        if self.num_vars != other.num_vars:
            raise DimensionMismatchError(
                f"series in {self.num_vars} and {other.num_vars} variables"
            )

    def __add__(self, other: "HermitianSeries") -> "HermitianSeries":
        self._check_vars(other)
        d = min(self.max_degree, other.max_degree)
        out = {
            k: v
            for k, v in self.entries.items()
            if degree(k[0]) <= d and degree(k[1]) <= d
        }
        for k, v in other.entries.items():
            if degree(k[0]) <= d and degree(k[1]) <= d:
                out[k] = out.get(k, GaussianRational(0)) + v
        return HermitianSeries(self.num_vars, d, out, validate=False)

    def __sub__(self, other: "HermitianSeries") -> "HermitianSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "HermitianSeries":
        """Multiply by a real scalar (keeps Hermitian symmetry)."""
        if isinstance(c, GaussianRational):
            if not c.is_real():
                raise DomainError("scaling a Hermitian series requires a real scalar")
            c = c.re
        if isinstance(c, complex):
            if c.imag != 0:
                raise DomainError("scaling a Hermitian series requires a real scalar")
            c = c.real
        out = {}
        for k, v in self.entries.items():
            out[k] = (float(c) * v) if isinstance(v, complex) else (
                v * c if isinstance(c, (int, Fraction)) else float(c) * complex(v)
            )
        return HermitianSeries(self.num_vars, self.max_degree, out, validate=False)

    def __mul__(self, other: "HermitianSeries") -> "HermitianSeries":
        return hermitian_mul(self, other)

    def __pow__(self, k: int) -> "HermitianSeries":
        return hermitian_pow(self, k)

    def truncate(self, max_degree: int) -> "HermitianSeries":
        """Re-truncate to a (possibly different) per-index degree cap."""
        out = {
            k: v
            for k, v in self.entries.items()
            if degree(k[0]) <= max_degree and degree(k[1]) <= max_degree
        }
        return HermitianSeries(self.num_vars, max_degree, out, validate=False)

    def to_approximate(self) -> "HermitianSeries":
        return HermitianSeries(
            self.num_vars,
            self.max_degree,
            {k: complex(v) for k, v in self.entries.items()},
            validate=False,
        )

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HermitianSeries):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and self.max_degree == other.max_degree
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.num_vars, self.max_degree, frozenset(self.entries)))

    def allclose(self, other: "HermitianSeries", tol: float = 1e-10) -> bool:
        keys = set(self.entries) | set(other.entries)
        for k in keys:
            a = complex(self.entries.get(k, 0))
            b = complex(other.entries.get(k, 0))
            if abs(a - b) > tol * max(1.0, abs(a), abs(b)):
                return False
        return True

    def __repr__(self):
        terms = ", ".join(f"{k}:{v!r}" for k, v in self.sorted_items())
        return f"HermitianSeries({self.num_vars}, {self.max_degree}, {{{terms}}})"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        entries = []
        for (a, b), v in self.sorted_items():
            re, im = scalar_json_parts(v)
            entries.append({"alpha": list(a), "beta": list(b), "re": re, "im": im})
        return {
            "num_vars": self.num_vars,
            "max_degree": self.max_degree,
            "entries": entries,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HermitianSeries":
        entries = {}
        for e in obj.get("entries", []):
            key = (tuple(e["alpha"]), tuple(e["beta"]))
            val = scalar_from_json_parts(e["re"], e["im"])
            if key in entries:
                raise ValueError(f"duplicate entry for {key}")
            entries[key] = val
        return cls(int(obj["num_vars"]), int(obj["max_degree"]), entries)


class BiSeries:
    """A Hermitian coefficient array read over independent variables (z, w).

    Same data as the originating HermitianSeries, but entry (alpha, beta)
    multiplies z^alpha * conj(w)^beta.  Restricting w := conj(z) returns the
    original series.
    """

    __slots__ = ("num_vars", "max_degree", "entries")

    def __init__(self, num_vars: int, max_degree: int, entries):
        self.num_vars = num_vars
        self.max_degree = max_degree
        self.entries = _clean_entries(num_vars, max_degree, entries)

    def restrict(self) -> HermitianSeries:
        """Set w := conj(z), recovering a Hermitian series."""
        return HermitianSeries(self.num_vars, self.max_degree, dict(self.entries))

    def entry(self, alpha, beta) -> Scalar:
        return self.entries.get((tuple(alpha), tuple(beta)), GaussianRational(0))

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and self.max_degree == other.max_degree
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.num_vars, self.max_degree, frozenset(self.entries)))


def polarize(h: HermitianSeries) -> BiSeries:
    """Reinterpret over independent (z, w); the identity on coefficients."""
    return BiSeries(h.num_vars, h.max_degree, dict(h.entries))


def restrict(b: BiSeries) -> HermitianSeries:
    return b.restrict()


def norm_square_system(
    system: SignedGermSystem, num_vars: int | None = None, max_degree: int | None = None
) -> HermitianSeries:
    """Hermitian series of sum_i weight_i |germ_i|^2.

    entry(alpha, beta) = sum_i w_i c_i(alpha) conj(c_i(beta)).  num_vars and
    max_degree are only required for the empty system, whose dimensions
    cannot be inferred.
    """
    if len(system) == 0:
        if num_vars is None or max_degree is None:
            raise DimensionMismatchError(
                "empty system: pass num_vars and max_degree explicitly"
            )
        return HermitianSeries(num_vars, max_degree, {})
    g0 = system.germs[0]
    if num_vars is not None and num_vars != g0.num_vars:
        raise DimensionMismatchError("explicit num_vars disagrees with the germs")
    if max_degree is not None and max_degree != g0.max_degree:
        raise DimensionMismatchError("explicit max_degree disagrees with the germs")
    entries: dict[IndexPair, Scalar] = {}
    has_float = False
    for w, g in zip(system.weights, system.germs):
        for a, ca in g.coeffs.items():
            wa = ca * w
            for b, cb in g.coeffs.items():
                k = (a, b)
                v = wa * conj(cb)
                if isinstance(v, complex):
                    has_float = True
                entries[k] = entries.get(k, GaussianRational(0)) + v
    if has_float:
        entries = _hermitize({k: complex(v) for k, v in entries.items()})
    return HermitianSeries(g0.num_vars, g0.max_degree, entries, validate=False)


def hermitian_mul(a: HermitianSeries, b: HermitianSeries) -> HermitianSeries:
    """Truncated product: the convolution of coefficient arrays."""
    a._check_vars(b)
    d = min(a.max_degree, b.max_degree)
    out: dict[IndexPair, Scalar] = {}
    has_float = False
    for (a1, b1), v1 in a.entries.items():
        for (a2, b2), v2 in b.entries.items():
            al = add(a1, a2)
            if degree(al) > d:
                continue
            be = add(b1, b2)
            if degree(be) > d:
                continue
            v = v1 * v2
            if isinstance(v, complex):
                has_float = True
            k = (al, be)
            out[k] = out.get(k, GaussianRational(0)) + v
    if has_float:
        out = _hermitize({k: complex(v) for k, v in out.items()})
    return HermitianSeries(a.num_vars, d, out, validate=False)


def hermitian_pow(a: HermitianSeries, k: int) -> HermitianSeries:
    if not isinstance(k, int) or k < 1:
        raise DomainError("power must be a positive integer")
    out = a
    for _ in range(k - 1):
        out = hermitian_mul(out, a)
    return out


def log_truncate(h: HermitianSeries, degree_cap: int) -> HermitianSeries:
    """log h as a truncated series, for h with constant term exactly 1.

    Mercator series sum_{k>=1} (-1)^(k+1) (h-1)^k / k; terms of (h-1)^k
    survive the per-index cap only for k <= 2*degree_cap, so the sum is
    finite.
    """
    if h.constant_term != 1:
        raise DomainError("log requires constant term exactly 1")
    x = (h - HermitianSeries.one(h.num_vars, h.max_degree)).truncate(degree_cap)
    out = HermitianSeries(h.num_vars, degree_cap, {})
    power = HermitianSeries.one(h.num_vars, degree_cap)
    for k in range(1, 2 * degree_cap + 1):
        power = hermitian_mul(power, x)
        if power.is_zero():
            break
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    return out


def exp_truncate(h: HermitianSeries, degree_cap: int) -> HermitianSeries:
    """exp h as a truncated series, for h with constant term exactly 0."""
    if h.constant_term != 0:
        raise DomainError("exp requires constant term exactly 0")
    x = h.truncate(degree_cap)
    out = HermitianSeries.one(h.num_vars, degree_cap)
    power = HermitianSeries.one(h.num_vars, degree_cap)
    kfact = Fraction(1)
    for k in range(1, 2 * degree_cap + 1):
        power = hermitian_mul(power, x)
        if power.is_zero():
            break
        kfact = kfact / k
        out = out + power.scale(kfact)
    return out
