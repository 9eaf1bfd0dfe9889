"""Exact inertia and constructive reduction of finite-rank Hermitian series.

A normalized finite-rank series (zero constant term, no purely holomorphic
or antiholomorphic entries) has a Hermitian coefficient matrix M on its
monomial support.  Sylvester's law makes the signature of M a congruence
invariant, so it can be computed exactly over the rationals by symmetric
elimination: 1x1 pivots on nonzero diagonal entries, and an explicit 2x2
basis change

    u = e_i + conj(m) e_j,   v = e_i - conj(m) e_j        (m = M[i, j])

when the diagonal vanishes but a cross term m survives, which turns the
block [[0, m], [conj(m), 0]] into diag(2|m|^2, -2|m|^2).  Tracking the
inverse basis change expresses the original series as a weighted sum of
squares of linearly independent germs with rational weights; the classical
unit-weight form would need square roots, so weights stay rational here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ModeError, NormalizationError
from .germs import SignedGermSystem, TruncatedGerm
from .hermitian import HermitianSeries
from .indices import degree, grlex_key
from .scalars import GaussianRational, conj, is_exact


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int

    @property
    def rank(self) -> int:
        return self.positive + self.negative

    def to_json(self) -> dict:
        return {"positive": self.positive, "negative": self.negative, "rank": self.rank}


def _coefficient_matrix(h: HermitianSeries):
    """(basis, M): graded-lex monomial support and the Hermitian matrix on it."""
    for (a, b) in h.entries:
        if degree(a) == 0 or degree(b) == 0:
            raise NormalizationError(
                f"series is not normalized: entry {(a, b)} has a zero-degree index"
            )
    if not h.is_exact():
        raise ModeError("signature reduction requires exact coefficients")
    basis = h.support()
    m = len(basis)
    pos = {a: i for i, a in enumerate(basis)}
    M = [[GaussianRational(0)] * m for _ in range(m)]
    for (a, b), c in h.entries.items():
        cc = c if isinstance(c, GaussianRational) else GaussianRational(c)
        M[pos[a]][pos[b]] = cc
    return basis, M


def _congruence_diagonalize(M, track_combos: bool):
    """Diagonalize a Hermitian GaussianRational matrix by congruence.

    Returns a list of (weight, combo) pairs with nonzero rational weight;
    combo is the coefficient vector (over the original basis) of the germ
    carrying that weight, or None when track_combos is False.  The
    invariant maintained throughout is

        original series = sum over active p, q of M[p][q] g_p conj(g_q)
                          + sum of extracted weight |germ|^2.
    """
    m = len(M)
    active = list(range(m))
    combos = None
    if track_combos:
        combos = [
            [GaussianRational(1 if i == j else 0) for j in range(m)] for i in range(m)
        ]
    out = []

    def eliminate(k):
        # 1x1 pivot: absorb every other basis vector's component into g_k.
        d = M[k][k]
        for j in list(active):
            if j == k or not M[j][k]:
                continue
            lam = M[j][k] / d
            # congruence: row_j -= lam * row_k, col_j -= conj(lam) * col_k
            for t in active:
                M[j][t] = M[j][t] - lam * M[k][t]
            lam_c = conj(lam)
            for t in active:
                M[t][j] = M[t][j] - lam_c * M[t][k]
            if track_combos:
                combos[k] = [ck + lam * cj for ck, cj in zip(combos[k], combos[j])]
        out.append((Fraction(d.re), combos[k][:] if track_combos else None))

    while True:
        pivot = next((k for k in active if M[k][k]), None)
        if pivot is not None:
            eliminate(pivot)
            active.remove(pivot)
            continue
        cross = None
        for ii, i in enumerate(active):
            for j in active[ii + 1 :]:
                if M[i][j]:
                    cross = (i, j)
                    break
            if cross:
                break
        if cross is None:
            break
        i, j = cross
        m_ij = M[i][j]
        mc = conj(m_ij)
        # basis change u = e_i + conj(m) e_j, v = e_i - conj(m) e_j:
        # columns first (with conj(m)), then rows (with m), simultaneously.
        for t in active:
            ci, cj = M[t][i], M[t][j]
            M[t][i] = ci + mc * cj
            M[t][j] = ci - mc * cj
        for t in active:
            ri, rj = M[i][t], M[j][t]
            M[i][t] = ri + m_ij * rj
            M[j][t] = ri - m_ij * rj
        if track_combos:
            gi, gj = combos[i], combos[j]
            half = Fraction(1, 2)
            inv2m = GaussianRational(1) / (m_ij + m_ij)
            combos[i] = [a * half + b * inv2m for a, b in zip(gi, gj)]
            combos[j] = [a * half - b * inv2m for a, b in zip(gi, gj)]
        # next loop iterations pivot the two now-nonzero diagonals

    return out


def inertia(h: HermitianSeries) -> Inertia:
    """Exact signature of the Hermitian coefficient matrix of h."""
    _, M = _coefficient_matrix(h)
    diag = _congruence_diagonalize(M, track_combos=False)
    pos = sum(1 for w, _ in diag if w > 0)
    neg = sum(1 for w, _ in diag if w < 0)
    return Inertia(pos, neg)


def signature_reduce(h: HermitianSeries) -> SignedGermSystem:
    """Rewrite h exactly as a weighted sum of squares of independent germs.

    The returned system has positive weights first, reproduces h under
    norm_square_system, and its germ count equals the matrix rank.  Germs
    are unique only up to pseudo-unitary mixing; callers should compare
    reconstructions, not germ values.
    """
    basis, M = _coefficient_matrix(h)
    diag = _congruence_diagonalize(M, track_combos=True)
    germs, weights = [], []
    for w, combo in sorted(diag, key=lambda t: t[0] < 0):  # positives first, stable
        coeffs = {basis[p]: c for p, c in enumerate(combo) if c}
        germs.append(TruncatedGerm(h.num_vars, h.max_degree, coeffs))
        weights.append(w)
    return SignedGermSystem(tuple(germs), tuple(weights))
