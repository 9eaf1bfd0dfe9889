from fractions import Fraction

import pytest

from spaceforms.errors import DomainError
from spaceforms.expansion import (
    DiagonalExpansion,
    embedding_dimension,
    expand_fubini_power,
    remark_witness,
    witness_identity_holds,
)
from spaceforms.hermitian import HermitianSeries, hermitian_pow


def poly_pow(coeffs, r):
    """Independent oracle: (c0 + c1 t + ...)^r by naive convolution."""
    out = [Fraction(1)]
    for _ in range(r):
        new = [Fraction(0)] * (len(out) + len(coeffs) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(coeffs):
                new[i + j] += x * y
        out = new
    return out


class TestExpand:
    def test_two_vars_square(self):
        e = expand_fubini_power(2, 1, 2)
        assert e.monomials() == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        assert e.coefficients() == [2, 2, 1, 2, 1]

    def test_two_vars_cube(self):
        e = expand_fubini_power(2, 1, 3)
        assert e.coefficients() == [3, 3, 3, 6, 3, 1, 3, 3, 1]

    def test_one_var_scaled(self):
        assert expand_fubini_power(1, 2, 2).coefficients() == [4, 4]

    def test_term_count_is_embedding_dimension(self):
        for n in range(1, 5):
            for r in range(1, 6):
                e = expand_fubini_power(n, Fraction(3, 2), r)
                assert len(e.terms) == embedding_dimension(n, r)

    def test_substitution_collapse(self):
        # setting every |z_i|^2 := t must reproduce (1 + b n t)^r
        for n in range(1, 5):
            for r in range(1, 7):
                b = Fraction(2, 3)
                e = expand_fubini_power(n, b, r)
                collapsed = [Fraction(0)] * (r + 1)
                collapsed[0] = Fraction(1)
                for alpha, c in e.terms:
                    collapsed[sum(alpha)] += c
                assert collapsed == poly_pow([Fraction(1), b * n], r)

    def test_agrees_with_series_power(self):
        for n, b, r in [(1, Fraction(1), 4), (2, Fraction(1, 2), 3), (3, Fraction(2), 2)]:
            base_entries = {((0,) * n, (0,) * n): Fraction(1)}
            for i in range(n):
                alpha = tuple(1 if j == i else 0 for j in range(n))
                base_entries[(alpha, alpha)] = b
            base = HermitianSeries(n, r, base_entries)
            assert hermitian_pow(base, r) == expand_fubini_power(n, b, r).to_series()

    def test_preconditions(self):
        with pytest.raises(DomainError):
            expand_fubini_power(0, 1, 2)
        with pytest.raises(DomainError):
            expand_fubini_power(2, -1, 2)
        with pytest.raises(DomainError):
            expand_fubini_power(2, 1, 0)

    def test_json_round_trip(self):
        e = expand_fubini_power(2, Fraction(3, 2), 3)
        assert DiagonalExpansion.from_json(e.to_json()) == e


class TestEmbeddingDimension:
    def test_plane_cases(self):
        assert embedding_dimension(2, 2) == 5
        assert embedding_dimension(2, 3) == 9

    def test_linear_is_identity(self):
        for n in range(1, 8):
            assert embedding_dimension(n, 1) == n


class TestRemarkWitness:
    def test_double_curvature(self):
        w = remark_witness(2, 1, 2)
        assert w.host_weights == (Fraction(2), Fraction(2))
        assert w.diagonal_multiplicity == 2

    def test_scaled_line(self):
        assert remark_witness(1, 1, 5).host_weights == (Fraction(5),)

    def test_triple_multiplicity(self):
        # 1 + 2(3t + (9/2)t^2) = (1 + 3t)^2
        assert remark_witness(2, 1, 3).host_weights == (Fraction(3), Fraction(9, 2))

    def test_identity_exact_everywhere(self):
        for q in range(1, 6):
            for m in range(1, 5):
                for a in (Fraction(1), Fraction(2, 3), Fraction(5)):
                    w = remark_witness(q, a, m)
                    assert witness_identity_holds(w, q, a)
                    # independent check via naive polynomial power
                    lhs = [Fraction(1)] + [q * a * wj for wj in w.host_weights]
                    assert lhs == poly_pow([Fraction(1), a * m], q)
