import random
from fractions import Fraction

import pytest

from spaceforms.errors import DimensionMismatchError, DomainError, NormalizationError
from spaceforms.germs import SignedGermSystem, TruncatedGerm
from spaceforms.hermitian import (
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
from spaceforms.scalars import GaussianRational, conj, is_exact


def series(entries, num_vars=1, max_degree=3):
    return HermitianSeries(num_vars, max_degree, entries)


def naive_norm_square(weights, coeff_dicts):
    """Independent oracle: expand sum w |chi|^2 coefficient by coefficient."""
    out = {}
    for w, coeffs in zip(weights, coeff_dicts):
        for a, ca in coeffs.items():
            for b, cb in coeffs.items():
                out[(a, b)] = out.get((a, b), GaussianRational(0)) + w * ca * conj(cb)
    return {k: v for k, v in out.items() if v}


def check_hermitian(h):
    for (a, b), c in h.entries.items():
        mirror = h.entry(b, a)
        if is_exact(c):
            assert mirror == conj(c)
        else:
            assert complex(mirror) == complex(c).conjugate()


Z = TruncatedGerm.monomial(1, 2, (1,))
Z2 = TruncatedGerm.monomial(1, 2, (2,))
Z_PLUS_Z2 = TruncatedGerm(1, 2, {(1,): 1, (2,): 1})

ABS_Z_SQ = series({((1,), (1,)): 1}, max_degree=1)


class TestNormSquareSystem:
    def test_cancellation(self):
        sys = SignedGermSystem((Z, Z), (Fraction(1), Fraction(-1)))
        assert norm_square_system(sys).is_zero()

    def test_monomial_weights(self):
        sys = SignedGermSystem((Z, Z2), (Fraction(2), Fraction(1)))
        h = norm_square_system(sys)
        assert h.entries == {
            ((1,), (1,)): GaussianRational(2),
            ((2,), (2,)): GaussianRational(1),
        }

    def test_cross_terms_only(self):
        # |z|^2 + |z^2|^2 - |z + z^2|^2 leaves only the cross terms
        sys = SignedGermSystem((Z, Z2, Z_PLUS_Z2), (Fraction(1), Fraction(1), Fraction(-1)))
        h = norm_square_system(sys)
        expected = naive_norm_square(
            [Fraction(1), Fraction(1), Fraction(-1)],
            [Z.coeffs, Z2.coeffs, Z_PLUS_Z2.coeffs],
        )
        assert h.entries == expected
        assert h.entries == {
            ((1,), (2,)): GaussianRational(-1),
            ((2,), (1,)): GaussianRational(-1),
        }

    def test_random_against_naive_oracle(self):
        rng = random.Random(11)
        for _ in range(50):
            count = rng.randint(1, 4)
            germs, weights = [], []
            for _ in range(count):
                coeffs = {
                    (d,): GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
                    for d in range(1, 4)
                }
                germs.append(TruncatedGerm(1, 3, coeffs))
                weights.append(Fraction(rng.choice([-2, -1, 1, 2, 3])))
            sys = SignedGermSystem(tuple(germs), tuple(weights))
            h = norm_square_system(sys)
            assert h.entries == naive_norm_square(weights, [g.coeffs for g in germs])
            check_hermitian(h)

    def test_unitary_mixing_invariance(self):
        # rational unitaries: a (3,4,5) rotation and a complex variant
        u_real = [
            [GaussianRational(Fraction(3, 5)), GaussianRational(Fraction(4, 5))],
            [GaussianRational(Fraction(-4, 5)), GaussianRational(Fraction(3, 5))],
        ]
        u_complex = [
            [GaussianRational(Fraction(3, 5)), GaussianRational(0, Fraction(4, 5))],
            [GaussianRational(0, Fraction(4, 5)), GaussianRational(Fraction(3, 5))],
        ]
        g1, g2 = Z_PLUS_Z2, Z2
        base = norm_square_system(SignedGermSystem((g1, g2), (Fraction(1), Fraction(1))))
        for u in (u_real, u_complex):
            m1 = g1.scale(u[0][0]) + g2.scale(u[0][1])
            m2 = g1.scale(u[1][0]) + g2.scale(u[1][1])
            mixed = norm_square_system(SignedGermSystem((m1, m2), (Fraction(1), Fraction(1))))
            assert mixed == base

    def test_empty_system_needs_dims(self):
        empty = SignedGermSystem((), ())
        with pytest.raises(DimensionMismatchError):
            norm_square_system(empty)
        assert norm_square_system(empty, num_vars=1, max_degree=2).is_zero()


class TestPolarize:
    def test_constant(self):
        one = HermitianSeries.one(1, 2)
        b = polarize(one)
        assert isinstance(b, BiSeries)
        assert b.entry((0,), (0,)) == 1

    def test_norm_square_becomes_z_wbar(self):
        b = polarize(ABS_Z_SQ)
        assert b.entry((1,), (1,)) == 1

    def test_round_trips(self):
        rng = random.Random(3)
        for _ in range(20):
            coeffs = {
                (d,): GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
                for d in range(1, 3)
            }
            sys = SignedGermSystem((TruncatedGerm(1, 2, coeffs),), (Fraction(1),))
            h = norm_square_system(sys)
            assert restrict(polarize(h)) == h


class TestMulPow:
    def test_binomial_square(self):
        one_plus = series({((0,), (0,)): 1, ((1,), (1,)): 1}, max_degree=2)
        sq = hermitian_pow(one_plus, 2)
        assert sq == series(
            {((0,), (0,)): 1, ((1,), (1,)): 2, ((2,), (2,)): 1}, max_degree=2
        )

    def test_difference_of_squares(self):
        plus = series({((0,), (0,)): 1, ((1,), (1,)): 1}, max_degree=2)
        minus = series({((0,), (0,)): 1, ((1,), (1,)): -1}, max_degree=2)
        prod = hermitian_mul(plus, minus)
        assert prod == series({((0,), (0,)): 1, ((2,), (2,)): -1}, max_degree=2)

    def test_two_variable_square_matches_expansion(self):
        from spaceforms.expansion import expand_fubini_power

        base = HermitianSeries(
            2, 2, {((0, 0), (0, 0)): 1, ((1, 0), (1, 0)): 1, ((0, 1), (0, 1)): 1}
        )
        sq = hermitian_pow(base, 2)
        assert sq == expand_fubini_power(2, 1, 2).to_series(max_degree=2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            hermitian_mul(ABS_Z_SQ, HermitianSeries.one(2, 2))

    def test_pow_requires_positive(self):
        with pytest.raises(DomainError):
            hermitian_pow(ABS_Z_SQ, 0)


class TestLogExp:
    def test_log_one_plus_norm_square(self):
        h = series({((0,), (0,)): 1, ((1,), (1,)): 1})
        lg = log_truncate(h, 3)
        assert lg == series(
            {
                ((1,), (1,)): 1,
                ((2,), (2,)): Fraction(-1, 2),
                ((3,), (3,)): Fraction(1, 3),
            }
        )

    def test_log_of_square_is_twice_log(self):
        h = series({((0,), (0,)): 1, ((1,), (1,)): 1})
        assert log_truncate(hermitian_pow(h, 2), 3) == log_truncate(h, 3).scale(2)

    def test_exp_norm_square(self):
        ex = exp_truncate(ABS_Z_SQ.truncate(1), 2)
        assert ex == series(
            {((0,), (0,)): 1, ((1,), (1,)): 1, ((2,), (2,)): Fraction(1, 2)},
            max_degree=2,
        )

    def test_exp_zero(self):
        zero = HermitianSeries(1, 2, {})
        assert exp_truncate(zero, 2) == HermitianSeries.one(1, 2)

    def test_round_trips(self):
        h = series({((0,), (0,)): 1, ((1,), (1,)): 1})
        assert exp_truncate(log_truncate(h, 3), 3) == h.truncate(3)
        x = ABS_Z_SQ.truncate(1)
        assert log_truncate(exp_truncate(x, 3), 3) == x.truncate(3)

    def test_preconditions(self):
        with pytest.raises(DomainError):
            log_truncate(ABS_Z_SQ, 2)  # constant term 0, not 1
        with pytest.raises(DomainError):
            exp_truncate(HermitianSeries.one(1, 2), 2)  # constant term 1, not 0


class TestSymmetryPreservation:
    def test_ops_preserve_hermitian_symmetry(self):
        rng = random.Random(17)
        for _ in range(30):
            coeffs = {
                (d,): GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2))
                for d in range(1, 3)
            }
            sys = SignedGermSystem(
                (TruncatedGerm(1, 2, coeffs), Z2), (Fraction(2), Fraction(-1))
            )
            h = norm_square_system(sys)
            check_hermitian(h)
            check_hermitian(hermitian_mul(h, h))
            check_hermitian(hermitian_pow(HermitianSeries.one(1, 2) + h, 2))
            check_hermitian(log_truncate(HermitianSeries.one(1, 2) + h, 2))
            check_hermitian(exp_truncate(h, 2))


class TestApproximateMode:
    def test_exact_vs_float_pipeline(self):
        rng = random.Random(23)
        for _ in range(40):
            deg = rng.randint(1, 6)
            coeffs = {
                (d,): GaussianRational(
                    Fraction(rng.randint(-8, 8)), Fraction(rng.randint(-8, 8))
                )
                for d in range(1, deg + 1)
            }
            g = TruncatedGerm(1, deg, coeffs)
            sys = SignedGermSystem((g,), (Fraction(3, 2),))
            h = norm_square_system(sys)
            ha = norm_square_system(SignedGermSystem((g.to_approximate(),), (Fraction(3, 2),)))
            one = HermitianSeries.one(1, deg)
            exact = hermitian_mul(one + h, one + h)
            approx = hermitian_mul(one.to_approximate() + ha, one.to_approximate() + ha)
            assert exact.is_exact() and not approx.is_exact()
            assert approx.allclose(exact.to_approximate(), tol=1e-10)
            check_hermitian(approx)

    def test_float_log_exp_agree_with_exact(self):
        h = series({((0,), (0,)): 1, ((1,), (1,)): Fraction(3, 4)})
        exact = log_truncate(h, 3)
        approx = log_truncate(h.to_approximate(), 3)
        assert approx.allclose(exact.to_approximate(), tol=1e-12)


class TestJson:
    def test_round_trip(self):
        sys = SignedGermSystem((Z, Z_PLUS_Z2), (Fraction(1, 2), Fraction(-3)))
        h = norm_square_system(sys)
        assert HermitianSeries.from_json(h.to_json()) == h

    def test_asymmetric_input_rejected(self):
        with pytest.raises(NormalizationError):
            HermitianSeries(1, 2, {((1,), (2,)): 1})
