import random
from fractions import Fraction

import numpy as np
import pytest

from spaceforms.errors import DimensionMismatchError, DomainError
from spaceforms.germs import (
    SignedGermSystem,
    TruncatedGerm,
    exact_rank,
    taylor_matrix,
    taylor_matrix_rank,
)
from spaceforms.scalars import GaussianRational


def germ(coeffs, num_vars=1, max_degree=2):
    return TruncatedGerm(num_vars, max_degree, coeffs)


Z = germ({(1,): 1})
Z2 = germ({(2,): 1})
Z_PLUS_Z2 = germ({(1,): 1, (2,): 1})


class TestTruncatedGerm:
    def test_zero_coefficients_dropped(self):
        g = germ({(1,): 0, (2,): 1})
        assert (1,) not in g.coeffs

    def test_degree_cap_enforced(self):
        with pytest.raises(DomainError):
            germ({(3,): 1}, max_degree=2)

    def test_add_mul(self):
        assert Z + Z2 == Z_PLUS_Z2
        prod = Z * Z
        assert prod.coeff((2,)) == 1  # z * z = z^2
        assert (Z_PLUS_Z2 * Z_PLUS_Z2).coeffs == {(2,): GaussianRational(1)}  # truncated

    def test_vanishing(self):
        assert Z.vanishes_at_origin()
        assert not germ({(0,): 1, (1,): 1}).vanishes_at_origin()

    def test_json_round_trip(self):
        g = germ({(1,): GaussianRational(1, 2), (2,): GaussianRational(Fraction(-1, 3))})
        assert TruncatedGerm.from_json(g.to_json()) == g


class TestSignedGermSystem:
    def test_lengths_must_match(self):
        with pytest.raises(DimensionMismatchError):
            SignedGermSystem((Z,), (Fraction(1), Fraction(2)))

    def test_zero_weight_rejected(self):
        with pytest.raises(DomainError):
            SignedGermSystem((Z,), (Fraction(0),))

    def test_json_round_trip(self):
        sys = SignedGermSystem((Z, Z2), (Fraction(2), Fraction(-1, 3)))
        assert SignedGermSystem.from_json(sys.to_json()) == sys


def numpy_rank(germs, degree):
    """Independent floating-point oracle for small integer matrices."""
    rows = taylor_matrix(germs, degree)
    if not rows:
        return 0
    M = np.array([[complex(c) for c in row] for row in rows])
    return np.linalg.matrix_rank(M)


class TestTaylorRank:
    def test_independent_pair(self):
        assert taylor_matrix_rank([Z, Z2], 2) == (2, True)

    def test_scalar_multiple(self):
        assert taylor_matrix_rank([Z, Z.scale(2)], 2) == (1, False)

    def test_three_germs_spanning_plane(self):
        # coefficient vectors (1,1), (1,-1), (1,0) span a 2-dimensional space
        germs = [Z_PLUS_Z2, Z - Z2, Z]
        assert taylor_matrix_rank(germs, 2) == (2, False)
        assert numpy_rank(germs, 2) == 2

    def test_degree_must_be_positive(self):
        with pytest.raises(DomainError):
            taylor_matrix_rank([Z], 0)

    def test_nonvanishing_germ_rejected(self):
        with pytest.raises(DomainError):
            taylor_matrix_rank([germ({(0,): 1, (1,): 1})], 2)

    def test_random_families_match_numpy(self):
        rng = random.Random(5)
        for _ in range(60):
            num = rng.randint(1, 4)
            deg = rng.randint(1, 3)
            germs = []
            for _ in range(num):
                coeffs = {
                    (d,): GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
                    for d in range(1, deg + 1)
                }
                germs.append(TruncatedGerm(1, deg, coeffs))
            # occasionally force a dependency
            if len(germs) >= 2 and rng.random() < 0.5:
                germs[-1] = germs[0] + germs[1].scale(rng.randint(-2, 2))
            rank, indep = taylor_matrix_rank(germs, deg)
            assert rank == numpy_rank(germs, deg)
            assert indep == (rank == len(germs))


def test_exact_rank_no_tolerance():
    # a matrix numerically indistinguishable from rank 1 still ranks exactly
    eps = Fraction(1, 10**40)
    rows = [
        [GaussianRational(1), GaussianRational(1)],
        [GaussianRational(1), GaussianRational(1 + eps)],
    ]
    assert exact_rank(rows) == 2
