"""Multi-index helpers.

A multi-index is a plain tuple of non-negative integer exponents, one per
variable; its degree is the sum of the entries.  All deterministic
enumeration in the package uses graded lexicographic order: lower total
degree first, then lexicographically with higher leading exponents first,
so that for two variables the order runs z1, z2, z1^2, z1*z2, z2^2, ...
"""

from __future__ import annotations

from itertools import combinations

Index = tuple[int, ...]


def degree(alpha: Index) -> int:
    return sum(alpha)


def add(alpha: Index, beta: Index) -> Index:
    return tuple(a + b for a, b in zip(alpha, beta))


def grlex_key(alpha: Index):
    return (sum(alpha), tuple(-a for a in alpha))


def pair_grlex_key(alpha: Index, beta: Index):
    """Graded-lex key for a bi-index, treating (alpha, beta) as one index."""
    return grlex_key(alpha + beta)


def zero_index(num_vars: int) -> Index:
    return (0,) * num_vars


def unit_index(num_vars: int, var: int) -> Index:
    return tuple(1 if i == var else 0 for i in range(num_vars))


def indices_of_degree(num_vars: int, d: int):
    """All multi-indices in num_vars variables of total degree exactly d."""
    if num_vars == 1:
        yield (d,)
        return
    # stars and bars: choose bar positions among d + num_vars - 1 slots
    for bars in combinations(range(d + num_vars - 1), num_vars - 1):
        out = []
        prev = -1
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(d + num_vars - 2 - prev)
        yield tuple(out)


def indices_up_to(num_vars: int, max_deg: int, min_deg: int = 0) -> list[Index]:
    """Multi-indices with min_deg <= degree <= max_deg, in graded-lex order."""
    out = []
    for d in range(min_deg, max_deg + 1):
        out.extend(sorted(indices_of_degree(num_vars, d), key=grlex_key))
    return out
