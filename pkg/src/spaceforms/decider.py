"""Rule engine deciding whether two space forms share a Kähler submanifold.

``decide_relatives(f1, f2)`` applies the first matching rule, writing
``f1 = F(n, b)`` and ``f2 = F(m, a)`` for definite non-flat pairs, with
coprime (s, r) fixed by s*a = r*b:

    R0   one form flat, the other curved (any signature)  -> NotRelatives
    R0'  both flat, each with a positive metric direction -> Relatives
         (trivial common-line witness, beyond the curvature rule family)
    R1   definite curvatures of opposite sign             -> NotRelatives
    R2   definite same-sign curvatures, different units   -> NotRelatives
    R3   a necessary coefficient-count inequality fails:
         r+1 <= C(s+m, s) and s+1 <= C(r+n, r) must hold  -> NotRelatives
    R4   curvature ratio is an integer q <= dim of the
         larger-curvature form: explicit verified witness -> Relatives
    R5   m+n+1 > max{C(s+m, s), C(r+n, r)}                -> Relatives
    R6   n = m = 2, (p, q) = sorted(s, r), p > 1 coprime,
         p(p+3) < 4q + 2                                  -> NotRelatives

Everything else is Unknown, with the necessary conditions that did pass
listed in the certificate.  Rules R3-R6 are stated for positive
curvatures only; definite same-sign negative pairs stop after R2.
Refutations are ordered before sufficiency so certificates prefer the
cheaper-to-check inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, IncommensurableError
from .expansion import remark_witness
from .forms import SpaceForm
from .scalars import rational_str

RELATIVES = "Relatives"
NOT_RELATIVES = "NotRelatives"
UNKNOWN = "Unknown"

RULE_ORDER = ("R0", "R0'", "R1", "R2", "R3", "R4", "R5", "R6")


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str | None
    certificate: dict

    def to_json(self) -> dict:
        return {"status": self.status, "rule": self.rule, "certificate": self.certificate}


def ratio_reduce(a, b, *, unit_a=None, unit_b=None) -> tuple[int, int]:
    """The unique coprime positive (s, r) with s*a = r*b."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise DomainError("curvatures must be positive")
    if unit_a != unit_b:
        raise IncommensurableError(
            f"curvature units {unit_a!r} and {unit_b!r} are incommensurable"
        )
    ratio = b / a  # equals s/r
    return ratio.numerator, ratio.denominator


@dataclass(frozen=True)
class NecessaryCheck:
    """Both coefficient-count inequalities with evaluated sides."""

    s: int
    r: int
    lhs1: int
    rhs1: int
    pass1: bool
    lhs2: int
    rhs2: int
    pass2: bool

    @property
    def passed(self) -> bool:
        return self.pass1 and self.pass2

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "r": self.r,
            "ineq1": {"lhs": self.lhs1, "rhs": self.rhs1, "holds": self.pass1},
            "ineq2": {"lhs": self.lhs2, "rhs": self.rhs2, "holds": self.pass2},
        }


def check_necessary(n: int, b, m: int, a, *, unit_b=None, unit_a=None) -> NecessaryCheck:
    """Evaluate r+1 <= C(s+m, s) and s+1 <= C(r+n, r) for F(n,b), F(m,a)."""
    s, r = ratio_reduce(a, b, unit_a=unit_a, unit_b=unit_b)
    rhs1 = math.comb(s + m, s)
    rhs2 = math.comb(r + n, r)
    return NecessaryCheck(s, r, r + 1, rhs1, r + 1 <= rhs1, s + 1, rhs2, s + 1 <= rhs2)


@dataclass(frozen=True)
class SufficientCheck:
    s: int
    r: int
    lhs: int  # m + n + 1
    rhs: int  # max of the two binomials
    passed: bool

    def to_json(self) -> dict:
        return {"s": self.s, "r": self.r, "lhs": self.lhs, "rhs": self.rhs, "holds": self.passed}


def check_sufficient(n: int, b, m: int, a, *, unit_b=None, unit_a=None) -> SufficientCheck:
    """Evaluate m+n+1 > max{C(s+m, s), C(r+n, r)} for F(n,b), F(m,a)."""
    s, r = ratio_reduce(a, b, unit_a=unit_a, unit_b=unit_b)
    rhs = max(math.comb(s + m, s), math.comb(r + n, r))
    lhs = m + n + 1
    return SufficientCheck(s, r, lhs, rhs, lhs > rhs)


@dataclass(frozen=True)
class PlaneCheck:
    p: int
    q: int
    gcd_ok: bool
    range_ok: bool
    lhs: int  # p(p+3)
    rhs: int  # 4q + 2
    ineq_ok: bool

    @property
    def applies(self) -> bool:
        return self.gcd_ok and self.range_ok and self.ineq_ok

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "gcd_ok": self.gcd_ok,
            "range_ok": self.range_ok,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ineq_ok": self.ineq_ok,
            "applies": self.applies,
        }


def check_plane(p: int, q: int) -> PlaneCheck:
    """Dimension-2 refutation clauses: gcd(p,q)=1, 1 < p < q, p(p+3) < 4q+2."""
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    lhs, rhs = p * (p + 3), 4 * q + 2
    return PlaneCheck(p, q, math.gcd(p, q) == 1, 1 < p < q, lhs, rhs, lhs < rhs)


# -- individual rules ------------------------------------------------------


def _rule_r0(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if f1.is_flat == f2.is_flat:
        return None
    flat, curved = (f1, f2) if f1.is_flat else (f2, f1)
    return Verdict(
        NOT_RELATIVES,
        "R0",
        {
            "flat": flat.render(),
            "curved": curved.render(),
            "reason": "a flat form and a curved form never share a Kähler submanifold",
        },
    )


def _rule_r0_prime(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if not (f1.is_flat and f2.is_flat):
        return None
    if f1.dim - f1.sig_index < 1 or f2.dim - f2.sig_index < 1:
        return None
    return Verdict(
        RELATIVES,
        "R0'",
        {
            "form1": f1.render(),
            "form2": f2.render(),
            "witness": "z -> (z, 0, ..., 0) into the first positive metric direction of each form",
            "note": "trivial common-line witness supplied by this tool, beyond the curvature rule family",
        },
    )


def _rule_r1(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if f1.is_flat or f2.is_flat or not (f1.is_definite and f2.is_definite):
        return None
    if f1.curvature_sign * f2.curvature_sign != -1:
        return None
    return Verdict(
        NOT_RELATIVES,
        "R1",
        {
            "form1": f1.render(),
            "form2": f2.render(),
            "curvature1": rational_str(f1.curvature),
            "curvature2": rational_str(f2.curvature),
            "reason": "curvatures of shared-submanifold forms must have a positive product",
        },
    )


def _rule_r2(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if f1.is_flat or f2.is_flat or not (f1.is_definite and f2.is_definite):
        return None
    if f1.curvature_sign != f2.curvature_sign:
        return None
    if f1.curvature_unit == f2.curvature_unit:
        return None
    return Verdict(
        NOT_RELATIVES,
        "R2",
        {
            "form1": f1.render(),
            "form2": f2.render(),
            "unit1": f1.curvature_unit,
            "unit2": f2.curvature_unit,
            "reason": "the curvature ratio of shared-submanifold forms must be rational",
        },
    )


def _positive_pair(f1: SpaceForm, f2: SpaceForm) -> bool:
    return (
        not f1.is_flat
        and not f2.is_flat
        and f1.is_definite
        and f2.is_definite
        and f1.curvature_sign == 1
        and f2.curvature_sign == 1
        and f1.curvature_unit == f2.curvature_unit
    )


def _rule_r3(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if not _positive_pair(f1, f2):
        return None
    nc = check_necessary(f1.dim, f1.curvature_mag, f2.dim, f2.curvature_mag)
    if nc.passed:
        return None
    return Verdict(
        NOT_RELATIVES,
        "R3",
        {
            "form1": f1.render(),
            "form2": f2.render(),
            "necessary": nc.to_json(),
            "violated": "ineq1" if not nc.pass1 else "ineq2",
            "reason": "a necessary coefficient-count inequality fails",
        },
    )


def _integer_ratio(num: Fraction, den: Fraction) -> int | None:
    ratio = Fraction(num, den)
    return ratio.numerator if ratio.denominator == 1 else None


def _rule_r4(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if not _positive_pair(f1, f2):
        return None
    b, a = f1.curvature_mag, f2.curvature_mag
    q = _integer_ratio(b, a)
    if q is not None and q <= f1.dim:
        host, other = f1, f2
    else:
        q = _integer_ratio(a, b)
        if q is None or q > f2.dim:
            return None
        host, other = f2, f1
    # lazy import: the search module needs ratio logic from this package
    from .search.problem import Candidate, SearchProblem, WeightedCurve, verify_witness_exact

    witness = remark_witness(q, other.curvature_mag, other.dim)
    monomials = [
        WeightedCurve.monomial(q, j + 1, w) for j, w in enumerate(witness.host_weights)
    ] + [WeightedCurve.zero(q) for _ in range(host.dim - q)]
    diagonal = [
        WeightedCurve((1,) + (0,) * (q - 1)) for _ in range(other.dim)
    ]
    if host is f1:
        candidate = Candidate(h=tuple(diagonal), k=tuple(monomials))
    else:
        candidate = Candidate(h=tuple(monomials), k=tuple(diagonal))
    problem = SearchProblem(f1, f2, degree=q)
    ok, mismatch = verify_witness_exact(candidate, problem)
    assert ok, f"integer-ratio witness failed exact verification: {mismatch}"
    return Verdict(
        RELATIVES,
        "R4",
        {
            "q": q,
            "host": host.render(),
            "diagonal_form": other.render(),
            "host_weights": [rational_str(w) for w in witness.host_weights],
            "witness": candidate.to_json(),
            "problem": problem.to_json(),
            "verified": True,
        },
    )


def _rule_r5(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if not _positive_pair(f1, f2):
        return None
    sc = check_sufficient(f1.dim, f1.curvature_mag, f2.dim, f2.curvature_mag)
    if not sc.passed:
        return None
    return Verdict(
        RELATIVES,
        "R5",
        {
            "form1": f1.render(),
            "form2": f2.render(),
            "sufficient": sc.to_json(),
            "reason": "both forms re-embed into one common form of low enough dimension to force an intersection",
        },
    )


def _rule_r6(f1: SpaceForm, f2: SpaceForm) -> Verdict | None:
    if not _positive_pair(f1, f2):
        return None
    if f1.dim != 2 or f2.dim != 2:
        return None
    s, r = ratio_reduce(f2.curvature_mag, f1.curvature_mag)
    p, q = sorted((s, r))
    pc = check_plane(p, q)
    if not pc.applies:
        return None
    return Verdict(
        NOT_RELATIVES,
        "R6",
        {
            "form1": f1.render(),
            "form2": f2.render(),
            "plane": pc.to_json(),
            "assumes_scale_normalization": True,
            "reason": "dimension-2 coprime-curvature refutation",
        },
    )


_RULES = {
    "R0": _rule_r0,
    "R0'": _rule_r0_prime,
    "R1": _rule_r1,
    "R2": _rule_r2,
    "R3": _rule_r3,
    "R4": _rule_r4,
    "R5": _rule_r5,
    "R6": _rule_r6,
}


def evaluate_rules(f1: SpaceForm, f2: SpaceForm) -> list[Verdict]:
    """Every rule whose guard fires, in rule order (for consistency checks)."""
    out = []
    for rule in RULE_ORDER:
        v = _RULES[rule](f1, f2)
        if v is not None:
            out.append(v)
    return out


def _unknown_verdict(f1: SpaceForm, f2: SpaceForm) -> Verdict:
    passed = []
    definite_curved = (
        not f1.is_flat and not f2.is_flat and f1.is_definite and f2.is_definite
    )
    if definite_curved:
        if f1.curvature_sign == f2.curvature_sign:
            passed.append({"check": "curvature-signs", "holds": True})
            if f1.curvature_unit == f2.curvature_unit:
                passed.append({"check": "commensurability", "holds": True})
                if f1.curvature_sign == 1:
                    nc = check_necessary(
                        f1.dim, f1.curvature_mag, f2.dim, f2.curvature_mag
                    )
                    passed.append({"check": "necessary-inequalities", **nc.to_json()})
    return Verdict(
        UNKNOWN,
        None,
        {
            "form1": f1.render(),
            "form2": f2.render(),
            "passed": passed,
        },
    )


def decide_relatives(f1: SpaceForm, f2: SpaceForm) -> Verdict:
    """Classify a pair of space forms with a certificate.

    The first matching rule wins; evaluating all rules and finding both a
    Relatives rule and a NotRelatives rule firing would mean the rule
    family itself is inconsistent, so that is a hard assertion failure,
    never a verdict.
    """
    verdicts = evaluate_rules(f1, f2)
    statuses = {v.status for v in verdicts}
    assert not (RELATIVES in statuses and NOT_RELATIVES in statuses), (
        f"inconsistent rule matches for {f1.render()} vs {f2.render()}: "
        f"{[(v.rule, v.status) for v in verdicts]}"
    )
    if verdicts:
        return verdicts[0]
    return _unknown_verdict(f1, f2)
