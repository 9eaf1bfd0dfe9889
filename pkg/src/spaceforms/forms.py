"""Space-form descriptors and their textual syntax.

Three families, each of constant holomorphic sectional curvature:

* flat        CE(N, s)           indefinite Euclidean space, signature s
* projective  CP(N, s, b[, u])   curvature +b, signature index s
* hyperbolic  CH(N, s, b[, u])   curvature -b, signature index s

FS(n, b[, u]) abbreviates the definite (signature 0) case, projective for
b > 0 and hyperbolic for b < 0.  Curvature magnitudes are positive
rationals; the opaque unit tag makes incommensurable curvatures
expressible: two curvatures have a rational ratio iff their tags match.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormParseError, ValidationError
from .scalars import rational_str

FLAT = "flat"
PROJECTIVE = "projective"
HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class SpaceForm:
    kind: str
    dim: int
    sig_index: int = 0
    curvature_mag: Fraction | None = None
    curvature_unit: str | None = None

    def __post_init__(self):
        if self.kind not in (FLAT, PROJECTIVE, HYPERBOLIC):
            raise ValidationError(f"unknown kind {self.kind!r}")
        if self.dim < 1:
            raise ValidationError("dimension must be positive")
        if not 0 <= self.sig_index <= self.dim:
            raise ValidationError(
                f"signature index {self.sig_index} exceeds dimension {self.dim}"
            )
        if self.kind == FLAT:
            if self.curvature_mag is not None or self.curvature_unit is not None:
                raise ValidationError("flat forms carry no curvature")
        else:
            if self.curvature_mag is None:
                raise ValidationError(f"{self.kind} forms need a curvature magnitude")
            object.__setattr__(self, "curvature_mag", Fraction(self.curvature_mag))
            if self.curvature_mag <= 0:
                raise ValidationError("curvature magnitude must be positive")

    @property
    def is_flat(self) -> bool:
        return self.kind == FLAT

    @property
    def is_definite(self) -> bool:
        return self.sig_index == 0

    @property
    def curvature_sign(self) -> int:
        if self.kind == PROJECTIVE:
            return 1
        if self.kind == HYPERBOLIC:
            return -1
        return 0

    @property
    def curvature(self) -> Fraction | None:
        """Signed curvature (in units of the tag), None for flat forms."""
        if self.is_flat:
            return None
        return self.curvature_sign * self.curvature_mag

    def scaled(self, factor) -> "SpaceForm":
        """Same form with curvature magnitude multiplied by a positive rational."""
        factor = Fraction(factor)
        if factor <= 0:
            raise ValidationError("scale factor must be positive")
        if self.is_flat:
            return self
        return SpaceForm(
            self.kind, self.dim, self.sig_index, self.curvature_mag * factor,
            self.curvature_unit,
        )

    def render(self) -> str:
        if self.is_flat:
            return f"CE({self.dim}, {self.sig_index})"
        unit = f", {self.curvature_unit}" if self.curvature_unit is not None else ""
        if self.is_definite:
            return f"FS({self.dim}, {rational_str(self.curvature)}{unit})"
        tag = "CP" if self.kind == PROJECTIVE else "CH"
        return f"{tag}({self.dim}, {self.sig_index}, {rational_str(self.curvature_mag)}{unit})"


def flat_space(dim: int, sig_index: int = 0) -> SpaceForm:
    return SpaceForm(FLAT, dim, sig_index)


def fubini_study(dim: int, b, unit: str | None = None) -> SpaceForm:
    """Definite form of signed curvature b (projective b > 0, hyperbolic b < 0)."""
    b = Fraction(b)
    if b == 0:
        raise ValidationError("curvature must be nonzero; use flat_space for b = 0")
    kind = PROJECTIVE if b > 0 else HYPERBOLIC
    return SpaceForm(kind, dim, 0, abs(b), unit)


_FORM_RE = re.compile(r"^\s*(FS|CE|CP|CH)\s*\(([^()]*)\)\s*$")
_UNIT_RE = re.compile(r"^[A-Za-z_]\w*$")


def _parse_rational_token(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormParseError(f"bad rational literal {tok!r}") from exc


def _parse_int_token(tok: str) -> int:
    try:
        return int(tok)
    except ValueError as exc:
        raise FormParseError(f"bad integer literal {tok!r}") from exc


def parse_form(text: str) -> SpaceForm:
    """Parse FS(n, p/q[, unit]) | CE(N, s) | CP(N, s, p/q[, unit]) | CH(...)."""
    m = _FORM_RE.match(text)
    if not m:
        raise FormParseError(f"cannot parse space form {text!r}")
    tag, body = m.group(1), m.group(2)
    args = [a.strip() for a in body.split(",")] if body.strip() else []
    try:
        if tag == "CE":
            if len(args) != 2:
                raise FormParseError("CE takes (dimension, signature)")
            return flat_space(_parse_int_token(args[0]), _parse_int_token(args[1]))
        if tag == "FS":
            if len(args) not in (2, 3):
                raise FormParseError("FS takes (dimension, curvature[, unit])")
            unit = _parse_unit(args[2]) if len(args) == 3 else None
            return fubini_study(_parse_int_token(args[0]), _parse_rational_token(args[1]), unit)
        if len(args) not in (3, 4):
            raise FormParseError(f"{tag} takes (dimension, signature, curvature[, unit])")
        unit = _parse_unit(args[3]) if len(args) == 4 else None
        mag = _parse_rational_token(args[2])
        if mag <= 0:
            raise FormParseError(f"{tag} curvature magnitude must be positive")
        kind = PROJECTIVE if tag == "CP" else HYPERBOLIC
        return SpaceForm(kind, _parse_int_token(args[0]), _parse_int_token(args[1]), mag, unit)
    except ValidationError as exc:
        raise FormParseError(f"invalid space form {text!r}: {exc}") from exc


def _parse_unit(tok: str) -> str:
    if not _UNIT_RE.match(tok):
        raise FormParseError(f"bad unit tag {tok!r}")
    return tok
