"""Multiple-cover transform between real GW invariants and integer counts.

The genus-g invariant GW_g of a real symplectic sixfold decomposes over
contributions of lower-genus embedded curves, each multiple-cover series
being a power of sinh(t/2)/(t/2) -- or of sin(t/2)/(t/2) when the orienting
line bundle admits no conjugation lift.  Concretely

    GW_g = sum_{0 <= h <= g, g-h even} C(h, (g-h)/2) * E_h,

where C(h, j) is the t^(2j) coefficient of f(t/2)/(t/2) raised to the
exponent h - 1 + <c1,B>/2 and f is sinh or sin.  Since C(h, 0) = 1 the
relation is unitriangular and inverts exactly over the rationals; the
recovered E_h are conjecturally integer curve counts.

Everything here is a pure function over immutable data; the even- and
odd-genus towers never mix (g - h is even throughout).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .series import (
    default_order,
    format_rational,
    parse_rational,
    series_pow,
    sin_over_half_t,
    sinh_over_half_t,
)


class Convention(enum.Enum):
    """Which generating function drives the cover series."""

    SINH = "sinh"
    SIN = "sin"

    @classmethod
    def from_string(cls, name: str) -> "Convention":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"convention must be 'sinh' or 'sin', got {name!r}")


def cover_exponent(h: int, c1b: int) -> int:
    """Exponent h - 1 + c1b/2 of the base series; c1b must be even."""
    if h < 0:
        raise ValueError(f"genus h must be >= 0, got {h}")
    if c1b % 2 != 0:
        raise ValueError(f"c1B pairing must be even, got {c1b}")
    return h - 1 + c1b // 2


@lru_cache(maxsize=None)
def _coefficients_up_to(exponent: int, order: int, convention: Convention):
    base = sinh_over_half_t(order) if convention is Convention.SINH else sin_over_half_t(order)
    return series_pow(base, exponent).coefficients


def multicover_coefficient(
    h: int, c1b: int, g: int, convention: Convention = Convention.SINH
) -> Fraction:
    """t^(2g) coefficient of (f(t/2)/(t/2))^(h-1+c1b/2), f = sinh or sin.

    The exponent may be negative; the base series is a unit, so the power
    is taken through the exact series reciprocal.  The cached working
    series use the default truncation order (REALGW_ORDER overrides it) but
    never less than 2g, so results are exact regardless.
    """
    if g < 0:
        raise ValueError(f"genus g must be >= 0, got {g}")
    exponent = cover_exponent(h, c1b)
    order = max(2 * g, default_order())
    return _coefficients_up_to(exponent, order, convention)[2 * g]


@dataclass(frozen=True)
class InvariantVector:
    """Rational values indexed by genus 0..max_genus, with the even pairing
    <c1,B> carried along.

    Genera above ``max_genus`` are absent (undetermined), not zero; missing
    genera at or below it are normalized to zero.
    """

    entries: Mapping[int, Fraction]
    c1b: int
    max_genus: int = field(default=-1)

    def __post_init__(self):
        if self.c1b % 2 != 0:
            raise ValueError(f"c1B pairing must be even, got {self.c1b}")
        max_genus = self.max_genus
        if max_genus < 0:
            if not self.entries:
                raise ValueError("empty entries require an explicit max_genus")
            max_genus = max(self.entries)
        bad = [g for g in self.entries if g < 0 or g > max_genus]
        if bad:
            raise ValueError(f"genera {bad} outside [0, {max_genus}]")
        dense = {
            g: Fraction(self.entries.get(g, 0)) for g in range(max_genus + 1)
        }
        object.__setattr__(self, "entries", dense)
        object.__setattr__(self, "max_genus", max_genus)

    def value(self, genus: int) -> Fraction:
        return self.entries[genus]

    def to_string_map(self) -> dict[str, str]:
        """Genus-keyed p/q strings, the CLI wire form."""
        return {str(g): format_rational(v) for g, v in sorted(self.entries.items())}

    @classmethod
    def from_string_map(
        cls, data: Mapping[str, str], c1b: int, max_genus: int | None = None
    ) -> "InvariantVector":
        entries: dict[int, Fraction] = {}
        for key, raw in data.items():
            try:
                genus = int(key)
            except ValueError:
                raise ValueError(f"genus key must be an integer string, got {key!r}")
            entries[genus] = parse_rational(raw) if isinstance(raw, str) else Fraction(raw)
        if max_genus is None:
            max_genus = max(entries) if entries else 0
        return cls(entries=entries, c1b=c1b, max_genus=max_genus)


def forward_transform(
    counts: InvariantVector, convention: Convention = Convention.SINH
) -> InvariantVector:
    """GW_g = sum over h <= g with g-h even of C(h,(g-h)/2) * E_h."""
    gw: dict[int, Fraction] = {}
    for g in range(counts.max_genus + 1):
        acc = Fraction(0)
        for h in range(g % 2, g + 1, 2):
            value = counts.value(h)
            if value != 0:
                acc += multicover_coefficient(h, counts.c1b, (g - h) // 2, convention) * value
        gw[g] = acc
    return InvariantVector(entries=gw, c1b=counts.c1b, max_genus=counts.max_genus)


def invert_transform(
    gw: InvariantVector, convention: Convention = Convention.SINH
) -> InvariantVector:
    """Unique E with forward_transform(E) = gw on genera <= max_genus.

    Unitriangular back-substitution, run independently on the even- and
    odd-genus towers (the sum couples only h = g mod 2); always solvable
    since the diagonal coefficients C(g, 0) are 1.
    """
    counts: dict[int, Fraction] = {}
    for g in range(gw.max_genus + 1):
        acc = gw.value(g)
        for h in range(g % 2, g, 2):
            value = counts[h]
            if value != 0:
                acc -= multicover_coefficient(h, gw.c1b, (g - h) // 2, convention) * value
        counts[g] = acc
    return InvariantVector(entries=counts, c1b=gw.c1b, max_genus=gw.max_genus)


def integrality_check(vec: InvariantVector) -> list[tuple[int, Fraction]]:
    """Entries whose value is not an integer, as (genus, value) pairs."""
    return [
        (g, v) for g, v in sorted(vec.entries.items()) if v.denominator != 1
    ]
