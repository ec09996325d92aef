"""Cross-checks between the sign predicates, run over integer grids.

Several comparison predicates are derivable from others: an
induced-orientation condition must equal an XOR of determinant-level
conditions, the two relative-spin comparisons are linked through the
canonical-vs-projection parity, and the sin and sinh cover coefficients
differ by (-1)^g.  Each derivation chain that closes at the integer level
is encoded here as an identity and swept over a default grid; the two
sides are always evaluated through their own public predicates, never by
rewriting one into the other.  An empty failure list on the default grid is the regression
contract for the sign calculus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .multicover import Convention, multicover_coefficient
from .signs import (
    RelSpinVariant,
    Route,
    cvc_parity,
    doublet_determinant,
    e_node_induced,
    e_node_determinant,
    relspin_determinant,
    union_induced,
    union_determinant,
)

# Default sweep ranges: every parity residue mod 2, 4 and 8 is hit
# several times.
GENUS_RANGE = range(-3, 7)
RANK_RANGE = range(1, 5)
DEGREE_RANGE = range(-8, 9)
DEG_V_RANGE = range(-16, 17, 2)
BINOMIAL_RANGE = range(-6, 7)


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    grid_size: int
    failures: tuple = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "grid_size": self.grid_size,
            "holds": self.holds,
            "failures": [list(f) for f in self.failures],
        }


def _flip(comparison) -> int:
    return 0 if comparison.preserves else 1


def check_binomial_parity(
    pairs: Iterable[tuple[int, int]] | None = None
) -> IdentityReport:
    """C(a+b,2) = C(a,2) + C(b,2) + ab mod 2 (with C(x,2) = x(x-1)/2)."""
    if pairs is None:
        pairs = [(a, b) for a in BINOMIAL_RANGE for b in BINOMIAL_RANGE]
    pairs = list(pairs)
    failures = []
    for a, b in pairs:
        lhs = ((a + b) * (a + b - 1) // 2) % 2
        rhs = (a * (a - 1) // 2 + b * (b - 1) // 2 + a * b) % 2
        if lhs != rhs:
            failures.append((a, b))
    return IdentityReport("binomial_parity", len(pairs), tuple(failures))


def check_union_canonical_vs_cvc(
    grid: Iterable[tuple[int, int, int, int, int]] | None = None
) -> IdentityReport:
    """Disjoint-union canonical survival equals the XOR of the three
    canonical-vs-projection parities at ind1, ind2 and ind1+ind2."""
    if grid is None:
        grid = [
            (g1, g2, k, d1, d2)
            for g1 in GENUS_RANGE
            for g2 in GENUS_RANGE
            for k in RANK_RANGE
            for d1 in DEGREE_RANGE
            for d2 in DEGREE_RANGE
        ]
    grid = list(grid)
    failures = []
    for g1, g2, k, d1, d2 in grid:
        direct = _flip(union_determinant(g1, g2, k, d1, d2, Route.CANONICAL))
        # The union surface has genus g1 + g2 - 1 and degree d1 + d2.
        combined = (
            _flip(cvc_parity(g1 + g2 - 1, k, d1 + d2))
            ^ _flip(cvc_parity(g1, k, d1))
            ^ _flip(cvc_parity(g2, k, d2))
        )
        if direct != combined:
            failures.append((g1, g2, k, d1, d2))
    return IdentityReport("union_canonical_vs_cvc", len(grid), tuple(failures))


def check_doublet_vs_cvc(
    grid: Iterable[tuple[int, int]] | None = None
) -> IdentityReport:
    """Doublet projection-vs-complex parity equals the canonical-vs-projection
    parity on the doublet (genus 2g-1, a conjugation forces degree 2d)."""
    if grid is None:
        grid = [(g, d) for g in GENUS_RANGE for d in DEGREE_RANGE]
    grid = list(grid)
    failures = []
    for g, d in grid:
        lhs = _flip(doublet_determinant(g, 1, d, Route.PROJECTION))
        rhs = _flip(cvc_parity(2 * g - 1, 1, 2 * d))
        if lhs != rhs:
            failures.append((g, d))
    return IdentityReport("doublet_vs_cvc", len(grid), tuple(failures))


def check_relspin_mod8(degrees: Iterable[int] | None = None) -> IdentityReport:
    """The two relative-spin comparisons differ by the canonical-vs-projection
    parity at genus 0, rank 1, degree -deg V / 2."""
    if degrees is None:
        degrees = DEG_V_RANGE
    degrees = list(degrees)
    failures = []
    for deg_v in degrees:
        lhs = _flip(relspin_determinant(deg_v, RelSpinVariant.RELSPIN_VS_PROJECTION))
        rhs = _flip(
            relspin_determinant(deg_v, RelSpinVariant.RELSPIN_VS_CANONICAL)
        ) ^ _flip(cvc_parity(0, 1, -deg_v // 2))
        if lhs != rhs:
            failures.append((deg_v,))
    return IdentityReport("relspin_mod8", len(degrees), tuple(failures))


def check_union_induced_vs_determinant(
    grid: Iterable[tuple[int, int, int, int]] | None = None
) -> IdentityReport:
    """Both induced-orientation union conditions equal the XOR of the
    determinant-level union
    conditions at (k=1, degrees -d1, -d2) and at the trivial line bundle."""
    if grid is None:
        grid = [
            (g1, g2, d1, d2)
            for g1 in GENUS_RANGE
            for g2 in GENUS_RANGE
            for d1 in DEGREE_RANGE
            for d2 in DEGREE_RANGE
        ]
    grid = list(grid)
    failures = []
    for g1, g2, d1, d2 in grid:
        trivial = _flip(union_determinant(g1, g2, 1, 0, 0, Route.CANONICAL))
        proj = _flip(union_induced(g1, g2, d1, d2, Route.PROJECTION))
        proj_expected = (
            _flip(union_determinant(g1, g2, 1, -d1, -d2, Route.PROJECTION)) ^ trivial
        )
        if proj != proj_expected:
            failures.append((g1, g2, d1, d2, "projection"))
        can = _flip(union_induced(g1, g2, d1, d2, Route.CANONICAL))
        can_expected = (
            _flip(union_determinant(g1, g2, 1, -d1, -d2, Route.CANONICAL)) ^ trivial
        )
        if can != can_expected:
            failures.append((g1, g2, d1, d2, "canonical"))
    return IdentityReport("union_induced_vs_determinant", len(grid), tuple(failures))


def check_e_node_induced_vs_determinant(
    grid: Iterable[tuple[int, int]] | None = None
) -> IdentityReport:
    """Both induced-orientation node conditions equal the XOR of the
    determinant-level node conditions at (k=1, degree -d) and at the
    trivial line bundle; in particular the projection-route condition is
    NOT(g even)."""
    if grid is None:
        grid = [(g, d) for g in GENUS_RANGE for d in DEGREE_RANGE]
    grid = list(grid)
    failures = []
    for g, d in grid:
        trivial = _flip(e_node_determinant(g, 1, 0, Route.CANONICAL))
        proj = _flip(e_node_induced(g, d, Route.PROJECTION))
        proj_expected = _flip(e_node_determinant(g, 1, -d, Route.PROJECTION)) ^ trivial
        if proj != proj_expected:
            failures.append((g, d, "projection"))
        can = _flip(e_node_induced(g, d, Route.CANONICAL))
        can_expected = _flip(e_node_determinant(g, 1, -d, Route.CANONICAL)) ^ trivial
        if can != can_expected:
            failures.append((g, d, "canonical"))
    return IdentityReport("e_node_induced_vs_determinant", len(grid), tuple(failures))


def check_sin_vs_sinh(order: int = 16) -> IdentityReport:
    """Sin-convention cover coefficients are (-1)^g times the sinh ones."""
    if order < 0:
        raise ValueError("order must be >= 0")
    grid = [
        (h, c1b, g)
        for h in range(0, 7)
        for c1b in (-4, -2, 0, 2, 4, 8)
        for g in range(0, order // 2 + 1)
    ]
    failures = []
    for h, c1b, g in grid:
        sin_value = multicover_coefficient(h, c1b, g, Convention.SIN)
        sinh_value = multicover_coefficient(h, c1b, g, Convention.SINH)
        if sin_value != (-1) ** g * sinh_value:
            failures.append((h, c1b, g))
    return IdentityReport("sin_vs_sinh", len(grid), tuple(failures))


ALL_CHECKS: dict[str, Callable[[], IdentityReport]] = {
    "binomial_parity": check_binomial_parity,
    "union_canonical_vs_cvc": check_union_canonical_vs_cvc,
    "doublet_vs_cvc": check_doublet_vs_cvc,
    "relspin_mod8": check_relspin_mod8,
    "union_induced_vs_determinant": check_union_induced_vs_determinant,
    "e_node_induced_vs_determinant": check_e_node_induced_vs_determinant,
    "sin_vs_sinh": check_sin_vs_sinh,
}


def run_checks(identity_ids: Sequence[str] | None = None) -> list[IdentityReport]:
    """Run the named checks (all of them by default), in registry order."""
    if identity_ids is None:
        identity_ids = list(ALL_CHECKS)
    reports = []
    for identity_id in identity_ids:
        if identity_id not in ALL_CHECKS:
            raise ValueError(
                f"unknown identity {identity_id!r}; known: {', '.join(ALL_CHECKS)}"
            )
        reports.append(ALL_CHECKS[identity_id]())
    return reports
