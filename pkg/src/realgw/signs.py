"""Orientation-comparison predicates over integer descriptors.

Each comparison of two natural orientations (canonical vs projection on
determinants of real Cauchy-Riemann operators, intrinsic vs pullback on
nodal strata, relative-spin vs stabilization, ...) depends only on a handful
of integers: genus, rank, degree, the pairing <c1,B>.  This module encodes
every such comparison as a total pure predicate returning a
:class:`Comparison` -- ``preserves`` means the two orientations agree (the
relevant diagram commutes), and ``sign`` is the derived +-1 factor.

Two stabilization routes orient the moduli side: PROJECTION stabilizes by
the summand pair L + conj(L)-bar with its projection orientation, CANONICAL
by the doubled pair 2L with its canonical orientation (available only when
the line bundle carries a conjugation lift).  Determinant-level variants
and moduli-level routes share the :class:`Route` enum.

Geometry is reduced to integer shadows throughout: bundles, spin structures
and homotopy classes are never represented.  Negative genus is legal
everywhere (disconnected domains satisfy g - 1 = sum (g_i - 1)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence


class Route(enum.Enum):
    """Which distinguished orientation backs a comparison."""

    PROJECTION = "projection"
    CANONICAL = "canonical"

    @classmethod
    def from_string(cls, name: str) -> "Route":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(
                f"route must be 'projection' or 'canonical', got {name!r}"
            )


class RelSpinVariant(enum.Enum):
    """Which pair of orientations a relative-spin comparison weighs."""

    RELSPIN_VS_PROJECTION = "relspin-vs-projection"
    RELSPIN_VS_CANONICAL = "relspin-vs-canonical"
    SPIN_VS_CANONICAL = "spin-vs-canonical"

    @classmethod
    def from_string(cls, name: str) -> "RelSpinVariant":
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(v.value for v in cls)
            raise ValueError(f"relspin variant must be one of {choices}, got {name!r}")


@dataclass(frozen=True)
class Comparison:
    """Outcome of an orientation comparison.

    ``preserves`` is the canonical boolean (orientations agree / diagram
    commutes); ``sign`` is +1 exactly when it holds.  ``condition`` is the
    evaluated parity expression, for humans and the CLI.
    """

    preserves: bool
    condition: str

    @property
    def sign(self) -> int:
        return 1 if self.preserves else -1


def _parity_cmp(value: int, formula: str) -> Comparison:
    word = "even" if value % 2 == 0 else "odd"
    return Comparison(value % 2 == 0, f"{formula} = {value} is {word}")


def _require_rank(k: int) -> None:
    if k < 1:
        raise ValueError(f"rank must be >= 1, got {k}")


def _require_even(name: str, value: int) -> None:
    if value % 2 != 0:
        raise ValueError(f"{name} must be even, got {value}")


def _require_odd_dim(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"complex dimension n must be odd and positive, got {n}")


def cr_index(g: int, k: int, d: int) -> int:
    """Complex index (1-g)k + d of a rank-k degree-d CR operator on genus g."""
    _require_rank(k)
    return (1 - g) * k + d


def cvc_parity(g: int, k: int, d: int) -> Comparison:
    """Canonical (doubled-pair) vs projection orientation on the determinant.

    Agrees iff ind(ind-1)/2 is even, where ind = (1-g)k + d.
    """
    ind = cr_index(g, k, d)
    return _parity_cmp(
        ind * (ind - 1) // 2, f"ind(ind-1)/2 with ind=(1-g)k+d={ind}"
    )


def conj_pullback_parity(g: int, k: int, d: int) -> Comparison:
    """Conjugate-pullback identification vs the two complex orientations.

    Agrees iff the index (1-g)k + d is even.
    """
    ind = cr_index(g, k, d)
    return _parity_cmp(ind, "ind=(1-g)k+d")


def union_determinant(
    g1: int, g2: int, k: int, d1: int, d2: int, route: Route
) -> Comparison:
    """Disjoint-union factorization of the determinant line.

    Projection orientations always survive the split; canonical orientations
    survive iff the product of the two component indices is even.
    """
    _require_rank(k)
    if route is Route.PROJECTION:
        return Comparison(True, "always preserves")
    ind1 = cr_index(g1, k, d1)
    ind2 = cr_index(g2, k, d2)
    return _parity_cmp(ind1 * ind2, f"ind1*ind2 with ind1={ind1}, ind2={ind2}")


def doublet_determinant(g: int, k: int, d2: int, route: Route) -> Comparison:
    """Restriction of a doublet determinant to one half.

    Projection vs complex agrees iff (1-g)k + d2 is even (d2 the degree on
    the other half); canonical vs complex (which presumes a conjugation lift
    on the bundle) agrees unconditionally.
    """
    _require_rank(k)
    if route is Route.CANONICAL:
        return Comparison(True, "always preserves")
    ind = (1 - g) * k + d2
    return _parity_cmp(ind, "(1-g)k+d2")


def conj_node_determinant(k: int, route: Route) -> Comparison:
    """Normalization at a conjugate node pair vs the evaluation factor.

    Projection orientations survive iff the rank is even; canonical
    orientations always survive.
    """
    _require_rank(k)
    if route is Route.CANONICAL:
        return Comparison(True, "always preserves")
    return _parity_cmp(k, "rank k")


def e_node_determinant(g: int, k: int, d: int, route: Route) -> Comparison:
    """Normalization at an isolated real node vs the quotient factor.

    Projection orientations survive iff the rank k is even; canonical
    orientations survive iff k(g + d) is even.
    """
    _require_rank(k)
    if route is Route.PROJECTION:
        return _parity_cmp(k, "rank k")
    return _parity_cmp(k * (g + d), f"k(g+d) with g+d={g + d}")


# --- comparisons of the orientations induced by a real orientation ---


def union_induced(g1: int, g2: int, d1: int, d2: int, route: Route) -> Comparison:
    """Induced-orientation analogue of the disjoint-union split."""
    if route is Route.PROJECTION:
        return _parity_cmp(
            (g1 - 1) * (g2 - 1), f"(g1-1)(g2-1) = ({g1 - 1})({g2 - 1})"
        )
    value = (g1 - 1) * (g2 - 1) + (g1 - 1 + d1) * (g2 - 1 + d2)
    return _parity_cmp(value, "(g1-1)(g2-1) + (g1-1+d1)(g2-1+d2)")


def doublet_induced(g: int, d2: int, route: Route) -> Comparison:
    """Induced vs complex orientation when restricting a doublet to a half."""
    if route is Route.CANONICAL:
        return Comparison(True, "always preserves")
    return _parity_cmp(g - 1 + d2, "g-1+d2")


def conj_node_induced(route: Route) -> Comparison:
    """Induced orientations across a conjugate-pair normalization square."""
    if route is Route.PROJECTION:
        return Comparison(False, "always flips")
    return Comparison(True, "always preserves")


def e_node_induced(g: int, d: int, route: Route) -> Comparison:
    """Induced orientations across an isolated-real-node normalization."""
    if route is Route.PROJECTION:
        return _parity_cmp(g - 1, "g-1")
    return _parity_cmp(d, "deg d")


def relspin_determinant(deg_v: int, variant: RelSpinVariant) -> Comparison:
    """Relative-spin / spin orientation vs an induced one, over the disc pair.

    The relative-spin orientation matches the projection-route one iff
    deg V is divisible by 4, and the canonical-route one iff deg V mod 8 is
    0 or 6.  The plain-spin comparison is stated only for deg V in 4Z, where
    it matches the canonical-route orientation.
    """
    _require_even("deg V", deg_v)
    if variant is RelSpinVariant.RELSPIN_VS_PROJECTION:
        r = deg_v % 4
        return Comparison(r == 0, f"deg V = {deg_v} is {r} mod 4 (agree iff 0)")
    if variant is RelSpinVariant.RELSPIN_VS_CANONICAL:
        r = deg_v % 8
        return Comparison(
            r in (0, 6), f"deg V = {deg_v} is {r} mod 8 (agree iff 0 or 6)"
        )
    if deg_v % 4 != 0:
        raise ValueError(
            "spin-vs-canonical comparison is only stated for deg V in 4Z, "
            f"got {deg_v}"
        )
    return Comparison(True, "always preserves (deg V in 4Z)")


def union_moduli(
    n: int, g1: int, g2: int, c1b1: int, c1b2: int, route: Route
) -> Comparison:
    """Moduli-space product orientation vs the disjoint-union orientation."""
    _require_odd_dim(n)
    _require_even("c1B1", c1b1)
    _require_even("c1B2", c1b2)
    base = (n - 1) * (g1 - 1) * (g2 - 1) // 2
    if route is Route.PROJECTION:
        return _parity_cmp(base, "(n-1)(g1-1)(g2-1)/2")
    value = base + (g1 - 1 + c1b1 // 2) * (g2 - 1 + c1b2 // 2)
    return _parity_cmp(
        value, "(n-1)(g1-1)(g2-1)/2 + (g1-1+c1B1/2)(g2-1+c1B2/2)"
    )


def doublet_moduli(
    g: int, s_minus: int, route: Route, c1l_phi_b: int | None = None
) -> Comparison:
    """Doubling embedding of a complex moduli space vs its complex orientation.

    The projection route needs the pairing <c1(L), phi_* B> alongside the
    count |S^-| of negatively-doubled marked points; the canonical route
    needs only the genus and |S^-|.
    """
    if s_minus < 0:
        raise ValueError(f"|S^-| must be >= 0, got {s_minus}")
    if route is Route.PROJECTION:
        if c1l_phi_b is None:
            raise ValueError(
                "projection-route doubling comparison needs c1l_phi_b"
            )
        return _parity_cmp(c1l_phi_b + s_minus, "<c1(L),phi_*B> + |S^-|")
    return _parity_cmp(g - 1 + s_minus, "(g-1) + |S^-|")


def conj_node_moduli(route: Route) -> Comparison:
    """Intrinsic vs pullback orientation on the conjugate-pair-node stratum."""
    if route is Route.PROJECTION:
        return Comparison(True, "always preserves")
    return Comparison(False, "always flips")


def e_node_moduli(g: int, c1b: int, route: Route) -> Comparison:
    """Intrinsic vs pullback orientation on the isolated-real-node stratum."""
    _require_even("c1B", c1b)
    if route is Route.PROJECTION:
        return Comparison(False, "always flips")
    return _parity_cmp(g + c1b // 2, "g + c1B/2")


def relspin_moduli(
    c1b: int,
    variant: RelSpinVariant,
    orientable_fixed_line: bool = False,
) -> Comparison:
    """Relative-spin / spin orientation of the rational-map space vs induced.

    The plain-spin claim presumes the fixed-locus restriction of the
    orienting line bundle is orientable; pass ``orientable_fixed_line=True``
    to assert that hypothesis (the comparison is an unconditional flip).
    """
    _require_even("c1B", c1b)
    if variant is RelSpinVariant.RELSPIN_VS_PROJECTION:
        r = c1b % 4
        return Comparison(r != 0, f"<c1,B> = {c1b} is {r} mod 4 (agree iff nonzero)")
    if variant is RelSpinVariant.RELSPIN_VS_CANONICAL:
        r = c1b % 8
        return Comparison(
            r in (2, 4), f"<c1,B> = {c1b} is {r} mod 8 (agree iff 2 or 4)"
        )
    if not orientable_fixed_line:
        raise ValueError(
            "spin-vs-canonical moduli comparison is only stated when the "
            "fixed-locus line bundle is orientable; pass "
            "orientable_fixed_line=True to assert it"
        )
    return Comparison(False, "always flips (orientable fixed-locus bundle)")


def forget_boundary_sign(node_side: str, route: Route) -> Comparison:
    """Sign of forgetting a conjugate marked pair on a boundary-type stratum.

    +1 when the ghost bubble carries the plus point of the forgotten pair,
    -1 when it carries the minus point; identical on both routes.
    """
    if node_side not in ("plus", "minus"):
        raise ValueError(f"node_side must be 'plus' or 'minus', got {node_side!r}")
    if node_side == "plus":
        return Comparison(True, "sign +1 for the plus side")
    return Comparison(False, "sign -1 for the minus side")


# --- dimension, twisting, existence and parity facts ---


@dataclass(frozen=True)
class ModuliDescriptor:
    """Integer shadow of a real map moduli problem.

    ``n`` is the odd complex dimension of the target, ``c1b`` the even
    pairing <c1(X,omega), B>; ``c1lb`` optionally records <c1(L), B>, which
    must satisfy 2*c1lb = c1b when supplied.
    """

    g: int
    ell: int
    n: int
    c1b: int
    c1lb: int | None = None

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError(f"marked-pair count ell must be >= 0, got {self.ell}")
        _require_odd_dim(self.n)
        _require_even("c1B", self.c1b)
        if self.c1lb is not None and 2 * self.c1lb != self.c1b:
            raise ValueError(
                f"c1LB = {self.c1lb} must satisfy 2*c1LB = c1B = {self.c1b}"
            )


def virtual_dimension(m: ModuliDescriptor) -> int:
    """Expected dimension (1-g)(n-3) + 2*ell + <c1,B>; always even here."""
    return (1 - m.g) * (m.n - 3) + 2 * m.ell + m.c1b


def twist_exponent(g: int, fixed_components: int) -> int:
    """Parity of the final orientation twist: (g-1) + number of fixed circles."""
    if fixed_components < 0:
        raise ValueError(
            f"fixed_components must be >= 0, got {fixed_components}"
        )
    return (g - 1 + fixed_components) % 2


def line_conjugation_exists(
    has_fixed_locus: bool, g: int, half_degree: int
) -> bool:
    """Whether a degree-2*half_degree line bundle over a genus-g symmetric
    surface admits a conjugation lift: yes iff the fixed locus is nonempty
    or g + half_degree is odd."""
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return has_fixed_locus or (g + half_degree) % 2 == 1


@dataclass(frozen=True)
class CiParityFacts:
    sum_parity_ok: bool
    eta_mod4_ok: bool


def ci_parity_facts(k: int, a: Sequence[int]) -> CiParityFacts:
    """Multidegree parity facts for a codimension-k complete intersection.

    ``sum_parity_ok``: |a| = k mod 2.  ``eta_mod4_ok``: if the odd entries
    of a come in pairs then |a| = k mod 4; evaluated on the given tuple.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if any(x < 1 for x in a):
        raise ValueError("multidegree entries must be positive")
    total = sum(a)
    odd_count = sum(1 for x in a if x % 2 == 1)
    return CiParityFacts(
        sum_parity_ok=(total - k) % 2 == 0,
        eta_mod4_ok=(odd_count % 2 == 1) or ((total - k) % 4 == 0),
    )


def arss_condition(deg_l: int, m: int, m1: int) -> bool:
    """Whether the associated-relative-spin and stabilization orientations
    agree over a separating fixed locus: deg L - m*m1 - m1(m1-1)/2 in 4Z,
    with m fixed circles of which m1 carry a nonorientable restriction."""
    if m < 1:
        raise ValueError(f"fixed-circle count m must be >= 1, got {m}")
    if not 0 <= m1 <= m:
        raise ValueError(f"m1 must lie in [0, {m}], got {m1}")
    return (deg_l - m * m1 - m1 * (m1 - 1) // 2) % 4 == 0


def arss_cross_term(edge_degs: Sequence[int]) -> int:
    """Parity of sum_{i<j} (1 + (d_i - 1)(d_j - 1)) over sphere components."""
    degs = list(edge_degs)
    total = 0
    for i in range(len(degs)):
        for j in range(i + 1, len(degs)):
            total += 1 + (degs[i] - 1) * (degs[j] - 1)
    return total % 2


@dataclass(frozen=True)
class OrientationEpsilons:
    eps_conv: int
    eps_factor: int


def orientcomp_epsilons(g: int, c1b: int, n: int) -> OrientationEpsilons:
    """Sign exponents separating the orientation conventions.

    ``eps_conv`` = parity of (g + c1b/2)(g - 1 + c1b/2)/2 separates the two
    stabilization routes; ``eps_factor`` = parity of (n-1)/2 * g(g-1)/2
    separates canonical vs projection orientation of the doubled trivial
    factors.
    """
    _require_even("c1B", c1b)
    _require_odd_dim(n)
    u = g + c1b // 2
    eps_conv = (u * (u - 1) // 2) % 2
    eps_factor = ((n - 1) // 2 * (g * (g - 1) // 2)) % 2
    return OrientationEpsilons(eps_conv=eps_conv, eps_factor=eps_factor)
