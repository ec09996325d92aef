"""Decorated fixed-point graphs and their localization sign exponents.

A torus-fixed locus of a real map moduli space is recorded by a decorated
graph: vertices labelled by a genus and a fixed-point index, real edges
(invariant under the involution on the graph) and conjugate edge pairs, each
with a covering degree.  Only the quotient data is stored -- the vertex set
V_+, the real edges, and one edge per conjugate pair; a real edge meets one
quotient vertex (listed twice in its ``ends``) and contributes a single
edge-end, while a conjugate pair contributes one end at each of its two
(possibly equal) quotient ends.  Vertex flags record one decoration
(b, p, in S^-) per edge-end at that vertex, so that

    |E_R| + 2 |E_+|  =  |Edg|  =  sum_v len(v.flags).

The arithmetic genus and total degree are derived:

    g = 1 + |Edg| + 2 sum_v (g(v) - 1),
    d = sum over real edges of deg + 2 * (sum over conjugate pairs of deg).

The module computes the global graph sign, the per-edge and per-vertex sign
exponents, and checks the closing mod-2 congruence that ties them all to
(g, d) alone -- on exact rationals, with every intermediate asserted to be
an integer.  Localization weights (the rational-function contributions) are
out of scope; only sign exponents live here.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor


class GraphError(ValueError):
    """A malformed graph or a violated precondition."""


class EdgeKind(enum.Enum):
    REAL = "real"
    CONJ = "conj"


class InvolutionKind(enum.Enum):
    """Topological type of the target involution (fixed circle vs free)."""

    TAU = "tau"
    ETA = "eta"

    @property
    def twist(self) -> int:
        """The summand |phi| in the real-edge sign exponent: 0 tau, 1 eta."""
        return 0 if self is InvolutionKind.TAU else 1


@dataclass(frozen=True)
class FlagDecoration:
    """One edge-end at a vertex: indices b, p and whether it lies in S^-."""

    b: int
    p: int
    in_s_minus: bool

    def __post_init__(self):
        if self.b < 0 or self.p < 0:
            raise GraphError(f"flag labels must be >= 0, got b={self.b}, p={self.p}")


@dataclass(frozen=True)
class GraphVertex:
    id: int
    genus_label: int
    theta: int
    flags: tuple[FlagDecoration, ...] = ()

    def __post_init__(self):
        if self.genus_label < 0:
            raise GraphError(f"vertex genus must be >= 0, got {self.genus_label}")
        if self.theta < 1:
            raise GraphError(f"fixed-point label theta must be >= 1, got {self.theta}")
        object.__setattr__(self, "flags", tuple(self.flags))


@dataclass(frozen=True)
class GraphEdge:
    id: int
    kind: EdgeKind
    degree: int
    ends: tuple[int, int]

    def __post_init__(self):
        if self.degree < 1:
            raise GraphError(f"edge degree must be >= 1, got {self.degree}")
        ends = tuple(self.ends)
        if len(ends) != 2:
            raise GraphError(f"edge ends must list two vertex ids, got {ends}")
        if self.kind is EdgeKind.REAL and ends[0] != ends[1]:
            raise GraphError(
                "a real edge meets a single quotient vertex; its two ends "
                f"must coincide, got {ends}"
            )
        object.__setattr__(self, "ends", ends)


@dataclass(frozen=True)
class DecoratedGraph:
    vertices: tuple[GraphVertex, ...]
    edges: tuple[GraphEdge, ...]
    n: int
    a: tuple[int, ...]
    phi_kind: InvolutionKind

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "a", tuple(self.a))
        if self.n < 1:
            raise GraphError(f"n must be >= 1, got {self.n}")
        if any(x < 1 for x in self.a):
            raise GraphError(f"multidegree entries must be positive, got {self.a}")
        if (self.n - len(self.a)) % 2 != 0:
            raise GraphError(
                f"n - k must be even, got n={self.n}, k={len(self.a)}"
            )
        if not self.vertices:
            raise GraphError("a graph needs at least one vertex")
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise GraphError(f"duplicate vertex ids: {ids}")
        known = set(ids)
        for e in self.edges:
            for end in e.ends:
                if end not in known:
                    raise GraphError(f"edge {e.id} references unknown vertex {end}")

    @property
    def real_edges(self) -> tuple[GraphEdge, ...]:
        return tuple(e for e in self.edges if e.kind is EdgeKind.REAL)

    @property
    def conj_edges(self) -> tuple[GraphEdge, ...]:
        return tuple(e for e in self.edges if e.kind is EdgeKind.CONJ)

    @property
    def abs_a(self) -> int:
        return sum(self.a)

    def validate_structure(self) -> None:
        """Check the edge-end count identity |E_R| + 2|E_+| = sum_v |E_v|."""
        edge_ends = len(self.real_edges) + 2 * len(self.conj_edges)
        flag_count = sum(len(v.flags) for v in self.vertices)
        if edge_ends != flag_count:
            raise GraphError(
                f"edge-end count {edge_ends} (= |E_R| + 2|E_+|) does not "
                f"match the stored flag count {flag_count}"
            )


def derive_genus_degree(graph: DecoratedGraph) -> tuple[int, int]:
    """Arithmetic genus and total degree determined by the decorations."""
    graph.validate_structure()
    edg = len(graph.real_edges) + 2 * len(graph.conj_edges)
    g = 1 + edg + 2 * sum(v.genus_label - 1 for v in graph.vertices)
    d = sum(e.degree for e in graph.real_edges) + 2 * sum(
        e.degree for e in graph.conj_edges
    )
    return g, d


def epsilon_gamma(graph: DecoratedGraph) -> int:
    """Global parity of reordering the real-edge factors of the fixed locus.

    Equals (n + (k + |a|)/2) * C(|E_R|, 2) mod 2 and so vanishes whenever
    the graph has at most one real edge.
    """
    k = len(graph.a)
    total = graph.abs_a
    if (k + total) % 2 != 0:
        raise GraphError(
            f"|a| + k must be even, got |a|={total}, k={k}"
        )
    r = len(graph.real_edges)
    return ((graph.n + (k + total) // 2) * comb(r, 2)) % 2


def real_edge_exponent(
    phi_kind: InvolutionKind, n: int, abs_a: int, de: int
) -> int:
    """Sign exponent of one real-edge contribution.

    Parity of |phi| + (d(e)+1)/2 + floor((n-|a|)/4 * d(e)); the edge degree
    must be odd (even degrees contribute zero and carry no sign).
    """
    if de < 1 or de % 2 == 0:
        raise GraphError(f"real edge degree must be odd and positive, got {de}")
    if (n - abs_a) % 2 != 0:
        raise GraphError(f"n - |a| must be even, got n={n}, |a|={abs_a}")
    floor_term = floor(Fraction(n - abs_a, 4) * de)
    return (phi_kind.twist + (de + 1) // 2 + floor_term) % 2


def conj_edge_exponent(n: int, abs_a: int, de: int) -> int:
    """Sign exponent of one conjugate-pair contribution: parity of
    (n-|a|) d(e)/2 - 1."""
    if de < 1:
        raise GraphError(f"edge degree must be >= 1, got {de}")
    if ((n - abs_a) * de) % 2 != 0:
        raise GraphError(
            f"(n-|a|)*d(e) must be even, got n-|a|={n - abs_a}, d(e)={de}"
        )
    return ((n - abs_a) * de // 2 - 1) % 2


def vertex_exponent(vertex: GraphVertex) -> int:
    """Vertex sign exponent: parity of sum over S^- flags of (1 + b + p)."""
    return sum(1 + f.b + f.p for f in vertex.flags if f.in_s_minus) % 2


@dataclass(frozen=True)
class CongruenceResult:
    holds: bool
    lhs: int
    rhs: int


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise GraphError(f"non-integral intermediate: {what} = {value}")
    return value.numerator


def congruence_identity_check(graph: DecoratedGraph) -> CongruenceResult:
    """Check the closing congruence tying the sign exponents to (g, d).

    Both sides are computed mod 2 with exact rational intermediates:

      LHS = (n-2-k)/2 C(|E_R|,2) + sum_{real e} (1 + floor((n-|a|)/4 d(e)))
            + sum_{conj e} ((n-|a|)/2 d(e) - 1) + sum_v (g(v) - 1 + |E_v|),
      RHS = (g + (n-|a|)d/2)(g + (n-|a|)d/2 - 1)/2 + (g - 1).

    Preconditions (the nonzero-contribution regime): |a| = k mod 4, every
    real edge degree odd; n - |a| even then follows from n - k even.
    """
    graph.validate_structure()
    n = graph.n
    k = len(graph.a)
    total = graph.abs_a
    if (total - k) % 4 != 0:
        raise GraphError(f"|a| must equal k mod 4, got |a|={total}, k={k}")
    for e in graph.real_edges:
        if e.degree % 2 == 0:
            raise GraphError(
                f"real edge {e.id} has even degree {e.degree}; the congruence "
                "is stated for odd real-edge degrees"
            )
    nu = n - total
    if nu % 2 != 0:
        raise GraphError(f"n - |a| must be even, got {nu}")

    r = len(graph.real_edges)
    lhs = _as_int(Fraction(n - 2 - k, 2) * comb(r, 2), "(n-2-k)/2 * C(|E_R|,2)")
    for e in graph.real_edges:
        lhs += 1 + floor(Fraction(nu, 4) * e.degree)
    for e in graph.conj_edges:
        lhs += _as_int(Fraction(nu, 2) * e.degree - 1, "(n-|a|)/2 d(e) - 1")
    for v in graph.vertices:
        lhs += v.genus_label - 1 + len(v.flags)

    g, d = derive_genus_degree(graph)
    m = _as_int(Fraction(g) + Fraction(nu, 2) * d, "g + (n-|a|)d/2")
    rhs = m * (m - 1) // 2 + (g - 1)

    return CongruenceResult(holds=lhs % 2 == rhs % 2, lhs=lhs % 2, rhs=rhs % 2)


# --- random graphs for fuzzing the congruence ---


@dataclass(frozen=True)
class GraphBounds:
    """Caps for the random graph generator."""

    max_vertices: int = 5
    max_vertex_genus: int = 3
    max_real_edges: int = 4
    max_conj_edges: int = 4
    max_edge_degree: int = 7
    max_n: int = 9
    max_multidegree_len: int = 3
    max_multidegree_entry: int = 6
    max_flag_label: int = 4

    def __post_init__(self):
        if (
            self.max_vertices < 1
            or self.max_n < 1
            or self.max_edge_degree < 1
            or self.max_vertex_genus < 0
            or self.max_real_edges < 0
            or self.max_conj_edges < 0
            or self.max_multidegree_len < 0
            or self.max_multidegree_entry < 1
            or self.max_flag_label < 0
        ):
            raise GraphError(f"infeasible bounds: {self}")
        if self.max_n == 1 and self.max_multidegree_len == 0:
            raise GraphError(
                "infeasible bounds: n=1 needs an odd multidegree length"
            )


def generate_random_graph(
    seed: int, bounds: GraphBounds | None = None
) -> DecoratedGraph:
    """Deterministic random graph satisfying every structural invariant and
    the nonzero-contribution preconditions of the congruence check."""
    if bounds is None:
        bounds = GraphBounds()
    rng = random.Random(seed)

    ns = [
        n
        for n in range(1, bounds.max_n + 1)
        if any(
            k % 2 == n % 2 for k in range(0, bounds.max_multidegree_len + 1)
        )
    ]
    if not ns:
        raise GraphError(f"infeasible bounds: {bounds}")
    n = rng.choice(ns)
    k = rng.choice(
        [x for x in range(0, bounds.max_multidegree_len + 1) if x % 2 == n % 2]
    )

    # Multidegree with |a| = k mod 4: the last entry absorbs the residue.
    a: list[int] = [
        rng.randint(1, bounds.max_multidegree_entry) for _ in range(max(k - 1, 0))
    ]
    if k > 0:
        need = (k - sum(a)) % 4
        last_cap = max(4, bounds.max_multidegree_entry)
        candidates = [x for x in range(1, last_cap + 1) if x % 4 == need]
        a.append(rng.choice(candidates))

    phi_kind = rng.choice([InvolutionKind.TAU, InvolutionKind.ETA])
    num_vertices = rng.randint(1, bounds.max_vertices)
    genus_labels = [
        rng.randint(0, bounds.max_vertex_genus) for _ in range(num_vertices)
    ]
    thetas = [rng.randint(1, n) for _ in range(num_vertices)]

    odd_degrees = list(range(1, bounds.max_edge_degree + 1, 2))
    num_real = rng.randint(0, bounds.max_real_edges)
    num_conj = rng.randint(0, bounds.max_conj_edges)

    edges: list[GraphEdge] = []
    incidences: list[list[FlagDecoration]] = [[] for _ in range(num_vertices)]

    def new_flag() -> FlagDecoration:
        return FlagDecoration(
            b=rng.randint(0, bounds.max_flag_label),
            p=rng.randint(0, bounds.max_flag_label),
            in_s_minus=rng.random() < 0.5,
        )

    for _ in range(num_real):
        v = rng.randrange(num_vertices)
        edges.append(
            GraphEdge(
                id=len(edges),
                kind=EdgeKind.REAL,
                degree=rng.choice(odd_degrees),
                ends=(v, v),
            )
        )
        incidences[v].append(new_flag())
    for _ in range(num_conj):
        u = rng.randrange(num_vertices)
        w = rng.randrange(num_vertices)
        edges.append(
            GraphEdge(
                id=len(edges),
                kind=EdgeKind.CONJ,
                degree=rng.randint(1, bounds.max_edge_degree),
                ends=(u, w),
            )
        )
        incidences[u].append(new_flag())
        incidences[w].append(new_flag())

    vertices = tuple(
        GraphVertex(
            id=i,
            genus_label=genus_labels[i],
            theta=thetas[i],
            flags=tuple(incidences[i]),
        )
        for i in range(num_vertices)
    )
    graph = DecoratedGraph(
        vertices=vertices,
        edges=tuple(edges),
        n=n,
        a=tuple(a),
        phi_kind=phi_kind,
    )
    graph.validate_structure()
    return graph


# --- JSON wire format ---


def graph_to_json_dict(graph: DecoratedGraph) -> dict:
    """Graph document; edge ends are indices into the vertices array."""
    index = {v.id: i for i, v in enumerate(graph.vertices)}
    return {
        "n": graph.n,
        "a": list(graph.a),
        "phi": graph.phi_kind.value,
        "vertices": [
            {
                "genus": v.genus_label,
                "theta": v.theta,
                "flags": [
                    {"b": f.b, "p": f.p, "sminus": f.in_s_minus} for f in v.flags
                ],
            }
            for v in graph.vertices
        ],
        "edges": [
            {
                "kind": e.kind.value,
                "degree": e.degree,
                "ends": [index[e.ends[0]], index[e.ends[1]]],
            }
            for e in graph.edges
        ],
    }


def graph_from_json_dict(doc: dict) -> DecoratedGraph:
    try:
        phi_kind = InvolutionKind(doc["phi"])
    except (KeyError, ValueError):
        raise GraphError(f"phi must be 'tau' or 'eta', got {doc.get('phi')!r}")
    try:
        vertices = tuple(
            GraphVertex(
                id=i,
                genus_label=int(v["genus"]),
                theta=int(v["theta"]),
                flags=tuple(
                    FlagDecoration(
                        b=int(f["b"]), p=int(f["p"]), in_s_minus=bool(f["sminus"])
                    )
                    for f in v.get("flags", [])
                ),
            )
            for i, v in enumerate(doc["vertices"])
        )
        edges = tuple(
            GraphEdge(
                id=i,
                kind=EdgeKind(e["kind"]),
                degree=int(e["degree"]),
                ends=(int(e["ends"][0]), int(e["ends"][1])),
            )
            for i, e in enumerate(doc["edges"])
        )
        return DecoratedGraph(
            vertices=vertices,
            edges=edges,
            n=int(doc["n"]),
            a=tuple(int(x) for x in doc.get("a", [])),
            phi_kind=phi_kind,
        )
    except (KeyError, IndexError, TypeError) as exc:
        raise GraphError(f"malformed graph document: {exc!r}")
