"""Decorated graphs: derived genus/degree, sign exponents, the closing
congruence, and the seeded generator."""

import pytest

from realgw.graphs import (
    DecoratedGraph,
    EdgeKind,
    FlagDecoration,
    GraphBounds,
    GraphEdge,
    GraphError,
    GraphVertex,
    InvolutionKind,
    congruence_identity_check,
    conj_edge_exponent,
    derive_genus_degree,
    epsilon_gamma,
    generate_random_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    real_edge_exponent,
    vertex_exponent,
)

TAU, ETA = InvolutionKind.TAU, InvolutionKind.ETA


def flag(b=0, p=0, sminus=False):
    return FlagDecoration(b=b, p=p, in_s_minus=sminus)


def single_vertex_graph(genus, n=3, a=(3,), flags=(), edges=()):
    return DecoratedGraph(
        vertices=(GraphVertex(id=0, genus_label=genus, theta=1, flags=flags),),
        edges=edges,
        n=n,
        a=a,
        phi_kind=TAU,
    )


class TestStructure:
    def test_derive_single_real_edge(self):
        graph = single_vertex_graph(
            0,
            flags=(flag(),),
            edges=(GraphEdge(0, EdgeKind.REAL, 1, (0, 0)),),
        )
        assert derive_genus_degree(graph) == (0, 1)

    def test_derive_conjugate_pair(self):
        graph = DecoratedGraph(
            vertices=(
                GraphVertex(0, 0, 1, (flag(),)),
                GraphVertex(1, 0, 2, (flag(),)),
            ),
            edges=(GraphEdge(0, EdgeKind.CONJ, 1, (0, 1)),),
            n=4,
            a=(2, 2),
            phi_kind=ETA,
        )
        assert derive_genus_degree(graph) == (-1, 2)

    def test_derive_edgeless(self):
        assert derive_genus_degree(single_vertex_graph(2)) == (3, 0)

    def test_flag_count_identity_enforced(self):
        graph = single_vertex_graph(
            0, flags=(), edges=(GraphEdge(0, EdgeKind.REAL, 1, (0, 0)),)
        )
        with pytest.raises(GraphError):
            derive_genus_degree(graph)

    def test_real_edge_ends_must_coincide(self):
        with pytest.raises(GraphError):
            GraphEdge(0, EdgeKind.REAL, 1, (0, 1))

    def test_n_minus_k_parity_enforced(self):
        with pytest.raises(GraphError):
            single_vertex_graph(0, n=4, a=(3,))

    def test_unknown_end_rejected(self):
        with pytest.raises(GraphError):
            single_vertex_graph(
                0, flags=(flag(),), edges=(GraphEdge(0, EdgeKind.REAL, 1, (7, 7)),)
            )


class TestExponents:
    def test_epsilon_vanishes_without_real_pairs(self):
        for count in (0, 1):
            edges = tuple(
                GraphEdge(i, EdgeKind.REAL, 1, (0, 0)) for i in range(count)
            )
            graph = single_vertex_graph(
                1, n=5, a=(5,), flags=(flag(),) * count, edges=edges
            )
            assert epsilon_gamma(graph) == 0

    def test_epsilon_examples(self):
        graph = single_vertex_graph(
            0,
            n=5,
            a=(5,),
            flags=(flag(), flag()),
            edges=tuple(GraphEdge(i, EdgeKind.REAL, 1, (0, 0)) for i in range(2)),
        )
        assert epsilon_gamma(graph) == 0  # (5 + 3) * C(2,2) even
        graph2 = DecoratedGraph(
            vertices=(GraphVertex(0, 0, 1, (flag(), flag())),),
            edges=tuple(GraphEdge(i, EdgeKind.REAL, 1, (0, 0)) for i in range(2)),
            n=4,
            a=(),
            phi_kind=TAU,
        )
        assert epsilon_gamma(graph2) == 0  # (4 + 0) * C(2,2) even

    def test_epsilon_parity_precondition(self):
        graph = single_vertex_graph(0, n=3, a=(2, 3, 4))  # |a|=9, k=3: ok
        assert epsilon_gamma(graph) == 0
        bad = single_vertex_graph(0, n=3, a=(2, 2, 4))  # |a|=8, k=3: odd sum
        with pytest.raises(GraphError):
            epsilon_gamma(bad)

    def test_epsilon_invariant_under_relabeling(self):
        graph = generate_random_graph(11)
        relabeled = DecoratedGraph(
            vertices=tuple(
                GraphVertex(v.id + 100, v.genus_label, v.theta, v.flags)
                for v in reversed(graph.vertices)
            ),
            edges=tuple(
                GraphEdge(
                    e.id + 50,
                    e.kind,
                    e.degree,
                    (e.ends[0] + 100, e.ends[1] + 100),
                )
                for e in reversed(graph.edges)
            ),
            n=graph.n,
            a=graph.a,
            phi_kind=graph.phi_kind,
        )
        assert epsilon_gamma(relabeled) == epsilon_gamma(graph)

    @pytest.mark.parametrize(
        "phi,n,abs_a,de,expected",
        [(TAU, 5, 1, 1, 0), (ETA, 5, 1, 1, 1), (TAU, 3, 1, 3, 1)],
    )
    def test_real_edge_exponent(self, phi, n, abs_a, de, expected):
        assert real_edge_exponent(phi, n, abs_a, de) == expected

    def test_real_edge_exponent_rejects_even_degree(self):
        with pytest.raises(GraphError):
            real_edge_exponent(TAU, 5, 1, 2)

    def test_real_edge_exponent_rejects_odd_difference(self):
        with pytest.raises(GraphError):
            real_edge_exponent(TAU, 4, 1, 1)

    def test_real_edge_residue_dependence(self):
        # n - |a| = 0 mod 4: exponent depends only on d(e) mod 4
        for base_de in (1, 3):
            values = {
                real_edge_exponent(TAU, 9, 1, de)
                for de in range(base_de, 40, 4)
            }
            assert len(values) == 1
        # n - |a| = 2 mod 4: constant across odd degrees
        values = {real_edge_exponent(TAU, 7, 1, de) for de in range(1, 40, 2)}
        assert len(values) == 1

    @pytest.mark.parametrize(
        "n,abs_a,de,expected", [(5, 1, 1, 1), (3, 1, 2, 1), (5, 5, 5, 1), (3, 1, 1, 0)]
    )
    def test_conj_edge_exponent(self, n, abs_a, de, expected):
        assert conj_edge_exponent(n, abs_a, de) == expected

    def test_conj_edge_exponent_rejects_odd_product(self):
        with pytest.raises(GraphError):
            conj_edge_exponent(4, 1, 1)

    def test_vertex_exponent(self):
        assert vertex_exponent(GraphVertex(0, 0, 1, ())) == 0
        assert vertex_exponent(GraphVertex(0, 0, 1, (flag(sminus=True),))) == 1
        two = GraphVertex(0, 0, 1, (flag(b=1, sminus=True), flag(sminus=True)))
        assert vertex_exponent(two) == 1
        ignored = GraphVertex(0, 0, 1, (flag(b=1, p=1, sminus=False),))
        assert vertex_exponent(ignored) == 0


class TestCongruence:
    def test_edgeless_genus_one_vertex(self):
        result = congruence_identity_check(single_vertex_graph(1, n=2, a=(1, 1)))
        assert result.holds and (result.lhs, result.rhs) == (0, 0)

    def test_single_real_edge(self):
        graph = single_vertex_graph(
            0,
            n=5,
            a=(5,),
            flags=(flag(),),
            edges=(GraphEdge(0, EdgeKind.REAL, 1, (0, 0)),),
        )
        result = congruence_identity_check(graph)
        assert result.holds and (result.lhs, result.rhs) == (1, 1)

    def test_rejects_mod4_violation(self):
        graph = single_vertex_graph(1, n=2, a=(2, 2))  # |a|-k = 2, not 0 mod 4
        with pytest.raises(GraphError):
            congruence_identity_check(graph)

    def test_rejects_even_real_edge(self):
        graph = single_vertex_graph(
            0,
            n=3,
            a=(3,),
            flags=(flag(),),
            edges=(GraphEdge(0, EdgeKind.REAL, 2, (0, 0)),),
        )
        with pytest.raises(GraphError):
            congruence_identity_check(graph)

    def test_fuzz_sweep(self):
        for seed in range(1, 201):
            graph = generate_random_graph(seed)
            result = congruence_identity_check(graph)
            assert result.holds, f"seed {seed}: {result}"
            g, d = derive_genus_degree(graph)
            assert (g * d) % 2 == 0, f"seed {seed}: d*g odd"


class TestGenerator:
    def test_deterministic(self):
        assert generate_random_graph(7) == generate_random_graph(7)

    def test_seeds_differ(self):
        outputs = {repr(generate_random_graph(seed)) for seed in range(1, 30)}
        assert len(outputs) > 1

    def test_bounds_respected(self):
        bounds = GraphBounds(
            max_vertices=2,
            max_vertex_genus=1,
            max_real_edges=1,
            max_conj_edges=1,
            max_edge_degree=3,
            max_n=5,
            max_multidegree_len=1,
            max_multidegree_entry=3,
            max_flag_label=1,
        )
        for seed in range(1, 60):
            graph = generate_random_graph(seed, bounds)
            assert len(graph.vertices) <= 2
            assert len(graph.edges) <= 2
            assert graph.n <= 5
            assert all(v.genus_label <= 1 for v in graph.vertices)
            # the residue-fixing last entry may use the mod-4 headroom
            assert all(x <= 4 for x in graph.a)
            congruence_identity_check(graph)

    def test_infeasible_bounds(self):
        with pytest.raises(GraphError):
            GraphBounds(max_vertices=0)
        with pytest.raises(GraphError):
            GraphBounds(max_n=1, max_multidegree_len=0)


class TestJson:
    def test_round_trip(self):
        for seed in (1, 5, 9):
            graph = generate_random_graph(seed)
            assert graph_from_json_dict(graph_to_json_dict(graph)) == graph

    def test_real_edge_ends_repeat_vertex_index(self):
        graph = single_vertex_graph(
            0,
            n=5,
            a=(5,),
            flags=(flag(),),
            edges=(GraphEdge(0, EdgeKind.REAL, 1, (0, 0)),),
        )
        doc = graph_to_json_dict(graph)
        assert doc["edges"][0]["ends"] == [0, 0]

    def test_malformed_documents(self):
        with pytest.raises(GraphError):
            graph_from_json_dict({"phi": "sigma"})
        with pytest.raises(GraphError):
            graph_from_json_dict(
                {"phi": "tau", "n": 3, "a": [3], "vertices": [], "edges": []}
            )
        with pytest.raises(GraphError):
            graph_from_json_dict(
                {
                    "phi": "tau",
                    "n": 3,
                    "a": [3],
                    "vertices": [{"genus": 0, "theta": 1, "flags": []}],
                    "edges": [{"kind": "real", "degree": 1}],
                }
            )
