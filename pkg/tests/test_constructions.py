"""
Tests for named graphs, diamond inflation, Whitney and bipartite pairs,
the generalized K_{3,3} cases and the fixture catalog.
"""

import json
import os
import sys
import tempfile
import unittest
from itertools import combinations, product

# Add the repository root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.constructions import (
    CASE_TABLE,
    BipartitePairSpec,
    FixtureCatalog,
    InflationSpec,
    ThornAssignment,
    VertexRole,
    bipartite_pair,
    diamond_inflate,
    inflate_edge_isomorphism,
    is_witness,
    k33_case,
    named_graph,
    search_whitney_widths,
    solve_thorn_equation,
    special_bipartite_spec,
    thorn_case,
    whitney_model,
    whitney_pair,
)
from src.constructions.inflation import identity_edge_map
from src.graph_core.graph import Graph, degree_sequence, is_connected
from src.iso import are_isomorphic, canonical_form, verify_pk_isomorphism
from src.pathgraph import build_path_graph, enumerate_paths, find_thorns, isolated_paths
from src.utils.errors import (
    GraphRangeError,
    InfeasibleThornsError,
    InflationConditionError,
    StructuralError,
    TypeExclusionError,
    UnsupportedCaseError,
)


SLOW = os.getenv("PK_SLOW_TESTS") == "1"


def thorns(*values):
    return ThornAssignment(values=values)


def p3_isomorphic(g, h):
    return are_isomorphic(build_path_graph(g, 3).pgraph, build_path_graph(h, 3).pgraph) is not None


class NamedGraphTest(unittest.TestCase):
    """Named families and their numbering."""

    def test_sw(self):
        sw = named_graph("SW")
        self.assertEqual(sw.n, 7)
        self.assertEqual(degree_sequence(sw), [3, 2, 2, 2, 1, 1, 1])
        self.assertEqual(sw.neighbors(0), [1, 2, 3])
        self.assertTrue(is_connected(sw))

    def test_families(self):
        self.assertEqual(named_graph("cycle", 6).edge_count, 6)
        self.assertEqual(len(enumerate_paths(named_graph("complete-bipartite", 3, 3), 3)), 18)
        self.assertEqual(named_graph("book", 2).edges(), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        self.assertEqual(named_graph("spider", 2, 2, 1).edges(), [(0, 1), (0, 3), (0, 5), (1, 2), (3, 4)])
        self.assertEqual(degree_sequence(named_graph("petersen")), [3] * 10)
        self.assertEqual(named_graph("path", 1), Graph(1))

    def test_invalid_parameters(self):
        for name, params in (("cycle", (2,)), ("path", (3, 4)), ("sw", (1,)), ("nope", ()),
                             ("spider", ()), ("star", (0,)), ("whitney", (7,))):
            with self.assertRaises(GraphRangeError, msg=name):
                named_graph(name, *params)


class WhitneyModelTest(unittest.TestCase):
    """W_i, W_i' and phi_i."""

    def test_type_six_is_k4_on_both_sides(self):
        model = whitney_model(6)
        k4 = named_graph("complete", 4)
        self.assertEqual(model.w, k4)
        self.assertEqual(model.wp, k4)
        self.assertEqual(model.phi[(0, 1)], (0, 1))
        self.assertEqual(model.phi[(2, 3)], (2, 3))

    def test_type_three_is_claw_and_triangle(self):
        model = whitney_model(3)
        self.assertEqual(model.w, named_graph("star", 3))
        self.assertEqual(model.wp, named_graph("complete", 3))
        self.assertEqual(model.phi, {(0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (1, 2)})

    def test_sizes(self):
        self.assertEqual([whitney_model(i).w.edge_count for i in (3, 4, 5, 6)], [3, 4, 5, 6])
        self.assertEqual(whitney_model(5).wp.edges(), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        self.assertEqual(whitney_model(4).wp.edges(), [(0, 1), (0, 2), (0, 3), (1, 2)])

    def test_phi_preserves_edge_adjacency(self):
        for i in (3, 4, 5, 6):
            phi = whitney_model(i).phi
            self.assertEqual(len(set(phi.values())), len(phi))
            for e, f in combinations(phi, 2):
                self.assertEqual(bool(set(e) & set(f)), bool(set(phi[e]) & set(phi[f])), (i, e, f))

    def test_unknown_type(self):
        with self.assertRaises(GraphRangeError):
            whitney_model(2)


class ThornEquationTest(unittest.TestCase):
    """The thorn equation against the eight-case table."""

    def test_examples(self):
        self.assertEqual(solve_thorn_equation(4, thorns(1, 0, 0, 1)), (0, 1, 1, 0))
        self.assertEqual(solve_thorn_equation(6, thorns(1, 1, 1, 1)), (1, 1, 1, 1))
        self.assertEqual(solve_thorn_equation(3, thorns(0, 0, 0, 0)), (0, 0, 0))
        with self.assertRaises(InfeasibleThornsError) as ctx:
            solve_thorn_equation(6, thorns(1, 0, 0, 0))
        self.assertIn("t_u = 1/2", str(ctx.exception))
        with self.assertRaises(TypeExclusionError) as ctx:
            solve_thorn_equation(3, thorns(0, 1, 1, 0))
        self.assertIn("case (vi)", str(ctx.exception))

    def test_full_table(self):
        rows = {source: (name, target, excluded) for name, source, target, excluded in CASE_TABLE}
        accepted = {i: 0 for i in (3, 4, 5, 6)}
        for values, i in product(product((0, 1), repeat=4), (3, 4, 5, 6)):
            t = thorns(*values)
            if values not in rows:
                self.assertIsNone(thorn_case(t))
                with self.assertRaises(InfeasibleThornsError):
                    solve_thorn_equation(i, t)
                continue
            name, target, excluded = rows[values]
            self.assertEqual(thorn_case(t), name)
            if i in excluded:
                with self.assertRaises(TypeExclusionError):
                    solve_thorn_equation(i, t)
                continue
            self.assertEqual(solve_thorn_equation(i, t), target[:3] if i == 3 else target)
            accepted[i] += 1
        self.assertEqual(accepted, {3: 4, 4: 6, 5: 7, 6: 8})

    def test_assignment_rejects_other_values(self):
        with self.assertRaises(ValueError):
            ThornAssignment(values=(2, 0, 0, 0))


class DiamondInflationTest(unittest.TestCase):
    """diamond_inflate and inflate_edge_isomorphism."""

    def test_claw_gives_sw(self):
        result = diamond_inflate(InflationSpec.uniform(named_graph("star", 3)))
        self.assertIsNotNone(are_isomorphic(result.graph, named_graph("sw")))

    def test_triangle_gives_six_cycle(self):
        result = diamond_inflate(InflationSpec.uniform(named_graph("complete", 3)))
        self.assertIsNotNone(are_isomorphic(result.graph, named_graph("cycle", 6)))

    def test_wide_edge_gives_four_cycle(self):
        result = diamond_inflate(InflationSpec.uniform(named_graph("complete", 2), width=2))
        self.assertEqual(result.graph.edges(), [(0, 2), (0, 3), (1, 2), (1, 3)])
        self.assertEqual([o.role for o in result.provenance],
                         [VertexRole.BASE, VertexRole.BASE, VertexRole.MIDDLE, VertexRole.MIDDLE])

    def test_vertex_counts_and_degrees(self):
        base = named_graph("complete", 4)
        spec = InflationSpec.from_lists(base, [1, 2, 3, 1, 2, 3], [0, 1, 2, 3])
        result = diamond_inflate(spec)
        self.assertEqual(result.graph.n, 4 + 12 + 6)
        self.assertEqual([o.vertex for o in result.provenance], list(range(result.graph.n)))
        for origin in result.provenance:
            if origin.role == VertexRole.MIDDLE:
                self.assertEqual(result.graph.neighbors(origin.vertex), list(origin.origin))
            elif origin.role == VertexRole.LEAF:
                self.assertEqual(result.graph.neighbors(origin.vertex), [origin.origin[0]])
        # Base edges are replaced, not kept.
        self.assertFalse(result.graph.adjacent(0, 1))
        middles = [o for o in result.provenance if o.role == VertexRole.MIDDLE]
        self.assertEqual([(o.origin, o.index) for o in middles[:3]], [((0, 1), 0), ((0, 2), 0), ((0, 2), 1)])

    def test_spec_validation(self):
        base = named_graph("path", 3)
        with self.assertRaises(GraphRangeError):
            InflationSpec.from_lists(base, [1], [0, 0, 0])
        with self.assertRaises(ValueError):
            InflationSpec.from_lists(base, [0, 1], [0, 0, 0])
        with self.assertRaises(ValueError):
            InflationSpec(base=base, widths={(0, 1): 1, (1, 2): 1}, thorns={0: 0, 1: -1, 2: 0})

    def test_conditions_are_checked(self):
        k2 = named_graph("complete", 2)
        phi = identity_edge_map(k2)
        with self.assertRaises(InflationConditionError) as ctx:
            inflate_edge_isomorphism(k2, k2, phi, {(0, 1): 1}, [1, 0], [0, 0])
        self.assertIn("thorn sums differ", str(ctx.exception))
        with self.assertRaises(InflationConditionError) as ctx:
            inflate_edge_isomorphism(k2, k2, phi, {(0, 1): 1}, [0, 0], [0, 0], image_widths={(0, 1): 2})
        self.assertIn("width of 0-1", str(ctx.exception))
        with self.assertRaises(StructuralError):
            inflate_edge_isomorphism(k2, k2, {}, {(0, 1): 1}, [0, 0], [0, 0])

    def test_fewer_two_thorns_get_star_components(self):
        base = Graph.from_edges(3, [(0, 1)])
        pair = inflate_edge_isomorphism(base, base, identity_edge_map(base), {(0, 1): 1}, [0, 0, 2], [0, 0, 0])
        self.assertEqual(len(find_thorns(pair.first.graph)[1]), len(find_thorns(pair.second.graph)[1]))
        stars = [o for o in pair.second.provenance if o.role == VertexRole.STAR]
        self.assertEqual(len(stars), 3)
        self.assertEqual(pair.second.graph.n, 4 + 3)
        self.assertFalse(any(o.role == VertexRole.STAR for o in pair.first.provenance))


class WhitneyPairTest(unittest.TestCase):
    """Special Whitney pairs and their witnesses."""

    def test_special_whitney_is_sw_and_six_cycle(self):
        pair = whitney_pair(3, thorns(0, 0, 0, 0), [1, 1, 1])
        self.assertIsNotNone(are_isomorphic(pair.first.graph, named_graph("sw")))
        self.assertIsNotNone(are_isomorphic(pair.second.graph, named_graph("cycle", 6)))
        self.assertTrue(is_witness(pair))

    def test_type_four_case_v(self):
        pair = whitney_pair(4, thorns(1, 0, 0, 1), [1, 1, 1, 1])
        self.assertNotEqual(degree_sequence(pair.first.graph), degree_sequence(pair.second.graph))
        self.assertTrue(is_witness(pair))

    def test_type_six_wide_star(self):
        pair = whitney_pair(6, thorns(0, 0, 0, 0), [2, 3, 4, 1, 1, 1])
        # Wide diamonds meet at a in G and form the triangle uvw in H.
        self.assertEqual([pair.first.graph.degree(v) for v in range(4)], [9, 4, 5, 6])
        self.assertEqual([pair.second.graph.degree(v) for v in range(4)], [6, 7, 8, 3])
        self.assertTrue(is_witness(pair))

    def test_uniform_type_four_is_not_a_witness(self):
        pair = whitney_pair(4, thorns(0, 0, 0, 0), [1, 1, 1, 1])
        self.assertIsNotNone(are_isomorphic(pair.first.graph, pair.second.graph))
        self.assertFalse(is_witness(pair))

    def test_bad_widths(self):
        with self.assertRaises(GraphRangeError):
            whitney_pair(3, thorns(0, 0, 0, 0), [1, 1])
        with self.assertRaises(GraphRangeError):
            whitney_pair(3, thorns(0, 0, 0, 0), [1, 0, 1])

    def test_width_search(self):
        self.assertEqual(search_whitney_widths(3, thorns(0, 0, 0, 0), 1), [(1, 1, 1)])
        with self.assertRaises(TypeExclusionError):
            search_whitney_widths(3, thorns(1, 1, 1, 1), 2)


class BipartitePairTest(unittest.TestCase):
    """Bipartite-type pairs."""

    def test_special_type_on_path_of_length_two(self):
        pair = bipartite_pair(special_bipartite_spec(named_graph("star", 2)))
        self.assertIsNotNone(are_isomorphic(pair.first.graph, named_graph("spider", 2, 2, 1)))
        self.assertIsNotNone(are_isomorphic(pair.second.graph, named_graph("path", 7)))
        self.assertTrue(p3_isomorphic(pair.first.graph, pair.second.graph))
        self.assertTrue(is_witness(pair))

    def test_single_edge_gives_isomorphic_paths(self):
        pair = bipartite_pair(special_bipartite_spec(named_graph("complete", 2)))
        p4 = named_graph("path", 4)
        self.assertIsNotNone(are_isomorphic(pair.first.graph, p4))
        self.assertIsNotNone(are_isomorphic(pair.second.graph, p4))
        self.assertFalse(is_witness(pair))

    def test_thorn_on_side_b_is_infeasible(self):
        k2 = named_graph("complete", 2)
        spec = BipartitePairSpec(base=k2, widths={(0, 1): 1}, thorns={0: 1, 1: 1})
        with self.assertRaises(InfeasibleThornsError) as ctx:
            bipartite_pair(spec)
        self.assertIn("t'_1 = 2", str(ctx.exception))

    def test_special_type_needs_k_one(self):
        k2 = named_graph("complete", 2)
        spec = BipartitePairSpec(base=k2, widths={(0, 1): 1}, k=2, thorns={0: 2, 1: 0})
        with self.assertRaises(GraphRangeError):
            bipartite_pair(spec)

    def test_general_type(self):
        k2 = named_graph("complete", 2)
        spec = BipartitePairSpec(base=k2, widths={(0, 1): 1}, k=2, thorns={0: 2, 1: 0}, special=False)
        pair = bipartite_pair(spec)
        self.assertEqual(pair.first.graph.degree(0), 3)
        self.assertEqual(pair.second.graph.degree(1), 3)
        low = BipartitePairSpec(base=k2, widths={(0, 1): 1}, k=2, thorns={0: 1, 1: 0}, special=False)
        with self.assertRaises(InfeasibleThornsError):
            bipartite_pair(low)

    def test_odd_cycle_rejected(self):
        with self.assertRaises(StructuralError):
            special_bipartite_spec(named_graph("complete", 3))
        k3 = named_graph("complete", 3)
        spec = BipartitePairSpec(base=k3, widths={e: 1 for e in k3.edges()}, thorns={0: 1, 1: 0, 2: 0})
        with self.assertRaises(StructuralError):
            bipartite_pair(spec)

    def test_base_needs_an_edge(self):
        with self.assertRaises(ValueError):
            BipartitePairSpec(base=Graph(1), widths={}, thorns={0: 1})


class K33CaseTest(unittest.TestCase):
    """Generalized K_{3,3} cases."""

    def test_case_i(self):
        pair = k33_case("i")
        self.assertTrue(is_connected(pair.g))
        self.assertFalse(is_connected(pair.h))
        self.assertIsNone(are_isomorphic(pair.g, pair.h))
        pg, ph = build_path_graph(pair.g, 3), build_path_graph(pair.h, 3)
        self.assertEqual(len(isolated_paths(pg)), 2)
        self.assertEqual(len(isolated_paths(ph)), 2)
        self.assertIsNotNone(are_isomorphic(pg.pgraph, ph.pgraph))
        self.assertTrue(verify_pk_isomorphism(pair.tau, pair.g, pair.h).ok)

    def test_case_vii(self):
        pair = k33_case("vii")
        self.assertEqual(pair.g, named_graph("complete_bipartite", 3, 3))
        self.assertEqual(pair.g, pair.h)
        self.assertIsNone(pair.tau)

    def test_unsupported_cases(self):
        for case in ("ii", "iii", "vi", "xi"):
            with self.assertRaises(UnsupportedCaseError):
                k33_case(case)


class FixtureCatalogTest(unittest.TestCase):
    """Known pairs shipped in data/fixtures."""

    def test_bundled_fixtures_are_witnesses(self):
        catalog = FixtureCatalog()
        self.assertIn("special-whitney", [r.id for r in catalog.recipes])
        for fixture_id, pair in catalog.build_all().items():
            self.assertTrue(is_witness(pair), fixture_id)

    def test_missing_file_falls_back_to_builtins(self):
        catalog = FixtureCatalog(os.path.join(tempfile.gettempdir(), "no-such-catalog.json"))
        self.assertEqual([r.id for r in catalog.recipes], ["special-whitney", "special-bipartite-k12"])

    def test_custom_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "pairs.json")
            with open(path, "w") as f:
                json.dump({"pairs": [{"id": "k12", "family": "bipartite", "base": "star",
                                      "base_params": [2], "widths": [1, 1]}]}, f)
            catalog = FixtureCatalog(path)
            keys = catalog.member_keys(lambda g: str(sorted(degree_sequence(g))))
        self.assertEqual(list(keys.values()), ["k12"])


def p3_key(g):
    return canonical_form(build_path_graph(g, 3).pgraph).canon_g6


class WidthSweepTest(unittest.TestCase):
    """Every accepted pair with diamond widths up to 3 has equal canonical P_3-graphs."""

    @unittest.skipUnless(SLOW, "set PK_SLOW_TESTS=1")
    def test_whitney_pairs(self):
        checked = 0
        for i in (3, 4, 5, 6):
            edge_count = whitney_model(i).w.edge_count
            for _, source, _, excluded in CASE_TABLE:
                if i in excluded:
                    continue
                for widths in product((1, 2, 3), repeat=edge_count):
                    pair = whitney_pair(i, thorns(*source), widths)
                    with self.subTest(i=i, thorns=source, widths=widths):
                        self.assertEqual(p3_key(pair.first.graph), p3_key(pair.second.graph))
                    checked += 1
        # 4 * 3^3 + 6 * 3^4 + 7 * 3^5 + 8 * 3^6
        self.assertEqual(checked, 8127)

    @unittest.skipUnless(SLOW, "set PK_SLOW_TESTS=1")
    def test_special_bipartite_pairs(self):
        bases = [
            named_graph("complete", 2),
            named_graph("star", 2),
            named_graph("star", 3),
            named_graph("path", 4),
            named_graph("cycle", 4),
            named_graph("complete_bipartite", 2, 3),
        ]
        checked = 0
        for base in bases:
            for widths in product((1, 2, 3), repeat=base.edge_count):
                pair = bipartite_pair(special_bipartite_spec(base, widths))
                with self.subTest(base=base.edges(), widths=widths):
                    self.assertEqual(p3_key(pair.first.graph), p3_key(pair.second.graph))
                checked += 1
        self.assertEqual(checked, 3 + 9 + 27 + 27 + 81 + 729)


if __name__ == '__main__':
    unittest.main()
