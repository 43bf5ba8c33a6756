"""
Tests for isomorph-free enumeration and the P_k census.

Set PK_SLOW_TESTS=1 to include the n = 7 enumeration oracle and the n <= 8 census.
"""

import os
import random
import sys
import unittest
from itertools import combinations

import networkx as nx

# Add the repository root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.census import (
    CensusReport,
    ClassEntry,
    VerdictStatus,
    audit_report,
    connected_population,
    enumerate_connected,
    fixtures_for_report,
    load_population,
    p3_census,
    population_digest,
    verdict_exit_code,
)
from src.constructions import named_graph
from src.graph_core.graph import Graph, is_connected
from src.graph_core.graph6 import write_graph6
from src.iso import canonical_form
from src.pathgraph import build_path_graph
from src.utils.errors import GraphRangeError, ResourceLimitError

SLOW = os.getenv("PK_SLOW_TESTS") == "1"


def canon(g):
    return canonical_form(g).canon_g6


def brute_force_count(n):
    """Connected graphs on n vertices, by labeled enumeration and canonical dedup."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") < n - 1:
            continue
        g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if (mask >> i) & 1])
        if is_connected(g):
            seen.add(canon(g))
    return len(seen)


def relabeled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


class EnumerationTest(unittest.TestCase):
    """enumerate_connected against a labeled brute force."""

    def test_counts_match_brute_force(self):
        for n, expected in ((1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)):
            graphs = list(enumerate_connected(n))
            self.assertEqual(len(graphs), expected, n)
            self.assertEqual(brute_force_count(n), expected, n)

    def test_output_is_canonical_and_sorted(self):
        graphs = list(enumerate_connected(5))
        tokens = [write_graph6(g) for g in graphs]
        self.assertEqual(tokens, sorted(tokens))
        self.assertEqual(len(set(tokens)), len(tokens))
        for g, token in zip(graphs, tokens):
            self.assertTrue(is_connected(g))
            self.assertEqual(canon(g), token)

    def test_population_spans_levels(self):
        sizes = [g.n for g in connected_population(3, 5)]
        self.assertEqual(len(sizes), 2 + 6 + 21)
        self.assertEqual(sizes, sorted(sizes))

    def test_limits(self):
        with self.assertRaises(ResourceLimitError):
            list(enumerate_connected(10, limit=9))
        with self.assertRaises(GraphRangeError):
            list(enumerate_connected(0))
        with self.assertRaises(GraphRangeError):
            list(connected_population(4, 3))
        with self.assertRaises(ResourceLimitError):
            list(connected_population(1, 5, limit=4))

    @unittest.skipUnless(SLOW, "set PK_SLOW_TESTS=1")
    def test_seven_vertices(self):
        graphs = list(enumerate_connected(7))
        self.assertEqual(len(graphs), 853)
        atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7 and nx.is_connected(h)]
        self.assertEqual(len(atlas), 853)
        self.assertEqual({canon(g) for g in graphs}, {canon(Graph.from_edges(7, h.edges())) for h in atlas})


class CensusTest(unittest.TestCase):
    """p3_census and its audit."""

    @classmethod
    def setUpClass(cls):
        cls.small = list(connected_population(1, 6))
        cls.report = p3_census(cls.small, threads=1)

    def test_partition(self):
        report = self.report
        total = sum(e.size for e in report.classes) + sum(report.dropped.values()) + len(report.skipped)
        self.assertEqual(total, report.stats.population_size)
        self.assertEqual(report.stats.population_size, len(self.small))
        members = [m for e in report.classes for m in e.members]
        self.assertEqual(len(members), len(set(members)))

    def test_classes_are_sorted(self):
        keys = [e.pk_canon for e in self.report.classes]
        self.assertEqual(keys, sorted(keys))
        for entry in self.report.classes:
            self.assertEqual(entry.members, sorted(entry.members))
            self.assertEqual(entry.size, len(entry.members))

    def test_single_edge_is_dropped(self):
        report = p3_census([named_graph("complete", 2)], threads=1)
        self.assertEqual(report.dropped["empty π_3"], 1)
        self.assertEqual(report.classes, [])
        self.assertEqual(report.verdict.status, VerdictStatus.PASS)

    def test_drop_reasons(self):
        claw = named_graph("star", 3)
        two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
        c6 = named_graph("cycle", 6)
        report = p3_census([claw, two_edges, c6, relabeled(c6, random.Random(2))], threads=1)
        self.assertEqual(report.dropped["disconnected P_3-graph"], 1)
        self.assertEqual(report.dropped["disconnected original"], 1)
        self.assertEqual(report.dropped["duplicate original"], 1)
        self.assertEqual([e.members for e in report.classes], [[canon(c6)]])

        kept = p3_census([claw], require_connected_pk=False, threads=1)
        self.assertEqual(len(kept.classes), 1)
        self.assertEqual(kept.stats.no_isolated_pk, 0)

    def test_budget_blowout_is_skipped_not_dropped(self):
        report = p3_census([named_graph("cycle", 4)], threads=1, node_budget=1)
        self.assertEqual(report.skipped, [write_graph6(named_graph("cycle", 4))])
        self.assertEqual(report.verdict.status, VerdictStatus.FAIL)
        self.assertEqual(verdict_exit_code(report.verdict), 2)

    def test_fabricated_triple_fails(self):
        report = CensusReport(
            k=3,
            population="fabricated",
            classes=[ClassEntry(pk_canon="Bw", members=["A_", "Bw", "B~"], size=3)],
        )
        verdict = audit_report(report)
        self.assertEqual(verdict.status, VerdictStatus.FAIL)
        self.assertEqual(verdict.violations, ["Bw"])
        self.assertIn("Bw", verdict.reason)

    def test_other_k_is_informational(self):
        report = p3_census(self.small[:20], k=4, threads=1)
        self.assertEqual(report.verdict.status, VerdictStatus.INFO)
        self.assertIn("empty π_4", report.dropped)
        self.assertEqual(verdict_exit_code(report.verdict), 0)

    def test_report_independent_of_workers_and_input_order(self):
        rng = random.Random(17)
        mixed = [relabeled(g, rng) for g in self.small]
        rng.shuffle(mixed)
        self.assertEqual(p3_census(mixed, threads=2).to_json(), self.report.to_json())

    def test_graph6_population(self):
        text = "\n".join(write_graph6(g) for g in self.small) + "\n"
        graphs = load_population(text)
        keys = [canon(g) for g in self.small]
        report = p3_census(graphs, threads=1)
        self.assertEqual(report.to_json(), self.report.to_json())
        self.assertIn(population_digest(keys), report.population)

    def test_known_pairs_up_to_seven_vertices(self):
        report = p3_census(connected_population(1, 7), threads=1)
        self.assertEqual(report.verdict.status, VerdictStatus.PASS)
        self.assertEqual(report.skipped, [])
        pairs = {e.pk_canon: e.members for e in report.classes if e.size >= 2}
        c6_key = canon(build_path_graph(named_graph("sw"), 3).pgraph)
        p5_key = canon(named_graph("path", 5))
        self.assertEqual(sorted(pairs), sorted([c6_key, p5_key]))
        self.assertEqual(pairs[c6_key], sorted([canon(named_graph("sw")), canon(named_graph("cycle", 6))]))
        self.assertEqual(pairs[p5_key], sorted([canon(named_graph("path", 7)), canon(named_graph("spider", 2, 2, 1))]))
        self.assertEqual(sorted(report.verdict.multi_member_classes), sorted(pairs))

        matches = fixtures_for_report(report)
        self.assertEqual(matches[c6_key], "special-whitney")
        self.assertEqual(matches[p5_key], "special-bipartite-k12")

    @unittest.skipUnless(SLOW, "set PK_SLOW_TESTS=1")
    def test_eight_vertices(self):
        report = p3_census(connected_population(1, 8))
        self.assertEqual(report.verdict.status, VerdictStatus.PASS)
        self.assertEqual(report.skipped, [])
        matches = fixtures_for_report(report)
        self.assertTrue(matches)
        self.assertNotIn(None, matches.values())


if __name__ == '__main__':
    unittest.main()
