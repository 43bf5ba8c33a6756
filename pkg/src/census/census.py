"""
Census of connected graphs grouped by canonical P_k-graph, and its audit.

Per-graph work runs in worker processes; the reducer sorts everything it
receives, so worker count and input order never change the report.
"""

import hashlib
import logging
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Dict, Iterable, List, Optional

from src.constructions.catalog import FixtureCatalog
from src.graph_core.graph import Graph, is_connected
from src.graph_core.graph6 import parse_graph6, read_graph6_lines, write_graph6
from src.iso.canonical import canonical_form
from src.pathgraph.paths import build_path_graph, isolated_paths
from src.utils.config import Settings
from src.utils.errors import CanonicalizationBudgetError
from .schema import CensusReport, CensusStats, ClassEntry, ItemOutcome, Verdict, VerdictStatus, drop_reasons

logger = logging.getLogger(__name__)

KEPT = "kept"
SKIPPED = "skipped"


def _census_item(token: str, k: int, require_connected_pk: bool, node_budget: Optional[int]) -> ItemOutcome:
    g = parse_graph6(token)
    try:
        original = canonical_form(g, node_budget=node_budget).canon_g6
    except CanonicalizationBudgetError:
        return ItemOutcome(token=token, status=SKIPPED)
    if not is_connected(g):
        return ItemOutcome(token=token, status="disconnected original", original_canon=original)

    result = build_path_graph(g, k)
    if not result.labels:
        return ItemOutcome(token=token, status=drop_reasons(k)[0], original_canon=original)
    no_isolated = not isolated_paths(result)
    if require_connected_pk and not is_connected(result.pgraph):
        return ItemOutcome(token=token, status=drop_reasons(k)[1], original_canon=original,
                           no_isolated=no_isolated)
    try:
        pk = canonical_form(result.pgraph, node_budget=node_budget).canon_g6
    except CanonicalizationBudgetError:
        return ItemOutcome(token=token, status=SKIPPED, original_canon=original)
    return ItemOutcome(token=token, status=KEPT, original_canon=original, pk_canon=pk, no_isolated=no_isolated)


def population_digest(keys: Iterable[str]) -> str:
    """sha256 over the sorted keys, one per line."""
    return hashlib.sha256("\n".join(sorted(keys)).encode("ascii")).hexdigest()


def _run_items(tokens: List[str], worker, threads: int) -> List[ItemOutcome]:
    if threads <= 1 or len(tokens) < 2:
        return [worker(token) for token in tokens]
    chunksize = max(1, len(tokens) // (threads * 8))
    with ProcessPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(worker, tokens, chunksize=chunksize))


def p3_census(
    graphs: Iterable[Graph],
    k: int = 3,
    require_connected_pk: bool = True,
    threads: Optional[int] = None,
    node_budget: Optional[int] = None,
    population: Optional[str] = None,
) -> CensusReport:
    """
    Group connected graphs by the canonical form of their P_k-graph.

    Args:
        graphs: Population of connected graphs
        k: Path length
        require_connected_pk: Drop graphs whose P_k-graph is disconnected
        threads: Worker processes (PK_THREADS or the CPU count when omitted)
        node_budget: Canonical search budget per graph
        population: Description for the report; a digest of the inputs when omitted

    Returns:
        CensusReport carrying its audit verdict
    """
    tokens = [write_graph6(g) for g in graphs]
    threads = threads if threads is not None else Settings.from_env().threads
    logger.info("census over %d graphs, k=%d, %d worker(s)", len(tokens), k, threads)
    worker = partial(_census_item, k=k, require_connected_pk=require_connected_pk, node_budget=node_budget)
    outcomes = sorted(_run_items(tokens, worker, threads), key=lambda o: (o.original_canon or "", o.token))

    dropped = {reason: 0 for reason in drop_reasons(k)}
    skipped: List[str] = []
    classes: Dict[str, set] = defaultdict(set)
    seen = set()
    no_isolated = 0
    for outcome in outcomes:
        if outcome.original_canon is not None:
            if outcome.original_canon in seen:
                dropped["duplicate original"] += 1
                continue
            seen.add(outcome.original_canon)
        if outcome.status == SKIPPED:
            skipped.append(outcome.original_canon or outcome.token)
            continue
        no_isolated += outcome.no_isolated
        if outcome.status == KEPT:
            classes[outcome.pk_canon].add(outcome.original_canon)
        else:
            dropped[outcome.status] += 1

    entries = [
        ClassEntry(pk_canon=key, members=sorted(members), size=len(members))
        for key, members in sorted(classes.items())
    ]
    histogram = Counter(entry.size for entry in entries)
    if population is None:
        keys = [o.original_canon or o.token for o in outcomes]
        population = f"graph6 input: {len(tokens)} graphs, sha256 {population_digest(keys)}"
    report = CensusReport(
        k=k,
        population=population,
        classes=entries,
        dropped=dropped,
        skipped=sorted(skipped),
        stats=CensusStats(
            population_size=len(tokens),
            no_isolated_pk=no_isolated,
            class_size_histogram={str(size): histogram[size] for size in sorted(histogram)},
        ),
    )
    report = report.model_copy(update={"verdict": audit_report(report)})
    logger.info("census done: %d classes, %d skipped, verdict %s",
                len(entries), len(skipped), report.verdict.status.value)
    return report


def audit_report(report: CensusReport) -> Verdict:
    """
    PASS iff no class holds three or more originals and nothing was skipped.

    For k other than 3 the verdict is INFO.
    """
    multi = [entry.pk_canon for entry in report.classes if entry.size >= 2]
    violations = [entry.pk_canon for entry in report.classes if entry.size >= 3]
    if report.k != 3:
        return Verdict(status=VerdictStatus.INFO, multi_member_classes=multi, violations=violations,
                       reason=f"k = {report.k}: informational only")
    if violations:
        return Verdict(status=VerdictStatus.FAIL, multi_member_classes=multi, violations=violations,
                       reason=f"classes with three or more nonisomorphic originals: {', '.join(violations)}")
    if report.skipped:
        return Verdict(status=VerdictStatus.FAIL, multi_member_classes=multi,
                       reason=f"{len(report.skipped)} graph(s) skipped on the canonicalization budget")
    return Verdict(status=VerdictStatus.PASS, multi_member_classes=multi,
                   reason="no class holds three nonisomorphic originals")


def verdict_exit_code(verdict: Verdict) -> int:
    return 2 if verdict.status == VerdictStatus.FAIL else 0


def load_population(text: str) -> List[Graph]:
    """Graphs from graph6 text, one token per line."""
    return read_graph6_lines(text)


def fixtures_for_report(
    report: CensusReport,
    catalog: Optional[FixtureCatalog] = None,
    node_budget: Optional[int] = None,
) -> Dict[str, Optional[str]]:
    """
    Match each two-member class to the known pair that regenerates it.

    Returns:
        pk_canon -> fixture id, or None for an unmatched two-member class
    """
    catalog = catalog or FixtureCatalog()
    keys = catalog.member_keys(lambda g: canonical_form(g, node_budget=node_budget).canon_g6)
    matches: Dict[str, Optional[str]] = {}
    for entry in report.classes:
        if entry.size == 2:
            matches[entry.pk_canon] = keys.get((entry.members[0], entry.members[1]))
    unmatched = sum(1 for v in matches.values() if v is None)
    if unmatched:
        logger.warning("%d two-member class(es) have no matching fixture", unmatched)
    return matches
