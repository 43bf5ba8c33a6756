from .census import audit_report, fixtures_for_report, load_population, p3_census, population_digest, verdict_exit_code
from .enumerate import connected_graphs_by_level, connected_population, enumerate_connected
from .schema import CensusReport, CensusStats, ClassEntry, Verdict, VerdictStatus

__all__ = [
    "CensusReport",
    "CensusStats",
    "ClassEntry",
    "Verdict",
    "VerdictStatus",
    "audit_report",
    "connected_graphs_by_level",
    "connected_population",
    "enumerate_connected",
    "fixtures_for_report",
    "load_population",
    "p3_census",
    "population_digest",
    "verdict_exit_code",
]
