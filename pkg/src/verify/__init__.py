# 暴力求解、语料与验证套件
from src.verify.oracle import oracle_disjoint_paths
from src.verify.corpus import Corpus, CorpusGraph, CorpusLoader, CorpusSource, exhaustive_small_graphs
from src.verify.checks import parse_checks
from src.verify.suite import VerificationSuite, default_tolerances, run_suite
from src.verify.report import print_report

__all__ = [
    "Corpus",
    "CorpusGraph",
    "CorpusLoader",
    "CorpusSource",
    "VerificationSuite",
    "default_tolerances",
    "exhaustive_small_graphs",
    "oracle_disjoint_paths",
    "parse_checks",
    "print_report",
    "run_suite",
]
