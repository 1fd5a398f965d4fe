"""
验证套件：对语料运行选中的检查项并汇总为报告
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Tuple, Union
from src.core.config import settings
from src.core.exceptions import ParameterError
from src.core.logger import LoggerMixin
from src.core.models import CheckId, CheckRecord, CheckStatus, FlowEngine, Tolerances, VerificationReport
from src.graphs.graph import Graph
from src.verify.checks import GRAPH_CHECKS, parse_checks, run_graph_checks, run_parametric_checks
from src.verify.corpus import Corpus

_GraphTask = Tuple[str, Graph, List[CheckId], Tolerances, Optional[str]]


def _check_one(task: _GraphTask) -> List[CheckRecord]:
    graph_id, g, checks, tolerances, engine = task
    return run_graph_checks(graph_id, g, checks, tolerances, FlowEngine(engine) if engine else None)


def default_tolerances() -> Tolerances:
    """由配置得到的容差"""
    return Tolerances(
        equality=settings.equality_tolerance,
        zero=settings.zero_tolerance,
        monotone_margin=settings.monotone_margin,
        discrepancy_gap=settings.discrepancy_gap,
        eigen=settings.eigen_tolerance,
    )


class VerificationSuite(LoggerMixin):
    """检查项套件；语料图之间相互独立，可并行，报告按语料顺序合并"""

    def __init__(self, checks: Iterable[Union[CheckId, str]], tolerances: Optional[Tolerances] = None,
                 workers: Optional[int] = None, engine: Optional[FlowEngine] = None):
        super().__init__()
        self.checks = parse_checks([c.value if isinstance(c, CheckId) else c for c in checks])
        if not self.checks:
            raise ParameterError("至少需要一个检查项")
        self.tolerances = tolerances or default_tolerances()
        self.workers = max(1, workers or settings.workers)
        self.engine = engine

    def _graph_records(self, corpus: Corpus) -> List[CheckRecord]:
        if not any(check in GRAPH_CHECKS for check in self.checks):
            return []
        engine = self.engine.value if self.engine else None
        tasks = [
            (entry.graph_id, entry.graph, self.checks, self.tolerances, engine)
            for entry in corpus.entries
        ]
        if self.workers == 1 or len(tasks) <= 1:
            batches = [_check_one(task) for task in tasks]
        else:
            chunksize = max(1, len(tasks) // (self.workers * 8))
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                batches = list(executor.map(_check_one, tasks, chunksize=chunksize))
        return [record for batch in batches for record in batch]

    def run(self, corpus: Corpus) -> VerificationReport:
        if corpus.size == 0:
            raise ParameterError(f"语料为空: {corpus.description}")
        with self.log_duration("验证完成", corpus=corpus.description, graphs=corpus.size) as summary:
            records = self._graph_records(corpus)
            records += run_parametric_checks(corpus.orders(), self.checks, self.tolerances)
            report = VerificationReport(corpus=corpus.description, checks=self.checks, records=records)
            summary.update(
                records=len(records),
                failures=report.count(CheckStatus.FAIL),
                discrepancies=report.count(CheckStatus.DISCREPANCY),
            )

        for record in records:
            if record.status in (CheckStatus.FAIL, CheckStatus.DISCREPANCY):
                self.log_warning(
                    "检查未通过" if record.status == CheckStatus.FAIL else "记录到文献边界问题",
                    check=record.check.value,
                    subject=record.subject,
                    witness=record.witness,
                    detail=record.detail,
                )
        return report


def run_suite(corpus: Corpus, checks: Iterable[Union[CheckId, str]],
              tolerances: Optional[Tolerances] = None, workers: Optional[int] = None,
              engine: Optional[FlowEngine] = None) -> VerificationReport:
    """对语料运行检查项"""
    return VerificationSuite(checks, tolerances=tolerances, workers=workers, engine=engine).run(corpus)
