from typing import Optional
from rich.console import Console
from rich.table import Table
from src.core.config import settings
from src.core.models import CheckStatus, Value, VerificationReport

_STATUS_STYLE = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "bold red",
    CheckStatus.DISCREPANCY: "yellow",
    CheckStatus.SKIPPED: "dim",
}


def _format_value(value: Value, decimals: Optional[int] = None) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        digits = settings.energy_decimals if decimals is None else decimals
        return f"{value:.{digits}g}"
    return str(value)


def summary_table(report: VerificationReport) -> Table:
    """每个检查项的状态计数"""
    table = Table(title=f"验证汇总: {report.corpus}")
    table.add_column("检查项", style="cyan")
    for status in CheckStatus:
        table.add_column(status.value, justify="right", style=_STATUS_STYLE[status])
    for check, counts in report.summary.items():
        table.add_row(check, *(str(counts[status.value]) for status in CheckStatus))
    return table


def detail_table(report: VerificationReport) -> Table:
    """所有未通过（fail与discrepancy）的记录"""
    table = Table(title="未通过的记录")
    table.add_column("检查项", style="cyan")
    table.add_column("对象")
    table.add_column("状态")
    table.add_column("期望值", justify="right")
    table.add_column("计算值", justify="right")
    table.add_column("见证")
    table.add_column("说明")
    for record in report.records:
        if record.status in (CheckStatus.PASS, CheckStatus.SKIPPED):
            continue
        table.add_row(
            record.check.value,
            record.subject,
            f"[{_STATUS_STYLE[record.status]}]{record.status.value}[/]",
            _format_value(record.expected),
            _format_value(record.computed),
            record.witness or "",
            record.detail,
        )
    return table


def print_report(report: VerificationReport, console: Console) -> None:
    console.print(summary_table(report))
    if report.count(CheckStatus.FAIL) or report.count(CheckStatus.DISCREPANCY):
        console.print(detail_table(report))
    verdict = "[bold red]FAIL[/]" if report.exit_code else "[bold green]OK[/]"
    console.print(f"结果: {verdict}")
