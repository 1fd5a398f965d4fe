#!/usr/bin/env python3
"""
命令行界面：路径矩阵、谱、能量、图族生成、闭式公式与验证套件

结果写到标准输出，诊断信息写到标准错误。
"""

import json
import sys
from functools import wraps
from pathlib import Path
from typing import List, Optional
import typer
from rich.console import Console
from src.closed_form.unicyclic import unicyclic_energy_closed, unicyclic_spectrum_closed
from src.connectivity.path_matrix import PathMatrix, path_matrix
from src.core.config import settings
from src.core.exceptions import GraphFormatError, ParameterError, PathSpecError
from src.core.models import AttachmentShape, FamilyKind, FlowEngine, GraphFamily, OutputFormat
from src.graphs.edgelist import parse_edge_list, write_edge_list
from src.graphs.generators import generate
from src.graphs.graph import Graph
from src.graphs.graph6 import looks_like_graph6, parse_graph6, write_graph6
from src.spectral.energy import path_energy, spectral_radius
from src.spectral.jacobi import SymmetricMatrix, eigenvalues
from src.verify.corpus import CorpusLoader
from src.verify.report import print_report
from src.verify.suite import run_suite

app = typer.Typer(help="路径矩阵、路径谱与路径能量工具", no_args_is_help=True)
console = Console()
err_console = Console(stderr=True)


def _handle_errors(command):
    """参数与格式错误退出码2，其他库错误退出码1"""

    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ParameterError, GraphFormatError) as e:
            err_console.print(f"❌ {e}", style="red")
            raise typer.Exit(code=2)
        except PathSpecError as e:
            err_console.print(f"❌ {e}", style="red")
            raise typer.Exit(code=1)

    return wrapper


def _read_text(source: Optional[Path]) -> str:
    try:
        if source is None or str(source) == "-":
            return sys.stdin.read()
        return source.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"输入不是有效的UTF-8文本: {e.reason}", e.start) from e
    except OSError as e:
        raise ParameterError(f"无法读取输入文件{source}: {e}") from e


def load_graph(text: str) -> Graph:
    """自动识别输入格式：首个非空行符合graph6则按graph6解析，否则按边表解析"""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError("输入为空", 0)
    if looks_like_graph6(lines[0]):
        if len(lines) > 1:
            raise ParameterError("每次调用只处理一个图；批量处理请使用verify --corpus graph6:PATH")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _format_number(value: float) -> str:
    return repr(round(value, settings.energy_decimals) + 0.0)


def _graph_format(output_format: OutputFormat, as_json: bool) -> OutputFormat:
    if as_json:
        return OutputFormat.JSON
    if output_format == OutputFormat.TEXT:
        raise ParameterError("该子命令只支持--format tsv或json")
    return output_format


def _compute_matrix(source: Optional[Path], workers: Optional[int], engine: Optional[FlowEngine],
                    no_biconnected: bool) -> PathMatrix:
    g = load_graph(_read_text(source))
    return path_matrix(g, use_biconnected=False if no_biconnected else None, workers=workers, engine=engine)


@app.command()
@_handle_errors
def matrix(
    source: Optional[Path] = typer.Argument(None, help="输入文件（graph6或边表），缺省或-为标准输入"),
    output_format: OutputFormat = typer.Option(OutputFormat.TSV, "--format", help="输出格式 tsv|json"),
    as_json: bool = typer.Option(False, "--json", help="等同于--format json"),
    workers: Optional[int] = typer.Option(None, "--workers", help="并行进程数"),
    engine: Optional[FlowEngine] = typer.Option(None, "--engine", help="最大流引擎"),
    no_biconnected: bool = typer.Option(False, "--no-biconnected", help="关闭双连通分量预处理"),
):
    """输出图的路径矩阵"""
    fmt = _graph_format(output_format, as_json)
    result = _compute_matrix(source, workers, engine, no_biconnected)
    if fmt == OutputFormat.JSON:
        typer.echo(result.to_json())
    else:
        typer.echo(result.to_tsv(), nl=False)


@app.command()
@_handle_errors
def spectrum(
    source: Optional[Path] = typer.Argument(None, help="输入文件，缺省或-为标准输入"),
    output_format: OutputFormat = typer.Option(OutputFormat.TSV, "--format", help="输出格式 tsv|json"),
    as_json: bool = typer.Option(False, "--json", help="等同于--format json"),
    workers: Optional[int] = typer.Option(None, "--workers", help="并行进程数"),
    engine: Optional[FlowEngine] = typer.Option(None, "--engine", help="最大流引擎"),
    no_biconnected: bool = typer.Option(False, "--no-biconnected", help="关闭双连通分量预处理"),
):
    """输出路径矩阵的特征值（非增）"""
    fmt = _graph_format(output_format, as_json)
    pm = _compute_matrix(source, workers, engine, no_biconnected)
    values = eigenvalues(SymmetricMatrix.from_path_matrix(pm)).eigenvalues
    if fmt == OutputFormat.JSON:
        typer.echo(json.dumps([float(_format_number(x)) for x in values]))
    else:
        for value in values:
            typer.echo(_format_number(value))


@app.command()
@_handle_errors
def energy(
    source: Optional[Path] = typer.Argument(None, help="输入文件，缺省或-为标准输入"),
    output_format: OutputFormat = typer.Option(OutputFormat.TSV, "--format", help="输出格式 tsv|json"),
    as_json: bool = typer.Option(False, "--json", help="等同于--format json"),
    workers: Optional[int] = typer.Option(None, "--workers", help="并行进程数"),
    engine: Optional[FlowEngine] = typer.Option(None, "--engine", help="最大流引擎"),
    no_biconnected: bool = typer.Option(False, "--no-biconnected", help="关闭双连通分量预处理"),
):
    """输出路径能量PE和谱半径ρ"""
    fmt = _graph_format(output_format, as_json)
    pm = _compute_matrix(source, workers, engine, no_biconnected)
    if pm.order == 0:
        raise ParameterError("空图没有谱半径")
    spec = eigenvalues(SymmetricMatrix.from_path_matrix(pm))
    pe, rho = path_energy(spec), spectral_radius(spec)
    if fmt == OutputFormat.JSON:
        typer.echo(json.dumps({
            "energy": float(_format_number(pe)),
            "spectral_radius": float(_format_number(rho)),
        }))
    else:
        typer.echo(f"PE\t{_format_number(pe)}")
        typer.echo(f"rho\t{_format_number(rho)}")


@app.command()
@_handle_errors
def gen(
    family: FamilyKind = typer.Option(..., "--family", help="图族"),
    n: int = typer.Option(..., "--n", help="顶点数；triangle-chain为三角形个数"),
    k: Optional[int] = typer.Option(None, "--k", help="单圈图的圈长"),
    shape: AttachmentShape = typer.Option(AttachmentShape.PENDANT_PATH, "--shape", help="单圈图挂接方式"),
    seed: Optional[int] = typer.Option(None, "--seed", help=f"随机种子，缺省为{settings.default_seed}"),
    m: Optional[int] = typer.Option(None, "--m", help="random族的边数"),
    edge_list: bool = typer.Option(False, "--edge-list", help="输出边表而不是graph6"),
):
    """生成图族成员，默认输出graph6"""
    g = generate(GraphFamily(kind=family, n=n, k=k, shape=shape, seed=seed, m=m))
    if edge_list:
        typer.echo(write_edge_list(g), nl=False)
    else:
        typer.echo(write_graph6(g))


@app.command("closed-form")
@_handle_errors
def closed_form(
    n: int = typer.Option(..., "--n", help="顶点数"),
    k: int = typer.Option(..., "--k", help="圈长，3 <= k <= n"),
    as_json: bool = typer.Option(False, "--json", help="JSON输出"),
):
    """输出单圈图U(n,k)的闭式ρ1、ρ2、谱与路径能量"""
    values = unicyclic_spectrum_closed(n, k).eigenvalues
    pe = unicyclic_energy_closed(n, k)
    payload = {
        "n": n,
        "k": k,
        "rho1": float(_format_number(values[0])),
        "rho2": float(_format_number(values[1])),
        "spectrum": [float(_format_number(x)) for x in values],
        "energy": float(_format_number(pe)),
    }
    if as_json:
        typer.echo(json.dumps(payload))
        return
    typer.echo(f"rho1\t{_format_number(values[0])}")
    typer.echo(f"rho2\t{_format_number(values[1])}")
    typer.echo("spectrum\t" + "\t".join(_format_number(x) for x in values))
    typer.echo(f"PE\t{_format_number(pe)}")


@app.command()
@_handle_errors
def verify(
    corpus: str = typer.Option(..., "--corpus", help="exhaustive:MAX_N | unicyclic:N_MIN..N_MAX | random:COUNT:N[:SEED] | graph6:PATH"),
    checks: str = typer.Option(..., "--checks", help="逗号分隔的检查项，例如T1,T2,T3,ORACLE"),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="报告格式 text|json"),
    workers: Optional[int] = typer.Option(None, "--workers", help="并行进程数"),
    engine: Optional[FlowEngine] = typer.Option(None, "--engine", help="最大流引擎"),
):
    """对语料运行验证套件；存在fail记录时退出码为1"""
    if output_format == OutputFormat.TSV:
        raise ParameterError("verify只支持--format text或json")
    selected: List[str] = [token for token in checks.split(",") if token.strip()]
    report = run_suite(CorpusLoader().parse(corpus), selected, workers=workers, engine=engine)
    if output_format == OutputFormat.JSON:
        typer.echo(report.to_json())
    else:
        print_report(report, console)
    raise typer.Exit(code=report.exit_code)


if __name__ == "__main__":
    app()
