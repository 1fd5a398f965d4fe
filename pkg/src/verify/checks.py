"""
各检查项的实现

单图检查（T1 T2 T3 T4 T7 ORACLE TRACE CS）作用在语料的每个图上；
参数检查（L5 T8 C2 UR）作用在语料中出现的每个顶点数n上，只依赖闭式公式。
"""

from typing import Callable, Dict, List, Optional
import numpy as np
from src.closed_form.bounds import (
    energy_cauchy_schwarz_bound,
    general_energy_bounds,
    spectral_radius_bounds,
    trace_square_bound,
    unicyclic_extremes,
    unicyclic_min_spectral_radius,
)
from src.closed_form.unicyclic import (
    stated_rho2_positive,
    unicyclic_block_matrix,
    unicyclic_energy_closed,
    unicyclic_energy_profile,
    unicyclic_rho12,
    unicyclic_spectral_radius,
    unicyclic_spectrum_closed,
)
from src.connectivity.path_matrix import PathMatrix, path_matrix
from src.core.config import settings
from src.core.exceptions import ParameterError
from src.core.models import CheckId, CheckRecord, CheckStatus, FlowEngine, Spectrum, Tolerances
from src.graphs.graph import Graph, cycle_vertices, is_complete, is_connected, is_tree, max_degree, unicyclic_cycle_length
from src.graphs.graph6 import write_graph6
from src.spectral.energy import frobenius_residual, path_energy, spectral_radius, trace_residual
from src.spectral.jacobi import SymmetricMatrix, eigenvalues
from src.verify.oracle import oracle_disjoint_paths

GRAPH_CHECKS = (
    CheckId.SPECTRAL_RADIUS_BOUNDS,
    CheckId.DEGREE_BOUND,
    CheckId.ENERGY_BOUNDS,
    CheckId.ORACLE,
    CheckId.TRACE_IDENTITIES,
    CheckId.CAUCHY_SCHWARZ,
    CheckId.UNICYCLIC_SPECTRUM,
    CheckId.UNICYCLIC_ENERGY,
)
PARAMETRIC_CHECKS = (
    CheckId.RHO2_SIGN,
    CheckId.UNICYCLIC_EXTREMES,
    CheckId.ENERGY_MONOTONE,
    CheckId.UNICYCLIC_RADIUS,
)
_SPECTRAL = {
    CheckId.SPECTRAL_RADIUS_BOUNDS,
    CheckId.ENERGY_BOUNDS,
    CheckId.TRACE_IDENTITIES,
    CheckId.CAUCHY_SCHWARZ,
    CheckId.UNICYCLIC_SPECTRUM,
    CheckId.UNICYCLIC_ENERGY,
}


def parse_checks(tokens: List[str]) -> List[CheckId]:
    """把检查项名（不区分大小写）解析为CheckId，按固定顺序去重"""
    wanted = set()
    for token in tokens:
        name = token.strip().upper()
        if not name:
            continue
        try:
            wanted.add(CheckId(name))
        except ValueError:
            raise ParameterError(f"未知检查项: {token!r}") from None
    return [check for check in CheckId if check in wanted]


class GraphAnalysis:
    """单个语料图的计算结果，各检查项共用"""

    def __init__(self, graph_id: str, g: Graph, need_spectrum: bool,
                 tolerances: Tolerances, engine: Optional[FlowEngine] = None):
        self.graph_id = graph_id
        self.graph = g
        self.graph6 = write_graph6(g)
        self.connected = is_connected(g)
        self.matrix: PathMatrix = path_matrix(g, workers=1, engine=engine)
        self.spectrum: Optional[Spectrum] = None
        self.rho = 0.0
        self.energy = 0.0
        if need_spectrum and g.n > 0:
            self.spectrum = eigenvalues(SymmetricMatrix.from_path_matrix(self.matrix), tol=tolerances.eigen)
            self.rho = spectral_radius(self.spectrum)
            self.energy = path_energy(self.spectrum, tol=tolerances.eigen)
        self.cycle_length = unicyclic_cycle_length(g)

    def record(self, check: CheckId, status: CheckStatus, **fields) -> CheckRecord:
        if status == CheckStatus.FAIL and not fields.get("witness"):
            fields["witness"] = self.graph6
        return CheckRecord(check=check, subject=self.graph_id, status=status, **fields)

    def skipped(self, check: CheckId, reason: str) -> CheckRecord:
        return self.record(check, CheckStatus.SKIPPED, detail=reason)


def _bound_check(a: GraphAnalysis, check: CheckId, value: float, lower: float, upper: float,
                 tol: float, quantity: str) -> CheckRecord:
    """value ∈ [lower, upper]，下界取等当且仅当树，上界取等当且仅当完全图"""
    g = a.graph
    problems = []
    if value < lower - tol or value > upper + tol:
        problems.append(f"{quantity}={value!r}不在[{lower}, {upper}]内")
    if (abs(value - lower) <= tol) != is_tree(g):
        problems.append(f"下界取等与是否为树不一致（tree={is_tree(g)}）")
    if (abs(value - upper) <= tol) != is_complete(g):
        problems.append(f"上界取等与是否为完全图不一致（complete={is_complete(g)}）")
    status = CheckStatus.FAIL if problems else CheckStatus.PASS
    witness = f"{a.graph6} {quantity}={value!r}" if problems else None
    return a.record(check, status, expected=f"[{lower}, {upper}]", computed=value,
                    tolerance=tol, witness=witness, detail="; ".join(problems))


def check_spectral_radius_bounds(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    if not a.connected:
        return a.skipped(CheckId.SPECTRAL_RADIUS_BOUNDS, "图不连通")
    lower, upper = spectral_radius_bounds(a.graph.n)
    return _bound_check(a, CheckId.SPECTRAL_RADIUS_BOUNDS, a.rho, lower, upper, tol.equality, "rho")


def check_energy_bounds(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    if not a.connected:
        return a.skipped(CheckId.ENERGY_BOUNDS, "图不连通")
    lower, upper = general_energy_bounds(a.graph.n)
    return _bound_check(a, CheckId.ENERGY_BOUNDS, a.energy, lower, upper, tol.equality, "PE")


def check_degree_bound(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    """p_uv <= min{deg u, deg v}，精确整数比较"""
    n = a.graph.n
    degrees = np.array([len(a.graph.neighbors(v)) for v in range(n)], dtype=np.int64)
    bound = np.minimum.outer(degrees, degrees)
    violations = np.argwhere(np.triu(a.matrix.entries > bound, k=1))
    if len(violations) == 0:
        return a.record(CheckId.DEGREE_BOUND, CheckStatus.PASS, computed=0)
    u, v = (int(x) for x in violations[0])
    return a.record(
        CheckId.DEGREE_BOUND,
        CheckStatus.FAIL,
        expected=int(bound[u, v]),
        computed=int(a.matrix[u, v]),
        witness=f"{a.graph6} pair=({u},{v})",
        detail=f"{len(violations)}个顶点对超出度数界",
    )


def check_oracle(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    """路径矩阵与暴力求解逐项相等"""
    limit = settings.exhaustive_max_n
    if a.graph.n > limit:
        return a.skipped(CheckId.ORACLE, f"n={a.graph.n} > {limit}")
    n = a.graph.n
    for s in range(n):
        for t in range(s + 1, n):
            expected = oracle_disjoint_paths(a.graph, s, t)
            if a.matrix[s, t] != expected:
                return a.record(
                    CheckId.ORACLE,
                    CheckStatus.FAIL,
                    expected=expected,
                    computed=a.matrix[s, t],
                    witness=f"{a.graph6} pair=({s},{t})",
                )
    return a.record(CheckId.ORACLE, CheckStatus.PASS)


def check_trace_identities(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    """Σρ_i = 0 且 Σρ_i^2 = Σp_ij^2"""
    square_sum = a.matrix.square_sum()
    trace_tol = tol.trace * a.graph.n
    frobenius_tol = tol.frobenius * max(1.0, float(square_sum))
    trace = trace_residual(a.spectrum)
    frobenius = frobenius_residual(a.spectrum, square_sum)
    if trace < trace_tol and frobenius <= frobenius_tol:
        return a.record(CheckId.TRACE_IDENTITIES, CheckStatus.PASS, expected=square_sum,
                        computed=frobenius, tolerance=frobenius_tol)
    return a.record(
        CheckId.TRACE_IDENTITIES,
        CheckStatus.FAIL,
        expected=square_sum,
        computed=frobenius,
        tolerance=frobenius_tol,
        witness=f"{a.graph6} trace_residual={trace!r} frobenius_residual={frobenius!r}",
    )


def check_cauchy_schwarz(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    """PE <= ρ + sqrt((n-1)(tr P^2 - ρ^2))，tr P^2 <= n(n-1)Δ^2"""
    n = a.graph.n
    square_sum = a.matrix.square_sum()
    trace_bound = trace_square_bound(n, max_degree(a.graph)) if n else 0
    energy_bound = energy_cauchy_schwarz_bound(n, a.rho, float(square_sum))
    slack = tol.equality * max(1.0, a.energy)
    problems = []
    if square_sum > trace_bound:
        problems.append(f"tr(P^2)={square_sum} > n(n-1)Δ^2={trace_bound}")
    if a.energy > energy_bound + slack:
        problems.append(f"PE={a.energy!r} > {energy_bound!r}")
    status = CheckStatus.FAIL if problems else CheckStatus.PASS
    return a.record(
        CheckId.CAUCHY_SCHWARZ,
        status,
        expected=energy_bound,
        computed=a.energy,
        tolerance=tol.equality,
        witness=f"{a.graph6} " + "; ".join(problems) if problems else None,
    )


def _canonical_cycle_first(a: GraphAnalysis) -> List[int]:
    on_cycle = cycle_vertices(a.graph)
    rest = sorted(set(range(a.graph.n)) - set(on_cycle))
    return sorted(on_cycle) + rest


def check_unicyclic_spectrum(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    """谱与闭式逐项相等，且按圈顶点在前重新标号后路径矩阵为分块形式"""
    k = a.cycle_length
    if k is None:
        return a.skipped(CheckId.UNICYCLIC_SPECTRUM, "不是单圈图")
    n = a.graph.n
    expected = unicyclic_spectrum_closed(n, k).eigenvalues
    deviation = max(abs(x - y) for x, y in zip(a.spectrum.eigenvalues, expected))
    block_ok = np.array_equal(
        a.matrix.block_relabel(_canonical_cycle_first(a)).entries,
        unicyclic_block_matrix(n, k),
    )
    if deviation <= tol.equality and block_ok:
        return a.record(CheckId.UNICYCLIC_SPECTRUM, CheckStatus.PASS, expected=expected[0],
                        computed=a.spectrum.eigenvalues[0], tolerance=tol.equality,
                        detail=f"k={k}")
    witness = f"{a.graph6} k={k} max_deviation={deviation!r} block_form={block_ok}"
    return a.record(CheckId.UNICYCLIC_SPECTRUM, CheckStatus.FAIL, expected=expected[0],
                    computed=a.spectrum.eigenvalues[0], tolerance=tol.equality,
                    witness=witness, detail=f"k={k}")


def check_unicyclic_energy(a: GraphAnalysis, tol: Tolerances) -> CheckRecord:
    k = a.cycle_length
    if k is None:
        return a.skipped(CheckId.UNICYCLIC_ENERGY, "不是单圈图")
    expected = unicyclic_energy_closed(a.graph.n, k)
    ok = abs(a.energy - expected) <= tol.equality
    return a.record(
        CheckId.UNICYCLIC_ENERGY,
        CheckStatus.PASS if ok else CheckStatus.FAIL,
        expected=expected,
        computed=a.energy,
        tolerance=tol.equality,
        witness=None if ok else f"{a.graph6} k={k} PE={a.energy!r}",
        detail=f"k={k}",
    )


GRAPH_CHECK_FUNCTIONS: Dict[CheckId, Callable[[GraphAnalysis, Tolerances], CheckRecord]] = {
    CheckId.SPECTRAL_RADIUS_BOUNDS: check_spectral_radius_bounds,
    CheckId.DEGREE_BOUND: check_degree_bound,
    CheckId.ENERGY_BOUNDS: check_energy_bounds,
    CheckId.ORACLE: check_oracle,
    CheckId.TRACE_IDENTITIES: check_trace_identities,
    CheckId.CAUCHY_SCHWARZ: check_cauchy_schwarz,
    CheckId.UNICYCLIC_SPECTRUM: check_unicyclic_spectrum,
    CheckId.UNICYCLIC_ENERGY: check_unicyclic_energy,
}


def run_graph_checks(graph_id: str, g: Graph, checks: List[CheckId], tolerances: Tolerances,
                     engine: Optional[FlowEngine] = None) -> List[CheckRecord]:
    """对一个语料图运行选中的单图检查"""
    selected = [check for check in GRAPH_CHECKS if check in checks]
    if not selected:
        return []
    need_spectrum = any(check in _SPECTRAL for check in selected)
    analysis = GraphAnalysis(graph_id, g, need_spectrum, tolerances, engine)
    records = []
    for check in selected:
        if check in _SPECTRAL and analysis.spectrum is None:
            records.append(analysis.skipped(check, "空图没有谱"))
            continue
        records.append(GRAPH_CHECK_FUNCTIONS[check](analysis, tolerances))
    return records


# ---- 参数检查 ----

def _param_record(check: CheckId, subject: str, status: CheckStatus, **fields) -> CheckRecord:
    if status == CheckStatus.FAIL and not fields.get("witness"):
        fields["witness"] = subject
    return CheckRecord(check=check, subject=subject, status=status, **fields)


def check_rho2_sign(n: int, tol: Tolerances) -> List[CheckRecord]:
    """区间表述（n >= 7且3 <= k <= n-3时ρ2 > 0）与闭式ρ2的符号比较；ρ2 = 0记为discrepancy"""
    records = []
    for k in range(3, n):
        subject = f"(n={n},k={k})"
        stated = stated_rho2_positive(n, k)
        rho2 = unicyclic_rho12(n, k)[1]
        actual = rho2 > tol.zero
        if stated == actual:
            status, detail = CheckStatus.PASS, ""
        elif abs(rho2) <= tol.zero:
            status, detail = CheckStatus.DISCREPANCY, "ρ2 = 0，区间表述认为ρ2 > 0"
        else:
            status, detail = CheckStatus.FAIL, "ρ2符号与区间表述不一致"
        records.append(_param_record(
            CheckId.RHO2_SIGN, subject, status,
            expected="positive" if stated else "nonpositive",
            computed=rho2, tolerance=tol.zero, detail=detail,
        ))
    return records


def check_unicyclic_extremes(n: int, tol: Tolerances) -> List[CheckRecord]:
    """最大值4(n-1)只在k = n取到；文献最小值与逐k枚举的最小值比较"""
    extremes = unicyclic_extremes(n)
    profile = unicyclic_energy_profile(n)
    energies = [energy for _, energy in profile]

    top = max(energies)
    attained = [k for k, energy in profile if abs(energy - extremes.max) <= tol.equality]
    max_ok = abs(top - extremes.max) <= tol.equality and attained == [n]
    records = [_param_record(
        CheckId.UNICYCLIC_EXTREMES, f"(n={n},max)",
        CheckStatus.PASS if max_ok else CheckStatus.FAIL,
        expected=extremes.max, computed=top, tolerance=tol.equality,
        witness=None if max_ok else f"(n={n}) max attained at k={attained}",
    )]

    bottom = min(energies)
    argmin = profile[energies.index(bottom)][0]
    if abs(bottom - extremes.stated_min) <= tol.equality:
        status, detail = CheckStatus.PASS, ""
    elif bottom - extremes.stated_min > tol.discrepancy_gap:
        status, detail = CheckStatus.DISCREPANCY, f"实际最小值{bottom!r}在k={argmin}取到，大于文献值"
    else:
        status, detail = CheckStatus.FAIL, f"实际最小值{bottom!r}在k={argmin}取到"
    records.append(_param_record(
        CheckId.UNICYCLIC_EXTREMES, f"(n={n},min)", status,
        expected=extremes.stated_min, computed=bottom, tolerance=tol.equality, detail=detail,
    ))
    return records


def _strictly_increasing(n: int, check: CheckId, values: List[float], margin: float,
                         expected: str) -> CheckRecord:
    subject = f"(n={n})"
    for offset in range(1, len(values)):
        if values[offset] - values[offset - 1] <= margin:
            k = offset + 3
            return _param_record(
                check, subject, CheckStatus.FAIL, expected=expected,
                computed=values[offset] - values[offset - 1], tolerance=margin,
                witness=f"(n={n},k={k - 1})->(n={n},k={k})",
            )
    gap = min(b - a for a, b in zip(values, values[1:]))
    return _param_record(check, subject, CheckStatus.PASS, expected=expected,
                         computed=gap, tolerance=margin)


def check_energy_monotone(n: int, tol: Tolerances) -> List[CheckRecord]:
    """固定n时PE(U(n,k))关于k严格递增"""
    if n < 4:
        return [_param_record(CheckId.ENERGY_MONOTONE, f"(n={n})", CheckStatus.SKIPPED,
                              detail="需要n >= 4")]
    energies = [energy for _, energy in unicyclic_energy_profile(n)]
    return [_strictly_increasing(n, CheckId.ENERGY_MONOTONE, energies, tol.monotone_margin,
                                 "strictly increasing in k")]


def check_unicyclic_radius(n: int, tol: Tolerances) -> List[CheckRecord]:
    """ρ(U(n,k))关于k严格递增，k = 3处为(n+sqrt(n^2-4n+28))/2，ρ(C_n) = 2(n-1) <= (n-1)^2"""
    if n < 3:
        return [_param_record(CheckId.UNICYCLIC_RADIUS, f"(n={n})", CheckStatus.SKIPPED,
                              detail="需要n >= 3")]
    radii = [unicyclic_spectral_radius(n, k) for k in range(3, n + 1)]
    records = []
    if n >= 4:
        records.append(_strictly_increasing(n, CheckId.UNICYCLIC_RADIUS, radii, tol.monotone_margin,
                                            "strictly increasing in k"))
    minimum = unicyclic_min_spectral_radius(n)
    cycle_radius = radii[-1]
    ok = abs(radii[0] - minimum) <= tol.equality and cycle_radius <= (n - 1) ** 2 + tol.equality
    records.append(_param_record(
        CheckId.UNICYCLIC_RADIUS, f"(n={n},min)",
        CheckStatus.PASS if ok else CheckStatus.FAIL,
        expected=minimum, computed=radii[0], tolerance=tol.equality,
        detail=f"rho(C_n)={cycle_radius!r}",
    ))
    return records


PARAMETRIC_CHECK_FUNCTIONS: Dict[CheckId, Callable[[int, Tolerances], List[CheckRecord]]] = {
    CheckId.RHO2_SIGN: check_rho2_sign,
    CheckId.UNICYCLIC_EXTREMES: check_unicyclic_extremes,
    CheckId.ENERGY_MONOTONE: check_energy_monotone,
    CheckId.UNICYCLIC_RADIUS: check_unicyclic_radius,
}


def run_parametric_checks(orders: List[int], checks: List[CheckId],
                          tolerances: Tolerances) -> List[CheckRecord]:
    """对语料中出现的每个n运行选中的参数检查；n < 3没有单圈图，不产生记录"""
    records = []
    for check in PARAMETRIC_CHECKS:
        if check not in checks:
            continue
        for n in orders:
            if n < 3:
                continue
            records.extend(PARAMETRIC_CHECK_FUNCTIONS[check](n, tolerances))
    return records
