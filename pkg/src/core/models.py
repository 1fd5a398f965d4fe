import json
from typing import Dict, List, Optional, Union
from enum import Enum
from pydantic import BaseModel, ConfigDict, Field, field_validator


class FamilyKind(str, Enum):
    """图族类型枚举"""
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    UNICYCLIC = "unicyclic"
    RANDOM = "random"
    TRIANGLE_CHAIN = "triangle-chain"


class AttachmentShape(str, Enum):
    """单圈图中树部分的挂接方式"""
    PENDANT_PATH = "pendant-path"
    PENDANT_STAR = "pendant-star"
    RANDOM_TREE = "random-tree"


class FlowEngine(str, Enum):
    """最大流引擎：scipy的编译实现或纯Python的BFS残量网络实现"""
    SCIPY = "scipy"
    BFS = "bfs"


class OutputFormat(str, Enum):
    """输出格式枚举"""
    TSV = "tsv"
    JSON = "json"
    TEXT = "text"


class GraphFamily(BaseModel):
    """图族参数"""
    kind: FamilyKind = Field(description="图族类型")
    n: int = Field(description="顶点数；triangle-chain时为三角形个数")
    k: Optional[int] = Field(default=None, description="单圈图的圈长")
    shape: AttachmentShape = Field(default=AttachmentShape.PENDANT_PATH, description="挂接方式")
    seed: Optional[int] = Field(default=None, description="随机种子")
    m: Optional[int] = Field(default=None, description="random族的边数")


class Spectrum(BaseModel):
    """实对称矩阵的谱，特征值按非增顺序排列"""
    model_config = ConfigDict(frozen=True)

    eigenvalues: List[float] = Field(default_factory=list, description="非增排列的特征值")

    @field_validator("eigenvalues")
    @classmethod
    def _sort_nonincreasing(cls, values: List[float]) -> List[float]:
        return sorted((float(v) for v in values), reverse=True)

    @property
    def order(self) -> int:
        return len(self.eigenvalues)


class UnicyclicSpectrum(BaseModel):
    """单圈图U(n,k)路径矩阵谱的闭式表示（3 <= k <= n-1）"""
    n: int = Field(description="顶点数")
    k: int = Field(description="圈长")
    rho1: float = Field(description="谱半径")
    rho2: float = Field(description="第二大特征值")
    minus_two_multiplicity: int = Field(description="特征值-2的重数 k-1")
    minus_one_multiplicity: int = Field(description="特征值-1的重数 n-k-1")

    def to_spectrum(self) -> Spectrum:
        values = (
            [self.rho1, self.rho2]
            + [-2.0] * self.minus_two_multiplicity
            + [-1.0] * self.minus_one_multiplicity
        )
        return Spectrum(eigenvalues=values)


class EnergyBounds(BaseModel):
    """路径能量的上下界"""
    n: int = Field(description="顶点数")
    general_lower: float = Field(description="连通图下界 2(n-1)")
    general_upper: float = Field(description="连通图上界 2(n-1)^2")
    unicyclic_upper: float = Field(description="单圈图上界 4(n-1)")
    unicyclic_stated_lower: float = Field(description="单圈图文献下界 n+sqrt(n^2-4n+28)")


class UnicyclicExtremes(BaseModel):
    """单圈图路径能量的文献极值"""
    n: int = Field(description="顶点数")
    stated_min: float = Field(description="文献给出的最小值")
    max: float = Field(description="最大值 4(n-1)")
    argmin_k: int = Field(description="取最小值的圈长")
    argmax_is_cycle: bool = Field(description="最大值是否在圈图C_n处取到")


class CheckId(str, Enum):
    """验证检查项"""
    SPECTRAL_RADIUS_BOUNDS = "T1"
    DEGREE_BOUND = "T2"
    ENERGY_BOUNDS = "T3"
    UNICYCLIC_SPECTRUM = "T4"
    RHO2_SIGN = "L5"
    UNICYCLIC_ENERGY = "T7"
    UNICYCLIC_EXTREMES = "T8"
    ENERGY_MONOTONE = "C2"
    ORACLE = "ORACLE"
    TRACE_IDENTITIES = "TRACE"
    CAUCHY_SCHWARZ = "CS"
    UNICYCLIC_RADIUS = "UR"


class CheckStatus(str, Enum):
    """检查结果状态；discrepancy表示已记录的文献边界问题，不算失败"""
    PASS = "pass"
    FAIL = "fail"
    DISCREPANCY = "discrepancy"
    SKIPPED = "skipped"


Value = Union[int, float, str, None]


class CheckRecord(BaseModel):
    """单条检查记录"""
    check: CheckId = Field(description="检查项")
    subject: str = Field(description="图ID或(n,k)参数")
    status: CheckStatus = Field(description="状态")
    expected: Value = Field(default=None, description="期望值")
    computed: Value = Field(default=None, description="计算值")
    tolerance: Optional[float] = Field(default=None, description="容差")
    witness: Optional[str] = Field(default=None, description="失败见证：graph6串及出问题的顶点对或特征值")
    detail: str = Field(default="", description="说明")


class Tolerances(BaseModel):
    """验证使用的容差"""
    equality: float = Field(default=1e-7, description="实数相等判定")
    zero: float = Field(default=1e-9, description="视为零的阈值")
    monotone_margin: float = Field(default=1e-9, description="严格单调的最小间隔")
    discrepancy_gap: float = Field(default=1e-6, description="文献最小值与实际最小值的最小差距")
    eigen: float = Field(default=1e-10, description="Jacobi相对停止阈值")
    trace: float = Field(default=1e-8, description="|Σρ_i|的容差，乘以n")
    frobenius: float = Field(default=1e-6, description="|Σρ_i^2 - Σp_ij^2|的相对容差")


class VerificationReport(BaseModel):
    """验证报告"""
    corpus: str = Field(description="语料描述")
    checks: List[CheckId] = Field(description="运行的检查项")
    records: List[CheckRecord] = Field(default_factory=list, description="检查记录")

    @property
    def summary(self) -> Dict[str, Dict[str, int]]:
        counts: Dict[str, Dict[str, int]] = {
            check.value: {status.value: 0 for status in CheckStatus} for check in self.checks
        }
        for record in self.records:
            counts[record.check.value][record.status.value] += 1
        return counts

    def count(self, status: CheckStatus) -> int:
        return sum(1 for record in self.records if record.status == status)

    @property
    def exit_code(self) -> int:
        return 1 if self.count(CheckStatus.FAIL) else 0

    def to_json(self) -> str:
        payload = self.model_dump(mode="json")
        payload["summary"] = self.summary
        return json.dumps(payload, indent=2, ensure_ascii=False)
