from typing import Optional


class PathSpecError(Exception):
    """所有库错误的基类"""


class ParameterError(PathSpecError, ValueError):
    """参数错误：s = t、k越界、未知检查项、规模超限等"""


class GraphFormatError(PathSpecError, ValueError):
    """图格式解析错误，offset为graph6的字节偏移或边表的行号"""

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)


class NumericalError(PathSpecError, ArithmeticError):
    """数值计算错误，例如Jacobi迭代不收敛"""


class ScaleGuardError(PathSpecError):
    """暴力搜索超出规模上限，拒绝返回可能错误的结果"""
