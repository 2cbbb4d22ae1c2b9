"""异常层级，每一类对应一个 CLI 退出码"""
from typing import Optional

EXIT_OK = 0
EXIT_GENERIC = 1
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_CONSISTENCY = 5


class IndubitableError(Exception):
    """所有领域异常的基类"""

    exit_code = EXIT_GENERIC


class GraphFormatError(IndubitableError, ValueError):
    """graph6 / 边表 / 划分文本格式错误"""

    exit_code = EXIT_PARSE

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"第 {line} 行")
        if offset is not None:
            where.append(f"字节偏移 {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class InvalidGraphError(IndubitableError, ValueError):
    """边越界、自环等"""

    exit_code = EXIT_PARSE


class PreconditionError(IndubitableError, ValueError):
    """输入不满足操作前置条件（不连通、非正则、参数非法…）"""

    exit_code = EXIT_PRECONDITION


class PartitionError(PreconditionError):
    """划分重叠/缺失顶点/空格子，或不是所需的不可疑划分"""


class FamilyError(PreconditionError):
    """图族参数非法"""


class SchemeBasisError(PreconditionError):
    """方案基矩阵不满足 01、对称、互不相交、和为 J"""


class ConsistencyError(IndubitableError, RuntimeError):
    """组合计算与谱计算互相矛盾：要么是 bug，要么是数值失败"""

    exit_code = EXIT_CONSISTENCY


class StructuralViolation(ConsistencyError):
    """幂等阵恰有两个取值，但 K 不是等价关系矩阵"""


class SpectralError(ConsistencyError):
    """特征分解失败或幂等阵不变量不成立"""
