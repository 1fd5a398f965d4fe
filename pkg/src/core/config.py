import os
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()


class Settings(BaseSettings):
    """配置管理类"""

    model_config = SettingsConfigDict(
        env_prefix="PATHSPEC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # 日志配置（诊断信息输出到stderr）
    log_level: str = os.getenv("LOG_LEVEL", "WARNING")
    log_json: bool = True

    # 随机数种子，所有带种子的生成器默认使用它
    default_seed: int = 1729

    # 特征值求解配置
    eigen_tolerance: float = 1e-10
    eigen_max_sweeps: int = 100

    # 验证容差
    equality_tolerance: float = 1e-7
    zero_tolerance: float = 1e-9
    monotone_margin: float = 1e-9
    discrepancy_gap: float = 1e-6

    # 输出配置
    energy_decimals: int = 9

    # 路径矩阵计算配置
    workers: int = 1
    flow_engine: str = "scipy"
    biconnected_preprocessing: bool = True

    # 穷举/暴力搜索的规模上限
    oracle_max_n: int = 10
    oracle_path_cap: int = 1_000_000
    exhaustive_max_n: int = 7


# 全局配置实例
settings = Settings()
