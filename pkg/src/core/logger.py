import logging
import sys
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional
import structlog
from src.core.config import settings


def configure_logging(level: Optional[str] = None, json_output: Optional[bool] = None) -> None:
    """配置结构化日志；诊断信息一律写到stderr，stdout只留给结果"""
    level = (level or settings.log_level).upper()
    json_output = settings.log_json if json_output is None else json_output

    root = logging.getLogger()
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.WARNING))

    renderer = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if json_output
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


configure_logging()


def get_logger(name: str, **context: Any) -> structlog.stdlib.BoundLogger:
    """获取结构化日志器，可绑定固定上下文"""
    logger = structlog.get_logger(name)
    return logger.bind(**context) if context else logger


class LoggerMixin:
    """日志混入类，日志器绑定component字段"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.logger = get_logger(self.__class__.__module__, component=self.__class__.__name__)

    def log_info(self, message: str, **kwargs):
        self.logger.info(message, **kwargs)

    def log_warning(self, message: str, **kwargs):
        self.logger.warning(message, **kwargs)

    def log_error(self, message: str, **kwargs):
        self.logger.error(message, **kwargs)

    def log_debug(self, message: str, **kwargs):
        self.logger.debug(message, **kwargs)

    @contextmanager
    def log_duration(self, message: str, **fields: Any) -> Iterator[Dict[str, Any]]:
        """计时并在结束时记录一条info日志；yield出的字典可在块内补充字段"""
        started = time.perf_counter()
        extra: Dict[str, Any] = {}
        yield extra
        self.log_info(message, seconds=round(time.perf_counter() - started, 6), **fields, **extra)
