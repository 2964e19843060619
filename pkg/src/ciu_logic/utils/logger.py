import logging
import logging.handlers
from datetime import datetime, timezone
from typing import Optional, Dict, Any
import json

from .config import settings

# LogRecord 기본 속성 (extra 필드 추출용)
_RESERVED_ATTRS = set(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime"}


class ColoredFormatter(logging.Formatter):
    """컬러 포맷터 (터미널용)"""

    COLORS = {
        'DEBUG': '\033[36m',     # Cyan
        'INFO': '\033[32m',      # Green
        'WARNING': '\033[33m',   # Yellow
        'ERROR': '\033[31m',     # Red
        'CRITICAL': '\033[35m',  # Magenta
        'RESET': '\033[0m'       # Reset
    }

    def format(self, record):
        color = self.COLORS.get(record.levelname, self.COLORS['RESET'])
        original = record.levelname
        record.levelname = f"{color}{record.levelname}{self.COLORS['RESET']}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


class JSONFormatter(logging.Formatter):
    """JSON 포맷터 (구조화된 로그용)"""

    def format(self, record):
        log_entry = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno
        }

        for key, value in vars(record).items():
            if key not in _RESERVED_ATTRS and key not in log_entry:
                log_entry[key] = value

        if record.exc_info:
            log_entry['exception'] = self.formatException(record.exc_info)

        return json.dumps(log_entry, ensure_ascii=False, default=str)


def setup_logger(
    name: str,
    level: Optional[str] = None,
    console_output: bool = True,
    file_output: Optional[bool] = None,
    json_format: bool = False
) -> logging.Logger:
    """로거 설정"""

    logger = logging.getLogger(name)

    # 이미 설정된 경우 반환
    if logger.handlers:
        return logger

    log_level = level or settings.log_level
    logger.setLevel(getattr(logging, log_level.upper()))
    logger.propagate = False

    if json_format:
        formatter = JSONFormatter()
        console_formatter = JSONFormatter()
    else:
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        console_formatter = ColoredFormatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

    # 콘솔 핸들러 (stdout 은 명령 출력 전용)
    if console_output:
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(console_formatter)
        logger.addHandler(console_handler)

    if file_output is None:
        file_output = settings.log_to_file

    # 파일 핸들러
    if file_output:
        settings.logs_dir.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            settings.logs_dir / f"{name}.log",
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5,
            encoding="utf-8"
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

        # 에러 로그 파일 (ERROR 이상)
        error_handler = logging.handlers.RotatingFileHandler(
            settings.logs_dir / "error.log",
            maxBytes=10*1024*1024,
            backupCount=5,
            encoding="utf-8"
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(formatter)
        logger.addHandler(error_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """로거 반환 (이미 설정된 경우 재사용)"""
    return logging.getLogger(name)


class EntailmentLogger:
    """귀결 판정 전용 로거"""

    def __init__(self, logger_name: str = "ciu_logic.entailment"):
        self.logger = setup_logger(logger_name, json_format=True)

    def log_query_start(self, oracle: str, n: int, sequent: str, space: int):
        """판정 시작 로그"""
        self.logger.debug(
            f"판정 시작: {sequent} (n={n}, {oracle})",
            extra={
                'event': 'query_start',
                'oracle': oracle,
                'level_n': n,
                'sequent': sequent,
                'space': space
            }
        )

    def log_query_complete(self, oracle: str, n: int, sequent: str, holds: bool,
                           examined: int, processing_time: float):
        """판정 완료 로그"""
        self.logger.info(
            f"판정 완료: {sequent} (n={n}, {oracle}) -> {'holds' if holds else 'fails'}",
            extra={
                'event': 'query_complete',
                'oracle': oracle,
                'level_n': n,
                'sequent': sequent,
                'holds': holds,
                'examined': examined,
                'processing_time': processing_time
            }
        )

    def log_resource_limit(self, what: str, bound: int, limit: int):
        """한도 초과 로그"""
        self.logger.warning(
            f"한도 초과: {what} = {bound} > {limit}",
            extra={
                'event': 'resource_limit',
                'what': what,
                'bound': bound,
                'limit': limit
            }
        )

    def log_disagreement(self, n: int, sequent: str, details: Dict[str, Any]):
        """오라클 불일치 로그"""
        self.logger.error(
            f"오라클 불일치: {sequent} (n={n})",
            extra={
                'event': 'oracle_disagreement',
                'level_n': n,
                'sequent': sequent,
                'details': details
            }
        )


class PerformanceLogger:
    """성능 모니터링 로거"""

    def __init__(self, logger_name: str = "ciu_logic.performance"):
        self.logger = setup_logger(logger_name, json_format=True)

    def log_processing_time(self, operation: str, processing_time: float, **context):
        """처리 시간 로그"""
        self.logger.debug(
            f"Processing: {operation}",
            extra={
                'event': 'processing_time',
                'operation': operation,
                'processing_time': processing_time,
                **context
            }
        )


# 글로벌 로거 인스턴스
app_logger = setup_logger("ciu_logic")
entailment_logger = EntailmentLogger()
performance_logger = PerformanceLogger()


def set_log_level(level: str):
    """애플리케이션 로거 전체의 레벨 변경"""
    for logger in (app_logger, entailment_logger.logger, performance_logger.logger):
        logger.setLevel(getattr(logging, level.upper()))
