from .config import (
    Settings,
    settings,
    get_settings,
    build_settings
)

from .errors import (
    CiuLogicError,
    FormulaSyntaxError,
    InvalidAtomError,
    DomainError,
    MalformedValueError,
    MalformedMatrixError,
    UnboundAtomError,
    ResourceLimitError
)

from .logger import (
    setup_logger,
    get_logger,
    EntailmentLogger,
    PerformanceLogger,
    app_logger,
    entailment_logger,
    performance_logger,
    set_log_level
)

__all__ = [
    'Settings',
    'settings',
    'get_settings',
    'build_settings',
    'CiuLogicError',
    'FormulaSyntaxError',
    'InvalidAtomError',
    'DomainError',
    'MalformedValueError',
    'MalformedMatrixError',
    'UnboundAtomError',
    'ResourceLimitError',
    'setup_logger',
    'get_logger',
    'EntailmentLogger',
    'PerformanceLogger',
    'app_logger',
    'entailment_logger',
    'performance_logger',
    'set_log_level'
]
