"""예외 계층"""

from typing import Optional


class CiuLogicError(Exception):
    """라이브러리 공통 예외"""


class FormulaSyntaxError(CiuLogicError, ValueError):
    """수식/시퀀트 구문 오류 (UTF-8 바이트 오프셋 포함)"""

    def __init__(self, message: str, offset: int, expected: Optional[str] = None):
        self.offset = offset
        self.expected = expected
        detail = f"{message} at byte {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class InvalidAtomError(CiuLogicError, ValueError):
    """원자 이름이 [a-z][a-z0-9_]* 형식이 아님"""


class DomainError(CiuLogicError, ValueError):
    """정의역 밖의 인자 (예: fib(0))"""


class MalformedValueError(CiuLogicError, ValueError):
    """A_n 에 속하지 않는 비트 튜플, 잘못된 이진 단어, 길이 불일치"""


class MalformedMatrixError(CiuLogicError, ValueError):
    """행렬 표의 인덱스 불변식 위반"""


class UnboundAtomError(CiuLogicError, KeyError):
    """평가 중 값이 할당되지 않은 원자"""

    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"atom '{atom}' has no assigned value")

    def __str__(self) -> str:
        return self.args[0]


class ResourceLimitError(CiuLogicError):
    """계산 규모가 설정된 한도를 초과"""

    def __init__(self, what: str, bound: int, limit: int):
        self.what = what
        self.bound = bound
        self.limit = limit
        super().__init__(f"{what} = {bound} exceeds limit {limit}")
