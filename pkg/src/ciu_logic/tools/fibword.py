"""
피보나치 수열과 이진 전개

    σ(0) = 1,  σ(1) = 10,  W(1) = 0,  W(k+1) = σ(W(k)),  |W(k)| = Fb(k)
"""

from typing import List, Optional, Tuple

from ..utils import settings
from ..utils.errors import DomainError, MalformedValueError, ResourceLimitError

SIGMA = {"0": "1", "1": "10"}

# 분기 트리의 자식 순서는 σ 를 그대로 따른다
_CHILDREN = {1: (1, 0), 0: (1,)}


def fib(k: int, max_k: Optional[int] = None) -> int:
    """Fb(k), Fb(1) = Fb(2) = 1"""
    if k < 1:
        raise DomainError(f"Fibonacci index must be >= 1, got {k}")
    limit = max_k if max_k is not None else settings.max_fib_index
    if k > limit:
        raise ResourceLimitError("Fibonacci index k", k, limit)
    previous, current = 0, 1
    for _ in range(k - 1):
        previous, current = current, previous + current
    return current


def sigma(word: str) -> str:
    """글자별 치환 후 이어붙이기"""
    try:
        return "".join(SIGMA[letter] for letter in word)
    except KeyError as e:
        raise MalformedValueError(f"binary word may only contain '0' and '1': {word!r}") from e


def _check_expansion_index(k: int, max_k: Optional[int]) -> None:
    if k < 1:
        raise DomainError(f"expansion index must be >= 1, got {k}")
    limit = max_k if max_k is not None else settings.max_expansion
    if k > limit:
        raise ResourceLimitError("expansion index k", k, limit)


def expansion_levels(k: int, max_k: Optional[int] = None) -> List[str]:
    """W(1), ..., W(k) (트리의 각 층)"""
    _check_expansion_index(k, max_k)
    levels = ["0"]
    for _ in range(k - 1):
        levels.append(sigma(levels[-1]))
    return levels


def expansion(k: int, max_k: Optional[int] = None) -> str:
    """W(k)"""
    return expansion_levels(k, max_k)[-1]


def branch_sequences(n: int, max_support: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    W(2) 층의 루트(라벨 1)에서 시작하는 길이 n+1 경로의 깊이 우선 열거.

    라벨 1 노드의 자식은 (1, 0), 라벨 0 노드의 자식은 (1) 이다.
    결과는 정확히 Fb(n+3) 개이며 집합으로서 A_n 과 같다.
    """
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")
    limit = max_support if max_support is not None else settings.max_support
    size = fib(n + 3)
    if size > limit:
        raise ResourceLimitError(f"|A_{n}| = fib({n + 3})", size, limit)

    branches: List[Tuple[int, ...]] = []
    # (현재 노드 라벨, 지금까지의 경로)
    stack: List[Tuple[int, Tuple[int, ...]]] = [(1, ())]
    while stack:
        label, path = stack.pop()
        if len(path) == n + 1:
            branches.append(path)
            continue
        for child in reversed(_CHILDREN[label]):
            stack.append((child, path + (child,)))
    return branches
