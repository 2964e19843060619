"""
행렬 M_n = (A_n, D_n)

    A_n: 인접한 (0,0) 쌍이 없는 길이 n+1 비트 튜플
    D_n: 첫 좌표가 1 인 원소
    ¬(x_0, ..., x_n) = (x_1, ..., x_n, -x_n)
    x ⊃ y = (z_0, -z_0, z_0, ...),  z_0 = x_0 → y_0
"""

import json
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from ..models.valuation import TruthValue, render_value
from ..utils import settings, app_logger
from ..utils.errors import DomainError, MalformedMatrixError, MalformedValueError, ResourceLimitError
from .fibword import fib


def is_truth_value(x: Sequence[int], n: Optional[int] = None) -> bool:
    """x ∈ A_n 여부 (n 이 없으면 길이로 판단)"""
    if n is not None and len(x) != n + 1:
        return False
    if not x or any(bit not in (0, 1) for bit in x):
        return False
    return all(x[k] or x[k + 1] for k in range(len(x) - 1))


def check_truth_value(x: Sequence[int]) -> TruthValue:
    if not is_truth_value(x):
        raise MalformedValueError(f"not a truth value of any A_n: {tuple(x)!r}")
    return tuple(x)


def alternating(n: int, first: int) -> TruthValue:
    """완전 교대 튜플 (first, -first, first, ...)"""
    return tuple(first if k % 2 == 0 else 1 - first for k in range(n + 1))


def _check_level(n: int) -> None:
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")


def _support_guard(n: int, max_support: Optional[int]) -> int:
    _check_level(n)
    limit = max_support if max_support is not None else settings.max_support
    size = fib(n + 3)
    if size > limit:
        raise ResourceLimitError(f"|A_{n}| = fib({n + 3})", size, limit)
    return size


def build_support_recursive(n: int, max_support: Optional[int] = None) -> Set[TruthValue]:
    """A_0 = {0,1} 에서 시작해 (⋄.2) 로 한 좌표씩 확장"""
    _support_guard(n, max_support)
    support: Set[TruthValue] = {(0,), (1,)}
    for _ in range(n):
        support = {
            x + (bit,)
            for x in support
            for bit in (0, 1)
            if x[-1] == 1 or bit == 1
        }
    return support


def build_support_direct(n: int, max_support: Optional[int] = None,
                         max_evals: Optional[int] = None) -> Set[TruthValue]:
    """2^{n+1} 개 튜플 전체를 인접 00 금지 조건으로 거른다"""
    _support_guard(n, max_support)
    limit = max_evals if max_evals is not None else settings.max_evals
    if 2 ** (n + 1) > limit:
        raise ResourceLimitError(f"2^{n + 1} candidate tuples", 2 ** (n + 1), limit)
    return {x for x in product((0, 1), repeat=n + 1) if is_truth_value(x)}


def designated_set(n: int, max_support: Optional[int] = None) -> Set[TruthValue]:
    return {x for x in build_support_recursive(n, max_support) if x[0] == 1}


def neg_op(x: TruthValue) -> TruthValue:
    """¬x = (x_1, ..., x_n, -x_n); n = 0 이면 보수"""
    x = check_truth_value(x)
    return x[1:] + (1 - x[-1],)


def imp_op(x: TruthValue, y: TruthValue) -> TruthValue:
    x = check_truth_value(x)
    y = check_truth_value(y)
    if len(x) != len(y):
        raise MalformedValueError(f"length mismatch: {len(x)} vs {len(y)}")
    z0 = 0 if (x[0] == 1 and y[0] == 0) else 1
    return alternating(len(x) - 1, z0)


@dataclass(frozen=True)
class LogicMatrix:
    """M_n; 연산은 호출 시 계산"""
    n: int
    values: Tuple[TruthValue, ...]
    designated: Tuple[bool, ...]
    _index: Dict[TruthValue, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.values)})

    @property
    def size(self) -> int:
        return len(self.values)

    def index(self, x: TruthValue) -> int:
        try:
            return self._index[tuple(x)]
        except KeyError as e:
            raise MalformedValueError(f"{tuple(x)!r} is not an element of A_{self.n}") from e

    def is_designated(self, x: TruthValue) -> bool:
        return self.designated[self.index(x)]

    def neg(self, x: TruthValue) -> TruthValue:
        return neg_op(x)

    def imp(self, x: TruthValue, y: TruthValue) -> TruthValue:
        return imp_op(x, y)


def build_matrix(n: int, max_support: Optional[int] = None) -> LogicMatrix:
    values = tuple(sorted(build_support_recursive(n, max_support)))
    return LogicMatrix(n=n, values=values, designated=tuple(x[0] == 1 for x in values))


class GenericMatrix(BaseModel):
    """인덱스 표로 구체화된 유한 행렬 (JSON 스키마와 동일한 필드 순서)"""
    model_config = ConfigDict(frozen=True)

    n: int
    values: List[List[int]]
    designated: List[int]
    neg: List[int]
    imp: List[List[int]]

    @model_validator(mode="after")
    def _check_tables(self) -> "GenericMatrix":
        size = len(self.values)
        if size == 0:
            raise ValueError("matrix must have at least one value")
        if len({tuple(v) for v in self.values}) != size:
            raise ValueError("values must be distinct")
        if len(self.neg) != size:
            raise ValueError(f"neg table has {len(self.neg)} entries, expected {size}")
        if len(self.imp) != size or any(len(row) != size for row in self.imp):
            raise ValueError(f"imp table must be {size}x{size}")
        entries = list(self.neg) + [entry for row in self.imp for entry in row] + list(self.designated)
        if any(not 0 <= entry < size for entry in entries):
            raise ValueError("table entry out of range")
        if len(set(self.designated)) != len(self.designated):
            raise ValueError("designated indices must be distinct")
        return self

    @property
    def size(self) -> int:
        return len(self.values)


def materialize(m: LogicMatrix, max_table_entries: Optional[int] = None) -> GenericMatrix:
    limit = max_table_entries if max_table_entries is not None else settings.max_table_entries
    if m.size ** 2 > limit:
        raise ResourceLimitError(f"imp table entries for |A_{m.n}| = {m.size}", m.size ** 2, limit)
    return GenericMatrix(
        n=m.n,
        values=[list(x) for x in m.values],
        designated=[i for i, d in enumerate(m.designated) if d],
        neg=[m.index(m.neg(x)) for x in m.values],
        imp=[[m.index(m.imp(x, y)) for y in m.values] for x in m.values],
    )


def relabel(g: GenericMatrix, perm: Sequence[int]) -> GenericMatrix:
    """원소 i 를 perm[i] 로 옮긴 복사본"""
    size = g.size
    if sorted(perm) != list(range(size)):
        raise MalformedMatrixError(f"not a permutation of range({size}): {list(perm)!r}")
    values: List[List[int]] = [[] for _ in range(size)]
    neg = [0] * size
    imp = [[0] * size for _ in range(size)]
    for i in range(size):
        values[perm[i]] = list(g.values[i])
        neg[perm[i]] = perm[g.neg[i]]
        for j in range(size):
            imp[perm[i]][perm[j]] = perm[g.imp[i][j]]
    return GenericMatrix(
        n=g.n,
        values=values,
        designated=sorted(perm[d] for d in g.designated),
        neg=neg,
        imp=imp,
    )


def find_isomorphism(a: GenericMatrix, b: GenericMatrix,
                     max_size: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    두 연산과 지정 집합을 보존하는 첫 번째 전단사 (사전순 순열 순서).

    반환값 f 는 a 의 원소 i 를 b 의 원소 f[i] 로 보낸다. 없으면 None.
    """
    if a.size != b.size:
        return None
    limit = max_size if max_size is not None else settings.max_iso_size
    if a.size > limit:
        raise ResourceLimitError("matrix size for isomorphism search", a.size, limit)
    if len(a.designated) != len(b.designated):
        return None

    size = a.size
    a_neg, b_neg = np.asarray(a.neg), np.asarray(b.neg)
    a_imp, b_imp = np.asarray(a.imp), np.asarray(b.imp)
    a_des = np.zeros(size, dtype=bool)
    a_des[list(a.designated)] = True
    b_des = np.zeros(size, dtype=bool)
    b_des[list(b.designated)] = True

    for perm in permutations(range(size)):
        f = np.asarray(perm)
        if not np.array_equal(a_des, b_des[f]):
            continue
        if not np.array_equal(f[a_neg], b_neg[f]):
            continue
        if not np.array_equal(f[a_imp], b_imp[np.ix_(f, f)]):
            continue
        app_logger.debug(f"동형 사상 발견: {perm}")
        return tuple(perm)
    return None


def export_json(g: GenericMatrix) -> str:
    """결정적 JSON (키 순서 n, values, designated, neg, imp)"""
    payload = g.model_dump()
    lines = [
        f'  "{key}": {json.dumps(payload[key], separators=(", ", ": "))}'
        for key in ("n", "values", "designated", "neg", "imp")
    ]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def import_json(text: str) -> GenericMatrix:
    try:
        return GenericMatrix.model_validate_json(text)
    except ValidationError as e:
        raise MalformedMatrixError(f"invalid matrix document: {e.error_count()} error(s): "
                                   f"{e.errors()[0]['msg']}") from e


def format_tables(g: GenericMatrix) -> str:
    """¬ 는 2행 표, ⊃ 는 정사각 격자 (행 = 전건)"""
    labels = [render_value(tuple(v)) for v in g.values]
    width = max(len(label) for label in labels)
    head = max(width, 2)

    def row(first: str, cells: List[str]) -> str:
        return (first.ljust(head) + " | " + " ".join(cell.ljust(width) for cell in cells)).rstrip()

    def rule() -> str:
        return "-" * head + "-+-" + "-" * ((width + 1) * len(labels) - 1)

    lines = [
        row("~", labels),
        rule(),
        row("", [labels[i] for i in g.neg]),
        "",
        row("->", labels),
        rule(),
    ]
    for i, label in enumerate(labels):
        lines.append(row(label, [labels[j] for j in g.imp[i]]))
    return "\n".join(lines) + "\n"
