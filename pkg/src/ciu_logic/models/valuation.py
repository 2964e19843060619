"""
원자 할당 모델 (쌍값 시드 / 행렬 값매김)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Tuple

from .formula import Formula, render

# A_n 의 원소: 길이 n+1 비트 튜플
TruthValue = Tuple[int, ...]


def render_value(x: TruthValue) -> str:
    """외부 표기: n = 0 이면 0/1, 아니면 (b,...,b)"""
    if len(x) == 1:
        return str(x[0])
    return "(" + ",".join(str(bit) for bit in x) + ")"


@dataclass(frozen=True)
class Assignment:
    """원자 → 진리값 할당 (원자 이름순으로 고정)"""
    n: int
    assignment: Tuple[Tuple[str, TruthValue], ...] = ()

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[str, TruthValue]) -> "Assignment":
        return cls(n=n, assignment=tuple(sorted((atom, tuple(value)) for atom, value in mapping.items())))

    def as_dict(self) -> Dict[str, TruthValue]:
        return dict(self.assignment)

    def get(self, atom: str) -> Optional[TruthValue]:
        for name, value in self.assignment:
            if name == atom:
                return value
        return None

    @property
    def atoms(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.assignment)

    def to_dict(self) -> Dict[str, Any]:
        return {atom: list(value) for atom, value in self.assignment}

    def render_lines(self) -> Tuple[str, ...]:
        """`atom = (b,...,b)` 형식의 출력 줄"""
        return tuple(f"{atom} = {render_value(value)}" for atom, value in self.assignment)


@dataclass(frozen=True)
class BivalSeed(Assignment):
    """정규 Ciu^n 쌍값매김의 생성자: 각 원자의 초기 수열 (v(α), v(¬α), ..., v(¬^n α))"""


@dataclass(frozen=True)
class MatrixValuation(Assignment):
    """M_n 값매김 w 의 원자 부분"""


@dataclass(frozen=True)
class ConditionViolation:
    """쌍값매김 조건 위반"""
    condition: str
    formula: Formula
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'condition': self.condition,
            'formula': render(self.formula),
            'detail': self.detail
        }
