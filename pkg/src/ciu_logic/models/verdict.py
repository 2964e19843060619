"""
판정 결과 및 보고서 모델
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .formula import Sequent, render_sequent
from .valuation import Assignment, TruthValue, render_value


@dataclass(frozen=True)
class EntailmentVerdict:
    """귀결 판정 결과; 반례는 정규 열거 순서상 첫 번째 실패 할당"""
    holds: bool
    oracle: str
    n: int
    sequent: Sequent
    examined: int
    countermodel: Optional[Assignment] = None

    def __post_init__(self):
        if self.holds != (self.countermodel is None):
            raise ValueError("countermodel must be present exactly when the entailment fails")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'oracle': self.oracle,
            'n': self.n,
            'sequent': render_sequent(self.sequent),
            'holds': self.holds,
            'examined': self.examined,
            'countermodel': self.countermodel.to_dict() if self.countermodel else None
        }


@dataclass(frozen=True)
class CrossCheckResult:
    """행렬 의미론과 쌍값 의미론의 판정 비교"""
    n: int
    sequent: Sequent
    matrix: EntailmentVerdict
    bival: EntailmentVerdict

    @property
    def agree(self) -> bool:
        return self.matrix.holds == self.bival.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'sequent': render_sequent(self.sequent),
            'agree': self.agree,
            'matrix': self.matrix.to_dict(),
            'bival': self.bival.to_dict()
        }


@dataclass(frozen=True)
class HierarchyViolation:
    sequent: Sequent
    n_low: int
    n_high: int
    oracle: str = "matrix"

    def describe(self) -> str:
        return (f"[{self.oracle}] {render_sequent(self.sequent)} holds at n={self.n_high} "
                f"but fails at n={self.n_low}")


@dataclass
class HierarchyReport:
    """n_low ≤ n_high 에서 '높은 단계에서 성립 ⇒ 낮은 단계에서 성립' 검사"""
    n_low: int
    n_high: int
    checked: int = 0
    violations: List[HierarchyViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class PropertyTally:
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    def record(self, ok: bool, witness: str = ""):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(witness)


@dataclass
class MetatheoryReport:
    """(Ext)/(Mon)/(Tran)/(Str)/반사성 표본 검사 결과"""
    n: int
    trials: int
    seed: int
    properties: Dict[str, PropertyTally] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(tally.failed == 0 for tally in self.properties.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'trials': self.trials,
            'seed': self.seed,
            'properties': {
                name: {'passed': tally.passed, 'failed': tally.failed}
                for name, tally in self.properties.items()
            }
        }


@dataclass(frozen=True)
class ParaconsistencyRow:
    n: int
    explosion: bool
    dne: bool

    @property
    def expected(self) -> bool:
        classical = self.n == 0
        return self.explosion == classical and self.dne == classical


@dataclass(frozen=True)
class CardinalityRow:
    n: int
    support_size: int
    fib_value: int
    designated_size: int
    previous_support_size: Optional[int]

    @property
    def expected(self) -> bool:
        designated_ok = (
            self.designated_size == 1 if self.previous_support_size is None
            else self.designated_size == self.previous_support_size
        )
        return self.support_size == self.fib_value and designated_ok


@dataclass(frozen=True)
class ReportRow:
    """`report` 명령의 한 행"""
    cardinality: CardinalityRow
    paraconsistency: ParaconsistencyRow

    @property
    def expected(self) -> bool:
        return self.cardinality.expected and self.paraconsistency.expected


@dataclass
class EquivalenceReport:
    """무작위 시퀀트 교차 검사 결과 (시드 포함)"""
    n: int
    seed: int
    checked: int = 0
    disagreements: List[CrossCheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


@dataclass(frozen=True)
class TruthTableRow:
    assignment: Tuple[Tuple[str, TruthValue], ...]
    value: TruthValue
    designated: bool

    def render(self) -> str:
        cells = [f"{atom}={render_value(value)}" for atom, value in self.assignment]
        mark = "*" if self.designated else " "
        return (" ".join(cells) + f" | {render_value(self.value)} {mark}").rstrip()
