"""
정규 Ciu^n 쌍값매김

시드는 각 원자의 초기 수열 (v(α), v(¬α), ..., v(¬^n α)) 이며, 나머지 수식의 값은
다음 규칙으로 결정된다:

    ¬^k α (k ≤ n)   시드의 k 번째 비트
    ¬ψ (그 외)       1 - v(ψ)
    ψ ⊃ θ          v(ψ) → v(θ)
"""

from itertools import product
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..models.formula import Atom, Formula, Imp, Neg, connective_count, neg_decompose, render
from ..models.valuation import BivalSeed, ConditionViolation, MatrixValuation, TruthValue
from ..utils import settings
from ..utils.errors import DomainError, ResourceLimitError, UnboundAtomError
from .fibword import fib


def initial_sequences(n: int) -> List[TruthValue]:
    """조건 (1) 을 만족하는 길이 n+1 초기 수열 (오름차순)"""
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")
    return [
        bits for bits in product((0, 1), repeat=n + 1)
        if not any(bits[k] == 0 and bits[k + 1] == 0 for k in range(n))
    ]


def seed_space_size(n: int, atom_count: int) -> int:
    return fib(n + 3) ** atom_count


def check_enumeration(n: int, atom_count: int, max_evals: Optional[int] = None) -> int:
    """열거 규모 Fb(n+3)^m 확인"""
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")
    limit = max_evals if max_evals is not None else settings.max_evals
    bound = seed_space_size(n, atom_count)
    if bound > limit:
        raise ResourceLimitError(f"fib({n + 3})^{atom_count} valuations", bound, limit)
    return bound


def enumerate_seeds(n: int, atoms: Sequence[str], max_evals: Optional[int] = None) -> Iterator[BivalSeed]:
    """(원자 순서, 튜플 순서) 사전순으로 모든 시드 생성; 한도는 호출 시점에 검사"""
    atoms = list(dict.fromkeys(atoms))
    check_enumeration(n, len(atoms), max_evals)
    return _iter_seeds(n, atoms, initial_sequences(n))


def _iter_seeds(n: int, atoms: List[str], sequences: List[TruthValue]) -> Iterator[BivalSeed]:
    for combo in product(sequences, repeat=len(atoms)):
        yield BivalSeed(n=n, assignment=tuple(sorted(zip(atoms, combo))))


class BivaluationEvaluator:
    """한 시드에 대한 v 의 평가기 (질의 단위 메모이제이션)"""

    def __init__(self, seed: BivalSeed):
        self.seed = seed
        self.n = seed.n
        self._bits: Dict[str, TruthValue] = seed.as_dict()
        self._memo: Dict[Formula, int] = {}

    def __call__(self, f: Formula) -> int:
        cached = self._memo.get(f)
        if cached is not None:
            return cached
        value = self._evaluate(f)
        self._memo[f] = value
        return value

    def _evaluate(self, f: Formula) -> int:
        tower = neg_decompose(f)
        if isinstance(tower.core, Atom) and tower.k <= self.n:
            bits = self._bits.get(tower.core.name)
            if bits is None:
                raise UnboundAtomError(tower.core.name)
            return bits[tower.k]
        if isinstance(f, Neg):
            return 1 - self(f.body)
        # 조건 (4)
        return 0 if (self(f.left) == 1 and self(f.right) == 0) else 1


def eval_bival(seed: BivalSeed, f: Formula) -> int:
    return BivaluationEvaluator(seed)(f)


def to_matrix_valuation(seed: BivalSeed) -> MatrixValuation:
    """w_v: 시드 튜플이 곧 w_v(α)"""
    return MatrixValuation(n=seed.n, assignment=seed.assignment)


def from_matrix_valuation(w: MatrixValuation) -> BivalSeed:
    """v_w: 유도되는 쌍값매김은 결과 시드의 eval_bival"""
    return BivalSeed(n=w.n, assignment=w.assignment)


def audit_conditions(
    seed: BivalSeed,
    formulas: Iterable[Formula],
    valuation: Optional[Callable[[Formula], int]] = None
) -> List[ConditionViolation]:
    """
    주어진 유한 집합 안에서 성립해야 하는 조건 (1), (2.n), (3), (4) 의 모든 사례 검사.

    valuation 을 넘기면 그 함수로 v 를 대신한다 (결함 주입 검사용).
    """
    v = valuation or BivaluationEvaluator(seed)
    n = seed.n
    pool: Set[Formula] = set(formulas)
    violations: List[ConditionViolation] = []

    # 결정적 보고 순서
    for f in sorted(pool, key=_sort_key):
        if isinstance(f, Neg) and f.body in pool:
            # (1) v(¬φ) = 0 ⇒ v(φ) = 1
            if v(f) == 0 and v(f.body) != 1:
                violations.append(ConditionViolation("1", f, "v(~phi) = 0 but v(phi) = 0"))
            # (3) v(¬(φ⊃ψ)) = 1 ⇒ v(φ⊃ψ) = 0
            if isinstance(f.body, Imp) and v(f) == 1 and v(f.body) != 0:
                violations.append(ConditionViolation("3", f, "v(~(phi -> psi)) = 1 but v(phi -> psi) = 1"))
            # (2.n) v(¬^{n+1}φ) = 1 ⇒ v(¬^n φ) = 0 ; f.body = ¬^n φ
            if neg_decompose(f).k >= n + 1 and v(f) == 1 and v(f.body) != 0:
                violations.append(ConditionViolation(f"2.{n}", f, f"v(~^{n + 1} phi) = 1 but v(~^{n} phi) = 1"))
        if isinstance(f, Imp) and f.left in pool and f.right in pool:
            # (4) v(φ⊃ψ) = 1 ⟺ v(φ) = 0 또는 v(ψ) = 1
            expected = 0 if (v(f.left) == 1 and v(f.right) == 0) else 1
            if v(f) != expected:
                violations.append(ConditionViolation("4", f, f"v(phi -> psi) = {v(f)}, expected {expected}"))
    return violations


def _sort_key(f: Formula) -> Tuple[int, str]:
    return connective_count(f), render(f)
