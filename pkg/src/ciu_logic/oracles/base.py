from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from itertools import islice, product
from typing import Dict, List, Optional, Sequence, Tuple

from ..models.formula import Sequent, render_sequent
from ..models.valuation import Assignment, TruthValue
from ..models.verdict import EntailmentVerdict
from ..utils import Settings, get_settings, app_logger, entailment_logger, performance_logger
from ..utils.errors import ResourceLimitError

# 이보다 작은 공간은 병렬화하지 않음
PARALLEL_THRESHOLD = 4096


class EnumerationOracle(ABC):
    """정규 순서(원자 이름순 × 값 오름차순) 전수 열거 기반 귀결 판정기"""

    name = "base"

    def __init__(self, n: int, settings: Optional[Settings] = None):
        self.n = n
        self.settings = settings or get_settings()

    @abstractmethod
    def candidate_values(self) -> Sequence[TruthValue]:
        """원자 하나가 가질 수 있는 값 (정규 순서)"""

    @abstractmethod
    def refutes(self, assignment: Dict[str, TruthValue], sequent: Sequent) -> bool:
        """모든 전제가 지정되고 결론이 지정되지 않으면 True"""

    @abstractmethod
    def make_countermodel(self, assignment: Dict[str, TruthValue]) -> Assignment:
        """반례 객체 생성"""

    def space_size(self, atom_count: int) -> int:
        return len(self.candidate_values()) ** atom_count

    def _guard(self, atom_count: int) -> int:
        bound = self.space_size(atom_count)
        limit = self.settings.max_evals
        if bound > limit:
            what = f"fib({self.n + 3})^{atom_count} valuations"
            entailment_logger.log_resource_limit(what, bound, limit)
            raise ResourceLimitError(what, bound, limit)
        return bound

    def first_counterexample(self, sequent: Sequent, atoms: Tuple[str, ...],
                             lo: int, hi: int) -> Optional[int]:
        """[lo, hi) 구간에서 첫 반례의 전역 인덱스"""
        values = self.candidate_values()
        combos = islice(product(values, repeat=len(atoms)), lo, hi)
        for index, combo in enumerate(combos, start=lo):
            if self.refutes(dict(zip(atoms, combo)), sequent):
                return index
        return None

    def decode(self, atoms: Tuple[str, ...], index: int) -> Dict[str, TruthValue]:
        """전역 인덱스 → 할당 (첫 원자가 최상위 자리)"""
        values = self.candidate_values()
        base = len(values)
        digits: List[TruthValue] = []
        for _ in atoms:
            index, digit = divmod(index, base)
            digits.append(values[digit])
        return dict(zip(atoms, reversed(digits)))

    def _scan_parallel(self, sequent: Sequent, atoms: Tuple[str, ...], bound: int, jobs: int) -> Optional[int]:
        chunk_count = jobs * 4
        step = -(-bound // chunk_count)
        tasks = [(self, sequent, atoms, lo, min(lo + step, bound)) for lo in range(0, bound, step)]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_scan_chunk, tasks))
        # 작업자 순서와 무관하게 최소 인덱스 선택
        found = [index for index in results if index is not None]
        return min(found) if found else None

    def entails(self, sequent: Sequent, jobs: Optional[int] = None) -> EntailmentVerdict:
        atoms = sequent.atoms()
        bound = self._guard(len(atoms))
        jobs = jobs or self.settings.jobs
        text = render_sequent(sequent)
        entailment_logger.log_query_start(self.name, self.n, text, bound)
        start_time = datetime.now()

        if jobs > 1 and bound >= PARALLEL_THRESHOLD:
            first = self._scan_parallel(sequent, atoms, bound, jobs)
        else:
            first = self.first_counterexample(sequent, atoms, 0, bound)

        if first is None:
            verdict = EntailmentVerdict(holds=True, oracle=self.name, n=self.n, sequent=sequent, examined=bound)
        else:
            verdict = EntailmentVerdict(
                holds=False, oracle=self.name, n=self.n, sequent=sequent, examined=first + 1,
                countermodel=self.make_countermodel(self.decode(atoms, first)),
            )

        processing_time = (datetime.now() - start_time).total_seconds()
        entailment_logger.log_query_complete(self.name, self.n, text, verdict.holds, verdict.examined, processing_time)
        performance_logger.log_processing_time(f"entails_{self.name}", processing_time, level_n=self.n)
        app_logger.debug(f"{self.name} 판정: {text} (n={self.n}) -> {verdict.holds}")
        return verdict


def _scan_chunk(task) -> Optional[int]:
    oracle, sequent, atoms, lo, hi = task
    return oracle.first_counterexample(sequent, atoms, lo, hi)
