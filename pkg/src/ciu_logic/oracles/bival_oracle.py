from typing import Dict, List, Optional, Sequence

from ..models.formula import Sequent
from ..models.valuation import BivalSeed, TruthValue
from ..models.verdict import EntailmentVerdict
from ..tools.bival import BivaluationEvaluator, initial_sequences
from ..utils import Settings
from .base import EnumerationOracle


class BivaluationOracle(EnumerationOracle):
    """Γ ⊨_{S_n} φ 판정 (정규 쌍값매김 족 위의 전수 검사)"""

    name = "bival"

    def __init__(self, n: int, settings: Optional[Settings] = None):
        super().__init__(n, settings)
        # 행렬 모듈과 독립적으로 초기 수열을 만든다
        self._sequences: List[TruthValue] = initial_sequences(n)

    def candidate_values(self) -> Sequence[TruthValue]:
        return self._sequences

    def refutes(self, assignment: Dict[str, TruthValue], sequent: Sequent) -> bool:
        v = BivaluationEvaluator(self.make_countermodel(assignment))
        if v(sequent.conclusion) == 1:
            return False
        return all(v(premise) == 1 for premise in sequent.premise_set)

    def make_countermodel(self, assignment: Dict[str, TruthValue]) -> BivalSeed:
        return BivalSeed.from_mapping(self.n, assignment)


def entails_bival(n: int, sequent: Sequent, settings: Optional[Settings] = None,
                  jobs: Optional[int] = None) -> EntailmentVerdict:
    return BivaluationOracle(n, settings).entails(sequent, jobs)
