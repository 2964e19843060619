from typing import Dict, List, Mapping, Optional, Sequence, Union

from ..models.formula import Atom, Formula, Neg, Sequent, atoms_of
from ..models.valuation import Assignment, MatrixValuation, TruthValue
from ..models.verdict import EntailmentVerdict, TruthTableRow
from ..tools.matrix import GenericMatrix, LogicMatrix, build_matrix
from ..utils import Settings
from ..utils.errors import UnboundAtomError
from .base import EnumerationOracle


class MatrixOracle(EnumerationOracle):
    """Γ ⊨_{M_n} φ 판정 (A_n 값매김의 준동형 확장)"""

    name = "matrix"

    def __init__(self, n: int, settings: Optional[Settings] = None):
        super().__init__(n, settings)
        self.matrix: LogicMatrix = build_matrix(n, self.settings.max_support)

    def candidate_values(self) -> Sequence[TruthValue]:
        return self.matrix.values

    def evaluate(self, valuation: Union[MatrixValuation, Mapping[str, TruthValue]], f: Formula,
                 memo: Optional[Dict[Formula, TruthValue]] = None) -> TruthValue:
        """w 의 준동형 확장 w(f)"""
        if isinstance(valuation, Assignment):
            valuation = valuation.as_dict()
        memo = {} if memo is None else memo
        return self._evaluate(valuation, f, memo)

    def _evaluate(self, valuation: Mapping[str, TruthValue], f: Formula,
                  memo: Dict[Formula, TruthValue]) -> TruthValue:
        cached = memo.get(f)
        if cached is not None:
            return cached
        if isinstance(f, Atom):
            value = valuation.get(f.name)
            if value is None:
                raise UnboundAtomError(f.name)
            value = tuple(value)
        elif isinstance(f, Neg):
            value = self.matrix.neg(self._evaluate(valuation, f.body, memo))
        else:
            value = self.matrix.imp(
                self._evaluate(valuation, f.left, memo),
                self._evaluate(valuation, f.right, memo),
            )
        memo[f] = value
        return value

    def refutes(self, assignment: Dict[str, TruthValue], sequent: Sequent) -> bool:
        memo: Dict[Formula, TruthValue] = {}
        if self.matrix.is_designated(self._evaluate(assignment, sequent.conclusion, memo)):
            return False
        return all(
            self.matrix.is_designated(self._evaluate(assignment, premise, memo))
            for premise in sequent.premise_set
        )

    def make_countermodel(self, assignment: Dict[str, TruthValue]) -> MatrixValuation:
        return MatrixValuation.from_mapping(self.n, assignment)

    def truth_table(self, f: Formula) -> List[TruthTableRow]:
        """f 의 전체 진리표 (정규 순서)"""
        atoms = atoms_of(f)
        self._guard(len(atoms))
        rows: List[TruthTableRow] = []
        for index in range(self.space_size(len(atoms))):
            assignment = self.decode(atoms, index)
            value = self.evaluate(assignment, f)
            rows.append(TruthTableRow(
                assignment=tuple(sorted(assignment.items())),
                value=value,
                designated=self.matrix.is_designated(value),
            ))
        return rows


class TableOracle(EnumerationOracle):
    """구체화된 임의 유한 행렬 위의 귀결 판정 (인덱스 연산)"""

    name = "table"

    def __init__(self, matrix: GenericMatrix, settings: Optional[Settings] = None):
        super().__init__(matrix.n, settings)
        self.table = matrix
        self._designated = set(matrix.designated)
        self._indices = [(i,) for i in range(matrix.size)]

    def candidate_values(self) -> Sequence[TruthValue]:
        return self._indices

    def _evaluate(self, assignment: Dict[str, TruthValue], f: Formula, memo: Dict[Formula, int]) -> int:
        cached = memo.get(f)
        if cached is not None:
            return cached
        if isinstance(f, Atom):
            value = assignment[f.name][0]
        elif isinstance(f, Neg):
            value = self.table.neg[self._evaluate(assignment, f.body, memo)]
        else:
            value = self.table.imp[self._evaluate(assignment, f.left, memo)][self._evaluate(assignment, f.right, memo)]
        memo[f] = value
        return value

    def refutes(self, assignment: Dict[str, TruthValue], sequent: Sequent) -> bool:
        memo: Dict[Formula, int] = {}
        if self._evaluate(assignment, sequent.conclusion, memo) in self._designated:
            return False
        return all(self._evaluate(assignment, p, memo) in self._designated for p in sequent.premise_set)

    def make_countermodel(self, assignment: Dict[str, TruthValue]) -> MatrixValuation:
        return MatrixValuation.from_mapping(
            self.n, {atom: tuple(self.table.values[index[0]]) for atom, index in assignment.items()}
        )


def entails_matrix(n: int, sequent: Sequent, settings: Optional[Settings] = None,
                   jobs: Optional[int] = None) -> EntailmentVerdict:
    return MatrixOracle(n, settings).entails(sequent, jobs)


def entails_generic(matrix: GenericMatrix, sequent: Sequent,
                    settings: Optional[Settings] = None) -> EntailmentVerdict:
    return TableOracle(matrix, settings).entails(sequent)
