import random
from datetime import datetime
from typing import Dict, Iterable, List, Optional, Tuple

from ..models.formula import Formula, Sequent, render_sequent, substitute
from ..models.verdict import (
    CardinalityRow, CrossCheckResult, EntailmentVerdict, EquivalenceReport, HierarchyReport,
    HierarchyViolation, MetatheoryReport, ParaconsistencyRow, PropertyTally, ReportRow
)
from ..oracles import BivaluationOracle, MatrixOracle
from ..tools.fibword import fib
from ..tools.generators import random_formula, random_sequent, random_substitution
from ..tools.matrix import build_support_recursive
from ..tools.parser import parse, parse_sequent
from ..utils import Settings, get_settings, app_logger, entailment_logger, performance_logger
from ..utils.errors import DomainError

EXPLOSION = "p, ~p |- q"
DOUBLE_NEGATION = "p |- ~~p"

_ATOM_NAMES = ("p", "q", "r", "s", "t")


def atom_names(count: int) -> Tuple[str, ...]:
    if count < 1:
        raise DomainError(f"atom count must be >= 1, got {count}")
    if count <= len(_ATOM_NAMES):
        return _ATOM_NAMES[:count]
    return tuple(f"p{i}" for i in range(count))


class ConsequenceService:
    """귀결 판정 서비스"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self._matrix_oracles: Dict[int, MatrixOracle] = {}
        self._bival_oracles: Dict[int, BivaluationOracle] = {}
        app_logger.debug("Consequence Service 초기화 완료")

    def matrix_oracle(self, n: int) -> MatrixOracle:
        if n not in self._matrix_oracles:
            self._matrix_oracles[n] = MatrixOracle(n, self.settings)
        return self._matrix_oracles[n]

    def bival_oracle(self, n: int) -> BivaluationOracle:
        if n not in self._bival_oracles:
            self._bival_oracles[n] = BivaluationOracle(n, self.settings)
        return self._bival_oracles[n]

    def entails_matrix(self, n: int, sequent: Sequent, jobs: Optional[int] = None) -> EntailmentVerdict:
        return self.matrix_oracle(n).entails(sequent, jobs)

    def entails_bival(self, n: int, sequent: Sequent, jobs: Optional[int] = None) -> EntailmentVerdict:
        return self.bival_oracle(n).entails(sequent, jobs)

    def cross_check(self, n: int, sequent: Sequent, jobs: Optional[int] = None) -> CrossCheckResult:
        """두 의미론의 판정 일치 여부"""
        result = CrossCheckResult(
            n=n,
            sequent=sequent,
            matrix=self.entails_matrix(n, sequent, jobs),
            bival=self.entails_bival(n, sequent, jobs),
        )
        if not result.agree:
            entailment_logger.log_disagreement(n, render_sequent(sequent), result.to_dict())
        return result

    def is_tautology(self, n: int, f: Formula, jobs: Optional[int] = None) -> EntailmentVerdict:
        return self.entails_matrix(n, Sequent(premises=(), conclusion=f), jobs)

    def hierarchy_check(self, n_low: int, n_high: int, samples: Iterable[Sequent]) -> HierarchyReport:
        """n_high 에서 성립하면 n_low 에서도 성립해야 한다 (행렬, 쌍값매김 모두)"""
        if not 0 <= n_low <= n_high:
            raise DomainError(f"expected 0 <= n_low <= n_high, got {n_low}, {n_high}")
        report = HierarchyReport(n_low=n_low, n_high=n_high)
        deciders = (("matrix", self.entails_matrix), ("bival", self.entails_bival))
        for sequent in samples:
            report.checked += 1
            for oracle, entails in deciders:
                if entails(n_high, sequent).holds and not entails(n_low, sequent).holds:
                    report.violations.append(
                        HierarchyViolation(sequent=sequent, n_low=n_low, n_high=n_high, oracle=oracle)
                    )
        if report.violations:
            app_logger.error(f"계층 단조성 위반 {len(report.violations)}건 (n={n_low}..{n_high})")
        return report

    def metatheory_sample(self, n: int, trials: int = 100, seed: Optional[int] = None,
                          max_depth: int = 3) -> MetatheoryReport:
        """(Ext), (Mon), (Tran), (Str), 반사성 무작위 검사"""
        seed = self.settings.rng_seed if seed is None else seed
        rng = random.Random(seed)
        atoms = atom_names(2)
        report = MetatheoryReport(n=n, trials=trials, seed=seed)
        tallies = {name: PropertyTally() for name in ("ext", "mon", "tran", "str", "reflexivity")}
        report.properties = tallies

        def holds(premises: Tuple[Formula, ...], conclusion: Formula) -> bool:
            return self.entails_matrix(n, Sequent(premises=premises, conclusion=conclusion)).holds

        reflexive = parse("p -> p")
        start_time = datetime.now()
        for _ in range(trials):
            sample = random_sequent(rng, atoms, max_depth)
            gamma, phi = sample.premises, sample.conclusion
            witness = render_sequent(sample)

            tallies["ext"].record(holds(gamma + (phi,), phi), witness)

            base = holds(gamma, phi)
            if base:
                extra = random_formula(rng, atoms, max_depth)
                tallies["mon"].record(holds(gamma + (extra,), phi), witness)

                mapping = random_substitution(rng, atoms)
                tallies["str"].record(
                    holds(tuple(substitute(g, mapping) for g in gamma), substitute(phi, mapping)),
                    witness,
                )

            lemma = random_formula(rng, atoms, max_depth)
            if holds(gamma, lemma) and holds(gamma + (lemma,), phi):
                tallies["tran"].record(base, witness)

            tallies["reflexivity"].record(holds((), reflexive), "|- p -> p")

        performance_logger.log_processing_time(
            "metatheory_sample", (datetime.now() - start_time).total_seconds(), level_n=n, seed=seed
        )
        return report

    def paraconsistency_report(self, n_max: int) -> List[ParaconsistencyRow]:
        """폭발 원리와 이중부정 확장의 단계별 판정"""
        explosion = parse_sequent(EXPLOSION)
        dne = parse_sequent(DOUBLE_NEGATION)
        return [
            ParaconsistencyRow(
                n=n,
                explosion=self.entails_matrix(n, explosion).holds,
                dne=self.entails_matrix(n, dne).holds,
            )
            for n in range(n_max + 1)
        ]

    def cardinality_report(self, n_max: int) -> List[CardinalityRow]:
        """|A_n|, Fb(n+3), |D_n| (|D_n| = |A_{n-1}| 확인용)"""
        rows: List[CardinalityRow] = []
        previous: Optional[int] = None
        for n in range(n_max + 1):
            support = build_support_recursive(n, self.settings.max_support)
            rows.append(CardinalityRow(
                n=n,
                support_size=len(support),
                fib_value=fib(n + 3),
                designated_size=sum(1 for x in support if x[0] == 1),
                previous_support_size=previous,
            ))
            previous = len(support)
        return rows

    def summary_report(self, n_max: int) -> List[ReportRow]:
        if n_max < 0:
            raise DomainError(f"n_max must be >= 0, got {n_max}")
        cardinality = self.cardinality_report(n_max)
        paraconsistency = self.paraconsistency_report(n_max)
        return [ReportRow(cardinality=c, paraconsistency=p) for c, p in zip(cardinality, paraconsistency)]

    def equivalence_check(self, n: int, atom_count: int = 2, max_depth: int = 4, samples: int = 100,
                          seed: Optional[int] = None, jobs: Optional[int] = None) -> EquivalenceReport:
        """시드 고정 무작위 시퀀트에 대한 교차 검사"""
        seed = self.settings.rng_seed if seed is None else seed
        rng = random.Random(seed)
        atoms = atom_names(atom_count)
        report = EquivalenceReport(n=n, seed=seed)
        for _ in range(samples):
            result = self.cross_check(n, random_sequent(rng, atoms, max_depth), jobs)
            report.checked += 1
            if not result.agree:
                report.disagreements.append(result)
        app_logger.info(f"교차 검사 완료: n={n}, {report.checked}건, 불일치 {len(report.disagreements)}건")
        return report
