from .formula import (
    Atom, Neg, Imp, Formula, NegTower, Sequent,
    negate, neg_decompose, in_k_star, atoms_of, substitute, subformulas,
    depth, connective_count, render, render_sequent
)
from .valuation import (
    TruthValue, render_value, Assignment, BivalSeed, MatrixValuation, ConditionViolation
)
from .verdict import (
    EntailmentVerdict, CrossCheckResult, HierarchyViolation, HierarchyReport,
    PropertyTally, MetatheoryReport, ParaconsistencyRow, CardinalityRow, ReportRow,
    EquivalenceReport, TruthTableRow
)

__all__ = [
    'Atom', 'Neg', 'Imp', 'Formula', 'NegTower', 'Sequent',
    'negate', 'neg_decompose', 'in_k_star', 'atoms_of', 'substitute', 'subformulas',
    'depth', 'connective_count', 'render', 'render_sequent',
    'TruthValue', 'render_value', 'Assignment', 'BivalSeed', 'MatrixValuation',
    'ConditionViolation',
    'EntailmentVerdict', 'CrossCheckResult', 'HierarchyViolation', 'HierarchyReport',
    'PropertyTally', 'MetatheoryReport', 'ParaconsistencyRow', 'CardinalityRow', 'ReportRow',
    'EquivalenceReport', 'TruthTableRow'
]
