from .parser import parse, parse_sequent, render, render_sequent, tokenize
from .fibword import fib, sigma, expansion, expansion_levels, branch_sequences
from .matrix import (
    LogicMatrix, GenericMatrix,
    is_truth_value, alternating,
    build_support_recursive, build_support_direct, designated_set,
    neg_op, imp_op, build_matrix, materialize, relabel, find_isomorphism,
    export_json, import_json, format_tables
)
from .bival import (
    BivaluationEvaluator, initial_sequences, enumerate_seeds, eval_bival,
    to_matrix_valuation, from_matrix_valuation, audit_conditions
)

__all__ = [
    'parse', 'parse_sequent', 'render', 'render_sequent', 'tokenize',
    'fib', 'sigma', 'expansion', 'expansion_levels', 'branch_sequences',
    'LogicMatrix', 'GenericMatrix', 'is_truth_value', 'alternating',
    'build_support_recursive', 'build_support_direct', 'designated_set',
    'neg_op', 'imp_op', 'build_matrix', 'materialize', 'relabel', 'find_isomorphism',
    'export_json', 'import_json', 'format_tables',
    'BivaluationEvaluator', 'initial_sequences', 'enumerate_seeds', 'eval_bival',
    'to_matrix_valuation', 'from_matrix_valuation', 'audit_conditions'
]
