"""
Ciu^n 초일관 논리 계층
Finite matrices M_n, canonical bivaluations and consequence checking for Ciu^n
"""

__version__ = "0.1.0"

from .models import Atom, Neg, Imp, Formula, Sequent, EntailmentVerdict, CrossCheckResult
from .tools import parse, parse_sequent, render, fib, expansion, build_matrix, materialize, find_isomorphism
from .oracles import entails_matrix, entails_bival
from .services import ConsequenceService

__all__ = [
    'Atom',
    'Neg',
    'Imp',
    'Formula',
    'Sequent',
    'EntailmentVerdict',
    'CrossCheckResult',
    'parse',
    'parse_sequent',
    'render',
    'fib',
    'expansion',
    'build_matrix',
    'materialize',
    'find_isomorphism',
    'entails_matrix',
    'entails_bival',
    'ConsequenceService'
]
