from .base import EnumerationOracle
from .matrix_oracle import MatrixOracle, TableOracle, entails_matrix, entails_generic
from .bival_oracle import BivaluationOracle, entails_bival

__all__ = [
    'EnumerationOracle',
    'MatrixOracle',
    'TableOracle',
    'BivaluationOracle',
    'entails_matrix',
    'entails_generic',
    'entails_bival'
]
