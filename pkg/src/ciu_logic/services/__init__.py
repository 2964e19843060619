from .consequence_service import ConsequenceService, atom_names, EXPLOSION, DOUBLE_NEGATION

__all__ = [
    'ConsequenceService',
    'atom_names',
    'EXPLOSION',
    'DOUBLE_NEGATION'
]
