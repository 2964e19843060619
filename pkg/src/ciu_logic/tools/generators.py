"""
수식/시퀀트 생성기 (시드 고정 무작위 표본 및 전수 풀)
"""

import random
from typing import Dict, Iterator, List, Sequence

from ..models.formula import Atom, Formula, Imp, Neg, Sequent

DEFAULT_ATOMS = ("p", "q", "r")


def random_formula(rng: random.Random, atoms: Sequence[str], max_depth: int,
                   leaf_probability: float = 0.3) -> Formula:
    """깊이 max_depth 이하의 무작위 수식"""
    if max_depth <= 0 or rng.random() < leaf_probability:
        return Atom(rng.choice(list(atoms)))
    if rng.random() < 0.45:
        return Neg(random_formula(rng, atoms, max_depth - 1, leaf_probability))
    return Imp(
        random_formula(rng, atoms, max_depth - 1, leaf_probability),
        random_formula(rng, atoms, max_depth - 1, leaf_probability),
    )


def random_sequent(rng: random.Random, atoms: Sequence[str], max_depth: int,
                   max_premises: int = 3) -> Sequent:
    premises = tuple(random_formula(rng, atoms, max_depth) for _ in range(rng.randint(0, max_premises)))
    return Sequent(premises=premises, conclusion=random_formula(rng, atoms, max_depth))


def random_substitution(rng: random.Random, atoms: Sequence[str], max_depth: int = 2) -> Dict[str, Formula]:
    return {atom: random_formula(rng, atoms, max_depth) for atom in atoms}


def formula_pool(atoms: Sequence[str], max_connectives: int) -> List[Formula]:
    """연결사 개수 max_connectives 이하의 모든 수식 (개수 순)"""
    by_size: List[List[Formula]] = [[Atom(name) for name in atoms]]
    for size in range(1, max_connectives + 1):
        layer: List[Formula] = [Neg(f) for f in by_size[size - 1]]
        for left_size in range(size):
            right_size = size - 1 - left_size
            layer.extend(
                Imp(left, right)
                for left in by_size[left_size]
                for right in by_size[right_size]
            )
        by_size.append(layer)
    return [f for layer in by_size for f in layer]


def pool_sequents(pool: Sequence[Formula]) -> Iterator[Sequent]:
    """풀에서 만든 모든 '⊢ ψ' 와 'φ ⊢ ψ'"""
    for conclusion in pool:
        yield Sequent(premises=(), conclusion=conclusion)
        for premise in pool:
            yield Sequent(premises=(premise,), conclusion=conclusion)
