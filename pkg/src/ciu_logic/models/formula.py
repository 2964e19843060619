"""
언어 L(C) 의 수식 모델
Formula AST over atoms, negation and implication
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Set, Tuple, Union

from ..utils.errors import InvalidAtomError

ATOM_PATTERN = re.compile(r"[a-z][a-z0-9_]*")


@dataclass(frozen=True)
class Atom:
    """명제 변수"""
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not ATOM_PATTERN.fullmatch(self.name):
            raise InvalidAtomError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True)
class Neg:
    """부정 ¬"""
    body: Formula


@dataclass(frozen=True)
class Imp:
    """함의 ⊃"""
    left: Formula
    right: Formula


Formula = Union[Atom, Neg, Imp]


@dataclass(frozen=True)
class NegTower:
    """¬^k(core) 분해 결과; core 는 부정이 아님"""
    k: int
    core: Formula

    def recompose(self) -> Formula:
        return negate(self.core, self.k)


@dataclass(frozen=True)
class Sequent:
    """전제 목록 ⊢ 결론"""
    premises: Tuple[Formula, ...] = field(default_factory=tuple)
    conclusion: Formula = None

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        if self.conclusion is None:
            raise ValueError("sequent requires a conclusion")

    @property
    def premise_set(self) -> Tuple[Formula, ...]:
        """중복을 제거한 전제 (첫 등장 순서 유지)"""
        return tuple(dict.fromkeys(self.premises))

    def atoms(self) -> Tuple[str, ...]:
        return atoms_of(*self.premises, self.conclusion)


def negate(f: Formula, k: int = 1) -> Formula:
    """¬^k f"""
    for _ in range(k):
        f = Neg(f)
    return f


def neg_decompose(f: Formula) -> NegTower:
    k = 0
    while isinstance(f, Neg):
        f = f.body
        k += 1
    return NegTower(k=k, core=f)


def in_k_star(f: Formula, n: int) -> bool:
    """f ∈ K_n* 여부: f = ¬^k α, α 원자, 0 ≤ k < n"""
    tower = neg_decompose(f)
    return isinstance(tower.core, Atom) and tower.k < n


def atoms_of(*formulas: Formula) -> Tuple[str, ...]:
    """등장하는 모든 원자 (사전순)"""
    names: Set[str] = set()
    stack = list(formulas)
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            names.add(f.name)
        elif isinstance(f, Neg):
            stack.append(f.body)
        else:
            stack.append(f.left)
            stack.append(f.right)
    return tuple(sorted(names))


def substitute(f: Formula, mapping: Dict[str, Formula]) -> Formula:
    """원자의 동시 치환; 매핑에 없는 원자는 고정"""
    if isinstance(f, Atom):
        return mapping.get(f.name, f)
    if isinstance(f, Neg):
        return Neg(substitute(f.body, mapping))
    return Imp(substitute(f.left, mapping), substitute(f.right, mapping))


def subformulas(*formulas: Formula) -> Set[Formula]:
    """부분식 닫힘"""
    closure: Set[Formula] = set()
    stack = list(formulas)
    while stack:
        f = stack.pop()
        if f in closure:
            continue
        closure.add(f)
        if isinstance(f, Neg):
            stack.append(f.body)
        elif isinstance(f, Imp):
            stack.extend((f.left, f.right))
    return closure


def depth(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Neg):
        return 1 + depth(f.body)
    return 1 + max(depth(f.left), depth(f.right))


def connective_count(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Neg):
        return 1 + connective_count(f.body)
    return 1 + connective_count(f.left) + connective_count(f.right)


def render(f: Formula) -> str:
    """최소 괄호 표기; parse(render(f)) == f"""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Neg):
        body = render(f.body)
        return f"~({body})" if isinstance(f.body, Imp) else f"~{body}"
    left = render(f.left)
    if isinstance(f.left, Imp):
        left = f"({left})"
    return f"{left} -> {render(f.right)}"


def render_sequent(s: Sequent) -> str:
    premises = ", ".join(render(p) for p in s.premises)
    return f"{premises} |- {render(s.conclusion)}" if premises else f"|- {render(s.conclusion)}"
