"""
수식/시퀀트 파서 (재귀 하강)

Grammar (precedence from low to high):
    sequent  ::= [ formula ( ',' formula )* ] '|-' formula
    formula  ::= unary [ '->' formula ]          (right-assoc)
    unary    ::= '~' unary | atom | '(' formula ')'
    atom     ::= [a-z][a-z0-9_]*

`¬` and `⊃` are accepted as input synonyms of `~` and `->`.
"""

from dataclasses import dataclass
from typing import List

from ..models.formula import ATOM_PATTERN, Atom, Formula, Imp, Neg, Sequent, render, render_sequent
from ..utils.errors import FormulaSyntaxError

# 토큰 종류
ATOM = "atom"
NOT = "'~'"
IMPLIES = "'->'"
LPAREN = "'('"
RPAREN = "')'"
COMMA = "','"
TURNSTILE = "'|-'"
END = "end of input"

_SYMBOLS = [
    ("->", IMPLIES),
    ("|-", TURNSTILE),
    ("~", NOT),
    ("¬", NOT),
    ("⊃", IMPLIES),
    ("(", LPAREN),
    (")", RPAREN),
    (",", COMMA),
]

_UNARY_START = "atom, '~' or '('"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    """토큰 목록 (오프셋은 UTF-8 바이트 기준)"""
    tokens: List[Token] = []
    i = 0
    offset = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            offset += len(ch.encode("utf-8"))
            continue

        match = ATOM_PATTERN.match(text, i)
        if match:
            tokens.append(Token(ATOM, match.group(), offset))
            offset += len(match.group())
            i = match.end()
            continue

        for symbol, kind in _SYMBOLS:
            if text.startswith(symbol, i):
                tokens.append(Token(kind, symbol, offset))
                i += len(symbol)
                offset += len(symbol.encode("utf-8"))
                break
        else:
            raise FormulaSyntaxError(f"unexpected character {ch!r}", offset, "atom, connective or parenthesis")

    tokens.append(Token(END, "", offset))
    return tokens


class FormulaParser:
    """토큰 스트림 위의 재귀 하강 파서"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != END:
            self.pos += 1
        return token

    def _expect(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            raise self._error(kind)
        return self._advance()

    def _error(self, expected: str) -> FormulaSyntaxError:
        token = self.current
        found = "end of input" if token.kind == END else repr(token.text)
        return FormulaSyntaxError(f"unexpected {found}", token.offset, expected)

    def parse_formula(self) -> Formula:
        left = self._parse_unary()
        if self.current.kind == IMPLIES:
            self._advance()
            return Imp(left, self.parse_formula())
        return left

    def _parse_unary(self) -> Formula:
        depth = 0
        while self.current.kind == NOT:
            self._advance()
            depth += 1

        token = self.current
        if token.kind == ATOM:
            self._advance()
            core: Formula = Atom(token.text)
        elif token.kind == LPAREN:
            self._advance()
            core = self.parse_formula()
            self._expect(RPAREN)
        else:
            raise self._error(_UNARY_START)

        for _ in range(depth):
            core = Neg(core)
        return core

    def parse_single(self) -> Formula:
        if self.current.kind == END:
            raise FormulaSyntaxError("empty formula", self.current.offset, _UNARY_START)
        formula = self.parse_formula()
        if self.current.kind != END:
            raise self._error(f"{IMPLIES} or {END}")
        return formula

    def parse_sequent(self) -> Sequent:
        turnstiles = [token for token in self.tokens if token.kind == TURNSTILE]
        if not turnstiles:
            raise FormulaSyntaxError("missing turnstile", self.tokens[-1].offset, TURNSTILE)
        if len(turnstiles) > 1:
            raise FormulaSyntaxError("multiple turnstiles", turnstiles[1].offset, "a single '|-'")

        premises: List[Formula] = []
        if self.current.kind != TURNSTILE:
            premises.append(self.parse_formula())
            while self.current.kind == COMMA:
                self._advance()
                premises.append(self.parse_formula())
        if self.current.kind != TURNSTILE:
            raise self._error(f"{COMMA}, {IMPLIES} or {TURNSTILE}")
        self._advance()

        if self.current.kind == END:
            raise FormulaSyntaxError("missing conclusion", self.current.offset, _UNARY_START)
        conclusion = self.parse_formula()
        if self.current.kind != END:
            raise self._error(f"{IMPLIES} or {END}")
        return Sequent(premises=tuple(premises), conclusion=conclusion)


def parse(text: str) -> Formula:
    """수식 파싱"""
    return FormulaParser(text).parse_single()


def parse_sequent(text: str) -> Sequent:
    """시퀀트 파싱"""
    return FormulaParser(text).parse_sequent()


__all__ = ["Token", "tokenize", "FormulaParser", "parse", "parse_sequent", "render", "render_sequent"]
