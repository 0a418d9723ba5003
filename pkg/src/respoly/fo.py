"""First-order formulas over word positions and brute-force model counting.

Syntax accepted by :func:`parse_formula` (whitespace ignored)::

    atom(a, x)        letter a at position x
    lt(x, y)          x < y
    eq(x, y)          x = y
    mod(x, r, m)      x ≡ r (mod m), positions counted from 0
    not(φ)  and(φ, ψ, ...)  or(φ, ψ, ...)  implies(φ, ψ)
    exists(x, φ)  forall(x, φ)  true  false

Counting the assignments of the free variables of ``and(atom(a,x),atom(b,y))``
over a word ``w`` gives ``|w|_a * |w|_b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Mapping


class FormulaSyntaxError(ValueError):
    pass


class Formula:
    def holds(self, word: str, env: Mapping[str, int]) -> bool:
        raise NotImplementedError

    def free_vars(self) -> frozenset[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class Letter(Formula):
    letter: str
    var: str

    def holds(self, word, env):
        return word[env[self.var]] == self.letter

    def free_vars(self):
        return frozenset({self.var})

    def __str__(self):
        return f"atom({self.letter},{self.var})"


@dataclass(frozen=True)
class Less(Formula):
    left: str
    right: str

    def holds(self, word, env):
        return env[self.left] < env[self.right]

    def free_vars(self):
        return frozenset({self.left, self.right})

    def __str__(self):
        return f"lt({self.left},{self.right})"


@dataclass(frozen=True)
class Equal(Formula):
    left: str
    right: str

    def holds(self, word, env):
        return env[self.left] == env[self.right]

    def free_vars(self):
        return frozenset({self.left, self.right})

    def __str__(self):
        return f"eq({self.left},{self.right})"


@dataclass(frozen=True)
class Mod(Formula):
    var: str
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise FormulaSyntaxError("modulus must be >= 1")

    def holds(self, word, env):
        return env[self.var] % self.modulus == self.residue % self.modulus

    def free_vars(self):
        return frozenset({self.var})

    def __str__(self):
        return f"mod({self.var},{self.residue},{self.modulus})"


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def holds(self, word, env):
        return self.value

    def free_vars(self):
        return frozenset()

    def __str__(self):
        return "true" if self.value else "false"


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def holds(self, word, env):
        return not self.body.holds(word, env)

    def free_vars(self):
        return self.body.free_vars()

    def __str__(self):
        return f"not({self.body})"


@dataclass(frozen=True)
class And(Formula):
    parts: tuple[Formula, ...]

    def holds(self, word, env):
        return all(p.holds(word, env) for p in self.parts)

    def free_vars(self):
        return frozenset().union(*(p.free_vars() for p in self.parts))

    def __str__(self):
        return "and(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Or(Formula):
    parts: tuple[Formula, ...]

    def holds(self, word, env):
        return any(p.holds(word, env) for p in self.parts)

    def free_vars(self):
        return frozenset().union(*(p.free_vars() for p in self.parts))

    def __str__(self):
        return "or(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def holds(self, word, env):
        return not self.left.holds(word, env) or self.right.holds(word, env)

    def free_vars(self):
        return self.left.free_vars() | self.right.free_vars()

    def __str__(self):
        return f"implies({self.left},{self.right})"


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def holds(self, word, env):
        inner = dict(env)
        for i in range(len(word)):
            inner[self.var] = i
            if self.body.holds(word, inner):
                return True
        return False

    def free_vars(self):
        return self.body.free_vars() - {self.var}

    def __str__(self):
        return f"exists({self.var},{self.body})"


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def holds(self, word, env):
        inner = dict(env)
        for i in range(len(word)):
            inner[self.var] = i
            if not self.body.holds(word, inner):
                return False
        return True

    def free_vars(self):
        return self.body.free_vars() - {self.var}

    def __str__(self):
        return f"forall({self.var},{self.body})"


def count_models(formula: Formula, variables: tuple[str, ...], word: str) -> int:
    """Number of assignments of ``variables`` to positions of ``word`` satisfying ``formula``."""
    n = len(word)
    total = 0
    for values in product(range(n), repeat=len(variables)):
        if formula.holds(word, dict(zip(variables, values))):
            total += 1
    return total


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(-?\d+)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of formula")
        if expected is not None and tok != expected:
            raise FormulaSyntaxError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def ident(self) -> str:
        tok = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            raise FormulaSyntaxError(f"expected identifier, got {tok!r}")
        return tok

    def integer(self) -> int:
        tok = self.take()
        try:
            return int(tok)
        except ValueError:
            raise FormulaSyntaxError(f"expected integer, got {tok!r}") from None

    def formula(self) -> Formula:
        head = self.ident()
        if head in ("true", "false"):
            return Const(head == "true")
        self.take("(")
        if head == "atom":
            letter = self.take()
            self.take(",")
            node = Letter(letter, self.ident())
        elif head in ("lt", "eq"):
            x = self.ident()
            self.take(",")
            y = self.ident()
            node = Less(x, y) if head == "lt" else Equal(x, y)
        elif head == "mod":
            x = self.ident()
            self.take(",")
            r = self.integer()
            self.take(",")
            node = Mod(x, r, self.integer())
        elif head == "not":
            node = Not(self.formula())
        elif head in ("and", "or"):
            parts = [self.formula()]
            while self.peek() == ",":
                self.take(",")
                parts.append(self.formula())
            node = And(tuple(parts)) if head == "and" else Or(tuple(parts))
        elif head == "implies":
            left = self.formula()
            self.take(",")
            node = Implies(left, self.formula())
        elif head in ("exists", "forall"):
            x = self.ident()
            self.take(",")
            body = self.formula()
            node = Exists(x, body) if head == "exists" else Forall(x, body)
        else:
            raise FormulaSyntaxError(f"unknown connective {head!r}")
        self.take(")")
        return node


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    node = p.formula()
    if p.peek() is not None:
        raise FormulaSyntaxError(f"trailing input at token {p.peek()!r}")
    return node
