"""Exact rational helpers shared by the series code.

Numbers are kept as ``int`` when integral and ``Fraction`` otherwise, which
keeps the common all-integer case fast.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Sequence

Number = int | Fraction


def num(x) -> Number:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact number."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x.strip())
    elif isinstance(x, Rational):
        x = Fraction(x)
    elif isinstance(x, float):
        if not x.is_integer():
            raise TypeError(f"refusing inexact float {x!r}")
        return int(x)
    else:
        raise TypeError(f"not an exact number: {x!r}")
    return x.numerator if x.denominator == 1 else x


def to_json(x: Number) -> int | str:
    x = num(x)
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def as_int(x: Number) -> int:
    x = num(x)
    if not isinstance(x, int):
        raise ValueError(f"non-integer value {x}")
    return x


def vec_mat(v: Sequence[Number], m: Sequence[Sequence[Number]]) -> tuple[Number, ...]:
    n = len(m[0]) if m else 0
    out = []
    for j in range(n):
        s = 0
        for i, vi in enumerate(v):
            if vi:
                mij = m[i][j]
                if mij:
                    s += vi * mij
        out.append(num(s))
    return tuple(out)


def mat_vec(m: Sequence[Sequence[Number]], v: Sequence[Number]) -> tuple[Number, ...]:
    out = []
    for row in m:
        s = 0
        for mij, vj in zip(row, v):
            if mij and vj:
                s += mij * vj
        out.append(num(s))
    return tuple(out)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return num(s)


class RowSpace:
    """Incrementally maintained row-echelon basis of a subspace of Q^d."""

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: list[tuple[int, list[Fraction]]] = []  # (pivot column, row)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence[Number]) -> list[Fraction]:
        r = [Fraction(x) for x in v]
        for piv, row in self._rows:
            c = r[piv]
            if c:
                for j in range(piv, self.dim):
                    if row[j]:
                        r[j] -= c * row[j]
        return r

    def add(self, v: Sequence[Number]) -> bool:
        """Add ``v``; return False when it was already in the span."""
        r = self.reduce(v)
        piv = next((j for j, x in enumerate(r) if x), None)
        if piv is None:
            return False
        lead = r[piv]
        r = [x / lead for x in r]
        for _, row in self._rows:
            c = row[piv]
            if c:
                for j in range(piv, self.dim):
                    row[j] -= c * r[j]
        self._rows.append((piv, r))
        return True
