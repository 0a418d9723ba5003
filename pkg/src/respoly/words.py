"""Alphabets and words.

Words are plain Python strings whose characters are letters of an
:class:`Alphabet`; the empty word is ``""``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator


class AlphabetMismatch(ValueError):
    """A word or series does not live over the expected alphabet."""


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be non-empty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in {letters!r}")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise ValueError(f"letters must be single characters, got {a!r}")
        object.__setattr__(self, "letters", letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self.letters

    def __str__(self) -> str:
        return "".join(self.letters)

    @property
    def is_unary(self) -> bool:
        return len(self.letters) == 1

    def check(self, word: str) -> str:
        for c in word:
            if c not in self.letters:
                raise AlphabetMismatch(f"letter {c!r} of {word!r} not in alphabet {self}")
        return word

    def key(self, word: str) -> tuple:
        """Shortlex sort key: by length, then by letter order."""
        return (len(word), tuple(self.letters.index(c) for c in word))

    def words(self, max_len: int, min_len: int = 0) -> Iterator[str]:
        """All words with ``min_len <= |w| <= max_len`` in shortlex order."""
        for n in range(min_len, max_len + 1):
            for t in product(self.letters, repeat=n):
                yield "".join(t)


def prefixes(word: str) -> list[str]:
    """All prefixes of ``word``, shortest first (includes ``""`` and ``word``)."""
    return [word[:i] for i in range(len(word) + 1)]


def is_prefix(v: str, u: str) -> bool:
    return u.startswith(v)


def show(word: str) -> str:
    """Human-readable rendering, with ``ε`` for the empty word."""
    return word if word else "ε"
