"""Exact functions from words to integers.

Four representations share the :class:`Series` interface:

* :class:`UnaryQP` -- a function on ``{a}*`` given by explicit values below a
  threshold and one rational polynomial per residue class above it;
* :class:`LinRep` -- a rational linear representation
  ``w -> init . M[w1] ... M[wn] . final``;
* :class:`Counting` -- ``coeff`` times the number of satisfying assignments of
  a first-order formula (evaluation only);
* :class:`Zero` -- the zero function.

All values are immutable. Arithmetic is exact throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, comb, lcm
from typing import Iterable, Mapping, Sequence

from respoly._exact import Number, RowSpace, as_int, dot, mat_vec, num, to_json, vec_mat
from respoly.fo import Formula, count_models, parse_formula
from respoly.words import Alphabet, AlphabetMismatch


class UnsupportedVariant(TypeError):
    """The operation is not defined for this combination of representations."""


class NonIntegerValue(ValueError):
    """A representation produced a non-integer value."""


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, ``coeffs[i]`` multiplying ``X**i``."""

    coeffs: tuple[Number, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [num(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> RationalPoly:
        return cls([c])

    @classmethod
    def binomial(cls, k: int) -> RationalPoly:
        """``C(X, k) = X(X-1)...(X-k+1)/k!``."""
        p = cls([1])
        for i in range(k):
            p = p * cls([-i, 1])
        return p.scale(Fraction(1, _factorial(k)))

    @classmethod
    def interpolate(cls, points: Sequence[tuple[int, Number]]) -> RationalPoly:
        """The unique polynomial of degree < len(points) through ``points`` (Newton form)."""
        xs = [x for x, _ in points]
        table = [Fraction(y) for _, y in points]
        n = len(points)
        coef = [table[0]] if n else []
        for level in range(1, n):
            table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
            coef.append(table[0])
        result = cls()
        basis = cls([1])
        for i, c in enumerate(coef):
            result = result + basis.scale(c)
            basis = basis * cls([-xs[i], 1])
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: Number) -> Number:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return num(acc)

    def __add__(self, other: RationalPoly) -> RationalPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return RationalPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> RationalPoly:
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other: RationalPoly) -> RationalPoly:
        return self + (-other)

    def __mul__(self, other: RationalPoly) -> RationalPoly:
        if self.is_zero or other.is_zero:
            return RationalPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    def scale(self, c) -> RationalPoly:
        c = num(c)
        return RationalPoly(c * x for x in self.coeffs)

    def shift(self, s: int) -> RationalPoly:
        """The polynomial ``X -> P(X + s)``."""
        if s == 0 or self.degree < 1:
            return self
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                for j in range(i + 1):
                    out[j] += c * comb(i, j) * s ** (i - j)
        return RationalPoly(out)

    def root_bound(self) -> Fraction:
        """Cauchy bound: every real root is strictly below this value in absolute value."""
        lead = Fraction(self.leading)
        return 1 + max((abs(Fraction(c) / lead) for c in self.coeffs[:-1]), default=Fraction(0))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
                if mono and c == 1:
                    terms.append(mono)
                elif mono and c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# series


class Series:
    """Common interface: an exact function from words over ``alphabet`` to integers."""

    alphabet: Alphabet

    def _value(self, word: str) -> int:
        raise NotImplementedError

    def __call__(self, word: str) -> int:
        return evaluate(self, word)

    def __add__(self, other: Series) -> Series:
        return add(self, other)

    def __sub__(self, other: Series) -> Series:
        return subtract(self, other)

    def __neg__(self) -> Series:
        return negate(self)

    def __rmul__(self, c: int) -> Series:
        return scale(c, self)

    @property
    def kind(self) -> str:
        return type(self).__name__


@dataclass(frozen=True)
class Zero(Series):
    alphabet: Alphabet

    def _value(self, word: str) -> int:
        return 0


@dataclass(frozen=True)
class UnaryQP(Series):
    """A function ``n -> g(n)`` on the words ``a^n``.

    ``g(n) = prefix[n]`` for ``n < len(prefix)`` and ``polys[n % period](n)``
    from the threshold ``len(prefix)`` on. Each residue polynomial must be
    integer-valued on its class.
    """

    prefix: tuple[int, ...]
    period: int
    polys: tuple[RationalPoly, ...]
    letter: str = "a"

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(as_int(v) for v in self.prefix))
        object.__setattr__(
            self, "polys", tuple(p if isinstance(p, RationalPoly) else RationalPoly(p) for p in self.polys)
        )
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if len(self.polys) != self.period:
            raise ValueError(f"expected {self.period} residue polynomials, got {len(self.polys)}")
        n0, m = self.threshold, self.period
        for r, p in enumerate(self.polys):
            # integer values at deg+1 consecutive class points force all the others
            start = n0 + (r - n0) % m
            for i in range(p.degree + 1):
                v = p(start + i * m)
                if not isinstance(v, int):
                    raise NonIntegerValue(f"residue polynomial {r} takes value {v} at {start + i * m}")

    @classmethod
    def polynomial(cls, coeffs: Iterable, prefix: Iterable[int] = (), letter: str = "a") -> UnaryQP:
        return cls(tuple(prefix), 1, (RationalPoly(coeffs),), letter)

    @classmethod
    def constant(cls, c: int, letter: str = "a") -> UnaryQP:
        return cls.polynomial([c], letter=letter)

    @classmethod
    def from_values(cls, values: Sequence[int], threshold: int, period: int, letter: str = "a") -> UnaryQP:
        """Fit residue polynomials through every sample at or above ``threshold``.

        The caller must supply enough samples per class to pin the degree.
        """
        polys = []
        for r in range(period):
            pts = [(n, values[n]) for n in range(threshold, len(values)) if n % period == r]
            if not pts:
                raise ValueError(f"no samples for residue class {r}")
            polys.append(RationalPoly.interpolate(pts))
        return cls(tuple(values[:threshold]), period, tuple(polys), letter)

    @property
    def threshold(self) -> int:
        return len(self.prefix)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.letter)

    def at(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative length")
        if n < len(self.prefix):
            return self.prefix[n]
        return self.polys[n % self.period](n)

    def values(self, count: int) -> list[int]:
        return [self.at(n) for n in range(count)]

    def _value(self, word: str) -> int:
        return self.at(len(word))

    def __str__(self) -> str:
        tail = "; ".join(f"[n≡{r}] {p}" for r, p in enumerate(self.polys)) if self.period > 1 else str(self.polys[0])
        return f"prefix {list(self.prefix)} then {tail}"


class LinRep(Series):
    """Linear representation over exact rationals.

    ``init`` is a row vector, ``trans[a]`` a square matrix per letter and
    ``final`` a column vector, all of length ``dim``.
    """

    def __init__(self, alphabet, init: Sequence, trans: Mapping[str, Sequence[Sequence]], final: Sequence):
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        self.init = tuple(num(x) for x in init)
        self.final = tuple(num(x) for x in final)
        d = len(self.init)
        if d < 1:
            raise ValueError("dimension must be >= 1")
        if len(self.final) != d:
            raise ValueError("init and final have different lengths")
        if set(trans) != set(self.alphabet.letters):
            raise ValueError(f"need exactly one matrix per letter of {self.alphabet}")
        self.trans = {}
        for a in self.alphabet:
            m = tuple(tuple(num(x) for x in row) for row in trans[a])
            if len(m) != d or any(len(row) != d for row in m):
                raise ValueError(f"matrix for {a!r} is not {d}x{d}")
            self.trans[a] = m
        self._right = {"": self.final}

    @property
    def dim(self) -> int:
        return len(self.init)

    def right_vector(self, word: str) -> tuple[Number, ...]:
        """``M[w1] ... M[wn] . final``, memoised per suffix."""
        cache = self._right
        if word in cache:
            return cache[word]
        if len(cache) > 500_000:
            cache.clear()
            cache[""] = self.final
        j = 0
        while word[j:] not in cache:
            j += 1
        vec = cache[word[j:]]
        for i in range(j - 1, -1, -1):
            vec = mat_vec(self.trans[word[i]], vec)
            cache[word[i:]] = vec
        return vec

    def raw_value(self, word: str) -> Number:
        return dot(self.init, self.right_vector(word))

    def _value(self, word: str) -> int:
        v = self.raw_value(word)
        if not isinstance(v, int):
            raise NonIntegerValue(f"linear representation takes value {v} on {word!r}")
        return v

    @cached_property
    def integral(self) -> bool:
        """Whether every word of length <= 4 gets an integer value."""
        return all(isinstance(self.raw_value(w), int) for w in self.alphabet.words(4))

    def __eq__(self, other):
        return (
            isinstance(other, LinRep)
            and self.alphabet == other.alphabet
            and self.init == other.init
            and self.final == other.final
            and self.trans == other.trans
        )

    def __hash__(self):
        return hash((self.alphabet, self.init, self.final))

    def __repr__(self):
        return f"LinRep(alphabet={self.alphabet}, dim={self.dim})"


@dataclass(frozen=True)
class Counting(Series):
    """``coeff * #formula(prefix . w)``, counting assignments of ``variables``."""

    alphabet: Alphabet
    formula: Formula
    variables: tuple[str, ...]
    coeff: int = 1
    prefix: str = ""

    def __post_init__(self):
        if isinstance(self.formula, str):
            object.__setattr__(self, "formula", parse_formula(self.formula))
        if not isinstance(self.alphabet, Alphabet):
            object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variables")
        if self.formula.free_vars() != frozenset(self.variables):
            raise ValueError(
                f"free variables {sorted(self.formula.free_vars())} differ from declared {list(self.variables)}"
            )
        self.alphabet.check(self.prefix)

    def _value(self, word: str) -> int:
        return self.coeff * count_models(self.formula, self.variables, self.prefix + word)


# ---------------------------------------------------------------------------
# operations


def _same_alphabet(s: Series, t: Series) -> None:
    if s.alphabet != t.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {s.alphabet} vs {t.alphabet}")


def evaluate(s: Series, word: str) -> int:
    s.alphabet.check(word)
    return s._value(word)


def add(s: Series, t: Series) -> Series:
    _same_alphabet(s, t)
    if isinstance(s, Zero):
        return t
    if isinstance(t, Zero):
        return s
    if isinstance(s, UnaryQP) and isinstance(t, UnaryQP):
        return _add_unary(s, t)
    if isinstance(s, LinRep) and isinstance(t, LinRep):
        return _direct_sum(s, t)
    raise UnsupportedVariant(f"cannot add {s.kind} and {t.kind}; convert first")


def negate(s: Series) -> Series:
    return scale(-1, s)


def subtract(s: Series, t: Series) -> Series:
    return add(s, negate(t))


def scale(c: int, s: Series) -> Series:
    c = as_int(c)
    if isinstance(s, Zero):
        return s
    if isinstance(s, UnaryQP):
        return normalize(UnaryQP(tuple(c * v for v in s.prefix), s.period, tuple(p.scale(c) for p in s.polys), s.letter))
    if isinstance(s, LinRep):
        return LinRep(s.alphabet, s.init, s.trans, [c * x for x in s.final])
    if isinstance(s, Counting):
        return Counting(s.alphabet, s.formula, s.variables, c * s.coeff, s.prefix)
    raise UnsupportedVariant(f"cannot scale {s.kind}")


def _add_unary(g: UnaryQP, h: UnaryQP) -> UnaryQP:
    n0 = max(g.threshold, h.threshold)
    m = lcm(g.period, h.period)
    prefix = tuple(g.at(n) + h.at(n) for n in range(n0))
    polys = tuple(g.polys[r % g.period] + h.polys[r % h.period] for r in range(m))
    return normalize(UnaryQP(prefix, m, polys, g.letter))


def _direct_sum(s: LinRep, t: LinRep) -> LinRep:
    d1, d2 = s.dim, t.dim
    trans = {}
    for a in s.alphabet:
        rows = [list(r) + [0] * d2 for r in s.trans[a]]
        rows += [[0] * d1 + list(r) for r in t.trans[a]]
        trans[a] = rows
    return LinRep(s.alphabet, s.init + t.init, trans, s.final + t.final)


def residual(s: Series, u: str) -> Series:
    """The function ``w -> s(u w)``."""
    s.alphabet.check(u)
    if not u or isinstance(s, Zero):
        return s
    if isinstance(s, UnaryQP):
        k = len(u)
        m = s.period
        polys = tuple(s.polys[(r + k) % m].shift(k) for r in range(m))
        return normalize(UnaryQP(s.prefix[k:], m, polys, s.letter))
    if isinstance(s, LinRep):
        v = s.init
        for a in u:
            v = vec_mat(v, s.trans[a])
        return LinRep(s.alphabet, v, s.trans, s.final)
    if isinstance(s, Counting):
        return Counting(s.alphabet, s.formula, s.variables, s.coeff, s.prefix + u)
    raise UnsupportedVariant(f"no residual for {s.kind}")


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def normalize(g: UnaryQP) -> UnaryQP:
    """Canonical form: least period, then least threshold."""
    m, polys = g.period, g.polys
    for d in _divisors(m):
        if all(polys[r] == polys[r % d] for r in range(m)):
            m, polys = d, polys[:d]
            break
    prefix = list(g.prefix)
    while prefix and prefix[-1] == polys[(len(prefix) - 1) % m](len(prefix) - 1):
        prefix.pop()
    if m == g.period and len(prefix) == g.threshold:
        return g
    return UnaryQP(tuple(prefix), m, polys, g.letter)


def is_zero(s: Series) -> bool:
    """Exact zero test.

    For linear representations this computes a basis of the reachable row
    space ``span{init . M[w]}`` and checks it is orthogonal to ``final``.
    """
    if isinstance(s, Zero):
        return True
    if isinstance(s, UnaryQP):
        g = normalize(s)
        return not g.prefix and all(p.is_zero for p in g.polys)
    if isinstance(s, LinRep):
        space = RowSpace(s.dim)
        todo = []
        if space.add(s.init):
            todo.append(s.init)
        while todo:
            v = todo.pop()
            if dot(v, s.final) != 0:
                return False
            for a in s.alphabet:
                w = vec_mat(v, s.trans[a])
                if space.add(w):
                    todo.append(w)
        return True
    raise UnsupportedVariant(f"zero test not available for {s.kind}")


def equivalent(s: Series, t: Series) -> bool:
    return is_zero(subtract(s, t))


def degree(g: UnaryQP) -> int:
    """Largest degree among the residue polynomials; -1 when eventually zero."""
    g = normalize(g)
    return max(p.degree for p in g.polys)


def first_negative(g: UnaryQP) -> int | None:
    """Least ``n`` with ``g(n) < 0``, or None when ``g`` is non-negative everywhere."""
    for n, v in enumerate(g.prefix):
        if v < 0:
            return n
    n0, m = g.threshold, g.period
    hits = []
    for r, p in enumerate(g.polys):
        start = n0 + (r - n0) % m
        if p.is_zero:
            continue
        if p.leading < 0:
            # eventually negative; locate the first negative point of the class
            n = start
            while p(n) >= 0:
                n += m
            hits.append(n)
            continue
        bound = ceil(p.root_bound())
        for n in range(start, max(bound, start) + 1, m):
            if p(n) < 0:
                hits.append(n)
                break
    return min(hits) if hits else None


def is_eventually_nonneg(g: UnaryQP) -> bool:
    """True iff ``g(n) >= 0`` for every ``n >= 0`` (despite the name, the prefix counts)."""
    return first_negative(g) is None


def unary_to_linrep(g: UnaryQP) -> LinRep:
    """Companion-matrix representation of ``g``.

    ``g`` satisfies the recurrence with characteristic polynomial
    ``X^N0 (X^m - 1)^(D+1)`` where ``N0`` is the threshold, ``m`` the period
    and ``D`` the degree.
    """
    g = normalize(g)
    n0, m, deg = g.threshold, g.period, degree(g)
    charpoly = RationalPoly([0] * n0 + [1])
    base = RationalPoly([-1] + [0] * (m - 1) + [1])
    for _ in range(deg + 1):
        charpoly = charpoly * base
    d = charpoly.degree
    if d == 0:
        return LinRep(g.alphabet, [0], {g.letter: [[0]]}, [1])
    c = charpoly.coeffs
    matrix = [[0] * d for _ in range(d)]
    for j in range(d - 1):
        matrix[j + 1][j] = 1
    for i in range(d):
        matrix[i][d - 1] = -c[i]
    return LinRep(g.alphabet, g.values(d), {g.letter: matrix}, [1] + [0] * (d - 1))


# ---------------------------------------------------------------------------
# JSON


def series_from_json(obj: Mapping) -> Series:
    kind = obj.get("kind")
    if kind == "unary-qp":
        letters = obj.get("alphabet", ["a"])
        if len(letters) != 1:
            raise ValueError("unary-qp needs a one-letter alphabet")
        polys = tuple(RationalPoly(p) for p in obj["polys"])
        return UnaryQP(tuple(obj["prefix"]), int(obj["period"]), polys, letters[0])
    if kind == "linrep":
        alphabet = Alphabet(obj["alphabet"])
        rep = LinRep(alphabet, obj["init"], obj["trans"], obj["final"])
        if "dim" in obj and int(obj["dim"]) != rep.dim:
            raise ValueError(f"declared dim {obj['dim']} but vectors have length {rep.dim}")
        return rep
    if kind == "counting":
        return Counting(
            Alphabet(obj["alphabet"]),
            parse_formula(obj["formula"]),
            tuple(obj.get("vars", ())),
            int(obj.get("coeff", 1)),
            obj.get("prefix", ""),
        )
    if kind == "zero":
        return Zero(Alphabet(obj["alphabet"]))
    raise ValueError(f"unknown series kind {kind!r}")


def series_to_json(s: Series) -> dict:
    if isinstance(s, UnaryQP):
        out = {
            "kind": "unary-qp",
            "prefix": list(s.prefix),
            "period": s.period,
            "polys": [[to_json(c) for c in p.coeffs] for p in s.polys],
        }
        if s.letter != "a":
            out["alphabet"] = [s.letter]
        return out
    if isinstance(s, LinRep):
        return {
            "kind": "linrep",
            "alphabet": list(s.alphabet),
            "dim": s.dim,
            "init": [to_json(x) for x in s.init],
            "final": [to_json(x) for x in s.final],
            "trans": {a: [[to_json(x) for x in row] for row in s.trans[a]] for a in s.alphabet},
        }
    if isinstance(s, Counting):
        out = {
            "kind": "counting",
            "alphabet": list(s.alphabet),
            "vars": list(s.variables),
            "formula": str(s.formula),
            "coeff": s.coeff,
        }
        if s.prefix:
            out["prefix"] = s.prefix
        return out
    if isinstance(s, Zero):
        return {"kind": "zero", "alphabet": list(s.alphabet)}
    raise UnsupportedVariant(f"no JSON form for {s.kind}")


def summary(s: Series, count: int = 6) -> str:
    """Short label: kind, degree when known, and the first few values."""
    if isinstance(s, Zero) or (isinstance(s, (UnaryQP, LinRep)) and is_zero(s)):
        return "0"
    if isinstance(s, UnaryQP):
        g = normalize(s)
        if not g.prefix and g.period == 1 and g.polys[0].degree == 0:
            return str(g.polys[0].leading)
        vals = ",".join(str(v) for v in g.values(count))
        return f"qp deg {degree(g)} [{vals},…]"
    words = list(s.alphabet.words(2))[:count]
    vals = ",".join(str(evaluate(s, w)) for w in words)
    return f"{s.kind.lower()} [{vals},…]"
