"""Derivatives, the residual orders, membership oracles and bounded probes.

``v`` is below ``u`` at level ``k`` when the derivative ``f↾u - f↾v`` lies in
the non-negative class of level ``k - 1``. Level ``-1`` is the class ``{0}``.

Membership at levels ``j >= 0`` is only decided for functions on a one-letter
alphabet: there a function is in ``NPoly[j]`` iff it has degree at most ``j``
and never takes a negative value. Other inputs raise :class:`OracleUnavailable`.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable

from respoly.words import Alphabet, prefixes, show
from respoly.zseries import (
    LinRep,
    Series,
    UnaryQP,
    UnsupportedVariant,
    Zero,
    degree,
    is_eventually_nonneg,
    is_zero,
    normalize,
    residual,
    subtract,
)

FLAVORS = ("npoly", "nsf", "zpoly")


class OracleUnavailable(Exception):
    """Membership cannot be decided for this input (not the same as 'not a member')."""


def derivative(f: Series, u: str, v: str) -> Series:
    """``w -> f(uw) - f(vw)``."""
    if not isinstance(f, (UnaryQP, LinRep, Zero)):
        raise UnsupportedVariant(f"derivatives need a unary or linear series, got {f.kind}")
    if u == v:
        f.alphabet.check(u)
        return Zero(f.alphabet)
    return subtract(residual(f, u), residual(f, v))


def _check_level(j: int) -> None:
    if j < -1:
        raise ValueError(f"level must be >= -1, got {j}")


def _zero_class(g: Series) -> bool:
    if not isinstance(g, (UnaryQP, LinRep, Zero)):
        raise OracleUnavailable(f"zero test unavailable for {g.kind}")
    return is_zero(g)


def _unary(g: Series, j: int) -> UnaryQP | None:
    if isinstance(g, Zero):
        return None
    if not isinstance(g, UnaryQP):
        raise OracleUnavailable(f"level {j} membership is only decided for unary quasi-polynomials, got {g.kind}")
    return normalize(g)


def member_npoly(g: Series, j: int) -> bool:
    _check_level(j)
    if j == -1:
        return _zero_class(g)
    q = _unary(g, j)
    return q is None or (degree(q) <= j and is_eventually_nonneg(q))


def member_nsf(g: Series, j: int) -> bool:
    _check_level(j)
    if j == -1:
        return _zero_class(g)
    q = _unary(g, j)
    if q is None:
        return True
    if not member_npoly(q, j) or q.period != 1:
        return False
    tail = q.polys[0]
    # with a positive leading coefficient some shift has non-negative binomial coordinates
    return tail.is_zero or (tail.degree == 0 and tail.leading >= 0) or tail.leading > 0


def member_zpoly(g: Series, j: int) -> bool:
    _check_level(j)
    if j == -1:
        return _zero_class(g)
    q = _unary(g, j)
    return q is None or degree(q) <= j


MEMBERSHIP: dict[str, Callable[[Series, int], bool]] = {
    "npoly": member_npoly,
    "nsf": member_nsf,
    "zpoly": member_zpoly,
}


def _is_unary_series(f: Series) -> bool:
    return isinstance(f, UnaryQP) or (isinstance(f, Zero) and f.alphabet.is_unary)


@dataclass(frozen=True)
class OrderCtx:
    """A function, a level ``k`` and a flavour of non-negative class."""

    f: Series
    k: int
    flavor: str = "npoly"

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}; expected one of {FLAVORS}")
        if _is_unary_series(self.f):
            return
        if self.k == 0 and self.flavor in ("npoly", "zpoly") and isinstance(self.f, (LinRep, Zero)):
            return
        raise OracleUnavailable(
            f"no oracle for {self.f.kind} over alphabet {self.f.alphabet} at k={self.k} ({self.flavor}); "
            "supported: any alphabet at k=0 (npoly/zpoly) with a linear or zero series, "
            "or a unary quasi-polynomial at any k"
        )

    @property
    def alphabet(self) -> Alphabet:
        return self.f.alphabet

    def member(self, g: Series) -> bool:
        return MEMBERSHIP[self.flavor](g, self.k - 1)

    def below(self, v: str, u: str) -> bool:
        return self.member(derivative(self.f, u, v))

    def equiv(self, u: str, v: str) -> bool:
        return member_zpoly(derivative(self.f, u, v), self.k - 1)


def res_below(ctx: OrderCtx, v: str, u: str) -> bool:
    """Whether ``v`` is below ``u``: ``f↾u - f↾v`` is in the level ``k-1`` class."""
    return ctx.below(v, u)


def res_equiv(ctx: OrderCtx, u: str, v: str) -> bool:
    return ctx.equiv(u, v)


# ---------------------------------------------------------------------------
# probes


@dataclass
class WqoReport:
    mode: str
    max_len: int
    verdict: str
    witness: list[str]
    antichain_sizes: list[int]
    longest_bad_chain: int
    words_examined: int
    truncated: bool = False
    note: str = "bounded search: a clean run is evidence, not a proof"

    def to_json(self) -> dict:
        return asdict(self)


def wqo_probe(ctx: OrderCtx, mode: str = "prefix-chain", max_len: int = 20, max_nodes: int = 100_000) -> WqoReport:
    """Look for bad sequences of at most ``max_len`` words.

    ``prefix-chain``: explores words ``u`` whose chain of prefixes
    ``ε, u1, u1u2, ...`` is bad (no earlier prefix below a later one). A bad
    chain reaching ``max_len`` words is reported as ``bad-chain``.

    ``full``: enumerates words of length ``< max_len`` in shortlex order and
    keeps those not above any earlier word; this set is itself a bad
    sequence. ``antichain_sizes[n]`` is its size after length ``n``; growth at
    the last length is reported as ``bad-chain``.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if mode == "prefix-chain":
        return _prefix_chain_probe(ctx, max_len, max_nodes)
    if mode == "full":
        return _full_probe(ctx, max_len, max_nodes)
    raise ValueError(f"unknown mode {mode!r}")


def _prefix_chain_probe(ctx: OrderCtx, max_len: int, max_nodes: int) -> WqoReport:
    level = [""]
    best = ""
    sizes = [1]
    examined = 1
    truncated = False
    while level and len(level[0]) + 1 < max_len:
        nxt = []
        for word in level:
            for a in ctx.alphabet:
                child = word + a
                examined += 1
                if not any(ctx.below(p, child) for p in prefixes(word)):
                    nxt.append(child)
            if examined >= max_nodes:
                truncated = True
                break
        if not nxt:
            break
        best = nxt[0]
        sizes.append(len(nxt))
        level = nxt
        if truncated:
            break
    chain = prefixes(best)
    verdict = "bad-chain" if len(chain) >= max_len else "no-bad-sequence-up-to-bound"
    return WqoReport("prefix-chain", max_len, verdict, chain, sizes, len(chain), examined, truncated)


def _full_probe(ctx: OrderCtx, max_len: int, max_nodes: int) -> WqoReport:
    minimal: list[str] = []
    sizes = []
    examined = 0
    truncated = False
    for n in range(max_len):
        for word in ctx.alphabet.words(n, n):
            examined += 1
            # transitivity: an earlier dominated word is itself above a kept one
            if not any(ctx.below(v, word) for v in minimal):
                minimal.append(word)
            if examined >= max_nodes:
                truncated = True
                break
        sizes.append(len(minimal))
        if truncated:
            break
    growing = len(sizes) == 1 or sizes[-1] > sizes[-2]
    verdict = "bad-chain" if growing else "no-bad-sequence-up-to-bound"
    return WqoReport("full", max_len, verdict, minimal, sizes, len(minimal), examined, truncated)


@dataclass
class AperiodicityReport:
    u: str
    w: str
    n_max: int
    threshold: int | None
    verdict: str
    failures: list[int] = field(default_factory=list)
    note: str = "semi-decision: only n < n_max is checked"

    def to_json(self) -> dict:
        return asdict(self)


def aperiodicity_probe(ctx: OrderCtx, u: str, w: str, n_max: int = 20) -> AperiodicityReport:
    """Least ``N0`` such that ``u w^n`` is below ``u w^(n+1)`` for all ``N0 <= n < n_max``."""
    if ctx.flavor != "nsf":
        raise ValueError("the aperiodicity probe uses the star-free order (flavor 'nsf')")
    if not w:
        raise ValueError("w must be non-empty")
    ctx.alphabet.check(u)
    ctx.alphabet.check(w)
    failures = [n for n in range(n_max) if not ctx.below(u + w * n, u + w * (n + 1))]
    if failures and failures[-1] == n_max - 1:
        return AperiodicityReport(u, w, n_max, None, "no-threshold-up-to-bound", failures)
    threshold = failures[-1] + 1 if failures else 0
    return AperiodicityReport(u, w, n_max, threshold, "non-decreasing-from", failures)


def describe_chain(chain: list[str]) -> str:
    return ", ".join(show(w) for w in chain)
