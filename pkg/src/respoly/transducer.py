"""Deterministic transducers whose transitions integrate a function of the rest of the input.

Reading letter ``a`` in state ``q`` moves to ``delta[q][a]`` and emits
``lam[q][a](rest)``, the label evaluated on the remaining suffix. On the
empty input a state outputs ``final[q]``.
"""
from __future__ import annotations

import json
from collections import deque
from typing import Hashable, Iterable, Mapping

from respoly.words import Alphabet, show
from respoly.zseries import Series, is_zero, series_from_json, series_to_json, subtract, summary

State = Hashable


class HTransducer:
    def __init__(
        self,
        alphabet,
        states: Iterable[State],
        initial: State,
        delta: Mapping[State, Mapping[str, State]],
        lam: Mapping[State, Mapping[str, Series]],
        final: Mapping[State, int],
    ):
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        self.states = tuple(states)
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state names")
        if initial not in self.states:
            raise ValueError(f"initial state {initial!r} is not a state")
        self.initial = initial
        self.delta = {}
        self.lam = {}
        self.final = {}
        for q in self.states:
            if q not in final:
                raise ValueError(f"no final value for state {q!r}")
            self.final[q] = int(final[q])
            self.delta[q] = {}
            self.lam[q] = {}
            for a in self.alphabet:
                try:
                    target = delta[q][a]
                    label = lam[q][a]
                except KeyError:
                    raise ValueError(f"transition ({q!r}, {a!r}) is undefined") from None
                if target not in self.states:
                    raise ValueError(f"transition ({q!r}, {a!r}) leads to unknown state {target!r}")
                if label.alphabet != self.alphabet:
                    raise ValueError(f"label on ({q!r}, {a!r}) is over a different alphabet")
                self.delta[q][a] = target
                self.lam[q][a] = label
        unreachable = set(self.states) - self.reachable()
        if unreachable:
            raise ValueError(f"unreachable states: {sorted(map(repr, unreachable))}")

    def reachable(self) -> set:
        seen = {self.initial}
        todo = deque([self.initial])
        while todo:
            q = todo.popleft()
            for a in self.alphabet:
                p = self.delta[q][a]
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
        return seen

    def __len__(self) -> int:
        return len(self.states)

    def __call__(self, word: str) -> int:
        return eval_closed(self, word)

    def __repr__(self):
        return f"HTransducer(states={list(self.states)!r}, alphabet={self.alphabet})"


def delta_star(t: HTransducer, q: State, word: str) -> State:
    t.alphabet.check(word)
    for a in word:
        q = t.delta[q][a]
    return q


def eval_recursive(t: HTransducer, q: State, word: str) -> int:
    """``T(q, aw) = T(delta(q, a), w) + lam(q, a)(w)`` and ``T(q, ε) = F(q)``."""
    t.alphabet.check(word)
    if not word:
        return t.final[q]
    a, rest = word[0], word[1:]
    return eval_recursive(t, t.delta[q][a], rest) + t.lam[q][a]._value(rest)


def eval_closed(t: HTransducer, word: str) -> int:
    """Sum of the labels along the run plus the final value of the last state."""
    t.alphabet.check(word)
    q = t.initial
    total = 0
    for i, a in enumerate(word):
        total += t.lam[q][a]._value(word[i + 1 :])
        q = t.delta[q][a]
    return total + t.final[q]


# ---------------------------------------------------------------------------
# counters


def _letter_maps(t: HTransducer) -> tuple[list, dict[str, tuple[int, ...]]]:
    index = {q: i for i, q in enumerate(t.states)}
    maps = {a: tuple(index[t.delta[q][a]] for q in t.states) for a in t.alphabet}
    return list(t.states), maps


def transition_monoid(t: HTransducer) -> dict[tuple[int, ...], str]:
    """Elements of the transition monoid, each mapped to a shortest (shortlex) word realising it.

    An element is the tuple ``(delta*(q_0, u), ..., delta*(q_n, u))`` over the
    state indices.
    """
    states, maps = _letter_maps(t)
    ident = tuple(range(len(states)))
    elements = {ident: ""}
    todo = deque([ident])
    while todo:
        f = todo.popleft()
        for a in t.alphabet:
            g = tuple(maps[a][i] for i in f)
            if g not in elements:
                elements[g] = elements[f] + a
                todo.append(g)
    return elements


def _compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Apply ``f`` then ``g``."""
    return tuple(g[i] for i in f)


def is_counter_free(t: HTransducer) -> bool:
    """Aperiodicity of the transition monoid: ``x^n == x^(n+1)`` with ``n`` its size."""
    monoid = transition_monoid(t)
    n = len(monoid)
    for x in monoid:
        p = x
        for _ in range(n - 1):
            p = _compose(p, x)
        if _compose(p, x) != p:
            return False
    return True


def find_counter(t: HTransducer) -> tuple[State, str, int] | None:
    """Search for ``(q, u, n)`` with ``delta*(q, u) != q`` and ``delta*(q, u^n) == q``.

    Only the monoid representatives need checking for ``u``, and ``n`` never
    has to exceed the number of states (orbit lengths are bounded by it).
    """
    monoid = transition_monoid(t)
    for u in sorted(monoid.values(), key=t.alphabet.key):
        for q in t.states:
            p = delta_star(t, q, u)
            if p == q:
                continue
            for n in range(2, len(t.states) + 2):
                p = delta_star(t, p, u)
                if p == q:
                    return q, u, n
    return None


# ---------------------------------------------------------------------------
# comparison, JSON, DOT


def structurally_equal(s: HTransducer, t: HTransducer) -> bool:
    """Same states, initial state, transitions and finals; labels equal as functions."""
    if s.alphabet != t.alphabet or set(s.states) != set(t.states) or s.initial != t.initial:
        return False
    if s.final != t.final:
        return False
    for q in s.states:
        for a in s.alphabet:
            if s.delta[q][a] != t.delta[q][a]:
                return False
            if not is_zero(subtract(s.lam[q][a], t.lam[q][a])):
                return False
    return True


def transducer_to_json(t: HTransducer) -> dict:
    return {
        "alphabet": list(t.alphabet),
        "states": list(t.states),
        "initial": t.initial,
        "delta": {q: dict(t.delta[q]) for q in t.states},
        "lambda": {q: {a: series_to_json(t.lam[q][a]) for a in t.alphabet} for q in t.states},
        "final": dict(t.final),
    }


def transducer_from_json(obj: Mapping) -> HTransducer:
    alphabet = Alphabet(obj["alphabet"])
    lam = {q: {a: series_from_json(spec) for a, spec in row.items()} for q, row in obj["lambda"].items()}
    return HTransducer(alphabet, obj["states"], obj["initial"], obj["delta"], lam, obj["final"])


def dumps(t: HTransducer, **kwargs) -> str:
    return json.dumps(transducer_to_json(t), **kwargs)


def _dot_id(q: State) -> str:
    return json.dumps(show(q) if isinstance(q, str) else str(q), ensure_ascii=False)


def to_dot(t: HTransducer) -> str:
    lines = ["digraph htransducer {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in t.states:
        name = show(q) if isinstance(q, str) else str(q)
        label = json.dumps(f"{name} | {t.final[q]}", ensure_ascii=False)
        lines.append(f"  {_dot_id(q)} [shape=circle, label={label}];")
    lines.append(f"  __start -> {_dot_id(t.initial)};")
    for q in t.states:
        for a in t.alphabet:
            label = json.dumps(f"{a} / {summary(t.lam[q][a])}", ensure_ascii=False)
            lines.append(f"  {_dot_id(q)} -> {_dot_id(t.delta[q][a])} [label={label}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
