"""Construction and validation of the k-residual transducer of a function.

States are words. Starting from ``Q = {ε}`` and the open set ``O`` of
one-letter words, each open word ``ua`` is either sent to the longest prefix
``v`` already in ``Q`` that is below it (emitting the derivative
``f↾ua - f↾v``), or becomes a new state whose one-letter extensions are
opened in turn.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from respoly.resorder import OrderCtx, derivative, member_npoly
from respoly.transducer import HTransducer, eval_closed
from respoly.words import Alphabet, prefixes, show
from respoly.zseries import LinRep, Series, UnaryQP, Zero, evaluate, first_negative, is_zero, normalize, subtract

POLICIES = ("shortlex", "fifo", "lifo")


@dataclass(frozen=True)
class BuildConfig:
    k: int
    fuel: int = 10_000
    max_states: int = 1024
    worklist_policy: str = "shortlex"
    check_invariants: bool = False

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.fuel < 1 or self.max_states < 1:
            raise ValueError("fuel and max_states must be >= 1")
        if self.worklist_policy not in POLICIES:
            raise ValueError(f"unknown worklist policy {self.worklist_policy!r}")


@dataclass
class Step:
    chosen: str
    branch: str  # "if": sent to an existing state, "else": new state
    target: str
    states: list[str]
    open: list[str]

    def to_json(self) -> dict:
        return {"chosen": self.chosen, "branch": self.branch, "target": self.target, "Q": self.states, "O": self.open}


@dataclass
class BuildTrace:
    steps: list[Step] = field(default_factory=list)
    oracle_calls: int = 0
    invariant_violations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "oracle_calls": self.oracle_calls,
            "invariant_violations": self.invariant_violations,
        }


class FuelExhausted(Exception):
    """No finite transducer emerged within the budget; carries the partial trace."""

    def __init__(self, message: str, trace: BuildTrace):
        super().__init__(message)
        self.trace = trace


class _Worklist:
    def __init__(self, policy: str, alphabet: Alphabet):
        self.policy = policy
        self.alphabet = alphabet
        self.items: deque[str] = deque()

    def __bool__(self):
        return bool(self.items)

    def extend(self, words):
        self.items.extend(words)

    def pop(self) -> str:
        if self.policy == "fifo":
            return self.items.popleft()
        if self.policy == "lifo":
            return self.items.pop()
        best = min(self.items, key=self.alphabet.key)
        self.items.remove(best)
        return best

    def snapshot(self) -> list[str]:
        return sorted(self.items, key=self.alphabet.key)


def _check_invariants(states: set[str], open_words: list[str]) -> list[str]:
    problems = []
    union = states | set(open_words)
    for w in union:
        if w and w[:-1] not in union:
            problems.append(f"{show(w)}: prefix {show(w[:-1])} missing from Q ∪ O")
    for i, x in enumerate(open_words):
        for y in open_words[i + 1 :]:
            if x.startswith(y) or y.startswith(x):
                problems.append(f"open words {show(x)} and {show(y)} are prefix-comparable")
        for w in union:
            if w != x and w.startswith(x):
                problems.append(f"open word {show(x)} is not maximal: {show(w)} extends it")
    return problems


def build_residual_transducer(f: Series, cfg: BuildConfig, trace: BuildTrace | None = None) -> HTransducer:
    """Run the worklist construction; raise :class:`FuelExhausted` when the budget runs out.

    Raises :class:`~respoly.resorder.OracleUnavailable` when ``(f, cfg.k)``
    has no membership oracle.
    """
    ctx = OrderCtx(f, cfg.k, "npoly")
    alphabet = f.alphabet
    trace = trace if trace is not None else BuildTrace()
    states = [""]
    state_set = {""}
    delta: dict[str, dict[str, str]] = {"": {}}
    lam: dict[str, dict[str, Series]] = {"": {}}
    work = _Worklist(cfg.worklist_policy, alphabet)
    work.extend(alphabet.letters)

    while work:
        ua = work.pop()
        u, a = ua[:-1], ua[-1]
        target = None
        # prefixes of ua in Q are exactly the prefixes of u; try the longest first
        for v in reversed(prefixes(u)):
            if trace.oracle_calls >= cfg.fuel:
                raise FuelExhausted(f"oracle budget of {cfg.fuel} calls exhausted with {len(states)} states", trace)
            trace.oracle_calls += 1
            if ctx.below(v, ua):
                target = v
                break
        if target is not None:
            delta[u][a] = target
            # level -1 derivatives are zero by construction
            lam[u][a] = Zero(alphabet) if cfg.k == 0 else derivative(f, ua, target)
            branch = "if"
        else:
            if len(states) >= cfg.max_states:
                raise FuelExhausted(f"state limit of {cfg.max_states} reached", trace)
            states.append(ua)
            state_set.add(ua)
            delta[ua], lam[ua] = {}, {}
            delta[u][a] = ua
            lam[u][a] = Zero(alphabet)
            work.extend(ua + b for b in alphabet)
            target = ua
            branch = "else"
        snapshot = work.snapshot()
        trace.steps.append(Step(ua, branch, target, sorted(states, key=alphabet.key), snapshot))
        if cfg.check_invariants:
            trace.invariant_violations.extend(_check_invariants(state_set, snapshot))

    final = {u: evaluate(f, u) for u in states}
    states.sort(key=alphabet.key)
    return HTransducer(alphabet, states, "", delta, lam, final)


# ---------------------------------------------------------------------------
# validation


@dataclass
class Violation:
    condition: int
    message: str
    state: str | None = None
    letter: str | None = None


@dataclass
class Validation:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def conditions(self) -> set[int]:
        return {v.condition for v in self.violations}

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "violations": [
                {"condition": v.condition, "message": v.message, "state": v.state, "letter": v.letter}
                for v in self.violations
            ],
        }


def _test_words(alphabet: Alphabet) -> list[str]:
    return list(alphabet.words(200 if alphabet.is_unary else 12))


def validate_residual_transducer(f: Series, k: int, t: HTransducer, words: list[str] | None = None) -> Validation:
    """Check the six defining conditions of the k-residual transducer.

    1. ``t`` computes ``f`` (on every test word; default ``|w| <= 12``, or
       ``n <= 200`` on one letter), and exactly via conditions 6 plus
       ``F(q) = f(q)``;
    2. states form a prefix-closed set of words;
    3. the initial state is ``ε``;
    4. every state is reachable;
    5. ``delta(u, a)`` is the longest state that is a prefix of ``ua`` and below it;
    6. ``lambda(u, a) = f↾ua - f↾delta(u, a)`` and lies in the level ``k-1`` class.
    """
    ctx = OrderCtx(f, k, "npoly")
    out: list[Violation] = []
    if t.alphabet != f.alphabet:
        return Validation([Violation(1, f"alphabets differ: {t.alphabet} vs {f.alphabet}")])
    states = set(t.states)
    word_states = all(isinstance(q, str) for q in states)

    for w in words if words is not None else _test_words(f.alphabet):
        got, want = eval_closed(t, w), evaluate(f, w)
        if got != want:
            out.append(Violation(1, f"T({show(w)}) = {got} but f({show(w)}) = {want}"))
            break
    if word_states:
        for q in t.states:
            if t.final[q] != evaluate(f, q):
                out.append(Violation(1, f"F({show(q)}) = {t.final[q]} but f({show(q)}) = {evaluate(f, q)}", q))

    if not word_states:
        out.append(Violation(2, "states are not words"))
    else:
        for q in t.states:
            try:
                f.alphabet.check(q)
            except ValueError:
                out.append(Violation(2, f"state {q!r} is not a word over {f.alphabet}", q))
                continue
            if q and q[:-1] not in states:
                out.append(Violation(2, f"prefix {show(q[:-1])} of state {show(q)} is not a state", q))
    if t.initial != "":
        out.append(Violation(3, f"initial state is {t.initial!r}, not ε"))
    missing = states - t.reachable()
    for q in sorted(missing, key=repr):
        out.append(Violation(4, f"state {q!r} is unreachable", q))
    if not word_states:
        return Validation(out)

    for u in sorted(t.states, key=f.alphabet.key):
        for a in f.alphabet:
            ua = u + a
            got = t.delta[u][a]
            if ua in states:
                want = ua
            else:
                want = next((v for v in reversed(prefixes(u)) if v in states and ctx.below(v, ua)), None)
            if got != want:
                if want is None:
                    msg = f"δ({show(u)},{a}) = {show(got)} but no state is both a prefix of and below {show(ua)}"
                else:
                    msg = f"δ({show(u)},{a}) = {show(got)} but state {show(want)} is the longest prefix of {show(ua)} below it"
                out.append(Violation(5, msg, want, a))
            label = t.lam[u][a]
            expected = derivative(f, ua, got) if isinstance(got, str) and ua.startswith(got) else None
            if expected is None:
                out.append(Violation(6, f"δ({show(u)},{a}) = {show(got)} is not a prefix of {show(ua)}", u, a))
                continue
            try:
                same = is_zero(subtract(label, expected))
            except (TypeError, ValueError):
                same = False
            if not same:
                out.append(Violation(6, f"λ({show(u)},{a}) differs from f↾{show(ua)} - f↾{show(got)}", u, a))
            elif not member_npoly(label, k - 1):
                out.append(Violation(6, f"λ({show(u)},{a}) is not in the level {k - 1} class", u, a))
    return Validation(out)


# ---------------------------------------------------------------------------
# one-state impossibility


@dataclass(frozen=True)
class Witness:
    letter: str
    word: str
    value: int


def minimality_witness(f: Series, max_len: int = 8) -> Witness | None:
    """Evidence that no one-state ``NPoly[0]`` transducer computes ``f``.

    A one-state machine would have to use ``f↾a - f`` as the label of its
    ``a``-loop; a word on which that difference is negative rules it out.
    """
    for a in f.alphabet:
        g = derivative(f, a, "")
        if isinstance(g, UnaryQP):
            n = first_negative(normalize(g))
            if n is not None:
                return Witness(a, a * n, g.at(n))
        elif isinstance(g, LinRep):
            for w in f.alphabet.words(max_len):
                v = evaluate(g, w)
                if v < 0:
                    return Witness(a, w, v)
    return None


def minimality_witness_badexok() -> Witness:
    from respoly.gallery import load

    w = minimality_witness(load("badexok").series)
    assert w is not None
    return w

