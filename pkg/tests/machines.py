"""Random H-transducers and a definitional counter search, shared by several suites."""
import random

from respoly.transducer import HTransducer, delta_star
from respoly.words import Alphabet
from respoly.zseries import UnaryQP, Zero


def random_machine(rng: random.Random, max_states=5, labels=False) -> HTransducer:
    n = rng.randint(1, max_states)
    alphabet = Alphabet("ab"[: rng.randint(1, 2)])
    delta = {q: {a: rng.randrange(n) for a in alphabet} for q in range(n)}
    seen, todo = {0}, [0]
    while todo:
        q = todo.pop()
        for a in alphabet:
            if delta[q][a] not in seen:
                seen.add(delta[q][a])
                todo.append(delta[q][a])
    states = sorted(seen)

    def label():
        if labels and alphabet.is_unary:
            return UnaryQP.from_values([rng.randint(-3, 3) for _ in range(4)], 2, 1)
        return Zero(alphabet)

    lam = {q: {a: label() for a in alphabet} for q in states}
    final = {q: rng.randint(-5, 5) for q in states}
    return HTransducer(alphabet, states, 0, {q: delta[q] for q in states}, lam, final)


def brute_counter(t: HTransducer, max_u: int, max_n: int) -> bool:
    """Is there (q, u) with δ(q,u) ≠ q but δ(q,uⁿ) = q for some 2 ≤ n ≤ max_n, |u| ≤ max_u?"""
    for u in t.alphabet.words(max_u, 1):
        for q in t.states:
            if delta_star(t, q, u) != q and any(delta_star(t, q, u * n) == q for n in range(2, max_n + 1)):
                return True
    return False
