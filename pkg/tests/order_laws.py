"""Exhaustive checks of the quasi-order laws on short words, shared by the order and acceptance suites."""
from functools import lru_cache

from respoly.resorder import OrderCtx, derivative
from respoly.zseries import is_zero


def law_violations(ctx: OrderCtx, max_len: int = 6, max_ext: int = 3) -> dict[str, list[tuple]]:
    words = list(ctx.alphabet.words(max_len))
    ext = list(ctx.alphabet.words(max_ext))

    @lru_cache(maxsize=None)
    def below(v, u):
        return ctx.below(v, u)

    bad: dict[str, list[tuple]] = {"reflexivity": [], "transitivity": [], "right-congruence": [], "antisymmetry": []}
    for u in words:
        if not below(u, u):
            bad["reflexivity"].append((u,))
    for u in words:
        for v in words:
            if not below(u, v):
                continue
            for w in words:
                if below(v, w) and not below(u, w):
                    bad["transitivity"].append((u, v, w))
            for x in ext:
                if not below(u + x, v + x):
                    bad["right-congruence"].append((u, v, x))
            if below(v, u) and not is_zero(derivative(ctx.f, u, v)):
                bad["antisymmetry"].append((u, v))
    return bad
