"""
Residual orders and bounded probes
==================================

``v`` is below ``u`` when the difference of residuals f↾u - f↾v belongs to the
non-negative class one level down. The probes search for bad sequences and for
eventually non-decreasing runs; they report what they saw up to a bound.
"""

from respoly.gallery import load
from respoly.resorder import OrderCtx, aperiodicity_probe, derivative, res_below, res_equiv, wqo_probe
from respoly.zseries import evaluate

ok, ko = load("badexok").series, load("badexko").series

d = derivative(ko, "aa", "")
print("badexko: f(aa w) - f(w) =", [evaluate(d, "a" * n) for n in range(8)])

ctx = OrderCtx(ok, 1)
words = ["a" * n for n in range(4)]
print("\nbadexok, k=1: rows u, columns v, entry = v below u")
for u in words:
    print(f"  {u or 'ε':>4}  " + " ".join("x" if res_below(ctx, v, u) else "." for v in words))
print("ε equivalent to a:", res_equiv(ctx, "", "a"))

for k in (1, 0):
    r = wqo_probe(OrderCtx(ok, k), max_len=20)
    print(f"\nwqo probe k={k}: {r.verdict}, longest bad prefix chain {r.longest_bad_chain}")

r = aperiodicity_probe(OrderCtx(ko, 1, "nsf"), "", "a", n_max=20)
print(f"\naperiodicity probe on badexko: {r.verdict} N0={r.threshold} failures={r.failures}")
r = aperiodicity_probe(OrderCtx(load("parity").series, 1, "nsf"), "", "a", n_max=20)
print(f"aperiodicity probe on parity:  {r.verdict}")
