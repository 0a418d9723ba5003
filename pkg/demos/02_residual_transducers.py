"""
Building the k-residual transducer
==================================

The builder explores words in a worklist. A word becomes a new state unless
one of its prefixes already in the machine lies below it in the residual
order, in which case the transition jumps back to that prefix.
"""

from respoly.builder import (
    BuildConfig,
    BuildTrace,
    FuelExhausted,
    build_residual_transducer,
    minimality_witness,
    validate_residual_transducer,
)
from respoly.gallery import load
from respoly.transducer import find_counter, is_counter_free
from respoly.words import show

for name, k in [("badexok", 1), ("badexko", 1), ("parity", 0), ("choose2", 2)]:
    f = load(name).series
    trace = BuildTrace()
    t = build_residual_transducer(f, BuildConfig(k), trace)
    edges = ", ".join(f"{show(q)}-a->{show(t.delta[q]['a'])}" for q in t.states)
    print(f"{name} k={k}: states {[show(q) for q in t.states]}  {edges}  ({trace.oracle_calls} oracle calls)")
    print(f"   counter-free: {is_counter_free(t)}   counter: {find_counter(t)}")
    print(f"   valid: {validate_residual_transducer(f, k, t).ok}")

# with k too small there is no finite machine; the builder runs out of fuel
try:
    build_residual_transducer(load("badexok").series, BuildConfig(0, fuel=100))
except FuelExhausted as e:
    print("\nbadexok k=0:", e)

# why one state is not enough for badexok at level 0
print("one-state witness:", minimality_witness(load("badexok").series))

# the loopback machine computes the right values but is not the residual one
bad = validate_residual_transducer(load("badexok").series, 1, load("badexok").goldens["loopback"])
for v in bad.violations:
    print(f"  condition {v.condition}: {v.message}")
