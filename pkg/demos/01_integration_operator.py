"""
Summing along a run
===================

An H-transducer reads a word letter by letter. Each transition emits the
value of its label on the part of the word not yet read, and the run ends by
adding a constant attached to the final state.
"""

from respoly.gallery import load
from respoly.transducer import delta_star, eval_closed, eval_recursive, to_dot
from respoly.zseries import evaluate

# f(a^0) = 1 and f(a^n) = n - 1 afterwards
entry = load("badexok")
f = entry.series
print("f on a^0..a^7:", [evaluate(f, "a" * n) for n in range(8)])

# the two-state machine: the a-loop on state "a" emits 1 for every remaining letter
t = entry.goldens["k1"]
for n in range(6):
    w = "a" * n
    print(f"  {w or 'ε':>6}  run ends in {delta_star(t, t.initial, w) or 'ε'!r:5}"
          f"  closed={eval_closed(t, w)}  recursive={eval_recursive(t, t.initial, w)}")

# a second machine computing the same f, with a jump back to the start
loop = entry.goldens["loopback"]
print("same values:", all(eval_closed(loop, "a" * n) == evaluate(f, "a" * n) for n in range(50)))

print()
print(to_dot(t))
