"""
Counting formulas and linear representations
============================================

Counting the satisfying assignments of a first-order formula gives a function
on words. The same function often has a small linear representation, which
supports exact residuals and zero tests.
"""

from respoly.fo import parse_formula
from respoly.gallery import load
from respoly.words import Alphabet
from respoly.zseries import Counting, evaluate, is_zero, residual, subtract

phi = parse_formula("and(atom(a,x), atom(b,y), lt(x,y))")
pairs = Counting("ab", phi, ("x", "y"))
for w in ["ab", "aabb", "abab", "bbaa"]:
    print(f"{w}: {evaluate(pairs, w)} ordered (a, b) pairs")

linear = load("count-ab").series
counting = load("count-ab").variants["counting"]
print("\nlinear rep dimension:", linear.dim)
print("agree on |w| <= 8:", all(evaluate(linear, w) == evaluate(counting, w) for w in Alphabet("ab").words(8)))

# residuals commute in pairs: f↾ab - f↾ba is the zero function
print("f↾ab == f↾ba:", is_zero(subtract(residual(linear, "ab"), residual(linear, "ba"))))
print("f↾ab == f↾aa:", is_zero(subtract(residual(linear, "ab"), residual(linear, "aa"))))
