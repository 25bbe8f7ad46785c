"""Conjugacy by cyclic sliding, with verified witnesses.

Iterating the sliding map lands on a periodic circuit; the set of all such
circuit elements in a conjugacy class is a complete invariant, and every
search step remembers its conjugator, so positive answers come with a
checked witness.
"""

from braidkit import BraidWord, classical, band, conjugacy_solve, cyclic_sliding, sliding_circuits
from braidkit import conjugate, words_equal
from braidkit.engine import solve_pair_to_generators

st = classical(3)
x = BraidWord.parse("B3: -2 1 2")
print("start:", x)
print("one sliding step:", cyclic_sliding(st, x))

print("\nsliding circuits of s1 in B3:")
for nf in sliding_circuits(st, BraidWord(3, (1,))):
    print("  ", nf.to_word())

a = BraidWord.parse("B4: 1 2 -3")
g = BraidWord.parse("B4: 3 -1 2 2")
b = conjugate(a, g)
cert = conjugacy_solve(classical(4), a, b)
print("\na =", a, "   b = a^g with g =", g)
print("conjugate:", cert.conjugate, " witness:", cert.witness)
print("witness verifies:", words_equal(classical(4), conjugate(a, cert.witness), b))

neg = conjugacy_solve(classical(4), BraidWord(4, (1,)), BraidWord(4, (-1,)))
print("\ns1 ~ s1^-1?", neg.conjugate, "(exponent-sum obstruction)")

# simultaneous conjugacy for a braiding pair of generator conjugates
bs = band(4)
h = BraidWord.parse("B4: 2 -3 1")
X = conjugate(BraidWord(4, (1,)), h)
Y = conjugate(BraidWord(4, (2,)), h)
u = solve_pair_to_generators(bs, X, Y)
print("\npair (X, Y) = (s1, s2)^h: found u with X^u = s1 and Y^u = s2:", u)
