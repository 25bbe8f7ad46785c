"""Linking numbers of pure braids and the abelianization coordinates.

Each pair of strands contributes half the signed count of their mutual
crossings; the resulting vector is a complete abelian invariant of pure
braids and restricts to the zero-sum sublattice on the commutator part.
"""

from braidkit import BraidWord, band_generator, delta, named_element
from braidkit import compose, conjugate, permutation_of, power
from braidkit.purebraid import abelianize_pure, linking_matrix, membership, periodic_degree

full_twist = power(delta(4), 2)
lk = linking_matrix(full_twist)
print("full twist on 4 strands: every pair links once")
for i in range(1, 5):
    for j in range(i + 1, 5):
        print(f"  lk({i},{j}) =", lk[i, j])
print("periodic degree:", periodic_degree(full_twist))

x = compose(power(band_generator(1, 3, 5), 2), power(band_generator(2, 4, 5), -2))
print("\nx =", x)
print("pure:", membership(x, "pure"), " zero exponent:", membership(x, "commutator"))
print("coordinates:", abelianize_pure(x, "J"))

g = BraidWord.parse("B5: 2 -4 1 3")
mu = permutation_of(g)
lx, lxg = linking_matrix(x), linking_matrix(conjugate(x, g))
print("\nconjugation permutes the coordinates: lk_ij(x) = lk_{g(i)g(j)}(x^g)")
for i, j in [(1, 3), (2, 4), (1, 2)]:
    print(f"  lk({i},{j})={lx[i,j]}  vs  lk({mu(i)},{mu(j)}) of x^g = {lxg[mu(i), mu(j)]}")

tau = named_element("tau", 5)
print("\nthe two-tube element on 5 strands lies in the zero-sum part:",
      membership(tau, "J"), abelianize_pure(tau, "J"))
