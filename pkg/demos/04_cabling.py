"""Cabling braids into tubes and extracting them back.

A braid on k strands with interior braids in tubes of widths m_1, ..., m_k
expands to one on m_1 + ... + m_k strands.  Extraction by strand deletion
recovers the parts, certified by re-cabling.
"""

from braidkit import BraidWord, classical, delta, named_element, power, words_equal
from braidkit.cabling import Composition, cable, extract, mixed_membership

comp = Composition.parse("2,2")
d = cable(BraidWord(2, (-1,)), [BraidWord(2, (1, 1)), BraidWord(2, (1, 1))], comp)
print("two full-twisted tubes crossed negatively:", d)
print("equals s1^3 s3^3 Delta^-1:",
      words_equal(classical(4), d,
                  BraidWord.parse("B4: 1 1 1 3 3 3 -1 -2 -1 -3 -2 -1")))
print("same as the named element d:", d == named_element("d", 4))

print("\nextraction:")
print("  tubular   :", extract(d, comp, "tubular"))
print("  interior 1:", extract(d, comp, "interior:1"))
print("  interior 2:", extract(d, comp, "interior:2"))
print("d swaps its tubes, so it is not in the mixed subgroup:",
      mixed_membership(d, comp))
print("its square is:", mixed_membership(power(d, 2), comp))

print("\ncabled half twists recombine: psi(Delta_2; Delta_2, Delta_1) = Delta_3:",
      words_equal(classical(3),
                  cable(delta(2), [delta(2), BraidWord.identity(1)], Composition((2, 1))),
                  delta(3)))

try:
    extract(BraidWord(3, (2,)), Composition((2, 1)), "tubular")
except ValueError as exc:
    print("\na crossing through a tube wall is rejected:", exc)
