"""Structure-generic word and conjugacy machinery.

Elements are kept in left normal form delta^p A_1 ... A_r where every factor
is a proper simple and every adjacent pair is left weighted.  Two braid words
represent the same element exactly when their normal forms coincide, which
turns the word problem into tuple comparison.

Conjugacy is decided through cyclic sliding: iterating the sliding map lands
on a periodic circuit, and the set of all sliding circuits of an element is a
conjugacy-class invariant which we enumerate by closing under conjugation by
simple elements.  Every search step records its conjugator, so membership
answers come with verified witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import words as W
from .garside import GarsideStructure, Simple
from .words import BraidWord

_SC_MAX = 20000
_TRAJECTORY_MAX = 10000


@dataclass(frozen=True, eq=False)
class GarsideNormalForm:
    """A power of the Garside element plus a weighted sequence of proper
    simples; ``side`` records whether the power sits on the left or right."""

    structure: GarsideStructure
    inf: int
    factors: tuple[Simple, ...]
    side: str = "left"

    def key(self) -> tuple:
        return (
            self.structure.kind,
            self.structure.n,
            self.side,
            self.inf,
            tuple(f.key for f in self.factors),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, GarsideNormalForm) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def is_trivial(self) -> bool:
        return self.inf == 0 and not self.factors

    def to_word(self) -> BraidWord:
        st = self.structure
        delta_word = BraidWord(st.n, st.simple_word(st.delta()))
        factor_words = [BraidWord(st.n, st.simple_word(f)) for f in self.factors]
        if self.side == "left":
            parts = [W.power(delta_word, self.inf)] + factor_words
        else:
            parts = factor_words + [W.power(delta_word, self.inf)]
        return W.compose(*parts)

    def __repr__(self):
        return (
            f"GarsideNormalForm({self.structure.kind}, n={self.structure.n}, "
            f"side={self.side}, inf={self.inf}, factors={[f.key for f in self.factors]})"
        )


# ---------------------------------------------------------------------------
# Normalisation and arithmetic


def _strip(st: GarsideStructure, fs: list[Simple]) -> tuple[int, tuple[Simple, ...]]:
    lo = 0
    while lo < len(fs) and st.is_delta(fs[lo]):
        lo += 1
    hi = len(fs)
    while hi > lo and st.is_identity(fs[hi - 1]):
        hi -= 1
    return lo, tuple(fs[lo:hi])


def _normalize(st: GarsideStructure, factors: Iterable[Simple]) -> tuple[int, tuple[Simple, ...]]:
    """Left-weight an arbitrary factor sequence by local moves to a fixpoint."""
    fs = [f for f in factors if not st.is_identity(f)]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            x, y, moved = st.normalize_pair(fs[i], fs[i + 1])
            if moved:
                fs[i], fs[i + 1] = x, y
                changed = True
    return _strip(st, fs)


def _combine(
    st: GarsideStructure, left: list[Simple], right: list[Simple]
) -> tuple[int, tuple[Simple, ...]]:
    """Weight the concatenation of two already weighted sequences.

    Work the junction forward; every change combs backwards, so weight that
    frees up is carried as far left as it goes.
    """
    fs = left + right
    start = len(left) - 1
    if start >= 0:
        for i in range(start, len(fs) - 1):
            x, y, moved = st.normalize_pair(fs[i], fs[i + 1])
            if not moved:
                break
            fs[i], fs[i + 1] = x, y
            for j in range(i - 1, -1, -1):
                x, y, moved = st.normalize_pair(fs[j], fs[j + 1])
                if not moved:
                    break
                fs[j], fs[j + 1] = x, y
    return _strip(st, [f for f in fs if not st.is_identity(f)])


def identity_nf(st: GarsideStructure) -> GarsideNormalForm:
    return GarsideNormalForm(st, 0, ())


def delta_power(st: GarsideStructure, p: int) -> GarsideNormalForm:
    return GarsideNormalForm(st, p, ())


def simple_nf(st: GarsideStructure, s: Simple) -> GarsideNormalForm:
    if st.is_identity(s):
        return identity_nf(st)
    if st.is_delta(s):
        return delta_power(st, 1)
    return GarsideNormalForm(st, 0, (s,))


def mul(x: GarsideNormalForm, y: GarsideNormalForm) -> GarsideNormalForm:
    st = x.structure
    if (st.kind, st.n) != (y.structure.kind, y.structure.n):
        raise ValueError("structure mismatch")
    q = y.inf
    shifted = [st.twist_pow(a, q) for a in x.factors]
    extra, factors = _combine(st, shifted, list(y.factors))
    return GarsideNormalForm(st, x.inf + q + extra, factors)


def inv(x: GarsideNormalForm) -> GarsideNormalForm:
    st = x.structure
    p, fs = x.inf, x.factors
    r = len(fs)
    rev = [
        st.twist_pow(st.complement(fs[i]), -(p + i + 1))
        for i in range(r - 1, -1, -1)
    ]
    extra, factors = _normalize(st, rev)
    return GarsideNormalForm(st, -p - r + extra, factors)


def power(x: GarsideNormalForm, k: int) -> GarsideNormalForm:
    acc = identity_nf(x.structure)
    base = x if k >= 0 else inv(x)
    for _ in range(abs(k)):
        acc = mul(acc, base)
    return acc


def conjugate(x: GarsideNormalForm, g: GarsideNormalForm) -> GarsideNormalForm:
    """x^g = g^-1 x g."""
    return mul(mul(inv(g), x), g)


def from_word(st: GarsideStructure, w: BraidWord) -> GarsideNormalForm:
    if w.strands != st.n:
        raise ValueError("strand count does not match the structure")
    out = identity_nf(st)
    for k in reversed(w.letters):
        a = st.letter_simple(abs(k))
        if k > 0:
            letter = simple_nf(st, a)
        else:
            lc = st.left_complement(a)
            if st.is_identity(lc):
                letter = delta_power(st, -1)
            else:
                letter = GarsideNormalForm(st, -1, (lc,))
        out = mul(letter, out)
    return out


def _normalize_right(st: GarsideStructure, factors: Iterable[Simple]) -> tuple[int, tuple[Simple, ...]]:
    """Right-weight a factor sequence; Garside powers collect at the back."""
    fs = [f for f in factors if not st.is_identity(f)]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            x, y, moved = st.normalize_pair_right(fs[i], fs[i + 1])
            if moved:
                fs[i], fs[i + 1] = x, y
                changed = True
    hi = len(fs)
    extra = 0
    while hi > 0 and st.is_delta(fs[hi - 1]):
        hi -= 1
        extra += 1
    lo = 0
    while lo < hi and st.is_identity(fs[lo]):
        lo += 1
    return extra, tuple(fs[lo:hi])


def normal_form(st: GarsideStructure, w: BraidWord, side: str = "left") -> GarsideNormalForm:
    """The unique left (or right) weighted form of the word."""
    if side == "left":
        return from_word(st, w)
    if side != "right":
        raise ValueError(f"unknown side {side!r}")
    x = from_word(st, w)
    shifted = [st.twist_pow(a, -x.inf) for a in x.factors]
    extra, factors = _normalize_right(st, shifted)
    return GarsideNormalForm(st, x.inf + extra, factors, side="right")


def words_equal(st: GarsideStructure, a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise ValueError("strand-count mismatch")
    if W.exponent_sum(a) != W.exponent_sum(b):
        return False
    if W.permutation_of(a) != W.permutation_of(b):
        return False
    return from_word(st, a).key() == from_word(st, b).key()


# ---------------------------------------------------------------------------
# Cyclic sliding and sliding circuits


def preferred_prefix(x: GarsideNormalForm) -> Simple:
    """Meet of the initial factors of x and of x^-1."""
    st = x.structure
    if not x.factors:
        return st.identity()
    initial = st.twist_pow(x.factors[0], -x.inf)
    initial_of_inverse = st.complement(x.factors[-1])
    return st.meet(initial, initial_of_inverse)


def _slide_step(x: GarsideNormalForm) -> tuple[GarsideNormalForm, Simple]:
    st = x.structure
    p = preferred_prefix(x)
    if st.is_identity(p):
        return x, p
    return conjugate(x, simple_nf(st, p)), p


def cyclic_sliding(st: GarsideStructure, w: BraidWord) -> BraidWord:
    """One application of the sliding map, as a word."""
    y, _ = _slide_step(from_word(st, w))
    return y.to_word()


def _slide_to_circuit(
    x: GarsideNormalForm,
) -> tuple[GarsideNormalForm, BraidWord, list[GarsideNormalForm]]:
    """Iterate sliding until the trajectory becomes periodic.

    Returns a canonical element of the circuit reached, a conjugating word
    from x to it, and the circuit itself.
    """
    st = x.structure
    n = st.n
    seen: dict[tuple, int] = {}
    traj: list[tuple[GarsideNormalForm, BraidWord]] = []
    cur = x
    trail = BraidWord.identity(n)
    while True:
        k = cur.key()
        if k in seen:
            start = seen[k]
            break
        seen[k] = len(traj)
        traj.append((cur, trail))
        nxt, p = _slide_step(cur)
        if st.is_identity(p):
            start = seen[k]
            break
        trail = W.free_reduce(W.compose(trail, BraidWord(n, st.simple_word(p))))
        cur = nxt
        if len(traj) > _TRAJECTORY_MAX:
            raise RuntimeError("sliding trajectory cap exceeded")
    circuit = traj[start:]
    rep, rep_trail = min(circuit, key=lambda e: e[0].key())
    return rep, rep_trail, [e for e, _ in circuit]


def sliding_circuits_with_trails(
    st: GarsideStructure, w: BraidWord
) -> dict[tuple, tuple[GarsideNormalForm, BraidWord]]:
    """All elements on sliding circuits conjugate to w, each with a
    conjugating word from w to it."""
    st.simples()  # enforce the enumeration cap before searching
    rep, trail, _ = _slide_to_circuit(from_word(st, w))
    found: dict[tuple, tuple[GarsideNormalForm, BraidWord]] = {}
    queue: list[tuple[GarsideNormalForm, BraidWord]] = []

    def add_circuit(entry: GarsideNormalForm, entry_trail: BraidWord):
        cur, cur_trail = entry, entry_trail
        while cur.key() not in found:
            found[cur.key()] = (cur, cur_trail)
            queue.append((cur, cur_trail))
            nxt, p = _slide_step(cur)
            if st.is_identity(p):
                break
            cur_trail = W.free_reduce(
                W.compose(cur_trail, BraidWord(st.n, st.simple_word(p)))
            )
            cur = nxt

    add_circuit(rep, trail)
    proper_simples = [s for s in st.simples() if not st.is_identity(s)]
    while queue:
        y, y_trail = queue.pop()
        for s in proper_simples:
            z = conjugate(y, simple_nf(st, s))
            if z.key() in found:
                continue
            z_rep, z_trail, _ = _slide_to_circuit(z)
            if z_rep.key() not in found:
                full = W.free_reduce(
                    W.compose(y_trail, BraidWord(st.n, st.simple_word(s)), z_trail)
                )
                add_circuit(z_rep, full)
                if len(found) > _SC_MAX:
                    raise RuntimeError("sliding circuit cap exceeded")
    return found


def sliding_circuits(st: GarsideStructure, w: BraidWord) -> tuple[GarsideNormalForm, ...]:
    found = sliding_circuits_with_trails(st, w)
    return tuple(nf for nf, _ in sorted(found.values(), key=lambda e: e[0].key()))


# ---------------------------------------------------------------------------
# Conjugacy


@dataclass(frozen=True)
class ConjugacyCertificate:
    conjugate: bool
    witness: BraidWord | None = None


def conjugacy_solve(st: GarsideStructure, a: BraidWord, b: BraidWord) -> ConjugacyCertificate:
    """Decide conjugacy; a positive answer carries u with a^u = b, verified
    before it is returned."""
    if a.strands != b.strands:
        raise ValueError("strand-count mismatch")
    if W.exponent_sum(a) != W.exponent_sum(b):
        return ConjugacyCertificate(False)
    if W.permutation_of(a).cycle_type() != W.permutation_of(b).cycle_type():
        return ConjugacyCertificate(False)
    sc_a = sliding_circuits_with_trails(st, a)
    b_rep, b_trail, _ = _slide_to_circuit(from_word(st, b))
    hit = sc_a.get(b_rep.key())
    if hit is None:
        return ConjugacyCertificate(False)
    _, a_trail = hit
    u = W.free_reduce(W.compose(a_trail, W.inverse(b_trail)))
    if not words_equal(st, W.conjugate(a, u), b):
        raise AssertionError("conjugacy witness failed verification")
    return ConjugacyCertificate(True, u)


def summit_length(st: GarsideStructure, w: BraidWord) -> int:
    """Minimal canonical length over the conjugacy class."""
    rep, _, _ = _slide_to_circuit(from_word(st, w))
    return rep.canonical_length


# ---------------------------------------------------------------------------
# Conjugates of atoms: normal-form shape and simultaneous conjugacy


def is_atom_nf(x: GarsideNormalForm) -> bool:
    st = x.structure
    return (
        x.inf == 0
        and len(x.factors) == 1
        and st.atom_length(x.factors[0]) == 1
    )


def atom_conjugate_shape(x: GarsideNormalForm):
    """Split the normal form of a conjugate of an atom as
    delta^-p . A_p ... A_1 . a . B_1 ... B_p; None if it has no such shape."""
    st = x.structure
    r = len(x.factors)
    if r % 2 == 0:
        return None
    p = r // 2
    if x.inf != -p:
        return None
    mid = x.factors[p]
    if st.atom_length(mid) != 1:
        return None
    a_list = tuple(reversed(x.factors[:p]))  # A_1, ..., A_p
    b_list = tuple(x.factors[p + 1:])        # B_1, ..., B_p
    return p, a_list, mid, b_list


def _first_right_factor(x: GarsideNormalForm) -> Simple:
    """Leading factor of the right normal form."""
    st = x.structure
    shifted = [st.twist_pow(a, -x.inf) for a in x.factors]
    _, factors = _normalize_right(st, shifted)
    return factors[0] if factors else st.delta()


def solve_pair_to_generators(
    st: GarsideStructure, x_word: BraidWord, y_word: BraidWord
) -> BraidWord | None:
    """For conjugates X, Y of the first two Artin generators with XYX = YXY,
    find u with X^u = s1 and Y^u = s2.

    Runs in the band structure: repeatedly strip the outer normal-form level
    of X by a conjugation that keeps Y an atom, then walk the finite graph of
    atom pairs.
    """
    n = st.n
    s1 = BraidWord(n, (1,))
    s2 = BraidWord(n, (2,))
    cert = conjugacy_solve(st, y_word, s2)
    if not cert.conjugate:
        return None
    u = cert.witness
    x = from_word(st, W.conjugate(x_word, u))
    y = st.letter_simple(2)

    while not is_atom_nf(x):
        shape = atom_conjugate_shape(x)
        if shape is None:
            return None
        _, _, _, b_list = shape
        length_before = x.canonical_length
        bp = b_list[-1]
        y_elem = simple_nf(st, y)
        moved = False
        if st.mul(bp, y) is not None:
            v = simple_nf(st, bp)
            y_new = mul(mul(v, y_elem), inv(v))  # B_p y B_p^-1
            if is_atom_nf(y_new):
                x = conjugate(x, inv(v))
                y = y_new.factors[0]
                u = W.free_reduce(
                    W.compose(u, W.inverse(BraidWord(n, st.simple_word(bp))))
                )
                moved = True
        if not moved:
            cp = _first_right_factor(x)
            if st.mul(y, cp) is not None:
                v = simple_nf(st, cp)
                y_new = conjugate(y_elem, v)  # C_p^-1 y C_p
                if is_atom_nf(y_new):
                    x = conjugate(x, v)
                    y = y_new.factors[0]
                    u = W.free_reduce(
                        W.compose(u, BraidWord(n, st.simple_word(cp)))
                    )
                    moved = True
        if not moved or x.canonical_length >= length_before:
            return None

    tail = _atom_pair_walk(st, x.factors[0], y)
    if tail is None:
        return None
    u = W.free_reduce(W.compose(u, tail))
    if words_equal(st, W.conjugate(x_word, u), s1) and words_equal(
        st, W.conjugate(y_word, u), s2
    ):
        return u
    return None


def _atom_pair_walk(st: GarsideStructure, x: Simple, y: Simple) -> BraidWord | None:
    """Breadth-first search through pairs of atoms conjugated by simples,
    from (x, y) to the pair of the first two Artin letters."""
    n = st.n
    target = (st.letter_simple(1), st.letter_simple(2))
    start = (x, y)
    if start == target:
        return BraidWord.identity(n)
    proper = [s for s in st.simples() if not st.is_identity(s)]
    frontier: dict[tuple[Simple, Simple], BraidWord] = {start: BraidWord.identity(n)}
    seen = {start}
    while frontier:
        new_frontier: dict[tuple[Simple, Simple], BraidWord] = {}
        for (a, b), trail in frontier.items():
            for s in proper:
                se = simple_nf(st, s)
                a2 = conjugate(simple_nf(st, a), se)
                if not is_atom_nf(a2):
                    continue
                b2 = conjugate(simple_nf(st, b), se)
                if not is_atom_nf(b2):
                    continue
                state = (a2.factors[0], b2.factors[0])
                if state in seen:
                    continue
                seen.add(state)
                t2 = W.free_reduce(W.compose(trail, BraidWord(n, st.simple_word(s))))
                if state == target:
                    return t2
                new_frontier[state] = t2
        frontier = new_frontier
    return None
