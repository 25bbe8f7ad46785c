"""Braid words, permutations and the elementary homomorphisms between them.

A braid on n strands is a word in the Artin generators, stored as a sequence
of nonzero integers: the letter k > 0 is the generator crossing strands k and
k+1 positively, and -k is its inverse.  The empty word is the identity.

Permutations compose left to right along a word: the image of a word is the
product of the transpositions of its letters, applied in reading order.  This
convention makes strand tracking (deletion, linking numbers) a single pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n}, stored as the tuple of images.

    ``images[i - 1]`` is the image of i.  Products compose left to right:
    ``(p * q)(i) == q(p(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)([cycle[0]])):
                images[a - 1] = b
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            images[v - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            v = self(start)
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self(v)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles(include_fixed=True)]
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_even(self) -> bool:
        return self.sign() == 1

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    @staticmethod
    def parse(text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``(1 2)(3 4 5)``; ``()`` is the identity."""
        text = text.strip()
        if text in ("", "()"):
            return Permutation.identity(degree)
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for part in text[1:-1].split(")("):
            entries = part.replace(",", " ").split()
            cycle = [int(e) for e in entries]
            if any(not 1 <= e <= degree for e in cycle):
                raise ValueError(f"cycle entry out of range in {text!r}")
            cycles.append(cycle)
        return Permutation.from_cycles(degree, cycles)


@dataclass(frozen=True)
class BraidWord:
    """A braid group element given as a word in the Artin generators."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(
                    f"letter {k} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @staticmethod
    def identity(n: int) -> "BraidWord":
        return BraidWord(n, ())

    @staticmethod
    def parse(text: str) -> "BraidWord":
        """Parse the text form ``B<n>: k1 k2 ...`` (identity: ``B<n>:``)."""
        head, sep, body = text.partition(":")
        head = head.strip()
        if not sep or not head.startswith("B"):
            raise ValueError(f"bad braid word: {text!r}")
        try:
            n = int(head[1:])
        except ValueError:
            raise ValueError(f"bad strand count in {text!r}") from None
        letters = tuple(int(tok) for tok in body.split())
        return BraidWord(n, letters)

    def format(self) -> str:
        if not self.letters:
            return f"B{self.strands}:"
        return f"B{self.strands}: " + " ".join(str(k) for k in self.letters)

    def __str__(self) -> str:
        return self.format()


# ---------------------------------------------------------------------------
# Word algebra


def compose(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("need at least one word")
    n = words[0].strands
    if any(w.strands != n for w in words):
        raise ValueError("strand-count mismatch")
    letters: list[int] = []
    for w in words:
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-k for k in reversed(w.letters)))


def conjugate(a: BraidWord, b: BraidWord) -> BraidWord:
    """The conjugate a^b = b^-1 a b."""
    return compose(inverse(b), a, b)


def power(w: BraidWord, k: int) -> BraidWord:
    base = w if k >= 0 else inverse(w)
    return BraidWord(w.strands, base.letters * abs(k))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs; a cheap normalisation of long words."""
    out: list[int] = []
    for k in w.letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return BraidWord(w.strands, tuple(out))


def exponent_sum(w: BraidWord) -> int:
    """Image under the homomorphism to the integers sending every generator to 1."""
    return sum(1 if k > 0 else -1 for k in w.letters)


def permutation_of(w: BraidWord) -> Permutation:
    """Image in the symmetric group; letters act left to right on positions."""
    images = list(range(1, w.strands + 1))
    for k in w.letters:
        i = abs(k) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    # images[] now lists which strand sits at each final position; the
    # permutation maps a starting position to its final position.
    final = [0] * w.strands
    for pos, strand in enumerate(images, start=1):
        final[strand - 1] = pos
    return Permutation(tuple(final))


# ---------------------------------------------------------------------------
# Named elements


def delta(n: int) -> BraidWord:
    """The positive half twist on n strands."""
    letters = []
    for i in range(1, n):
        letters.extend(range(1, n - i + 1))
    return BraidWord(n, tuple(letters))


def band_generator(i: int, j: int, n: int) -> BraidWord:
    """The band crossing strands i and j in front of the intermediate strands."""
    i, j = min(i, j), max(i, j)
    if not (1 <= i < j <= n):
        raise ValueError(f"band generator ({i},{j}) needs 1 <= i < j <= {n}")
    down = list(range(j - 1, i - 1, -1))  # j-1, ..., i+1, i
    up = [-k for k in range(i + 1, j)]  # -(i+1), ..., -(j-1)
    return BraidWord(n, tuple(down + up))


def named_element(tag: str, n: int, i: int | None = None, j: int | None = None) -> BraidWord:
    """Distinguished elements used throughout the toolkit.

    Tags: ``Delta``, ``BandGen`` (with i, j), and the letters
    ``u, v, w, c, d, t, tau``.
    """
    if tag == "Delta":
        return delta(n)
    if tag == "BandGen":
        if i is None or j is None:
            raise ValueError("BandGen needs indices i, j")
        return band_generator(i, j, n)
    if tag == "u":
        _need(n, 3, tag)
        return BraidWord(n, (2, -1))
    if tag == "t":
        _need(n, 3, tag)
        return BraidWord(n, (-1, 2))
    if tag == "v":
        _need(n, 3, tag)
        return BraidWord(n, (1, 2, -1, -1))
    if tag == "c":
        _need(n, 4, tag)
        return BraidWord(n, (3, -1))
    if tag == "w":
        _need(n, 4, tag)
        return BraidWord(n, (2, 3, -1, -2))
    if tag == "d":
        if n != 4:
            raise ValueError("d is a 4-strand element")
        from . import cabling

        return cabling.cable(
            BraidWord(2, (-1,)),
            [BraidWord(2, (1, 1)), BraidWord(2, (1, 1))],
            cabling.Composition((2, 2)),
        )
    if tag == "tau":
        _need(n, 4, tag)
        from . import cabling

        m = n - 2
        return cabling.cable(
            BraidWord.identity(2),
            [power(BraidWord(2, (1,)), m * (m - 1)), power(delta(m), -2)],
            cabling.Composition((2, m)),
        )
    raise ValueError(f"unknown element tag {tag!r}")


def _need(n: int, minimum: int, tag: str):
    if n < minimum:
        raise ValueError(f"element {tag} needs at least {minimum} strands")


# ---------------------------------------------------------------------------
# Automorphisms


@dataclass(frozen=True)
class AutomorphismSpec:
    """A composite of sign flips and inner automorphisms, applied right to left.

    Each step is either the string ``"Lambda"`` (negate every letter) or a
    BraidWord g denoting the inner automorphism x -> g x g^-1.
    """

    steps: tuple[object, ...]

    @staticmethod
    def lambda_() -> "AutomorphismSpec":
        return AutomorphismSpec(("Lambda",))

    @staticmethod
    def inner(g: BraidWord) -> "AutomorphismSpec":
        return AutomorphismSpec((g,))

    @staticmethod
    def sigma_tilde(i: int, n: int) -> "AutomorphismSpec":
        return AutomorphismSpec.inner(BraidWord(n, (i,)))

    @staticmethod
    def delta_tilde(n: int) -> "AutomorphismSpec":
        return AutomorphismSpec.inner(delta(n))

    @staticmethod
    def phi(n: int = 4) -> "AutomorphismSpec":
        """The composite Lambda . sigma~1 . sigma~3 . Delta~ on four strands."""
        if n != 4:
            raise ValueError("phi is defined on 4 strands")
        return (
            AutomorphismSpec.lambda_()
            * AutomorphismSpec.sigma_tilde(1, n)
            * AutomorphismSpec.sigma_tilde(3, n)
            * AutomorphismSpec.delta_tilde(n)
        )

    def __mul__(self, other: "AutomorphismSpec") -> "AutomorphismSpec":
        return AutomorphismSpec(self.steps + other.steps)


def apply_automorphism(spec: AutomorphismSpec, w: BraidWord) -> BraidWord:
    """Apply the composite to w; steps act right to left."""
    out = w
    for step in reversed(spec.steps):
        if step == "Lambda":
            out = BraidWord(out.strands, tuple(-k for k in out.letters))
        else:
            g = step
            if g.strands != out.strands:
                raise ValueError("inner automorphism strand mismatch")
            out = compose(g, out, inverse(g))
    return out


# ---------------------------------------------------------------------------
# Projection and strand deletion


def project_to_b3(w: BraidWord) -> BraidWord:
    """The quotient map on four strands identifying the two outer generators."""
    if w.strands != 4:
        raise ValueError("projection is defined on 4 strands")
    table = {1: 1, 3: 1, 2: 2}
    letters = tuple(
        (1 if k > 0 else -1) * table[abs(k)] for k in w.letters
    )
    return free_reduce(BraidWord(3, letters))


def _delete_strands_raw(w: BraidWord, keep: frozenset[int]) -> BraidWord:
    """Delete the strands outside ``keep``, tracking positions through the word.

    Purely positional; callers are responsible for the result being meaningful.
    """
    n = w.strands
    arrangement = list(range(1, n + 1))  # strand label at each position
    kept_letters: list[int] = []
    for k in w.letters:
        pos = abs(k)  # crossing at positions pos, pos+1
        a, b = arrangement[pos - 1], arrangement[pos]
        if a in keep and b in keep:
            reduced_pos = sum(1 for s in arrangement[: pos - 1] if s in keep) + 1
            kept_letters.append(reduced_pos if k > 0 else -reduced_pos)
        arrangement[pos - 1], arrangement[pos] = b, a
    return BraidWord(len(keep), tuple(kept_letters))


def delete_strands(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """The braid on the kept strands; requires the kept set to be preserved
    by the permutation of w."""
    keep_set = frozenset(keep)
    if not keep_set <= set(range(1, w.strands + 1)):
        raise ValueError("keep set out of range")
    mu = permutation_of(w)
    if {mu(i) for i in keep_set} != keep_set:
        raise ValueError("keep set is not invariant under the braid permutation")
    return _delete_strands_raw(w, keep_set)
