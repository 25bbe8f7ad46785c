"""The cabling map and its partial inverses.

Cabling replaces the strands of a braid on k strands by braids running inside
tubes of widths m_1, ..., m_k: interior braids are inserted at the start of
their tubes and every crossing of the outer braid expands to a block of
crossings between the two tubes involved.  Extraction recovers the tubular
and interior braids of a cabled word by strand deletion, verified by a
re-cabling round trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import words as W
from .engine import words_equal
from .garside import classical
from .words import BraidWord


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive tube widths."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(m < 1 for m in self.parts):
            raise ValueError("parts must be positive")
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def count(self) -> int:
        return len(self.parts)

    @staticmethod
    def parse(text: str) -> "Composition":
        return Composition(tuple(int(p) for p in text.split(",")))

    def format(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def block(self, i: int) -> tuple[int, ...]:
        """Strand labels of the i-th tube (1-based) at the start."""
        offset = sum(self.parts[: i - 1])
        return tuple(range(offset + 1, offset + self.parts[i - 1] + 1))


def _block_swap(offset: int, a: int, b: int) -> list[int]:
    """Positive word moving a block of width a over the next block of width b,
    starting at ``offset`` strands from the left."""
    out = []
    for i in range(a):
        for j in range(b):
            out.append(offset + a - i + j)
    return out


def cable(tubular: BraidWord, interiors: Sequence[BraidWord], comp: Composition) -> BraidWord:
    """Insert the interior braids into tubes and expand the tubular braid."""
    if tubular.strands != comp.count:
        raise ValueError("tubular strand count does not match the composition")
    if len(interiors) != comp.count:
        raise ValueError("need one interior braid per tube")
    for x, m in zip(interiors, comp.parts):
        if x.strands != m:
            raise ValueError("interior strand count does not match its tube width")
    n = comp.total
    letters: list[int] = []
    offset = 0
    for x, m in zip(interiors, comp.parts):
        letters.extend(k + (offset if k > 0 else -offset) for k in x.letters)
        offset += m
    widths = list(comp.parts)
    for k in tubular.letters:
        j = abs(k)
        offset = sum(widths[: j - 1])
        a, b = widths[j - 1], widths[j]
        if k > 0:
            letters.extend(_block_swap(offset, a, b))
        else:
            # a negative crossing is the inverse of the opposite-width swap
            letters.extend(-s for s in reversed(_block_swap(offset, b, a)))
        widths[j - 1], widths[j] = b, a
    return BraidWord(n, tuple(letters))


def mixed_membership(w: BraidWord, comp: Composition) -> bool:
    """Whether the permutation of w fixes the block-label vector of the
    composition (tubes return to their own positions, setwise)."""
    if w.strands != comp.total:
        raise ValueError("strand count does not match the composition")
    labels = []
    for i, m in enumerate(comp.parts, start=1):
        labels.extend([i] * m)
    mu = W.permutation_of(w)
    return all(labels[mu(i) - 1] == labels[i - 1] for i in range(1, w.strands + 1))


def extract(w: BraidWord, comp: Composition, which: str) -> BraidWord:
    """Recover the tubular braid (``which="tubular"``) or the i-th interior
    braid (``which="interior:i"``) of a cabled word.

    The parts are read off by strand deletion and the decomposition is
    certified by re-cabling; inputs that do not reproduce themselves are
    rejected as not tube preserving.
    """
    tubular, interiors = _split(w, comp)
    if which == "tubular":
        return tubular
    if which.startswith("interior:"):
        i = int(which.split(":", 1)[1])
        if not 1 <= i <= comp.count:
            raise ValueError("interior index out of range")
        return interiors[i - 1]
    raise ValueError(f"unknown extraction {which!r}")


def _split(w: BraidWord, comp: Composition) -> tuple[BraidWord, list[BraidWord]]:
    if w.strands != comp.total:
        raise ValueError("strand count does not match the composition")
    firsts = frozenset(comp.block(i)[0] for i in range(1, comp.count + 1))
    tubular = W._delete_strands_raw(w, firsts)
    interiors = [
        W._delete_strands_raw(w, frozenset(comp.block(i)))
        for i in range(1, comp.count + 1)
    ]
    recabled = cable(tubular, interiors, comp)
    if not words_equal(classical(w.strands), recabled, w):
        raise ValueError("not tube-preserving for this composition")
    return tubular, interiors
