"""Symmetric-group characters and the module decompositions they decide.

Irreducible character values come from the border-strip recursion on
beta-sets; dimensions are cross-checked against the hook length product.
Decompositions are computed purely at character level with exact integer
inner products.  The degree-6 outer automorphism is built by factorising
every permutation over two generators and mapping letterwise.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable

from .words import Permutation

Partition = tuple[int, ...]


def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, weakly decreasing, in reverse lex order."""

    def gen(n: int, maxpart: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def check_partition(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(a > b for a, b in zip(lam[1:], lam)):
        raise ValueError(f"not a partition: {lam}")
    return lam


def class_size(cycle_type: Partition) -> int:
    """Size of the conjugacy class with the given cycle type."""
    n = sum(cycle_type)
    centralizer = 1
    for length in set(cycle_type):
        m = cycle_type.count(length)
        centralizer *= length**m * math.factorial(m)
    return math.factorial(n) // centralizer


def _beta(lam: Partition) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(sorted(lam[i] + (ell - 1 - i) for i in range(ell)))


@functools.lru_cache(maxsize=None)
def _strip_value(beta: tuple[int, ...], rho: Partition) -> int:
    if not rho:
        return 1
    r = rho[0]
    total = 0
    bset = set(beta)
    for b in beta:
        if b >= r and (b - r) not in bset:
            height = sum(1 for c in beta if b - r < c < b)
            new_beta = tuple(sorted(bset - {b} | {b - r}))
            total += (-1) ** height * _strip_value(new_beta, rho[1:])
    return total


def character_value(lam: Partition, cycle_type: Partition) -> int:
    """Value of the irreducible character of ``lam`` on the class of
    ``cycle_type`` (border-strip recursion)."""
    lam = check_partition(lam)
    rho = tuple(sorted(check_partition(cycle_type), reverse=True))
    if sum(lam) != sum(rho):
        raise ValueError("partition sizes differ")
    return _strip_value(_beta(lam), rho)


def hook_dimension(lam: Partition) -> int:
    """Dimension by the hook length product."""
    lam = check_partition(lam)
    n = sum(lam)
    conj = [sum(1 for p in lam if p > i) for i in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(n) // hooks


def inner_product(chi1, chi2, n: int) -> int:
    """Exact inner product of two class functions given as callables on
    cycle types."""
    total = 0
    for rho in partitions(n):
        total += class_size(rho) * chi1(rho) * chi2(rho)
    q, r = divmod(total, math.factorial(n))
    if r:
        raise ValueError("inner product is not an integer")
    return q


def _square_type(rho: Partition) -> Partition:
    parts = []
    for c in rho:
        if c % 2:
            parts.append(c)
        else:
            parts.extend([c // 2, c // 2])
    return tuple(sorted(parts, reverse=True))


def natural_character(rho: Partition) -> int:
    """Fixed points of the class: the permutation module on n points."""
    return sum(1 for c in rho if c == 1)


def sym2_character(chi, rho: Partition) -> int:
    """(chi(g)^2 + chi(g^2)) / 2, exact."""
    value = Fraction(chi(rho) ** 2 + chi(_square_type(rho)), 2)
    if value.denominator != 1:
        raise ValueError("symmetric-square character is not integral")
    return int(value)


def decompose(target: str, n: int) -> dict[Partition, int]:
    """Irreducible multiplicities of a named character.

    Targets: ``Sym2Standard`` (symmetric square of the n-point permutation
    module), ``Sym2Vn11`` (symmetric square of the reflection module), and
    ``Wmodule`` (the trace-zero part of the symmetric square, i.e. the
    symmetric square minus the permutation module minus the trivial one).
    """
    if n < 4:
        raise ValueError("need n >= 4 for a two-row constituent (n-2, 2)")

    if target == "Sym2Standard":
        chi = lambda rho: sym2_character(natural_character, rho)
    elif target == "Sym2Vn11":
        refl = lambda rho: natural_character(rho) - 1
        chi = lambda rho: sym2_character(refl, rho)
    elif target == "Wmodule":
        chi = lambda rho: (
            sym2_character(natural_character, rho) - natural_character(rho) - 1
        )
    else:
        raise ValueError(f"unknown decomposition target {target!r}")

    out: dict[Partition, int] = {}
    for lam in partitions(n):
        mult = inner_product(chi, lambda rho: character_value(lam, rho), n)
        if mult:
            out[lam] = mult
    return out


def span_identity_holds(n: int) -> bool:
    """Exact degree-two polynomial identity behind the two-constituent span:
    (n-2)(e1-e2)e3 equals (e1-e2)(e3+...+en) + sum_{i>=4} (e1-e2)(e3-ei)."""
    if n < 4:
        raise ValueError("need n >= 4")

    def poly_mul(p1: dict[int, int], p2: dict[int, int]) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for i, a in p1.items():
            for j, b in p2.items():
                key = (min(i, j), max(i, j))
                out[key] = out.get(key, 0) + a * b
        return {k: v for k, v in out.items() if v}

    def scale(p: dict, c: int) -> dict:
        return {k: c * v for k, v in p.items() if c * v}

    def add(*ps: dict) -> dict:
        out: dict = {}
        for p in ps:
            for k, v in p.items():
                out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}

    e = lambda i: {i: 1}
    e1_minus_e2 = {1: 1, 2: -1}
    lhs = scale(poly_mul(e1_minus_e2, e(3)), n - 2)
    tail = {i: 1 for i in range(3, n + 1)}
    rhs = poly_mul(e1_minus_e2, tail)
    for i in range(4, n + 1):
        rhs = add(rhs, poly_mul(e1_minus_e2, {3: 1, i: -1}))
    return lhs == rhs


# ---------------------------------------------------------------------------
# The exceptional automorphism of the degree-6 symmetric group


@functools.lru_cache(maxsize=None)
def _nu_table() -> dict[Permutation, Permutation]:
    """Image of every degree-6 permutation under the outer automorphism
    pinned by (12) -> (12)(34)(56) and (123456) -> (123)(45).

    Built by breadth-first factorisation over the two generators; the
    generator-wise consistency check below makes the table a homomorphism.
    """
    g1 = Permutation.from_cycles(6, [(1, 2)])
    g2 = Permutation.from_cycles(6, [(1, 2, 3, 4, 5, 6)])
    h1 = Permutation.from_cycles(6, [(1, 2), (3, 4), (5, 6)])
    h2 = Permutation.from_cycles(6, [(1, 2, 3), (4, 5)])
    table = {Permutation.identity(6): Permutation.identity(6)}
    frontier = [Permutation.identity(6)]
    while frontier:
        nxt = []
        for g in frontier:
            for gen, img in ((g1, h1), (g2, h2)):
                cand = g * gen
                if cand not in table:
                    table[cand] = table[g] * img
                    nxt.append(cand)
        frontier = nxt
    if len(table) != 720:
        raise AssertionError("generators failed to generate the full group")
    for g in table:
        for gen, img in ((g1, h1), (g2, h2)):
            if table[g * gen] != table[g] * img:
                raise AssertionError("factorisation map is not a homomorphism")
    return table


def nu_map(g: Permutation) -> Permutation:
    """Apply the outer automorphism of the degree-6 symmetric group."""
    if g.degree != 6:
        raise ValueError("defined on degree-6 permutations")
    return _nu_table()[g]
