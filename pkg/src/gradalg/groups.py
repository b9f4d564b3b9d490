"""Finite groups given by multiplication tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence


class GroupAxiomError(ValueError):
    """A multiplication table that fails a group axiom."""


class NotAssociative(GroupAxiomError):
    def __init__(self, x: int, y: int, z: int):
        self.witness = (x, y, z)
        super().__init__(f"NotAssociative: (x*y)*z != x*(y*z) for (x, y, z) = {self.witness}")


class NoNeutral(GroupAxiomError):
    def __init__(self):
        super().__init__("NoNeutral: no two-sided identity element")


class NoInverse(GroupAxiomError):
    def __init__(self, x: int):
        self.witness = (x,)
        super().__init__(f"NoInverse: element {x} has no two-sided inverse")


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on the elements ``0..n-1``.

    Use :func:`make_group` to construct one; it validates the table.
    """

    table: tuple[tuple[int, ...], ...]
    neutral_element: int
    inv: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.order:
                raise IndexError(f"group element {x} out of range 0..{self.order - 1}")

    def mul(self, x: int, y: int) -> int:
        self._check(x, y)
        return self.table[x][y]

    def inverse(self, x: int) -> int:
        self._check(x)
        return self.inv[x]

    def neutral(self) -> int:
        return self.neutral_element

    def ldiv(self, x: int, y: int) -> int:
        """x^{-1} y"""
        return self.mul(self.inverse(x), y)

    def rdiv(self, x: int, y: int) -> int:
        """x y^{-1}"""
        return self.mul(x, self.inverse(y))


def make_group(table: Sequence[Sequence[int]]) -> FiniteGroup:
    n = len(table)
    if n == 0:
        raise GroupAxiomError("empty table")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    for row in rows:
        if len(row) != n:
            raise GroupAxiomError("table is not square")
        for v in row:
            if not 0 <= v < n:
                raise GroupAxiomError(f"entry {v} is not an element index")
    for x, y, z in itertools.product(range(n), repeat=3):
        if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
            raise NotAssociative(x, y, z)
    neutral = next(
        (e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))),
        None,
    )
    if neutral is None:
        raise NoNeutral()
    inv = []
    for x in range(n):
        y = next((y for y in range(n) if rows[x][y] == neutral and rows[y][x] == neutral), None)
        if y is None:
            raise NoInverse(x)
        inv.append(y)
    return FiniteGroup(rows, neutral, tuple(inv))


def cyclic_group(n: int) -> FiniteGroup:
    return make_group([[(i + j) % n for j in range(n)] for i in range(n)])


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


S3_ELEMENTS = tuple(itertools.permutations(range(3)))


def symmetric_group_s3() -> FiniteGroup:
    """S3 on permutations of {0,1,2} in lexicographic order; index 0 is the identity.

    The product ``x*y`` is the permutation ``i -> x[y[i]]``.
    """
    index = {perm: k for k, perm in enumerate(S3_ELEMENTS)}
    table = [
        [index[tuple(x[y[i]] for i in range(3))] for y in S3_ELEMENTS] for x in S3_ELEMENTS
    ]
    return make_group(table)
