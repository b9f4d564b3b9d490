"""Hom spaces between graded modules and between A_e-modules, and isomorphism search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from . import exactlin as el
from .algebra import RModule, flatten, intertwiners, module_hom
from .graded import GradedAlgebra, GradedMap, GradedModule

Module = Union[GradedModule, RModule]
Verdict = Literal["yes", "no", "inconclusive"]

DEFAULT_TRIALS = 2000


@dataclass(frozen=True, eq=False)
class HomSpace:
    """A basis of a Hom space, each element a matrix acting on row vectors."""

    source: Module
    target: Module
    basis: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def p(self) -> int:
        return self.source.p

    def element(self, coeffs) -> np.ndarray:
        out = el.zeros(self.source.dim, self.target.dim)
        for c, b in zip(coeffs, self.basis):
            out = out + int(c) * b
        return out % self.p

    def coords(self, f: np.ndarray) -> np.ndarray:
        """Coordinates of a member of the space in :attr:`basis`."""
        if self.dim == 0:
            if np.asarray(f).any():
                raise ValueError("map is not in the (zero) Hom space")
            return np.zeros(0, dtype=np.int64)
        return el.row_coords(flatten(self.basis), np.asarray(f).reshape(1, -1), self.p)[0]

    def graded_maps(self) -> list[GradedMap]:
        return [GradedMap(self.source, self.target, b) for b in self.basis]


def graded_hom(m: GradedModule, n: GradedModule) -> HomSpace:
    """All degree-preserving A-linear maps ``m -> n``."""
    if m.algebra is not n.algebra:
        raise ValueError("graded_hom between modules over different algebras")
    mask = np.equal.outer(np.array(m.degrees, dtype=np.int64), np.array(n.degrees, dtype=np.int64))
    basis = intertwiners(m.acts, n.acts, m.p, m.dim, n.dim, mask if m.dim and n.dim else None)
    return HomSpace(m, n, tuple(basis))


def ae_hom(u: RModule, v: RModule) -> HomSpace:
    return HomSpace(u, v, tuple(module_hom(u, v)))


def ae_module(a: GradedAlgebra, acts) -> RModule:
    return RModule(a.ae, tuple(acts))


def restrict_to_ae(m: GradedModule, x: int) -> RModule:
    """The component M_x as a right A_e-module."""
    idx = m.component(x)
    acts = tuple(m.acts[i][np.ix_(idx, idx)] for i in m.algebra.ae_indices)
    return RModule(m.algebra.ae, acts, len(idx))


def regular_ae(a: GradedAlgebra) -> RModule:
    return a.ae.regular_module()


@dataclass(frozen=True, eq=False)
class IsoResult:
    verdict: Verdict
    certificate: np.ndarray | None = None

    def __bool__(self) -> bool:
        return self.verdict == "yes"


def _shape_key(m: Module):
    if isinstance(m, GradedModule):
        return m.deg_dims
    return m.dim


def is_isomorphic(
    m: Module,
    n: Module,
    bound: int | None = None,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> IsoResult:
    """Search Hom(m, n) for an invertible element.

    Exhaustive when ``p ** dim Hom`` is within ``bound``; otherwise random
    combinations are tried and ``"inconclusive"`` is returned if none works.
    """
    if type(m) is not type(n) or _shape_key(m) != _shape_key(n):
        return IsoResult("no")
    if m.dim == 0:
        return IsoResult("yes", el.zeros(0, 0))
    hom = graded_hom(m, n) if isinstance(m, GradedModule) else ae_hom(m, n)
    p, k = m.p, hom.dim
    if k == 0:
        return IsoResult("no")
    bound = el.default_bound() if bound is None else bound
    # basis elements first: often one of them is already invertible
    for b in hom.basis:
        if el.is_invertible(b, p):
            return IsoResult("yes", b)
    if p**k <= bound:
        for coeffs in itertools.product(range(p), repeat=k):
            f = hom.element(coeffs)
            if el.is_invertible(f, p):
                return IsoResult("yes", f)
        return IsoResult("no")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = hom.element(rng.integers(0, p, size=k))
        if el.is_invertible(f, p):
            return IsoResult("yes", f)
    return IsoResult("inconclusive")
