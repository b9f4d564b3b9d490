"""Finite-dimensional associative algebras over GF(p) and their right modules.

An algebra is a structure-constant tensor ``sc`` with ``b_i * b_j = sum_k
sc[i, j, k] b_k``.  A right module stores, for every algebra basis element
``b_i``, the matrix ``acts[i]`` with ``m . b_i = m @ acts[i]``.  With row
vectors this makes ``b_i -> acts[i]`` multiplicative:
``acts[i] @ acts[j] == sum_k sc[i, j, k] acts[k]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import exactlin as el
from .exactlin import Subspace


class ModuleAxiomError(ValueError):
    """A module (or algebra) fails an axiom; ``witness`` names the offending indices."""

    def __init__(self, message: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Algebra:
    p: int
    sc: np.ndarray
    unit: np.ndarray

    def __post_init__(self) -> None:
        el.PrimeField(self.p)
        n = self.sc.shape[0]
        if self.sc.shape != (n, n, n) or self.unit.shape != (n,):
            raise ValueError("structure constants must be n x n x n with a length-n unit")

    @property
    def dim(self) -> int:
        return self.sc.shape[0]

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", u, v, self.sc) % self.p

    @cached_property
    def right_mult(self) -> tuple[np.ndarray, ...]:
        """``right_mult[j]``: v -> v * b_j."""
        return tuple(self.sc[:, j, :] % self.p for j in range(self.dim))

    @cached_property
    def left_mult(self) -> tuple[np.ndarray, ...]:
        """``left_mult[i]``: v -> b_i * v."""
        return tuple(self.sc[i, :, :] % self.p for i in range(self.dim))

    def right_mult_by(self, v: np.ndarray) -> np.ndarray:
        return np.einsum("j,ijk->ik", v, self.sc) % self.p

    def left_mult_by(self, v: np.ndarray) -> np.ndarray:
        return np.einsum("i,ijk->jk", v, self.sc) % self.p

    def associativity_witness(self) -> tuple[int, int, int] | None:
        # (b_i b_j) b_k vs b_i (b_j b_k), all triples at once
        lhs = np.einsum("ijm,mkl->ijkl", self.sc, self.sc) % self.p
        rhs = np.einsum("jkm,iml->ijkl", self.sc, self.sc) % self.p
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return tuple(int(t) for t in bad[0][:3])
        return None

    def unit_witness(self) -> tuple[str, int] | None:
        for i in range(self.dim):
            b = self.basis_vector(i)
            if not np.array_equal(self.mul(self.unit, b), b):
                return ("left", i)
            if not np.array_equal(self.mul(b, self.unit), b):
                return ("right", i)
        return None

    def subalgebra(self, indices: Sequence[int]) -> "Algebra":
        """Restrict to the span of the given basis elements (must be closed)."""
        idx = list(indices)
        sub = self.sc[np.ix_(idx, idx, idx)]
        full = self.sc[np.ix_(idx, idx)]
        if (np.delete(full, idx, axis=2) % self.p).any():
            raise ModuleAxiomError("basis subset is not closed under multiplication")
        return Algebra(self.p, sub.copy(), self.unit[idx].copy())

    def regular_module(self) -> "RModule":
        return RModule(self, self.right_mult)

    def is_subalgebra_ideal(self, space: Subspace) -> bool:
        return all(
            space.contains(self.mul(v, self.basis_vector(i)))
            and space.contains(self.mul(self.basis_vector(i), v))
            for v in space.basis
            for i in range(self.dim)
        )


@dataclass(frozen=True, eq=False)
class RModule:
    """A finite-dimensional right module over an :class:`Algebra`."""

    algebra: Algebra
    acts: tuple[np.ndarray, ...]
    dim: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.dim < 0:
            dim = self.acts[0].shape[0] if self.acts else 0
            object.__setattr__(self, "dim", dim)
        if len(self.acts) != self.algebra.dim:
            raise ValueError("need one action matrix per algebra basis element")
        acts = tuple(np.asarray(a, dtype=np.int64).reshape(self.dim, self.dim) % self.p for a in self.acts)
        object.__setattr__(self, "acts", acts)

    @property
    def p(self) -> int:
        return self.algebra.p

    @classmethod
    def zero(cls, algebra: Algebra) -> "RModule":
        return cls(algebra, tuple(el.zeros(0, 0) for _ in range(algebra.dim)), 0)

    def act_by(self, v: np.ndarray) -> np.ndarray:
        out = el.zeros(self.dim, self.dim)
        for c, a in zip(v, self.acts):
            if c:
                out = out + int(c) * a
        return out % self.p

    def axiom_witness(self) -> tuple | None:
        p = self.p
        if not np.array_equal(self.act_by(self.algebra.unit), el.identity(self.dim)):
            return ("unit",)
        if self.dim == 0:
            return None
        stacked = np.array(self.acts)
        expected = np.einsum("ijk,kab->ijab", self.algebra.sc, stacked) % p
        got = np.einsum("iab,jbc->ijac", stacked, stacked) % p
        bad = np.argwhere(expected != got)
        if bad.size:
            return ("assoc", int(bad[0][0]), int(bad[0][1]))
        return None

    def check(self) -> None:
        w = self.axiom_witness()
        if w is not None:
            raise ModuleAxiomError(f"module axiom fails: {w}", w)

    def is_submodule(self, space: Subspace) -> bool:
        return all(space.contains(row)
                   for a in self.acts for row in el.mat_mul(space.basis, a, self.p))

    def closure(self, vectors) -> Subspace:
        """Smallest submodule containing ``vectors``."""
        return invariant_closure(self.acts, vectors, self.dim, self.p)

    def submodule(self, space: Subspace) -> "RModule":
        basis = space.basis
        acts = tuple(space.coords(el.mat_mul(basis, a, self.p)) if space.dim else el.zeros(0, 0)
                     for a in self.acts)
        return RModule(self.algebra, acts, space.dim)

    def quotient(self, space: Subspace) -> tuple["RModule", np.ndarray]:
        """Quotient by a submodule; returns the module and the projection matrix."""
        if not self.is_submodule(space):
            raise ModuleAxiomError("subspace is not closed under the action")
        full = Subspace.full(self.dim, self.p)
        reps = full.quotient_basis(space)
        q = reps.shape[0]
        change = el.inverse(np.vstack([reps, space.basis]), self.p) if self.dim else el.zeros(0, 0)
        proj = change[:, :q]
        acts = tuple(el.mat_mul(el.mat_mul(reps, a, self.p), proj, self.p) for a in self.acts)
        return RModule(self.algebra, acts, q), proj

    def submodules(self, bound: int | None = None) -> list[Subspace]:
        return invariant_subspaces(self.acts, self.dim, self.p, bound)

    def maximal_submodules(self, bound: int | None = None) -> list[Subspace]:
        """Annihilators of the simple submodules of the dual module."""
        dual_ops = [a.T for a in self.acts]
        out = []
        for s in minimal_invariant_subspaces(dual_ops, self.dim, self.p, bound):
            out.append(Subspace.span(el.nullspace(s.basis, self.p), self.dim, self.p))
        return sorted(out, key=lambda s: (s.dim, s.basis.reshape(-1).tolist()))

    def direct_sum(self, other: "RModule") -> "RModule":
        acts = tuple(_block_diag(a, b) for a, b in zip(self.acts, other.acts))
        return RModule(self.algebra, acts, self.dim + other.dim)


def invariant_closure(ops: Sequence[np.ndarray], vectors, dim: int, p: int) -> Subspace:
    """Smallest subspace containing ``vectors`` and stable under every ``v -> v @ op``.

    Spinning: only images of newly added vectors are reduced against the
    current (fully reduced) echelon basis.
    """
    span = Subspace.span(vectors, dim, p)
    basis, piv = span.basis, span.pivots
    frontier = basis
    while frontier.shape[0] and len(piv) < dim:
        images = np.vstack([frontier @ op for op in ops]) % p
        if piv:
            images = (images - images[:, piv] @ basis) % p
        images = images[images.any(axis=1)]
        if not images.shape[0]:
            break
        rk, fresh, fpiv = el.rref(images, p)
        fresh = fresh[:rk]
        # fresh has zeros in the old pivot columns; clear its pivots from the old rows
        basis = (basis - basis[:, fpiv] @ fresh) % p
        order = np.argsort(piv + fpiv, kind="stable")
        basis = np.vstack([basis, fresh])[order]
        piv = sorted(piv + fpiv)
        frontier = fresh
    return Subspace(dim, p, basis)


def invariant_subspaces(ops: Sequence[np.ndarray], dim: int, p: int, bound: int | None = None) -> list[Subspace]:
    """Every subspace stable under ``ops``, sorted by (dim, basis).

    Each is a sum of cyclic ones, so the lattice is grown from the closures of
    single vectors.  Costs ``p**dim`` closures; the lattice size is capped too.
    """
    bound = el.default_bound() if bound is None else bound
    if p**dim > bound:
        raise el.EnumerationBoundError(f"p^d = {p}^{dim} exceeds enumeration bound {bound}")
    cyclic = list({invariant_closure(ops, v, dim, p) for v in el.projective_points(dim, p)})
    zero = Subspace.zero(dim, p)
    seen = {zero, *cyclic}
    frontier = list(seen)
    while frontier:
        new = []
        for s in frontier:
            for c in cyclic:
                t = s.sum(c)
                if t not in seen:
                    seen.add(t)
                    new.append(t)
        if len(seen) > bound:
            raise el.EnumerationBoundError(f"more than {bound} invariant subspaces")
        frontier = new
    return sorted(seen, key=lambda s: (s.dim, s.basis.reshape(-1).tolist()))


def minimal_invariant_subspaces(ops: Sequence[np.ndarray], dim: int, p: int,
                                bound: int | None = None) -> list[Subspace]:
    """The nonzero invariant subspaces with no nonzero invariant proper subspace.

    These are exactly the minimal members among the cyclic ones.
    """
    bound = el.default_bound() if bound is None else bound
    if p**dim > bound:
        raise el.EnumerationBoundError(f"p^d = {p}^{dim} exceeds enumeration bound {bound}")
    cyclic = sorted({invariant_closure(ops, v, dim, p) for v in el.projective_points(dim, p)},
                    key=lambda s: s.dim)
    minimal: list[Subspace] = []
    for c in cyclic:
        if not any(m.dim < c.dim and c.contains(m) for m in minimal):
            minimal.append(c)
    return minimal


def maximal_proper(subs: Sequence[Subspace], dim: int) -> list[Subspace]:
    proper = [s for s in subs if s.dim < dim]
    return [s for s in proper if not any(t.dim > s.dim and t.contains(s) for t in proper)]


def _block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = el.zeros(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out


def intertwiners(
    src_acts: Sequence[np.ndarray],
    tgt_acts: Sequence[np.ndarray],
    p: int,
    src_dim: int,
    tgt_dim: int,
    mask: np.ndarray | None = None,
) -> list[np.ndarray]:
    """Basis of matrices ``F`` (src_dim x tgt_dim) with ``S_k F = F T_k`` for all k.

    ``mask`` restricts which entries of ``F`` may be nonzero.  Row-major
    vectorisation gives ``vec(S F) = (S kron I) vec(F)`` and
    ``vec(F T) = (I kron T^T) vec(F)``.
    """
    m, n = src_dim, tgt_dim
    if m == 0 or n == 0:
        return []
    if mask is None:
        mask = np.ones((m, n), dtype=bool)
    free = np.flatnonzero(mask.reshape(-1))
    if free.size == 0:
        return []
    blocks = []
    for s, t in zip(src_acts, tgt_acts):
        eq = np.kron(s, el.identity(n)) - np.kron(el.identity(m), np.asarray(t).T)
        blocks.append(eq[:, free] % p)
    system = np.vstack(blocks) if blocks else el.zeros(0, free.size)
    kernel = el.nullspace(system, p)
    out = []
    for row in kernel:
        f = np.zeros(m * n, dtype=np.int64)
        f[free] = row
        out.append(f.reshape(m, n))
    return out


def module_hom(u: RModule, v: RModule) -> list[np.ndarray]:
    if u.algebra is not v.algebra and not (
        u.algebra.p == v.algebra.p and np.array_equal(u.algebra.sc, v.algebra.sc)
    ):
        raise ValueError("modules over different algebras")
    return intertwiners(u.acts, v.acts, u.p, u.dim, v.dim)


def flatten(maps: Iterable[np.ndarray]) -> np.ndarray:
    maps = list(maps)
    if not maps:
        return el.zeros(0, 0)
    return np.array([m.reshape(-1) for m in maps], dtype=np.int64)
