"""Exact linear algebra over prime fields GF(p).

Matrices are numpy ``int64`` arrays whose entries are reduced into ``[0, p)``;
scalars are plain Python ints.  Vectors are rows, so a matrix acts on a vector
from the right (``v @ m``), which matches the right-module conventions used in
the rest of the package.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_BOUND = 2**20
# keeps every dot product of length <= 2**16 inside int64
MAX_PRIME = 2**23


class EnumerationBoundError(ValueError):
    """Raised when a brute-force enumeration would exceed the configured cap."""


def default_bound() -> int:
    env = os.environ.get("GRADALG_BOUND")
    return int(env) if env else DEFAULT_BOUND


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p); construction checks primality."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p > MAX_PRIME:
            raise ValueError(f"modulus {self.p} exceeds supported bound {MAX_PRIME}")

    def scalar(self, value: int) -> int:
        return int(value) % self.p

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(value, -1, self.p)

    def matrix(self, data, shape: tuple[int, int] | None = None) -> np.ndarray:
        return matrix(data, self.p, shape)


def matrix(data, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    m = np.array(data, dtype=np.int64)
    if shape is not None:
        m = m.reshape(shape)
    return m % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(m: np.ndarray, p: int) -> tuple[int, np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` over GF(p).

    Returns ``(rank, reduced, pivots)``; ``reduced`` keeps the shape of ``m``
    with zero rows at the bottom.
    """
    r = np.array(m, dtype=np.int64) % p
    if r.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = (r[row] * pow(int(r[row, col]), -1, p)) % p
        factors = r[:, col].copy()
        factors[row] = 0
        if factors.any():
            r = (r - np.outer(factors, r[row])) % p
        pivots.append(col)
        row += 1
    return row, r, pivots


def rank(m: np.ndarray, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return rref(m, p)[0]


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x = 0}`` with ``x`` a column vector."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return identity(cols)
    rk, red, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-red[r, f]) % p
    return basis


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : x @ a = 0}``."""
    return nullspace(np.asarray(a).T, p)


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    rk, red, _ = rref(np.hstack([m, identity(n)]), p)
    if n and not np.array_equal(red[:, :n], identity(n)):
        raise ValueError("matrix is singular")
    return red[:, n:].copy()


def is_invertible(m: np.ndarray, p: int) -> bool:
    m = np.asarray(m)
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]


@dataclass(frozen=True, eq=False)
class AffineSolution:
    particular: np.ndarray
    kernel: "Subspace"

    def contains(self, x: np.ndarray) -> bool:
        diff = (np.asarray(x, dtype=np.int64) - self.particular) % self.kernel.p
        return self.kernel.contains(diff)


def solve_all(a: np.ndarray, b: np.ndarray, p: int) -> AffineSolution | None:
    """All column solutions ``x`` of ``a @ x = b``; ``None`` when inconsistent."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    if a.shape[0] != b.shape[0]:
        raise ValueError("row count mismatch between a and b")
    cols = a.shape[1]
    kernel = Subspace.span(nullspace(a, p), cols, p)
    if a.shape[0] == 0:
        return AffineSolution(np.zeros(cols, dtype=np.int64), kernel)
    rk, red, pivots = rref(np.hstack([a, b[:, None]]), p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = red[r, cols]
    return AffineSolution(x, kernel)


def row_coords(basis: np.ndarray, vectors: np.ndarray, p: int) -> np.ndarray:
    """Solve ``X @ basis = vectors`` for ``X``; ``basis`` must have independent rows.

    Raises ``ValueError`` if some vector is outside the row space.
    """
    basis = np.asarray(basis, dtype=np.int64) % p
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64)) % p
    k = basis.shape[0]
    if k == 0:
        if vectors.any():
            raise ValueError("vector not in span of empty basis")
        return zeros(vectors.shape[0], 0)
    # rref of [basis^T | vectors^T] expresses each vector in the basis
    aug = np.hstack([basis.T, vectors.T])
    rk, red, pivots = rref(aug, p)
    if pivots[:k] != list(range(k)) or any(pc >= k for pc in pivots):
        raise ValueError("vector not in span of basis")
    return red[:k, k:].T.copy()


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of GF(p)^n stored by its RREF basis.

    Equality is structural because the RREF basis is canonical.
    """

    ambient_dim: int
    p: int
    basis: np.ndarray

    @classmethod
    def span(cls, vectors: Iterable | np.ndarray, ambient_dim: int, p: int) -> "Subspace":
        vecs = np.asarray(vectors, dtype=np.int64)
        if vecs.size == 0:
            return cls.zero(ambient_dim, p)
        vecs = vecs.reshape(-1, ambient_dim)
        rk, red, _ = rref(vecs, p)
        return cls(ambient_dim, p, red[:rk].copy())

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, p, zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, p, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row)[0]) for row in self.basis]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.p == other.p
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.p, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim or self.p != other.p:
            raise ValueError("subspaces live in different ambient spaces")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.ambient_dim, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        stacked = np.vstack([self.basis, (-other.basis) % self.p])
        rel = left_nullspace(stacked, self.p)
        if rel.shape[0] == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        return Subspace.span(
            mat_mul(rel[:, : self.dim], self.basis, self.p), self.ambient_dim, self.p
        )

    def contains(self, item) -> bool:
        if isinstance(item, Subspace):
            self._check(item)
            return all(self.contains(v) for v in item.basis)
        v = np.asarray(item, dtype=np.int64).reshape(-1) % self.p
        if not v.any():
            return True
        if self.dim == 0:
            return False
        # with an RREF basis, coordinates are the entries at the pivot columns
        coords = v[self.pivots]
        return np.array_equal(mat_mul(coords, self.basis, self.p), v)

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of ``v`` (or rows of ``v``) in the RREF basis."""
        v = np.atleast_2d(np.asarray(v, dtype=np.int64)) % self.p
        c = v[:, self.pivots]
        if not np.array_equal(mat_mul(c, self.basis, self.p), v):
            raise ValueError("vector not in subspace")
        return c

    def quotient_basis(self, sub: "Subspace") -> np.ndarray:
        """Coset representatives completing a basis of ``sub`` to one of ``self``."""
        self._check(sub)
        if not self.contains(sub):
            raise ValueError("not a subspace")
        reps = []
        current = sub
        for v in self.basis:
            if not current.contains(v):
                reps.append(v)
                current = current.sum(Subspace.span(v, self.ambient_dim, self.p))
        if not reps:
            return zeros(0, self.ambient_dim)
        return np.array(reps, dtype=np.int64)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_subspaces(d: int, p: int) -> int:
    return sum(gaussian_binomial(d, k, p) for k in range(d + 1))


def enumerate_subspaces(
    ambient_dim: int, p: int, bound: int | None = None, dims: Sequence[int] | None = None
) -> Iterator[Subspace]:
    """Yield every subspace of GF(p)^d exactly once, in canonical RREF form.

    The cap applies both to ``p**d`` and to the number of subspaces that would
    be produced, since the latter grows much faster.
    """
    bound = default_bound() if bound is None else bound
    d = ambient_dim
    if p**d > bound:
        raise EnumerationBoundError(f"p^d = {p}^{d} exceeds enumeration bound {bound}")
    wanted = range(d + 1) if dims is None else dims
    total = sum(gaussian_binomial(d, k, p) for k in wanted)
    if total > bound:
        raise EnumerationBoundError(f"{total} subspaces exceed enumeration bound {bound}")
    for k in wanted:
        for pivots in itertools.combinations(range(d), k):
            pivot_set = set(pivots)
            free = [
                (r, c)
                for r, pc in enumerate(pivots)
                for c in range(pc + 1, d)
                if c not in pivot_set
            ]
            for values in itertools.product(range(p), repeat=len(free)):
                basis = zeros(k, d)
                for r, pc in enumerate(pivots):
                    basis[r, pc] = 1
                for (r, c), val in zip(free, values):
                    basis[r, c] = val
                yield Subspace(d, p, basis)


def projective_points(dim: int, p: int) -> Iterator[np.ndarray]:
    """One nonzero vector per line of GF(p)^dim (leading coefficient 1)."""
    for lead in range(dim):
        for tail in itertools.product(range(p), repeat=dim - lead - 1):
            v = np.zeros(dim, dtype=np.int64)
            v[lead] = 1
            v[lead + 1:] = tail
            yield v


def all_vectors(dim: int, p: int) -> Iterator[np.ndarray]:
    for values in itertools.product(range(p), repeat=dim):
        yield np.array(values, dtype=np.int64)
