"""The A-coring C = AG and the comodule/graded-module dictionary.

C is the free left A-module on G.  Its GF(p)-basis is ``b_i x`` (algebra basis
element times group element) stored at index ``x * dim A + i``.  Because C is
free on G, ``C (x)_A C`` is free on G x G and ``C (x)_A C (x)_A C`` on G^3, so
all tensor products over A are concrete coordinate spaces; every element is
brought to the normal form ``a x (x) y`` by pushing scalars left with
``x a_y = a_y (xy)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import exactlin as el
from .exactlin import Subspace
from .graded import GradedAlgebra, GradedModule, ValidationReport


@dataclass(frozen=True, eq=False)
class GroupCoring:
    algebra: GradedAlgebra

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def n(self) -> int:
        return self.algebra.dim

    @property
    def order(self) -> int:
        return self.algebra.group.order

    @property
    def dim(self) -> int:
        return self.n * self.order

    def index(self, i: int, x: int) -> int:
        return x * self.n + i

    def tensor2_index(self, i: int, x: int, y: int) -> int:
        return (x * self.order + y) * self.n + i

    def tensor3_index(self, i: int, x: int, y: int, z: int) -> int:
        return ((x * self.order + y) * self.order + z) * self.n + i

    def element(self, a: np.ndarray, x: int) -> np.ndarray:
        """The element ``a x`` of C."""
        c = np.zeros(self.dim, dtype=np.int64)
        c[x * self.n:(x + 1) * self.n] = np.asarray(a) % self.p
        return c

    def grouplike(self, x: int) -> np.ndarray:
        return self.element(self.algebra.unit, x)

    def coefficient(self, c: np.ndarray, x: int) -> np.ndarray:
        """The A-coefficient of ``x`` in ``c`` (the projection C -> Ax)."""
        return np.asarray(c)[x * self.n:(x + 1) * self.n] % self.p

    @cached_property
    def left_action(self) -> tuple[np.ndarray, ...]:
        """``left_action[j]``: c -> b_j c."""
        out = []
        for j in range(self.n):
            m = el.zeros(self.dim, self.dim)
            for x in range(self.order):
                sl = slice(x * self.n, (x + 1) * self.n)
                m[sl, sl] = self.algebra.algebra.left_mult[j]
            out.append(m)
        return tuple(out)

    @cached_property
    def right_action(self) -> tuple[np.ndarray, ...]:
        """``right_action[j]``: (b_i x) b_j = (b_i b_j)(x deg b_j)."""
        g, sc = self.algebra.group, self.algebra.algebra.sc
        out = []
        for j in range(self.n):
            m = el.zeros(self.dim, self.dim)
            dj = self.algebra.degrees[j]
            for x in range(self.order):
                t = g.mul(x, dj)
                m[x * self.n:(x + 1) * self.n, t * self.n:(t + 1) * self.n] = sc[:, j, :]
            out.append(m % self.p)
        return tuple(out)

    @cached_property
    def comultiplication(self) -> np.ndarray:
        m = el.zeros(self.dim, self.n * self.order**2)
        for x in range(self.order):
            for i in range(self.n):
                m[self.index(i, x), self.tensor2_index(i, x, x)] = 1
        return m

    @cached_property
    def counit(self) -> np.ndarray:
        m = el.zeros(self.dim, self.n)
        for x in range(self.order):
            for i in range(self.n):
                m[self.index(i, x), i] = 1
        return m

    def delta(self, c: np.ndarray) -> np.ndarray:
        return el.mat_mul(np.asarray(c), self.comultiplication, self.p)

    def epsilon(self, c: np.ndarray) -> np.ndarray:
        return el.mat_mul(np.asarray(c), self.counit, self.p)

    def right_act(self, c: np.ndarray, a: np.ndarray) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        for j, coeff in enumerate(a):
            if coeff:
                out = out + int(coeff) * (c @ self.right_action[j])
        return out % self.p

    def tensor(self, c: np.ndarray, d: np.ndarray) -> np.ndarray:
        """``c (x)_A d`` in normal form: (a x) (x) (a' y) = a (x a') (x) y."""
        out = np.zeros(self.n * self.order**2, dtype=np.int64)
        for y in range(self.order):
            a_y = self.coefficient(d, y)
            if not a_y.any():
                continue
            # c . a_y pushes a_y through the group elements of c
            moved = self.right_act(c, a_y)
            for x in range(self.order):
                coeff = self.coefficient(moved, x)
                for i in np.flatnonzero(coeff):
                    out[self.tensor2_index(int(i), x, y)] += coeff[i]
        return out % self.p

    # maps out of C (x)_A C, defined on the normal-form basis a x (x) y
    def delta_left(self) -> np.ndarray:
        """(Delta (x) id): a x (x) y -> a x (x) x (x) y."""
        k = self.order
        m = el.zeros(self.n * k**2, self.n * k**3)
        for x in range(k):
            for y in range(k):
                for i in range(self.n):
                    m[self.tensor2_index(i, x, y), self.tensor3_index(i, x, x, y)] = 1
        return m

    def delta_right(self) -> np.ndarray:
        """(id (x) Delta): a x (x) y -> a x (x) y (x) y."""
        k = self.order
        m = el.zeros(self.n * k**2, self.n * k**3)
        for x in range(k):
            for y in range(k):
                for i in range(self.n):
                    m[self.tensor2_index(i, x, y), self.tensor3_index(i, x, y, y)] = 1
        return m

    def counit_left(self) -> np.ndarray:
        """(eps (x) id): a x (x) y -> a y."""
        k = self.order
        m = el.zeros(self.n * k**2, self.dim)
        for x in range(k):
            for y in range(k):
                for i in range(self.n):
                    m[self.tensor2_index(i, x, y), self.index(i, y)] = 1
        return m

    def counit_right(self) -> np.ndarray:
        """(id (x) eps): a x (x) y -> a x . 1."""
        k = self.order
        m = el.zeros(self.n * k**2, self.dim)
        for x in range(k):
            for y in range(k):
                for i in range(self.n):
                    row = self.tensor2_index(i, x, y)
                    m[row] = self.right_act(self.element(self.algebra.basis_vector(i), x), self.algebra.unit)
        return m

    def tensor2_right_action(self, j: int) -> np.ndarray:
        """(a x (x) y) b_j = a (x b_jz) (x) (y z) summed over the degree z of b_j."""
        k, g = self.order, self.algebra.group
        dj = self.algebra.degrees[j]
        sc = self.algebra.algebra.sc
        m = el.zeros(self.n * k**2, self.n * k**2)
        for x in range(k):
            for y in range(k):
                for i in range(self.n):
                    for l in np.flatnonzero(sc[i, j] % self.p):
                        m[self.tensor2_index(i, x, y), self.tensor2_index(int(l), g.mul(x, dj), g.mul(y, dj))] += sc[i, j, l]
        return m % self.p


def build_coring(a: GradedAlgebra) -> GroupCoring:
    c = GroupCoring(a)
    report = verify_coring(c)
    if not report.ok:
        raise RuntimeError(f"coring verification failed: {report.first_failure}")
    return c


def verify_coring(c: GroupCoring) -> ValidationReport:
    """Coassociativity, counitality, bimodule structure and grouplikes on all basis elements."""
    p = c.p
    report = ValidationReport()
    delta = c.comultiplication
    lhs = el.mat_mul(delta, c.delta_left(), p)
    rhs = el.mat_mul(delta, c.delta_right(), p)
    report.add("coassociativity", _first_bad_row(lhs, rhs))
    eye = el.identity(c.dim)
    report.add("counit_left", _first_bad_row(el.mat_mul(delta, c.counit_left(), p), eye))
    report.add("counit_right", _first_bad_row(el.mat_mul(delta, c.counit_right(), p), eye))
    # C is an A-bimodule: right action is a representation and commutes with the left one
    alg = c.algebra.algebra
    bad = None
    for i in range(c.n):
        for j in range(c.n):
            prod = el.mat_mul(c.right_action[i], c.right_action[j], p)
            expected = sum(int(alg.sc[i, j, k]) * c.right_action[k] for k in range(c.n)) % p
            if not np.array_equal(prod, expected):
                bad = bad or (i, j)
            if not np.array_equal(el.mat_mul(c.left_action[i], c.right_action[j], p),
                                  el.mat_mul(c.right_action[j], c.left_action[i], p)):
                bad = bad or (i, j)
    report.add("bimodule", bad)
    bad = None
    for j in range(c.n):
        if not np.array_equal(el.mat_mul(c.right_action[j], delta, p),
                              el.mat_mul(delta, c.tensor2_right_action(j), p)):
            bad = bad or ("delta", j)
        if not np.array_equal(el.mat_mul(c.right_action[j], c.counit, p),
                              el.mat_mul(c.counit, alg.right_mult[j], p)):
            bad = bad or ("epsilon", j)
    report.add("structure_maps_right_linear", bad)
    bad = next((x for x in c.algebra.group.elements if not check_grouplike(c, c.grouplike(x))), None)
    report.add("grouplikes", None if bad is None else (bad,))
    return report


def _first_bad_row(a: np.ndarray, b: np.ndarray) -> tuple | None:
    rows = np.flatnonzero((a != b).any(axis=1))
    return (int(rows[0]),) if rows.size else None


def check_grouplike(c: GroupCoring, g: np.ndarray) -> bool:
    g = np.asarray(g, dtype=np.int64) % c.p
    return bool(
        np.array_equal(c.epsilon(g), c.algebra.unit % c.p)
        and np.array_equal(c.delta(g), c.tensor(g, g))
    )


@dataclass(frozen=True, eq=False)
class Comodule:
    """A right C-comodule: a right A-module with coaction ``rho: M -> M (x)_A C``.

    ``M (x)_A C`` is identified with ``M^G``; ``m (x) x`` sits at ``x * dim + r``.
    """

    algebra: GradedAlgebra
    acts: tuple[np.ndarray, ...]
    rho: np.ndarray

    @property
    def dim(self) -> int:
        return self.rho.shape[0]

    @property
    def p(self) -> int:
        return self.algebra.p

    def tensor_with(self, x: int) -> np.ndarray:
        """m -> m (x) x."""
        k = self.algebra.group.order
        m = el.zeros(self.dim, self.dim * k)
        m[:, x * self.dim:(x + 1) * self.dim] = el.identity(self.dim)
        return m

    def tensor_right_action(self, j: int) -> np.ndarray:
        """(m (x) x) b_j = m b_j (x) x deg(b_j)."""
        g = self.algebra.group
        dj = self.algebra.degrees[j]
        m = el.zeros(self.dim * g.order, self.dim * g.order)
        for x in g.elements:
            t = g.mul(x, dj)
            m[x * self.dim:(x + 1) * self.dim, t * self.dim:(t + 1) * self.dim] = self.acts[j]
        return m

    def axiom_report(self) -> ValidationReport:
        p, g = self.p, self.algebra.group
        k = g.order
        report = ValidationReport()
        bad = next((j for j in range(self.algebra.dim)
                    if not np.array_equal(el.mat_mul(self.acts[j], self.rho, p),
                                          el.mat_mul(self.rho, self.tensor_right_action(j), p))), None)
        report.add("coaction_right_linear", None if bad is None else (bad,))
        # (rho (x) id) rho = (id (x) Delta) rho in M^{G x G}
        rho_id = el.zeros(self.dim * k, self.dim * k * k)
        id_delta = el.zeros(self.dim * k, self.dim * k * k)
        for x in g.elements:
            blk = self.rho  # rows: m, cols: (y, r)
            for y in g.elements:
                rho_id[x * self.dim:(x + 1) * self.dim, (y * k + x) * self.dim:(y * k + x + 1) * self.dim] = \
                    blk[:, y * self.dim:(y + 1) * self.dim]
            id_delta[x * self.dim:(x + 1) * self.dim, (x * k + x) * self.dim:(x * k + x + 1) * self.dim] = \
                el.identity(self.dim)
        lhs = el.mat_mul(self.rho, rho_id, p)
        rhs = el.mat_mul(self.rho, id_delta, p)
        report.add("coassociative_coaction", _first_bad_row(lhs, rhs))
        counit = np.vstack([el.identity(self.dim)] * k) if self.dim else el.zeros(0, 0)
        report.add("counital_coaction", _first_bad_row(el.mat_mul(self.rho, counit, p), el.identity(self.dim)))
        return report


def coaction_of(m: GradedModule) -> np.ndarray:
    """rho(m_r) = m_r (x) deg(r)."""
    k = m.group.order
    rho = el.zeros(m.dim, m.dim * k)
    for r, d in enumerate(m.degrees):
        rho[r, d * m.dim + r] = 1
    return rho


def comodule_of(m: GradedModule) -> Comodule:
    return Comodule(m.algebra, m.acts, coaction_of(m))


def cov_component(c: Comodule | GradedModule, x: int) -> Subspace:
    """{m : rho(m) = m (x) x}, computed as a kernel."""
    if isinstance(c, GradedModule):
        c = comodule_of(c)
    diff = (c.rho - c.tensor_with(x)) % c.p
    return Subspace.span(el.left_nullspace(diff, c.p), c.dim, c.p)


def graded_from_comodule(c: Comodule) -> tuple[GradedModule, np.ndarray]:
    """Recover the grading M_x = M^{cov(x)}; returns the module and the change of basis.

    The new basis is the concatenation of the cov-component bases; the
    returned matrix has those basis vectors as rows.
    """
    g, p = c.algebra.group, c.p
    comps = [cov_component(c, x) for x in g.elements]
    rows = [v for s in comps for v in s.basis]
    degrees = [x for x, s in zip(g.elements, comps) for _ in range(s.dim)]
    basis = np.array(rows, dtype=np.int64).reshape(len(rows), c.dim)
    if basis.shape[0] != c.dim or el.rank(basis, p) != c.dim:
        raise ValueError("cov components do not decompose the comodule")
    inv = el.inverse(basis, p)
    acts = tuple(el.mat_mul(el.mat_mul(basis, a, p), inv, p) for a in c.acts)
    return GradedModule(c.algebra, tuple(degrees), acts), basis
