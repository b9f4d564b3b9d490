"""The coinduction functor Coind_x and the adjunction (-)_x -| Coind_x.

``Coind_x(N)_y = Hom_{A_e}(A_{y^{-1}x}, N)``.  A homomorphism ``f`` in degree
``y`` is a matrix ``F`` (``dim A_{y^{-1}x}`` x ``dim N``) with ``f(b) = b @ F``.
For homogeneous ``a`` of degree ``w`` the action is ``(f.a)(b) = f(a b)`` for
``b`` in ``A_{(yw)^{-1}x}``, which lands in degree ``yw``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exactlin as el
from .algebra import RModule, flatten, intertwiners, module_hom
from .graded import GradedAlgebra, GradedMap, GradedModule, make_shift
from .homs import HomSpace, graded_hom, restrict_to_ae


def component_as_ae_module(a: GradedAlgebra, z: int) -> RModule:
    """A_z as a right A_e-module under right multiplication."""
    idx = a.component(z)
    acts = tuple(a.algebra.right_mult[c][np.ix_(idx, idx)] for c in a.ae_indices)
    return RModule(a.ae, acts, len(idx))


@dataclass(frozen=True, eq=False)
class CoinducedModule:
    """Coind_x(N) together with the hom-space bases of its components."""

    x: int
    n: RModule
    module: GradedModule
    hom_bases: dict[int, tuple[np.ndarray, ...]]
    offsets: dict[int, int]

    @property
    def algebra(self) -> GradedAlgebra:
        return self.module.algebra

    def hom_of(self, y: int, coords) -> np.ndarray:
        """The homomorphism A_{y^{-1}x} -> N with the given component coordinates."""
        a = self.algebra
        z = a.group.ldiv(y, self.x)
        out = el.zeros(len(a.component(z)), self.n.dim)
        for c, f in zip(coords, self.hom_bases[y]):
            out = out + int(c) * f
        return out % a.p

    def vector_of(self, y: int, f: np.ndarray) -> np.ndarray:
        """Ambient vector of the degree-y element given by the matrix ``f``."""
        v = np.zeros(self.module.dim, dtype=np.int64)
        basis = self.hom_bases[y]
        if basis:
            c = el.row_coords(flatten(basis), np.asarray(f).reshape(1, -1), self.algebra.p)[0]
            v[self.offsets[y]:self.offsets[y] + len(basis)] = c
        elif np.asarray(f).any():
            raise ValueError("map is not A_e-linear")
        return v

    def hom_at(self, v: np.ndarray, y: int) -> np.ndarray:
        k = len(self.hom_bases[y])
        return self.hom_of(y, np.asarray(v)[self.offsets[y]:self.offsets[y] + k])

    def evaluation(self) -> np.ndarray:
        """ev_1: Coind_x(N)_x -> N, as a (dim component x) x dim N matrix."""
        a = self.algebra
        rows = [el.mat_mul(a.ae_unit, f, a.p) for f in self.hom_bases[self.x]]
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.n.dim)


def coind(a: GradedAlgebra, x: int, n: RModule) -> CoinducedModule:
    g, p = a.group, a.p
    n.check()
    hom_bases, offsets, degrees = {}, {}, []
    for y in g.elements:
        src = component_as_ae_module(a, g.ldiv(y, x))
        basis = tuple(intertwiners(src.acts, n.acts, p, src.dim, n.dim))
        hom_bases[y] = basis
        offsets[y] = len(degrees)
        degrees.extend([y] * len(basis))
    dim = len(degrees)
    flat = {y: flatten(hom_bases[y]) for y in g.elements}
    acts = []
    for i in range(a.dim):
        w = a.degrees[i]
        act = el.zeros(dim, dim)
        for y in g.elements:
            t = g.mul(y, w)
            if not hom_bases[y] or not hom_bases[t]:
                continue
            # (f.b_i)(b) = f(b_i b): rows b in A_{t^{-1}x}, columns b_i b in A_{y^{-1}x}
            left = a.algebra.left_mult[i][np.ix_(a.component(g.ldiv(t, x)), a.component(g.ldiv(y, x)))]
            images = np.array([el.mat_mul(left, f, p).reshape(-1) for f in hom_bases[y]])
            coords = el.row_coords(flat[t], images, p)
            act[offsets[y]:offsets[y] + len(hom_bases[y]), offsets[t]:offsets[t] + len(hom_bases[t])] = coords
        acts.append(act)
    module = GradedModule(a, tuple(degrees), tuple(acts), name=f"Coind_{x}")
    module.check()
    return CoinducedModule(x, n, module, hom_bases, offsets)


def coind_map(a: GradedAlgebra, x: int, h: np.ndarray, src: CoinducedModule, tgt: CoinducedModule) -> GradedMap:
    """Coind_x(h): f -> h o f."""
    p = a.p
    mat = el.zeros(src.module.dim, tgt.module.dim)
    for y in a.group.elements:
        for k, f in enumerate(src.hom_bases[y]):
            mat[src.offsets[y] + k] = tgt.vector_of(y, el.mat_mul(f, h, p))
    return GradedMap(src.module, tgt.module, mat)


def transpose_back(m: GradedModule, c: CoinducedModule, h: np.ndarray) -> GradedMap:
    """h: M_x -> N  |->  g with g(m_y) = [b -> h(m_y b)]."""
    a, g, p, x = m.algebra, m.group, m.p, c.x
    mx = m.component(x)
    mat = el.zeros(m.dim, c.module.dim)
    for r, y in enumerate(m.degrees):
        zidx = a.component(g.ldiv(y, x))
        # rows: b in A_{y^{-1}x};  m_r . b lies in M_x
        f = np.array([m.acts[b][r, mx] for b in zidx], dtype=np.int64).reshape(len(zidx), len(mx))
        mat[r] = c.vector_of(y, el.mat_mul(f, h, p))
    return GradedMap(m, c.module, mat)


def transpose_forward(m: GradedModule, c: CoinducedModule, gmap: GradedMap) -> np.ndarray:
    """g |-> ev_1 o g_x : M_x -> N."""
    return el.mat_mul(gmap.block(c.x), c.evaluation(), m.p)


@dataclass
class AdjunctionCheck:
    dim_graded: int
    dim_ae: int
    forward_then_back: bool
    back_then_forward: bool

    @property
    def ok(self) -> bool:
        return self.dim_graded == self.dim_ae and self.forward_then_back and self.back_then_forward


def adjunction_transpose(m: GradedModule, c: CoinducedModule) -> AdjunctionCheck:
    """Verify Hom_gr(M, Coind_x N) ~ Hom_{A_e}(M_x, N) through both transposes."""
    p = m.p
    left = graded_hom(m, c.module)
    right = HomSpace(restrict_to_ae(m, c.x), c.n, tuple(module_hom(restrict_to_ae(m, c.x), c.n)))
    fb = all(
        np.array_equal(transpose_back(m, c, transpose_forward(m, c, gm)).matrix, gm.matrix)
        for gm in left.graded_maps()
    )
    bf = all(
        np.array_equal(transpose_forward(m, c, transpose_back(m, c, h)), h % p) for h in right.basis
    )
    return AdjunctionCheck(left.dim, right.dim, fb, bf)


def unit_eta(m: GradedModule, x: int) -> tuple[GradedMap, CoinducedModule]:
    """eta_M: M -> Coind_x(M_x), m_y -> [b -> m_y b]."""
    mx = restrict_to_ae(m, x)
    c = coind(m.algebra, x, mx)
    return transpose_back(m, c, el.identity(mx.dim)), c


def counit_eval(c: CoinducedModule) -> np.ndarray:
    """The adjunction counit (Coind_x N)_x -> N, evaluation at 1."""
    return c.evaluation()


@dataclass
class CounitXi:
    hom: HomSpace
    matrix: np.ndarray

    @property
    def bijective(self) -> bool:
        return self.matrix.shape[0] == self.matrix.shape[1] and el.is_invertible(self.matrix, self.hom.p)


def counit_xi(a: GradedAlgebra, x: int, y: RModule, c: CoinducedModule | None = None) -> CounitXi:
    """xi_Y: Hom_gr([x]A, Coind_x Y) -> Y, g -> g(1)(1)."""
    c = c or coind(a, x, y)
    sigma = make_shift(a, x)
    hom = graded_hom(sigma, c.module)
    rows = []
    for f in hom.basis:
        image = el.mat_mul(a.unit, f, a.p)  # g(1), homogeneous of degree x
        rows.append(el.mat_mul(a.ae_unit, c.hom_at(image, x), a.p))
    mat = np.array(rows, dtype=np.int64).reshape(len(rows), y.dim)
    return CounitXi(hom, mat)


def triangle_identities(m: GradedModule, n: RModule, x: int) -> tuple[bool, bool]:
    """(eps_{M_x} o (eta_M)_x = id,  Coind(eps_N) o eta_{Coind N} = id)."""
    a, p = m.algebra, m.p
    eta, cm = unit_eta(m, x)
    first = np.array_equal(el.mat_mul(eta.block(x), counit_eval(cm), p), el.identity(len(m.component(x))))
    cn = coind(a, x, n)
    eta2, ccn = unit_eta(cn.module, x)
    back = coind_map(a, x, counit_eval(cn), ccn, cn)
    second = np.array_equal(eta2.then(back).matrix, el.identity(cn.module.dim))
    return first, second


def eta_natural(f: GradedMap, x: int) -> bool:
    """eta_{M'} o f = Coind_x(f_x) o eta_M."""
    a = f.source.algebra
    eta_s, cs = unit_eta(f.source, x)
    eta_t, ct = unit_eta(f.target, x)
    top = f.then(eta_t)
    bottom = eta_s.then(coind_map(a, x, f.block(x), cs, ct))
    return np.array_equal(top.matrix, bottom.matrix)


def xi_natural(a: GradedAlgebra, x: int, h: np.ndarray, y1: RModule, y2: RModule) -> bool:
    """xi_{Y'}(Coind(h) o g) = h(xi_Y(g)) for every g in a basis."""
    c1, c2 = coind(a, x, y1), coind(a, x, y2)
    xi1, xi2 = counit_xi(a, x, y1, c1), counit_xi(a, x, y2, c2)
    ch = coind_map(a, x, h, c1, c2)
    for k, g in enumerate(xi1.hom.basis):
        pushed = el.mat_mul(g, ch.matrix, a.p)
        lhs = el.mat_mul(xi2.hom.coords(pushed), xi2.matrix, a.p)
        rhs = el.mat_mul(xi1.matrix[k], h, a.p)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def left_exact(a: GradedAlgebra, x: int, mods: tuple[RModule, RModule, RModule],
               maps: tuple[np.ndarray, np.ndarray]) -> bool:
    """Coind_x(0 -> N' -> N -> N'') is exact at N' and N (rank bookkeeping)."""
    p = a.p
    c1, c2, c3 = (coind(a, x, n) for n in mods)
    i = coind_map(a, x, maps[0], c1, c2).matrix
    q = coind_map(a, x, maps[1], c2, c3).matrix
    rank_i = el.rank(i, p) if i.size else 0
    rank_q = el.rank(q, p) if q.size else 0
    composite = el.mat_mul(i, q, p) if i.size and q.size else el.zeros(0, 0)
    return rank_i == c1.module.dim and not composite.any() and rank_i == c2.module.dim - rank_q


@dataclass(frozen=True, eq=False)
class SigmaDual:
    """Sigma* = Hom_B(Sigma, B) for Sigma = [x]A viewed as a right B-module.

    ``basis[k]`` is a matrix ``dim Sigma x dim B``.  ``left_b[j]`` acts on
    Sigma*-coordinates as ``sigma -> b_j sigma`` and ``right_ae[c]`` as
    ``sigma -> sigma . a_c`` with ``(sigma . a)(s) = sigma(a s)``.
    """

    x: int
    sigma: RModule
    basis: tuple[np.ndarray, ...]
    left_b: tuple[np.ndarray, ...]
    right_ae: tuple[np.ndarray, ...]
    dual_basis: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def ae_module(self, a: GradedAlgebra) -> RModule:
        return RModule(a.ae, self.right_ae, self.dim)


def sigma_dual(s, x: int) -> SigmaDual:
    from .smash import b_module_of, regular_b

    a, p = s.graded, s.p
    sigma = b_module_of(s, make_shift(a, x))
    basis = tuple(module_hom(sigma, regular_b(s)))
    flat = flatten(basis)
    k = len(basis)
    left_b = tuple(
        el.row_coords(flat, np.array([el.mat_mul(f, s.algebra.left_mult[j], p).reshape(-1) for f in basis]), p)
        for j in range(s.dim)
    )
    right_ae = tuple(
        el.row_coords(flat, np.array([el.mat_mul(a.algebra.left_mult[c], f, p).reshape(-1) for f in basis]), p)
        for c in a.ae_indices
    )
    # dual basis with u_j = j-th basis vector of Sigma: sum_j u_j . u_j*(s) = s
    d = sigma.dim
    system = el.zeros(d * d, d * k)
    for t in range(d):
        for j in range(d):
            for l, f in enumerate(basis):
                # u_j . f(e_t) = row j of act_by(f[t])
                system[t * d:(t + 1) * d, j * k + l] = sigma.act_by(f[t])[j]
    target = el.identity(d).reshape(-1)
    sol = el.solve_all(system, target, p)
    if sol is None:
        raise RuntimeError("no dual basis: Sigma is not projective over B")
    dual = tuple(
        sum((int(sol.particular[j * k + l]) * basis[l] for l in range(k)), el.zeros(d, s.dim)) % p
        for j in range(d)
    )
    return SigmaDual(x, sigma, basis, left_b, right_ae, dual)


def dual_basis_ok(sd: SigmaDual, p: int) -> bool:
    d = sd.sigma.dim
    total = el.zeros(d, d)
    for j, f in enumerate(sd.dual_basis):
        for t in range(d):
            total[t] = (total[t] + sd.sigma.act_by(f[t])[j]) % p
    return np.array_equal(total, el.identity(d))


@dataclass
class RatCoindComparison:
    corner_dims: dict[int, int]
    component_dims: dict[int, int]
    rat_dims: tuple[int, ...]
    coind_dims: tuple[int, ...]
    isomorphic: str

    @property
    def ok(self) -> bool:
        return (self.corner_dims == self.component_dims and self.rat_dims == self.coind_dims
                and self.isomorphic == "yes")


def rat_hom_dual(s, x: int, n: RModule, sd: SigmaDual | None = None) -> GradedModule:
    """Rat(Hom_{A_e}(Sigma*, N)) with its grading M_y = M e_y."""
    from .smash import rat

    a, p = s.graded, s.p
    sd = sd or sigma_dual(s, x)
    w_basis = module_hom(sd.ae_module(a), n)
    if not w_basis:
        return GradedModule.zero(a)
    flat = flatten(w_basis)
    acts = tuple(
        el.row_coords(flat, np.array([el.mat_mul(lam, phi, p).reshape(-1) for phi in w_basis]), p)
        for lam in sd.left_b
    )
    wb = RModule(s.algebra, acts, len(w_basis))
    wb.check()
    return rat(s, wb).graded


def compare_rat_coind(s, x: int, n: RModule) -> RatCoindComparison:
    from .homs import is_isomorphic

    a, p, g = s.graded, s.p, s.group
    sd = sigma_dual(s, x)
    corner = {}
    for y in g.elements:
        ey = sum((int(c) * sd.left_b[j] for j, c in enumerate(s.idempotent(y)) if c),
                 el.zeros(sd.dim, sd.dim)) % p
        corner[y] = el.rank(ey, p) if ey.size else 0
    comp = {y: len(a.component(g.ldiv(y, x))) for y in g.elements}
    r = rat_hom_dual(s, x, n, sd)
    c = coind(a, x, n).module
    iso = is_isomorphic(r, c).verdict
    return RatCoindComparison(corner, comp, r.deg_dims, c.deg_dims, iso)
