"""The smash-product ring B, its rational pairing with C = AG, and the functor Rat.

B has GF(p)-basis ``{a~_i} u {e_x a~_i}`` (``i`` over the basis of A, ``x``
over G) at indices ``i`` and ``n + x*n + i``.  Multiplication is read as
right-operator composition: in a right B-module ``m.(bb') = (m.b).b'``.  With
that reading the defining relations are

    e_x e_y = delta_{x,y} e_x
    e_x a~_z = a~_z e_{xz}                      (a_z homogeneous of degree z)
    e_x a~ e_y = (pi_{x^{-1} y} a)~ e_y

and the products of basis elements follow:

    a~_i a~_j           = (b_i b_j)~
    a~_i (e_x a~_j)     = e_{x z_i^{-1}} (b_i b_j)~
    (e_x a~_i) a~_j     = e_x (b_i b_j)~
    (e_x a~_i)(e_y a~_j) = delta_{x, y z_i^{-1}} e_x (b_i b_j)~
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exactlin as el
from .algebra import Algebra, ModuleAxiomError, RModule
from .coring import GroupCoring
from .exactlin import Subspace
from .graded import GradedAlgebra, GradedModule, ValidationReport


@dataclass(frozen=True, eq=False)
class SmashAlgebra:
    graded: GradedAlgebra
    algebra: Algebra

    @property
    def p(self) -> int:
        return self.graded.p

    @property
    def n(self) -> int:
        return self.graded.dim

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def group(self):
        return self.graded.group

    def tilde_index(self, i: int) -> int:
        return i

    def corner_index(self, x: int, i: int) -> int:
        return self.n + x * self.n + i

    def embed(self, a: np.ndarray) -> np.ndarray:
        """a -> a~."""
        v = np.zeros(self.dim, dtype=np.int64)
        v[: self.n] = np.asarray(a) % self.p
        return v

    def corner(self, x: int, a: np.ndarray) -> np.ndarray:
        """a -> e_x a~."""
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.n + x * self.n: self.n + (x + 1) * self.n] = np.asarray(a) % self.p
        return v

    def idempotent(self, x: int) -> np.ndarray:
        return self.corner(x, self.graded.unit)

    @property
    def unit(self) -> np.ndarray:
        return self.algebra.unit

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.algebra.mul(u, v)

    def split(self, b: np.ndarray) -> tuple[np.ndarray, dict[int, np.ndarray]]:
        """b = a0~ + sum_x e_x (a_x)~ -> (a0, {x: a_x})."""
        b = np.asarray(b) % self.p
        return b[: self.n].copy(), {
            x: b[self.n + x * self.n: self.n + (x + 1) * self.n].copy() for x in self.group.elements
        }

    def tilde_span(self) -> Subspace:
        return Subspace.span([self.embed(self.graded.basis_vector(i)) for i in range(self.n)], self.dim, self.p)

    def corner_span(self) -> Subspace:
        return Subspace.span(
            [self.corner(x, self.graded.basis_vector(i)) for x in self.group.elements for i in range(self.n)],
            self.dim, self.p,
        )


def build_smash(a: GradedAlgebra) -> SmashAlgebra:
    g, n, p = a.group, a.dim, a.p
    c = a.algebra.sc % p
    dim = n * (g.order + 1)
    sc = np.zeros((dim, dim, dim), dtype=np.int64)

    def corner(x: int, i: int) -> int:
        return n + x * n + i

    for i, j, k in np.argwhere(c):
        v = c[i, j, k]
        zinv = g.inverse(a.degrees[i])
        sc[i, j, k] = v
        for x in g.elements:
            sc[i, corner(x, j), corner(g.mul(x, zinv), k)] = v
            sc[corner(x, i), j, corner(x, k)] = v
            # (e_x a~_i)(e_y a~_j) survives only for x = y z_i^{-1}
            sc[corner(g.mul(x, zinv), i), corner(x, j), corner(g.mul(x, zinv), k)] = v
    unit = np.zeros(dim, dtype=np.int64)
    unit[:n] = a.unit % p
    s = SmashAlgebra(a, Algebra(p, sc, unit))
    report = verify_smash(s)
    if not report.ok:
        raise RuntimeError(f"smash product verification failed: {report.first_failure}")
    return s


def verify_smash(s: SmashAlgebra) -> ValidationReport:
    a, g, p = s.graded, s.group, s.p
    report = ValidationReport()
    report.add("dimension", None if s.dim == a.dim * (g.order + 1) else (s.dim,))
    report.add("associativity", s.algebra.associativity_witness())
    report.add("unit", s.algebra.unit_witness())
    e = {x: s.idempotent(x) for x in g.elements}
    bad = next(((x, y) for x in g.elements for y in g.elements
                if not np.array_equal(s.mul(e[x], e[y]), e[x] if x == y else np.zeros(s.dim, dtype=np.int64))),
               None)
    report.add("orthogonal_idempotents", bad)
    report.add("sandwich_relation", sandwich_relation_witness(s))
    report.add("commutation_relation", commutation_relation_witness(s))
    bad = None
    for i in range(a.dim):
        for j in range(a.dim):
            bi, bj = a.basis_vector(i), a.basis_vector(j)
            if not np.array_equal(s.mul(s.embed(bi), s.embed(bj)), s.embed(a.algebra.mul(bi, bj))):
                bad = bad or (i, j)
    report.add("embedding_multiplicative", bad)
    report.add("embedding_unital", None if np.array_equal(s.embed(a.unit), s.unit) else ("unit",))
    bad = None
    for x in g.elements:
        images = np.array([s.mul(e[x], s.embed(a.basis_vector(i))) for i in range(a.dim)])
        if el.rank(images, p) != a.dim:
            bad = bad or (x,)
    report.add("corners_faithful", bad)
    return report


def sandwich_relation_witness(s: SmashAlgebra, printed: bool = False) -> tuple | None:
    """Check e_x a~ e_y = (pi_w a)~ e_y on basis elements.

    ``w = x^{-1} y`` is the index that matches the commutation relation;
    ``printed=True`` tests ``w = y^{-1} x`` instead.
    """
    a, g = s.graded, s.group
    for x in g.elements:
        ex = s.idempotent(x)
        for y in g.elements:
            ey = s.idempotent(y)
            w = g.ldiv(y, x) if printed else g.ldiv(x, y)
            for i in range(a.dim):
                ai = s.embed(a.basis_vector(i))
                lhs = s.mul(s.mul(ex, ai), ey)
                rhs = s.mul(s.embed(a.project(a.basis_vector(i), w)), ey)
                if not np.array_equal(lhs, rhs):
                    return (x, y, i)
    return None


def commutation_relation_witness(s: SmashAlgebra) -> tuple | None:
    """Check e_x a~_z = a~_z e_{xz} on homogeneous basis elements."""
    a, g = s.graded, s.group
    for x in g.elements:
        for i in range(a.dim):
            ai = s.embed(a.basis_vector(i))
            lhs = s.mul(s.idempotent(x), ai)
            rhs = s.mul(ai, s.idempotent(g.mul(x, a.degrees[i])))
            if not np.array_equal(lhs, rhs):
                return (x, i)
    return None


def pairing(s: SmashAlgebra, coring: GroupCoring, c: np.ndarray, b: np.ndarray) -> np.ndarray:
    """<c, b> in A: the A-bilinear extension of <x, e_y> = delta_{x,y}, <x, a~> = a."""
    a = s.graded
    a0, corners = s.split(b)
    out = np.zeros(a.dim, dtype=np.int64)
    for x in s.group.elements:
        cx = coring.coefficient(c, x)
        if cx.any():
            out = out + a.algebra.mul(cx, (a0 + corners[x]) % s.p)
    return out % s.p


def reconstruct(s: SmashAlgebra, coring: GroupCoring, c: np.ndarray) -> np.ndarray:
    """sum_z <c, e_z> z."""
    out = np.zeros(coring.dim, dtype=np.int64)
    for z in s.group.elements:
        out = out + coring.element(pairing(s, coring, c, s.idempotent(z)), z)
    return out % s.p


def b_module_of(s: SmashAlgebra, m: GradedModule) -> RModule:
    """a~ acts through the A-action, e_x a~ as projection onto M_x followed by a."""
    acts: list[np.ndarray] = list(m.acts)
    for x in s.group.elements:
        proj = np.diag([1 if d == x else 0 for d in m.degrees]).astype(np.int64).reshape(m.dim, m.dim)
        acts.extend(el.mat_mul(proj, act, s.p) for act in m.acts)
    mod = RModule(s.algebra, tuple(acts), m.dim)
    mod.check()
    return mod


def operator_relations_witness(s: SmashAlgebra, mb: RModule) -> tuple | None:
    """Both defining relations and orthogonality, read as operators on ``mb``."""
    a, g, p = s.graded, s.group, s.p
    e = {x: mb.act_by(s.idempotent(x)) for x in g.elements}
    til = [mb.act_by(s.embed(a.basis_vector(i))) for i in range(a.dim)]
    zero = el.zeros(mb.dim, mb.dim)
    for x in g.elements:
        for y in g.elements:
            expect = e[x] if x == y else zero
            if not np.array_equal(el.mat_mul(e[x], e[y], p), expect):
                return ("orthogonal", x, y)
            for i in range(a.dim):
                lhs = el.mat_mul(el.mat_mul(e[x], til[i], p), e[y], p)
                rhs = el.mat_mul(til[i], e[y], p) if a.degrees[i] == g.ldiv(x, y) else zero
                if not np.array_equal(lhs, rhs):
                    return ("sandwich", x, y, i)
        for i in range(a.dim):
            if not np.array_equal(el.mat_mul(e[x], til[i], p),
                                  el.mat_mul(til[i], e[g.mul(x, a.degrees[i])], p)):
                return ("commutation", x, i)
    return None


@dataclass(frozen=True, eq=False)
class RatResult:
    subspace: Subspace
    components: dict[int, Subspace]
    graded: GradedModule


def rat(s: SmashAlgebra, mb: RModule) -> RatResult:
    """Rat(M) = sum_x M e_x, graded by M_x := M e_x with A acting through a~."""
    g, p, a = s.group, s.p, s.graded
    comps = {x: Subspace.span(mb.act_by(s.idempotent(x)), mb.dim, p) for x in g.elements}
    total = Subspace.zero(mb.dim, p)
    for c in comps.values():
        total = total.sum(c)
    if total.dim != sum(c.dim for c in comps.values()):
        raise ModuleAxiomError("the images of the idempotents are not independent")
    rows, degrees, offsets = [], [], {}
    for x in g.elements:
        offsets[x] = len(rows)
        rows.extend(comps[x].basis)
        degrees.extend([x] * comps[x].dim)
    k = len(rows)
    acts = []
    for i in range(a.dim):
        op = mb.act_by(s.embed(a.basis_vector(i)))
        act = el.zeros(k, k)
        for x in g.elements:
            t = g.mul(x, a.degrees[i])
            if comps[x].dim and comps[t].dim:
                act[offsets[x]:offsets[x] + comps[x].dim, offsets[t]:offsets[t] + comps[t].dim] = \
                    comps[t].coords(el.mat_mul(comps[x].basis, op, p))
            elif comps[x].dim and el.mat_mul(comps[x].basis, op, p).any():
                raise ModuleAxiomError("a~ does not map M e_x into M e_{x deg a}")
        acts.append(act)
    graded = GradedModule(a, tuple(degrees), tuple(acts))
    return RatResult(total, comps, graded)


def rat_basis_change(res: RatResult) -> np.ndarray:
    """Rows: the basis of Rat(M) used by ``res.graded``, in the coordinates of M."""
    rows = [v for x in sorted(res.components) for v in res.components[x].basis]
    dim = res.subspace.ambient_dim
    return np.array(rows, dtype=np.int64).reshape(len(rows), dim)


def rat_of_map(s: SmashAlgebra, f: np.ndarray, src: RModule, tgt: RModule) -> np.ndarray:
    """Restriction of a B-linear ``f`` to Rat(src) -> Rat(tgt), in the rat bases."""
    rs, rt = rat(s, src), rat(s, tgt)
    bs, bt = rat_basis_change(rs), rat_basis_change(rt)
    images = el.mat_mul(bs, f, s.p)
    if bt.shape[0] == 0:
        if images.any():
            raise ModuleAxiomError("f(Rat M) is not inside Rat N")
        return el.zeros(bs.shape[0], 0)
    return el.row_coords(bt, images, s.p)


def regular_b(s: SmashAlgebra) -> RModule:
    return s.algebra.regular_module()


def coring_as_graded(coring: GroupCoring) -> GradedModule:
    """C as a graded right A-module with C_x = Ax (the comodule structure given by Delta)."""
    degrees = tuple(x for x in range(coring.order) for _ in range(coring.n))
    return GradedModule(coring.algebra, degrees, coring.right_action, name="C")


@dataclass
class ExactnessReport:
    coring_generated: bool
    sequences: list[dict]

    @property
    def ok(self) -> bool:
        return self.coring_generated and all(s["exact"] for s in self.sequences)


def rat_sequence_exact(s: SmashAlgebra, mods: tuple[RModule, RModule, RModule],
                       maps: tuple[np.ndarray, np.ndarray]) -> dict:
    """Apply Rat to 0 -> M' -> M -> M'' -> 0 and check exactness by rank bookkeeping."""
    m1, m2, m3 = mods
    i, q = maps
    p = s.p
    ri = rat_of_map(s, i, m1, m2)
    rq = rat_of_map(s, q, m2, m3)
    d1, d2, d3 = ri.shape[0], ri.shape[1], rq.shape[1]
    rank_i = el.rank(ri, p) if ri.size else 0
    rank_q = el.rank(rq, p) if rq.size else 0
    composite_zero = not (el.mat_mul(ri, rq, p).any() if ri.size and rq.size else False)
    exact = rank_i == d1 and composite_zero and rank_i == d2 - rank_q and rank_q == d3
    return {"dims": [d1, d2, d3], "rank_in": rank_i, "rank_out": rank_q, "exact": bool(exact)}


def exactness_witness(s: SmashAlgebra, coring: GroupCoring, extra=()) -> ExactnessReport:
    """C Rat(B) = C, and Rat keeps short exact sequences exact.

    The built-in sequence is 0 -> Rat(B) -> B -> B/Rat(B) -> 0; ``extra``
    adds further (modules, maps) sequences.
    """
    p = s.p
    cb = b_module_of(s, coring_as_graded(coring))
    images = [el.mat_mul(el.identity(cb.dim), cb.act_by(s.corner(z, s.graded.basis_vector(i))), p)
              for z in s.group.elements for i in range(s.n)]
    generated = Subspace.span(np.vstack(images), cb.dim, p).dim == coring.dim

    breg = regular_b(s)
    trace = rat(s, breg).subspace
    sub = breg.submodule(trace)
    quo, proj = breg.quotient(trace)
    seqs = [((sub, breg, quo), (trace.basis, proj))]
    zero = RModule.zero(s.algebra)
    seqs.append(((zero, zero, zero), (el.zeros(0, 0), el.zeros(0, 0))))
    seqs.extend(extra)
    return ExactnessReport(generated, [rat_sequence_exact(s, mods, maps) for mods, maps in seqs])
