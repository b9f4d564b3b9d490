"""The torsion theory attached to [x]A and its idempotent radical r_x."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exactlin as el
from .algebra import RModule
from .coind import CoinducedModule, coind
from .exactlin import Subspace
from .graded import (
    GradedAlgebra,
    GradedMap,
    GradedModule,
    graded_equal,
    graded_submodule,
    zero_subspace,
)


def radical_spaces(x: int, m: GradedModule) -> dict[int, Subspace]:
    """r_x(M)_y = M_x . A_{x^{-1} y}."""
    a, g, p = m.algebra, m.group, m.p
    mx = m.component_space(x).basis
    out = zero_subspace(m)
    for y in g.elements:
        rows = [el.mat_mul(mx, m.acts[i], p) for i in a.component(g.ldiv(x, y))]
        if rows and mx.shape[0]:
            out[y] = Subspace.span(np.vstack(rows), m.dim, p)
    return out


def radical(x: int, m: GradedModule) -> tuple[GradedModule, GradedMap]:
    return graded_submodule(m, radical_spaces(x, m))


def is_torsionfree(x: int, m: GradedModule) -> bool:
    return not m.component(x)


def is_torsion(x: int, m: GradedModule) -> bool:
    return sum(s.dim for s in radical_spaces(x, m).values()) == m.dim


@dataclass
class TorsionReport:
    x: int
    radical: GradedModule
    inclusion: GradedMap
    is_torsion: bool
    is_torsionfree: bool

    def as_dict(self) -> dict:
        return {
            "degree": self.x,
            "radical_dims": list(self.radical.deg_dims),
            "is_torsion": self.is_torsion,
            "is_torsionfree": self.is_torsionfree,
        }


def torsion_report(x: int, m: GradedModule) -> TorsionReport:
    r, incl = radical(x, m)
    return TorsionReport(x, r, incl, r.dim == m.dim, is_torsionfree(x, m))


@dataclass(frozen=True, eq=False)
class TensorModel:
    """(+)_y Y (x)_{A_e} A_{x^{-1}y} with its canonical map into Coind_x(Y)."""

    module: GradedModule
    to_coind: GradedMap
    coinduced: CoinducedModule

    @property
    def image(self) -> dict[int, Subspace]:
        return self.to_coind.image()


def tensor_model(a: GradedAlgebra, x: int, y_mod: RModule) -> TensorModel:
    """Tensor products over A_e as quotients by the balancing relations.

    Component ``w`` is spanned by ``y (x) b`` (index ``r * dim A_z + j`` with
    ``z = x^{-1} w``) modulo ``y.c (x) b - y (x) c b`` for c in A_e.
    """
    g, p = a.group, a.p
    dy = y_mod.dim
    reps, proj, degrees, offsets = {}, {}, [], {}
    for w in g.elements:
        zidx = a.component(g.ldiv(x, w))
        dz = len(zidx)
        amb = dy * dz
        rels = []
        for k, c in enumerate(a.ae_indices):
            left_c = a.algebra.left_mult[c][np.ix_(zidx, zidx)]  # b -> c b
            for r in range(dy):
                for j in range(dz):
                    v = np.zeros(amb, dtype=np.int64)
                    for r2 in np.flatnonzero(y_mod.acts[k][r]):
                        v[r2 * dz + j] += y_mod.acts[k][r, r2]
                    for j2 in np.flatnonzero(left_c[j]):
                        v[r * dz + j2] -= left_c[j, j2]
                    rels.append(v % p)
        rel_space = Subspace.span(np.array(rels, dtype=np.int64).reshape(len(rels), amb), amb, p)
        rep = Subspace.full(amb, p).quotient_basis(rel_space)
        q = rep.shape[0]
        if amb:
            change = el.inverse(np.vstack([rep, rel_space.basis]), p)
            proj[w] = change[:, :q]
        else:
            proj[w] = el.zeros(0, 0)
        reps[w] = rep
        offsets[w] = len(degrees)
        degrees.extend([w] * q)
    dim = len(degrees)
    acts = []
    for i in range(a.dim):
        t_deg = a.degrees[i]
        act = el.zeros(dim, dim)
        for w in g.elements:
            t = g.mul(w, t_deg)
            if not reps[w].shape[0] or not reps[t].shape[0]:
                continue
            src_idx = a.component(g.ldiv(x, w))
            tgt_idx = a.component(g.ldiv(x, t))
            right_i = a.algebra.right_mult[i][np.ix_(src_idx, tgt_idx)]  # b -> b b_i
            # (y (x) b) b_i = y (x) b b_i, i.e. id_Y kron right_i
            op = np.kron(el.identity(dy), right_i) % p
            images = el.mat_mul(el.mat_mul(reps[w], op, p), proj[t], p)
            act[offsets[w]:offsets[w] + reps[w].shape[0], offsets[t]:offsets[t] + reps[t].shape[0]] = images
        acts.append(act)
    module = GradedModule(a, tuple(degrees), tuple(acts), name=f"tensor_{x}")
    module.check()

    c = coind(a, x, y_mod)
    mat = el.zeros(dim, c.module.dim)
    for w in g.elements:
        zidx = a.component(g.ldiv(x, w))
        widx = a.component(g.ldiv(w, x))
        dz = len(zidx)
        for k, rep in enumerate(reps[w]):
            # y (x) b  ->  [b' -> y . (b b')]  with b b' in A_e
            f = el.zeros(len(widx), dy)
            for r in range(dy):
                for j in range(dz):
                    coeff = int(rep[r * dz + j])
                    if not coeff:
                        continue
                    yr = np.zeros(dy, dtype=np.int64)
                    yr[r] = 1
                    for jj, bp in enumerate(widx):
                        prod = a.algebra.mul(a.basis_vector(zidx[j]), a.basis_vector(bp))
                        act_e = y_mod.act_by(prod[list(a.ae_indices)])
                        f[jj] = (f[jj] + coeff * el.mat_mul(yr, act_e, p)) % p
            mat[offsets[w] + k] = c.vector_of(w, f)
    to_coind = GradedMap(module, c.module, mat)
    return TensorModel(module, to_coind, c)


@dataclass
class TensorModelCheck:
    onto_radical: bool
    injective: bool

    @property
    def iso(self) -> bool:
        return self.onto_radical and self.injective


def tensor_model_check(a: GradedAlgebra, x: int, y_mod: RModule) -> TensorModelCheck:
    tm = tensor_model(a, x, y_mod)
    if not tm.to_coind.is_valid():
        raise RuntimeError("canonical tensor map is not a graded A-linear map")
    onto = graded_equal(tm.image, radical_spaces(x, tm.coinduced.module))
    return TensorModelCheck(onto, tm.to_coind.is_injective())
