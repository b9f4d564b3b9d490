"""Simple modules: graded-simples, simples over A_e and the bijection between them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import exactlin as el
from .algebra import Algebra, RModule, invariant_subspaces, module_hom
from .coind import coind, sigma_dual
from .exactlin import EnumerationBoundError, Subspace
from .graded import (
    GradedAlgebra,
    GradedModule,
    closure,
    graded_quotient,
    is_action_closed,
    make_shift,
    total_dim,
)
from .homs import is_isomorphic, restrict_to_ae
from .torsion import radical


class SimplicityError(RuntimeError):
    """A verification that must hold for simple modules failed."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True, eq=False)
class SimpleClass:
    representative: GradedModule | RModule
    kind: Literal["graded", "ae"]
    certificate: object = None

    @property
    def dim(self) -> int:
        return self.representative.dim


# -- simplicity tests ---------------------------------------------------------

@dataclass(frozen=True)
class GradedSimpleVerdict:
    simple: bool
    witness: tuple | None = None  # (degree, ambient vector) generating a proper submodule

    def __bool__(self) -> bool:
        return self.simple


def is_graded_simple(m: GradedModule, bound: int | None = None) -> GradedSimpleVerdict:
    """M is graded-simple iff M != 0 and each nonzero homogeneous element generates M."""
    if m.dim == 0:
        return GradedSimpleVerdict(False, ("zero module",))
    bound = el.default_bound() if bound is None else bound
    cost = sum(m.p ** d for d in m.deg_dims)
    if cost > bound:
        raise EnumerationBoundError(f"{cost} homogeneous vectors exceed enumeration bound {bound}")
    for y in m.support():
        comp = m.component_space(y).basis
        for v in el.projective_points(comp.shape[0], m.p):
            vec = el.mat_mul(v.reshape(1, -1), comp, m.p)[0]
            gen = closure(m, {y: Subspace.span(vec, m.dim, m.p)})
            if total_dim(gen) < m.dim:
                return GradedSimpleVerdict(False, (y, tuple(int(c) for c in vec)))
    return GradedSimpleVerdict(True)


def is_simple_module(m: RModule) -> bool:
    if m.dim == 0:
        return False
    return all(m.closure(v).dim == m.dim for v in el.projective_points(m.dim, m.p))


# -- A_e side -----------------------------------------------------------------

def simple_modules(r: Algebra, bound: int | None = None) -> list[SimpleClass]:
    """All simple right R-modules up to isomorphism, as regular-module quotients."""
    reg = r.regular_module()
    classes: list[SimpleClass] = []
    for maximal in reg.maximal_submodules(bound):
        quo, _ = reg.quotient(maximal)
        if not any(is_isomorphic(quo, c.representative, bound) for c in classes):
            classes.append(SimpleClass(quo, "ae", maximal))
    classes.sort(key=lambda c: (c.dim, tuple(c.certificate.basis.reshape(-1))))
    return classes


def simple_ae_modules(a: GradedAlgebra, bound: int | None = None) -> list[SimpleClass]:
    return simple_modules(a.ae, bound)


def _span_products(r: Algebra, u: Subspace, v: Subspace) -> Subspace:
    prods = [r.mul(x, y) for x in u.basis for y in v.basis]
    return Subspace.span(prods, r.dim, r.p)


def jacobson_radical(r: Algebra, bound: int | None = None) -> Subspace:
    """Intersection of the maximal right ideals; checked to be nilpotent."""
    j = Subspace.full(r.dim, r.p)
    for maximal in r.regular_module().maximal_submodules(bound):
        j = j.intersect(maximal)
    power = j
    for _ in range(r.dim + 1):
        if power.dim == 0:
            return j
        power = _span_products(r, power, j)
    raise SimplicityError("intersection of maximal right ideals is not nilpotent")


def is_semisimple_over_ae(s: GradedModule, bound: int | None = None) -> bool:
    """(+)_y S_y is semisimple over A_e iff it is annihilated by J(A_e)."""
    a = s.algebra
    if s.dim == 0:
        return True
    j = jacobson_radical(a.ae, bound)
    ops = [sum((int(c) * s.acts[a.ae_indices[k]] for k, c in enumerate(v) if c), el.zeros(s.dim, s.dim)) % s.p
           for v in j.basis]
    return not any(op.any() for op in ops)


# -- the two maps of the bijection --------------------------------------------

def to_simple_graded(a: GradedAlgebra, x: int, y: RModule, bound: int | None = None) -> GradedModule:
    """r_x(Coind_x(Y)), verified graded-simple with degree-x part isomorphic to Y."""
    c = coind(a, x, y)
    r, _ = radical(x, c.module)
    if r.dim == 0:
        raise SimplicityError("r_x(Coind_x(Y)) vanishes", (x,))
    verdict = is_graded_simple(r, bound)
    if not verdict:
        raise SimplicityError("r_x(Coind_x(Y)) is not graded-simple", verdict.witness)
    if not is_isomorphic(restrict_to_ae(r, x), y, bound):
        raise SimplicityError("degree-x component of r_x(Coind_x(Y)) is not isomorphic to Y", (x,))
    return r


def of_simple_graded(s: GradedModule, x: int) -> RModule:
    """S -> S_x as a right A_e-module, verified simple."""
    if not s.component(x):
        raise ValueError(f"degree {x} is not in the support of the module")
    y = restrict_to_ae(s, x)
    if not is_simple_module(y):
        raise SimplicityError("S_x is not a simple A_e-module", (x,))
    return y


# -- independent sweep --------------------------------------------------------

def maximal_graded_submodules(m: GradedModule, bound: int | None = None) -> list[dict[int, Subspace]]:
    """All maximal proper graded submodules, by enumerating products of component subspaces."""
    g, p = m.group, m.p
    bound = el.default_bound() if bound is None else bound
    per_degree = {}
    count = 1
    for y in g.elements:
        d = len(m.component(y))
        count *= el.count_subspaces(d, p)
        if count > bound:
            raise EnumerationBoundError(f"{count} graded subspaces exceed enumeration bound {bound}")
    for y in g.elements:
        comp = m.component_space(y).basis
        per_degree[y] = [
            Subspace.span(el.mat_mul(s.basis, comp, p), m.dim, p) if s.dim else Subspace.zero(m.dim, p)
            for s in el.enumerate_subspaces(comp.shape[0], p, bound)
        ]
    closed = []
    for choice in itertools.product(*(per_degree[y] for y in g.elements)):
        spaces = dict(zip(g.elements, choice))
        if total_dim(spaces) < m.dim and is_action_closed(m, spaces):
            closed.append(spaces)

    def inside(u, v):
        return all(v[y].contains(u[y]) for y in g.elements)

    return [s for s in closed
            if not any(total_dim(t) > total_dim(s) and inside(s, t) for t in closed)]


def sweep_graded_simples(a: GradedAlgebra, x: int | None = None, bound: int | None = None) -> list[SimpleClass]:
    """Graded-simple quotients of all shifts [y]A (with x in the support if given)."""
    found: list[SimpleClass] = []
    for y in a.group.elements:
        shift = make_shift(a, y)
        for maximal in maximal_graded_submodules(shift, bound):
            quo, _ = graded_quotient(shift, maximal)
            if x is not None and not quo.component(x):
                continue
            if not is_graded_simple(quo, bound):
                raise SimplicityError("quotient by a maximal graded submodule is not simple", (y,))
            if not any(is_isomorphic(quo, c.representative, bound) for c in found):
                cert = {z: quo.component(z)[0] for z in quo.support()}
                found.append(SimpleClass(quo, "graded", cert))
    return found


# -- bijection ----------------------------------------------------------------

@dataclass
class BijectionReport:
    x: int
    s_count: int
    sx_count: int
    of_to: bool
    to_of: bool
    injective: bool
    surjective: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.s_count == self.sx_count and self.of_to and self.to_of
                and self.injective and self.surjective and not self.failures)

    def as_dict(self) -> dict:
        return {
            "S_count": self.s_count,
            "Sx_count": self.sx_count,
            "roundtrips": "pass" if self.ok else "fail",
        }


def bijection_check(a: GradedAlgebra, x: int, bound: int | None = None) -> BijectionReport:
    simples = simple_ae_modules(a, bound)
    sweep = sweep_graded_simples(a, x, bound)
    failures: list[str] = []
    images = []
    for k, c in enumerate(simples):
        try:
            images.append(to_simple_graded(a, x, c.representative, bound))
        except SimplicityError as exc:
            failures.append(f"to_simple_graded on simple #{k}: {exc}")
            images.append(None)
    of_to = all(img is not None and is_isomorphic(of_simple_graded(img, x), c.representative, bound)
                for img, c in zip(images, simples))
    injective = all(
        images[i] is not None and images[j] is not None and not is_isomorphic(images[i], images[j], bound)
        for i in range(len(images)) for j in range(i + 1, len(images))
    )
    to_of = True
    surjective = True
    for k, c in enumerate(sweep):
        s = c.representative
        try:
            back = to_simple_graded(a, x, of_simple_graded(s, x), bound)
        except (SimplicityError, ValueError) as exc:
            failures.append(f"to_of on sweep class #{k}: {exc}")
            to_of = False
            continue
        if not is_isomorphic(back, s, bound):
            failures.append(f"sweep class #{k} does not round-trip")
            to_of = False
        if not any(img is not None and is_isomorphic(img, s, bound) for img in images):
            failures.append(f"sweep class #{k} is not hit by any simple A_e-module")
            surjective = False
    return BijectionReport(x, len(simples), len(sweep), of_to, to_of, injective, surjective, failures)


# -- maximal right ideals of the smash ring -----------------------------------

@dataclass
class TransportReport:
    x: int
    dim_b: int
    dim_dual: int
    maximal_ideals: int
    qualifying: int
    failures: list[tuple] = field(default_factory=list)
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "degree": self.x,
            "dimB": self.dim_b,
            "dim_dual": self.dim_dual,
            "maximal_ideals": self.maximal_ideals,
            "qualifying": self.qualifying,
            "failures": len(self.failures),
            "skipped": self.skipped,
        }


def maximal_ideal_transport_check(a: GradedAlgebra, x: int, bound: int | None = None) -> TransportReport:
    """For each maximal right ideal I of B with I Sigma* proper, I Sigma* is a maximal T-submodule."""
    return transport_checks(a, [x], bound)[0]


def transport_checks(a: GradedAlgebra, degrees=None, bound: int | None = None) -> list[TransportReport]:
    """:func:`maximal_ideal_transport_check` for several degrees, sharing B and its ideals."""
    from .smash import build_smash

    s = build_smash(a)
    p = s.p
    degrees = list(a.group.elements) if degrees is None else list(degrees)
    bound = el.default_bound() if bound is None else bound
    if p ** s.dim > bound:
        why = f"p^dim B = {p}^{s.dim} exceeds bound {bound}"
        return [TransportReport(x, s.dim, 0, 0, 0, skipped=why) for x in degrees]
    try:
        ideals = s.algebra.regular_module().maximal_submodules(bound)
    except EnumerationBoundError as exc:
        return [TransportReport(x, s.dim, 0, 0, 0, skipped=str(exc)) for x in degrees]
    return [_transport(s, ideals, x, bound) for x in degrees]


def _transport(s, ideals: list[Subspace], x: int, bound: int) -> TransportReport:
    p = s.p
    sd = sigma_dual(s, x)
    k = sd.dim
    flat = np.array([f.reshape(-1) for f in sd.basis], dtype=np.int64).reshape(k, -1)
    # right action of T = End_B(Sigma) on Sigma*: sigma . t = t then sigma
    t_ops = [el.row_coords(flat, np.array([el.mat_mul(t, f, p).reshape(-1) for f in sd.basis]), p)
             for t in module_hom(sd.sigma, sd.sigma)]
    try:
        t_subs = invariant_subspaces(t_ops, k, p, bound)
    except EnumerationBoundError as exc:
        return TransportReport(x, s.dim, k, len(ideals), 0, skipped=str(exc))

    def t_closed(space: Subspace) -> bool:
        return all(space.contains(row) for op in t_ops for row in el.mat_mul(space.basis, op, p))

    qualifying = 0
    failures = []
    for n, ideal in enumerate(ideals):
        rows = []
        for b in ideal.basis:
            op = sum((int(c) * sd.left_b[j] for j, c in enumerate(b) if c), el.zeros(k, k)) % p
            rows.append(op)
        i_dual = Subspace.span(np.vstack(rows) if rows else el.zeros(0, k), k, p)
        if i_dual.dim == k:
            continue
        qualifying += 1
        if not t_closed(i_dual):
            failures.append(("not_T_submodule", n))
            continue
        if any(u.dim > i_dual.dim and u.dim < k and u.contains(i_dual) for u in t_subs):
            failures.append(("not_maximal", n))
    return TransportReport(x, s.dim, k, len(ideals), qualifying, failures)
