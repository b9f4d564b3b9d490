"""G-graded algebras, graded right modules and degree-preserving maps.

Every basis vector of a graded algebra or module carries a degree (a group
element index).  A module stores one full action matrix per algebra basis
element; the grading forces ``acts[i]`` to send degree ``y`` into degree
``y * deg(b_i)``, which :meth:`GradedModule.grading_witness` checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from . import exactlin as el
from .algebra import Algebra, ModuleAxiomError, RModule
from .exactlin import Subspace
from .groups import FiniteGroup


@dataclass
class Check:
    name: str
    passed: bool
    witness: tuple | None = None

    def as_dict(self) -> dict:
        d = {"check": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, name: str, witness: tuple | None) -> None:
        self.checks.append(Check(name, witness is None, witness))

    def as_dict(self) -> dict:
        return {"ok": self.ok, "checks": [c.as_dict() for c in self.checks]}


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    group: FiniteGroup
    algebra: Algebra
    degrees: tuple[int, ...]
    name: str = ""

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def unit(self) -> np.ndarray:
        return self.algebra.unit

    @property
    def e(self) -> int:
        return self.group.neutral()

    def component(self, x: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == x]

    @property
    def deg_dims(self) -> tuple[int, ...]:
        return tuple(len(self.component(x)) for x in self.group.elements)

    @cached_property
    def ae_indices(self) -> tuple[int, ...]:
        return tuple(self.component(self.e))

    @cached_property
    def ae(self) -> Algebra:
        """The degree-neutral subalgebra A_e, basis ordered as :attr:`ae_indices`."""
        return self.algebra.subalgebra(self.ae_indices)

    @property
    def ae_unit(self) -> np.ndarray:
        return self.unit[list(self.ae_indices)]

    def project(self, v: np.ndarray, x: int) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        idx = self.component(x)
        out[idx] = np.asarray(v, dtype=np.int64)[idx] % self.p
        return out

    def basis_vector(self, i: int) -> np.ndarray:
        return self.algebra.basis_vector(i)


def component_project(a: GradedAlgebra, v: np.ndarray, x: int) -> np.ndarray:
    return a.project(v, x)


def validate_algebra(a: GradedAlgebra) -> ValidationReport:
    report = ValidationReport()
    g = a.group
    bad_deg = next((i for i, d in enumerate(a.degrees) if not 0 <= d < g.order), None)
    report.add("degrees", None if bad_deg is None else (bad_deg,))
    if bad_deg is not None or len(a.degrees) != a.dim:
        return report
    grading = None
    for i, j, k in np.argwhere(a.algebra.sc % a.p != 0):
        if a.degrees[k] != g.mul(a.degrees[i], a.degrees[j]):
            grading = (int(i), int(j), int(k))
            break
    report.add("grading", grading)
    report.add("associativity", a.algebra.associativity_witness())
    off = np.flatnonzero(a.unit % a.p)
    stray = next((int(i) for i in off if a.degrees[i] != a.e), None)
    report.add("unit_in_Ae", None if stray is None else (stray,))
    report.add("unit", a.algebra.unit_witness())
    return report


@dataclass(frozen=True, eq=False)
class GradedModule:
    """Graded right module; ``degrees[r]`` is the degree of basis vector ``r``."""

    algebra: GradedAlgebra
    degrees: tuple[int, ...]
    acts: tuple[np.ndarray, ...]
    name: str = ""

    def __post_init__(self) -> None:
        n = len(self.degrees)
        acts = tuple(np.asarray(m, dtype=np.int64).reshape(n, n) % self.p for m in self.acts)
        if len(acts) != self.algebra.dim:
            raise ValueError("need one action matrix per algebra basis element")
        object.__setattr__(self, "acts", acts)
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @classmethod
    def zero(cls, a: GradedAlgebra) -> "GradedModule":
        return cls(a, (), tuple(el.zeros(0, 0) for _ in range(a.dim)))

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def group(self) -> FiniteGroup:
        return self.algebra.group

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def component(self, y: int) -> list[int]:
        return [r for r, d in enumerate(self.degrees) if d == y]

    @property
    def deg_dims(self) -> tuple[int, ...]:
        return tuple(len(self.component(y)) for y in self.group.elements)

    def component_space(self, y: int) -> Subspace:
        idx = self.component(y)
        basis = el.zeros(len(idx), self.dim)
        for k, r in enumerate(idx):
            basis[k, r] = 1
        return Subspace(self.dim, self.p, basis)

    def block(self, i: int, y: int) -> np.ndarray:
        """Action of b_i as a matrix M_y -> M_{y deg(b_i)}."""
        target = self.group.mul(y, self.algebra.degrees[i])
        return self.acts[i][np.ix_(self.component(y), self.component(target))]

    def act_by(self, v: np.ndarray) -> np.ndarray:
        return self.underlying().act_by(v)

    def underlying(self) -> RModule:
        return RModule(self.algebra.algebra, self.acts, self.dim)

    def support(self) -> list[int]:
        return [y for y in self.group.elements if self.component(y)]

    def grading_witness(self) -> tuple | None:
        g = self.group
        for i, a in enumerate(self.acts):
            z = self.algebra.degrees[i]
            for r, c in np.argwhere(a != 0):
                if self.degrees[c] != g.mul(self.degrees[r], z):
                    return (i, int(r), int(c))
        return None

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        bad = next((r for r, d in enumerate(self.degrees) if not 0 <= d < self.group.order), None)
        report.add("module_degrees", None if bad is None else (bad,))
        if bad is not None:
            return report
        report.add("module_grading", self.grading_witness())
        report.add("module_axioms", self.underlying().axiom_witness())
        return report

    def check(self) -> None:
        failure = self.validate().first_failure
        if failure is not None:
            raise ModuleAxiomError(f"{failure.name} fails: {failure.witness}", failure.witness or ())

    def homogeneous(self, y: int, coords: Sequence[int]) -> np.ndarray:
        """Ambient vector of the element of M_y with the given component coordinates."""
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.component(y)] = np.asarray(coords, dtype=np.int64) % self.p
        return v


@dataclass(frozen=True, eq=False)
class GradedMap:
    """Degree-preserving map; ``f(m) = m @ matrix``."""

    source: GradedModule
    target: GradedModule
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.int64).reshape(self.source.dim, self.target.dim)
        object.__setattr__(self, "matrix", m % self.source.p)

    @property
    def p(self) -> int:
        return self.source.p

    @classmethod
    def identity(cls, m: GradedModule) -> "GradedMap":
        return cls(m, m, el.identity(m.dim))

    @classmethod
    def zero(cls, m: GradedModule, n: GradedModule) -> "GradedMap":
        return cls(m, n, el.zeros(m.dim, n.dim))

    def block(self, y: int) -> np.ndarray:
        return self.matrix[np.ix_(self.source.component(y), self.target.component(y))]

    def then(self, other: "GradedMap") -> "GradedMap":
        """``other o self``."""
        return GradedMap(self.source, other.target, el.mat_mul(self.matrix, other.matrix, self.p))

    def degree_witness(self) -> tuple | None:
        for r, c in np.argwhere(self.matrix != 0):
            if self.source.degrees[r] != self.target.degrees[c]:
                return (int(r), int(c))
        return None

    def linearity_witness(self) -> tuple | None:
        p = self.p
        for i, (s, t) in enumerate(zip(self.source.acts, self.target.acts)):
            if not np.array_equal(el.mat_mul(s, self.matrix, p), el.mat_mul(self.matrix, t, p)):
                return (i,)
        return None

    def is_valid(self) -> bool:
        return self.degree_witness() is None and self.linearity_witness() is None

    def image(self) -> dict[int, Subspace]:
        return {
            y: Subspace.span(self.matrix[self.source.component(y)], self.target.dim, self.p)
            for y in self.source.group.elements
        }

    def rank(self) -> int:
        return el.rank(self.matrix, self.p)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()


GradedSubspace = Mapping[int, Subspace]


def graded_subspace_sum(a: GradedSubspace, b: GradedSubspace) -> dict[int, Subspace]:
    return {y: a[y].sum(b[y]) for y in a}


def graded_contains(a: GradedSubspace, b: GradedSubspace) -> bool:
    return all(a[y].contains(b[y]) for y in a)


def graded_equal(a: GradedSubspace, b: GradedSubspace) -> bool:
    return all(a[y] == b[y] for y in a)


def total_dim(spaces: GradedSubspace) -> int:
    return sum(s.dim for s in spaces.values())


def zero_subspace(m: GradedModule) -> dict[int, Subspace]:
    return {y: Subspace.zero(m.dim, m.p) for y in m.group.elements}


def full_subspace(m: GradedModule) -> dict[int, Subspace]:
    return {y: m.component_space(y) for y in m.group.elements}


def is_action_closed(m: GradedModule, spaces: GradedSubspace) -> bool:
    g = m.group
    for y, space in spaces.items():
        for i, a in enumerate(m.acts):
            target = spaces[g.mul(y, m.algebra.degrees[i])]
            if not all(target.contains(row) for row in el.mat_mul(space.basis, a, m.p)):
                return False
    return True


def graded_submodule(m: GradedModule, spaces: GradedSubspace) -> tuple[GradedModule, GradedMap]:
    """Submodule spanned by homogeneous subspaces already closed under the action."""
    if not is_action_closed(m, spaces):
        raise ModuleAxiomError("graded subspace is not closed under the action")
    g = m.group
    rows, degrees, offsets = [], [], {}
    for y in g.elements:
        offsets[y] = len(rows)
        rows.extend(spaces[y].basis)
        degrees.extend([y] * spaces[y].dim)
    n = len(rows)
    incl = np.array(rows, dtype=np.int64).reshape(n, m.dim)
    acts = []
    for i, a in enumerate(m.acts):
        act = el.zeros(n, n)
        for y in g.elements:
            t = g.mul(y, m.algebra.degrees[i])
            if spaces[y].dim and spaces[t].dim:
                coords = spaces[t].coords(el.mat_mul(spaces[y].basis, a, m.p))
                act[offsets[y]: offsets[y] + spaces[y].dim, offsets[t]: offsets[t] + spaces[t].dim] = coords
        acts.append(act)
    sub = GradedModule(m.algebra, tuple(degrees), tuple(acts))
    return sub, GradedMap(sub, m, incl)


def graded_quotient(m: GradedModule, spaces: GradedSubspace) -> tuple[GradedModule, GradedMap]:
    if not is_action_closed(m, spaces):
        raise ModuleAxiomError("graded subspace is not closed under the action")
    g, p = m.group, m.p
    reps_by_deg, degrees = {}, []
    for y in g.elements:
        reps = m.component_space(y).quotient_basis(spaces[y])
        reps_by_deg[y] = reps
        degrees.extend([y] * reps.shape[0])
    n = len(degrees)
    proj = el.zeros(m.dim, n)
    offset = 0
    for y in g.elements:
        idx = m.component(y)
        reps = reps_by_deg[y]
        q = reps.shape[0]
        if idx:
            square = np.vstack([reps, spaces[y].basis])[:, idx]
            inv = el.inverse(square, p)
            proj[np.ix_(idx, range(offset, offset + q))] = inv[:, :q]
        offset += q
    all_reps = np.vstack([reps_by_deg[y] for y in g.elements]) if n else el.zeros(0, m.dim)
    acts = tuple(el.mat_mul(el.mat_mul(all_reps, a, p), proj, p) for a in m.acts)
    quo = GradedModule(m.algebra, tuple(degrees), acts)
    return quo, GradedMap(m, quo, proj)


def closure(m: GradedModule, spaces: GradedSubspace) -> dict[int, Subspace]:
    """Smallest action-closed graded subspace containing ``spaces``."""
    g, p = m.group, m.p
    current = {y: spaces.get(y, Subspace.zero(m.dim, p)) for y in g.elements}
    changed = True
    while changed:
        changed = False
        for y in g.elements:
            if not current[y].dim:
                continue
            for i, a in enumerate(m.acts):
                t = g.mul(y, m.algebra.degrees[i])
                images = el.mat_mul(current[y].basis, a, p)
                if not all(current[t].contains(row) for row in images):
                    current[t] = current[t].sum(Subspace.span(images, m.dim, p))
                    changed = True
    return current


def homogeneous_spaces(m: GradedModule, vectors: Mapping[int, Sequence]) -> dict[int, Subspace]:
    out = zero_subspace(m)
    for y, vecs in vectors.items():
        space = Subspace.span(np.asarray(list(vecs), dtype=np.int64).reshape(-1, m.dim), m.dim, m.p)
        if not m.component_space(y).contains(space):
            raise ValueError(f"vectors given for degree {y} are not homogeneous of that degree")
        out[y] = out[y].sum(space)
    return out


def submodule_from_homogeneous(
    m: GradedModule, vectors: Mapping[int, Sequence]
) -> tuple[GradedModule, GradedMap]:
    """Smallest graded submodule containing homogeneous vectors (ambient coordinates)."""
    return graded_submodule(m, closure(m, homogeneous_spaces(m, vectors)))


def quotient_module(m: GradedModule, spaces: GradedSubspace) -> tuple[GradedModule, GradedMap]:
    return graded_quotient(m, spaces)


def make_shift(a: GradedAlgebra, x: int) -> GradedModule:
    """The shift [x]A: A_A with b_i placed in degree x * deg(b_i)."""
    g = a.group
    degrees = tuple(g.mul(x, d) for d in a.degrees)
    return GradedModule(a, degrees, a.algebra.right_mult, name=f"[{x}]A")


def regular_graded(a: GradedAlgebra) -> GradedModule:
    return make_shift(a, a.e)


@dataclass(frozen=True, eq=False)
class DirectSum:
    module: GradedModule
    injections: tuple[GradedMap, GradedMap]
    projections: tuple[GradedMap, GradedMap]


def direct_sum(m: GradedModule, n: GradedModule) -> DirectSum:
    if m.algebra is not n.algebra:
        raise ValueError("direct sum of modules over different algebras")
    acts = []
    for a, b in zip(m.acts, n.acts):
        blk = el.zeros(m.dim + n.dim, m.dim + n.dim)
        blk[: m.dim, : m.dim] = a
        blk[m.dim:, m.dim:] = b
        acts.append(blk)
    s = GradedModule(m.algebra, m.degrees + n.degrees, tuple(acts))
    eye = el.identity(m.dim + n.dim)
    inj = (GradedMap(m, s, eye[: m.dim]), GradedMap(n, s, eye[m.dim:]))
    proj = (GradedMap(s, m, eye[:, : m.dim]), GradedMap(s, n, eye[:, m.dim:]))
    return DirectSum(s, inj, proj)


def direct_sum_all(mods: Sequence[GradedModule]) -> GradedModule:
    out = mods[0]
    for m in mods[1:]:
        out = direct_sum(out, m).module
    return out
