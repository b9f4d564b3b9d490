"""Small graded algebras used as test and CLI fixtures."""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

from .algebra import Algebra
from .graded import GradedAlgebra
from .groups import FiniteGroup, cyclic_group, symmetric_group_s3, trivial_group


def group_algebra(group: FiniteGroup, p: int, name: str = "") -> GradedAlgebra:
    """GF(p)[G] with basis G and the canonical grading deg(g) = g."""
    n = group.order
    sc = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            sc[i, j, group.mul(i, j)] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[group.neutral()] = 1
    return GradedAlgebra(group, Algebra(p, sc, unit), tuple(range(n)), name)


def _matrix_units_algebra(units: list[tuple[int, int]], degrees, group, p, name):
    """Span of the given matrix units E_ij, multiplied as matrices."""
    n = len(units)
    pos = {u: k for k, u in enumerate(units)}
    sc = np.zeros((n, n, n), dtype=np.int64)
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                sc[a, b, pos[(i, l)]] = 1
    unit = np.zeros(n, dtype=np.int64)
    for a, (i, j) in enumerate(units):
        if i == j:
            unit[a] = 1
    return GradedAlgebra(group, Algebra(p, sc, unit), tuple(degrees), name)


def matrix_algebra_z2(p: int = 2) -> GradedAlgebra:
    """M_2(GF(p)) graded by Z/2: diagonal in degree 0, antidiagonal in degree 1.

    Basis order: E11, E12, E21, E22.
    """
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return _matrix_units_algebra(units, (0, 1, 1, 0), cyclic_group(2), p, f"m2_gf{p}_z2")


def upper_triangular_z2(p: int = 2) -> GradedAlgebra:
    """Upper-triangular 2x2 matrices graded by Z/2 with E12 in degree 1.

    Basis order: E11, E12, E22.
    """
    units = [(0, 0), (0, 1), (1, 1)]
    return _matrix_units_algebra(units, (0, 1, 0), cyclic_group(2), p, f"upper_triangular_gf{p}_z2")


def dual_numbers_trivial(p: int = 2) -> GradedAlgebra:
    """GF(p)[t]/(t^2) graded by the trivial group. Basis order: 1, t."""
    sc = np.zeros((2, 2, 2), dtype=np.int64)
    sc[0, 0, 0] = sc[0, 1, 1] = sc[1, 0, 1] = 1
    unit = np.array([1, 0], dtype=np.int64)
    return GradedAlgebra(trivial_group(), Algebra(p, sc, unit), (0, 0), f"gf{p}_dual_numbers_trivial")


def trivially_graded(a: GradedAlgebra, group: FiniteGroup) -> GradedAlgebra:
    """Regrade an algebra by ``group`` with everything in degree e."""
    return GradedAlgebra(group, a.algebra, tuple(group.neutral() for _ in a.degrees), a.name + "_trivgraded")


def fixture_family() -> dict[str, GradedAlgebra]:
    """The six algebras every acceptance property is run over."""
    z2, z3 = cyclic_group(2), cyclic_group(3)
    return {
        "gf2_z2_group_algebra": group_algebra(z2, 2, "gf2_z2_group_algebra"),
        "gf3_z2_group_algebra": group_algebra(z2, 3, "gf3_z2_group_algebra"),
        "gf2_z3_group_algebra": group_algebra(z3, 2, "gf2_z3_group_algebra"),
        "m2_gf2_z2": matrix_algebra_z2(2),
        "upper_triangular_gf2_z2": upper_triangular_z2(2),
        "gf2_dual_numbers_trivial": dual_numbers_trivial(2),
    }


def extra_family() -> dict[str, GradedAlgebra]:
    """Non-abelian and partially supported gradings for wider property coverage."""
    s3 = symmetric_group_s3()
    return {
        "gf2_s3_group_algebra": group_algebra(s3, 2, "gf2_s3_group_algebra"),
        "gf3_z3_group_algebra": group_algebra(cyclic_group(3), 3, "gf3_z3_group_algebra"),
        "dual_numbers_over_z3": trivially_graded(dual_numbers_trivial(2), cyclic_group(3)),
    }


SHIPPED = tuple(fixture_family())


def shipped_path(name: str):
    return resources.files("gradalg") / "data" / f"{name}.json"


def load_shipped(name: str) -> dict:
    return json.loads(shipped_path(name).read_text())


def fixture_instance(name: str, a: GradedAlgebra | None = None):
    """Instance with the algebra, its regular graded module, A_e and the simple A_e-modules."""
    from .homs import regular_ae
    from .instance import Instance
    from .graded import regular_graded
    from .simples import simple_ae_modules

    a = a or {**fixture_family(), **extra_family()}[name]
    modules = {"regular": regular_graded(a), "regular_ae": regular_ae(a)}
    for k, c in enumerate(simple_ae_modules(a)):
        modules[f"simple_{k}"] = c.representative
    return Instance(name, a, modules, comments="generated by gradalg.fixtures.write_shipped")


def write_shipped(directory) -> list:
    from pathlib import Path

    from .instance import dump_instance

    out = []
    for name in SHIPPED:
        path = Path(directory) / f"{name}.json"
        dump_instance(fixture_instance(name), path)
        out.append(path)
    return out
