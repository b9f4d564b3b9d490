import itertools

import numpy as np
import pytest

from gradalg import exactlin as el
from gradalg.algebra import RModule, invariant_subspaces, maximal_proper
from gradalg.exactlin import EnumerationBoundError, Subspace
from gradalg.fixtures import dual_numbers_trivial, group_algebra, matrix_algebra_z2, trivially_graded
from gradalg.graded import GradedModule, direct_sum, make_shift
from gradalg.groups import cyclic_group
from gradalg.homs import is_isomorphic, regular_ae, restrict_to_ae
from gradalg.simples import (
    SimplicityError,
    bijection_check,
    is_graded_simple,
    is_semisimple_over_ae,
    is_simple_module,
    jacobson_radical,
    maximal_graded_submodules,
    maximal_ideal_transport_check,
    of_simple_graded,
    simple_ae_modules,
    simple_modules,
    sweep_graded_simples,
    to_simple_graded,
    transport_checks,
)
from gradalg.smash import build_smash

from conftest import EVERYTHING, FAMILY
from oracles import orbit_closure


def gf2_z2():
    return group_algebra(cyclic_group(2), 2)


def max_submodules_bf(m: RModule):
    """Maximal submodules by filtering every subspace for closure."""
    closed = [s for s in el.enumerate_subspaces(m.dim, m.p) if s.dim < m.dim and m.is_submodule(s)]
    return [s for s in closed if not any(t.dim > s.dim and t.contains(s) for t in closed)]


def key(s):
    return (s.dim, tuple(s.basis.reshape(-1)))


# -- graded simplicity ---------------------------------------------------------

def test_regular_gf2_z2_is_graded_simple():
    assert is_graded_simple(make_shift(gf2_z2(), 0))


def test_double_is_not_simple(any_alg):
    s = make_shift(any_alg, any_alg.e)
    verdict = is_graded_simple(direct_sum(s, s).module)
    assert not verdict and verdict.witness is not None


def test_zero_not_simple(any_alg):
    assert not is_graded_simple(GradedModule.zero(any_alg))


def test_graded_simple_brute_force(any_alg):
    # every nonzero homogeneous vector generates, checked by orbit enumeration
    a = any_alg
    if a.p ** a.dim > 256:
        pytest.skip("orbit enumeration too large")
    for x in a.group.elements:
        m = make_shift(a, x)
        truth = True
        for y in m.support():
            for coords in itertools.product(range(a.p), repeat=len(m.component(y))):
                if any(coords):
                    orbit = orbit_closure([m.homogeneous(y, coords)], m.acts, m.dim, a.p)
                    truth = truth and len(orbit) == a.p ** m.dim
        assert bool(is_graded_simple(m)) == truth


def test_graded_simple_bound():
    with pytest.raises(EnumerationBoundError):
        is_graded_simple(make_shift(gf2_z2(), 0), bound=1)


# -- simple A_e-modules ----------------------------------------------------------

def test_simples_of_field():
    cs = simple_ae_modules(gf2_z2())
    assert [c.dim for c in cs] == [1]


def test_simples_of_two_point_product():
    cs = simple_ae_modules(matrix_algebra_z2())
    assert [c.dim for c in cs] == [1, 1]
    assert not is_isomorphic(cs[0].representative, cs[1].representative)


def test_simples_of_dual_numbers():
    cs = simple_ae_modules(dual_numbers_trivial())
    assert [c.dim for c in cs] == [1]
    # t acts by zero on the simple
    assert not cs[0].representative.acts[1].any()


def test_simples_are_simple_and_distinct(any_alg):
    cs = simple_ae_modules(any_alg)
    for c in cs:
        assert is_simple_module(c.representative)
        c.representative.check()
    for u, v in itertools.combinations(cs, 2):
        assert not is_isomorphic(u.representative, v.representative)


def test_simples_are_complete(any_alg):
    # every quotient by a maximal submodule (found by brute force) is listed
    reg = regular_ae(any_alg)
    cs = simple_ae_modules(any_alg)
    for m in max_submodules_bf(reg):
        q, _ = reg.quotient(m)
        assert sum(bool(is_isomorphic(q, c.representative)) for c in cs) == 1


def test_maximal_submodules_dual_method_vs_lattice(any_alg):
    a = any_alg
    mods = [regular_ae(a)] + [restrict_to_ae(make_shift(a, a.e), x) for x in a.group.elements]
    for m in mods:
        if m.dim == 0 or a.p ** m.dim > 2**12:
            continue
        fast = sorted(m.maximal_submodules(), key=key)
        lattice = sorted(maximal_proper(invariant_subspaces(m.acts, m.dim, m.p), m.dim), key=key)
        brute = sorted(max_submodules_bf(m), key=key)
        assert [key(s) for s in fast] == [key(s) for s in lattice] == [key(s) for s in brute]


def test_submodule_lattice_brute_force():
    m = regular_ae(matrix_algebra_z2())
    lattice = invariant_subspaces(m.acts, m.dim, m.p)
    brute = [s for s in el.enumerate_subspaces(m.dim, m.p) if m.is_submodule(s)]
    assert sorted(map(key, lattice)) == sorted(map(key, brute))
    assert len(lattice) == 4  # 0, two lines, everything


def test_simple_modules_bound():
    with pytest.raises(EnumerationBoundError):
        simple_modules(matrix_algebra_z2().ae, bound=1)


# -- Jacobson radical ------------------------------------------------------------

def test_jacobson_field():
    assert jacobson_radical(gf2_z2().ae).dim == 0


def test_jacobson_dual_numbers():
    a = dual_numbers_trivial()
    j = jacobson_radical(a.algebra)
    assert j == Subspace.span([[0, 1]], 2, 2)
    t = a.basis_vector(1)
    assert not a.algebra.mul(t, t).any()


def test_jacobson_product():
    assert jacobson_radical(matrix_algebra_z2().ae).dim == 0


def test_jacobson_upper_triangular_full():
    # J of upper-triangular 2x2 matrices is span{E12}
    from gradalg.fixtures import upper_triangular_z2
    a = upper_triangular_z2()
    assert jacobson_radical(a.algebra) == Subspace.span([a.basis_vector(1)], 3, 2)


# -- the two maps -----------------------------------------------------------------

def test_to_simple_gf2_z2():
    a = gf2_z2()
    y = simple_ae_modules(a)[0].representative
    s = to_simple_graded(a, 0, y)
    assert s.deg_dims == (1, 1) and is_isomorphic(s, make_shift(a, 0))


def test_to_simple_gf3_z2():
    a = group_algebra(cyclic_group(2), 3)
    y = simple_ae_modules(a)[0].representative
    s = to_simple_graded(a, 0, y)
    assert s.deg_dims == (1, 1) and is_isomorphic(s, make_shift(a, 0))


def test_to_simple_trivially_graded():
    a = trivially_graded(dual_numbers_trivial(), cyclic_group(3))
    y = simple_ae_modules(a)[0].representative
    for x in a.group.elements:
        s = to_simple_graded(a, x, y)
        assert s.deg_dims == tuple(1 if z == x else 0 for z in a.group.elements)


def test_to_simple_rejects_non_simple():
    a = matrix_algebra_z2()
    with pytest.raises(SimplicityError):
        to_simple_graded(a, 0, regular_ae(a))


def test_of_simple_gf2_z2():
    a = gf2_z2()
    s = make_shift(a, 0)
    for x in (0, 1):
        y = of_simple_graded(s, x)
        assert y.dim == 1 and np.array_equal(y.acts[0], el.identity(1))


def test_of_simple_outside_support():
    a = trivially_graded(dual_numbers_trivial(), cyclic_group(2))
    s = to_simple_graded(a, 0, simple_ae_modules(a)[0].representative)
    with pytest.raises(ValueError):
        of_simple_graded(s, 1)


def test_injective_on_simples(any_alg):
    a = any_alg
    if a.name == "gf3_z3_group_algebra":
        pytest.skip("sweep too slow")
    cs = simple_ae_modules(a)
    for x in a.group.elements:
        imgs = [to_simple_graded(a, x, c.representative) for c in cs]
        for u, v in itertools.combinations(imgs, 2):
            assert not is_isomorphic(u, v)


# -- sweep and bijection ---------------------------------------------------------

def test_maximal_graded_submodules_vs_lattice(fixture_name, alg):
    # the sweep's maximal graded submodules are exactly the maximal closed graded subspaces
    from gradalg.graded import is_action_closed
    for y in alg.group.elements:
        m = make_shift(alg, y)
        found = maximal_graded_submodules(m)
        for spaces in found:
            assert is_action_closed(m, spaces)
            q_total = sum(s.dim for s in spaces.values())
            assert q_total < m.dim


EXPECTED_COUNTS = {
    "gf2_z2_group_algebra": 1,
    "gf3_z2_group_algebra": 1,
    "gf2_z3_group_algebra": 1,
    "m2_gf2_z2": 2,
    "upper_triangular_gf2_z2": 2,
    "gf2_dual_numbers_trivial": 1,
}


def test_bijection(fixture_name, alg):
    for x in alg.group.elements:
        rep = bijection_check(alg, x)
        assert rep.ok, rep.failures
        assert rep.s_count == rep.sx_count == EXPECTED_COUNTS[fixture_name]


@pytest.mark.parametrize("name", ["gf2_s3_group_algebra", "dual_numbers_over_z3"])
def test_bijection_extra(name):
    a = EVERYTHING[name]
    for x in a.group.elements:
        assert bijection_check(a, x).ok


def test_bijection_report_shape():
    assert bijection_check(gf2_z2(), 0).as_dict() == {"S_count": 1, "Sx_count": 1, "roundtrips": "pass"}


def test_m2_graded_simples_are_rows():
    a = matrix_algebra_z2()
    found = sweep_graded_simples(a, 0)
    assert sorted(c.representative.deg_dims for c in found) == [(1, 1), (1, 1)]


def test_sweep_simples_semisimple(fixture_name, alg):
    for x in alg.group.elements:
        for c in sweep_graded_simples(alg, x):
            assert is_semisimple_over_ae(c.representative)


def test_semisimple_examples():
    a = dual_numbers_trivial()
    reg = make_shift(a, 0)
    assert not is_semisimple_over_ae(reg) and not is_graded_simple(reg)
    assert is_semisimple_over_ae(GradedModule.zero(a))


# -- maximal right ideals of B -----------------------------------------------------

def test_transport_gf2_z2():
    a = gf2_z2()
    for x in a.group.elements:
        rep = maximal_ideal_transport_check(a, x)
        assert rep.ok and rep.skipped is None
        assert rep.dim_b == 6 and rep.qualifying >= 1
        assert rep.qualifying <= rep.maximal_ideals


def test_maximal_right_ideals_of_b_brute_force():
    s = build_smash(gf2_z2())
    reg = s.algebra.regular_module()
    fast = sorted(reg.maximal_submodules(), key=key)
    brute = sorted(max_submodules_bf(reg), key=key)
    assert [key(u) for u in fast] == [key(u) for u in brute]


def test_transport_trivial_group():
    a = dual_numbers_trivial()
    assert all(r.ok and r.skipped is None for r in transport_checks(a))


def test_transport_all_fixtures(fixture_name, alg):
    for r in transport_checks(alg):
        assert r.ok, r.failures


def test_transport_skips_over_bound():
    reps = transport_checks(gf2_z2(), bound=2**5)
    assert all(r.skipped for r in reps)
