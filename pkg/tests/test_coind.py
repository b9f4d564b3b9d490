import itertools

import numpy as np
import pytest

from gradalg import exactlin as el
from gradalg.algebra import RModule
from gradalg.coind import (
    adjunction_transpose,
    coind,
    coind_map,
    compare_rat_coind,
    component_as_ae_module,
    counit_xi,
    dual_basis_ok,
    eta_natural,
    left_exact,
    sigma_dual,
    transpose_back,
    triangle_identities,
    unit_eta,
    xi_natural,
)
from gradalg.fixtures import dual_numbers_trivial, group_algebra, trivially_graded, upper_triangular_z2
from gradalg.graded import GradedModule, direct_sum, make_shift
from gradalg.groups import cyclic_group
from gradalg.homs import ae_hom, graded_hom, is_isomorphic, regular_ae, restrict_to_ae
from gradalg.simples import simple_ae_modules
from gradalg.smash import build_smash

from oracles import hom_count_bf, log_p


def ae_modules(a):
    return [RModule.zero(a.ae), regular_ae(a)] + [c.representative for c in simple_ae_modules(a)]


def graded_modules(a):
    shifts = [make_shift(a, y) for y in a.group.elements]
    return shifts + [direct_sum(shifts[0], shifts[-1]).module]


# -- examples ------------------------------------------------------------------

def test_trivially_graded_is_concentrated():
    a = trivially_graded(dual_numbers_trivial(), cyclic_group(3))
    for x in a.group.elements:
        for n in ae_modules(a):
            c = coind(a, x, n)
            assert c.module.deg_dims == tuple(n.dim if y == x else 0 for y in a.group.elements)


@pytest.mark.parametrize("p", [2, 3])
def test_group_algebra_dims(p):
    a = group_algebra(cyclic_group(2), p)
    one = simple_ae_modules(a)[0].representative
    assert coind(a, 0, one).module.deg_dims == (1, 1)


def test_degree_x_component_is_n(any_alg):
    a = any_alg
    for x in a.group.elements:
        for n in ae_modules(a):
            c = coind(a, x, n)
            ev = c.evaluation()
            assert ev.shape == (n.dim, n.dim)
            assert n.dim == 0 or el.is_invertible(ev, a.p)
            assert is_isomorphic(restrict_to_ae(c.module, x), n)


def test_component_dims_brute_force(fixture_name, alg):
    # dim Coind_x(N)_y = dim Hom_{A_e}(A_{y^-1 x}, N), counted by enumerating matrices
    g = alg.group
    for x in g.elements:
        for n in ae_modules(alg):
            c = coind(alg, x, n)
            for y in g.elements:
                src = component_as_ae_module(alg, g.ldiv(y, x))
                if src.dim * n.dim > 9:
                    continue
                count = hom_count_bf(src.acts, n.acts, alg.p, src.dim, n.dim)
                assert log_p(count, alg.p) == len(c.module.component(y))


def test_coind_is_module(any_alg):
    for x in any_alg.group.elements:
        for n in ae_modules(any_alg):
            assert coind(any_alg, x, n).module.validate().ok


# -- adjunction ----------------------------------------------------------------

def test_adjunction_dims_and_transposes(any_alg):
    a = any_alg
    for x in a.group.elements:
        for n in ae_modules(a):
            c = coind(a, x, n)
            for m in graded_modules(a):
                chk = adjunction_transpose(m, c)
                assert chk.ok, (x, m.deg_dims, n.dim)


def test_adjunction_dims_brute_force():
    a = upper_triangular_z2()
    for x in a.group.elements:
        for n in ae_modules(a):
            c = coind(a, x, n)
            for m in graded_modules(a)[:2]:
                mask = np.equal.outer(np.array(m.degrees), np.array(c.module.degrees))
                if mask.sum() > 12:
                    continue
                count = hom_count_bf(m.acts, c.module.acts, a.p, m.dim, c.module.dim, mask)
                mx = restrict_to_ae(m, x)
                count_ae = hom_count_bf(mx.acts, n.acts, a.p, mx.dim, n.dim)
                assert count == count_ae
                assert log_p(count, a.p) == graded_hom(m, c.module).dim


def test_hom_from_shift_into_coind_is_n(any_alg):
    a = any_alg
    for x in a.group.elements:
        for n in ae_modules(a):
            assert graded_hom(make_shift(a, x), coind(a, x, n).module).dim == n.dim


def test_transposed_maps_are_graded_maps(any_alg):
    a = any_alg
    for x in a.group.elements:
        n = regular_ae(a)
        c = coind(a, x, n)
        for m in graded_modules(a):
            for h in ae_hom(restrict_to_ae(m, x), n).basis:
                assert transpose_back(m, c, h).is_valid()


def test_triangle_identities(any_alg):
    a = any_alg
    for x in a.group.elements:
        for n in ae_modules(a):
            for m in graded_modules(a):
                assert triangle_identities(m, n, x) == (True, True)


def test_xi_bijective(any_alg):
    a = any_alg
    for x in a.group.elements:
        for n in ae_modules(a):
            xi = counit_xi(a, x, n)
            assert xi.bijective and xi.matrix.shape == (n.dim, n.dim)


def test_xi_gf3_z2_degree_g():
    a = group_algebra(cyclic_group(2), 3)
    y = simple_ae_modules(a)[0].representative
    xi = counit_xi(a, 1, y)
    assert xi.matrix.shape == (1, 1) and xi.matrix[0, 0] % 3 != 0


def test_eta_naturality(any_alg):
    a = any_alg
    mods = graded_modules(a)
    for x in a.group.elements:
        for m in mods:
            for n in mods:
                for f in graded_hom(m, n).graded_maps()[:3]:
                    assert eta_natural(f, x)


def test_xi_naturality(any_alg):
    a = any_alg
    ns = ae_modules(a)
    for x in a.group.elements:
        for y1 in ns:
            for y2 in ns:
                for h in ae_hom(y1, y2).basis:
                    assert xi_natural(a, x, h, y1, y2)


def test_eta_zero_when_component_vanishes():
    a = upper_triangular_z2()
    # [1]A restricted to degree 1 contains only E11, E22 - so use the quotient killing degree 1
    m = make_shift(a, 0)
    eta, c = unit_eta(GradedModule.zero(a), 0)
    assert eta.matrix.size == 0 and c.module.dim == 0
    # a module with M_x = 0: shift 0 of a trivially graded algebra at x != e
    t = trivially_graded(dual_numbers_trivial(), cyclic_group(2))
    s = make_shift(t, 0)
    eta, c = unit_eta(s, 1)
    assert c.module.dim == 0 and not eta.matrix.any()
    assert m.dim == 3


def test_eta_kernel_on_shift_brute_force(any_alg):
    # ker eta = {m : m_y . A_{y^-1 x} = 0 for every y}, found by enumerating M
    a = any_alg
    g, p = a.group, a.p
    if p ** a.dim > 4096:
        pytest.skip("too many vectors")
    for x in g.elements:
        s = make_shift(a, x)
        eta, _ = unit_eta(s, x)
        assert eta.is_valid()
        kernel = set()
        for v in itertools.product(range(p), repeat=s.dim):
            v = np.array(v, dtype=np.int64)
            dead = True
            for y in g.elements:
                vy = np.zeros_like(v)
                vy[s.component(y)] = v[s.component(y)]
                if any(el.mat_mul(vy, s.acts[b], p).any() for b in a.component(g.ldiv(y, x))):
                    dead = False
            if dead:
                kernel.add(tuple(v))
        assert len(kernel) == p ** (s.dim - eta.rank())
        assert all(not el.mat_mul(np.array(v), eta.matrix, p).any() for v in kernel)


def test_eta_not_injective_upper_triangular():
    # E12 . A_g = span{E12 E12} = 0, so eta kills E12 in [e]A
    a = upper_triangular_z2()
    eta, _ = unit_eta(make_shift(a, 0), 0)
    assert not eta.is_injective()
    assert not el.mat_mul(a.basis_vector(1), eta.matrix, 2).any()
    eta_g, _ = unit_eta(make_shift(a, 1), 1)
    assert not eta_g.is_injective()


@pytest.mark.parametrize("name", ["gf2_z2_group_algebra", "gf3_z2_group_algebra", "gf2_z3_group_algebra",
                                  "m2_gf2_z2", "gf2_dual_numbers_trivial"])
def test_eta_injective_on_shift(name):
    from conftest import EVERYTHING
    a = EVERYTHING[name]
    for x in a.group.elements:
        eta, _ = unit_eta(make_shift(a, x), x)
        assert eta.is_injective()


def test_left_exact(any_alg):
    a = any_alg
    r = regular_ae(a)
    for c in simple_ae_modules(a):
        s = c.representative
        # 0 -> N -> N + S -> S -> 0 (split)
        total = r.direct_sum(s)
        i = np.hstack([el.identity(r.dim), el.zeros(r.dim, s.dim)])
        q = np.vstack([el.zeros(r.dim, s.dim), el.identity(s.dim)])
        for x in a.group.elements:
            assert left_exact(a, x, (r, total, s), (i, q))


def test_left_exact_non_split():
    # 0 -> (t) -> A -> A/(t) -> 0 over the dual numbers
    a = dual_numbers_trivial()
    r = regular_ae(a)
    t = el.Subspace.span([[0, 1]], 2, 2)
    sub = r.submodule(t)
    quo, proj = r.quotient(t)
    for x in a.group.elements:
        assert left_exact(a, x, (sub, r, quo), (t.basis, proj))


def test_coind_map_functorial(any_alg):
    a = any_alg
    ns = ae_modules(a)
    for x in a.group.elements:
        for n in ns:
            c = coind(a, x, n)
            ident = coind_map(a, x, el.identity(n.dim), c, c)
            assert np.array_equal(ident.matrix, el.identity(c.module.dim))
            for m in ns:
                for h in ae_hom(n, m).basis[:2]:
                    assert coind_map(a, x, h, c, coind(a, x, m)).is_valid()


# -- comparison with the B-side construction ------------------------------------

@pytest.mark.parametrize("name", ["gf2_z2_group_algebra", "gf3_z2_group_algebra", "m2_gf2_z2",
                                  "upper_triangular_gf2_z2", "gf2_dual_numbers_trivial",
                                  "gf2_z3_group_algebra"])
def test_rat_hom_dual_matches_coind(name):
    from conftest import EVERYTHING
    a = EVERYTHING[name]
    s = build_smash(a)
    for x in a.group.elements:
        assert dual_basis_ok(sigma_dual(s, x), a.p)
        for n in ae_modules(a)[1:3]:
            cmp = compare_rat_coind(s, x, n)
            assert cmp.ok, cmp
