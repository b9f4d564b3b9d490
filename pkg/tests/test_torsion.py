import numpy as np
import pytest

from gradalg import exactlin as el
from gradalg.algebra import RModule
from gradalg.coind import coind
from gradalg.exactlin import Subspace
from gradalg.fixtures import dual_numbers_trivial, group_algebra, trivially_graded, upper_triangular_z2
from gradalg.graded import (
    GradedModule,
    direct_sum,
    graded_contains,
    graded_equal,
    graded_quotient,
    make_shift,
    total_dim,
)
from gradalg.groups import cyclic_group
from gradalg.homs import graded_hom, is_isomorphic, regular_ae
from gradalg.simples import simple_ae_modules
from gradalg.torsion import (
    is_torsion,
    is_torsionfree,
    radical,
    radical_spaces,
    tensor_model,
    tensor_model_check,
    torsion_report,
)

from conftest import EVERYTHING
from oracles import hom_count_bf, log_p, orbit_closure, span_set


def pool(a):
    shifts = [make_shift(a, y) for y in a.group.elements]
    return shifts + [direct_sum(shifts[0], shifts[-1]).module, GradedModule.zero(a)]


def flat(spaces, m):
    rows = np.vstack([spaces[y].basis for y in m.group.elements])
    return Subspace.span(rows, m.dim, m.p) if m.dim else Subspace.zero(0, m.p)


# -- examples ------------------------------------------------------------------

def test_radical_zero_when_component_zero():
    a = trivially_graded(dual_numbers_trivial(), cyclic_group(2))
    m = make_shift(a, 0)
    assert not m.component(1)
    assert total_dim(radical_spaces(1, m)) == 0
    assert is_torsionfree(1, m)


def test_radical_of_own_shift_is_everything(any_alg):
    for x in any_alg.group.elements:
        m = make_shift(any_alg, x)
        assert total_dim(radical_spaces(x, m)) == m.dim
        assert is_torsion(x, m)


def test_gf2_z2_sum_of_shifts():
    a = group_algebra(cyclic_group(2), 2)
    m = direct_sum(make_shift(a, 0), make_shift(a, 1)).module
    rep = torsion_report(0, m)
    assert rep.radical.dim == m.dim == 4
    assert rep.as_dict() == {"degree": 0, "radical_dims": [2, 2], "is_torsion": True, "is_torsionfree": False}


@pytest.mark.parametrize("name", ["gf2_z2_group_algebra", "gf3_z2_group_algebra", "gf2_z3_group_algebra",
                                  "gf2_s3_group_algebra"])
def test_shifts_of_group_algebras_are_torsion(name):
    a = EVERYTHING[name]
    for x in a.group.elements:
        for y in a.group.elements:
            assert is_torsion(x, make_shift(a, y))


def test_zero_module_both(any_alg):
    z = GradedModule.zero(any_alg)
    for x in any_alg.group.elements:
        assert is_torsion(x, z) and is_torsionfree(x, z)


def test_upper_triangular_not_torsion():
    a = upper_triangular_z2()
    m = make_shift(a, 0)
    assert m.component(1)
    r, _ = radical(1, m)
    assert 0 < r.dim < m.dim
    # r_g([e]A) = E12 A = span{E12}
    assert flat(radical_spaces(1, m), m) == Subspace.span([a.basis_vector(1)], 3, 2)


# -- against brute force ---------------------------------------------------------

def test_radical_is_orbit_of_component(any_alg):
    a = any_alg
    for x in a.group.elements:
        for m in pool(a):
            if m.dim > 8 or a.p ** m.dim > 512:
                continue
            gens = [m.homogeneous(x, row) for row in el.identity(len(m.component(x)))]
            truth = orbit_closure(gens, m.acts, m.dim, a.p)
            assert span_set(flat(radical_spaces(x, m), m).basis, m.dim, a.p) == truth


def test_radical_is_trace_of_shift(any_alg):
    # r_x(M) is the sum of images of all graded maps [x]A -> M
    a = any_alg
    for x in a.group.elements:
        s = make_shift(a, x)
        for m in pool(a):
            hom = graded_hom(s, m)
            rows = [f for f in hom.basis]
            trace = Subspace.span(np.vstack(rows) if rows else el.zeros(0, m.dim), m.dim, a.p)
            assert trace == flat(radical_spaces(x, m), m)


def test_report_invariants(any_alg):
    for x in any_alg.group.elements:
        for m in pool(any_alg):
            rep = torsion_report(x, m)
            assert rep.is_torsionfree == (rep.radical.dim == 0) == (not m.component(x))
            assert rep.is_torsion == (rep.radical.dim == m.dim)
            assert rep.inclusion.is_valid() and rep.inclusion.is_injective()


def test_radical_axioms(any_alg):
    a = any_alg
    mods = pool(a)
    for x in a.group.elements:
        for m in mods:
            spaces = radical_spaces(x, m)
            r, _ = radical(x, m)
            assert total_dim(radical_spaces(x, r)) == r.dim
            quo, _ = graded_quotient(m, spaces)
            assert total_dim(radical_spaces(x, quo)) == 0
        for m in mods:
            for n in mods:
                rn = radical_spaces(x, n)
                for f in graded_hom(m, n).graded_maps():
                    image = {y: Subspace.span(el.mat_mul(s.basis, f.matrix, a.p), n.dim, a.p)
                             for y, s in radical_spaces(x, m).items()}
                    assert graded_contains(rn, image)


def test_radical_orthogonal_to_torsionfree(any_alg):
    # Hom(r_x M, F) = 0 whenever F_x = 0
    a = any_alg
    for x in a.group.elements:
        free = [m for m in pool(a) if not m.component(x)]
        for m in pool(a):
            r, _ = radical(x, m)
            for f in free:
                assert graded_hom(r, f).dim == 0


# -- tensor model ----------------------------------------------------------------

def tensor_dims_oracle(a, x, y_mod):
    """dim Y (x)_{A_e} A_z = dim Hom_{A_e}(Y, A_z^*), counted by enumeration."""
    g, p = a.group, a.p
    dims = []
    for w in g.elements:
        zidx = a.component(g.ldiv(x, w))
        # A_z^* as a right A_e-module: (f.c)(b) = f(c b), i.e. f -> f L_c^T
        ops = [a.algebra.left_mult[c][np.ix_(zidx, zidx)].T for c in a.ae_indices]
        count = hom_count_bf(y_mod.acts, ops, p, y_mod.dim, len(zidx))
        dims.append(log_p(count, p))
    return tuple(dims)


def test_tensor_dims_match_duality_oracle(any_alg):
    a = any_alg
    mods = [regular_ae(a)] + [c.representative for c in simple_ae_modules(a)]
    for x in a.group.elements:
        for y in mods:
            if y.dim * max(a.deg_dims) > 9:
                continue
            assert tensor_model(a, x, y).module.deg_dims == tensor_dims_oracle(a, x, y)


def test_tensor_with_ae_is_y(any_alg):
    a = any_alg
    for c in simple_ae_modules(a):
        tm = tensor_model(a, a.e, c.representative)
        assert len(tm.module.component(a.e)) == c.dim


def test_tensor_gf2_z2():
    a = group_algebra(cyclic_group(2), 2)
    y = simple_ae_modules(a)[0].representative
    tm = tensor_model(a, 0, y)
    assert tm.module.deg_dims == (1, 1)
    assert tm.to_coind.is_valid() and tm.to_coind.is_iso()


def test_tensor_zero(any_alg):
    z = RModule.zero(any_alg.ae)
    for x in any_alg.group.elements:
        tm = tensor_model(any_alg, x, z)
        assert tm.module.dim == 0


def test_tensor_onto_radical_everywhere(any_alg):
    a = any_alg
    for x in a.group.elements:
        for y in [regular_ae(a)] + [c.representative for c in simple_ae_modules(a)]:
            assert tensor_model_check(a, x, y).onto_radical


def test_tensor_map_is_graded_a_linear(any_alg):
    a = any_alg
    for x in a.group.elements:
        tm = tensor_model(a, x, regular_ae(a))
        assert tm.module.validate().ok and tm.to_coind.is_valid()


@pytest.mark.parametrize("name", ["gf2_z2_group_algebra", "gf3_z2_group_algebra", "gf2_z3_group_algebra",
                                  "m2_gf2_z2", "gf2_dual_numbers_trivial", "gf2_s3_group_algebra",
                                  "dual_numbers_over_z3"])
def test_tensor_iso_for_simples(name):
    a = EVERYTHING[name]
    for x in a.group.elements:
        for c in simple_ae_modules(a):
            assert tensor_model_check(a, x, c.representative).iso


def test_tensor_counterexample_upper_triangular():
    # Y: E11 acts by 1, E22 by 0.  Y (x) A_g = Y (x) span{E12} is 1-dimensional
    # because E11 E12 = E12, but Hom_{A_e}(A_g, Y) = 0 since E12 E22 = E12.
    a = upper_triangular_z2()
    simples = [c.representative for c in simple_ae_modules(a)]
    e11 = a.ae_indices.index(0)
    y = next(s for s in simples if s.acts[e11][0, 0] == 1)
    for x in a.group.elements:
        tm = tensor_model(a, x, y)
        chk = tensor_model_check(a, x, y)
        assert chk.onto_radical and not chk.injective
        assert tm.module.deg_dims == (1, 1)
        r = radical_spaces(x, coind(a, x, y).module)
        assert total_dim(r) == 1
    # the other simple behaves
    other = next(s for s in simples if s is not y)
    for x in a.group.elements:
        assert tensor_model_check(a, x, other).iso
