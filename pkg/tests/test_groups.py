import itertools

import pytest

from gradalg.groups import (
    GroupAxiomError,
    NoInverse,
    NoNeutral,
    NotAssociative,
    cyclic_group,
    make_group,
    symmetric_group_s3,
    trivial_group,
)


def test_trivial():
    g = make_group([[0]])
    assert g.order == 1 and g.neutral() == 0 and g.inverse(0) == 0


def test_z2():
    g = make_group([[0, 1], [1, 0]])
    assert g.neutral() == 0
    assert [g.inverse(x) for x in g.elements] == [0, 1]


def test_z3_inverse():
    g = cyclic_group(3)
    assert g.inverse(1) == 2
    assert g.mul(g.neutral(), 2) == 2


@pytest.mark.parametrize("g", [trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                               symmetric_group_s3()])
def test_axioms_exhaustive(g):
    el = list(g.elements)
    for x, y, z in itertools.product(el, repeat=3):
        assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))
    for x in el:
        assert g.mul(x, g.inverse(x)) == g.neutral() == g.mul(g.inverse(x), x)
    for x, y in itertools.product(el, repeat=2):
        assert g.mul(x, g.ldiv(x, y)) == y
        assert g.mul(g.rdiv(y, x), x) == y


def test_s3_nonabelian_with_two_generators():
    g = symmetric_group_s3()
    assert g.order == 6
    assert any(g.mul(x, y) != g.mul(y, x) for x in g.elements for y in g.elements)
    # the subgroup generated by some pair is everything
    def generated(gens):
        seen = {g.neutral()}
        while True:
            new = {g.mul(a, b) for a in seen for b in gens} | seen
            if new == seen:
                return seen
            seen = new
    assert any(generated([a, b]) == set(g.elements) for a in g.elements for b in g.elements)


def test_non_associative_witness():
    # a Latin square with identity 0 that is not associative
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative) as exc:
        make_group(table)
    x, y, z = exc.value.witness
    t = table
    assert t[t[x][y]][z] != t[x][t[y][z]]


def test_no_neutral():
    with pytest.raises(NoNeutral):
        make_group([[1, 1], [1, 1]])


def test_no_inverse():
    with pytest.raises(NoInverse):
        make_group([[0, 1], [1, 1]])


def test_group_errors_share_base():
    for cls in (NotAssociative, NoNeutral, NoInverse):
        assert issubclass(cls, GroupAxiomError)
