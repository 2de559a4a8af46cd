from math import factorial

import pytest

from engelgraph import (
    InvalidParameter,
    alternating_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    is_abelian,
    symmetric_group,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_symmetric_orders(n):
    assert symmetric_group(n).order == factorial(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_alternating_orders(n):
    assert alternating_group(n).order == factorial(n) // 2


@pytest.mark.parametrize("n", [1, 2, 7, 12])
def test_cyclic_orders(n):
    G = cyclic_group(n)
    assert G.order == n
    assert is_abelian(G)


@pytest.mark.parametrize("order", [6, 8, 12, 30])
def test_dihedral_orders(order):
    assert dihedral_group(order).order == order


@pytest.mark.parametrize("order", [8, 12, 20])
def test_dicyclic_orders(order):
    assert dicyclic_group(order).order == order


def test_dihedral_relations(d12):
    s, r = d12.generators
    assert d12.order_of(s) == 6
    assert d12.order_of(r) == 2
    assert d12.conjugate(s, r) == d12.inv(s)


def test_dicyclic_relations(dic3):
    x, y = dic3.generators
    assert dic3.order_of(x) == 6
    assert dic3.mul(y, y) == dic3.power(x, 3)
    assert dic3.conjugate(x, y) == dic3.inv(x)
    # dicyclic groups have a unique involution (x^n)
    involutions = [
        g for g in range(12) if g != dic3.identity and dic3.mul(g, g) == dic3.identity
    ]
    assert involutions == [dic3.power(x, 3)]


@pytest.mark.parametrize(
    "build, bad",
    [
        (dihedral_group, 4),
        (dihedral_group, 7),
        (dihedral_group, 13),
        (dicyclic_group, 4),
        (dicyclic_group, 6),
        (dicyclic_group, 10),
        (symmetric_group, 0),
        (alternating_group, 1),
        (cyclic_group, 0),
    ],
)
def test_invalid_parameters(build, bad):
    with pytest.raises(InvalidParameter):
        build(bad)


def test_direct_product_order_and_disjoint_supports(s3, c6):
    G = direct_product(s3, c6)
    assert G.order == 36
    assert G.name == "S3xC6"
    # the S3 part moves points 1..3, the C6 part points 4..9
    for i in G.generators[:2]:
        assert all(point <= 3 for cycle in G.perm(i).cycles() for point in cycle)
    for i in G.generators[2:]:
        assert all(point >= 4 for cycle in G.perm(i).cycles() for point in cycle)


def test_direct_product_with_trivial_group(s3):
    trivial = cyclic_group(1)
    G = direct_product(trivial, s3)
    assert G.order == 6
    assert set(G.elements) == set(s3.elements)


def test_product_of_three(s3):
    c2 = cyclic_group(2)
    G = direct_product(direct_product(s3, c2), c2)
    assert G.order == 24
