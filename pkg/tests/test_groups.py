import pytest
from hypothesis import given
from hypothesis import strategies as st

from ansular.groups import (GroupTableError, abelian_group, abelian_group_types, check_group_table,
                            dihedral_group, named_group, symmetric_group)


def test_group_orders():
    assert symmetric_group(3).order == 6
    assert dihedral_group(4).order == 8
    assert not symmetric_group(3).is_abelian
    assert abelian_group(2, 2).is_abelian


def test_abelian_types_up_to_eight():
    types = abelian_group_types(8)
    assert len(types) == 11  # 1,2,3,4,2x2,5,6,7,8,2x4,2x2x2
    assert len({abelian_group(*t).order for t in types if t != (1,)}) == 7


@pytest.mark.parametrize("orders", [(2,), (4,), (2, 2), (2, 4), (3, 3), (2, 2, 2)])
def test_cyclic_decomposition_matches_order(orders):
    g = abelian_group(*orders)
    dec = g.cyclic_decomposition
    assert sorted(n for _, n in dec) == sorted(orders)
    assert len(set(g.coordinates)) == g.order


@given(st.sampled_from(["s3", "d4", "z5"]), st.data())
def test_centralizer_and_inverse(name, data):
    g = named_group(name)
    x = data.draw(st.sampled_from(list(g.elements)))
    assert g.mul(x, g.inv(x)) == 0
    assert g.order % g.centralizer_size(x) == 0
    assert g.power(x, g.element_order(x)) == 0


def test_malformed_tables_rejected():
    with pytest.raises(GroupTableError):
        check_group_table([[0, 1], [1, 1]])
    with pytest.raises(GroupTableError):
        check_group_table([[1, 0], [0, 1]])
    with pytest.raises(KeyError):
        named_group("a5")
