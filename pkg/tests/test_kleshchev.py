import pytest

from bipartitions import EMPTY, Bipartition, Node, enumerate_bipartitions
from jantzen import block_of
from kleshchev import good_node, is_kleshchev, kleshchev_members, normal_nodes
from parameters import INFINITY, Params


def test_empty_is_kleshchev():
    assert is_kleshchev(EMPTY, Params(5, 1)) == (True, [])


def test_normal_nodes_charge_zero():
    params = Params(5, 0)
    # the addable 0-node (1,1,2) lies below (1,1,1) with nothing in between
    assert normal_nodes(Bipartition((1,), ()), params, 0) == []
    assert normal_nodes(Bipartition((), (1,)), params, 0) == [Node(1, 1, 2)]
    assert normal_nodes(Bipartition((1,), (1,)), params, 0) == [Node(1, 1, 1), Node(1, 1, 2)]


def test_good_node():
    params = Params(5, 1)
    assert good_node(Bipartition((2,), ()), params, 1) is None
    assert good_node(Bipartition((1,), (1,)), params, 1) == Node(1, 1, 2)
    assert good_node(Bipartition((1,), (1,)), params, 0) is None


def test_witness():
    verdict, witness = is_kleshchev(Bipartition((1,), (1,)), Params(5, 1))
    assert verdict
    assert witness == [(1, Node(1, 1, 2)), (0, Node(1, 1, 1))]


@pytest.mark.parametrize("b, expected", [
    (Bipartition((), (1, 1)), True),
    (Bipartition((1,), (1,)), True),
    (Bipartition((2,), ()), False),
])
def test_one_a_block_labels(b, expected):
    assert is_kleshchev(b, Params(5, 1))[0] is expected


def test_charge_zero_examples():
    params = Params(5, 0)
    assert is_kleshchev(Bipartition((), (2, 2)), params)[0]
    assert not is_kleshchev(Bipartition((2, 2), ()), params)[0]


def test_kleshchev_members_keeps_block_order():
    params = Params(5, 1)
    block = block_of(Bipartition((1,), (1,)), params)
    assert kleshchev_members(block) == [Bipartition((1,), (1,)), Bipartition((), (1, 1))]


@pytest.mark.parametrize("n, count", [(1, 2), (2, 5), (3, 10)])
def test_far_apart_components_are_always_kleshchev(n, count):
    # contents of the two components never meet for n <= 3
    params = Params(INFINITY, 10)
    assert sum(is_kleshchev(b, params)[0] for b in enumerate_bipartitions(n)) == count


def test_witness_removes_nodes_down_to_empty():
    params = Params(7, 2)
    for b in enumerate_bipartitions(4):
        verdict, witness = is_kleshchev(b, params)
        if verdict:
            assert len(witness) == b.size
