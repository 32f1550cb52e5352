import pytest

from bipartitions import (
    EMPTY,
    Bipartition,
    Dominance,
    Node,
    add_node,
    addable_nodes,
    arrow_targets,
    as_partition,
    conjugate,
    content,
    content_multiset,
    dominance,
    dominance_key,
    dominates,
    enumerate_bipartitions,
    format_bipartition,
    format_residues,
    parse_bipartition,
    partitions_of,
    remove_node,
    removable_nodes,
    residue_multiset,
    rim_hook_at,
    rim_hooks,
    strictly_dominates,
)
from parameters import INFINITY, HeckeTypeBError, OutOfScopeError, Params


def test_as_partition_strips_zeros():
    assert as_partition((2, 1, 0)) == (2, 1)
    assert as_partition([0]) == ()


@pytest.mark.parametrize("parts", [(1, 2), (2, -1), (1.5,)])
def test_as_partition_rejects(parts):
    with pytest.raises(HeckeTypeBError):
        as_partition(parts)


def test_conjugate_and_partitions_of():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


@pytest.mark.parametrize("text, expected", [
    ("4,2,1|2,2,1", Bipartition((4, 2, 1), (2, 2, 1))),
    ("|2,2", Bipartition((), (2, 2))),
    ("0|1", Bipartition((), (1,))),
    ("|", EMPTY),
])
def test_parse_bipartition(text, expected):
    assert parse_bipartition(text) == expected


@pytest.mark.parametrize("text", ["2,1", "1|2|3", "a|1", "1,2|"])
def test_parse_bipartition_rejects(text):
    with pytest.raises(HeckeTypeBError):
        parse_bipartition(text)


def test_format_and_display():
    b = Bipartition((), (2, 2))
    assert format_bipartition(b) == "|2,2"
    assert str(b) == "|2,2"
    assert b.display() == "((0),(2,2))"
    assert format_bipartition(parse_bipartition("4,2,1|2,2,1")) == "4,2,1|2,2,1"


def test_bipartition_basics():
    b = Bipartition((2, 1), (1,))
    assert b.size == 4
    assert b.component(2) == (1,)
    assert b.swapped() == Bipartition((1,), (2, 1))
    assert b.contains(Node(2, 1, 1))
    assert not b.contains(Node(2, 1, 2))
    assert b.nodes() == [Node(1, 1, 1), Node(1, 2, 1), Node(2, 1, 1), Node(1, 1, 2)]
    with pytest.raises(HeckeTypeBError):
        b.component(3)


def test_content_and_residues():
    assert content(Node(3, 1, 1), Params(5, 2)) == -2
    assert content(Node(1, 1, 2), Params(5, 2)) == 2
    b = Bipartition((1,), (1,))
    assert residue_multiset(b, Params(5, 1)) == ((0, 1), (1, 1))
    assert residue_multiset(Bipartition((1, 1), ()), Params(5, 1)) == ((0, 1), (4, 1))
    assert content_multiset(Bipartition((1, 1), ()), Params(5, 1)) == ((-1, 1), (0, 1))
    assert residue_multiset(Bipartition((1, 1), ()), Params(INFINITY, 1)) == ((-1, 1), (0, 1))
    assert format_residues(((0, 2), (1, 1), (4, 1))) == "{0,0,1,4}"


@pytest.mark.parametrize("a, b, expected", [
    (Bipartition((2,), ()), Bipartition((1,), (1,)), Dominance.STRICTLY_DOMINATES),
    (Bipartition((1, 1), ()), Bipartition((), (2,)), Dominance.STRICTLY_DOMINATES),
    (Bipartition((1, 1), ()), Bipartition((2,), ()), Dominance.STRICTLY_DOMINATED),
    (Bipartition((1,), (1, 1)), Bipartition((), (3,)), Dominance.INCOMPARABLE),
    (Bipartition((1,), (1,)), Bipartition((1,), (1,)), Dominance.EQUAL),
])
def test_dominance(a, b, expected):
    assert dominance(a, b) is expected


def test_dominance_needs_equal_sizes():
    with pytest.raises(HeckeTypeBError):
        dominance(Bipartition((1,), ()), Bipartition((2,), ()))


@pytest.mark.parametrize("n", [3, 4])
def test_dominance_key_is_a_linear_extension(n):
    members = enumerate_bipartitions(n)
    for a in members:
        assert dominates(a, a)
        assert not strictly_dominates(a, a)
        for b in members:
            if strictly_dominates(a, b):
                assert dominance_key(a) > dominance_key(b)


@pytest.mark.parametrize("n", range(1, 7))
def test_dominance_is_a_partial_order(n):
    members = enumerate_bipartitions(n)
    above = {a: {b for b in members if dominates(b, a)} for a in members}
    for a in members:
        for b in above[a]:
            if b != a:
                assert a not in above[b]
            assert above[b] <= above[a]


def test_enumeration():
    assert len(enumerate_bipartitions(0)) == 1
    assert len(enumerate_bipartitions(2)) == 5
    assert len(enumerate_bipartitions(3)) == 10
    members = enumerate_bipartitions(4)
    assert len(members) == 20
    assert len(set(members)) == 20
    assert members[0] == Bipartition((4,), ())
    assert members[-1] == Bipartition((), (1, 1, 1, 1))


def test_enumeration_bound():
    with pytest.raises(OutOfScopeError):
        enumerate_bipartitions(5, max_size=4)
    with pytest.raises(OutOfScopeError):
        enumerate_bipartitions(-1)


def test_addable_and_removable_nodes():
    params = Params(5, 1)
    assert addable_nodes(EMPTY, params) == [Node(1, 1, 1), Node(1, 1, 2)]
    assert addable_nodes(EMPTY, params, 1) == [Node(1, 1, 2)]
    b = Bipartition((2, 1), (1,))
    assert removable_nodes(b, params) == [Node(1, 2, 1), Node(2, 1, 1), Node(1, 1, 2)]
    assert removable_nodes(b, params, 4) == [Node(2, 1, 1)]


def test_add_and_remove_node():
    b = Bipartition((2, 1), (1,))
    assert add_node(b, Node(3, 1, 1)) == Bipartition((2, 1, 1), (1,))
    assert remove_node(b, Node(1, 1, 2)) == Bipartition((2, 1), ())
    with pytest.raises(HeckeTypeBError):
        add_node(b, Node(2, 3, 1))
    with pytest.raises(HeckeTypeBError):
        remove_node(b, Node(1, 1, 1))


def test_arrow_targets():
    params = Params(5, 0)
    assert arrow_targets(EMPTY, params, 0) == [Bipartition((1,), ()), Bipartition((), (1,))]
    assert arrow_targets(EMPTY, params, 1) == []


def test_rim_hooks():
    b = Bipartition((2, 1), ())
    full = rim_hook_at(b, Node(1, 1, 1))
    assert full.size == 3
    assert full.leg_length == 1
    assert full.foot == Node(2, 1, 1)
    assert full.remainder == EMPTY
    arm = rim_hook_at(b, Node(1, 2, 1))
    assert arm.cells == (Node(1, 2, 1),)
    assert arm.leg_length == 0
    assert arm.remainder == Bipartition((1, 1), ())
    assert len(rim_hooks(b)) == b.size
    with pytest.raises(HeckeTypeBError):
        rim_hook_at(b, Node(1, 1, 2))
