from collections import Counter

import pytest

from bipartitions import EMPTY, Bipartition, enumerate_bipartitions, partitions_of, rim_hooks
from maya_diagrams import (
    BiPathSeq,
    PathSeq,
    RegionCounts,
    bipartition_to_bipath,
    bipath_to_bipartition,
    check_identities,
    content_counts,
    hook_bound,
    hook_count,
    one_a_family,
    partition_to_path,
    path_hooks,
    path_to_partition,
    region_counts,
    render_bipath,
    unwrap_hook,
)
from parameters import HeckeTypeBError, Params


def test_partition_to_path():
    assert partition_to_path((1,)).render(-2, 4) == "...001|011..."
    path = partition_to_path((2, 1))
    assert path == PathSeq((1, 0, 1, 0), -1)
    assert partition_to_path(()) == PathSeq((), 1)


@pytest.mark.parametrize("n", range(0, 9))
def test_path_round_trip_and_hook_count(n):
    for parts in partitions_of(n):
        path = partition_to_path(parts)
        assert path.is_balanced()
        assert path_to_partition(path) == parts
        assert hook_count(path) == n
        assert len(path_hooks(path)) == n


def test_unbalanced_path_is_rejected():
    with pytest.raises(HeckeTypeBError):
        path_to_partition(PathSeq((1, 0), 2))


def test_from_bits_trims_and_validates():
    assert PathSeq.from_bits([0, 0, 1, 0, 1, 1], -3) == PathSeq((1, 0), -1)
    with pytest.raises(HeckeTypeBError):
        PathSeq.from_bits([2], 0)


def test_content_counts():
    assert content_counts(partition_to_path((2, 1))) == {-1: 1, 0: 1, 1: 1}
    assert content_counts(partition_to_path((3,))) == {0: 1, 1: 1, 2: 1}


def test_path_hooks_match_hook_lengths():
    hooks = path_hooks(partition_to_path((2, 1)))
    assert sorted(hook.length for hook in hooks) == [1, 1, 3]
    longest = max(hooks, key=lambda hook: hook.length)
    assert longest.leg_length == 1
    assert unwrap_hook(partition_to_path((2, 1)), longest) == partition_to_path(())


@pytest.mark.parametrize("n", range(1, 9))
def test_path_hooks_are_the_rim_hooks(n):
    for parts in partitions_of(n):
        path = partition_to_path(parts)
        from_path = Counter(
            (hook.length, hook.leg_length, path_to_partition(unwrap_hook(path, hook)))
            for hook in path_hooks(path)
        )
        from_diagram = Counter(
            (hook.size, hook.leg_length, hook.remainder.first)
            for hook in rim_hooks(Bipartition(parts, ()))
        )
        assert from_path == from_diagram


def test_empty_bipartition_columns():
    s = bipartition_to_bipath(EMPTY, Params(7, 2))
    assert s.symbol(0) == "C"
    assert [s.symbol(i) for i in (1, 2)] == ["B", "B"]
    assert s.symbol(3) == "D"
    assert region_counts(s) == RegionCounts(bM=2)


def test_region_counts_single_a():
    s = bipartition_to_bipath(Bipartition((1,), (1,)), Params(5, 1))
    assert s.columns() == [(0, "B"), (1, "A"), (2, "B")]
    assert region_counts(s) == RegionCounts(aM=1, bL=1, bR=1)
    assert s.positions("A") == [1]


def test_render_bipath():
    s = bipartition_to_bipath(Bipartition((1,), ()), Params(5, 1))
    top, bottom = render_bipath(s).split("\n")
    assert top.count("|") == 2
    assert bottom.count("|") == 2
    assert top.startswith("...")
    assert len(top) == len(bottom)


@pytest.mark.parametrize("n", range(0, 10))
@pytest.mark.parametrize("f", [0, 1, 2, 3])
def test_bipath_round_trip_and_identities(n, f):
    params = Params(9, f)
    for b in enumerate_bipartitions(n):
        s = bipartition_to_bipath(b, params)
        assert bipath_to_bipartition(s) == b
        rc = region_counts(s)
        report = check_identities(rc, params, n)
        assert report["top_bar_balance"]
        assert report["bottom_bar_balance"]
        assert report["middle_width"]
        assert report["b_excess"]
        assert hook_bound(rc) <= n
        if n <= 2 * f + 3:
            assert report["hook_bound"] is True
            assert report["a_at_most_one"] is True


@pytest.mark.parametrize("f", [0, 1, 2])
def test_two_a_columns_appear_at_2f_plus_4(f):
    params = Params(9, f)
    counts = [region_counts(bipartition_to_bipath(b, params)) for b in enumerate_bipartitions(2 * f + 4)]
    assert any(rc.total_a >= 2 for rc in counts)


def test_identities_skipped_above_regime():
    report = check_identities(RegionCounts(), Params(9, 0), 4)
    assert report["hook_bound"] is None
    assert report["a_at_most_one"] is None


def test_one_a_family():
    s = bipartition_to_bipath(Bipartition((1,), (1,)), Params(5, 1))
    assert one_a_family(s) == [
        Bipartition((), (1, 1)),
        Bipartition((1,), (1,)),
        Bipartition((2,), ()),
    ]


def test_one_a_family_needs_exactly_one_a():
    s = bipartition_to_bipath(EMPTY, Params(5, 1))
    with pytest.raises(HeckeTypeBError):
        one_a_family(s)


def test_columns_outside_span():
    s = BiPathSeq(partition_to_path(()), partition_to_path(()), 3)
    assert s.region(0) == "L"
    assert s.region(3) == "M"
    assert s.region(4) == "R"
    assert s.symbol(-10) == "C"
    assert s.symbol(10) == "D"
