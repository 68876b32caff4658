import pytest

from pptoggle.configurations import TwoLegSPP, cfg_weight
from pptoggle.errors import DomainError
from pptoggle.halfint import HalfInt
from pptoggle.oracle import (WeightCensus, census_series,
                             count_partitions_pentagonal, enum_configs,
                             enum_one_leg_rpp, enum_one_leg_spp,
                             enum_partitions, enum_plane_partitions,
                             enum_two_leg_rpp, enum_two_leg_spp)
from pptoggle.series import geometric, hook_product, macmahon_series


def brute_plane_partitions_in_box(side, max_weight):
    """Independent fill of a side x side x side box, cell order fixed."""
    cells = [(i, j) for i in range(1, side + 1) for j in range(1, side + 1)]

    def rec(idx, grid, left):
        if idx == len(cells):
            yield dict(grid)
            return
        i, j = cells[idx]
        up = grid.get((i - 1, j), 0) if i > 1 else max_weight
        west = grid.get((i, j - 1), 0) if j > 1 else max_weight
        cap = min(up, west, left)
        for v in range(cap + 1):
            if v:
                grid[(i, j)] = v
            yield from rec(idx + 1, grid, left - v)
            grid.pop((i, j), None)

    return list(rec(0, {}, max_weight))


def test_enum_partitions():
    assert enum_partitions(0) == [()]
    assert len(enum_partitions(4)) == 5
    assert len(enum_partitions(10)) == 42
    for n in range(13):
        assert len(enum_partitions(n)) == count_partitions_pentagonal(n)
    assert enum_partitions(3) == sorted(enum_partitions(3))


def test_enum_partitions_bound():
    with pytest.raises(DomainError):
        enum_partitions(41)


def test_plane_partition_counts_small():
    got = enum_plane_partitions(3)
    brute = brute_plane_partitions_in_box(3, 3)
    assert len(got) == len(brute)
    by_weight = {}
    for pp in got:
        w = sum(pp.entries.values())
        by_weight[w] = by_weight.get(w, 0) + 1
    assert [by_weight.get(k, 0) for k in range(4)] == [1, 1, 3, 6]


def test_one_leg_spp_census_matches_hook_product():
    census = census_series(WeightCensus.take("one-leg-spp", (2, 1), 5))
    assert census == hook_product("outside", (2, 1), 5)


def test_one_leg_rpp_census_matches_shape_hooks():
    census = census_series(WeightCensus.take("one-leg-rpp", (2, 1), 6))
    product = geometric(1, 6) * geometric(1, 6) * geometric(3, 6)
    assert census == product


def test_two_leg_minimal_only_config():
    sigmas = enum_two_leg_spp(((2, 2), (3, 1)), 0)
    assert sigmas == [TwoLegSPP(((2, 2), (3, 1)))]


def test_two_leg_counts_saturate():
    # extending the enumeration budget must not change the small counts
    small = {cfg_weight(s) for s in enum_two_leg_spp(((2,), (1,)), 3)}
    big = [s for s in enum_two_leg_spp(((2,), (1,)), 4)
           if s.excess_weight() <= 3]
    assert len(big) == len(enum_two_leg_spp(((2,), (1,)), 3))
    assert {cfg_weight(s) for s in big} == small
    rpps3 = enum_two_leg_rpp(((2,), (1,)), 3)
    rpps4 = [r for r in enum_two_leg_rpp(((2,), (1,)), 4)
             if r.deficit_weight() <= 3]
    assert len(rpps3) == len(rpps4)


def test_census_series_and_plane_identity():
    census = WeightCensus.take("plane", None, 6)
    assert census_series(census) == macmahon_series(6)
    empty = WeightCensus("plane", None, {}, HalfInt.of(4))
    assert census_series(empty).is_zero()


def test_enum_configs_dispatch():
    assert enum_configs("plane", None, 2) == enum_plane_partitions(2)
    assert enum_configs("one-leg-rpp", (1,), 2) == enum_one_leg_rpp((1,), 2)
    with pytest.raises(DomainError):
        enum_configs("nonsense", None, 2)


def test_enumeration_is_deterministic():
    a = enum_one_leg_spp((1,), 4)
    b = enum_one_leg_spp((1,), 4)
    assert a == b
