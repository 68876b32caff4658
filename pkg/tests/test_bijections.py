import pytest

from pptoggle.bijections import (ToggleSchedule, one_leg_forward,
                                 one_leg_inverse, pp_to_tableau,
                                 spp_to_tableau, stabilization_index,
                                 tableau_to_pp, tableau_to_spp,
                                 two_leg_forward, two_leg_inverse)
from pptoggle.boundary import redistribute
from pptoggle.configurations import (HookTableau, OneLegRPP, OneLegSPP,
                                     PlanePartition, TwoLegSPP, cfg_weight)
from pptoggle.errors import ScheduleError
from pptoggle.halfint import HalfInt
from pptoggle.oracle import (enum_one_leg_rpp, enum_one_leg_spp,
                             enum_plane_partitions, enum_two_leg_spp)

FIG_SIGMA = OneLegSPP((2, 1), {(1, 3): 3, (2, 2): 4, (2, 3): 2,
                               (3, 1): 5, (3, 2): 3, (3, 3): 2})
FIG_TWOLEG = TwoLegSPP(((2, 2), (3, 1)),
                       {(1, 1): 3, (1, 2): 2, (2, 1): 3, (2, 2): 1,
                        (2, 3): 2, (3, 1): 1, (3, 2): 1, (3, 3): 2})


def test_weight_7_map():
    pi = PlanePartition.from_rows([[3, 1], [2, 1]])
    t = pp_to_tableau(pi)
    assert t.values == {(1, 1): 1, (1, 2): 1, (2, 1): 2}
    assert t.hook_weight() == 7


def test_empty_maps_to_empty():
    assert pp_to_tableau(PlanePartition()).values == {}
    assert tableau_to_pp(HookTableau("plane", ())).entries == {}


def test_single_cell_tableau_untoggles_to_column():
    for k in (1, 2, 5):
        pi = tableau_to_pp(HookTableau("plane", (), {(1, 1): k}))
        assert pi.entries == {(1, 1): k}


def test_untoggle_worked_example():
    t = HookTableau("plane", (), {(1, 1): 1, (2, 2): 2, (3, 1): 3})
    assert tableau_to_pp(t).rows() == [[4, 2], [3, 2], [3, 2]]


def test_plane_round_trip_small():
    for pi in enum_plane_partitions(4):
        t = pp_to_tableau(pi)
        assert t.hook_weight() == sum(pi.entries.values())
        assert tableau_to_pp(t) == pi


def test_one_leg_worked_example():
    t = spp_to_tableau(FIG_SIGMA)
    assert t.values == {(1, 3): 1, (2, 2): 1, (2, 3): 2, (3, 1): 2, (3, 2): 3}
    # the redistribution split of that tableau
    split = {cell: redistribute((2, 1), cell) for cell in t.values}
    in_shape = {tgt.cell: t.values[c] for c, tgt in split.items()
                if tgt.region == "in-lambda"}
    in_plane = {tgt.cell: t.values[c] for c, tgt in split.items()
                if tgt.region == "in-plane"}
    assert in_shape == {(1, 2): 1, (2, 1): 2}
    assert in_plane == {(1, 1): 1, (2, 2): 2, (3, 1): 3}

    rho, pi = one_leg_forward(FIG_SIGMA)
    assert rho.entries == {(1, 2): 1, (2, 1): 2}
    assert pi.rows() == [[4, 2], [3, 2], [3, 2]]
    assert sum(rho.entries.values()) + sum(pi.entries.values()) == 19
    assert one_leg_inverse(rho, pi) == FIG_SIGMA


def test_one_leg_zero_maps_to_zeros():
    rho, pi = one_leg_forward(OneLegSPP((3, 1)))
    assert rho == OneLegRPP((3, 1)) and pi == PlanePartition()
    assert one_leg_inverse(rho, pi) == OneLegSPP((3, 1))


def test_one_leg_round_trip_small():
    for sigma in enum_one_leg_spp((2, 1), 5):
        rho, pi = one_leg_forward(sigma)
        total = sum(rho.entries.values()) + sum(pi.entries.values())
        assert total == sum(sigma.entries.values())
        assert one_leg_inverse(rho, pi) == sigma


def test_one_leg_inverse_direction_small():
    planes = enum_plane_partitions(3)
    for rho in enum_one_leg_rpp((2, 1), 3):
        for pi in planes:
            if sum(rho.entries.values()) + sum(pi.entries.values()) > 3:
                continue
            sigma = one_leg_inverse(rho, pi)
            assert one_leg_forward(sigma) == (rho, pi)


def test_spp_tableau_round_trip():
    for sigma in enum_one_leg_spp((1,), 4):
        t = spp_to_tableau(sigma)
        assert tableau_to_spp(t) == sigma


def test_schedules_agree():
    pi = PlanePartition.from_rows([[3, 2, 1], [2, 2], [1]])
    base = pp_to_tableau(pi).values
    for plan in (ToggleSchedule("lexicographic"),
                 ToggleSchedule("seeded", seed=5),
                 ToggleSchedule.parse("seeded:11")):
        assert pp_to_tableau(pi, plan).values == base


def test_explicit_schedule_validation():
    pi = PlanePartition.from_rows([[2, 1], [1]])
    bad = ToggleSchedule("explicit", cells=((2, 2), (1, 1)))
    with pytest.raises(ScheduleError):
        pp_to_tableau(pi, bad)


def test_schedule_parse_rejects_unknown():
    with pytest.raises(ScheduleError):
        ToggleSchedule.parse("sideways")


def test_stabilization_examples():
    assert stabilization_index(FIG_TWOLEG) == 3
    assert stabilization_index(TwoLegSPP(((2, 2), (3, 1)))) == 2
    assert stabilization_index(TwoLegSPP(((), ()))) == 1


def test_two_leg_worked_example():
    rho, pi = two_leg_forward(FIG_TWOLEG)
    assert pi.rows() == [[4, 3], [3, 1], [1, 1]]
    assert rho.legs == ((2, 2), (3, 1))
    assert rho.deficit == {(1, 1): 1, (1, 2): 1}
    assert cfg_weight(rho) == HalfInt.of(3)
    assert cfg_weight(rho) + sum(pi.entries.values()) == cfg_weight(FIG_TWOLEG)
    assert two_leg_inverse(rho, pi) == FIG_TWOLEG


def test_two_leg_minimal_maps_to_minimal():
    sigma = TwoLegSPP(((2,), (1, 1)))
    rho, pi = two_leg_forward(sigma)
    assert pi == PlanePartition()
    assert rho.deficit == {}
    assert two_leg_inverse(rho, pi) == sigma


def test_two_leg_round_trip_small():
    for sigma in enum_two_leg_spp(((1,), (1,)), 3):
        rho, pi = two_leg_forward(sigma)
        assert cfg_weight(rho) + sum(pi.entries.values()) == cfg_weight(sigma)
        assert two_leg_inverse(rho, pi) == sigma


def test_two_leg_inverse_direction_small():
    lam, mu = (1,), (1,)
    planes = enum_plane_partitions(2)
    from pptoggle.oracle import enum_two_leg_rpp
    for rho in enum_two_leg_rpp((lam, mu), 2):
        for pi in planes:
            sigma = two_leg_inverse(rho, pi)
            assert two_leg_forward(sigma) == (rho, pi)


def test_split_weight_consistency():
    # hook weight splits exactly across the redistribution targets
    for sigma in enum_one_leg_spp((2, 1), 4) + [FIG_SIGMA]:
        t = spp_to_tableau(sigma)
        lam = sigma.shape
        in_shape = in_plane = 0
        for cell, v in t.values.items():
            tgt = redistribute(lam, cell)
            h = t.cell_hook(cell)
            if tgt.region == "in-lambda":
                in_shape += v * h
            else:
                in_plane += v * h
        assert t.hook_weight() == in_shape + in_plane
        rho, pi = one_leg_forward(sigma)
        assert sum(rho.entries.values()) == in_shape
        assert sum(pi.entries.values()) == in_plane


def test_remnant_diagonals_stay_constant():
    # after the stabilised square is popped, popping a much larger square
    # leaves the near-centre diagonals unchanged
    from pptoggle.bijections import DEFAULT_SCHEDULE, ToggleGrid, _remnant_chain
    sigma = FIG_TWOLEG
    n = stabilization_index(sigma)

    def chain_at(width):
        grid = ToggleGrid((), base=sigma.at)
        for cell in DEFAULT_SCHEDULE.order((), width):
            grid.pop(*cell)
        return _remnant_chain(grid, width)

    small = chain_at(n)
    large = chain_at(3 * n)
    # the diagonals at a fixed distance from either window edge are frozen
    for k in range(n + 1):
        assert small[k] == large[k]
        assert small[2 * n - k] == large[6 * n - k]
    # and the middle has gone constant
    center = large[3 * n]
    assert all(p == center for p in large[2:6 * n - 1])


def test_two_leg_remnant_structure():
    from pptoggle.bijections import two_leg_remnant
    n = stabilization_index(FIG_TWOLEG)
    remnant, tab = two_leg_remnant(FIG_TWOLEG, n)
    assert remnant.width == n
    assert remnant.diagonal(-n - 7) == FIG_TWOLEG.legs[0]
    assert remnant.diagonal(n + 7) == FIG_TWOLEG.legs[1]
    assert remnant.center == (1, 1)
    # the popped tableau carries the plane-partition part of the weight
    assert tab.hook_weight() == 13
