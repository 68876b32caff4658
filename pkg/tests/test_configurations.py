import pytest

from pptoggle.configurations import (HookTableau, OneLegRPP, OneLegSPP,
                                     PlanePartition, TwoLegRPP, TwoLegSPP,
                                     cfg_weight, diagonal, minimal_config,
                                     minimal_weight, transpose)
from pptoggle.errors import DomainError
from pptoggle.halfint import HalfInt
from pptoggle.serialize import config_from_json, config_to_json

# the weight-31 grid: rows (5,4,3,3)/(4,4,2)/(2,1)/(2,1)
BIG_PP = PlanePartition.from_rows([[5, 4, 3, 3], [4, 4, 2], [2, 1], [2, 1]])

# weight-11 filling over the floor of columns (2,2) and rows (3,1)
SPP_11 = TwoLegSPP(((2, 2), (3, 1)),
                   {(1, 1): 2, (1, 2): 1, (2, 1): 3, (2, 2): 1, (2, 3): 1,
                    (3, 1): 1, (3, 3): 1})

# weight-7 tray with six boxes removed, columns (3,1) and rows (2,2)
RPP_7 = TwoLegRPP(((3, 1), (2, 2)),
                  {(0, 1): 1, (1, 1): 1, (1, 2): 1,
                   (2, 0): 1, (2, 1): 1, (2, 2): 1})


def test_plane_partition_weight_and_diagonals():
    assert cfg_weight(BIG_PP) == HalfInt.of(31)
    assert diagonal(BIG_PP, 0) == (5, 4)
    assert diagonal(BIG_PP, 1) == (4, 2)
    assert diagonal(BIG_PP, -1) == (4, 1)
    assert diagonal(BIG_PP, -2) == (2, 1)
    assert diagonal(BIG_PP, 9) == ()


def test_side_by_side_diagonal_placement():
    # a filling whose main diagonals realise the side-by-side placement
    pp = PlanePartition.from_rows([[5, 3, 2, 1], [3, 3, 2, 1],
                                   [2, 2, 1, 1], [1, 1, 1, 1]])
    assert diagonal(pp, 0) == (5, 3, 1, 1)
    assert diagonal(pp, 1) == (3, 2, 1)


def test_plane_partition_validation():
    with pytest.raises(DomainError):
        PlanePartition({(1, 2): 1})  # increases along the row
    with pytest.raises(DomainError):
        PlanePartition({(2, 1): 3})  # increases down the column
    with pytest.raises(DomainError):
        PlanePartition({(0, 1): 1})


def test_two_leg_spp_weights():
    assert TwoLegSPP(((2, 2), (3, 1))).excess_weight() == 0
    assert cfg_weight(SPP_11) == HalfInt.of(11)
    sigma16 = TwoLegSPP(((2, 2), (3, 1)),
                        {(1, 1): 3, (1, 2): 2, (2, 1): 3, (2, 2): 1,
                         (2, 3): 2, (3, 1): 1, (3, 2): 1, (3, 3): 2})
    assert cfg_weight(sigma16) == HalfInt.of(16)


def test_two_leg_rpp_weight():
    assert cfg_weight(RPP_7) == HalfInt.of(7)
    assert cfg_weight(TwoLegRPP(((3, 1), (2, 2)))) == HalfInt.of(1)


def test_two_leg_tail_diagonals():
    lam, mu = SPP_11.legs
    assert diagonal(SPP_11, 40) == mu
    assert diagonal(SPP_11, -40) == lam
    assert diagonal(RPP_7, 40) == RPP_7.legs[0]
    assert diagonal(RPP_7, -40) == RPP_7.legs[1]


def test_all_zero_configurations():
    assert cfg_weight(OneLegSPP((2, 1))) == HalfInt.of(0)
    assert cfg_weight(PlanePartition()) == HalfInt.of(0)


def test_minimal_config_examples():
    cfg, v0 = minimal_config("spp", ((2, 2), (3, 1)))
    assert v0 == HalfInt.of(1) and cfg.excess == {}
    cfg, w0 = minimal_config("rpp", ((3, 1), (2, 2)))
    assert w0 == HalfInt.of(1) and cfg.deficit == {}
    assert minimal_config("spp", ((), ()))[1] == HalfInt.of(0)
    # the one-leg shape read as a column leg starts at a half step
    assert minimal_weight("spp", ((1,), ())) == HalfInt(1)


def test_minimal_weight_matches_series_exponent():
    for kind in ("spp", "rpp"):
        for legs in (((2,), (1,)), ((1, 1), (2,)), ((), (1,))):
            assert minimal_config(kind, legs)[1] == minimal_weight(kind, legs)


def test_weight_of_minimal_equals_lowest_exponent():
    cfg, v0 = minimal_config("spp", ((2,), (1, 1)))
    assert cfg_weight(cfg) == v0


def test_transpose():
    flipped = transpose(RPP_7)
    assert flipped.legs == ((2, 2), (3, 1))
    assert transpose(flipped) == RPP_7
    assert cfg_weight(flipped) == cfg_weight(RPP_7)
    mini = TwoLegRPP(((3, 1), (2, 2)))
    assert transpose(mini) == TwoLegRPP(((2, 2), (3, 1)))


def test_reconstruction_round_trip():
    for cfg in (SPP_11, RPP_7):
        blob = config_to_json(cfg)
        assert config_from_json(blob) == cfg


def test_validation_rejects_bad_two_leg():
    with pytest.raises(DomainError):
        TwoLegSPP(((2,), (1,)), {(1, 1): 0})  # stored excess must be positive
    with pytest.raises(DomainError):
        # lone bump far from the legs breaks monotonicity
        TwoLegSPP(((2,), (1,)), {(4, 4): 1})
    with pytest.raises(DomainError):
        TwoLegRPP(((2,), (1,)), {(1, 1): 5})  # deficit below zero
    with pytest.raises(DomainError):
        TwoLegRPP(((2,), (1,)), {(0, 0): 1})  # off the bent domain


def test_tableau_weights():
    t = HookTableau("plane", (), {(1, 1): 1, (1, 2): 1, (2, 1): 2})
    assert t.hook_weight() == 1 + 2 + 4
    t2 = HookTableau("inside", (2, 1), {(1, 2): 1, (2, 1): 2})
    assert t2.hook_weight() == 3
    with pytest.raises(DomainError):
        HookTableau("inside", (2, 1), {(3, 3): 1})


def test_json_round_trip_all_kinds():
    samples = [BIG_PP, SPP_11, RPP_7,
               OneLegSPP((2, 1), {(1, 3): 2, (2, 2): 1}),
               OneLegRPP((2, 1), {(1, 2): 1, (2, 1): 1}),
               HookTableau("outside", (2, 1), {(1, 3): 4})]
    for cfg in samples:
        assert config_from_json(config_to_json(cfg)) == cfg
