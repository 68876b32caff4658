"""JSON encodings of the package's value types.

Partitions are arrays of ints, cells [row, col], half-integers objects with a
"doubled" field, series sorted [doubled_exponent, coefficient] pairs, and
configurations tagged objects with row-major sorted support triples.
"""

from __future__ import annotations

from .boundary import HookTarget
from .configurations import (HookTableau, OneLegRPP, OneLegSPP, PlanePartition,
                             TwoLegRPP, TwoLegSPP)
from .errors import DomainError
from .halfint import HalfInt
from .partitions import as_partition
from .series import TruncatedSeries


def _triples(entries: dict) -> list[list[int]]:
    return [[i, j, v] for (i, j), v in sorted(entries.items())]


def _from_triples(rows) -> dict:
    return {(int(i), int(j)): int(v) for i, j, v in rows}


def halfint_to_json(h: HalfInt) -> dict:
    return {"doubled": h.doubled}


def halfint_from_json(obj) -> HalfInt:
    return HalfInt(int(obj["doubled"]))


def series_to_json(s: TruncatedSeries) -> dict:
    return {"bound": {"doubled": s.bound2}, "terms": s.pairs()}


def series_from_json(obj) -> TruncatedSeries:
    return TruncatedSeries(int(obj["bound"]["doubled"]),
                           {int(e): int(c) for e, c in obj["terms"]})


def config_to_json(cfg) -> dict:
    if isinstance(cfg, PlanePartition):
        return {"type": "plane-partition", "legs": [],
                "entries": _triples(cfg.entries)}
    if isinstance(cfg, OneLegSPP):
        return {"type": "one-leg-spp", "legs": [list(cfg.shape)],
                "entries": _triples(cfg.entries)}
    if isinstance(cfg, OneLegRPP):
        return {"type": "one-leg-rpp", "legs": [list(cfg.shape)],
                "entries": _triples(cfg.entries)}
    if isinstance(cfg, TwoLegSPP):
        return {"type": "two-leg-spp",
                "legs": [list(cfg.legs[0]), list(cfg.legs[1])],
                "excess": _triples(cfg.excess)}
    if isinstance(cfg, TwoLegRPP):
        return {"type": "two-leg-rpp",
                "legs": [list(cfg.legs[0]), list(cfg.legs[1])],
                "deficit": _triples(cfg.deficit)}
    if isinstance(cfg, HookTableau):
        return {"type": "hook-tableau", "region": cfg.region,
                "legs": [list(cfg.shape)], "values": _triples(cfg.values)}
    raise DomainError(f"cannot serialise {type(cfg).__name__}")


def config_from_json(obj):
    kind = obj.get("type")
    legs = [as_partition(p) for p in obj.get("legs", [])]
    if kind == "plane-partition":
        return PlanePartition(_from_triples(obj.get("entries", [])))
    if kind == "one-leg-spp":
        return OneLegSPP(legs[0], _from_triples(obj.get("entries", [])))
    if kind == "one-leg-rpp":
        return OneLegRPP(legs[0], _from_triples(obj.get("entries", [])))
    if kind == "two-leg-spp":
        return TwoLegSPP((legs[0], legs[1]), _from_triples(obj.get("excess", [])))
    if kind == "two-leg-rpp":
        return TwoLegRPP((legs[0], legs[1]), _from_triples(obj.get("deficit", [])))
    if kind == "hook-tableau":
        return HookTableau(obj["region"], legs[0] if legs else (),
                           _from_triples(obj.get("values", [])))
    raise DomainError(f"unknown configuration type {kind!r}")


def target_to_json(t: HookTarget) -> dict:
    return t.to_json()


def target_from_json(obj) -> HookTarget:
    return HookTarget(obj["region"], tuple(obj["cell"]))
