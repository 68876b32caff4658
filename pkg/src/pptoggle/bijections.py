"""Weight-preserving decompositions built from iterated diagonal toggles.

Forward maps empty a configuration corner by corner, recording each popped
value at the cell it left, which yields a hook-length-weighted tableau;
inverse maps push the recorded values back in exact reverse order. The
two-leg map additionally reverses the operator order on each side of the
emptied object (the palindromic pass) and transposes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .boundary import HookTarget, redistribute, redistribute_inverse
from .configurations import (HookTableau, OneLegRPP, OneLegSPP, PlanePartition,
                             TwoLegRPP, TwoLegSPP, transpose)
from .errors import DomainError, NonConvergenceError, ScheduleError
from .partitions import (Cell, Partition, as_partition, contains, interlaces,
                         part)
from .toggles import toggle_between, toggle_pop, toggle_push


@dataclass(frozen=True)
class ToggleSchedule:
    """Order in which corners are popped.

    Any order is allowed as long as each cell follows its upper and left
    neighbours; the output never depends on the choice. kinds: off-diagonal
    (the canonical order), lexicographic, seeded:<n>, or explicit cells.
    """

    kind: str = "off-diagonal"
    seed: int = 0
    cells: tuple[Cell, ...] | None = None

    @staticmethod
    def parse(text: str) -> "ToggleSchedule":
        if text in ("off-diagonal", "lexicographic"):
            return ToggleSchedule(text)
        if text.startswith("seeded:"):
            return ToggleSchedule("seeded", seed=int(text.split(":", 1)[1]))
        raise ScheduleError(f"unknown schedule {text!r}")

    def order(self, shape: Partition, size: int) -> list[Cell]:
        region = [(i, j) for i in range(1, size + 1)
                  for j in range(part(shape, i) + 1, size + 1)]
        if self.kind == "off-diagonal":
            return sorted(region, key=lambda c: (c[0] + c[1], c[0]))
        if self.kind == "lexicographic":
            return sorted(region)
        if self.kind == "seeded":
            return _random_linear_extension(shape, size, self.seed)
        if self.kind == "explicit":
            return list(self.cells or ())
        raise ScheduleError(f"unknown schedule kind {self.kind!r}")


def _random_linear_extension(shape: Partition, size: int, seed: int) -> list[Cell]:
    rng = random.Random(seed)
    extra = [0] * (size + 1)  # popped cells beyond the shape, per row
    total = sum(size - part(shape, i) for i in range(1, size + 1))
    order = []
    while len(order) < total:
        avail = []
        for i in range(1, size + 1):
            j = part(shape, i) + extra[i] + 1
            if j > size:
                continue
            if i == 1 or part(shape, i - 1) + extra[i - 1] >= j:
                avail.append((i, j))
        cell = avail[rng.randrange(len(avail))]
        order.append(cell)
        extra[cell[0]] += 1
    return order


DEFAULT_SCHEDULE = ToggleSchedule()


class ToggleGrid:
    """Mutable decreasing filling of the region outside `shape`, with a
    staircase of already-popped cells along the corner.

    Values not explicitly written come from `base` (zero for finite objects,
    the leg reconstruction for two-leg ones); writes always store explicitly,
    including zeros, so they shadow the base.
    """

    def __init__(self, shape: Partition = (), base=None, values=None):
        self.shape = shape
        self.base = base or (lambda i, j: 0)
        self.vals: dict[Cell, int] = dict(values or {})
        self.extra: dict[int, int] = {}  # popped cells beyond shape, per row

    def value(self, i: int, j: int) -> int:
        got = self.vals.get((i, j))
        return self.base(i, j) if got is None else got

    def frontier(self, i: int) -> int:
        """First unpopped column of row i."""
        return part(self.shape, i) + self.extra.get(i, 0) + 1

    def read_diag(self, i: int, j: int) -> Partition:
        out = []
        while True:
            v = self.value(i, j)
            if v == 0:
                break
            out.append(v)
            i, j = i + 1, j + 1
        return tuple(out)

    def write_diag(self, i: int, j: int, vals: Partition, pad: int):
        for k in range(max(len(vals), pad)):
            self.vals[(i + k, j + k)] = vals[k] if k < len(vals) else 0

    def pop(self, i: int, j: int) -> int:
        if j != self.frontier(i) or not (i == 1 or self.frontier(i - 1) > j):
            raise ScheduleError(f"cell {(i, j)} is not a poppable corner")
        above = self.read_diag(i, j + 1)
        below = self.read_diag(i + 1, j)
        nu = self.read_diag(i, j)
        toggled, n = toggle_pop(above, nu, below)
        pad = max(len(above), len(below), len(nu) - 1, len(toggled)) + 1
        self.write_diag(i + 1, j + 1, toggled, pad)
        self.vals.pop((i, j), None)
        self.extra[i] = self.extra.get(i, 0) + 1
        return n

    def push(self, i: int, j: int, n: int):
        if j != self.frontier(i) - 1 or self.extra.get(i, 0) < 1:
            raise ScheduleError(f"cell {(i, j)} is not pushable")
        if self.frontier(i + 1) > j:
            raise ScheduleError(f"cell below {(i, j)} is still popped")
        above = self.read_diag(i, j + 1)
        below = self.read_diag(i + 1, j)
        nu = self.read_diag(i + 1, j + 1)
        toggled = toggle_push(above, nu, below, n)
        pad = max(len(above), len(below), len(nu) + 1, len(toggled)) + 1
        self.write_diag(i, j, toggled, pad)
        self.extra[i] -= 1

    def nonzero(self) -> dict[Cell, int]:
        return {c: v for c, v in self.vals.items() if v}


# ---------------------------------------------------------------------------
# plane partitions and one-leg objects

def _pop_region(grid: ToggleGrid, shape: Partition, size: int,
                schedule: ToggleSchedule) -> dict[Cell, int]:
    values = {}
    for cell in schedule.order(shape, size):
        n = grid.pop(*cell)
        if n:
            values[cell] = n
    return values


def pp_to_tableau(pi: PlanePartition,
                  schedule: ToggleSchedule = DEFAULT_SCHEDULE) -> HookTableau:
    """Empty a plane partition corner by corner; the popped values, weighted
    by hook length, carry the full weight."""
    size = max([max(c) for c in pi.entries], default=0) + 1
    grid = ToggleGrid((), values=pi.entries)
    values = _pop_region(grid, (), size, schedule)
    if grid.nonzero():
        raise AssertionError("popping box did not exhaust the object")
    return HookTableau("plane", (), values)


def tableau_to_pp(t: HookTableau) -> PlanePartition:
    """Inverse of pp_to_tableau (pushes in reverse canonical order)."""
    if t.region != "plane":
        raise DomainError("expected a tableau on the full quadrant")
    size = max([max(c) for c in t.values], default=0)
    size = max(size, t.hook_weight()) + 1
    grid = ToggleGrid(())
    grid.extra = {i: size for i in range(1, size + 1)}
    for cell in reversed(DEFAULT_SCHEDULE.order((), size)):
        grid.push(*cell, t.values.get(cell, 0))
    return PlanePartition(grid.nonzero())


def spp_to_tableau(sigma: OneLegSPP,
                   schedule: ToggleSchedule = DEFAULT_SCHEDULE) -> HookTableau:
    lam = sigma.shape
    size = max([max(c) for c in sigma.entries] + [len(lam), part(lam, 1)],
               default=0) + 1
    grid = ToggleGrid(lam, values=sigma.entries)
    values = _pop_region(grid, lam, size, schedule)
    if grid.nonzero():
        raise AssertionError("popping box did not exhaust the object")
    return HookTableau("outside", lam, values)


def tableau_to_spp(t: HookTableau) -> OneLegSPP:
    if t.region != "outside":
        raise DomainError("expected a tableau outside a shape")
    lam = t.shape
    size = max([max(c) for c in t.values], default=0)
    size = max(size, t.hook_weight() + len(lam) + part(lam, 1)) + 1
    grid = ToggleGrid(lam)
    grid.extra = {i: size - part(lam, i) for i in range(1, size + 1)}
    for cell in reversed(DEFAULT_SCHEDULE.order(lam, size)):
        grid.push(*cell, t.values.get(cell, 0))
    return OneLegSPP(lam, grid.nonzero())


def _rect_complement(lam: Partition) -> Partition:
    """Complement of the diagram in its bounding rectangle, rotated 180°."""
    depth, width = len(lam), part(lam, 1)
    return as_partition([width - lam[depth - i] for i in range(1, depth + 1)])


def _rotate(cell: Cell, depth: int, width: int) -> Cell:
    i, j = cell
    return (depth + 1 - i, width + 1 - j)


def shape_tableau_to_rpp(lam: Partition, values: dict[Cell, int]) -> OneLegRPP:
    """Un-toggle a hook tableau on the shape itself into an increasing filling.

    The shape's hooks point down-right, so the tableau is rotated 180° into
    the complement's outside region (preserving hook lengths), un-toggled
    there, and rotated back.
    """
    lam = as_partition(lam)
    if not lam:
        if values:
            raise DomainError("tableau on the empty shape must be empty")
        return OneLegRPP((), {})
    depth, width = len(lam), lam[0]
    comp = _rect_complement(lam)
    rot = {_rotate(c, depth, width): v for c, v in values.items()}
    sig = tableau_to_spp(HookTableau("outside", comp, rot))
    entries = {}
    for c, v in sig.entries.items():
        cell = _rotate(c, depth, width)
        if not contains(lam, cell):
            raise AssertionError("rotated filling escaped the shape")
        entries[cell] = v
    return OneLegRPP(lam, entries)


def rpp_to_shape_tableau(rho: OneLegRPP,
                         schedule: ToggleSchedule = DEFAULT_SCHEDULE
                         ) -> dict[Cell, int]:
    lam = rho.shape
    if not lam:
        return {}
    depth, width = len(lam), lam[0]
    comp = _rect_complement(lam)
    rot_entries = {_rotate(c, depth, width): v for c, v in rho.entries.items()}
    t = spp_to_tableau(OneLegSPP(comp, rot_entries), schedule)
    return {_rotate(c, depth, width): v for c, v in t.values.items()}


def one_leg_forward(sigma: OneLegSPP,
                    schedule: ToggleSchedule = DEFAULT_SCHEDULE
                    ) -> tuple[OneLegRPP, PlanePartition]:
    """Decompose a one-leg SPP into an increasing filling of its shape plus a
    plane partition, with |sigma| = |rho| + |pi|."""
    lam = sigma.shape
    t = spp_to_tableau(sigma, schedule)
    in_shape: dict[Cell, int] = {}
    in_plane: dict[Cell, int] = {}
    for cell, v in t.values.items():
        tgt = redistribute(lam, cell)
        (in_shape if tgt.region == "in-lambda" else in_plane)[tgt.cell] = v
    pi = tableau_to_pp(HookTableau("plane", (), in_plane))
    rho = shape_tableau_to_rpp(lam, in_shape)
    return rho, pi


def one_leg_inverse(rho: OneLegRPP, pi: PlanePartition) -> OneLegSPP:
    lam = rho.shape
    outside: dict[Cell, int] = {}
    for cell, v in rpp_to_shape_tableau(rho).items():
        outside[redistribute_inverse(lam, HookTarget("in-lambda", cell))] = v
    for cell, v in pp_to_tableau(pi).values.items():
        outside[redistribute_inverse(lam, HookTarget("in-plane", cell))] = v
    return tableau_to_spp(HookTableau("outside", lam, outside))


# ---------------------------------------------------------------------------
# two-leg objects

def stabilization_index(sigma: TwoLegSPP, verify_margin: int | None = None) -> int:
    """Smallest N with: N >= both leg depths/widths' row counts, the filling
    minimal outside [1,N]^2, and further pops beyond [1,N]^2 all zero."""
    lam, mu = sigma.legs
    n = max(len(lam), len(mu), 1)
    for (i, j) in sigma.excess:
        n = max(n, i, j)
    while True:
        if _pops_settle(sigma, n, verify_margin if verify_margin is not None else n):
            return n
        n += 1


def _pops_settle(sigma: TwoLegSPP, n: int, margin: int) -> bool:
    grid = ToggleGrid((), base=sigma.at)
    for cell in DEFAULT_SCHEDULE.order((), n + margin):
        popped = grid.pop(*cell)
        if popped and max(cell) > n:
            return False
    return True


def _swap_same_sign(states: list, ops: list, p: int):
    assert ops[p][0] == ops[p + 1][0], "can only commute same-sign operators"
    left, mid, right = states[p], states[p + 1], states[p + 2]
    if interlaces(left, mid) and interlaces(mid, right):
        states[p + 1] = toggle_between(left, mid, right)
    elif interlaces(right, mid) and interlaces(mid, left):
        states[p + 1] = toggle_between(right, mid, left)
    else:
        raise AssertionError(f"chain not interlaced around slot {p + 1}")
    ops[p], ops[p + 1] = ops[p + 1], ops[p]


def _palindromic_passes(states: list, ops: list, width: int):
    """Reverse each same-sign block of the emptied word by adjacent swaps,
    lowest exponent first, toggling the slot between each swapped pair."""
    for tgt in range(width, 2 * width - 1):
        for p in range(2 * width - 2, tgt - 1, -1):
            _swap_same_sign(states, ops, p)
    for lim in range(width - 2, -1, -1):
        for p in range(lim + 1):
            _swap_same_sign(states, ops, p)


def _palindromic_passes_inverse(states: list, ops: list, width: int):
    for lim in range(width - 1):
        for p in range(lim, -1, -1):
            _swap_same_sign(states, ops, p)
    for tgt in range(2 * width - 2, width - 1, -1):
        for p in range(tgt, 2 * width - 1):
            _swap_same_sign(states, ops, p)


def _remnant_chain(grid: ToggleGrid, width: int) -> list[Partition]:
    chain = []
    for d in range(-width, width + 1):
        if d >= 0:
            chain.append(grid.read_diag(width - d + 1, width + 1))
        else:
            chain.append(grid.read_diag(width + 1, width + d + 1))
    return chain


@dataclass(frozen=True)
class TwoLegRemnant:
    """What is left of a two-leg filling once the stabilised square has been
    popped: a window of diagonals, flanked by the constant leg tails, with
    the centre partition repeating in between."""

    legs: tuple[Partition, Partition]
    window: tuple[Partition, ...]  # diagonals -width..width in order

    @property
    def width(self) -> int:
        return (len(self.window) - 1) // 2

    @property
    def center(self) -> Partition:
        return self.window[self.width]

    def diagonal(self, d: int) -> Partition:
        if d > self.width:
            return self.legs[1]
        if d < -self.width:
            return self.legs[0]
        return self.window[self.width + d]


def two_leg_remnant(sigma: TwoLegSPP, width: int
                    ) -> tuple[TwoLegRemnant, HookTableau]:
    """Pop the width-sized square off a two-leg filling; returns the remnant
    diagonals and the popped hook tableau."""
    lam, mu = sigma.legs
    grid = ToggleGrid((), base=sigma.at)
    tab = _pop_region(grid, (), width, DEFAULT_SCHEDULE)
    chain = _remnant_chain(grid, width)
    if chain[0] != lam or chain[-1] != mu:
        raise NonConvergenceError("pop window too small for the leg tails")
    return (TwoLegRemnant((lam, mu), tuple(chain)),
            HookTableau("plane", (), tab))


def _spp_word_ops(width: int) -> list:
    return ([(1, 2 * k + 1) for k in range(width)]
            + [(-1, 2 * (width - 1 - k) + 1) for k in range(width)])


def _rpp_from_chain(legs, chain: list[Partition], width: int) -> TwoLegRPP:
    lam, mu = legs  # lam indexes columns, mu rows

    def ceiling(i, j):
        top = part(lam, j) if j >= 1 else None
        side = part(mu, i) if i >= 1 else None
        if top is None:
            return side
        if side is None:
            return top
        return min(top, side)

    def val(i, j):
        d = j - i
        if abs(d) > width:
            return ceiling(i, j)
        nu = chain[width + d]
        return part(nu, j) if d >= 0 else part(nu, i)

    deficit = {}
    reach = width + max(len(lam), len(mu), part(lam, 1), part(mu, 1)) + 2
    for i in range(1 - reach, reach + 1):
        for j in range(1 - reach, reach + 1):
            if i < 1 and j < 1:
                continue
            c = ceiling(i, j)
            if not c:
                continue
            gap = c - val(i, j)
            if gap < 0:
                raise AssertionError(f"chain exceeds the ceiling at {(i, j)}")
            if gap:
                deficit[(i, j)] = gap
    return TwoLegRPP((lam, mu), deficit)


def _chain_from_rpp(rho: TwoLegRPP, width: int) -> list[Partition]:
    chain = []
    for d in range(-width, width + 1):
        vals = []
        k = 1
        while True:
            i, j = (k - d, k) if d >= 0 else (k, k + d)
            v = rho.at(i, j)
            if v == 0:
                break
            vals.append(v)
            k += 1
        chain.append(tuple(vals))
    return chain


def _two_leg_forward_at(sigma: TwoLegSPP, width: int
                        ) -> tuple[TwoLegRPP, PlanePartition]:
    lam, mu = sigma.legs
    remnant, tab = two_leg_remnant(sigma, width)
    pi = tableau_to_pp(tab)
    chain = list(remnant.window)
    ops = _spp_word_ops(width)
    _palindromic_passes(chain, ops, width)
    swapped = _rpp_from_chain((mu, lam), chain, width)
    return transpose(swapped), pi


def two_leg_forward(sigma: TwoLegSPP) -> tuple[TwoLegRPP, PlanePartition]:
    """Decompose a two-leg SPP into a two-leg RPP of the same shape plus a
    plane partition, with |sigma| = |rho| + |pi|.

    Pops the stabilised square into a tableau, reverses the remaining
    operator order palindromically on the eventually-constant diagonals, and
    transposes. The window is grown until the output stops changing.
    """
    width = stabilization_index(sigma) + 1
    prev = _two_leg_forward_at(sigma, width)
    for _ in range(4):
        cur = _two_leg_forward_at(sigma, width + 3)
        if cur == prev:
            return cur
        width *= 2
        prev = _two_leg_forward_at(sigma, width)
    raise NonConvergenceError("two-leg decomposition did not stabilise")


def _two_leg_inverse_at(rho: TwoLegRPP, pi: PlanePartition, width: int
                        ) -> TwoLegSPP:
    lam, mu = rho.legs
    swapped = transpose(rho)  # legs (mu, lam), as produced by the forward map
    chain = _chain_from_rpp(swapped, width)
    ops = ([(1, 2 * (width - 1 - k) + 1) for k in range(width)]
           + [(-1, 2 * k + 1) for k in range(width)])
    _palindromic_passes_inverse(chain, ops, width)
    if chain[0] != lam or chain[-1] != mu:
        raise NonConvergenceError("window too small for the leg tails")

    def remnant(i, j):
        d = j - i
        if d > width:
            return part(mu, i)
        if d < -width:
            return part(lam, j)
        nu = chain[width + d]
        return part(nu, j - width) if d >= 0 else part(nu, i - width)

    grid = ToggleGrid((), base=remnant)
    grid.extra = {i: width for i in range(1, width + 1)}
    t = pp_to_tableau(pi)
    for cell in reversed(DEFAULT_SCHEDULE.order((), width)):
        grid.push(*cell, t.values.get(cell, 0))
    excess = {}
    reach = width + max(len(lam), len(mu), part(lam, 1), part(mu, 1)) + 2
    for i in range(1, reach + 1):
        for j in range(1, reach + 1):
            gap = grid.value(i, j) - max(part(lam, j), part(mu, i))
            if gap < 0:
                raise AssertionError(f"filling under the floor at {(i, j)}")
            if gap:
                excess[(i, j)] = gap
    return TwoLegSPP((lam, mu), excess)


def two_leg_inverse(rho: TwoLegRPP, pi: PlanePartition) -> TwoLegSPP:
    lam, mu = rho.legs
    width = max([len(lam), len(mu), part(lam, 1), part(mu, 1), 1]
                + [abs(i) + abs(j) for (i, j) in rho.deficit]
                + [max(c) for c in pi.entries]) + 1
    prev = _two_leg_inverse_at(rho, pi, width)
    for _ in range(4):
        cur = _two_leg_inverse_at(rho, pi, width + 3)
        if cur == prev:
            return cur
        width *= 2
        prev = _two_leg_inverse_at(rho, pi, width)
    raise NonConvergenceError("two-leg inverse did not stabilise")
