"""Local toggle moves on a diagonal relative to its two neighbours.

Three variants, keyed by how the middle partition interlaces its neighbours:
a valley-to-valley involution, a peak toggle that pops off a nonnegative
integer, and its inverse that pushes one back on. Out-of-range parts read as
zero; the left neighbour of the first entry is unbounded.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError
from .partitions import Partition, as_partition, interlaces, part, weight


class ToggleResult(NamedTuple):
    toggled: Partition
    popped: int


def _require(cond: bool, lam, nu, mu, pattern: str):
    if not cond:
        raise DomainError(f"interlacing violation: need {pattern} for "
                          f"lam={lam} nu={nu} mu={mu}")


def toggle_between(lam: Partition, nu: Partition, mu: Partition) -> Partition:
    """Toggle nu where lam >- nu >- mu; an involution preserving both relations.

    Entry i moves to the opposite end of its interval
    [max(lam_{i+1}, mu_i), min(lam_i, mu_{i-1})], with mu_0 read as infinity.
    """
    _require(interlaces(lam, nu) and interlaces(nu, mu), lam, nu, mu,
             "lam >- nu >- mu")
    n = max(len(lam), len(nu), len(mu)) + 1
    out = []
    for i in range(1, n + 1):
        hi = part(lam, i) if i == 1 else min(part(lam, i), part(mu, i - 1))
        lo = max(part(lam, i + 1), part(mu, i))
        out.append(lo + hi - part(nu, i))
    return as_partition(out)


def toggle_pop(lam: Partition, nu: Partition, mu: Partition) -> ToggleResult:
    """Toggle a peak: lam -< nu >- mu becomes lam >- T(nu) -< mu plus a popped
    value n = nu_1 - max(lam_1, mu_1) >= 0.

    Weights satisfy |T(nu)| = |lam| + |mu| - |nu| + n.
    """
    _require(interlaces(nu, lam) and interlaces(nu, mu), lam, nu, mu,
             "lam -< nu >- mu")
    popped = part(nu, 1) - max(part(lam, 1), part(mu, 1))
    n = max(len(lam), len(nu), len(mu)) + 1
    out = [min(part(lam, m), part(mu, m))
           + max(part(lam, m + 1), part(mu, m + 1))
           - part(nu, m + 1)
           for m in range(1, n + 1)]
    toggled = as_partition(out)
    assert weight(toggled) == weight(lam) + weight(mu) - weight(nu) + popped
    return ToggleResult(toggled, popped)


def toggle_push(lam: Partition, nu: Partition, mu: Partition, n: int) -> Partition:
    """Inverse of toggle_pop: lam >- nu -< mu plus n >= 0 becomes the peak
    T with lam -< T >- mu, T_1 = n + max(lam_1, mu_1)."""
    if n < 0:
        raise DomainError(f"pushed value must be nonnegative: {n}")
    _require(interlaces(lam, nu) and interlaces(mu, nu), lam, nu, mu,
             "lam >- nu -< mu")
    size = max(len(lam), len(nu), len(mu)) + 1
    out = [n + max(part(lam, 1), part(mu, 1))]
    for m in range(2, size + 2):
        out.append(min(part(lam, m - 1), part(mu, m - 1))
                   + max(part(lam, m), part(mu, m))
                   - part(nu, m - 1))
    return as_partition(out)
