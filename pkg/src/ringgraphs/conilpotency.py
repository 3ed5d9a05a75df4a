"""Conilpotent elements relative to an ideal and their least exponents.

An element x is conilpotent relative to J when, for some exponent k,
1 - x lies outside x^k R + J and x^k lies outside R(1 - x) + J. The least
such k is the element's conilpotency index; the ring's index is the max
over its conilpotent elements (undefined when there are none).

The exponent search stops at preperiod + period of the power-ideal
trajectory: past that point both the ideal x^k R + J and the membership
class of x^k repeat earlier values, so no new witness can appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import level_context
from .ideals import IdealSet, ideal_sum
from .rings import Ring


@dataclass(frozen=True)
class ConilpotencyRecord:
    element: int
    is_conilpotent: bool
    index: Optional[int]
    search_bound: int


def conilpotency_record(ring: Ring, J: IdealSet, x: int) -> ConilpotencyRecord:
    """Scan k = 1 .. bound for the defining pair of non-memberships."""
    ctx = level_context(ring, J)
    traj = ctx.trajectory(x)
    bound = traj.preperiod + traj.period
    one_minus_x = ring.sub(ring.one, x)
    complement_ideal = ideal_sum(J, (one_minus_x,))
    for k in range(1, bound + 1):
        power_ideal = ctx.ideal_of_power(x, k)
        if power_ideal.contains(one_minus_x):
            continue
        if complement_ideal.contains(ring.pow(x, k)):
            continue
        return ConilpotencyRecord(x, True, k, bound)
    return ConilpotencyRecord(x, False, None, bound)


def ring_conilpotency_index(ring: Ring, J: IdealSet) -> Optional[int]:
    """Max index over conilpotent elements; None when no element qualifies."""
    best: Optional[int] = None
    for x in range(ring.size):
        rec = conilpotency_record(ring, J, x)
        if rec.is_conilpotent and (best is None or rec.index > best):
            best = rec.index
    return best
