"""
Loss accounting for restart-doubling runs

Rebuilds, from a trace alone, which target ring every firefighter went to
and which rings were abandoned, then checks the two budget bounds: the
firefighters lost on abandoned rings and the size of the final ring are
each at most 8M, where M is the first prefix length with sum >= 16M.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from firegrid.adversaries import smallest_N
from firegrid.errors import TraceMismatch
from firegrid.lattice import l1_distance
from firegrid.strategies.restart_doubling import RESTART_FACTOR

logger = logging.getLogger(__name__)

RESTART_ELL = 16


@dataclass
class RingRecord:
    distance: int
    placed: int = 0
    abandoned: int = 0
    broken_turn: Optional[int] = None


@dataclass
class LossLedger:
    rings: List[RingRecord] = field(default_factory=list)
    total_placed: int = 0
    total_abandoned: int = 0
    M: Optional[int] = None

    @property
    def final_ring_need(self) -> int:
        return 4 * self.rings[-1].distance if self.rings else 0

    @property
    def abandoned_within_bound(self) -> Optional[bool]:
        if self.M is None:
            return None
        return self.total_abandoned <= 8 * self.M

    @property
    def final_ring_within_bound(self) -> Optional[bool]:
        if self.M is None:
            return None
        return self.final_ring_need <= 8 * self.M

    def summary(self) -> str:
        rings = ", ".join(f"d={r.distance}:{r.placed}/{r.abandoned}" for r in self.rings)
        return (f"rings=[{rings}] placed={self.total_placed} abandoned={self.total_abandoned} "
                f"M={self.M} final_need={self.final_ring_need}")


def loss_accounting(trace, budgets: Optional[Sequence[int]] = None) -> LossLedger:
    """
    Build the ledger of a restart16 trace.

    Args:
        trace: Trace produced by the restart16 strategy
        budgets: full budget sequence when known; defaults to the budgets recorded in the trace

    Returns:
        LossLedger with per-ring placed/abandoned counts and M = smallest_N(budgets, 16)

    Raises:
        TraceMismatch: wrong strategy, or a placement off the current target ring
    """
    if trace.strategy_id != "restart16":
        raise TraceMismatch(f"loss accounting needs a restart16 trace, got strategy '{trace.strategy_id}'")

    ignition = trace.ignition
    ledger = LossLedger()
    ring: Optional[RingRecord] = None
    for record in trace.records:
        if ring is None and record.budget > 0:
            ring = RingRecord(RESTART_FACTOR * record.turn)
            ledger.rings.append(ring)
        for c in record.placements:
            if ring is None or l1_distance(c, ignition) != ring.distance:
                target = ring.distance if ring else None
                raise TraceMismatch(f"turn {record.turn}: placement {c} is off the target ring {target}")
            ring.placed += 1
            ledger.total_placed += 1
        if ring is not None and any(l1_distance(c, ignition) >= ring.distance for c in record.newly_burned):
            ring.broken_turn = record.turn
            ring.abandoned = ring.placed
            ledger.total_abandoned += ring.placed
            ring = RingRecord(RESTART_FACTOR * record.turn)
            ledger.rings.append(ring)

    if budgets is None:
        budgets = [r.budget for r in trace.records]
    ledger.M = smallest_N(budgets, RESTART_ELL)
    logger.debug(f"📊 loss ledger: {ledger.summary()}")
    return ledger
