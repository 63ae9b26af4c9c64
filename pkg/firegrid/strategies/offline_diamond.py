"""
Offline diamond strategy

With the whole budget sequence known in advance, pick the smallest N whose
prefix sum reaches 4N and spend every firefighter on the ring at distance N.
"""

import logging
from typing import List, Optional, Sequence

from firegrid.adversaries import smallest_N
from firegrid.engine import GameHistory
from firegrid.errors import ConditionUnsatisfied
from firegrid.lattice import ORIGIN, Cell, ring_cells
from firegrid.strategies.base import Strategy

logger = logging.getLogger(__name__)


class OfflineDiamond(Strategy):
    strategy_id = "offline-diamond"

    def __init__(self, full_sequence: Sequence[int]):
        self.full_sequence = list(full_sequence)
        n = smallest_N(self.full_sequence, 4)
        if n is None:
            raise ConditionUnsatisfied(
                f"no N <= {len(self.full_sequence)} with prefix sum >= 4N for {self.full_sequence}"
            )
        self.ring_distance = n
        # every ring cell is reached at turn N, so cyclic order alone decides
        self.ring = ring_cells(ORIGIN, n)
        logger.debug(f"offline diamond: N={n}, {len(self.ring)} ring cells")

    def decide(self, history: GameHistory, budget: int) -> List[Cell]:
        state = history.state
        free = [c for c in self.ring if not state.is_blocked(c)]
        return free[:budget]


def decide_offline_diamond(history: GameHistory, full_sequence: Sequence[int], budget: Optional[int] = None) -> List[Cell]:
    """Stateless convenience wrapper around OfflineDiamond"""
    if budget is None:
        budget = full_sequence[history.turn - 1] if history.turn <= len(full_sequence) else 0
    return OfflineDiamond(full_sequence).decide(history, budget)
