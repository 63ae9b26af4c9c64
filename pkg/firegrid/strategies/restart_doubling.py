"""
Restart-doubling strategy

Builds a diamond encirclement at distance d = 2 * t0, where t0 is the first
turn with firefighters. If the fire ever burns a cell at distance >= d (the
ring broke at turn t), the ring is abandoned and a new one is started at
distance 2t. Firefighters go to the ring cells the fire would reach first.
Containment is guaranteed once some prefix of the budgets sums to 16N.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from firegrid.engine import GameHistory, GameState
from firegrid.lattice import ORIGIN, Cell, l1_distance, neighbors, ring_cells, ring_index
from firegrid.strategies.base import Strategy

logger = logging.getLogger(__name__)

RESTART_FACTOR = 2


@dataclass
class RingAttempt:
    distance: int
    started_turn: int
    placed: int = 0
    broken_turn: Optional[int] = None


def arrival_times(state: GameState, targets: List[Cell], radius: int) -> Dict[Cell, int]:
    """
    Turns until the fire reaches each target, by BFS from the fire front
    through unprotected cells inside the diamond of `radius`.

    Targets the fire cannot reach are left out.
    """
    pending = {c for c in targets if not state.is_blocked(c)}
    times: Dict[Cell, int] = {}
    seen = set(state.burning)
    queue = deque((c, 0) for c in sorted(state.active_frontier))
    while queue and pending:
        c, t = queue.popleft()
        for n in neighbors(c):
            if n in seen or n in state.protected or l1_distance(n, ORIGIN) > radius:
                continue
            seen.add(n)
            if n in pending:
                times[n] = t + 1
                pending.discard(n)
            queue.append((n, t + 1))
    return times


@dataclass
class RestartState:
    attempts: List[RingAttempt] = field(default_factory=list)

    @property
    def current(self) -> Optional[RingAttempt]:
        return self.attempts[-1] if self.attempts else None


class RestartDoubling(Strategy):
    strategy_id = "restart16"

    def __init__(self):
        self.rings = RestartState()

    @property
    def target_distance(self) -> Optional[int]:
        ring = self.rings.current
        return ring.distance if ring else None

    def _check_break(self, history: GameHistory) -> None:
        ring = self.rings.current
        if ring is None or not history.records:
            return
        last = history.records[-1]
        if any(l1_distance(c, ORIGIN) >= ring.distance for c in last.newly_burned):
            ring.broken_turn = last.turn
            new_distance = RESTART_FACTOR * last.turn
            logger.debug(f"⚠️ ring at distance {ring.distance} broke at turn {last.turn}; "
                         f"restarting at {new_distance}")
            self.rings.attempts.append(RingAttempt(new_distance, started_turn=history.turn))

    def decide(self, history: GameHistory, budget: int) -> List[Cell]:
        self._check_break(history)
        if self.rings.current is None:
            if budget == 0:
                return []
            self.rings.attempts.append(RingAttempt(RESTART_FACTOR * history.turn, started_turn=history.turn))
        if budget == 0:
            return []

        ring = self.rings.current
        state = history.state
        free = [c for c in ring_cells(ORIGIN, ring.distance) if not state.is_blocked(c)]
        if not free:
            return []
        times = arrival_times(state, free, ring.distance)
        unreachable = ring.distance * 4 + 1
        free.sort(key=lambda c: (times.get(c, unreachable), ring_index(c)))
        chosen = free[:budget]
        ring.placed += len(chosen)
        return chosen


def decide_restart16(history: GameHistory, budget: int, strategy: Optional[RestartDoubling] = None) -> List[Cell]:
    """Decision for one turn; pass the same strategy instance every turn of a game"""
    return (strategy or RestartDoubling()).decide(history, budget)
