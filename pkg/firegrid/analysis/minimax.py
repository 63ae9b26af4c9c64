"""
Bounded minimax search

Exhaustive check of whether ANY sequence of Player-1 placements, restricted
to a finite universe of cells around the ignition, can enclose the fire by a
given horizon against a fixed adversary.

Pruning:
    - enclosure: a state whose minimum barrier is 0 is a win
    - deficit: if the budgets still to come (when known) cannot pay for the
      minimum barrier, the state is lost
    - last budget: when no further firefighters arrive before the horizon,
      the state is won iff the minimum barrier fits in this turn's budget,
      so separating sets are never enumerated as raw subsets
    - symmetry: states equal up to the 8 lattice symmetries share a
      transposition entry
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, Hashable, Tuple, Union

from firegrid.adversaries import Adversary, parse_adversary
from firegrid.engine import GameHistory, GameState, new_game, play_turn
from firegrid.errors import ClipTooSmall, PreconditionViolated
from firegrid.lattice import ORIGIN, SYMMETRIES, diamond_cells, transform_cells
from firegrid.analysis.barrier import fire_enclosed, min_barrier

logger = logging.getLogger(__name__)

MAX_SEARCH_NODES = 200_000
SEARCH_DEADLINE_SECONDS = 300.0


class Verdict(str, Enum):
    CAN_CONTAIN = "CanContain"
    CANNOT_CONTAIN = "CannotContain"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SearchResult:
    verdict: Verdict
    universe_radius: int
    horizon: int
    adversary_id: str
    nodes: int
    memo_hits: int
    elapsed_seconds: float
    reason: str = ""

    def describe(self) -> str:
        line = (
            f"verdict={self.verdict.value} adversary={self.adversary_id} universe=diamond({self.universe_radius}) "
            f"horizon={self.horizon} nodes={self.nodes} memo_hits={self.memo_hits}"
        )
        if self.reason:
            line += f" reason={self.reason}"
        return line


class _GuardrailTripped(Exception):
    pass


def canonical_state(state: GameState) -> Tuple[Tuple, Tuple]:
    """Smallest image of (burning, protected) under the symmetries fixing the origin"""
    images = []
    for symmetry in SYMMETRIES:
        images.append((
            tuple(sorted(transform_cells(state.burning, symmetry))),
            tuple(sorted(transform_cells(state.protected, symmetry))),
        ))
    return min(images)


class MinimaxSearch:
    """One search run; holds the transposition memo and guardrail counters"""

    def __init__(
        self,
        adversary: Adversary,
        candidate_radius: int,
        horizon: int,
        max_nodes: int = MAX_SEARCH_NODES,
        deadline_seconds: float = SEARCH_DEADLINE_SECONDS,
    ):
        if horizon < 1:
            raise PreconditionViolated(f"horizon must be >= 1, got {horizon}")
        if candidate_radius < 1:
            raise PreconditionViolated(f"candidate radius must be >= 1, got {candidate_radius}")
        self.adversary = adversary
        self.radius = candidate_radius
        self.horizon = horizon
        self.max_nodes = max_nodes
        self.deadline_seconds = deadline_seconds
        self.universe = [c for c in diamond_cells(ORIGIN, candidate_radius) if c != ORIGIN]
        self.memo: Dict[Hashable, bool] = {}
        self.nodes = 0
        self.memo_hits = 0
        self._started = 0.0

    def run(self) -> SearchResult:
        self._started = time.monotonic()
        logger.info(f"🔍 minimax vs {self.adversary.adversary_id}: universe radius {self.radius}, horizon {self.horizon}")
        try:
            won = self._wins(GameHistory(state=new_game(ORIGIN)))
            verdict = Verdict.CAN_CONTAIN if won else Verdict.CANNOT_CONTAIN
            reason = ""
        except _GuardrailTripped as e:
            verdict = Verdict.INCONCLUSIVE
            reason = str(e)
            logger.warning(f"⚠️ minimax stopped early: {e}")
        elapsed = time.monotonic() - self._started
        logger.info(f"📊 minimax {verdict.value} after {self.nodes} nodes ({self.memo_hits} memo hits, {elapsed:.2f}s)")
        return SearchResult(
            verdict=verdict,
            universe_radius=self.radius,
            horizon=self.horizon,
            adversary_id=self.adversary.adversary_id,
            nodes=self.nodes,
            memo_hits=self.memo_hits,
            elapsed_seconds=elapsed,
            reason=reason,
        )

    def _guard(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _GuardrailTripped(f"node limit {self.max_nodes} exceeded")
        if time.monotonic() - self._started > self.deadline_seconds:
            raise _GuardrailTripped(f"deadline of {self.deadline_seconds}s exceeded")

    def _wins(self, history: GameHistory) -> bool:
        self._guard()
        state = history.state
        try:
            if fire_enclosed(state, self.radius):
                return True
        except ClipTooSmall:
            return False
        turn = history.turn
        if turn > self.horizon:
            return False
        barrier = min_barrier(state, self.radius)

        window = self.adversary.budget_window(history, self.horizon)
        if window is not None:
            if sum(window) < barrier:
                return False
            if not any(window[1:]):
                return window[0] >= barrier

        key = (turn, canonical_state(state), self.adversary.fingerprint(history))
        if key in self.memo:
            self.memo_hits += 1
            return self.memo[key]

        budget = self.adversary.next_budget(history)
        candidates = [c for c in self.universe if not state.is_blocked(c)]
        top = min(budget, len(candidates))
        sizes = range(top, -1, -1) if self.adversary.adaptive else (top,)

        result = False
        for size in sizes:
            for cells in combinations(candidates, size):
                child, record = play_turn(state, budget, cells)
                if not record.newly_burned:
                    result = True
                    break
                if self._wins(GameHistory(state=child, records=history.records + [record])):
                    result = True
                    break
            if result:
                break

        self.memo[key] = result
        return result


def bounded_minimax(
    adversary: Union[str, Adversary],
    candidate_radius: int,
    horizon: int,
    max_nodes: int = MAX_SEARCH_NODES,
    deadline_seconds: float = SEARCH_DEADLINE_SECONDS,
) -> SearchResult:
    """
    Decide whether Player 1 can enclose the fire within the universe by the horizon.

    Args:
        adversary: adversary instance or identifier; its fingerprint must be
            invariant under the lattice symmetries
        candidate_radius: placements are restricted to this diamond, which is
            also the clip for barrier computations
        horizon: last turn Player 1 may place
        max_nodes: node guardrail
        deadline_seconds: wall-clock guardrail

    Returns:
        SearchResult with CanContain, CannotContain, or Inconclusive when a
        guardrail trips
    """
    if isinstance(adversary, str):
        adversary = parse_adversary(adversary)
    return MinimaxSearch(adversary, candidate_radius, horizon, max_nodes, deadline_seconds).run()
