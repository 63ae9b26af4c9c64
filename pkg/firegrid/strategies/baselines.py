"""
Baseline strategies: do nothing, or protect random legal cells
"""

import logging
import random
from typing import List

from firegrid.engine import GameHistory
from firegrid.lattice import ORIGIN, Cell, diamond_cells
from firegrid.strategies.base import Strategy

logger = logging.getLogger(__name__)

# random placements are drawn from the diamond of radius turn + RANDOM_REACH
RANDOM_REACH = 3


class Idle(Strategy):
    strategy_id = "idle"

    def decide(self, history: GameHistory, budget: int) -> List[Cell]:
        return []


def decide_idle(history: GameHistory) -> List[Cell]:
    return []


class RandomLegal(Strategy):
    """Protects a random number (0..budget) of random free cells near the fire"""

    strategy_id = "random"

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = random.Random(seed)

    def decide(self, history: GameHistory, budget: int) -> List[Cell]:
        if budget == 0:
            return []
        state = history.state
        candidates = [c for c in diamond_cells(ORIGIN, history.turn + RANDOM_REACH) if not state.is_blocked(c)]
        count = self.rng.randint(0, min(budget, len(candidates)))
        logger.debug(f"turn {history.turn}: random placement of {count} of {budget}")
        return self.rng.sample(candidates, count)


def decide_random_legal(history: GameHistory, budget: int, seed: int) -> List[Cell]:
    """One turn of RandomLegal with a fresh generator; games should keep one instance instead"""
    return RandomLegal(seed).decide(history, budget)
