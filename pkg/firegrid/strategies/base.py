"""
Shared strategy plumbing
"""

from typing import List

from firegrid.engine import GameHistory
from firegrid.lattice import Cell


class Strategy:
    """
    Player-1 policy. One instance per game; decide() is called once per turn
    with the history before placement and the budget just revealed.
    """

    strategy_id = "strategy"

    def decide(self, history: GameHistory, budget: int) -> List[Cell]:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.strategy_id}>"
