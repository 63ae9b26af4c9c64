"""
Incremental wall strategy

Online strategy for budget streams that are zero until some turn M and at
least one from then on. Starting at (M, 0) it grows two diagonal walls along
y = x - M and y = -x + M, one cell per turn, always extending the wall whose
next cell the fire would reach soonest. A turn with spare firefighters queues
them counterclockwise along the open part of the fence, starting next to the
upper wall, and the upper wall restarts from the end of the queue heading
diagonally outward. As soon as a budget covers every open fence cell the
encirclement is closed.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from firegrid.engine import GameHistory, GameState
from firegrid.lattice import ORIGIN, Cell, ccw_key, l1_distance, neighbors, outward_diagonal
from firegrid.strategies.base import Strategy

logger = logging.getLogger(__name__)

WAITING = "Waiting"
BUILDING = "Building"
CLOSED = "Closed"


@dataclass
class WallArm:
    head: Cell
    direction: Tuple[int, int]

    @property
    def next_cell(self) -> Cell:
        return self.head.shifted(*self.direction)

    def slack(self, turn: int) -> int:
        """Turns left before the fire can reach the next cell"""
        return l1_distance(self.next_cell, ORIGIN) - turn

    def advance(self) -> Cell:
        self.head = self.next_cell
        return self.head


@dataclass
class WallState:
    M: Optional[int] = None
    arms: Dict[str, WallArm] = field(default_factory=dict)
    perimeter_queue: List[Cell] = field(default_factory=list)
    phase: str = WAITING
    formula_index: int = 0

    @property
    def active_heads(self) -> List[Cell]:
        return [arm.head for arm in self.arms.values()]


def fence_order(cells) -> List[Cell]:
    """Counterclockwise from the positive x axis, nearer cells first on ties"""
    return sorted(cells, key=lambda c: (ccw_key(c), c))


def formula_cell(m: int, j: int) -> Cell:
    """(M + ceil(j/2), (-1)^j * floor(j/2))"""
    return Cell(m + (j + 1) // 2, (-1) ** j * (j // 2))


def wall_polygon(state: GameState) -> Tuple[Set[Cell], Set[Cell]]:
    """
    Polygon currently containing the fire.

    Returns:
        (region, boundary): boundary is every open cell plus every protected
        cell touching the fire; region is the fire together with its boundary
    """
    boundary = set(state.open_cells())
    for p in state.protected:
        if any(n in state.burning for n in neighbors(p)):
            boundary.add(p)
    return set(state.burning) | boundary, boundary


class IncrementalWall(Strategy):
    strategy_id = "wall"

    def __init__(self, literal_formula: bool = False):
        self.literal_formula = literal_formula
        self.wall = WallState()
        self._warned = False

    def _arm_ok(self, arm: WallArm, state: GameState, turn: int) -> bool:
        return not state.is_blocked(arm.next_cell) and arm.slack(turn) >= 0

    def decide(self, history: GameHistory, budget: int) -> List[Cell]:
        state, turn = history.state, history.turn
        if self.wall.phase == CLOSED or budget == 0:
            return []

        open_cells = fence_order(state.open_cells())
        if budget >= len(open_cells):
            self.wall.phase = CLOSED
            logger.debug(f"turn {turn}: closing the fence with {len(open_cells)} of {budget} firefighters")
            return open_cells

        if self.wall.phase == WAITING:
            return self._start(state, turn, budget, open_cells)
        if self.literal_formula:
            return self._literal(state, turn, budget, open_cells)
        if budget == 1:
            return self._extend_one(state, turn, open_cells)
        return self._surplus(state, turn, budget, open_cells, [])

    def _start(self, state: GameState, turn: int, budget: int, open_cells: List[Cell]) -> List[Cell]:
        m = turn
        root = Cell(m, 0)
        self.wall.M = m
        self.wall.phase = BUILDING
        self.wall.arms = {"A": WallArm(root, (1, 1)), "B": WallArm(root, (1, -1))}
        self.wall.formula_index = 1
        logger.debug(f"turn {turn}: walls start at {root}")
        if budget == 1:
            return [root]
        if self.literal_formula:
            return [root] + [c for c in open_cells if c != root][: budget - 1]
        return self._surplus(state, turn, budget, open_cells, [root])

    def _extend_one(self, state: GameState, turn: int, open_cells: List[Cell]) -> List[Cell]:
        a, b = self.wall.arms["A"], self.wall.arms["B"]
        arm = a if a.slack(turn) <= b.slack(turn) else b
        if self._arm_ok(arm, state, turn):
            return [arm.advance()]
        return self._fallback(turn, 1, open_cells)

    def _surplus(self, state: GameState, turn: int, budget: int, open_cells: List[Cell], placed: List[Cell]) -> List[Cell]:
        placed = list(placed)
        b = self.wall.arms["B"]
        if budget - len(placed) > 1 and self._arm_ok(b, state, turn) and b.slack(turn) <= 1:
            placed.append(b.advance())

        taken = set(placed)
        queue = [c for c in open_cells if c not in taken][: budget - len(placed)]
        self.wall.perimeter_queue = queue
        placed.extend(queue)
        if queue and l1_distance(queue[-1], ORIGIN) == turn:
            end = queue[-1]
            self.wall.arms["A"] = WallArm(end, outward_diagonal(end))
            logger.debug(f"turn {turn}: queued {len(queue)} cells, upper wall restarts at {end}")
        return placed

    def _literal(self, state: GameState, turn: int, budget: int, open_cells: List[Cell]) -> List[Cell]:
        placed = []
        cell = formula_cell(self.wall.M, self.wall.formula_index)
        self.wall.formula_index += 1
        if not state.is_blocked(cell):
            placed.append(cell)
        taken = set(placed)
        placed.extend([c for c in open_cells if c not in taken][: budget - len(placed)])
        return placed

    def _fallback(self, turn: int, budget: int, open_cells: List[Cell]) -> List[Cell]:
        if not self._warned:
            logger.warning(f"⚠️ turn {turn}: wall arm broken, placing on open fence cells")
            self._warned = True
        return open_cells[:budget]


def decide_incremental_wall(history: GameHistory, budget: int, strategy: Optional[IncrementalWall] = None) -> List[Cell]:
    """Decision for one turn; pass the same strategy instance every turn of a game"""
    return (strategy or IncrementalWall()).decide(history, budget)
