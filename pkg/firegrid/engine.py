"""
Game engine for FIREGRID

Turn-by-turn semantics of the online firefighter game on the square lattice:
the adversary reveals a budget, the strategy protects at most that many
cells, then the fire spreads synchronously to every unprotected neighbour.

Games are played with the ignition normalized to the origin; run_game
translates records back to the caller's ignition cell.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from firegrid.errors import (
    BudgetExceeded,
    PlacementOnBurning,
    PlacementOnProtected,
    PreconditionViolated,
)
from firegrid.lattice import ORIGIN, Cell, neighbors, sorted_cells

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GameState:
    """
    Sparse game state.

    `frontier` holds the cells that burned in the last spread; cells adjacent
    to older burning cells are already burning or protected. States built by
    hand leave it unset and the whole burning set is used.
    """

    burning: FrozenSet[Cell]
    protected: FrozenSet[Cell]
    turn: int
    ignition: Cell
    frontier: Optional[FrozenSet[Cell]] = None

    @property
    def active_frontier(self) -> FrozenSet[Cell]:
        return self.burning if self.frontier is None else self.frontier

    def is_blocked(self, c: Cell) -> bool:
        return c in self.burning or c in self.protected

    def open_cells(self) -> List[Cell]:
        """Unprotected, unburned cells the next spread would burn"""
        found = set()
        for b in self.active_frontier:
            for n in neighbors(b):
                if n not in self.burning and n not in self.protected:
                    found.add(n)
        return sorted(found)

    def translated(self, dx: int, dy: int) -> "GameState":
        def move(cells):
            return frozenset(c.shifted(dx, dy) for c in cells)

        return GameState(
            burning=move(self.burning),
            protected=move(self.protected),
            turn=self.turn,
            ignition=self.ignition.shifted(dx, dy),
            frontier=None if self.frontier is None else move(self.frontier),
        )


@dataclass(frozen=True)
class TurnRecord:
    turn: int
    budget: int
    placements: Tuple[Cell, ...]
    newly_burned: Tuple[Cell, ...]
    cumulative_protected: int
    cumulative_burned: int

    def translated(self, dx: int, dy: int) -> "TurnRecord":
        return replace(
            self,
            placements=tuple(sorted(c.shifted(dx, dy) for c in self.placements)),
            newly_burned=tuple(sorted(c.shifted(dx, dy) for c in self.newly_burned)),
        )


@dataclass(frozen=True)
class EscapeCertificate:
    """Machine-checkable evidence that the fire cannot be contained"""

    kind: str  # FloodToInfinity | BarrierDeficit
    turn: int
    witness: Optional[Cell] = None
    min_barrier: Optional[int] = None
    remaining_budget: Optional[int] = None
    clip_radius: Optional[int] = None

    def describe(self) -> str:
        if self.kind == "FloodToInfinity":
            return f"FloodToInfinity witness={self.witness} turn={self.turn}"
        return (
            f"BarrierDeficit min_barrier={self.min_barrier} remaining_budget={self.remaining_budget} "
            f"clip={self.clip_radius} turn={self.turn}"
        )


@dataclass(frozen=True)
class Contained:
    turn: int
    burned_count: int

    def footer(self) -> str:
        return f"Contained {self.turn} {self.burned_count}"


@dataclass(frozen=True)
class Escaped:
    turn: int
    certificate: Optional[EscapeCertificate] = None

    def footer(self) -> str:
        return f"Escaped {self.turn}"


@dataclass(frozen=True)
class Undecided:
    horizon: int

    def footer(self) -> str:
        return f"Undecided {self.horizon}"


Outcome = Union[Contained, Escaped, Undecided]


@dataclass
class GameHistory:
    """Observable history handed to strategies and adversaries (ignition at the origin)"""

    state: GameState
    records: List[TurnRecord] = field(default_factory=list)

    @property
    def turn(self) -> int:
        """The turn about to be played"""
        return self.state.turn + 1

    @property
    def budgets(self) -> List[int]:
        return [r.budget for r in self.records]


def new_game(ignition: Cell = ORIGIN) -> GameState:
    ignition = Cell(*ignition)
    return GameState(burning=frozenset([ignition]), protected=frozenset(), turn=0, ignition=ignition)


def apply_placements(s: GameState, cells: Iterable[Cell], budget: int, turn: Optional[int] = None) -> GameState:
    """
    Protect cells for the current turn.

    Args:
        s: state before placement
        cells: cells to protect (at most `budget`)
        budget: firefighters revealed this turn
        turn: turn index used to tag errors

    Returns:
        New state with the cells protected; burning and turn unchanged
    """
    cells = [Cell(*c) for c in cells]
    if len(cells) > budget:
        raise BudgetExceeded(len(cells), budget, turn=turn)
    added = set()
    for c in cells:
        if c in s.burning:
            raise PlacementOnBurning(c, turn=turn)
        if c in s.protected or c in added:
            raise PlacementOnProtected(c, turn=turn)
        added.add(c)
    if not added:
        return s
    return replace(s, protected=s.protected | added)


def spread_step(s: GameState) -> Tuple[GameState, FrozenSet[Cell]]:
    """Synchronous spread from the pre-state; advances the turn counter"""
    newly = set()
    for b in s.active_frontier:
        for n in neighbors(b):
            if n not in s.burning and n not in s.protected:
                newly.add(n)
    newly_burned = frozenset(newly)
    state = GameState(
        burning=s.burning | newly_burned,
        protected=s.protected,
        turn=s.turn + 1,
        ignition=s.ignition,
        frontier=newly_burned,
    )
    return state, newly_burned


def _record(turn: int, budget: int, placed: Iterable[Cell], newly: Iterable[Cell], state: GameState) -> TurnRecord:
    return TurnRecord(
        turn=turn,
        budget=budget,
        placements=tuple(sorted_cells(placed)),
        newly_burned=tuple(sorted_cells(newly)),
        cumulative_protected=len(state.protected),
        cumulative_burned=len(state.burning),
    )


def play_turn(s: GameState, budget: int, cells: Iterable[Cell]) -> Tuple[GameState, TurnRecord]:
    """Place then spread; returns the post-spread state and the turn record"""
    cells = list(cells)
    turn = s.turn + 1
    placed = apply_placements(s, cells, budget, turn=turn)
    after, newly = spread_step(placed)
    return after, _record(turn, budget, cells, newly, after)


def run_game(ignition: Cell, strategy, adversary, horizon: int) -> Tuple[Outcome, List[TurnRecord]]:
    """
    Play one game to containment, certified escape, or the horizon.

    Args:
        ignition: ignition cell (play is normalized to the origin)
        strategy: Player-1 policy with decide(history, budget)
        adversary: Player-2 policy with next_budget(history) and declared_tail(history)
        horizon: last turn to play

    Returns:
        Tuple of (outcome, turn records in the caller's coordinates)
    """
    from firegrid.analysis.escape import NotEscaped, flood_escape_check

    if horizon < 1:
        raise PreconditionViolated(f"horizon must be >= 1, got {horizon}")
    ignition = Cell(*ignition)
    history = GameHistory(state=new_game(ORIGIN))
    outcome: Outcome = Undecided(horizon)
    logger.debug(f"🚀 game start: strategy={getattr(strategy, 'strategy_id', strategy)} "
                 f"adversary={getattr(adversary, 'adversary_id', adversary)} horizon={horizon}")

    for t in range(1, horizon + 1):
        budget = adversary.next_budget(history)
        if budget < 0:
            raise PreconditionViolated(f"turn {t}: adversary revealed negative budget {budget}")
        cells = strategy.decide(history, budget)
        state, record = play_turn(history.state, budget, cells)
        history.records.append(record)
        history.state = state
        logger.debug(f"turn {t}: budget={budget} placed={len(record.placements)} new={len(record.newly_burned)}")

        if not record.newly_burned:
            outcome = Contained(t, len(state.burning))
            break

        tail = adversary.declared_tail(history)
        if tail is not None and t >= tail:
            verdict = flood_escape_check(state, future_budgets_zero=True)
            if isinstance(verdict, NotEscaped):
                # enclosed: finish the zero-budget turns until the fire stops
                while True:
                    state, record = play_turn(history.state, 0, [])
                    history.records.append(record)
                    history.state = state
                    if not record.newly_burned:
                        break
                outcome = Contained(history.state.turn, len(history.state.burning))
            else:
                if verdict.witness is not None:
                    verdict = replace(verdict, witness=verdict.witness.shifted(ignition.x, ignition.y))
                outcome = Escaped(t, verdict)
            break

    if isinstance(outcome, Contained):
        logger.debug(f"✅ contained at turn {outcome.turn} with {outcome.burned_count} burned")
    else:
        logger.debug(f"⚠️ game ended {outcome.footer()}")
    records = [r.translated(ignition.x, ignition.y) for r in history.records]
    return outcome, records

