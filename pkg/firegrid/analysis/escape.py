"""
Escape detection for finite-support budget sequences

Once the adversary has promised that no more firefighters will arrive, the
fire either floods to infinity through an unprotected gap or is enclosed and
burns out its pocket in a bounded number of turns.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Union

from firegrid.engine import EscapeCertificate, GameState, spread_step
from firegrid.errors import PreconditionViolated
from firegrid.lattice import neighbors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotEscaped:
    """The fire is enclosed; it stops spreading at `contained_turn`"""

    contained_turn: int
    burned_count: int


def flood_escape_check(s: GameState, future_budgets_zero: bool = True) -> Union[EscapeCertificate, NotEscaped]:
    """
    Flood from the burning set through unprotected cells.

    The search is confined to the bounding box of burning and protected cells
    grown by one; reaching that outer frame means the fire is unbounded.

    Args:
        s: state after the last spread
        future_budgets_zero: whether every later budget is declared zero

    Returns:
        EscapeCertificate(FloodToInfinity) with a witness cell, or NotEscaped
        carrying the projected containment turn and burned count
    """
    if not future_budgets_zero:
        raise PreconditionViolated("escape check requires a declared zero tail")

    touched = s.burning | s.protected
    min_x = min(c.x for c in touched) - 1
    max_x = max(c.x for c in touched) + 1
    min_y = min(c.y for c in touched) - 1
    max_y = max(c.y for c in touched) + 1

    seen = set(s.burning)
    queue = deque(sorted(s.active_frontier))
    while queue:
        c = queue.popleft()
        for n in neighbors(c):
            if n in seen or n in s.protected:
                continue
            if n.x in (min_x, max_x) or n.y in (min_y, max_y):
                logger.debug(f"🔍 flood reached {n} outside the box at turn {s.turn}")
                return EscapeCertificate(kind="FloodToInfinity", turn=s.turn, witness=n)
            seen.add(n)
            queue.append(n)

    state = s
    while True:
        state, newly = spread_step(state)
        if not newly:
            break
    return NotEscaped(contained_turn=state.turn, burned_count=len(state.burning))
