"""
Trace files

Line-oriented, byte-stable record of one game:

    ignition=(x,y) strategy=<id> adversary=<id>
    turn=<t> budget=<f> placed=[(x,y);...] burned_new=[(x,y);...]
    ...
    outcome=Contained <t> <b> | Escaped <t> | Undecided <h>

Cell lists are sorted lexicographically and nothing else varies, so
identical games produce identical files.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

from firegrid.engine import (
    Contained,
    Escaped,
    Outcome,
    TurnRecord,
    Undecided,
    new_game,
    play_turn,
    run_game,
)
from firegrid.errors import TraceFormatError, TraceMismatch
from firegrid.lattice import Cell

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r"^ignition=\((-?\d+),(-?\d+)\) strategy=(\S+) adversary=(\S+)$")
TURN_RE = re.compile(r"^turn=(\d+) budget=(\d+) placed=\[([^\]]*)\] burned_new=\[([^\]]*)\]$")
OUTCOME_RE = re.compile(r"^outcome=(Contained (\d+) (\d+)|Escaped (\d+)|Undecided (\d+))$")
CELL_RE = re.compile(r"^\((-?\d+),(-?\d+)\)$")


@dataclass
class Trace:
    ignition: Cell
    strategy_id: str
    adversary_id: str
    records: List[TurnRecord] = field(default_factory=list)
    outcome: Optional[Outcome] = None

    @property
    def budgets(self) -> List[int]:
        return [r.budget for r in self.records]

    @property
    def protected_count(self) -> int:
        return self.records[-1].cumulative_protected if self.records else 0

    @property
    def burned_count(self) -> int:
        return self.records[-1].cumulative_burned if self.records else 1


def format_cells(cells) -> str:
    return "[" + ";".join(str(Cell(*c)) for c in sorted(cells)) + "]"


def write_trace(trace: Trace) -> str:
    lines = [f"ignition={trace.ignition} strategy={trace.strategy_id} adversary={trace.adversary_id}"]
    for r in trace.records:
        lines.append(
            f"turn={r.turn} budget={r.budget} placed={format_cells(r.placements)} "
            f"burned_new={format_cells(r.newly_burned)}"
        )
    if trace.outcome is not None:
        lines.append(f"outcome={trace.outcome.footer()}")
    return "\n".join(lines) + "\n"


def _parse_cells(text: str, line_number: int) -> Tuple[Cell, ...]:
    if not text:
        return ()
    cells = []
    for part in text.split(";"):
        m = CELL_RE.match(part)
        if not m:
            raise TraceFormatError(f"malformed cell '{part}'", line_number)
        cells.append(Cell(int(m.group(1)), int(m.group(2))))
    return tuple(cells)


def _parse_outcome(m: re.Match) -> Outcome:
    if m.group(2) is not None:
        return Contained(int(m.group(2)), int(m.group(3)))
    if m.group(4) is not None:
        return Escaped(int(m.group(4)))
    return Undecided(int(m.group(5)))


def read_trace(text: str) -> Trace:
    """
    Parse trace text; cumulative counts are rebuilt from the per-turn lists.

    Raises:
        TraceFormatError: any line does not follow the grammar
    """
    lines = [line.rstrip("\r") for line in text.splitlines() if line.strip()]
    if not lines:
        raise TraceFormatError("empty trace")
    header = HEADER_RE.match(lines[0])
    if not header:
        raise TraceFormatError("bad header", 1)
    trace = Trace(
        ignition=Cell(int(header.group(1)), int(header.group(2))),
        strategy_id=header.group(3),
        adversary_id=header.group(4),
    )

    protected, burned = 0, 1
    for number, line in enumerate(lines[1:], start=2):
        if trace.outcome is not None:
            raise TraceFormatError("content after the outcome line", number)
        m = TURN_RE.match(line)
        if m:
            turn = int(m.group(1))
            if turn != len(trace.records) + 1:
                raise TraceFormatError(f"expected turn {len(trace.records) + 1}, got {turn}", number)
            placed = _parse_cells(m.group(3), number)
            newly = _parse_cells(m.group(4), number)
            protected += len(placed)
            burned += len(newly)
            trace.records.append(TurnRecord(turn, int(m.group(2)), placed, newly, protected, burned))
            continue
        m = OUTCOME_RE.match(line)
        if m:
            trace.outcome = _parse_outcome(m)
            continue
        raise TraceFormatError(f"unrecognized line '{line}'", number)
    return trace


def save_trace(trace: Trace, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(write_trace(trace), encoding="utf-8")
    logger.info(f"✅ trace written to {path}")
    return path


def load_trace(path: Union[str, Path]) -> Trace:
    return read_trace(Path(path).read_text(encoding="utf-8"))


def play(ignition: Cell, strategy, adversary, horizon: int) -> Trace:
    """Run a game and package it as a trace"""
    outcome, records = run_game(ignition, strategy, adversary, horizon)
    return Trace(
        ignition=Cell(*ignition),
        strategy_id=strategy.strategy_id,
        adversary_id=adversary.adversary_id,
        records=records,
        outcome=outcome,
    )


def replay_trace(trace: Trace):
    """
    Re-apply a trace's placements against its budgets.

    Returns:
        (final GameState, replayed TurnRecords)

    Raises:
        TraceMismatch: a recorded spread, or the recorded containment, disagrees with the replay
    """
    state = new_game(trace.ignition)
    replayed = []
    for r in trace.records:
        state, record = play_turn(state, r.budget, r.placements)
        if record.newly_burned != tuple(r.newly_burned):
            raise TraceMismatch(f"turn {r.turn}: recorded spread differs from replay")
        replayed.append(record)
    if isinstance(trace.outcome, Contained):
        if trace.outcome.turn != state.turn or trace.outcome.burned_count != len(state.burning):
            raise TraceMismatch(f"recorded outcome {trace.outcome.footer()} does not match the replay")
    return state, replayed
