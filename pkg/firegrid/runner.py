#!/usr/bin/env python3
"""
Duel Runner for FIREGRID
Plays every strategy against every adversary and collects a summary table.
Each pairing is an isolated game; with workers > 1 the games run in a process pool.
"""

import concurrent.futures
import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from firegrid.adversaries import parse_adversary
from firegrid.config import DEFAULT_HORIZON
from firegrid.engine import Contained, Escaped
from firegrid.errors import FiregridError
from firegrid.lattice import ORIGIN
from firegrid.strategies import build_strategy
from firegrid.trace import play

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ("strategy", "adversary", "outcome", "turn", "burned", "placed")


@dataclass(frozen=True)
class DuelRow:
    strategy: str
    adversary: str
    outcome: str
    turn: int
    burned: int
    placed: int
    error: Optional[str] = None

    def cells(self) -> List[str]:
        return [self.strategy, self.adversary, self.outcome, str(self.turn), str(self.burned), str(self.placed)]


def play_pairing(strategy_id: str, adversary_id: str, horizon: int, seed: int) -> DuelRow:
    """One matrix cell; failures become an `error` row instead of aborting the duel"""
    try:
        adversary = parse_adversary(adversary_id)
        strategy = build_strategy(strategy_id, declared_sequence=adversary.known_sequence(horizon), seed=seed)
        trace = play(ORIGIN, strategy, adversary, horizon)
    except FiregridError as e:
        logger.error(f"❌ {strategy_id} vs {adversary_id} failed: {e}")
        return DuelRow(strategy_id, adversary_id, "error", 0, 0, 0, error=str(e))

    outcome = trace.outcome
    if isinstance(outcome, Contained):
        kind, turn = "Contained", outcome.turn
    elif isinstance(outcome, Escaped):
        kind, turn = "Escaped", outcome.turn
    else:
        kind, turn = "Undecided", outcome.horizon
    return DuelRow(strategy_id, adversary_id, kind, turn, trace.burned_count, trace.protected_count)


class DuelRunner:
    """Strategy x adversary matrix runner"""

    def __init__(self, workers: int = 1):
        self.workers = max(1, workers)

    def run(
        self,
        strategies: Sequence[str],
        adversaries: Sequence[str],
        horizon: int = DEFAULT_HORIZON,
        seed: int = 0,
    ) -> List[DuelRow]:
        pairings = list(itertools.product(strategies, adversaries))
        logger.info(f"🚀 Starting duel: {len(strategies)} strategies x {len(adversaries)} adversaries, horizon {horizon}")

        if self.workers == 1 or len(pairings) <= 1:
            rows = [play_pairing(s, a, horizon, seed) for s, a in pairings]
        else:
            with concurrent.futures.ProcessPoolExecutor(max_workers=self.workers) as executor:
                futures = [executor.submit(play_pairing, s, a, horizon, seed) for s, a in pairings]
                rows = [f.result() for f in futures]

        rows.sort(key=lambda r: (r.strategy, r.adversary))
        contained = sum(1 for r in rows if r.outcome == "Contained")
        logger.info(f"✅ Duel completed: {contained}/{len(rows)} pairings contained")
        return rows


def run_duel(
    strategies: Sequence[str],
    adversaries: Sequence[str],
    horizon: int = DEFAULT_HORIZON,
    seed: int = 0,
    workers: int = 1,
) -> List[DuelRow]:
    """
    Run the full strategy x adversary matrix.

    Args:
        strategies: strategy identifiers
        adversaries: adversary identifiers
        horizon: last turn of every game
        seed: seed handed to randomized strategies
        workers: process count; 1 plays every game in this process

    Returns:
        DuelRows sorted by (strategy, adversary)
    """
    return DuelRunner(workers).run(strategies, adversaries, horizon, seed)


def format_summary(rows: Sequence[DuelRow]) -> str:
    """Aligned plain-text table, one line per pairing"""
    table = [list(SUMMARY_COLUMNS)] + [row.cells() for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(SUMMARY_COLUMNS))]
    lines = ["  ".join(value.ljust(width) for value, width in zip(line, widths)).rstrip() for line in table]
    return "\n".join(lines) + "\n"
