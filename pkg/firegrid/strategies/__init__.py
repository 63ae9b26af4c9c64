"""
Player-1 strategies and their registry

Identifiers: offline-diamond, wall, restart16, idle, random
"""

import logging
from typing import Any, Dict, Optional, Sequence

from firegrid.errors import ConfigError, UnknownIdentifier
from firegrid.strategies.base import Strategy
from firegrid.strategies.baselines import Idle, RandomLegal, decide_idle, decide_random_legal
from firegrid.strategies.incremental_wall import IncrementalWall, decide_incremental_wall, wall_polygon
from firegrid.strategies.offline_diamond import OfflineDiamond, decide_offline_diamond
from firegrid.strategies.restart_doubling import RestartDoubling, decide_restart16

logger = logging.getLogger(__name__)

STRATEGY_IDS = ("offline-diamond", "wall", "restart16", "idle", "random")

# parameters each strategy accepts in strategy_params
STRATEGY_PARAMS = {
    "offline-diamond": {"sequence"},
    "wall": {"literal_formula"},
    "restart16": set(),
    "idle": set(),
    "random": {"seed"},
}


def build_strategy(
    strategy_id: str,
    params: Optional[Dict[str, Any]] = None,
    declared_sequence: Optional[Sequence[int]] = None,
    seed: int = 0,
) -> Strategy:
    """
    Create a fresh strategy instance for one game.

    Args:
        strategy_id: registered identifier
        params: strategy_params from the run configuration
        declared_sequence: budgets known in advance (offline play only)
        seed: run seed, the default for randomized strategies

    Raises:
        UnknownIdentifier: the id is not registered
        ConfigError: unexpected or invalid parameters
    """
    params = dict(params or {})
    if strategy_id not in STRATEGY_IDS:
        raise UnknownIdentifier("strategy", strategy_id, STRATEGY_IDS)
    unexpected = sorted(set(params) - STRATEGY_PARAMS[strategy_id])
    if unexpected:
        raise ConfigError([f"strategy '{strategy_id}' does not accept {', '.join(unexpected)}"])

    logger.debug(f"building strategy {strategy_id} with {params or 'no params'}")
    if strategy_id == "offline-diamond":
        sequence = params.get("sequence", declared_sequence)
        if sequence is None:
            raise ConfigError(["offline-diamond needs a budget sequence known in advance"])
        return OfflineDiamond(sequence)
    if strategy_id == "wall":
        return IncrementalWall(literal_formula=bool(params.get("literal_formula", False)))
    if strategy_id == "restart16":
        return RestartDoubling()
    if strategy_id == "random":
        return RandomLegal(seed=int(params.get("seed", seed)))
    return Idle()


__all__ = [
    "STRATEGY_IDS",
    "Strategy",
    "Idle",
    "RandomLegal",
    "IncrementalWall",
    "OfflineDiamond",
    "RestartDoubling",
    "build_strategy",
    "decide_idle",
    "decide_incremental_wall",
    "decide_offline_diamond",
    "decide_random_legal",
    "decide_restart16",
    "wall_polygon",
]
