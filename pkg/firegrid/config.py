"""
FIREGRID Configuration
Run configuration, named scenarios and tunable defaults.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from firegrid.adversaries import Adversary, parse_adversary
from firegrid.errors import ConfigError, FiregridError, UnknownIdentifier
from firegrid.lattice import Cell
from firegrid.strategies import Strategy, build_strategy

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 50
DEFAULT_CLIP_RADIUS = 12
MIN_CLIP_RADIUS = 4

LOG_LEVEL = os.getenv("FIREGRID_LOG_LEVEL", "INFO").upper()

# Named scenarios shipped with the package
SCENARIOS_YAML_PATH = Path(__file__).parent / "scenarios.yml"
SCENARIO_PREFIX = "scenario:"


class RunConfig(BaseModel):
    """One simulate run: who plays, against whom, for how long"""

    model_config = ConfigDict(extra="forbid")

    ignition: Tuple[int, int] = (0, 0)
    strategy: str
    strategy_params: Dict[str, Any] = Field(default_factory=dict)
    adversary: str
    horizon: int = Field(default=DEFAULT_HORIZON, ge=1)
    seed: int = 0
    clip_radius: int = Field(default=DEFAULT_CLIP_RADIUS, ge=MIN_CLIP_RADIUS)
    out: Optional[str] = None
    svg: Optional[str] = None
    ascii: Optional[str] = None

    @property
    def ignition_cell(self) -> Cell:
        return Cell(*self.ignition)


def _pydantic_messages(error: ValidationError) -> List[str]:
    messages = []
    for item in error.errors():
        where = ".".join(str(part) for part in item["loc"]) or "config"
        messages.append(f"{where}: {item['msg']}")
    return messages


def _resolution_messages(data: Dict[str, Any]) -> List[str]:
    """Resolve ids up front so one pass reports every problem"""
    messages = []
    adversary = data.get("adversary")
    if isinstance(adversary, str):
        try:
            parse_adversary(adversary)
        except FiregridError as e:
            messages.append(f"adversary: {e}")
    strategy = data.get("strategy")
    params = data.get("strategy_params") or {}
    if isinstance(strategy, str) and isinstance(params, dict):
        try:
            # offline play gets a placeholder sequence here; the real one comes from the adversary
            build_strategy(strategy, params, declared_sequence=[4])
        except FiregridError as e:
            messages.append(f"strategy: {e}")
    return messages


def config_from_mapping(data: Any) -> RunConfig:
    """
    Validate a decoded mapping.

    Raises:
        ConfigError: with every validation and id-resolution message
    """
    if not isinstance(data, dict):
        raise ConfigError(["config must be a mapping of keys to values"])

    messages: List[str] = []
    config = None
    try:
        config = RunConfig(**data)
    except ValidationError as e:
        messages.extend(_pydantic_messages(e))
    messages.extend(_resolution_messages(data))

    if messages:
        for message in messages:
            logger.debug(f"❌ config: {message}")
        raise ConfigError(messages)
    return config


def parse_config(text: str) -> RunConfig:
    """
    Parse YAML run configuration text.

    Args:
        text: YAML document

    Returns:
        Validated RunConfig

    Raises:
        ConfigError: malformed YAML, or one message per invalid field / unknown id
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError([f"malformed YAML: {e}"])
    return config_from_mapping(data)


_scenario_cache: Dict[str, Dict[str, Any]] = {}


def load_scenarios() -> Dict[str, Dict[str, Any]]:
    """Load and cache the named scenarios from scenarios.yml"""
    global _scenario_cache

    if _scenario_cache:
        return _scenario_cache

    try:
        with open(SCENARIOS_YAML_PATH, "r", encoding="utf-8") as file:
            _scenario_cache = yaml.safe_load(file) or {}
            logger.debug(f"Loaded {len(_scenario_cache)} scenarios from {SCENARIOS_YAML_PATH}")
    except (OSError, yaml.YAMLError) as e:
        logger.error(f"❌ Error loading scenarios: {e}")
        _scenario_cache = {}

    return _scenario_cache


def scenario_config(name: str) -> RunConfig:
    """
    Config for a named scenario.

    Raises:
        UnknownIdentifier: no scenario has that name
    """
    scenarios = load_scenarios()
    if name not in scenarios:
        raise UnknownIdentifier("scenario", name, list(scenarios))
    return config_from_mapping(dict(scenarios[name]))


def load_config(source: str) -> RunConfig:
    """Config from `scenario:<name>` or a YAML file path"""
    if source.startswith(SCENARIO_PREFIX):
        return scenario_config(source[len(SCENARIO_PREFIX):])
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError([f"cannot read config {path}: {e}"])
    return parse_config(text)


def build_run(config: RunConfig) -> Tuple[Strategy, Adversary]:
    """Fresh strategy and adversary instances for one game"""
    adversary = parse_adversary(config.adversary)
    declared = adversary.known_sequence(config.horizon)
    strategy = build_strategy(config.strategy, config.strategy_params, declared_sequence=declared, seed=config.seed)
    return strategy, adversary
