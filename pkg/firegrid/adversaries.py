"""
Adversaries (Player 2) for FIREGRID

Budget sources that reveal the number of firefighters turn by turn. Each
adversary is a pure function of the observable history (budgets revealed
so far and the placements Player 1 made), plus an optional declaration that
every budget after some turn is zero.

Identifiers:
    thm1                                  adaptive punishment of the first placement
    fseq:j=<int>                          f_1 = 1, f_j = 4j - 1, zero elsewhere
    fixed:<comma-list>                    the listed budgets, then zeros
    eventually-one:M=<int>,N=<int>,seed=<int>[,extra=<int>]
    periodic:<comma-list>                 the pattern repeated forever
"""

import logging
import random
from typing import Hashable, List, Optional, Sequence, Tuple

from firegrid.engine import GameHistory
from firegrid.errors import ConfigError, PreconditionViolated, UnknownIdentifier
from firegrid.lattice import ORIGIN, l1_distance

logger = logging.getLogger(__name__)

ADVERSARY_KINDS = ("thm1", "fseq", "fixed", "eventually-one", "periodic")

# extras added on top of the mandatory single firefighter by eventually-one
DEFAULT_MAX_EXTRA = 2


def smallest_N(prefix: Sequence[int], ell: int) -> Optional[int]:
    """
    Least N with f_1 + ... + f_N >= ell * N inside the given prefix.

    Returns:
        N (1-based) or None when no prefix qualifies
    """
    if ell < 1:
        raise PreconditionViolated(f"ell must be >= 1, got {ell}")
    total = 0
    for n, f in enumerate(prefix, start=1):
        total += f
        if total >= ell * n:
            return n
    return None


class Adversary:
    """Base class; subclasses define the budget stream"""

    adversary_id = "adversary"
    adaptive = False

    def next_budget(self, history: GameHistory) -> int:
        return self.budget_at(history.turn, history)

    def budget_at(self, turn: int, history: Optional[GameHistory] = None) -> int:
        raise NotImplementedError

    def declared_tail(self, history: GameHistory) -> Optional[int]:
        """Turn T after which every budget is zero, once the adversary commits to it"""
        return None

    def budget_window(self, history: GameHistory, through_turn: int) -> Optional[Tuple[int, ...]]:
        """Budgets for turns history.turn..through_turn if already determined"""
        return tuple(self.budget_at(t, history) for t in range(history.turn, through_turn + 1))

    def remaining_budgets(self, history: GameHistory) -> Optional[Tuple[int, ...]]:
        """All budgets after the last played turn, when the stream is finite and known"""
        tail = self.declared_tail(history)
        if tail is None:
            return None
        return tuple(self.budget_at(t, history) for t in range(history.turn, tail + 1))

    def known_sequence(self, length: int) -> Optional[List[int]]:
        """The first `length` budgets for offline play; None for adaptive adversaries"""
        return [self.budget_at(t) for t in range(1, length + 1)]

    def fingerprint(self, history: GameHistory) -> Hashable:
        """Everything about the history that future budgets depend on"""
        return self.adversary_id


class FixedBudgets(Adversary):
    """A finite list of budgets followed by zeros"""

    def __init__(self, budgets: Sequence[int], adversary_id: Optional[str] = None):
        if any(b < 0 for b in budgets):
            raise PreconditionViolated(f"budgets must be non-negative: {list(budgets)}")
        self.budgets = tuple(int(b) for b in budgets)
        self.adversary_id = adversary_id or "fixed:" + ",".join(str(b) for b in self.budgets)
        nonzero = [k for k, b in enumerate(self.budgets, start=1) if b > 0]
        self.tail = nonzero[-1] if nonzero else 0

    def budget_at(self, turn: int, history: Optional[GameHistory] = None) -> int:
        return self.budgets[turn - 1] if 1 <= turn <= len(self.budgets) else 0

    def declared_tail(self, history: GameHistory) -> Optional[int]:
        return self.tail


def fseq_budgets(j: int) -> List[int]:
    """f_1 = 1, f_j = 4j - 1 and zero elsewhere; the prefix sum reaches 4j exactly at j"""
    if j <= 1:
        raise PreconditionViolated(f"fseq needs j > 1, got {j}")
    budgets = [0] * j
    budgets[0] = 1
    budgets[j - 1] = 4 * j - 1
    return budgets


class FSeq(FixedBudgets):
    def __init__(self, j: int):
        self.j = j
        super().__init__(fseq_budgets(j), adversary_id=f"fseq:j={j}")


class Thm1Adaptive(Adversary):
    """
    Adaptive adversary that defeats every online strategy within five turns.

    Turn 1 reveals a single firefighter. If Player 1 protected a cell within
    distance 2 of the ignition the stream continues as fseq(5), otherwise
    (including no placement at all) as fseq(2).
    """

    adversary_id = "thm1"
    adaptive = True

    def committed_j(self, history: Optional[GameHistory]) -> Optional[int]:
        if history is None or not history.records:
            return None
        placements = history.records[0].placements
        if not placements:
            return 2
        distance = l1_distance(placements[0], ORIGIN)
        return 5 if distance <= 2 else 2

    def budget_at(self, turn: int, history: Optional[GameHistory] = None) -> int:
        if turn == 1:
            return 1
        j = self.committed_j(history)
        if j is None:
            raise PreconditionViolated("thm1 budgets after turn 1 depend on the first placement")
        if turn == 2:
            logger.debug(f"🔍 thm1 committed to fseq({j})")
        return 4 * j - 1 if turn == j else 0

    def declared_tail(self, history: GameHistory) -> Optional[int]:
        return self.committed_j(history)

    def budget_window(self, history: GameHistory, through_turn: int) -> Optional[Tuple[int, ...]]:
        if self.committed_j(history) is None:
            return None
        return super().budget_window(history, through_turn)

    def known_sequence(self, length: int) -> Optional[List[int]]:
        return None

    def fingerprint(self, history: GameHistory) -> Hashable:
        return ("thm1", self.committed_j(history))


class EventuallyOne(Adversary):
    """
    Zero before turn M, at least one from M on, and enough by turn N.

    Budgets M..N get seeded random extras and turn N is topped up so that the
    prefix sum reaches 4N; every later turn reveals exactly one.
    """

    def __init__(self, m: int, n_target: int, seed: int = 0, max_extra: int = DEFAULT_MAX_EXTRA):
        if m < 1:
            raise PreconditionViolated(f"eventually-one needs M >= 1, got {m}")
        if n_target < m:
            raise PreconditionViolated(f"eventually-one needs N >= M, got M={m} N={n_target}")
        self.m = m
        self.n_target = n_target
        self.seed = seed
        self.max_extra = max_extra
        self.adversary_id = f"eventually-one:M={m},N={n_target},seed={seed}"
        if max_extra != DEFAULT_MAX_EXTRA:
            self.adversary_id += f",extra={max_extra}"

        rng = random.Random(seed)
        prefix = [0] * (m - 1)
        for _ in range(m, n_target + 1):
            prefix.append(1 + rng.randint(0, max_extra))
        shortfall = 4 * n_target - sum(prefix)
        if shortfall > 0:
            prefix[-1] += shortfall
        self.prefix = tuple(prefix)

    def budget_at(self, turn: int, history: Optional[GameHistory] = None) -> int:
        if turn <= len(self.prefix):
            return self.prefix[turn - 1]
        return 1


class Periodic(Adversary):
    def __init__(self, pattern: Sequence[int]):
        if not pattern:
            raise PreconditionViolated("periodic pattern must be non-empty")
        if any(b < 0 for b in pattern):
            raise PreconditionViolated(f"budgets must be non-negative: {list(pattern)}")
        self.pattern = tuple(int(b) for b in pattern)
        self.adversary_id = "periodic:" + ",".join(str(b) for b in self.pattern)

    def budget_at(self, turn: int, history: Optional[GameHistory] = None) -> int:
        return self.pattern[(turn - 1) % len(self.pattern)]


def eventually_one_random(m: int, n_target: int, seed: int, max_extra: int = DEFAULT_MAX_EXTRA) -> EventuallyOne:
    return EventuallyOne(m, n_target, seed=seed, max_extra=max_extra)


def periodic_budgets(pattern: Sequence[int]) -> Periodic:
    return Periodic(pattern)


def thm1_adaptive() -> Thm1Adaptive:
    return Thm1Adaptive()


def _int_list(text: str, identifier: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ConfigError([f"malformed integer list in adversary '{identifier}'"])
    if not values:
        raise ConfigError([f"adversary '{identifier}' needs at least one budget"])
    return values


def _key_values(text: str, identifier: str) -> dict:
    values = {}
    for part in text.split(","):
        key, sep, raw = part.partition("=")
        if not sep:
            raise ConfigError([f"expected key=value in adversary '{identifier}', got '{part}'"])
        try:
            values[key.strip()] = int(raw)
        except ValueError:
            raise ConfigError([f"malformed integer for '{key.strip()}' in adversary '{identifier}'"])
    return values


def parse_adversary(identifier: str) -> Adversary:
    """
    Build an adversary from its identifier.

    Raises:
        UnknownIdentifier: the kind is not registered
        ConfigError: parameters are missing or malformed
    """
    identifier = identifier.strip()
    kind, _, params = identifier.partition(":")
    if kind not in ADVERSARY_KINDS:
        raise UnknownIdentifier("adversary", identifier, ADVERSARY_KINDS)

    try:
        if kind == "thm1":
            if params:
                raise ConfigError([f"adversary 'thm1' takes no parameters, got '{params}'"])
            return thm1_adaptive()
        if kind == "fixed":
            return FixedBudgets(_int_list(params, identifier))
        if kind == "periodic":
            return periodic_budgets(_int_list(params, identifier))
        values = _key_values(params, identifier)
        if kind == "fseq":
            if "j" not in values:
                raise ConfigError([f"adversary '{identifier}' needs j=<int>"])
            return FSeq(values["j"])
        missing = [k for k in ("M", "N", "seed") if k not in values]
        if missing:
            raise ConfigError([f"adversary '{identifier}' is missing {', '.join(missing)}"])
        return eventually_one_random(values["M"], values["N"], values["seed"],
                                     max_extra=values.get("extra", DEFAULT_MAX_EXTRA))
    except PreconditionViolated as e:
        raise ConfigError([f"adversary '{identifier}': {e}"])
