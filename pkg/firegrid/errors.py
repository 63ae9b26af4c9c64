"""
Error types for FIREGRID

Every failure the library can signal derives from FiregridError so callers
(CLI, scripts, batch runner) can catch one type and report it.
"""

from typing import List, Optional, Sequence, Tuple


class FiregridError(Exception):
    """Base class for all firegrid errors"""


class PreconditionViolated(FiregridError):
    """An operation was called outside its domain"""


class PlacementError(FiregridError):
    """A strategy produced an illegal placement"""

    def __init__(self, message: str, turn: Optional[int] = None, cell: Optional[Tuple[int, int]] = None):
        self.turn = turn
        self.cell = cell
        prefix = f"turn {turn}: " if turn is not None else ""
        super().__init__(f"{prefix}{message}")


class PlacementOnBurning(PlacementError):
    def __init__(self, cell: Tuple[int, int], turn: Optional[int] = None):
        super().__init__(f"cannot protect burning cell {tuple(cell)}", turn=turn, cell=cell)


class PlacementOnProtected(PlacementError):
    def __init__(self, cell: Tuple[int, int], turn: Optional[int] = None):
        super().__init__(f"cell {tuple(cell)} is already protected", turn=turn, cell=cell)


class BudgetExceeded(PlacementError):
    def __init__(self, count: int, budget: int, turn: Optional[int] = None):
        self.count = count
        self.budget = budget
        super().__init__(f"{count} placements exceed budget {budget}", turn=turn)


class ConditionUnsatisfied(FiregridError):
    """No N satisfies the prefix-sum condition within the known sequence"""


class ClipTooSmall(FiregridError):
    """The fire touches the clip boundary of a barrier computation"""


class TraceMismatch(FiregridError):
    """A trace does not have the shape an analysis expects"""


class TraceFormatError(FiregridError):
    """A trace file could not be parsed"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}{message}")


class BoundsTooSmall(FiregridError):
    """Render bounds do not cover every touched cell"""


class UnknownIdentifier(FiregridError):
    """A strategy or adversary id does not resolve to an implementation"""

    def __init__(self, kind: str, identifier: str, known: Sequence[str]):
        self.kind = kind
        self.identifier = identifier
        self.known = sorted(known)
        super().__init__(f"unknown {kind} '{identifier}' (known: {', '.join(self.known)})")


class ConfigError(FiregridError):
    """A run configuration failed validation; carries every message"""

    def __init__(self, messages: List[str]):
        self.messages = list(messages)
        super().__init__("; ".join(self.messages))
