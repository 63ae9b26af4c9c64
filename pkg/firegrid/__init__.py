"""
FIREGRID - online firefighter games on the square lattice

Simulator, Player-1 strategies, budget adversaries and the analysis tools
(escape certificates, minimum barriers, bounded minimax, loss accounting)
used to check containment claims.
"""

from firegrid.engine import Contained, Escaped, GameState, TurnRecord, Undecided, run_game
from firegrid.lattice import ORIGIN, Cell
from firegrid.trace import Trace, play, read_trace, write_trace

__version__ = "1.0.0"

__all__ = [
    "ORIGIN",
    "Cell",
    "Contained",
    "Escaped",
    "GameState",
    "Trace",
    "TurnRecord",
    "Undecided",
    "play",
    "read_trace",
    "run_game",
    "write_trace",
]
