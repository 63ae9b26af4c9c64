#!/usr/bin/env python3
"""
Check the containment claims by running them:
1. Ring and diamond sizes
2. Offline diamond closure
3. The adaptive adversary beats every online strategy tried
4. The 20 > 19 barrier gap
5. Both closure figures
6. Constant budget 1 never closes
"""

import random
import sys
import time
from pathlib import Path

# Add project root to path
BASE_DIR = Path(__file__).resolve().parent.parent
sys.path.append(str(BASE_DIR))

from firegrid.adversaries import FixedBudgets, FSeq, Periodic, smallest_N, thm1_adaptive
from firegrid.analysis import bounded_minimax, min_barrier
from firegrid.engine import Contained, Escaped, GameState
from firegrid.lattice import ORIGIN, diamond_cells, ring_cells
from firegrid.strategies import build_strategy
from firegrid.trace import play


def check_counting():
    rings = all(len(ring_cells(ORIGIN, n)) == 4 * n for n in range(1, 101))
    diamonds = all(len(diamond_cells(ORIGIN, r)) == 2 * r * r + 2 * r + 1 for r in range(0, 61))
    return rings and diamonds, "|ring_n| = 4n and |diamond_r| = 2r^2+2r+1"


def check_offline():
    rng = random.Random(11)
    sequences = [FSeq(j).known_sequence(j) for j in range(2, 21)]
    while len(sequences) < 60:
        seq = [rng.randint(0, 6) for _ in range(rng.randint(2, 30))]
        if smallest_N(seq, 4) is not None:
            sequences.append(seq)
    for seq in sequences:
        n = smallest_N(seq, 4)
        trace = play(ORIGIN, build_strategy("offline-diamond", declared_sequence=seq),
                     FixedBudgets(seq), horizon=len(seq) + 2)
        expected = 2 * (n - 1) ** 2 + 2 * (n - 1) + 1
        if not (isinstance(trace.outcome, Contained) and trace.outcome.turn == n
                and trace.outcome.burned_count == expected):
            return False, f"sequence {seq} did not close at N={n}"
    return True, f"{len(sequences)} sequences closed at their N"


def check_online_insufficiency():
    strategies = ["wall", "restart16", "idle"] + [f"random:{seed}" for seed in range(20)]
    for name in strategies:
        if name.startswith("random:"):
            strategy = build_strategy("random", {"seed": int(name.split(":")[1])})
        else:
            strategy = build_strategy(name)
        trace = play(ORIGIN, strategy, thm1_adaptive(), horizon=10)
        outcome = trace.outcome
        if not (isinstance(outcome, Escaped) and outcome.turn <= 6
                and outcome.certificate.kind == "FloodToInfinity"):
            return False, f"{name} was not defeated: {outcome.footer()}"
    return True, f"{len(strategies)} online strategies escaped by turn 6"


def check_barrier_gap():
    fire = frozenset(diamond_cells(ORIGIN, 4))
    state = GameState(burning=fire, protected=frozenset(), turn=4, ignition=ORIGIN)
    barrier = min_barrier(state, 12)
    f5 = FSeq(5).budget_at(5)
    return barrier == 20 and f5 == 19, f"min barrier {barrier} vs f_5 = {f5}"


def check_figures():
    figure1 = play(ORIGIN, build_strategy("wall"), FixedBudgets([1, 1, 1, 13]), horizon=10)
    example1 = play(ORIGIN, build_strategy("wall"), FixedBudgets([1, 1, 4, 1, 1, 1, 15]), horizon=10)
    ok = (figure1.outcome == Contained(4, 20) and example1.outcome == Contained(7, 49)
          and example1.protected_count == 24)
    return ok, f"figure1 {figure1.outcome.footer()}, example1 {example1.outcome.footer()}"


def check_constant_one():
    trace = play(ORIGIN, build_strategy("wall"), Periodic([1]), horizon=50)
    return not isinstance(trace.outcome, Contained), f"budget 1 forever: {trace.outcome.footer()}"


def check_minimax():
    result = bounded_minimax("thm1", candidate_radius=6, horizon=5)
    return result.verdict.value == "CannotContain", result.describe()


def main():
    print("🔥 FIREGRID CLAIM CHECK")
    print("=" * 50)

    checks = [
        ("Counting", check_counting),
        ("Offline closure", check_offline),
        ("Online insufficiency", check_online_insufficiency),
        ("Barrier gap", check_barrier_gap),
        ("Closure figures", check_figures),
        ("Constant budget 1", check_constant_one),
        ("Bounded minimax (radius 6, horizon 5)", check_minimax),
    ]

    passed = 0
    for number, (name, check) in enumerate(checks, start=1):
        started = time.time()
        try:
            ok, detail = check()
        except Exception as e:
            ok, detail = False, f"raised {type(e).__name__}: {e}"
        elapsed = time.time() - started
        mark = "✅" if ok else "❌"
        print(f"{mark} {number}. {name}: {detail} ({elapsed:.2f}s)")
        passed += ok

    print("=" * 50)
    print(f"📊 {passed}/{len(checks)} checks passed")
    return 0 if passed == len(checks) else 1


if __name__ == "__main__":
    sys.exit(main())
