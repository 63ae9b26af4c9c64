import random
from collections import deque

import pytest

from firegrid.adversaries import EventuallyOne, FixedBudgets, FSeq, Periodic, Thm1Adaptive, smallest_N
from firegrid.analysis import loss_accounting
from firegrid.engine import Contained, Escaped, GameHistory, new_game, play_turn
from firegrid.errors import ConditionUnsatisfied, ConfigError, UnknownIdentifier
from firegrid.lattice import (
    ORIGIN,
    Cell,
    Polygon,
    diamond_cells,
    l1_distance,
    neighbors,
    polygon_cells,
    polygon_contains,
    ring_cells,
)
from firegrid.strategies import (
    Idle,
    IncrementalWall,
    OfflineDiamond,
    RandomLegal,
    RestartDoubling,
    build_strategy,
    decide_idle,
    decide_incremental_wall,
    decide_offline_diamond,
    decide_random_legal,
    decide_restart16,
    wall_polygon,
)
from firegrid.strategies.incremental_wall import CLOSED, WallArm, formula_cell
from firegrid.trace import play, write_trace


def play_turns(strategy, budgets):
    """Play a strategy turn by turn, yielding the history before each decision"""
    history = GameHistory(state=new_game())
    for budget in budgets:
        yield history
        cells = strategy.decide(history, budget)
        state, record = play_turn(history.state, budget, cells)
        history.state = state
        history.records.append(record)
        if not record.newly_burned:
            return


def diamond_size(r):
    return 2 * r * r + 2 * r + 1


# offline diamond

def offline_sequences():
    rng = random.Random(2024)
    sequences = [FSeq(j).known_sequence(j) for j in range(2, 21)]
    while len(sequences) < 200:
        seq = [rng.choice([0, 0, 1, 2, 3, 4, 5, 6, 8]) for _ in range(rng.randint(1, 40))]
        n = smallest_N(seq, 4)
        if n is not None and n <= 40:
            sequences.append(seq)
    return sequences


def test_offline_diamond_contains_at_n():
    for seq in offline_sequences():
        n = smallest_N(seq, 4)
        trace = play(ORIGIN, OfflineDiamond(seq), FixedBudgets(seq), horizon=len(seq) + 2)
        assert trace.outcome == Contained(n, diamond_size(n - 1)), seq


def test_offline_diamond_places_only_on_ring_n():
    trace = play(ORIGIN, OfflineDiamond([1, 0, 0, 0, 19]), FSeq(5), horizon=10)
    placed = [c for r in trace.records for c in r.placements]
    assert len(placed) == 20
    assert set(placed) == set(ring_cells(ORIGIN, 5))


def test_offline_diamond_needs_condition():
    with pytest.raises(ConditionUnsatisfied):
        OfflineDiamond([1, 1, 4, 1, 1, 1, 15])


def test_offline_diamond_wrapper_uses_the_sequence_budget():
    history = GameHistory(state=new_game())
    assert decide_offline_diamond(history, [1, 0, 0, 0, 19]) == [Cell(5, 0)]


# incremental wall

def test_wall_reproduces_figure1(figure1_trace, golden_dir):
    assert figure1_trace.outcome == Contained(4, 20)
    placements = [r.placements for r in figure1_trace.records]
    assert placements[:3] == [(Cell(1, 0),), (Cell(2, 1),), (Cell(2, -1),)]
    assert len(placements[3]) == 13
    assert write_trace(figure1_trace) == (golden_dir / "figure1.trace").read_text(encoding="utf-8")


def test_wall_reproduces_example1(example1_trace, golden_dir):
    assert example1_trace.outcome == Contained(7, 49)
    assert example1_trace.protected_count == 24
    assert write_trace(example1_trace) == (golden_dir / "example1.trace").read_text(encoding="utf-8")


def test_example1_contains_without_the_sufficient_condition(example1_trace):
    assert smallest_N(example1_trace.budgets, 4) is None
    assert sum(example1_trace.budgets) == 24 < 28
    assert isinstance(example1_trace.outcome, Contained)


def test_wall_single_firefighter_stays_in_the_wall_polygon():
    for m in range(1, 6):
        budgets = [0] * (m - 1) + [1] * 25
        strategy = IncrementalWall()
        for history in play_turns(strategy, budgets):
            i = history.state.turn
            if i < m:
                continue
            polygon = Polygon(turn_index=i, wall_offset=m)
            region = polygon_cells(polygon)
            assert history.state.burning <= region
            ahead = Polygon(turn_index=i + 1, wall_offset=m)
            for p in history.state.protected:
                assert polygon_contains(ahead, p)
                assert p.y == p.x - m or p.y == -p.x + m


def ignition_component(state, radius):
    """Cells of the diamond of `radius` connected to the ignition without crossing protection"""
    allowed = set(diamond_cells(ORIGIN, radius)) - state.protected
    seen = {ORIGIN}
    queue = deque([ORIGIN])
    while queue:
        c = queue.popleft()
        for n in neighbors(c):
            if n in allowed and n not in seen:
                seen.add(n)
                queue.append(n)
    return seen


def test_wall_contains_eventually_one_streams_by_n():
    rng = random.Random(6)
    for k in range(300):
        m = rng.randint(1, 10)
        n_target = rng.randint(m, 30)
        adversary = EventuallyOne(m, n_target, seed=k)
        budgets = adversary.known_sequence(n_target + 5)
        n = smallest_N(budgets, 4)
        strategy = IncrementalWall()
        for history in play_turns(strategy, budgets):
            state = history.state
            i = state.turn
            assert state.burning <= ignition_component(state, i)
            if i >= m and all(b == 1 for b in budgets[m - 1:i]):
                # nothing but single firefighters so far: the plain wall polygon holds
                assert state.burning <= polygon_cells(Polygon(turn_index=i, wall_offset=m))
            _, boundary = wall_polygon(state)
            assert state.protected <= boundary
            assert len(boundary) <= 4 * history.turn
        assert strategy.wall.phase == CLOSED
        assert history.state.turn <= n
        assert not history.records[-1].newly_burned


def test_wall_literal_formula_cells():
    assert [formula_cell(1, j) for j in range(1, 5)] == [Cell(2, 0), Cell(2, 1), Cell(3, -1), Cell(3, 2)]


def test_wall_literal_formula_follows_the_formula_after_the_root():
    trace = play(ORIGIN, IncrementalWall(literal_formula=True), FixedBudgets([1, 1, 1, 13]), horizon=10)
    assert trace.records[0].placements == (Cell(1, 0),)
    assert trace.records[1].placements == (Cell(2, 0),)


def test_wall_never_contains_constant_one():
    trace = play(ORIGIN, IncrementalWall(), Periodic([1]), horizon=50)
    assert not isinstance(trace.outcome, Contained)


def test_wall_heads_stay_ahead_of_the_fire():
    for m in range(1, 6):
        strategy = IncrementalWall()
        history = GameHistory(state=new_game())
        for budget in [0] * (m - 1) + [1] * 25:
            turn = history.turn
            arms_before = [WallArm(a.head, a.direction) for a in strategy.wall.arms.values()]
            cells = strategy.decide(history, budget)
            if budget:
                assert len(cells) == 1
                cell = cells[0]
                # placed before the spread of this turn, so distance == turn is still in time
                assert l1_distance(cell, ORIGIN) >= turn
                assert cell in strategy.wall.active_heads
                if arms_before:
                    advanced = [a for a in arms_before if a.next_cell == cell]
                    assert len(advanced) >= 1
                    assert advanced[0].slack(turn) >= 0
            state, record = play_turn(history.state, budget, cells)
            history.state = state
            history.records.append(record)


def test_wall_queues_surplus_and_restarts_the_upper_wall():
    strategy = IncrementalWall()
    histories = play_turns(strategy, [1, 1, 4, 1, 1, 1, 15])
    for _ in range(4):
        next(histories)
    assert strategy.wall.perimeter_queue == [Cell(1, 2), Cell(0, 3), Cell(-1, 2)]
    assert set(strategy.wall.active_heads) == {Cell(-1, 2), Cell(2, -1)}


def test_wall_wrapper_starts_at_the_root():
    history = GameHistory(state=new_game())
    assert decide_incremental_wall(history, 0) == []
    assert decide_incremental_wall(history, 1) == [Cell(1, 0)]
    strategy = IncrementalWall()
    assert decide_incremental_wall(history, 1, strategy) == [Cell(1, 0)]
    assert strategy.wall.M == 1


# restart doubling

def restart_sequences():
    rng = random.Random(16)
    sequences = []
    while len(sequences) < 300:
        seq = [rng.choice([0, 0, 0, 1, 1, 2, 5, 10, 20, 40, 60]) for _ in range(rng.randint(1, 20))]
        n = smallest_N(seq, 16)
        if n is not None:
            sequences.append(seq[:n])
    return sequences


def test_restart16_contains_and_loss_stays_bounded():
    for seq in restart_sequences():
        trace = play(ORIGIN, RestartDoubling(), FixedBudgets(seq), horizon=len(seq) + 100)
        assert isinstance(trace.outcome, Contained), seq
        ledger = loss_accounting(trace)
        assert ledger.M == len(seq)
        assert ledger.abandoned_within_bound, (seq, ledger.summary())
        assert ledger.final_ring_within_bound, (seq, ledger.summary())


def test_restart16_first_ring_is_twice_the_first_funded_turn():
    strategy = RestartDoubling()
    histories = list(play_turns(strategy, [0, 0, 40]))
    assert strategy.target_distance == 6
    assert len(histories) == 3


def test_restart16_restarts_when_the_ring_breaks():
    strategy = RestartDoubling()
    list(play_turns(strategy, [1, 0, 0, 0, 0]))
    distances = [a.distance for a in strategy.rings.attempts]
    assert distances[0] == 2
    assert distances[1] == 4
    assert strategy.rings.attempts[0].broken_turn == 2


def test_restart16_wrapper_fills_the_first_ring():
    history = GameHistory(state=new_game())
    assert decide_restart16(history, 0) == []
    cells = decide_restart16(history, 16)
    assert sorted(cells) == sorted(ring_cells(ORIGIN, 2))
    strategy = RestartDoubling()
    assert len(decide_restart16(history, 3, strategy)) == 3
    assert strategy.target_distance == 2


# baselines and the adaptive adversary

def test_random_legal_is_deterministic_per_seed():
    a = play(ORIGIN, RandomLegal(seed=3), Periodic([2]), horizon=8)
    b = play(ORIGIN, RandomLegal(seed=3), Periodic([2]), horizon=8)
    assert write_trace(a) == write_trace(b)


def test_idle_wrapper_places_nothing():
    history = GameHistory(state=new_game())
    assert decide_idle(history) == []
    assert Idle().decide(history, 5) == []


def test_random_legal_wrapper_stays_legal():
    history = GameHistory(state=new_game())
    cells = decide_random_legal(history, 5, seed=1)
    assert len(cells) <= 5
    assert len(set(cells)) == len(cells)
    assert all(c != ORIGIN and l1_distance(c, ORIGIN) <= 4 for c in cells)


def test_thm1_defeats_every_online_strategy():
    strategies = [IncrementalWall(), RestartDoubling(), Idle()] + [RandomLegal(seed=s) for s in range(100)]
    for strategy in strategies:
        trace = play(ORIGIN, strategy, Thm1Adaptive(), horizon=10)
        assert isinstance(trace.outcome, Escaped), strategy
        assert trace.outcome.turn <= 6
        assert trace.outcome.certificate.kind == "FloodToInfinity"


# registry

def test_build_strategy_ids():
    assert isinstance(build_strategy("wall"), IncrementalWall)
    assert build_strategy("wall", {"literal_formula": True}).literal_formula
    assert isinstance(build_strategy("restart16"), RestartDoubling)
    assert isinstance(build_strategy("idle"), Idle)
    assert build_strategy("random", {"seed": 4}).seed == 4
    assert build_strategy("random", seed=9).seed == 9
    assert build_strategy("offline-diamond", declared_sequence=[1, 1, 1, 13]).ring_distance == 4


def test_build_strategy_errors():
    with pytest.raises(UnknownIdentifier) as excinfo:
        build_strategy("greedy")
    assert "restart16" in str(excinfo.value)
    with pytest.raises(ConfigError):
        build_strategy("idle", {"seed": 1})
    with pytest.raises(ConfigError):
        build_strategy("offline-diamond")
