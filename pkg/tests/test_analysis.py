import random
from collections import deque
from itertools import combinations

import pytest

from firegrid.adversaries import FixedBudgets, FSeq, Periodic, Thm1Adaptive
from firegrid.analysis import (
    NotEscaped,
    Verdict,
    bounded_minimax,
    certify_trace,
    fire_enclosed,
    flood_escape_check,
    loss_accounting,
    min_barrier,
    verified_min_barrier,
)
from firegrid.analysis.minimax import canonical_state
from firegrid.engine import EscapeCertificate, Escaped, GameState, TurnRecord, new_game
from firegrid.errors import ClipTooSmall, PreconditionViolated, TraceMismatch
from firegrid.lattice import ORIGIN, SYMMETRIES, Cell, diamond_cells, neighbors, ring_cells, transform_cells
from firegrid.strategies import Idle, IncrementalWall, RestartDoubling
from firegrid.trace import play, read_trace, write_trace


def diamond_fire(r, protected=(), turn=None):
    return GameState(
        burning=frozenset(diamond_cells(ORIGIN, r)),
        protected=frozenset(protected),
        turn=r if turn is None else turn,
        ignition=ORIGIN,
    )


# escape

def test_enclosed_fire_burns_out():
    verdict = flood_escape_check(diamond_fire(2, ring_cells(ORIGIN, 3)))
    assert verdict == NotEscaped(contained_turn=3, burned_count=13)


def test_pocket_burns_before_containment():
    # ring 4 protected around a radius 2 fire: ring 3 still burns
    verdict = flood_escape_check(diamond_fire(2, ring_cells(ORIGIN, 4)))
    assert verdict == NotEscaped(contained_turn=4, burned_count=25)


def test_gap_in_the_ring_escapes():
    ring = ring_cells(ORIGIN, 5)
    verdict = flood_escape_check(diamond_fire(4, ring[1:]))
    assert isinstance(verdict, EscapeCertificate)
    assert verdict.kind == "FloodToInfinity"
    assert verdict.witness is not None


def test_escape_check_needs_a_zero_tail():
    with pytest.raises(PreconditionViolated):
        flood_escape_check(new_game(), future_budgets_zero=False)


def leaves_doubled_box(state):
    """Flood from the fire inside a box twice the size of the touched cells' bounding box"""
    touched = state.burning | state.protected
    min_x, max_x = min(c.x for c in touched), max(c.x for c in touched)
    min_y, max_y = min(c.y for c in touched), max(c.y for c in touched)
    width, height = max_x - min_x + 1, max_y - min_y + 1
    seen = set(state.burning)
    queue = deque(state.burning)
    while queue:
        c = queue.popleft()
        for n in neighbors(c):
            if n in seen or n in state.protected:
                continue
            if not (min_x - width <= n.x <= max_x + width and min_y - height <= n.y <= max_y + height):
                return True
            seen.add(n)
            queue.append(n)
    return False


def test_escape_check_agrees_with_a_doubled_box():
    rng = random.Random(9)
    escaped = enclosed = 0
    for _ in range(60):
        r = rng.randint(1, 3)
        protected = [c for c in ring_cells(ORIGIN, r + 1) if rng.random() < 0.9]
        protected += [c for c in ring_cells(ORIGIN, r + 2) if rng.random() < 0.5]
        state = diamond_fire(r, protected)
        verdict = flood_escape_check(state)
        assert isinstance(verdict, EscapeCertificate) == leaves_doubled_box(state)
        if isinstance(verdict, EscapeCertificate):
            escaped += 1
        else:
            enclosed += 1
    assert escaped and enclosed


# barrier

def test_min_barrier_of_an_untouched_diamond():
    for r in range(0, 6):
        assert min_barrier(diamond_fire(r), 12) == 4 * (r + 1)


def test_twenty_needed_but_only_nineteen_arrive():
    barrier = min_barrier(diamond_fire(4), 12)
    assert barrier == 20
    assert FSeq(5).budget_at(5) == 19
    assert barrier > 19


def test_min_barrier_counts_existing_protection():
    ring = ring_cells(ORIGIN, 5)
    assert min_barrier(diamond_fire(4, ring[1:]), 12) == 1
    assert min_barrier(diamond_fire(4, ring), 12) == 0


def test_min_barrier_with_a_wall_started():
    state = GameState(
        burning=frozenset([ORIGIN]),
        protected=frozenset([Cell(1, 0)]),
        turn=0,
        ignition=ORIGIN,
    )
    assert min_barrier(state, 12) == 3


def test_clip_must_exceed_the_fire():
    with pytest.raises(ClipTooSmall):
        min_barrier(diamond_fire(4), 4)
    with pytest.raises(ClipTooSmall):
        fire_enclosed(diamond_fire(4), 3)


def test_fire_enclosed():
    assert fire_enclosed(diamond_fire(2, ring_cells(ORIGIN, 3)), 8)
    assert not fire_enclosed(diamond_fire(2), 8)


def test_verified_min_barrier_agrees_on_a_diamond():
    assert verified_min_barrier(diamond_fire(3), 10) == 16


def brute_force_barrier(state, clip_radius, limit):
    """Smallest number of extra protected cells that enclose the fire, searching every subset"""
    free = [c for c in diamond_cells(ORIGIN, clip_radius) if not state.is_blocked(c)]
    for size in range(limit + 1):
        for extra in combinations(free, size):
            trial = GameState(
                burning=state.burning,
                protected=state.protected | frozenset(extra),
                turn=state.turn,
                ignition=ORIGIN,
            )
            if fire_enclosed(trial, clip_radius):
                return size
    return None


def test_min_barrier_matches_brute_force():
    rng = random.Random(5)
    nearby = [c for c in diamond_cells(ORIGIN, 2) if c != ORIGIN]
    for _ in range(12):
        protected = frozenset(c for c in nearby if rng.random() < 0.3)
        state = GameState(burning=frozenset([ORIGIN]), protected=protected, turn=0, ignition=ORIGIN)
        # ring 1 is always a cut, so four extra cells always suffice
        assert min_barrier(state, 3) == brute_force_barrier(state, 3, 4), sorted(protected)


def test_min_barrier_around_a_partly_protected_ring():
    assert min_barrier(diamond_fire(1, [Cell(0, 2)]), 5) == 7


# minimax

def test_minimax_thm1_cannot_be_contained():
    result = bounded_minimax("thm1", candidate_radius=6, horizon=5)
    assert result.verdict == Verdict.CANNOT_CONTAIN
    assert result.adversary_id == "thm1"


def test_minimax_four_at_once_contains():
    result = bounded_minimax("fixed:4", candidate_radius=2, horizon=2)
    assert result.verdict == Verdict.CAN_CONTAIN


def test_minimax_single_firefighter_cannot_contain():
    assert bounded_minimax("fixed:1", candidate_radius=3, horizon=3).verdict == Verdict.CANNOT_CONTAIN


def test_minimax_guardrail_is_inconclusive():
    result = bounded_minimax(Periodic([2]), candidate_radius=3, horizon=3, max_nodes=1)
    assert result.verdict == Verdict.INCONCLUSIVE
    assert "node limit" in result.reason
    assert "Inconclusive" in result.describe()


def test_minimax_rejects_bad_bounds():
    with pytest.raises(PreconditionViolated):
        bounded_minimax("thm1", candidate_radius=0, horizon=5)
    with pytest.raises(PreconditionViolated):
        bounded_minimax("thm1", candidate_radius=3, horizon=0)


def test_canonical_state_is_symmetry_invariant():
    state = GameState(
        burning=frozenset([ORIGIN, Cell(-1, 0), Cell(0, 1)]),
        protected=frozenset([Cell(1, 0), Cell(2, 1)]),
        turn=1,
        ignition=ORIGIN,
    )
    expected = canonical_state(state)
    for symmetry in SYMMETRIES:
        image = GameState(
            burning=frozenset(transform_cells(state.burning, symmetry)),
            protected=frozenset(transform_cells(state.protected, symmetry)),
            turn=1,
            ignition=ORIGIN,
        )
        assert canonical_state(image) == expected


# loss accounting

def test_ledger_single_ring():
    trace = play(ORIGIN, RestartDoubling(), FixedBudgets([20]), horizon=10)
    ledger = loss_accounting(trace)
    assert [r.distance for r in ledger.rings] == [2]
    assert ledger.total_placed == 8
    assert ledger.total_abandoned == 0
    assert ledger.M == 1
    assert ledger.final_ring_need == 8
    assert ledger.abandoned_within_bound and ledger.final_ring_within_bound


def test_ledger_counts_abandoned_rings():
    trace = play(ORIGIN, RestartDoubling(), Periodic([1]), horizon=6)
    ledger = loss_accounting(trace)
    assert [r.distance for r in ledger.rings][:3] == [2, 4, 8]
    assert ledger.rings[0].abandoned == 2
    assert ledger.M is None
    assert ledger.abandoned_within_bound is None


def test_ledger_needs_a_restart16_trace(figure1_trace):
    with pytest.raises(TraceMismatch):
        loss_accounting(figure1_trace)


# certification

def test_certify_contained_golden(figure1_golden):
    result = certify_trace(figure1_golden, "containment")
    assert result.status == "verified"
    assert result.exit_code == 0
    escape = certify_trace(figure1_golden, "escape")
    assert escape.status == "refuted"
    assert escape.exit_code == 1


def test_certify_thm1_escape():
    trace = play(ORIGIN, IncrementalWall(), Thm1Adaptive(), horizon=10)
    result = certify_trace(read_trace(write_trace(trace)), "containment")
    assert result.status == "refuted"
    assert result.exit_code == 1
    assert result.certificate.kind == "FloodToInfinity"
    assert result.line().startswith("verdict=refuted query=containment")
    assert certify_trace(trace, "escape").exit_code == 0


def test_certify_barrier_deficit():
    trace = play(ORIGIN, IncrementalWall(), FixedBudgets([1] * 10), horizon=3)
    result = certify_trace(trace, "containment")
    assert result.status == "refuted"
    assert result.certificate.kind == "BarrierDeficit"
    assert result.certificate.remaining_budget == 7
    assert result.certificate.min_barrier > 7


def test_barrier_deficit_is_followed_by_a_flood():
    budgets = FixedBudgets([1] * 10)
    early = certify_trace(play(ORIGIN, IncrementalWall(), budgets, horizon=3), "containment")
    assert early.certificate.kind == "BarrierDeficit"

    full = play(ORIGIN, IncrementalWall(), FixedBudgets([1] * 10), horizon=40)
    assert isinstance(full.outcome, Escaped)
    assert full.outcome.turn == 10
    assert full.outcome.certificate.kind == "FloodToInfinity"
    later = certify_trace(full, "containment")
    assert later.status == "refuted"
    assert later.certificate.kind == "FloodToInfinity"


def test_certify_unknown_future_is_inconclusive():
    trace = play(ORIGIN, Idle(), Periodic([1]), horizon=5)
    result = certify_trace(trace, "containment")
    assert result.status == "inconclusive"
    assert result.exit_code == 2


def test_certify_rejects_a_tampered_trace(figure1_golden):
    first = figure1_golden.records[0]
    figure1_golden.records[0] = TurnRecord(
        first.turn, first.budget, first.placements, first.newly_burned[:-1],
        first.cumulative_protected, first.cumulative_burned - 1,
    )
    with pytest.raises(TraceMismatch):
        certify_trace(figure1_golden, "containment")


def test_certify_unknown_query(figure1_golden):
    with pytest.raises(PreconditionViolated):
        certify_trace(figure1_golden, "closure")
