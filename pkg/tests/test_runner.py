from firegrid.runner import DuelRow, format_summary, play_pairing, run_duel

STRATEGIES = ["wall", "restart16", "idle"]
ADVERSARIES = ["thm1", "fixed:1,1,1,13"]


def test_duel_matrix():
    rows = run_duel(STRATEGIES, ADVERSARIES, horizon=20)
    assert len(rows) == 6
    assert [(r.strategy, r.adversary) for r in rows] == sorted((s, a) for s in STRATEGIES for a in ADVERSARIES)
    assert all(r.outcome != "Contained" for r in rows if r.strategy == "idle")
    assert all(r.outcome == "Escaped" for r in rows if r.adversary == "thm1")
    wall = next(r for r in rows if r.strategy == "wall" and r.adversary == "fixed:1,1,1,13")
    assert wall == DuelRow("wall", "fixed:1,1,1,13", "Contained", 4, 20, 16)


def test_duel_in_a_process_pool_matches():
    assert run_duel(STRATEGIES, ADVERSARIES, horizon=20, workers=2) == run_duel(STRATEGIES, ADVERSARIES, horizon=20)


def test_failed_pairing_becomes_an_error_row():
    row = play_pairing("offline-diamond", "thm1", horizon=10, seed=0)
    assert row.outcome == "error"
    assert "offline-diamond" in row.error


def test_summary_table():
    rows = [DuelRow("wall", "fixed:1,1,1,13", "Contained", 4, 20, 16), DuelRow("idle", "thm1", "Escaped", 2, 13, 0)]
    lines = format_summary(rows).splitlines()
    assert lines[0].split() == ["strategy", "adversary", "outcome", "turn", "burned", "placed"]
    assert lines[1].split() == ["wall", "fixed:1,1,1,13", "Contained", "4", "20", "16"]
    assert len(lines) == 3
