import pytest
from hypothesis import given, settings, strategies as st

from nimgraph.graph import (
    GameGraph,
    GameState,
    apply_move,
    generate,
    legal_moves,
)
from nimgraph.solver import (
    Analysis,
    BudgetExceededError,
    Solver,
    Winner,
    best_line,
    solve,
)
from tests.conftest import brute_mover_wins


def independent_single_edge_grundy(w: int) -> int:
    """mex recursion on one pile, written without the game model."""
    values = []
    for k in range(w):
        values.append(independent_single_edge_grundy(k))
    g = 0
    while g in values:
        g += 1
    return g


@pytest.mark.parametrize("w", range(0, 9))
def test_single_edge_grundy_equals_weight(w):
    # frozen oracle: mex{g(0..w-1)} = w, confirmed by direct enumeration
    assert independent_single_edge_grundy(w) == w
    if w >= 1:
        g = GameGraph(2, ((0, 1, w),))
        assert solve(g.initial_state(), g).grundy == w


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("start", range(4))
def test_uniform_c4_grundy_zero(k, start):
    g = generate("cycle", n=4, weights=("uniform", k), start=start)
    analysis = solve(g.initial_state(), g)
    assert analysis.grundy == 0
    assert analysis.winner == Winner.OPPONENT


def test_golden_c4_winners(golden_c4_mover_win, golden_c4_opponent_win):
    assert solve(golden_c4_mover_win.initial_state(), golden_c4_mover_win).winner == Winner.MOVER
    assert solve(golden_c4_opponent_win.initial_state(), golden_c4_opponent_win).winner == Winner.OPPONENT


@pytest.mark.parametrize("length", range(1, 11))
def test_unit_path_parity_from_end(length):
    g = generate("path", n=length)
    expected = Winner.MOVER if length % 2 == 1 else Winner.OPPONENT
    assert solve(g.initial_state(), g).winner == expected


def test_winner_grundy_coherence_and_optimal_moves(golden_c4_mover_win):
    solver = Solver(golden_c4_mover_win)
    analysis = solver.analyze(golden_c4_mover_win.initial_state())
    assert (analysis.grundy > 0) == (analysis.winner == Winner.MOVER)
    assert analysis.optimal_moves
    for move in analysis.optimal_moves:
        child = apply_move(golden_c4_mover_win.initial_state(), golden_c4_mover_win, move)
        assert solver.analyze(child).winner == Winner.OPPONENT


def test_losing_position_has_no_optimal_moves(golden_c4_opponent_win):
    analysis = solve(golden_c4_opponent_win.initial_state(), golden_c4_opponent_win)
    assert analysis.optimal_moves == ()
    assert analysis.grundy == 0


def test_memo_audit_mex_consistency(golden_c6_reduction):
    solver = Solver(golden_c6_reduction)
    solver.analyze(golden_c6_reduction.initial_state())
    solver.audit()  # raises on any mex/coherence violation


def test_determinism(golden_c4_mover_win):
    a1 = solve(golden_c4_mover_win.initial_state(), golden_c4_mover_win)
    a2 = solve(golden_c4_mover_win.initial_state(), golden_c4_mover_win)
    assert a1.grundy == a2.grundy
    assert a1.optimal_moves == a2.optimal_moves


def test_budget_exceeded_carries_count():
    g = generate("complete", n=5, weights=("uniform", 2))
    with pytest.raises(BudgetExceededError) as exc:
        solve(g.initial_state(), g, budget=10)
    assert exc.value.states_visited == 11


def test_best_line_terminal_is_empty():
    g = GameGraph(2, ((0, 1, 1),))
    assert best_line(GameState((0,), 0), g) == []


def test_best_line_single_edge():
    g = GameGraph(2, ((0, 1, 1),))
    assert len(best_line(g.initial_state(), g)) == 1


def test_best_line_alternates_to_terminal(golden_c4_mover_win):
    graph = golden_c4_mover_win
    line = best_line(graph.initial_state(), graph)
    state = graph.initial_state()
    for move in line:
        assert move in legal_moves(state, graph)
        state = apply_move(state, graph, move)
    assert legal_moves(state, graph) == []
    # mover wins the left C4, so the line has odd length
    assert len(line) % 2 == 1


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=5, unique=True))
    edges = tuple(
        (u, v, draw(st.integers(min_value=1, max_value=2))) for u, v in chosen
    )
    return GameGraph(n, edges, draw(st.integers(min_value=0, max_value=n - 1)))


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_solver_matches_plain_win_loss_recursion(graph):
    """Dual-route check: Grundy positivity vs memo-free win/loss search."""
    state = graph.initial_state()
    expected = brute_mover_wins(state, graph)
    assert (solve(state, graph).winner == Winner.MOVER) == expected


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_mex_consistency_property(graph):
    solver = Solver(graph)
    solver.analyze(graph.initial_state())
    solver.audit()
