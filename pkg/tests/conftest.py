import pytest

from nimgraph.graph import GameGraph, apply_move, legal_moves


def brute_mover_wins(state, graph) -> bool:
    """Plain win/loss recursion, independent of the Grundy solver."""
    return any(
        not brute_mover_wins(apply_move(state, graph, m), graph)
        for m in legal_moves(state, graph)
    )


@pytest.fixture
def golden_c4_mover_win() -> GameGraph:
    # C4 with the token between incident weights 3 and 4
    return GameGraph(4, ((0, 1, 3), (1, 3, 2), (3, 2, 4), (2, 0, 4)), 0)


@pytest.fixture
def golden_c4_opponent_win() -> GameGraph:
    return GameGraph(4, ((0, 1, 2), (1, 3, 4), (3, 2, 3), (2, 0, 2)), 0)


@pytest.fixture
def golden_c6_reduction() -> GameGraph:
    # C6, weights 6,5,6,2,4,5 around the cycle, token at vertex 0
    return GameGraph(
        6, ((0, 1, 6), (1, 2, 5), (2, 3, 6), (3, 4, 2), (4, 5, 4), (5, 0, 5)), 0
    )
