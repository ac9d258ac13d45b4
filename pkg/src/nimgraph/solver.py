"""Exhaustive memoized solver: the ground-truth oracle.

Grundy values by minimum-excludant recursion over all moves; a state with
positive Grundy value is a win for the player to move.  States are keyed
by the packed (weight vector, token) pair so a Solver can be reused across
many states of the same board.
"""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass

from .graph import GameGraph, GameState, Move, apply_move, legal_moves

DEFAULT_BUDGET = 1 << 25


class Winner(enum.Enum):
    MOVER = "mover"       # p-position: player to move wins
    OPPONENT = "opponent"  # 0-position: player to move loses


class BudgetExceededError(RuntimeError):
    def __init__(self, states_visited: int):
        super().__init__(f"solve budget exceeded after {states_visited} states")
        self.states_visited = states_visited


@dataclass(frozen=True)
class Analysis:
    winner: Winner
    grundy: int
    optimal_moves: tuple[Move, ...]
    states_visited: int


class Solver:
    """Memoized Grundy solver bound to one graph.

    The memo key packs the weight vector mixed-radix (each edge's radix is
    its initial weight + 1) together with the token, so entries are plain
    ints.  Entries are write-once; sharing a table across workers solving
    independent subtrees gives bit-identical results.
    """

    def __init__(self, graph: GameGraph, max_states: int = DEFAULT_BUDGET):
        self.graph = graph
        self.max_states = max_states
        self.memo: dict[int, int] = {}
        self.states_visited = 0
        self._adj = graph.adjacency
        self._n = graph.vertex_count
        place = []
        p = 1
        for _, _, w in graph.edges:
            place.append(p)
            p *= w + 1
        self._place = tuple(place)
        total = sum(w for _, _, w in graph.edges)
        limit = total * 4 + 1000
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)

    def _encode(self, weights, token: int) -> int:
        packed = 0
        for w, p in zip(weights, self._place):
            packed += w * p
        return packed * self._n + token

    def decode_key(self, key: int) -> GameState:
        packed, token = divmod(key, self._n)
        weights = []
        for _, _, init in self.graph.edges:
            packed, w = divmod(packed, init + 1)
            weights.append(w)
        return GameState(tuple(weights), token)

    def grundy(self, state: GameState) -> int:
        w = list(state.weights)
        packed = 0
        for weight, p in zip(w, self._place):
            packed += weight * p
        return self._grundy(w, state.token, packed)

    def _grundy(self, w: list[int], token: int, packed: int) -> int:
        # `packed` is the mixed-radix encoding of w, threaded incrementally
        # so the hot path never re-walks the weight vector.
        memo = self.memo
        key = packed * self._n + token
        g = memo.get(key)
        if g is not None:
            return g
        self.states_visited += 1
        if self.states_visited > self.max_states:
            raise BudgetExceededError(self.states_visited)
        children = set()
        add = children.add
        grundy = self._grundy
        place = self._place
        for nb, ei in self._adj[token]:
            cw = w[ei]
            if cw == 0:
                continue
            p = place[ei]
            base = packed - cw * p
            for k in range(cw):
                w[ei] = k
                add(grundy(w, nb, base + k * p))
            w[ei] = cw
        g = 0
        while g in children:
            g += 1
        memo[key] = g
        return g

    def analyze(self, state: GameState) -> Analysis:
        g = self.grundy(state)
        optimal: list[Move] = []
        if g > 0:
            for move in legal_moves(state, self.graph):
                if self.grundy(apply_move(state, self.graph, move)) == 0:
                    optimal.append(move)
        winner = Winner.MOVER if g > 0 else Winner.OPPONENT
        return Analysis(winner, g, tuple(optimal), self.states_visited)

    def best_line(self, state: GameState) -> list[Move]:
        """Principal variation: optimal moves while winning, first legal
        move otherwise, until the game ends."""
        line: list[Move] = []
        current = state
        while True:
            moves = legal_moves(current, self.graph)
            if not moves:
                return line
            analysis = self.analyze(current)
            move = analysis.optimal_moves[0] if analysis.optimal_moves else moves[0]
            line.append(move)
            current = apply_move(current, self.graph, move)

    def audit(self) -> None:
        """Check mex consistency of every memo entry; raises on violation.

        Every child of a solved state is itself in the memo, so the whole
        table can be re-derived from itself.
        """
        for key, g in self.memo.items():
            state = self.decode_key(key)
            children = set()
            for nb, ei in self._adj[state.token]:
                cw = state.weights[ei]
                for k in range(cw):
                    w = list(state.weights)
                    w[ei] = k
                    child = self.memo.get(self._encode(w, nb))
                    if child is None:
                        raise AssertionError(f"missing child entry for key {key}")
                    children.add(child)
            if g in children:
                raise AssertionError(f"grundy {g} appears among children of {state}")
            for value in range(g):
                if value not in children:
                    raise AssertionError(
                        f"value {value} < grundy {g} missing among children of {state}"
                    )


def solve(state: GameState, graph: GameGraph, budget: int = DEFAULT_BUDGET) -> Analysis:
    """One-shot analysis with a fresh memo table."""
    return Solver(graph, max_states=budget).analyze(state)


def best_line(state: GameState, graph: GameGraph, budget: int = DEFAULT_BUDGET) -> list[Move]:
    return Solver(graph, max_states=budget).best_line(state)
