"""Game model for Nim on weighted graphs.

A board is a simple undirected graph with a positive integer weight on
every edge and a token sitting on one vertex.  The player to move picks
an edge incident to the token, strictly decreases its weight (possibly
to zero) and slides the token across it.  Whoever cannot move loses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class InstanceError(ValueError):
    """Malformed graph data or instance file."""


class IllegalMoveError(ValueError):
    """Move does not exist from the given state."""


@dataclass(frozen=True, order=True)
class Move:
    """Slide the token to `to`, setting the traversed edge to `new_weight`."""

    to: int
    new_weight: int


@dataclass(frozen=True)
class GameGraph:
    """Immutable board: vertices 0..n-1, weighted edges, starting vertex.

    Edge order is significant: it defines the index order of the weight
    vector carried by :class:`GameState`.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    start_vertex: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.vertex_count < 1:
            raise InstanceError("vertex_count must be >= 1")
        if not 0 <= self.start_vertex < self.vertex_count:
            raise InstanceError(f"start vertex {self.start_vertex} out of range")
        seen: set[frozenset[int]] = set()
        for u, v, w in self.edges:
            if u == v:
                raise InstanceError(f"loop edge at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InstanceError(f"edge ({u},{v}) endpoint out of range")
            if w < 1:
                raise InstanceError(f"edge ({u},{v}) weight {w} must be >= 1")
            key = frozenset((u, v))
            if key in seen:
                raise InstanceError(f"duplicate edge ({u},{v})")
            seen.add(key)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (neighbor, edge index) pairs, ascending by neighbor."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _edge_lookup(self) -> dict[frozenset[int], int]:
        return {frozenset((u, v)): i for i, (u, v, _) in enumerate(self.edges)}

    def edge_index(self, u: int, v: int) -> int | None:
        return self._edge_lookup.get(frozenset((u, v)))

    def initial_state(self) -> "GameState":
        return GameState(tuple(w for _, _, w in self.edges), self.start_vertex)


@dataclass(frozen=True)
class GameState:
    """Current edge weights (index-aligned with the graph) plus token vertex."""

    weights: tuple[int, ...]
    token: int

    def validate(self, graph: GameGraph) -> None:
        if len(self.weights) != len(graph.edges):
            raise InstanceError("weight vector length mismatch")
        if not 0 <= self.token < graph.vertex_count:
            raise InstanceError(f"token {self.token} out of range")
        for w, (u, v, init) in zip(self.weights, graph.edges):
            if not 0 <= w <= init:
                raise InstanceError(f"weight {w} on edge ({u},{v}) outside 0..{init}")

    def total_weight(self) -> int:
        return sum(self.weights)


def legal_moves(state: GameState, graph: GameGraph) -> list[Move]:
    """All moves from `state`, ascending by target vertex then new weight."""
    moves: list[Move] = []
    for nb, ei in graph.adjacency[state.token]:
        for k in range(state.weights[ei]):
            moves.append(Move(nb, k))
    return moves


def apply_move(state: GameState, graph: GameGraph, move: Move) -> GameState:
    """Return the successor state; raises IllegalMoveError on a bad move."""
    ei = graph.edge_index(state.token, move.to)
    if ei is None:
        raise IllegalMoveError(f"no edge between {state.token} and {move.to}")
    w = state.weights[ei]
    if w == 0:
        raise IllegalMoveError(f"edge ({state.token},{move.to}) already has weight 0")
    if not 0 <= move.new_weight < w:
        raise IllegalMoveError(
            f"new weight {move.new_weight} must be in 0..{w - 1}"
        )
    weights = list(state.weights)
    weights[ei] = move.new_weight
    return GameState(tuple(weights), move.to)


def is_terminal(state: GameState, graph: GameGraph) -> bool:
    """True when the player to move has no positive-weight incident edge."""
    return all(state.weights[ei] == 0 for _, ei in graph.adjacency[state.token])


# ---------------------------------------------------------------------------
# Family generators
# ---------------------------------------------------------------------------

WeightSpec = tuple  # ("uniform", k) | ("list", [w0, w1, ...]) | ("random", cap)


def _assign_weights(
    pairs: list[tuple[int, int]], weights: WeightSpec, seed: int | None
) -> list[tuple[int, int, int]]:
    kind = weights[0]
    if kind == "uniform":
        k = int(weights[1])
        if k < 1:
            raise InstanceError("uniform weight must be >= 1")
        return [(u, v, k) for u, v in pairs]
    if kind == "list":
        values = [int(w) for w in weights[1]]
        if len(values) != len(pairs):
            raise InstanceError(
                f"weight list has {len(values)} entries, need {len(pairs)}"
            )
        return [(u, v, w) for (u, v), w in zip(pairs, values)]
    if kind == "random":
        cap = int(weights[1])
        if cap < 1:
            raise InstanceError("random weight cap must be >= 1")
        rng = random.Random(seed)
        return [(u, v, rng.randint(1, cap)) for u, v in pairs]
    raise InstanceError(f"unknown weight spec {weights!r}")


def family_edge_pairs(family: str, n: int | None = None, j: int | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and canonical edge order for a named family.

    path(n): n edges on n+1 vertices.  cycle(n): n vertices.  complete(n).
    complete_bipartite(2, j) and ssb(j): vertices 0 and 1 are the hubs and
    the start; ssb adds the hub-hub edge first.
    """
    if family == "path":
        if n is None or n < 1:
            raise InstanceError("path needs n >= 1 edges")
        return n + 1, [(i, i + 1) for i in range(n)]
    if family == "cycle":
        if n is None or n < 3:
            raise InstanceError("cycle needs n >= 3 vertices")
        return n, [(i, (i + 1) % n) for i in range(n)]
    if family == "complete":
        if n is None or n < 2:
            raise InstanceError("complete needs n >= 2 vertices")
        return n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    if family in ("complete_bipartite", "k2j"):
        if j is None or j < 1:
            raise InstanceError("complete_bipartite(2, j) needs j >= 1")
        pairs = []
        for leaf in range(2, j + 2):
            pairs.append((0, leaf))
            pairs.append((1, leaf))
        return j + 2, pairs
    if family == "ssb":
        if j is None or j < 1:
            raise InstanceError("ssb needs j >= 1")
        pairs = [(0, 1)]
        for leaf in range(2, j + 2):
            pairs.append((0, leaf))
            pairs.append((1, leaf))
        return j + 2, pairs
    raise InstanceError(f"unknown family {family!r}")


def generate(
    family: str,
    n: int | None = None,
    j: int | None = None,
    weights: WeightSpec = ("uniform", 1),
    seed: int | None = None,
    start: int = 0,
) -> GameGraph:
    """Build a named family instance with a weight assignment.

    For complete_bipartite/ssb the start is hub vertex 0 unless overridden.
    """
    count, pairs = family_edge_pairs(family, n=n, j=j)
    edges = _assign_weights(pairs, weights, seed)
    return GameGraph(count, tuple(edges), start)


# ---------------------------------------------------------------------------
# Instance file format
# ---------------------------------------------------------------------------

FORMAT_HEADER = "nimgraph 1"


def serialize_instance(graph: GameGraph) -> str:
    lines = [FORMAT_HEADER, f"vertices {graph.vertex_count}", f"start {graph.start_vertex}"]
    for u, v, w in graph.edges:
        lines.append(f"edge {u} {v} {w}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> GameGraph:
    """Parse the line-oriented nimgraph format; errors carry line numbers."""

    def fail(lineno: int, message: str) -> None:
        raise InstanceError(f"line {lineno}: {message}")

    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))

    if not lines:
        raise InstanceError("empty instance")
    if lines[0][1] != FORMAT_HEADER:
        fail(lines[0][0], f"expected header '{FORMAT_HEADER}'")
    if len(lines) < 3:
        raise InstanceError("missing vertices/start lines")

    lineno, vline = lines[1]
    parts = vline.split()
    if len(parts) != 2 or parts[0] != "vertices" or not parts[1].isdigit():
        fail(lineno, "expected 'vertices <n>'")
    vertex_count = int(parts[1])

    lineno, sline = lines[2]
    parts = sline.split()
    if len(parts) != 2 or parts[0] != "start" or not parts[1].isdigit():
        fail(lineno, "expected 'start <v>'")
    start = int(parts[1])
    if start >= vertex_count:
        fail(lineno, f"start vertex {start} out of range 0..{vertex_count - 1}")

    edges: list[tuple[int, int, int]] = []
    seen: set[frozenset[int]] = set()
    for lineno, line in lines[3:]:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "edge":
            fail(lineno, "expected 'edge <u> <v> <w>'")
        try:
            u, v, w = int(parts[1]), int(parts[2]), int(parts[3])
        except ValueError:
            fail(lineno, "edge fields must be integers")
            raise  # unreachable, keeps type checkers happy
        if u == v:
            fail(lineno, f"loop edge at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            fail(lineno, f"edge ({u},{v}) endpoint out of range")
        if w < 1:
            fail(lineno, f"edge weight {w} must be >= 1")
        key = frozenset((u, v))
        if key in seen:
            fail(lineno, f"duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v, w))

    return GameGraph(vertex_count, tuple(edges), start)
