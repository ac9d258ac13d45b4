"""Detection of the graph families and adjacency structure the strategies need.

Everything here works on the positive-weight subgraph: an edge reduced to
weight 0 is gone for structural purposes, so tags stay meaningful mid-game.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

from .graph import GameGraph, GameState


class Kind(enum.Enum):
    ODD_PATH_OPTION = "OddPathOption"
    ALL_EVEN_PATH_OPTIONS = "AllEvenPathOptions"
    ODD_CYCLE = "OddCycle"
    EVEN_CYCLE = "EvenCycle"
    K2J_HUB_START = "K2jHubStart"
    SSB_HUB_START = "SSBHubStart"
    COMPLETE = "Complete"
    MUTUALLY_ADJACENT_PAIR = "MutuallyAdjacentPair"


@dataclass(frozen=True)
class StructureTag:
    kind: Kind
    j: int | None = None
    pair: tuple[int, int] | None = None
    k: int | None = None

    def __str__(self) -> str:
        params = []
        if self.j is not None:
            params.append(f"j={self.j}")
        if self.pair is not None:
            params.append(f"pair=({self.pair[0]},{self.pair[1]})")
        if self.k is not None:
            params.append(f"k={self.k}")
        return f"{self.kind.value}({', '.join(params)})" if params else self.kind.value


def positive_adjacency(state: GameState, graph: GameGraph) -> list[dict[int, int]]:
    """Per vertex: {neighbor: edge index} over edges with weight > 0."""
    adj: list[dict[int, int]] = [{} for _ in range(graph.vertex_count)]
    for i, (u, v, _) in enumerate(graph.edges):
        if state.weights[i] > 0:
            adj[u][v] = i
            adj[v][u] = i
    return adj


def component_of(adj: list[dict[int, int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for nb in adj[v]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen


def _is_path_component(adj, comp: set[int]) -> bool:
    if len(comp) == 1:
        return True
    edge_count = sum(len(adj[v]) for v in comp) // 2
    return edge_count == len(comp) - 1 and all(len(adj[v]) <= 2 for v in comp)


def _is_cycle_component(adj, comp: set[int]) -> bool:
    return len(comp) >= 3 and all(len(adj[v]) == 2 for v in comp)


def path_options(state: GameState, graph: GameGraph) -> list[tuple[int, ...]]:
    """Maximal simple paths from the token that end at a degree-1 vertex.

    Returned as vertex tuples starting at the token; edge count is
    len(path) - 1.
    """
    adj = positive_adjacency(state, graph)
    results: list[tuple[int, ...]] = []
    path = [state.token]
    on_path = {state.token}

    def extend(v: int) -> None:
        for nb in sorted(adj[v]):
            if nb in on_path:
                continue
            path.append(nb)
            on_path.add(nb)
            if len(adj[nb]) == 1:
                results.append(tuple(path))
            else:
                extend(nb)
            on_path.remove(nb)
            path.pop()

    extend(state.token)
    return results


def _pendant_odd_options(state: GameState, graph: GameGraph) -> list[tuple[int, ...]]:
    """Odd path options whose interior vertices all have degree 2.

    Zeroing the first edge of such an option strands the opponent at the
    end of an even pendant path, so these are the options the path rule
    may safely claim on.
    """
    adj = positive_adjacency(state, graph)
    pendant = []
    for option in path_options(state, graph):
        if (len(option) - 1) % 2 == 0:
            continue
        if all(len(adj[v]) == 2 for v in option[1:-1]):
            pendant.append(option)
    return pendant


def detect(state: GameState, graph: GameGraph) -> list[StructureTag]:
    """All structure tags that hold for the token's positive-weight component."""
    adj = positive_adjacency(state, graph)
    token = state.token
    comp = component_of(adj, token)
    comp_edges = {
        i
        for i, (u, v, _) in enumerate(graph.edges)
        if state.weights[i] > 0 and u in comp
    }
    unit = all(state.weights[i] == 1 for i in comp_edges)
    tags: list[StructureTag] = []

    options = path_options(state, graph)
    odd_exists = any((len(o) - 1) % 2 == 1 for o in options)
    if odd_exists:
        tags.append(StructureTag(Kind.ODD_PATH_OPTION))
    elif _is_path_component(adj, comp):
        tags.append(StructureTag(Kind.ALL_EVEN_PATH_OPTIONS))

    if _is_cycle_component(adj, comp):
        kind = Kind.ODD_CYCLE if len(comp) % 2 == 1 else Kind.EVEN_CYCLE
        tags.append(StructureTag(kind))

    neighbors = {v: set(adj[v]) for v in comp}

    # Exact K_{2,j} component with the token on the size-2 side.
    if unit and len(adj[token]) >= 1:
        common = neighbors[token]
        for b in sorted(comp - common - {token}):
            if neighbors[b] != common:
                continue
            if comp != common | {token, b}:
                continue
            if all(neighbors[x] == {token, b} for x in common):
                tags.append(
                    StructureTag(Kind.K2J_HUB_START, j=len(common), pair=(token, b))
                )
                break

    # Exact SSB component (K_{2,j} plus the hub-hub edge), token on a hub.
    if unit:
        for b in sorted(neighbors.get(token, ())):
            common = neighbors[token] - {b}
            if not common:
                continue
            if neighbors[b] - {token} != common:
                continue
            if comp != common | {token, b}:
                continue
            if all(neighbors[x] == {token, b} for x in common):
                tags.append(
                    StructureTag(Kind.SSB_HUB_START, j=len(common), pair=(token, b))
                )
                break

    if len(comp) >= 3 and all(len(neighbors[v]) == len(comp) - 1 for v in comp):
        tags.append(StructureTag(Kind.COMPLETE))

    for b in sorted(neighbors.get(token, ())):
        common = neighbors[token] - {b}
        if common == neighbors[b] - {token}:
            tags.append(
                StructureTag(
                    Kind.MUTUALLY_ADJACENT_PAIR, pair=(token, b), k=len(common)
                )
            )

    return tags


def _closed_neighborhood(adj, weights_of, v: int):
    """Vertices and weighted edge map of the induced closed 1-neighborhood."""
    verts = {v} | set(adj[v])
    edges = {}
    for x in verts:
        for y, ei in adj[x].items():
            if y in verts and x < y:
                edges[(x, y)] = weights_of(ei)
    return verts, edges


def _identical(adj, weights_of, token: int, v1: int, v2: int) -> bool:
    """Weight-preserving isomorphism of closed 1-neighborhoods with
    v1 -> v2 and token -> token."""
    verts1, edges1 = _closed_neighborhood(adj, weights_of, v1)
    verts2, edges2 = _closed_neighborhood(adj, weights_of, v2)
    if len(verts1) != len(verts2) or len(edges1) != len(edges2):
        return False
    fixed = {v1: v2, token: token}
    if token not in verts2:
        return False
    rest1 = sorted(verts1 - set(fixed))
    rest2 = sorted(verts2 - {v2, token})
    if len(rest1) != len(rest2):
        return False

    def matches(mapping) -> bool:
        for (x, y), w in edges1.items():
            a, b = mapping[x], mapping[y]
            key = (a, b) if a < b else (b, a)
            if edges2.get(key) != w:
                return False
        return True

    for perm in permutations(rest2):
        mapping = dict(fixed)
        mapping.update(zip(rest1, perm))
        if matches(mapping):
            return True
    return False


def identical_options(state: GameState, graph: GameGraph) -> list[list[int]]:
    """Partition the token's options into identical-move classes.

    Two options fall in one class when a weight-preserving bijection exists
    between their closed 1-neighborhoods fixing the token.
    """
    adj = positive_adjacency(state, graph)

    def weights_of(ei: int) -> int:
        return state.weights[ei]

    classes: list[list[int]] = []
    for option in sorted(adj[state.token]):
        for cls in classes:
            if _identical(adj, weights_of, state.token, cls[0], option):
                cls.append(option)
                break
        else:
            classes.append([option])
    return classes
