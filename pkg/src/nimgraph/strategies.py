"""Closed-form predictors and move choosers, one per family result.

Each strategy answers two questions about the player whose turn it is:
predict (does the mover win, does the opponent win, or no claim) and
choose (the prescribed move when the strategy's player is to move).
Strategies never consult the solver; NoClaim is an honest answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import GameGraph, GameState, Move
from .structures import (
    Kind,
    StructureTag,
    _pendant_odd_options,
    component_of,
    detect,
    path_options,
    positive_adjacency,
    _is_cycle_component,
    _is_path_component,
)


class Prediction(enum.Enum):
    P1_WINS = "mover"      # player to move wins
    P2_WINS = "opponent"   # player to move loses
    NO_CLAIM = "no-claim"


class StrategyError(ValueError):
    """State outside the strategy's domain."""


@dataclass(frozen=True)
class ReducedGraph:
    """Even-cycle reduction: every cycle edge lowered by the minimum m."""

    m: int
    reduced_weights: tuple[int, ...]


def reduce_cycle(state: GameState, graph: GameGraph, comp: set[int]) -> ReducedGraph:
    comp_edge_weights = [
        state.weights[i]
        for i, (u, v, _) in enumerate(graph.edges)
        if u in comp and v in comp and state.weights[i] > 0
    ]
    m = min(comp_edge_weights)
    reduced = tuple(max(w - m, 0) if w > 0 else 0 for w in state.weights)
    return ReducedGraph(m, reduced)


# ---------------------------------------------------------------------------
# Path rule
# ---------------------------------------------------------------------------


def path_strategy(state: GameState, graph: GameGraph) -> tuple[Prediction, Move | None]:
    """Parity rule for paths.

    Claims a mover win when a pendant odd path option exists (zero its
    first edge), a mover loss when the component is a path with only even
    options.  Anything else is outside the rule's domain.
    """
    adj = positive_adjacency(state, graph)
    comp = component_of(adj, state.token)
    pendant = _pendant_odd_options(state, graph)
    if pendant:
        target = min(option[1] for option in pendant)
        return Prediction.P1_WINS, Move(target, 0)
    if _is_path_component(adj, comp):
        return Prediction.P2_WINS, None
    raise StrategyError("component of the token is not a path")


# ---------------------------------------------------------------------------
# Cycle rules
# ---------------------------------------------------------------------------


def odd_cycle_strategy(state: GameState, graph: GameGraph) -> tuple[Prediction, Move | None]:
    """Mover wins an odd cycle by zeroing either incident edge."""
    adj = positive_adjacency(state, graph)
    comp = component_of(adj, state.token)
    if not (_is_cycle_component(adj, comp) and len(comp) % 2 == 1):
        raise StrategyError("component of the token is not an odd cycle")
    target = min(adj[state.token])
    return Prediction.P1_WINS, Move(target, 0)


def _cycle_directions(adj, token: int) -> list[list[int]]:
    """The two vertex walks around a cycle starting at the token."""
    first, second = sorted(adj[token])
    walks = []
    for step in (first, second):
        walk = [token, step]
        prev, cur = token, step
        while cur != token:
            nxt = next(nb for nb in adj[cur] if nb != prev)
            walk.append(nxt)
            prev, cur = cur, nxt
        walks.append(walk)
    return walks


def even_cycle_prescribed_moves(
    state: GameState, graph: GameGraph
) -> tuple[ReducedGraph, list[Move]]:
    """Winning first moves on an even cycle: one per odd path option in the
    reduced graph, lowering the first edge of that option to the minimum m."""
    adj = positive_adjacency(state, graph)
    comp = component_of(adj, state.token)
    if not (_is_cycle_component(adj, comp) and len(comp) % 2 == 0):
        raise StrategyError("component of the token is not an even cycle")
    reduction = reduce_cycle(state, graph, comp)
    moves = []
    for walk in _cycle_directions(adj, state.token):
        length = 0
        prev = walk[0]
        for cur in walk[1:]:
            ei = adj[prev][cur]
            if reduction.reduced_weights[ei] == 0:
                break
            length += 1
            prev = cur
        if length % 2 == 1:
            moves.append(Move(walk[1], reduction.m))
    moves.sort()
    return reduction, moves


def even_cycle_strategy(state: GameState, graph: GameGraph) -> tuple[Prediction, Move | None]:
    """Minimum-weight reduction rule for even cycles.

    Recomputes the minimum m fresh: mover wins iff the cycle with m
    subtracted from every edge leaves an odd path option at the token, and
    the prescribed move lowers that option's first edge to exactly m.  A
    cycle that has degraded to a path delegates to the path rule.
    """
    adj = positive_adjacency(state, graph)
    comp = component_of(adj, state.token)
    if _is_path_component(adj, comp):
        return path_strategy(state, graph)
    _, moves = even_cycle_prescribed_moves(state, graph)
    if moves:
        return Prediction.P1_WINS, moves[0]
    return Prediction.P2_WINS, None


# ---------------------------------------------------------------------------
# Hub structures
# ---------------------------------------------------------------------------


def _tag_of(tags: list[StructureTag], kind: Kind) -> StructureTag | None:
    for tag in tags:
        if tag.kind == kind:
            return tag
    return None


def k2j_strategy(state: GameState, graph: GameGraph) -> tuple[Prediction, Move | None]:
    """Unit K_{2,j} from a hub: the second player wins."""
    tag = _tag_of(detect(state, graph), Kind.K2J_HUB_START)
    if tag is None:
        raise StrategyError("no unit K_{2,j} with the token on a hub")
    return Prediction.P2_WINS, None


def k2j_defender_reply(state: GameState, graph: GameGraph, hubs: tuple[int, int]) -> Move | None:
    """Defender rule inside a unit K_{2,j}: from a leaf, move to the
    remaining hub (the forced reply)."""
    adj = positive_adjacency(state, graph)
    for hub in hubs:
        if hub in adj[state.token]:
            return Move(hub, 0)
    return None


def ssb_strategy(state: GameState, graph: GameGraph) -> tuple[Prediction, Move | None]:
    """Mutually adjacent pair with the token on it, unit weights: mover wins
    by removing the hub-hub edge and thereafter always returning to a hub."""
    tags = detect(state, graph)
    tag = _tag_of(tags, Kind.MUTUALLY_ADJACENT_PAIR)
    if tag is None:
        raise StrategyError("no mutually adjacent pair at the token")
    adj = positive_adjacency(state, graph)
    comp = component_of(adj, state.token)
    for i, (u, v, _) in enumerate(graph.edges):
        if u in comp and state.weights[i] > 1:
            raise StrategyError("pair strategy requires unit weights")
    return Prediction.P1_WINS, ssb_move(state, graph, tag.pair)


def ssb_move(state: GameState, graph: GameGraph, hubs: tuple[int, int]) -> Move | None:
    """The pair strategy's move: across the hub edge from a hub, otherwise
    to whichever hub option exists (first hub preferred)."""
    a, b = hubs
    adj = positive_adjacency(state, graph)
    token = state.token
    if token in (a, b):
        other = b if token == a else a
        if other in adj[token]:
            return Move(other, 0)
        return None
    for hub in (a, b):
        if hub in adj[token]:
            return Move(hub, 0)
    return None


# ---------------------------------------------------------------------------
# Dispatch and stateful strategy objects for playouts
# ---------------------------------------------------------------------------


class Strategy:
    """A named claim about one board plus the move rule that backs it up.

    `claimant` says which player the claim favors on the fresh state:
    "mover" (the player about to move) or "opponent".  `choose` supplies
    the claimant's move at any state reachable under the strategy.
    """

    name: str
    claimant: str

    def choose(self, state: GameState, graph: GameGraph) -> Move | None:
        raise NotImplementedError


class PathPlayer(Strategy):
    name = "path"

    def __init__(self, claimant: str = "mover"):
        self.claimant = claimant

    def choose(self, state, graph):
        prediction, move = path_strategy(state, graph)
        return move


class OddCyclePlayer(Strategy):
    name = "odd_cycle"
    claimant = "mover"

    def choose(self, state, graph):
        adj = positive_adjacency(state, graph)
        comp = component_of(adj, state.token)
        if _is_cycle_component(adj, comp) and len(comp) % 2 == 1:
            return odd_cycle_strategy(state, graph)[1]
        return path_strategy(state, graph)[1]


class EvenCyclePlayer(Strategy):
    name = "even_cycle"

    def __init__(self, claimant: str = "opponent"):
        self.claimant = claimant

    def choose(self, state, graph):
        return even_cycle_strategy(state, graph)[1]


class K2jDefender(Strategy):
    name = "k2j"
    claimant = "opponent"

    def __init__(self, hubs: tuple[int, int]):
        self.hubs = hubs

    def choose(self, state, graph):
        return k2j_defender_reply(state, graph, self.hubs)


class SsbPlayer(Strategy):
    name = "ssb"
    claimant = "mover"

    def __init__(self, hubs: tuple[int, int]):
        self.hubs = hubs

    def choose(self, state, graph):
        return ssb_move(state, graph, self.hubs)


PRIORITY = ("ssb", "k2j", "even_cycle", "odd_cycle", "path")


def dispatch(state: GameState, graph: GameGraph) -> tuple[str, Prediction, Move | None]:
    """Apply the most specific applicable strategy; honest NoClaim otherwise."""
    tags = detect(state, graph)
    pair = _tag_of(tags, Kind.MUTUALLY_ADJACENT_PAIR)
    if pair is not None:
        try:
            prediction, move = ssb_strategy(state, graph)
            return "ssb", prediction, move
        except StrategyError:
            pass
    if _tag_of(tags, Kind.K2J_HUB_START) is not None:
        prediction, move = k2j_strategy(state, graph)
        return "k2j", prediction, move
    if _tag_of(tags, Kind.EVEN_CYCLE) is not None:
        prediction, move = even_cycle_strategy(state, graph)
        return "even_cycle", prediction, move
    if _tag_of(tags, Kind.ODD_CYCLE) is not None:
        prediction, move = odd_cycle_strategy(state, graph)
        return "odd_cycle", prediction, move
    try:
        prediction, move = path_strategy(state, graph)
        return "path", prediction, move
    except StrategyError:
        return "none", Prediction.NO_CLAIM, None


def strategy_for_fresh(graph: GameGraph) -> Strategy | None:
    """Build the playout strategy object dispatch would pick on the fresh
    state, or None when nothing applies."""
    state = graph.initial_state()
    tags = detect(state, graph)
    pair = _tag_of(tags, Kind.MUTUALLY_ADJACENT_PAIR)
    if pair is not None:
        try:
            ssb_strategy(state, graph)
            return SsbPlayer(pair.pair)
        except StrategyError:
            pass
    k2j = _tag_of(tags, Kind.K2J_HUB_START)
    if k2j is not None:
        return K2jDefender(k2j.pair)
    if _tag_of(tags, Kind.EVEN_CYCLE) is not None:
        prediction, _ = even_cycle_strategy(state, graph)
        claimant = "mover" if prediction == Prediction.P1_WINS else "opponent"
        return EvenCyclePlayer(claimant)
    if _tag_of(tags, Kind.ODD_CYCLE) is not None:
        return OddCyclePlayer()
    try:
        prediction, _ = path_strategy(state, graph)
    except StrategyError:
        return None
    claimant = "mover" if prediction == Prediction.P1_WINS else "opponent"
    return PathPlayer(claimant)
