"""Exhaustive verification: strategies vs all adversary lines, predictors
vs the oracle, and the even-cycle uniqueness audit."""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field
from itertools import product

from .graph import (
    GameGraph,
    GameState,
    Move,
    apply_move,
    family_edge_pairs,
    generate,
    is_terminal,
    legal_moves,
)
from .solver import DEFAULT_BUDGET, BudgetExceededError, Solver, Winner
from .strategies import Prediction, Strategy, dispatch, even_cycle_prescribed_moves

CSV_FIELDS = [
    "family",
    "params",
    "start",
    "prediction",
    "oracle",
    "verdict",
    "states_visited",
]


@dataclass
class Failure:
    instance: str
    state: str
    expected: str
    observed: str


@dataclass
class VerificationReport:
    suite: str
    params: dict
    instances_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    rows: list[dict] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add_row(self, **kwargs) -> None:
        row = {k: "" for k in CSV_FIELDS}
        row.update(kwargs)
        self.rows.append(row)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow(row)
        return buf.getvalue()

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lines = [
            f"suite: {self.suite} {self.params}",
            f"instances: {self.instances_checked}  failures: {len(self.failures)}"
            f"  elapsed: {self.elapsed:.2f}s  verdict: {verdict}",
        ]
        for f in self.failures[:20]:
            lines.append(
                f"  FAIL {f.instance} state={f.state} expected={f.expected} observed={f.observed}"
            )
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more failures")
        return "\n".join(lines)


def _instance_label(graph: GameGraph) -> str:
    weights = ",".join(str(w) for _, _, w in graph.edges)
    return f"n={graph.vertex_count};start={graph.start_vertex};w={weights}"


# ---------------------------------------------------------------------------
# Strategy vs all adversary lines
# ---------------------------------------------------------------------------


def verify_strategy_exhaustive(
    graph: GameGraph,
    strategy: Strategy,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Play the claimant's prescribed move against every adversary line.

    Passes iff every leaf of the tree leaves the adversary stuck.  The
    report's extras carry the set of vertices the adversary got stuck on
    and the set of edges the claimant traversed (for confinement checks).
    """
    report = VerificationReport(
        suite="strategy_exhaustive",
        params={"strategy": strategy.name, "instance": _instance_label(graph)},
    )
    t0 = time.monotonic()
    seen: set[tuple[tuple[int, ...], int, bool]] = set()
    stuck_vertices: set[int] = set()
    claimant_edges: set[frozenset[int]] = set()
    visited = 0

    def fail(state: GameState, expected: str, observed: str) -> None:
        report.failures.append(
            Failure(_instance_label(graph), f"w={state.weights},t={state.token}", expected, observed)
        )

    def walk(state: GameState, claimant_turn: bool) -> None:
        nonlocal visited
        key = (state.weights, state.token, claimant_turn)
        if key in seen:
            return
        seen.add(key)
        visited += 1
        if visited > budget:
            raise BudgetExceededError(visited)
        if claimant_turn:
            if is_terminal(state, graph):
                fail(state, "claimant has a move", "claimant stuck")
                return
            move = strategy.choose(state, graph)
            if move is None:
                fail(state, "a strategy move", "NoClaim mid-line")
                return
            try:
                child = apply_move(state, graph, move)
            except ValueError as exc:
                fail(state, "a legal strategy move", f"illegal: {exc}")
                return
            claimant_edges.add(frozenset((state.token, move.to)))
            walk(child, False)
        else:
            moves = legal_moves(state, graph)
            if not moves:
                stuck_vertices.add(state.token)
                return
            for move in moves:
                walk(apply_move(state, graph, move), True)

    walk(graph.initial_state(), strategy.claimant == "mover")
    report.instances_checked = 1
    report.extras["stuck_vertices"] = stuck_vertices
    report.extras["claimant_edges"] = claimant_edges
    report.extras["states_visited"] = visited
    report.elapsed = time.monotonic() - t0
    report.add_row(
        family="custom",
        params=strategy.name,
        start=graph.start_vertex,
        prediction=strategy.claimant,
        oracle="",
        verdict="pass" if report.passed else "fail",
        states_visited=visited,
    )
    return report


# ---------------------------------------------------------------------------
# Instance enumeration helpers
# ---------------------------------------------------------------------------


def weight_assignments(
    edge_count: int,
    weight_cap: int,
    samples: int | None = None,
    seed: int | None = None,
):
    """Exhaustive assignments in 1..cap, or `samples` seeded random ones."""
    if samples is None:
        yield from product(range(1, weight_cap + 1), repeat=edge_count)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            yield tuple(rng.randint(1, weight_cap) for _ in range(edge_count))


def family_instances(
    family: str,
    n: int | None = None,
    j: int | None = None,
    weight_cap: int = 1,
    samples: int | None = None,
    seed: int | None = None,
    starts: str | list[int] = "all",
):
    """Yield (graph, assignment) pairs for a family sweep; each assignment's
    graph carries start_vertex 0 and the caller iterates starts."""
    count, pairs = family_edge_pairs(family, n=n, j=j)
    start_list = list(range(count)) if starts == "all" else list(starts)
    for assignment in weight_assignments(len(pairs), weight_cap, samples, seed):
        edges = tuple((u, v, w) for (u, v), w in zip(pairs, assignment))
        for start in start_list:
            yield GameGraph(count, edges, start)


# ---------------------------------------------------------------------------
# Predictor vs oracle sweep
# ---------------------------------------------------------------------------


def sweep_predictor_vs_oracle(
    family: str,
    n: int | None = None,
    j: int | None = None,
    weight_cap: int = 1,
    samples: int | None = None,
    seed: int | None = None,
    starts: str | list[int] = "all",
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Check dispatch's prediction (when claimed) against the solver on
    every instance and start in the sweep."""
    report = VerificationReport(
        suite="predictor_vs_oracle",
        params={
            "family": family,
            "n": n,
            "j": j,
            "weight_cap": weight_cap,
            "samples": samples,
            "seed": seed,
        },
    )
    t0 = time.monotonic()
    solver: Solver | None = None
    last_edges = None
    for graph in family_instances(family, n, j, weight_cap, samples, seed, starts):
        if graph.edges != last_edges:
            solver = Solver(graph, max_states=budget)
            last_edges = graph.edges
        state = graph.initial_state()
        name, prediction, _ = dispatch(state, graph)
        analysis = solver.analyze(state)
        oracle = analysis.winner.value
        if prediction == Prediction.NO_CLAIM:
            verdict = "no-claim"
        elif prediction.value == oracle:
            verdict = "pass"
        else:
            verdict = "fail"
            report.failures.append(
                Failure(_instance_label(graph), "fresh", oracle, prediction.value)
            )
        report.instances_checked += 1
        report.add_row(
            family=family,
            params=f"n={n};j={j};cap={weight_cap};strategy={name}",
            start=graph.start_vertex,
            prediction=prediction.value,
            oracle=oracle,
            verdict=verdict,
            states_visited=analysis.states_visited,
        )
    report.elapsed = time.monotonic() - t0
    return report


# ---------------------------------------------------------------------------
# Even-cycle uniqueness audit
# ---------------------------------------------------------------------------


def audit_even_cycle_uniqueness(
    cycle_length: int,
    weight_cap: int,
    samples: int | None = None,
    seed: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Audit the even-cycle move prescription against the oracle.

    With no odd option in the reduced graph the mover must have no winning
    move at all; with a unique odd option the prescribed move must be the
    oracle's only winning move; with two odd options both prescribed moves
    must win and every winning move must stay at or above the minimum m
    (with two options, over-reductions on an odd option can also win, so
    exact uniqueness only holds in the single-option case)."""
    if cycle_length % 2 != 0:
        raise ValueError("cycle length must be even")
    report = VerificationReport(
        suite="even_cycle_uniqueness",
        params={"n": cycle_length, "weight_cap": weight_cap, "samples": samples, "seed": seed},
    )
    t0 = time.monotonic()
    solver: Solver | None = None
    last_edges = None
    for graph in family_instances("cycle", n=cycle_length, weight_cap=weight_cap,
                                  samples=samples, seed=seed):
        if graph.edges != last_edges:
            solver = Solver(graph, max_states=budget)
            last_edges = graph.edges
        state = graph.initial_state()
        reduction, prescribed = even_cycle_prescribed_moves(state, graph)
        analysis = solver.analyze(state)
        expected = set(prescribed)
        observed = set(analysis.optimal_moves)
        if len(prescribed) <= 1:
            ok = expected == observed
        else:
            ok = expected <= observed and all(
                m.new_weight >= reduction.m for m in observed
            )
        verdict = "pass" if ok else "fail"
        if verdict == "fail":
            report.failures.append(
                Failure(
                    _instance_label(graph),
                    "fresh",
                    f"prescribed {sorted(expected)} (m={reduction.m})",
                    f"oracle optimal {sorted(observed)}",
                )
            )
        report.instances_checked += 1
        report.add_row(
            family="cycle",
            params=f"n={cycle_length};cap={weight_cap};prescribed={len(prescribed)}",
            start=graph.start_vertex,
            prediction="mover" if prescribed else "opponent",
            oracle=analysis.winner.value,
            verdict=verdict,
            states_visited=analysis.states_visited,
        )
    report.elapsed = time.monotonic() - t0
    return report


# ---------------------------------------------------------------------------
# Complete graphs with arbitrary weights
# ---------------------------------------------------------------------------


def check_complete_arbitrary_weights(
    n: int,
    weight_cap: int,
    samples: int | None = None,
    seed: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Empirical check that the mover wins K_n under sampled (or exhaustive)
    weight assignments from every start."""
    report = VerificationReport(
        suite="complete_arbitrary_weights",
        params={"n": n, "weight_cap": weight_cap, "samples": samples, "seed": seed},
    )
    t0 = time.monotonic()
    solver: Solver | None = None
    last_edges = None
    for graph in family_instances("complete", n=n, weight_cap=weight_cap,
                                  samples=samples, seed=seed):
        if graph.edges != last_edges:
            solver = Solver(graph, max_states=budget)
            last_edges = graph.edges
        analysis = solver.analyze(graph.initial_state())
        verdict = "pass" if analysis.winner == Winner.MOVER else "fail"
        if verdict == "fail":
            report.failures.append(
                Failure(_instance_label(graph), "fresh", "mover", analysis.winner.value)
            )
        report.instances_checked += 1
        report.add_row(
            family="complete",
            params=f"n={n};cap={weight_cap}",
            start=graph.start_vertex,
            prediction="mover",
            oracle=analysis.winner.value,
            verdict=verdict,
            states_visited=analysis.states_visited,
        )
    report.elapsed = time.monotonic() - t0
    return report


# ---------------------------------------------------------------------------
# Random planted mutually adjacent pairs
# ---------------------------------------------------------------------------


def generate_planted_pair_graph(rng: random.Random, max_n: int = 8) -> GameGraph:
    """Random unit-weight graph whose vertices 0 and 1 are mutually
    adjacent, with the token on vertex 0.

    Extra random edges only run between vertices other than the hubs, so
    the planted pair's neighbor sets stay equal.
    """
    n = rng.randint(3, max_n)
    k = rng.randint(1, n - 2)
    common = list(range(2, 2 + k))
    pairs = [(0, 1)]
    for x in common:
        pairs.append((0, x))
        pairs.append((1, x))
    for u in range(2, n):
        for v in range(u + 1, n):
            if rng.random() < 0.4:
                pairs.append((u, v))
    edges = tuple((u, v, 1) for u, v in pairs)
    return GameGraph(n, edges, 0)
