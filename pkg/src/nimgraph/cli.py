"""Command-line interface: solve, analyze, generate, verify, play, serve.

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 solve budget exceeded.
"""

from __future__ import annotations

import random
import sys

import click

from . import graph as graphmod
from .graph import (
    GameGraph,
    IllegalMoveError,
    InstanceError,
    Move,
    apply_move,
    generate,
    is_terminal,
    legal_moves,
    parse_instance,
    serialize_instance,
)
from .solver import DEFAULT_BUDGET, BudgetExceededError, Solver
from .strategies import Prediction, dispatch, strategy_for_fresh
from .structures import detect
from .verify import (
    VerificationReport,
    audit_even_cycle_uniqueness,
    check_complete_arbitrary_weights,
    generate_planted_pair_graph,
    sweep_predictor_vs_oracle,
    verify_strategy_exhaustive,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load(path: str) -> GameGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _fmt_moves(moves) -> str:
    return ", ".join(f"(to={m.to}, w={m.new_weight})" for m in moves)


@click.group()
def cli() -> None:
    """Nim on weighted graphs: oracle solver, strategies, verification."""


@cli.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
def solve(instance: str, budget: int) -> int:
    """Solve an instance file: winner, Grundy value, optimal moves."""
    g = _load(instance)
    analysis = Solver(g, max_states=budget).analyze(g.initial_state())
    label = "mover (p-position)" if analysis.grundy > 0 else "opponent (0-position)"
    click.echo(f"winner: {label}")
    click.echo(f"grundy: {analysis.grundy}")
    click.echo(f"optimal moves: {_fmt_moves(analysis.optimal_moves) or '(none)'}")
    click.echo(f"states visited: {analysis.states_visited}")
    return EXIT_OK


@cli.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
def analyze(instance: str, budget: int) -> int:
    """Solve plus structure tags and the dispatch prediction."""
    g = _load(instance)
    state = g.initial_state()
    analysis = Solver(g, max_states=budget).analyze(state)
    tags = detect(state, g)
    name, prediction, move = dispatch(state, g)
    label = "mover (p-position)" if analysis.grundy > 0 else "opponent (0-position)"
    click.echo(f"winner: {label}")
    click.echo(f"grundy: {analysis.grundy}")
    click.echo(f"optimal moves: {_fmt_moves(analysis.optimal_moves) or '(none)'}")
    click.echo("tags: " + (", ".join(str(t) for t in tags) or "(none)"))
    click.echo(f"strategy: {name}")
    click.echo(f"prediction: {prediction.value}")
    if move is not None:
        click.echo(f"strategy move: (to={move.to}, w={move.new_weight})")
    return EXIT_OK


@cli.command("generate")
@click.option("--family", required=True,
              type=click.Choice(["path", "cycle", "complete", "k2j", "ssb"]))
@click.option("--n", type=int, default=None)
@click.option("--j", type=int, default=None)
@click.option("--weights", "weights_spec", default="uniform:1", show_default=True,
              help="uniform:K, list:W0,W1,..., or random:CAP")
@click.option("--seed", type=int, default=None)
@click.option("--start", type=int, default=0, show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None,
              help="Write to a file instead of stdout.")
def generate_cmd(family, n, j, weights_spec, seed, start, output) -> int:
    """Generate a family instance and emit the nimgraph file."""
    g = generate(family, n=n, j=j, weights=parse_weight_spec(weights_spec),
                 seed=seed, start=start)
    text = serialize_instance(g)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    return EXIT_OK


def parse_weight_spec(spec: str) -> graphmod.WeightSpec:
    kind, _, rest = spec.partition(":")
    if kind == "uniform":
        return ("uniform", int(rest or 1))
    if kind == "list":
        return ("list", [int(x) for x in rest.split(",") if x])
    if kind == "random":
        return ("random", int(rest or 3))
    raise InstanceError(f"unknown weight spec '{spec}'")


SUITES = [
    "paths",
    "odd-cycles",
    "even-cycles",
    "k2j",
    "ssb",
    "complete-unit",
    "mutual-pairs",
    "complete-weights",
]


def run_suite(
    suite: str,
    max_j: int,
    max_n: int,
    weight_cap: int,
    samples: int,
    seed: int,
    budget: int,
) -> list[VerificationReport]:
    """One named suite -> its verification reports."""
    reports: list[VerificationReport] = []
    if suite == "paths":
        for length in range(1, max_n + 1):
            reports.append(sweep_predictor_vs_oracle(
                "path", n=length, weight_cap=weight_cap, budget=budget))
    elif suite == "odd-cycles":
        for length in range(3, max_n + 1, 2):
            sampled = None if length <= 5 else samples
            reports.append(sweep_predictor_vs_oracle(
                "cycle", n=length, weight_cap=weight_cap,
                samples=sampled, seed=seed, budget=budget))
    elif suite == "even-cycles":
        for length in range(4, max_n + 1, 2):
            sampled = None if length <= 6 else samples
            reports.append(sweep_predictor_vs_oracle(
                "cycle", n=length, weight_cap=weight_cap,
                samples=sampled, seed=seed, budget=budget))
            reports.append(audit_even_cycle_uniqueness(
                length, weight_cap, samples=sampled, seed=seed, budget=budget))
    elif suite == "k2j":
        for j in range(1, max_j + 1):
            g = generate("complete_bipartite", j=j)
            reports.append(sweep_predictor_vs_oracle(
                "complete_bipartite", j=j, starts=[0, 1], budget=budget))
            strategy = strategy_for_fresh(g)
            reports.append(verify_strategy_exhaustive(g, strategy, budget=budget))
    elif suite == "ssb":
        for j in range(1, max_j + 1):
            g = generate("ssb", j=j)
            reports.append(sweep_predictor_vs_oracle(
                "ssb", j=j, starts=[0, 1], budget=budget))
            strategy = strategy_for_fresh(g)
            reports.append(verify_strategy_exhaustive(g, strategy, budget=budget))
    elif suite == "complete-unit":
        for n in range(2, max_n + 1):
            g = generate("complete", n=n)
            reports.append(sweep_predictor_vs_oracle("complete", n=n, budget=budget))
            strategy = strategy_for_fresh(g)
            reports.append(verify_strategy_exhaustive(g, strategy, budget=budget))
    elif suite == "mutual-pairs":
        rng = random.Random(seed)
        for _ in range(samples):
            g = generate_planted_pair_graph(rng, max_n=max_n)
            strategy = strategy_for_fresh(g)
            reports.append(verify_strategy_exhaustive(g, strategy, budget=budget))
    elif suite == "complete-weights":
        for n in range(3, max_n + 1):
            sampled = None if n <= 4 else samples
            reports.append(check_complete_arbitrary_weights(
                n, weight_cap, samples=sampled, seed=seed, budget=budget))
    else:
        raise click.UsageError(f"unknown suite '{suite}'")
    return reports


@cli.command()
@click.option("--suite", required=True, type=click.Choice(SUITES))
@click.option("--max-j", type=int, default=6, show_default=True)
@click.option("--max-n", type=int, default=None,
              help="Defaults per suite (paths 12, cycles 11, complete 7...).")
@click.option("--weight-cap", type=int, default=3, show_default=True)
@click.option("--samples", type=int, default=300, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["table", "csv"]), default="table",
              show_default=True)
@click.option("--out", type=click.Path(), default=None, help="Write CSV to a file.")
def verify(suite, max_j, max_n, weight_cap, samples, seed, budget, fmt, out) -> int:
    """Run a verification suite; exit 0 iff every check passes."""
    defaults = {
        "paths": 12, "odd-cycles": 11, "even-cycles": 8, "k2j": 8,
        "ssb": 8, "complete-unit": 7, "mutual-pairs": 8, "complete-weights": 5,
    }
    if max_n is None:
        max_n = defaults[suite]
    reports = run_suite(suite, max_j, max_n, weight_cap, samples, seed, budget)
    csv_text = reports[0].to_csv().splitlines()[0] + "\n" if reports else ""
    for report in reports:
        csv_text += "".join(line + "\n" for line in report.to_csv().splitlines()[1:])
    if fmt == "csv":
        click.echo(csv_text, nl=False)
    else:
        for report in reports:
            click.echo(report.summary())
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAIL


@cli.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--engine", type=click.Choice(["oracle", "strategy"]), default="oracle",
              show_default=True)
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
def play(instance: str, engine: str, budget: int) -> int:
    """Interactive terminal game: you move first, the engine replies."""
    g = _load(instance)
    state = g.initial_state()
    solver = Solver(g, max_states=budget)

    def show() -> None:
        click.echo(f"token at: {state.token}")
        for i, (u, v, _) in enumerate(g.edges):
            if state.weights[i] > 0:
                click.echo(f"  edge {u}-{v}: {state.weights[i]}")

    while True:
        show()
        if is_terminal(state, g):
            click.echo("you cannot move: you lose")
            return EXIT_OK
        raw = click.prompt("your move '<to> <new_weight>' (or q)", default="q")
        if raw.strip() in ("q", "quit"):
            return EXIT_OK
        try:
            to_s, w_s = raw.split()
            state = apply_move(state, g, Move(int(to_s), int(w_s)))
        except (ValueError, IllegalMoveError) as exc:
            click.echo(f"illegal move: {exc}", err=True)
            continue
        if is_terminal(state, g):
            show()
            click.echo("engine cannot move: you win")
            return EXIT_OK
        name, prediction, move = dispatch(state, g)
        if engine == "oracle" or move is None:
            analysis = solver.analyze(state)
            move = analysis.optimal_moves[0] if analysis.optimal_moves else legal_moves(state, g)[0]
            name = "oracle"
        click.echo(f"engine ({name}) plays: to={move.to} new_weight={move.new_weight}")
        state = apply_move(state, g, move)


@cli.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static", "static_dir", type=click.Path(), default=None,
              help="Directory of built web UI assets to host at /.")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
def serve(port: int, host: str, static_dir: str | None, budget: int) -> int:
    """Start the HTTP game service."""
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=static_dir, budget=budget)
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Entry point with documented exit codes; suitable for tests."""
    try:
        result = cli.main(args=argv, standalone_mode=False)
        return result if isinstance(result, int) else EXIT_OK
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_BUDGET
    except InstanceError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
