"""Nim on weighted graphs: engine, oracle solver, closed-form strategies
and a verification harness."""

from .graph import (
    GameGraph,
    GameState,
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
from .solver import Analysis, BudgetExceededError, Solver, Winner, best_line, solve
from .structures import Kind, StructureTag, detect, identical_options
from .strategies import (
    Prediction,
    StrategyError,
    dispatch,
    even_cycle_strategy,
    k2j_strategy,
    odd_cycle_strategy,
    path_strategy,
    ssb_strategy,
)

__all__ = [
    "Analysis",
    "BudgetExceededError",
    "GameGraph",
    "GameState",
    "IllegalMoveError",
    "InstanceError",
    "Kind",
    "Move",
    "Prediction",
    "Solver",
    "StrategyError",
    "StructureTag",
    "Winner",
    "apply_move",
    "best_line",
    "detect",
    "dispatch",
    "even_cycle_strategy",
    "generate",
    "identical_options",
    "is_terminal",
    "k2j_strategy",
    "legal_moves",
    "odd_cycle_strategy",
    "parse_instance",
    "path_strategy",
    "serialize_instance",
    "solve",
    "ssb_strategy",
]
