"""Decompositions of deterministic finite automata."""

from ._core import (
    BudgetError,
    ContractError,
    Dfa,
    InputError,
    __version__,
    certify,
    decompose,
    equivalent,
    generate,
    is_distributive,
    isomorphic,
    minimize,
    parallel_connection,
    sp_partitions,
    trim,
    verify,
)

__all__ = [
    "BudgetError",
    "ContractError",
    "Dfa",
    "InputError",
    "__version__",
    "certify",
    "decompose",
    "equivalent",
    "generate",
    "is_distributive",
    "isomorphic",
    "minimize",
    "parallel_connection",
    "sp_partitions",
    "trim",
    "verify",
]
