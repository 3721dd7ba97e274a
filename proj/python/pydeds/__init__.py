"""Directed (p,q)-edge dominating set solvers.

Graphs are passed as a vertex count and a list of (tail, head) pairs;
solutions come back as lists of (tail, head) pairs.
"""

from ._deds import (
    InputError,
    ResourceError,
    approx01,
    approx11,
    gen_digraph,
    gen_tournament,
    kernelize,
    solve_fpt01,
    solve_fpt11,
    solve_oracle,
    solve_tournament,
    solve_twdp,
    verify,
)

__all__ = [
    "InputError",
    "ResourceError",
    "approx01",
    "approx11",
    "gen_digraph",
    "gen_tournament",
    "kernelize",
    "solve_fpt01",
    "solve_fpt11",
    "solve_oracle",
    "solve_tournament",
    "solve_twdp",
    "verify",
]
