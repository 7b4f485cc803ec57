"""Budgets that bound the brute-force parts of the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    # skein recursion is exponential in the crossing count
    crossing_budget: int = 16
    # automorphism search is quadratic in the dart count
    max_darts: int = 256
    # state-sum oracle enumerates 2^c smoothings
    bracket_crossings: int = 24


DEFAULT_BUDGETS = Budgets()
