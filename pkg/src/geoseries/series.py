"""Geometric series engine: partial sums, closed forms, per-layer terms.

partial_sum_naive is a deliberate duplicate of partial_sum_closed: it
accumulates term by term and ships with the library so the CLI table can
print both columns side by side as a self-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construction import LayeredParams, triangle_area
from .rational import ONE, ZERO, Rational, fmt


@dataclass(frozen=True)
class SeriesSpec:
    """A geometric series c + c*x + c*x^2 + ... or c*(x + x^2 + ...).

    starts_at_one selects the first form (leading term is first_term
    itself); otherwise the series starts at first_term * ratio.
    """

    ratio: Rational
    first_term: Rational = ONE
    starts_at_one: bool = True

    def __post_init__(self) -> None:
        if not 0 < self.ratio < 1:
            raise ValueError(f"ratio must lie strictly in (0,1), got {fmt(self.ratio)}")
        if self.first_term <= 0:
            raise ValueError(f"first_term must be positive, got {fmt(self.first_term)}")


def partial_sum_closed(x: Rational, n: int) -> Rational:
    """1 + x + ... + x^n via (1 - x^(n+1)) / (1 - x); requires x != 1."""
    if n < 0:
        raise ValueError(f"term count must be >= 0, got {n}")
    if x == 1:
        raise ValueError("closed form is singular at x = 1 (the sum is n+1)")
    return (ONE - x ** (n + 1)) / (ONE - x)


def partial_sum_naive(x: Rational, n: int) -> Rational:
    """1 + x + ... + x^n by plain accumulation; works for any rational x."""
    if n < 0:
        raise ValueError(f"term count must be >= 0, got {n}")
    total = ZERO
    power = ONE
    for _ in range(n + 1):
        total += power
        power *= x
    return total


def closed_limit(spec: SeriesSpec) -> Rational:
    """Exact limit of the series described by spec."""
    if spec.starts_at_one:
        return spec.first_term / (ONE - spec.ratio)
    return spec.first_term * spec.ratio / (ONE - spec.ratio)


def layer_term(params: LayeredParams, k: int) -> Rational:
    """Colored area contributed by layer k: a small-triangle areas."""
    return params.a * triangle_area(params, k)
