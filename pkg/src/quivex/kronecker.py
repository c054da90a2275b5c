"""Closed-form subdimension theory for the generalized Kronecker quiver K(m).

For m >= 2 and a nonzero dimension vector d = (d1, d2) with <d, d> <= 0,
generic embedding of e into d is equivalent to the single inequality
<e, d - e> >= 0, i.e. to e2 >= c_d(e1) where c_d(x) is the smaller zero of
y |-> <(x, y), d - (x, y)>.  Outside that regime the closed form refuses
and callers must fall back to the recursive engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .quiver import Quiver, make_kronecker
from .surd import QuadraticSurd


class ClosedFormInapplicableError(ValueError):
    """Raised when <d, d> > 0, where the single-inequality test is not valid."""


@dataclass(frozen=True)
class KroneckerContext:
    """K(m) data for the boundary function: arrow count m >= 2 and d = (d1, d2)."""

    m: int
    d: tuple[int, int]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError("m must be an integer >= 2")
        d = tuple(int(x) for x in self.d)
        if len(d) != 2 or any(x < 0 for x in d):
            raise ValueError("d must be a pair of non-negative integers")
        if d == (0, 0):
            raise ValueError("d must be nonzero")
        object.__setattr__(self, "d", d)

    @cached_property
    def quiver(self) -> Quiver:
        return make_kronecker(self.m)

    @cached_property
    def euler_dd(self) -> int:
        d1, d2 = self.d
        return d1 * d1 + d2 * d2 - self.m * d1 * d2

    def form(self, a: Sequence[int], b: Sequence[int]) -> int:
        return a[0] * b[0] + a[1] * b[1] - self.m * a[0] * b[1]


def beta(m: int) -> QuadraticSurd:
    """(m + sqrt(m*m - 4)) / 2, the larger root of t^2 - m t + 1."""
    if not isinstance(m, int) or m < 2:
        raise ValueError("m must be an integer >= 2")
    return QuadraticSurd(m, 1, m * m - 4, 2)


def _require_negative_form(ctx: KroneckerContext):
    if ctx.euler_dd > 0:
        raise ClosedFormInapplicableError(
            "closed form inapplicable: <d, d> > 0; use the recursive engine"
        )


def c_d_exact(ctx: KroneckerContext, x: int) -> QuadraticSurd:
    """The smaller zero of y |-> <(x, y), d - (x, y)>, as an exact surd."""
    d1, d2 = ctx.d
    if not (0 <= x <= d1):
        raise ValueError(f"x must lie in [0, {d1}]")
    radicand = (ctx.m * x - d2) ** 2 + 4 * x * (d1 - x)
    return QuadraticSurd(ctx.m * x + d2, -1, radicand, 2)


def c_d_ceil(ctx: KroneckerContext, x: int) -> int:
    """Minimal integer y in [0, d2] admissible at x, for <d, d> <= 0.

    Decided by the integer sign predicate (the quadratic is non-negative at
    y, or y has passed the apex), never by rounding; equality with the
    ceiling of c_d_exact is a tested consequence, not the definition.
    """
    d1, d2 = ctx.d
    if not (0 <= x <= d1):
        raise ValueError(f"x must lie in [0, {d1}]")
    _require_negative_form(ctx)
    apex_doubled = ctx.m * x + d2
    for y in range(d2 + 1):
        if ctx.form((x, y), (d1 - x, d2 - y)) >= 0 or 2 * y >= apex_doubled:
            return y
    raise AssertionError("unreachable: y = d2 always satisfies the predicate")


def embeds_closed_form(ctx: KroneckerContext, e: Sequence[int]) -> bool:
    """Non-recursive embedding test: <e, d - e> >= 0, valid when <d, d> <= 0."""
    _require_negative_form(ctx)
    ev = tuple(int(v) for v in e)
    if len(ev) != 2:
        raise ValueError("e must have length 2")
    d1, d2 = ctx.d
    if not (0 <= ev[0] <= d1 and 0 <= ev[1] <= d2):
        return False
    return ctx.form(ev, (d1 - ev[0], d2 - ev[1])) >= 0


def dual_dim(
    e: Sequence[int], d: Sequence[int]
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Reversal bijection on K(m) subdimension data:
    (e, d) |-> ((d2 - e2, d1 - e1), (d2, d1))."""
    ev = tuple(int(v) for v in e)
    dv = tuple(int(v) for v in d)
    if len(ev) != 2 or len(dv) != 2:
        raise ValueError("vectors must have length 2")
    if not (0 <= ev[0] <= dv[0] and 0 <= ev[1] <= dv[1]):
        raise ValueError("e must be componentwise <= d")
    return (dv[1] - ev[1], dv[0] - ev[0]), (dv[1], dv[0])


def slope_bounds(m: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """The interval [m - beta, beta] that d2/d1 must occupy when <d, d> <= 0."""
    b = beta(m)
    return (Fraction(m) - b, b)
