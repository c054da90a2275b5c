"""Expansion coefficients and existence tests for expander representations.

A representation f_1, ..., f_m : V -> W of K(m) is a (delta, eps)-expander
if every nonzero subspace U of V with dim U / dim V <= delta satisfies
dim(f_1(U) + ... + f_m(U)) >= (1 + eps) * (dim W / dim V) * dim U.  Generic
existence per dimension vector reduces to inequalities on the minimal
admissible subdimension pairs; uniform existence along a fixed slope
reduces to one exact comparison against a closed-form coefficient.

All thresholds are compared inclusively and exactly (Fraction against
QuadraticSurd); no floating point enters any decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .kronecker import KroneckerContext, c_d_ceil
from .quiver import DimVector, Quiver, make_kronecker
from .schofield import SubdimCache, embeds, generic_subdims
from .surd import QuadraticSurd


@dataclass(frozen=True)
class ExpanderParams:
    """Relative size bound 0 < delta < 1 and expansion margin eps > 0."""

    delta: Fraction
    epsilon: Fraction

    def __post_init__(self):
        delta = Fraction(self.delta)
        epsilon = Fraction(self.epsilon)
        if not (0 < delta < 1):
            raise ValueError("delta must satisfy 0 < delta < 1")
        if epsilon <= 0:
            raise ValueError("epsilon must be positive")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "epsilon", epsilon)


@dataclass(frozen=True)
class SlopeParams:
    """Arrow count m >= 1 and a rational slope alpha = d2/d1."""

    m: int
    alpha: Fraction

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("m must be a positive integer")
        object.__setattr__(self, "alpha", Fraction(self.alpha))


@dataclass(frozen=True)
class StabilityFunction:
    """Integer weight per vertex; evaluates as the dot product with a vector."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def __call__(self, vec: Sequence[int]) -> int:
        if len(vec) != len(self.weights):
            raise ValueError("vector length does not match weight count")
        return sum(w * x for w, x in zip(self.weights, vec))


@dataclass(frozen=True)
class ExpanderDecision:
    exists: bool
    violating_e: DimVector | None = None


def epsilon_k(k: int) -> QuadraticSurd:
    """Sharp expansion coefficient for k operators in equal dimensions:
    (k + 1 - sqrt(k*k - 2k + 5)) / 2, which lies strictly in (0, 1)."""
    if not isinstance(k, int) or k < 2:
        raise ValueError("k must be an integer >= 2")
    return QuadraticSurd(k + 1, -1, k * k - 2 * k + 5, 2)


def epsilon_m_alpha_delta(m: int, alpha, delta) -> QuadraticSurd:
    """Sharp coefficient along slope alpha at size bound delta:
    (m d + a - 2 a d - sqrt((m d - a)^2 + 4 d (1 - d))) / (2 a d).

    Preconditions (each reported distinctly, all checked exactly):
    alpha^2 - m*alpha + 1 < 0;  m*delta + alpha - 2*alpha*delta > 0;
    0 < delta < 1.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    alpha = Fraction(alpha)
    delta = Fraction(delta)
    if not (0 < delta < 1):
        raise ValueError("delta must satisfy 0 < delta < 1")
    numerator = m * delta + alpha - 2 * alpha * delta
    if numerator <= 0:
        raise ValueError("m*delta + alpha - 2*alpha*delta must be positive")
    if alpha * alpha - m * alpha + 1 >= 0:
        raise ValueError("alpha must satisfy alpha^2 - m*alpha + 1 < 0")
    radicand = (m * delta - alpha) ** 2 + 4 * delta * (1 - delta)
    return (numerator - QuadraticSurd.sqrt_rational(radicand)) / (2 * alpha * delta)


def minimal_second_coordinate(
    m: int, d: tuple[int, int], e1: int, cache: SubdimCache
) -> int:
    """Smallest e2 with (e1, e2) embedding generically into d over K(m).

    Uses the closed-form boundary when <d, d> <= 0 and falls back to the
    recursive engine otherwise, so it is total over all (m, d).  A maximal
    second coordinate always embeds, so the search cannot fail.
    """
    d1, d2 = d
    if d1 * d1 + d2 * d2 - m * d1 * d2 <= 0:
        return c_d_ceil(KroneckerContext(m, d), e1)
    quiver = make_kronecker(m)
    for e2 in range(d2 + 1):
        if embeds(quiver, (e1, e2), d, cache):
            return e2
    raise AssertionError("unreachable: (e1, d2) always embeds")


def expander_exists(
    m: int,
    d: Sequence[int],
    params: ExpanderParams,
    cache: SubdimCache | None = None,
) -> ExpanderDecision:
    """Generic existence of a (delta, eps)-expander representation of K(m)
    with dimension vector d = (d1, d2).

    For each e1 up to floor(delta * d1) the minimal embeddable e2 must
    clear (1 + eps) * (d2 / d1) * e1; the first (lexicographically
    smallest) failing pair is reported.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    dv = tuple(int(x) for x in d)
    if len(dv) != 2 or dv[0] < 1 or dv[1] < 1:
        raise ValueError("d must be a pair of positive integers")
    cache = cache if cache is not None else SubdimCache()
    d1, d2 = dv
    e1_max = math.floor(params.delta * d1)
    factor = (1 + params.epsilon) * Fraction(d2, d1)
    for e1 in range(1, e1_max + 1):
        e2 = minimal_second_coordinate(m, dv, e1, cache)
        if e2 < factor * e1:
            return ExpanderDecision(False, (e1, e2))
    return ExpanderDecision(True, None)


def expander_exists_uniform(slope: SlopeParams, delta, epsilon) -> bool:
    """Existence for every dimension vector along slope alpha: exactly the
    inclusive comparison eps <= eps_m(alpha, delta)."""
    threshold = epsilon_m_alpha_delta(slope.m, slope.alpha, delta)
    return Fraction(epsilon) <= threshold


def theta_expander_exists(
    quiver: Quiver,
    theta: StabilityFunction,
    d: Sequence[int],
    params: ExpanderParams,
    cache: SubdimCache | None = None,
) -> ExpanderDecision:
    """Generic existence of expanders relative to a stability function.

    Requires theta(d) = 0.  Exists iff every generic subdimension vector e
    with total dimension at most delta * (total of d) satisfies
    theta(e) <= -eps * (total of e); the lexicographically smallest
    violating e is reported otherwise.
    """
    dv = quiver.check_dim(d)
    if theta(dv) != 0:
        raise ValueError(f"theta(d) = {theta(dv)} != 0")
    cache = cache if cache is not None else SubdimCache()
    total_d = sum(dv)
    bound = params.delta * total_d
    for e in sorted(generic_subdims(quiver, dv, cache)):
        total_e = sum(e)
        if total_e > bound:
            continue
        if theta(e) > -params.epsilon * total_e:
            return ExpanderDecision(False, e)
    return ExpanderDecision(True, None)


def theta_epsilon_supremum(
    quiver: Quiver,
    theta: StabilityFunction,
    d: Sequence[int],
    delta,
    cache: SubdimCache | None = None,
) -> Fraction | None:
    """Largest eps for which d carries a theta-relative expander: the minimum
    of -theta(e) / (total of e) over constraining nonzero e, or None when no
    subdimension vector constrains the decision."""
    dv = quiver.check_dim(d)
    if theta(dv) != 0:
        raise ValueError(f"theta(d) = {theta(dv)} != 0")
    delta = Fraction(delta)
    cache = cache if cache is not None else SubdimCache()
    bound = delta * sum(dv)
    best: Fraction | None = None
    for e in generic_subdims(quiver, dv, cache):
        total_e = sum(e)
        if total_e == 0 or total_e > bound:
            continue
        ratio = Fraction(-theta(e), total_e)
        if best is None or ratio < best:
            best = ratio
    return best
