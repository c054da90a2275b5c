"""Acyclic quivers, dimension vectors, and the Euler form.

A quiver is a finite directed multigraph with 1-based vertex indices;
parallel arrows are stored by repetition.  Dimension vectors are plain
tuples of non-negative integers.  All functions here are pure and all
values immutable, so everything is safe to share across threads.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

DimVector = tuple[int, ...]

# documented contract bound on dimension-vector entries; all integer
# arithmetic is arbitrary precision, so this only guards against
# accidentally feeding astronomically large coordinates into the
# exponential enumerations downstream
MAX_DIM_ENTRY = 10**6


class QuiverError(ValueError):
    """Invalid quiver data."""


class CycleError(QuiverError):
    """The arrow set contains a directed cycle."""


class QuiverParseError(QuiverError):
    """Malformed quiver file; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Quiver:
    """A finite acyclic quiver: vertex count plus an ordered arrow list."""

    vertex_count: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or self.vertex_count < 1:
            raise QuiverError("vertex_count must be a positive integer")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        for s, t in arrows:
            if not (1 <= s <= self.vertex_count and 1 <= t <= self.vertex_count):
                raise QuiverError(
                    f"arrow {s} -> {t} out of range [1, {self.vertex_count}]"
                )
        self._check_acyclic()

    def _check_acyclic(self):
        indeg = [0] * (self.vertex_count + 1)
        succ: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for s, t in self.arrows:
            indeg[t] += 1
            succ[s].append(t)
        queue = deque(v for v in range(1, self.vertex_count + 1) if indeg[v] == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for t in succ[v]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        if seen != self.vertex_count:
            raise CycleError("cycle detected")

    @cached_property
    def arrow_counts(self) -> dict[tuple[int, int], int]:
        """Arrow multiplicities, {(source, target): count}."""
        counts: dict[tuple[int, int], int] = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        return counts

    @cached_property
    def form_evaluator(self):
        """Fast Euler-form closure over pre-validated tuples (no checks)."""
        items = tuple(self.arrow_counts.items())

        def evaluate(a: DimVector, b: DimVector) -> int:
            total = sum(x * y for x, y in zip(a, b))
            for (i, j), c in items:
                total -= c * a[i - 1] * b[j - 1]
            return total

        return evaluate

    def topological_order(self) -> tuple[int, ...]:
        """Vertices in a topological order, smallest index first among ties."""
        indeg = [0] * (self.vertex_count + 1)
        for _, t in self.arrows:
            indeg[t] += 1
        order: list[int] = []
        ready = sorted(v for v in range(1, self.vertex_count + 1) if indeg[v] == 0)
        while ready:
            v = ready.pop(0)
            order.append(v)
            changed = False
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
                        changed = True
            if changed:
                ready.sort()
        return tuple(order)

    def check_dim(self, vec: Sequence[int]) -> DimVector:
        """Validate a dimension vector for this quiver and return it as a tuple."""
        entries = tuple(int(x) for x in vec)
        if len(entries) != self.vertex_count:
            raise QuiverError(
                f"dimension vector has length {len(entries)}, expected {self.vertex_count}"
            )
        if any(x < 0 for x in entries):
            raise QuiverError("dimension vector entries must be non-negative")
        if any(x > MAX_DIM_ENTRY for x in entries):
            raise QuiverError(f"dimension vector entries must not exceed {MAX_DIM_ENTRY}")
        return entries


def make_kronecker(m: int) -> Quiver:
    """The generalized Kronecker quiver K(m): two vertices, m arrows 1 -> 2."""
    if not isinstance(m, int) or m < 1:
        raise QuiverError("m must be a positive integer")
    return Quiver(2, ((1, 2),) * m)


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """Euler form <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j."""
    return quiver.form_evaluator(quiver.check_dim(d), quiver.check_dim(e))


def symmetrized_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<d, e> + <e, d>; symmetric in its two arguments."""
    dv, ev = quiver.check_dim(d), quiver.check_dim(e)
    ev_form = quiver.form_evaluator
    return ev_form(dv, ev) + ev_form(ev, dv)


def dominates(e: Sequence[int], d: Sequence[int]) -> bool:
    """Componentwise partial order: True iff e <= d in every coordinate."""
    if len(e) != len(d):
        raise QuiverError("vectors have different lengths")
    return all(a <= b for a, b in zip(e, d))


def unit_vector(length: int, vertex: int) -> DimVector:
    """Unit dimension vector supported at a 1-based vertex index."""
    return tuple(1 if i == vertex - 1 else 0 for i in range(length))


def in_fundamental_domain(quiver: Quiver, d: Sequence[int]) -> bool:
    """Connected support and symmetrized form <= 0 against every supported unit."""
    dv = quiver.check_dim(d)
    support = {i + 1 for i, x in enumerate(dv) if x > 0}
    if not support:
        raise QuiverError("dimension vector must be nonzero")

    neighbours: dict[int, set[int]] = {v: set() for v in support}
    for s, t in quiver.arrows:
        if s in support and t in support:
            neighbours[s].add(t)
            neighbours[t].add(s)
    start = min(support)
    reached = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in neighbours[v]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if reached != support:
        return False

    n = quiver.vertex_count
    return all(
        symmetrized_form(quiver, dv, unit_vector(n, v)) <= 0 for v in sorted(support)
    )


_VERTICES_RE = re.compile(r"^vertices\s+(\d+)$")
_ARROW_RE = re.compile(r"^(\d+)\s*->\s*(\d+)$")


def parse_quiver(text: str) -> Quiver:
    """Parse the quiver file format.

    First meaningful line is ``vertices N``; every further line is
    ``i -> j`` (one arrow each, repeats accumulate multiplicity).  ``#``
    starts a comment, blank lines are skipped.  Raises QuiverParseError
    with a line number on bad syntax and CycleError on cyclic input.
    """
    vertex_count: int | None = None
    arrows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertex_count is None:
            m = _VERTICES_RE.match(line)
            if not m:
                raise QuiverParseError(lineno, "expected 'vertices N'")
            vertex_count = int(m.group(1))
            if vertex_count < 1:
                raise QuiverParseError(lineno, "vertex count must be positive")
            continue
        m = _ARROW_RE.match(line)
        if not m:
            raise QuiverParseError(lineno, "expected 'i -> j'")
        s, t = int(m.group(1)), int(m.group(2))
        if not (1 <= s <= vertex_count and 1 <= t <= vertex_count):
            raise QuiverParseError(
                lineno, f"arrow {s} -> {t} out of range [1, {vertex_count}]"
            )
        arrows.append((s, t))
    if vertex_count is None:
        raise QuiverParseError(1, "missing 'vertices N' header")
    return Quiver(vertex_count, tuple(arrows))


def load_quiver(path) -> Quiver:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_quiver(fh.read())
