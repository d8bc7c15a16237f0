"""Young diagrams, skew shapes and the grading sets Lambda_{a,b}."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator

from .errors import PreconditionError


class YoungDiagram(tuple):
    """A partition stored as its row lengths with trailing zeros stripped.

    Behaves like a tuple of positive integers; ``D.part(r)`` reads the r-th row
    (1-based) and returns 0 past the length.
    """

    def __new__(cls, rows: Iterable[int] = ()):
        rows = [int(r) for r in rows]
        for r in rows:
            if r < 0:
                raise PreconditionError(f"negative row length in {rows}")
        for a, b in zip(rows, rows[1:]):
            if b > a:
                raise PreconditionError(f"rows of {rows} are not weakly decreasing")
        while rows and rows[-1] == 0:
            rows.pop()
        return super().__new__(cls, rows)

    def __repr__(self):
        return f"YoungDiagram({tuple(self)})"

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, r: int) -> int:
        return self[r - 1] if 1 <= r <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self):
            raise PreconditionError(f"{tuple(self)} has more than {n} rows")
        return tuple(self) + (0,) * (n - len(self))

    def __add__(self, other):
        return YoungDiagram(a + b for a, b in zip_longest(self, other, fillvalue=0))

    def to_json(self) -> list[int]:
        return list(self)


def as_diagram(rows) -> YoungDiagram:
    return rows if isinstance(rows, YoungDiagram) else YoungDiagram(rows)


def conjugate(D) -> YoungDiagram:
    D = as_diagram(D)
    if not D:
        return D
    return YoungDiagram(sum(1 for r in D if r >= c) for c in range(1, D[0] + 1))


def contains(F, D) -> bool:
    """True iff F contains D row by row (F ⊇ D)."""
    F, D = as_diagram(F), as_diagram(D)
    return len(D) <= len(F) and all(f >= d for f, d in zip(F, D))


def interlaces(F, E) -> bool:
    """True iff f_r >= e_r >= f_{r+1} for every r."""
    F, E = as_diagram(F), as_diagram(E)
    if len(E) > len(F):
        return False
    return all(F.part(r) >= E.part(r) >= F.part(r + 1) for r in range(1, len(F) + 1))


@dataclass(frozen=True)
class SkewShape:
    outer: YoungDiagram
    inner: YoungDiagram

    def __post_init__(self):
        object.__setattr__(self, "outer", as_diagram(self.outer))
        object.__setattr__(self, "inner", as_diagram(self.inner))
        if not contains(self.outer, self.inner):
            raise PreconditionError(f"{tuple(self.outer)} does not contain {tuple(self.inner)}")

    def __str__(self):
        return f"{tuple(self.outer)}/{tuple(self.inner)}"

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, obj) -> SkewShape:
        return cls(YoungDiagram(obj["outer"]), YoungDiagram(obj["inner"]))


@dataclass(frozen=True)
class GradePair:
    """An element (F, D) of Lambda_{a,b}: l(F) <= a, l(D) <= b and F ⊇ D."""

    F: YoungDiagram
    D: YoungDiagram
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "F", as_diagram(self.F))
        object.__setattr__(self, "D", as_diagram(self.D))
        if self.a < 1 or self.b < 1:
            raise PreconditionError("grading bounds must be positive")
        if not in_grading(self.F, self.D, self.a, self.b):
            raise PreconditionError(
                f"({tuple(self.F)}, {tuple(self.D)}) is not in Lambda_{{{self.a},{self.b}}}"
            )


def in_grading(F, D, a: int, b: int) -> bool:
    F, D = as_diagram(F), as_diagram(D)
    return len(F) <= a and len(D) <= b and contains(F, D)


def diagrams_in_box(rows: int, max_entry: int) -> Iterator[YoungDiagram]:
    """All diagrams with at most ``rows`` rows and entries at most ``max_entry``."""

    def rec(prefix, cap, left):
        if left == 0:
            yield YoungDiagram(prefix)
            return
        for v in range(cap, -1, -1):
            yield from rec(prefix + [v], v, left - 1)

    yield from rec([], max_entry, rows)


def subdiagrams(F, max_rows: int | None = None) -> Iterator[YoungDiagram]:
    """All D ⊆ F, optionally with at most ``max_rows`` rows."""
    F = as_diagram(F)
    bound = len(F) if max_rows is None else min(len(F), max_rows)

    def rec(prefix, r):
        if r > bound:
            yield YoungDiagram(prefix)
            return
        cap = F.part(r) if not prefix else min(F.part(r), prefix[-1])
        for v in range(cap, -1, -1):
            yield from rec(prefix + [v], r + 1)

    yield from rec([], 1)


def grading_pairs(a: int, b: int, max_entry: int) -> Iterator[tuple[YoungDiagram, YoungDiagram]]:
    """Enumerate Lambda_{a,b} restricted to entries <= max_entry."""
    for F in diagrams_in_box(a, max_entry):
        for D in subdiagrams(F, b):
            yield F, D


def parse_diagram(text: str) -> YoungDiagram:
    text = text.strip()
    if not text:
        return YoungDiagram()
    try:
        return YoungDiagram(int(x) for x in text.split(","))
    except ValueError as exc:
        raise PreconditionError(f"cannot parse diagram {text!r}: {exc}") from None
