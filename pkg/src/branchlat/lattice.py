"""Column sets under the tableau order and the lattices L_{m,k}^n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import PreconditionError


@dataclass(frozen=True)
class ColumnSet:
    """A nonempty strictly increasing subset of {1, ..., m}."""

    entries: tuple[int, ...]
    m: int

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise PreconditionError("column sets are nonempty")
        if any(b <= a for a, b in zip(entries, entries[1:])):
            raise PreconditionError(f"{list(entries)} is not strictly increasing")
        if entries[0] < 1 or entries[-1] > self.m:
            raise PreconditionError(f"{list(entries)} has entries outside 1..{self.m}")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, c):
        return self.entries[c]

    def __repr__(self):
        return "[" + ",".join(map(str, self.entries)) + "]"

    def sort_key(self):
        """Longest first, then lexicographic; sorting a chain by this key lists it in order."""
        return (-len(self.entries), self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)


def column(entries: Iterable[int], m: int) -> ColumnSet:
    return ColumnSet(tuple(entries), m)


def parse_column(text: str, m: int) -> ColumnSet:
    try:
        return ColumnSet(tuple(int(x) for x in text.split(",")), m)
    except ValueError as exc:
        raise PreconditionError(f"cannot parse column {text!r}: {exc}") from None


def _same_ambient(I: ColumnSet, J: ColumnSet):
    if I.m != J.m:
        raise PreconditionError(f"ambient mismatch: {I!r} lives in L_{I.m}, {J!r} in L_{J.m}")


def leq(I: ColumnSet, J: ColumnSet) -> bool:
    """Tableau order: |I| >= |J| and I's c-th entry <= J's c-th entry for c <= |J|."""
    _same_ambient(I, J)
    return len(I) >= len(J) and all(a <= b for a, b in zip(I.entries, J.entries))


def comparable(I: ColumnSet, J: ColumnSet) -> bool:
    return leq(I, J) or leq(J, I)


def meet(I: ColumnSet, J: ColumnSet, family: LatticeFamily | None = None) -> ColumnSet:
    _same_ambient(I, J)
    if len(I) < len(J):
        I, J = J, I
    # I is the longer column; its tail survives.
    out = tuple(min(a, b) for a, b in zip(I.entries, J.entries)) + I.entries[len(J):]
    result = ColumnSet(out, I.m)
    if family is not None:
        family.require(result)
    return result


def join(I: ColumnSet, J: ColumnSet, family: LatticeFamily | None = None) -> ColumnSet:
    _same_ambient(I, J)
    result = ColumnSet(tuple(max(a, b) for a, b in zip(I.entries, J.entries)), I.m)
    if family is not None:
        family.require(result)
    return result


@dataclass(frozen=True)
class LatticeFamily:
    """L_{m,k}^n: columns [1..r] + tail, [1..r] or tail, with r <= n, tail in n+1..m, |I| <= k.

    n = 0 and n = 1 both give L_{m,k}, all subsets of size at most k.
    """

    m: int
    k: int
    n: int

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError(f"m must be positive, got {self.m}")
        if not 1 <= self.k <= self.m:
            raise PreconditionError(f"need 1 <= k <= m, got k={self.k}, m={self.m}")
        if not 0 <= self.n < self.m:
            raise PreconditionError(f"need 0 <= n < m, got n={self.n}, m={self.m}")

    def __str__(self):
        return f"L_{{{self.m},{self.k}}}^{self.n}"

    def contains(self, I: ColumnSet) -> bool:
        if I.m != self.m or len(I) > self.k:
            return False
        low = [e for e in I.entries if e <= self.n]
        return low == list(range(1, len(low) + 1))

    def require(self, I: ColumnSet) -> ColumnSet:
        if not self.contains(I):
            raise PreconditionError(f"{I!r} is not an element of {self}")
        return I

    def prefix_length(self, I: ColumnSet) -> int:
        return sum(1 for e in I.entries if e <= self.n)

    @cached_property
    def elements(self) -> tuple[ColumnSet, ...]:
        tail = range(self.n + 1, self.m + 1)
        out = []
        for r in range(0, min(self.n, self.k) + 1):
            prefix = tuple(range(1, r + 1))
            for s in range(0, self.k - r + 1):
                for t in combinations(tail, s):
                    if r + s:
                        out.append(ColumnSet(prefix + t, self.m))
        out.sort(key=ColumnSet.sort_key)
        return tuple(out)

    def column(self, entries: Iterable[int]) -> ColumnSet:
        return self.require(ColumnSet(tuple(entries), self.m))


def lattice_elements(family: LatticeFamily) -> tuple[ColumnSet, ...]:
    return family.elements


def shift_iso(I: ColumnSet, family: LatticeFamily, d: int) -> ColumnSet:
    """The isomorphism L_{m,k}^n -> L_{m+d,k}^{n+d}: prefix fixed, tail shifted by d."""
    if family.k > family.n:
        raise PreconditionError(f"shift isomorphism needs k <= n, got k={family.k}, n={family.n}")
    if d < 0:
        raise PreconditionError("shift must be nonnegative")
    family.require(I)
    return ColumnSet(tuple(e if e <= family.n else e + d for e in I.entries), family.m + d)


def shifted_family(family: LatticeFamily, d: int) -> LatticeFamily:
    return LatticeFamily(family.m + d, family.k, family.n + d)
