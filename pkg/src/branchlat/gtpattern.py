"""GT posets, order-increasing subsets, the Birkhoff correspondence and GT patterns.

A poset Gamma_{m,k}^n has rows i = n..m, row i holding coordinates
x_1^(i), ..., x_{min(i,k)}^(i) with x_j^(i+1) >= x_j^(i) >= x_{j+1}^(i+1).
Patterns store their rows top (row m) to bottom (row n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .diagrams import SkewShape, YoungDiagram, as_diagram, contains
from .errors import PreconditionError
from .lattice import ColumnSet, LatticeFamily, leq


@dataclass(frozen=True)
class GTPoset:
    m: int
    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.n <= self.m:
            raise PreconditionError(f"need 0 <= n <= m, got n={self.n}, m={self.m}")
        if not 1 <= self.k <= self.m:
            raise PreconditionError(f"need 1 <= k <= m, got k={self.k}, m={self.m}")

    @property
    def row_indices(self) -> range:
        """Row labels from top to bottom."""
        return range(self.m, self.n - 1, -1)

    def row_length(self, i: int) -> int:
        if not self.n <= i <= self.m:
            raise PreconditionError(f"row {i} is outside {self.n}..{self.m}")
        return min(i, self.k)

    @property
    def size(self) -> int:
        return sum(min(i, self.k) for i in range(self.n, self.m + 1))

    def elements(self) -> list[tuple[int, int]]:
        return [(i, j) for i in self.row_indices for j in range(1, self.row_length(i) + 1)]

    def covers(self) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
        """Pairs (bigger, smaller) generating the order."""
        for i in range(self.n, self.m):
            for j in range(1, self.row_length(i) + 1):
                yield (i + 1, j), (i, j)
                if j + 1 <= self.row_length(i + 1):
                    yield (i, j), (i + 1, j + 1)

    def family(self) -> LatticeFamily:
        return LatticeFamily(self.m, self.k, self.n)

    @classmethod
    def of_family(cls, family: LatticeFamily) -> GTPoset:
        return cls(family.m, family.n, family.k)


@dataclass(frozen=True)
class OrderIncreasingSubset:
    """An up-closed subset; row i is {x_1^(i), ..., x_{s_i}^(i)}.

    ``sizes`` lists s_n, s_{n+1}, ..., s_m (bottom row first).
    """

    poset: GTPoset
    sizes: tuple[int, ...]

    def __post_init__(self):
        P = self.poset
        sizes = tuple(self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if len(sizes) != P.m - P.n + 1:
            raise PreconditionError("one size per row is required")
        for i, s in zip(range(P.n, P.m + 1), sizes):
            if not 0 <= s <= P.row_length(i):
                raise PreconditionError(f"row {i} cannot hold {s} elements")
        for s, t in zip(sizes, sizes[1:]):
            if not s <= t <= s + 1:
                raise PreconditionError(f"row sizes {sizes} do not describe an up-closed set")

    def size_of_row(self, i: int) -> int:
        return self.sizes[i - self.poset.n]

    @property
    def members(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j) for i in range(self.poset.n, self.poset.m + 1)
            for j in range(1, self.size_of_row(i) + 1)
        )

    def __len__(self):
        return sum(self.sizes)

    def union(self, other: OrderIncreasingSubset) -> OrderIncreasingSubset:
        return OrderIncreasingSubset(self.poset, tuple(map(max, self.sizes, other.sizes)))

    def intersection(self, other: OrderIncreasingSubset) -> OrderIncreasingSubset:
        return OrderIncreasingSubset(self.poset, tuple(map(min, self.sizes, other.sizes)))

    def characteristic(self) -> GTPattern:
        P = self.poset
        rows = []
        for i in P.row_indices:
            s = self.size_of_row(i)
            rows.append((1,) * s + (0,) * (P.row_length(i) - s))
        return GTPattern(P, tuple(rows))

    @classmethod
    def from_members(cls, poset: GTPoset, members: Iterable[tuple[int, int]]):
        members = set(members)
        for big, small in poset.covers():
            if small in members and big not in members:
                raise PreconditionError(f"{sorted(members)} is not up-closed: {small} in, {big} out")
        sizes = []
        for i in range(poset.n, poset.m + 1):
            row = sorted(j for (r, j) in members if r == i)
            if row != list(range(1, len(row) + 1)):
                raise PreconditionError(f"row {i} of the subset is not an initial segment")
            sizes.append(len(row))
        return cls(poset, tuple(sizes))


def birkhoff_to_subset(I: ColumnSet, poset: GTPoset) -> OrderIncreasingSubset:
    """A_I, with s_i the number of entries of I that are <= i."""
    poset.family().require(I)
    return OrderIncreasingSubset(
        poset, tuple(sum(1 for e in I.entries if e <= i) for i in range(poset.n, poset.m + 1))
    )


def subset_to_column(A: OrderIncreasingSubset) -> ColumnSet:
    P = A.poset
    if not any(A.sizes):
        raise PreconditionError("the empty subset corresponds to no lattice element")
    entries = list(range(1, A.sizes[0] + 1))
    for i, (s, t) in zip(range(P.n + 1, P.m + 1), zip(A.sizes, A.sizes[1:])):
        if t == s + 1:
            entries.append(i)
    return ColumnSet(tuple(entries), P.m)


@dataclass(frozen=True)
class GTPattern:
    """An order-preserving map Gamma_{m,k}^n -> Z_{>=0}, rows listed top to bottom."""

    poset: GTPoset
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        P = self.poset
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != P.m - P.n + 1:
            raise PreconditionError(f"expected {P.m - P.n + 1} rows, got {len(rows)}")
        for i, row in zip(P.row_indices, rows):
            if len(row) != P.row_length(i):
                raise PreconditionError(f"row {i} needs {P.row_length(i)} entries, got {len(row)}")
            if any(v < 0 for v in row):
                raise PreconditionError("pattern values are nonnegative")
        for big, small in P.covers():
            if self.value(*big) < self.value(*small):
                raise PreconditionError(f"pattern is not order preserving at {big} >= {small}")

    def value(self, i: int, j: int) -> int:
        P = self.poset
        if not 1 <= j <= P.row_length(i):
            raise PreconditionError(f"no coordinate x_{j}^({i}) in the poset")
        return self.rows[P.m - i][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[self.poset.m - i]

    @property
    def top(self) -> YoungDiagram:
        return YoungDiagram(self.rows[0])

    @property
    def bottom(self) -> YoungDiagram:
        return YoungDiagram(self.rows[-1])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __add__(self, other):
        return add(self, other)

    def to_json(self) -> dict:
        P = self.poset
        return {"m": P.m, "n": P.n, "k": P.k, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> GTPattern:
        return cls(GTPoset(obj["m"], obj["n"], obj["k"]), tuple(tuple(r) for r in obj["rows"]))


def zero_pattern(poset: GTPoset) -> GTPattern:
    return GTPattern(poset, tuple((0,) * poset.row_length(i) for i in poset.row_indices))


def add(p: GTPattern, q: GTPattern) -> GTPattern:
    if p.poset != q.poset:
        raise PreconditionError(f"cannot add patterns on {p.poset} and {q.poset}")
    return GTPattern(p.poset, tuple(tuple(map(int.__add__, a, b)) for a, b in zip(p.rows, q.rows)))


def pattern_type(p: GTPattern) -> SkewShape:
    return SkewShape(p.top, p.bottom)


def characteristic(I: ColumnSet, poset: GTPoset) -> GTPattern:
    return birkhoff_to_subset(I, poset).characteristic()


def compose_chain(columns: Sequence[ColumnSet], poset: GTPoset) -> GTPattern:
    """Sum of the characteristic functions of A_I over the columns of a chain."""
    columns = list(columns)
    for a, b in zip(columns, columns[1:]):
        if not leq(a, b):
            raise PreconditionError(f"{a!r} and {b!r} are out of order; not a chain")
    total = zero_pattern(poset)
    for I in columns:
        total = add(total, characteristic(I, poset))
    return total


def level_set(p: GTPattern, level: int) -> OrderIncreasingSubset:
    members = {(i, j) for (i, j) in p.poset.elements() if p.value(i, j) >= level}
    # from_members re-checks up-closure, which holds for any order-preserving map
    return OrderIncreasingSubset.from_members(p.poset, members)


def decompose_levels(p: GTPattern) -> tuple[ColumnSet, ...]:
    """The multiple chain I_1 <= ... <= I_c whose characteristic functions sum to p.

    I_j corresponds to the level set {x : p(x) >= j}; c = p(x_1^(m)). The zero
    pattern gives the empty chain.
    """
    c = p.rows[0][0] if p.rows[0] else 0
    return tuple(subset_to_column(level_set(p, j)) for j in range(1, c + 1))


def _row_candidates(upper: Sequence[int], length: int, lo: Sequence[int], hi: Sequence[int]):
    """Rows e of the given length with upper interlacing e (u_j >= e_j >= u_{j+1}) and lo <= e <= hi.

    Yielded in lexicographically decreasing order.
    """
    def rec(j, prefix):
        if j == length:
            yield tuple(prefix)
            return
        top = min(upper[j], hi[j])
        bot = max(upper[j + 1] if j + 1 < len(upper) else 0, lo[j])
        for v in range(top, bot - 1, -1):
            prefix.append(v)
            yield from rec(j + 1, prefix)
            prefix.pop()

    yield from rec(0, [])


def enumerate_patterns(poset: GTPoset, F, D) -> list[GTPattern]:
    """All patterns on the poset with top row F and bottom row D.

    Rows are generated top to bottom, each in lexicographically decreasing order.
    """
    F, D = as_diagram(F), as_diagram(D)
    P = poset
    if len(F) > P.k:
        raise PreconditionError(f"l(F) = {len(F)} exceeds the poset length k = {P.k}")
    if len(D) > P.row_length(P.n):
        raise PreconditionError(f"l(D) = {len(D)} exceeds the bottom row length {P.row_length(P.n)}")
    if not contains(F, D):
        return []
    top = F.padded(P.row_length(P.m))
    bottom = D.padded(P.row_length(P.n))
    if P.m == P.n:
        return [GTPattern(P, (top,))] if top == bottom else []

    def bounds(i):
        # chains below x_j^(i) reach x_j^(n); chains above reach x_{j-(i-n)}^(n)
        L = P.row_length(i)
        lo = [bottom[j] if j < len(bottom) else 0 for j in range(L)]
        hi = []
        for j in range(L):
            t = j - (i - P.n)
            hi.append(bottom[t] if t >= 0 else top[0])
        return lo, hi

    out = []

    def rec(i, rows):
        if i < P.n:
            if rows[-1] == bottom:
                out.append(GTPattern(P, tuple(rows)))
            return
        lo, hi = bounds(i)
        for cand in _row_candidates(rows[-1], P.row_length(i), lo, hi):
            rows.append(cand)
            rec(i - 1, rows)
            rows.pop()

    rec(P.m - 1, [top])
    return out


def count_patterns(poset: GTPoset, F, D) -> int:
    return len(enumerate_patterns(poset, F, D))
