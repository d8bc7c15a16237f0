"""Standard tableaux for (GL_m, GL_n) as multiple chains in L_{m,k}^n."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .diagrams import SkewShape, YoungDiagram, as_diagram, conjugate, in_grading
from .errors import PreconditionError
from .gtpattern import GTPoset, compose_chain, decompose_levels, enumerate_patterns
from .lattice import ColumnSet, LatticeFamily, leq

# A monomial is an unordered multiset of columns; we pass it around as any iterable.
Monomial = Sequence[ColumnSet]


@dataclass(frozen=True)
class Chain:
    """A multiple chain I_1 <= I_2 <= ... in the tableau order, stored longest column first."""

    columns: tuple[ColumnSet, ...]

    def __post_init__(self):
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        for a, b in zip(cols, cols[1:]):
            if not leq(a, b):
                raise PreconditionError(f"{a!r} is not below {b!r}; not a chain")

    @classmethod
    def from_columns(cls, cols: Iterable[ColumnSet]) -> Chain:
        """Canonicalize an unordered collection that is a chain."""
        return cls(tuple(sorted(cols, key=ColumnSet.sort_key)))

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def __repr__(self):
        return "Chain(" + " <= ".join(map(repr, self.columns)) + ")"

    def to_json(self) -> list[list[int]]:
        return [c.to_json() for c in self.columns]

    @classmethod
    def from_json(cls, obj, m: int) -> Chain:
        return cls(tuple(ColumnSet(tuple(c), m) for c in obj))


def is_chain(cols: Iterable[ColumnSet]) -> bool:
    cols = sorted(cols, key=ColumnSet.sort_key)
    return all(leq(a, b) for a, b in zip(cols, cols[1:]))


def shape_of(t: Chain, n: int) -> SkewShape:
    """sh_n(t) = F/D with F the conjugate of the column lengths and d_r = #columns containing r."""
    F = conjugate([len(c) for c in t.columns])
    counts = Counter(e for c in t.columns for e in c.entries if e <= n)
    D = YoungDiagram(counts.get(r, 0) for r in range(1, n + 1))
    return SkewShape(F, D)


def content_shape(cols: Iterable[ColumnSet], n: int) -> SkewShape:
    """The shape an unordered monomial would have once straightened."""
    cols = list(cols)
    F = conjugate(sorted((len(c) for c in cols), reverse=True))
    counts = Counter(e for c in cols for e in c.entries if e <= n)
    return SkewShape(F, YoungDiagram(counts.get(r, 0) for r in range(1, n + 1)))


def _check_grading(family: LatticeFamily, F, D):
    if not in_grading(F, D, family.k, max(family.n, 1)):
        raise PreconditionError(
            f"({tuple(F)}, {tuple(D)}) is not in Lambda_{{{family.k},{family.n}}}"
        )


def enumerate_tableaux(family: LatticeFamily, F, D) -> list[Chain]:
    """T_m^n(F, D), produced by decomposing the patterns of type F/D."""
    F, D = as_diagram(F), as_diagram(D)
    _check_grading(family, F, D)
    poset = GTPoset.of_family(family)
    return [Chain(decompose_levels(p)) for p in enumerate_patterns(poset, F, D)]


def search_tableaux(family: LatticeFamily, F, D) -> list[Chain]:
    """T_m^n(F, D) by direct search over chains of lattice elements.

    Kept separate from the pattern route so the two can be checked against each other.
    """
    F, D = as_diagram(F), as_diagram(D)
    _check_grading(family, F, D)
    lengths = list(conjugate(F))
    target = D.padded(family.n)
    by_length: dict[int, list[ColumnSet]] = {}
    for I in family.elements:
        by_length.setdefault(len(I), []).append(I)
    out = []

    def rec(pos, chain, used):
        if pos == len(lengths):
            if tuple(used) == target:
                out.append(Chain(tuple(chain)))
            return
        for I in by_length.get(lengths[pos], []):
            if chain and not leq(chain[-1], I):
                continue
            r = family.prefix_length(I)
            if any(used[h] + 1 > target[h] for h in range(r)):
                continue
            for h in range(r):
                used[h] += 1
            chain.append(I)
            rec(pos + 1, chain, used)
            chain.pop()
            for h in range(r):
                used[h] -= 1

    rec(0, [], [0] * family.n)
    return out


def count_tableaux(family: LatticeFamily, F, D) -> int:
    """|T_m^n(F, D)| by memoized direct chain counting."""
    F, D = as_diagram(F), as_diagram(D)
    _check_grading(family, F, D)
    lengths = tuple(conjugate(F))
    target = D.padded(family.n)
    elems = family.elements
    by_length: dict[int, list[int]] = {}
    for idx, I in enumerate(elems):
        by_length.setdefault(len(I), []).append(idx)
    prefix = [family.prefix_length(I) for I in elems]

    @lru_cache(maxsize=None)
    def count(pos, prev, used):
        if pos == len(lengths):
            return int(used == target)
        total = 0
        for idx in by_length.get(lengths[pos], []):
            if prev >= 0 and not leq(elems[prev], elems[idx]):
                continue
            r = prefix[idx]
            new = tuple(u + 1 if h < r else u for h, u in enumerate(used))
            if any(a > b for a, b in zip(new, target)):
                continue
            total += count(pos + 1, idx, new)
        return total

    return count(0, -1, (0,) * family.n)


def pattern_of(t: Chain, family: LatticeFamily):
    return compose_chain(t.columns, GTPoset.of_family(family))


def skew_filling(t: Chain, n: int) -> list[list[int | None]]:
    """Rows of the tableau; boxes holding entries <= n come back as None."""
    height = max((len(c) for c in t.columns), default=0)
    rows = []
    for h in range(height):
        row = [c.entries[h] for c in t.columns if len(c) > h]
        rows.append([None if e <= n else e for e in row])
    return rows


def is_skew_semistandard(filling: list[list[int | None]]) -> bool:
    for row in filling:
        seen = [e for e in row if e is not None]
        # blanks form a left-justified block
        if row[: len(row) - len(seen)] != [None] * (len(row) - len(seen)):
            return False
        if any(b < a for a, b in zip(seen, seen[1:])):
            return False
    for r in range(1, len(filling)):
        for c, e in enumerate(filling[r]):
            above = filling[r - 1][c]
            if e is None and above is not None:
                return False
            if e is not None and above is not None and not above < e:
                return False
    return True


def render_skew(t: Chain, n: int) -> str:
    filling = skew_filling(t, n)
    if not is_skew_semistandard(filling):
        raise PreconditionError(f"{t!r} does not render to a skew semistandard tableau")
    width = max((len(str(e)) for row in filling for e in row if e is not None), default=1)
    lines = []
    for row in filling:
        lines.append(" ".join("." * width if e is None else str(e).rjust(width) for e in row))
    return "\n".join(lines)
