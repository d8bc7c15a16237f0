"""Branching multiplicities for (GL_m, GL_n), (Sp_2m, Sp_2n) and (SO_p, SO_q).

The method of record is pattern enumeration on a truncated GT poset. The
``*_iterated`` and ``gl_pieri_count`` functions iterate one-step interlacing
rules instead and serve as independent oracles.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .diagrams import YoungDiagram, as_diagram, contains, interlaces
from .errors import InconsistencyError, PreconditionError, StableRangeError
from .gtpattern import GTPoset, GTPattern, enumerate_patterns
from .lattice import LatticeFamily
from .tableaux import Chain, count_tableaux, enumerate_tableaux


def _interlaced_below(F: YoungDiagram, max_len: int) -> Iterator[YoungDiagram]:
    """Every E with F interlacing E and l(E) <= max_len."""
    L = min(len(F), max_len)

    def rec(r, prefix):
        if r > L:
            yield YoungDiagram(prefix)
            return
        for v in range(F.part(r), F.part(r + 1) - 1, -1):
            yield from rec(r + 1, prefix + [v])

    # e_r >= f_{r+1} forces l(E) >= l(F) - 1
    if F.part(max_len + 2) > 0:
        return
    yield from rec(1, [])


# ---------------------------------------------------------------- GL

def gl_onestep(F, D, m: int) -> int:
    """Multiplicity of rho_{m-1}^D in rho_m^F: 1 if F interlaces D, else 0."""
    F, D = as_diagram(F), as_diagram(D)
    if len(F) > m or len(D) > m - 1:
        raise PreconditionError(f"need l(F) <= {m} and l(D) <= {m - 1}")
    return int(interlaces(F, D))


def gl_pieri_count(F, D, m: int, n: int) -> int:
    """Number of chains F = E_m ⊒ E_{m-1} ⊒ ... ⊒ E_n = D with l(E_i) <= i."""
    F, D = as_diagram(F), as_diagram(D)
    level = {F: 1}
    for i in range(m - 1, n - 1, -1):
        nxt: dict[YoungDiagram, int] = defaultdict(int)
        for E, c in level.items():
            for E2 in _interlaced_below(E, i):
                if gl_onestep(E, E2, i + 1):
                    nxt[E2] += c
        level = nxt
    return level.get(D, 0)


@dataclass(frozen=True)
class BranchingQuery:
    """A multiplicity question m(H-irrep D, G-irrep F).

    ``pair_kind`` is "GL", "Sp" or "SO"; (a, b) is (m, n) for GL and Sp and (p, q) for SO.
    """

    pair_kind: str
    a: int
    b: int
    F: YoungDiagram
    D: YoungDiagram

    def __post_init__(self):
        object.__setattr__(self, "F", as_diagram(self.F))
        object.__setattr__(self, "D", as_diagram(self.D))
        kind = self.pair_kind
        if kind == "GL":
            m, n = self.a, self.b
            if not 1 <= n < m:
                raise PreconditionError(f"(GL_{m}, GL_{n}) needs 1 <= n < m")
            if len(self.F) > m or len(self.D) > n:
                raise PreconditionError(f"need l(F) <= {m} and l(D) <= {n}")
        elif kind == "Sp":
            m, n = self.a, self.b
            if not 1 <= n < m:
                raise PreconditionError(f"(Sp_{2 * m}, Sp_{2 * n}) needs 1 <= n < m")
            if len(self.F) > n:
                raise StableRangeError(f"stable range requires l(F) <= n = {n}, got l(F) = {len(self.F)}")
        elif kind == "SO":
            p, q = self.a, self.b
            k = so_truncation(p, q)
            if len(self.F) > k:
                raise StableRangeError(f"stable range requires l(F) <= k = {k}, got l(F) = {len(self.F)}")
        else:
            raise PreconditionError(f"unknown pair kind {kind!r}")

    @property
    def poset(self) -> GTPoset:
        """The truncated GT poset whose patterns count this multiplicity."""
        if self.pair_kind == "GL":
            return GTPoset(self.a, self.b, self.a)
        if self.pair_kind == "Sp":
            return GTPoset(2 * self.a, 2 * self.b, self.b)
        return GTPoset(self.a, self.b, so_truncation(self.a, self.b))

    @property
    def family(self) -> LatticeFamily:
        return self.poset.family()

    def patterns(self) -> list[GTPattern]:
        return enumerate_patterns(self.poset, self.F, self.D)

    def tableaux(self) -> list[Chain]:
        if not contains(self.F, self.D):
            return []
        return enumerate_tableaux(self.family, self.F, self.D)

    def multiplicity(self) -> int:
        if not contains(self.F, self.D):
            return 0
        return len(self.patterns())


def gl_multiplicity(m: int, n: int, F, D) -> int:
    """|P_m^n(F, D)|, the multiplicity of rho_n^D in rho_m^F."""
    return BranchingQuery("GL", m, n, F, D).multiplicity()


def gl_tableau_count(m: int, n: int, F, D) -> int:
    F, D = as_diagram(F), as_diagram(D)
    if not contains(F, D):
        return 0
    return count_tableaux(LatticeFamily(m, m, n), F, D)


# ---------------------------------------------------------------- Sp

def sp_onestep(F, D, m: int) -> int:
    """Multiplicity of tau_{2m-2}^D in tau_{2m}^F: the number of E with F ⊒ E ⊒ D."""
    F, D = as_diagram(F), as_diagram(D)
    if len(F) > m or len(D) > m - 1:
        raise PreconditionError(f"need l(F) <= {m} and l(D) <= {m - 1}")
    return sum(1 for E in _interlaced_below(F, m) if interlaces(E, D))


def sp_multiplicity(m: int, n: int, F, D) -> int:
    """Stable range multiplicity of tau_{2n}^D in tau_{2m}^F via patterns on Gamma_{2m,n}^{2n}."""
    return BranchingQuery("Sp", m, n, F, D).multiplicity()


def sp_iterated(m: int, n: int, F, D) -> int:
    """Iterate the one-step Sp rule from Sp_2m down to Sp_2n, capping l(E_j) <= j."""
    F, D = as_diagram(F), as_diagram(D)
    level = {F: 1}
    for j in range(m, n, -1):
        nxt: dict[YoungDiagram, int] = defaultdict(int)
        for E, c in level.items():
            # candidates D' two interlacing steps below E
            seen = set()
            for mid in _interlaced_below(E, j):
                for cand in _interlaced_below(mid, j - 1):
                    seen.add(cand)
            for cand in seen:
                mult = sp_onestep(E, cand, j)
                if mult:
                    nxt[cand] += c * mult
        level = nxt
    return level.get(D, 0)


# ---------------------------------------------------------------- SO

def so_truncation(p: int, q: int) -> int:
    """The stable range length bound k: n if q = 2n+1, n-1 if q = 2n."""
    if q < 4:
        raise PreconditionError(f"(SO_{p}, SO_{q}) needs q >= 4")
    if p <= q:
        raise PreconditionError(f"(SO_{p}, SO_{q}) needs p > q")
    n = q // 2
    return n if q % 2 else n - 1


def so_onestep(F, D, direction: str, m: int) -> int:
    """Lemma-style one-step SO branching on nonnegative weights.

    ``odd-to-even``: SO_{2m+1} -> SO_{2m}, both weights of length <= m.
    ``even-to-odd``: SO_{2m} -> SO_{2m-1}, l(F) <= m and l(D) <= m-1.
    """
    F, D = as_diagram(F), as_diagram(D)
    if direction == "odd-to-even":
        if len(F) > m or len(D) > m:
            raise PreconditionError(f"SO_{2 * m + 1} -> SO_{2 * m} needs lengths <= {m}")
    elif direction == "even-to-odd":
        if len(F) > m or len(D) > m - 1:
            raise PreconditionError(f"SO_{2 * m} -> SO_{2 * m - 1} needs l(F) <= {m}, l(D) <= {m - 1}")
    else:
        raise PreconditionError(f"unknown direction {direction!r}")
    return int(interlaces(F, D))


def _assert_unsigned(E: YoungDiagram, r: int):
    # an SO_{2j} weight with l(E) = j would need its sign tracked
    if r % 2 == 0 and len(E) >= r // 2:
        raise InconsistencyError(f"signed SO_{r} weight {tuple(E)} arose inside the stable range")


def so_multiplicity(p: int, q: int, F, D) -> int:
    """Stable range multiplicity of sigma_q^D in sigma_p^F via patterns on Gamma_{p,k}^q."""
    return BranchingQuery("SO", p, q, F, D).multiplicity()


def so_iterated(p: int, q: int, F, D) -> int:
    """Iterate one-step SO branching SO_p -> SO_{p-1} -> ... -> SO_q."""
    F, D = as_diagram(F), as_diagram(D)
    _assert_unsigned(F, p)
    level = {F: 1}
    for r in range(p, q, -1):
        j = r // 2
        direction = "odd-to-even" if r % 2 else "even-to-odd"
        cap = (r - 1) // 2
        nxt: dict[YoungDiagram, int] = defaultdict(int)
        for E, c in level.items():
            for cand in _interlaced_below(E, cap):
                if so_onestep(E, cand, direction, j):
                    _assert_unsigned(cand, r - 1)
                    nxt[cand] += c
        level = nxt
    return level.get(D, 0)
