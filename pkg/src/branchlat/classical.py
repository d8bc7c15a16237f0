"""Letter alphabets for Sp and SO, the lattices L_Sp and L_SO, and their GL models.

Letters are ordered u_1 < v_1 < u_2 < v_2 < ... < u_m < v_m (< inf for odd SO).
``iota`` sends u_c -> 2c-1, v_c -> 2c, inf -> 2m+1; ``psi`` sends letters to
row indices of the matrix whose minors realize them (u_c -> c, v_c -> the
isotropic partner of c).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .branching import so_truncation
from .errors import PreconditionError
from .lattice import ColumnSet, LatticeFamily, shift_iso
from .straightening import minor_rows, straighten_pair

_INF_RANK = 10**9
_LETTER_RE = re.compile(r"^\s*(?:(u|v)(\d+)|(inf|∞))\s*$")


@dataclass(frozen=True, order=False)
class Letter:
    kind: str          # "u", "v" or "inf"
    index: int = 0     # unused for inf

    def __post_init__(self):
        if self.kind not in ("u", "v", "inf"):
            raise PreconditionError(f"unknown letter kind {self.kind!r}")
        if self.kind != "inf" and self.index < 1:
            raise PreconditionError("letter indices start at 1")
        if self.kind == "inf":
            object.__setattr__(self, "index", 0)

    @property
    def rank(self) -> int:
        if self.kind == "inf":
            return _INF_RANK
        return 2 * self.index - (self.kind == "u")

    def __lt__(self, other):
        return self.rank < other.rank

    def __le__(self, other):
        return self.rank <= other.rank

    def __str__(self):
        return "inf" if self.kind == "inf" else f"{self.kind}{self.index}"

    __repr__ = __str__


def u(c: int) -> Letter:
    return Letter("u", c)


def v(c: int) -> Letter:
    return Letter("v", c)


INF = Letter("inf")


def parse_letter(text: str) -> Letter:
    mt = _LETTER_RE.match(text)
    if not mt:
        raise PreconditionError(f"cannot parse letter {text!r}")
    if mt.group(3):
        return INF
    return Letter(mt.group(1), int(mt.group(2)))


@dataclass(frozen=True)
class LetterColumn:
    letters: tuple[Letter, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise PreconditionError("letter columns are nonempty")
        if any(not a < b for a, b in zip(letters, letters[1:])):
            raise PreconditionError(f"{letters} is not strictly increasing")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __repr__(self):
        return "[" + ",".join(map(str, self.letters)) + "]"

    def __str__(self):
        return ",".join(map(str, self.letters))

    def sort_key(self):
        return (-len(self.letters), tuple(x.rank for x in self.letters))

    def to_json(self) -> list[str]:
        return [str(x) for x in self.letters]


def parse_letter_column(text: str) -> LetterColumn:
    return LetterColumn(tuple(parse_letter(t) for t in text.split(",")))


def letter_leq(I: LetterColumn, J: LetterColumn) -> bool:
    """Tableau order on letter columns."""
    return len(I) >= len(J) and all(a <= b for a, b in zip(I.letters, J.letters))


def _is_letter_chain(t: Sequence[LetterColumn]) -> bool:
    return all(letter_leq(a, b) for a, b in zip(t, t[1:]))


# ---------------------------------------------------------------- index maps

def iota_letter(x: Letter, m: int) -> int:
    return 2 * m + 1 if x.kind == "inf" else x.rank


def iota(col: LetterColumn, p: int) -> ColumnSet:
    """The order isomorphism L<p> -> L_p (p = 2m, or 2m+1 with inf -> 2m+1)."""
    m = p // 2
    _check_rank(col, m, allow_inf=bool(p % 2))
    return ColumnSet(tuple(iota_letter(x, m) for x in col), p)


def iota_inverse(I: ColumnSet, p: int) -> LetterColumn:
    m = p // 2
    out = []
    for e in I.entries:
        if e == 2 * m + 1:
            out.append(INF)
        else:
            out.append(u((e + 1) // 2) if e % 2 else v(e // 2))
    return LetterColumn(tuple(out))


def _check_rank(col: LetterColumn, m: int, allow_inf: bool):
    for x in col:
        if x.kind == "inf":
            if not allow_inf:
                raise PreconditionError(f"{col!r}: inf is not a letter of <{2 * m}>")
        elif x.index > m:
            raise PreconditionError(f"{col!r} uses letters beyond rank {m}")


def psi_sp(col: LetterColumn, m: int) -> tuple[int, ...]:
    """Row indices u_c -> c, v_c -> 2m+1-c, listed in letter order."""
    _check_rank(col, m, allow_inf=False)
    return tuple(x.index if x.kind == "u" else 2 * m + 1 - x.index for x in col)


def psi_so(col: LetterColumn, p: int) -> tuple[int, ...]:
    """Row indices for SO_p; for odd p = 2m+1, v_c -> 2m+2-c and inf -> m+1."""
    m = p // 2
    if p % 2 == 0:
        return psi_sp(col, m)
    _check_rank(col, m, allow_inf=True)
    out = []
    for x in col:
        if x.kind == "u":
            out.append(x.index)
        elif x.kind == "v":
            out.append(2 * m + 2 - x.index)
        else:
            out.append(m + 1)
    return tuple(out)


def lessdot_order(p: int) -> tuple[int, ...]:
    """{1..p} listed in the order induced by psi from the letter order."""
    m = p // 2
    alphabet = [x for c in range(1, m + 1) for x in (u(c), v(c))] + ([INF] if p % 2 else [])
    return psi_so(LetterColumn(tuple(alphabet)), p)


# ---------------------------------------------------------------- lattices

class _LetterLattice:
    """Shared machinery for L_Sp and L_SO.

    Subclasses provide p (alphabet size), q, n and k. A column belongs to the
    lattice if its letters below the tail threshold are exactly u_1..u_c with
    c <= n and it has at most k letters; tail letters are those with iota > q.
    """

    p: int
    q: int
    n: int
    k: int

    @property
    def rank(self) -> int:
        return self.p // 2

    @property
    def alphabet(self) -> tuple[Letter, ...]:
        letters = [x for c in range(1, self.rank + 1) for x in (u(c), v(c))]
        if self.p % 2:
            letters.append(INF)
        return tuple(letters)

    @property
    def tail_letters(self) -> tuple[Letter, ...]:
        return tuple(x for x in self.alphabet if iota_letter(x, self.rank) > self.q)

    def psi(self, col: LetterColumn) -> tuple[int, ...]:
        return psi_so(col, self.p)

    def contains(self, col: LetterColumn) -> bool:
        if len(col) > self.k:
            return False
        alphabet = set(self.alphabet)
        if any(x not in alphabet for x in col):
            return False
        head = [x for x in col if iota_letter(x, self.rank) <= self.q]
        return head == [u(c) for c in range(1, len(head) + 1)] and len(head) <= self.n

    def require(self, col: LetterColumn) -> LetterColumn:
        if not self.contains(col):
            raise PreconditionError(f"{col!r} is not an element of {self}")
        return col

    @cached_property
    def elements(self) -> tuple[LetterColumn, ...]:
        out = []
        tail = self.tail_letters
        for c in range(0, min(self.n, self.k) + 1):
            head = tuple(u(h) for h in range(1, c + 1))
            for s in range(0, self.k - c + 1):
                for t in combinations(tail, s):
                    if c + s:
                        out.append(LetterColumn(head + t))
        out.sort(key=LetterColumn.sort_key)
        return tuple(out)

    @property
    def gl_family(self) -> LatticeFamily:
        """L_{p,k}^q, the GL lattice this one is isomorphic to."""
        return LatticeFamily(self.p, self.k, self.q)

    @property
    def compressed_family(self) -> LatticeFamily:
        """L_{p-q+n,k}^n: head letters to 1..c, tail letters to n+1, n+2, ..."""
        return LatticeFamily(self.p - self.q + self.n, self.k, self.n)

    def compress(self, col: LetterColumn) -> ColumnSet:
        self.require(col)
        tail_pos = {x: self.n + 1 + i for i, x in enumerate(self.tail_letters)}
        vals = tuple(x.index if x not in tail_pos else tail_pos[x] for x in col)
        return ColumnSet(vals, self.compressed_family.m)

    def to_gl(self, col: LetterColumn) -> ColumnSet:
        """Compress, then shift the tail up by q - n."""
        return shift_iso(self.compress(col), self.compressed_family, self.q - self.n)

    def from_gl(self, I: ColumnSet) -> LetterColumn:
        self.gl_family.require(I)
        tail = self.tail_letters
        out = []
        for e in I.entries:
            out.append(u(e) if e <= self.q else tail[e - self.q - 1])
        return self.require(LetterColumn(tuple(out)))

    def iota(self, col: LetterColumn) -> ColumnSet:
        return iota(col, self.p)

    def iota_inverse(self, I: ColumnSet) -> LetterColumn:
        return iota_inverse(I, self.p)


@dataclass(frozen=True)
class SpLattice(_LetterLattice):
    """L_Sp = L<n, 2m>_n for (Sp_2m, Sp_2n)."""

    m: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n < self.m:
            raise PreconditionError(f"(Sp_{2 * self.m}, Sp_{2 * self.n}) needs 1 <= n < m")

    @property
    def p(self) -> int:
        return 2 * self.m

    @property
    def q(self) -> int:
        return 2 * self.n

    @property
    def k(self) -> int:
        return self.n

    def __str__(self):
        return f"L_Sp(m={self.m}, n={self.n})"


@dataclass(frozen=True)
class SOLattice(_LetterLattice):
    """L_SO = L<n, q, p>_k for (SO_p, SO_q)."""

    p: int
    q: int

    def __post_init__(self):
        so_truncation(self.p, self.q)

    @property
    def n(self) -> int:
        return self.q // 2

    @property
    def k(self) -> int:
        return so_truncation(self.p, self.q)

    def __str__(self):
        return f"L_SO(p={self.p}, q={self.q})"


def sp_lattice_iso(col: LetterColumn, lattice: SpLattice) -> ColumnSet:
    return lattice.to_gl(col)


def so_lattice_iso(col: LetterColumn, lattice: SOLattice) -> ColumnSet:
    return lattice.to_gl(col)


# ---------------------------------------------------------------- standardness

def is_sp_standard(t: Sequence[LetterColumn], m: int) -> bool:
    """Every column lies above J_0 = [u_1, ..., u_m] in the tableau order."""
    t = list(t)
    if not _is_letter_chain(t):
        raise PreconditionError(f"{t} is not a chain")
    J0 = LetterColumn(tuple(u(c) for c in range(1, m + 1)))
    for col in t:
        _check_rank(col, m, allow_inf=False)
        if not letter_leq(J0, col):
            return False
    return True


def is_o_standard(t: Sequence[LetterColumn], m: int) -> bool:
    """The two orthogonal conditions on the first two columns of a chain.

    With alpha, beta the numbers of letters <= v_c in I_1, I_2:
    (1) alpha + beta <= 2c for every c; (2) when equality holds, I_1's alpha-th
    letter is u_c and I_2's beta-th letter is v_c, then I_2's (beta-1)-th letter is u_c.
    """
    t = list(t)
    if not _is_letter_chain(t):
        raise PreconditionError(f"{t} is not a chain")
    if not t:
        return True
    first = t[0].letters
    second = t[1].letters if len(t) > 1 else ()
    for c in range(1, m + 1):
        bound = v(c)
        alpha = sum(1 for x in first if x <= bound)
        beta = sum(1 for x in second if x <= bound)
        if alpha + beta > 2 * c:
            return False
        if alpha + beta == 2 * c and alpha >= 1 and beta >= 1:
            if first[alpha - 1] == u(c) and second[beta - 1] == v(c):
                if beta < 2 or second[beta - 2] != u(c):
                    return False
    return True


# ---------------------------------------------------------------- straightening in letters

def delta_prime(col: LetterColumn, p: int, Q) -> Fraction:
    """delta_{I'}(Q): the minor on rows psi(I) (in letter order) and the first |I| columns."""
    return minor_rows(psi_so(col, p), Q)


def straighten_letters(I: LetterColumn, J: LetterColumn, p: int, seed: int = 0):
    """delta_{I'} delta_{J'} as a combination of delta_{S'} delta_{T'} with S <= T in letters.

    psi turns the letter order into the row order of the minors, so the GL
    relation for iota(I), iota(J) transports verbatim. Returns (coeff, S, T) triples.
    """
    exp = straighten_pair(iota(I, p), iota(J, p), None, seed=seed)
    return [(t.coeff, iota_inverse(t.S, p), iota_inverse(t.T, p)) for t in exp.terms]
