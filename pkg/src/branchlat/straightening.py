"""Minors of a generic matrix, quadratic straightening, weights and Hibi normal forms.

A product delta_I delta_J is straightened by interpolation: the unknown
coefficients over the finite set of standard pairs with the right content
are recovered from an exact linear solve at random rational matrices, then
re-checked at fresh matrices.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InconsistencyError, PreconditionError
from .exact import det, solve_unique
from .gtpattern import GTPoset, add, characteristic, decompose_levels, zero_pattern
from .lattice import ColumnSet, LatticeFamily, comparable, join, leq, meet
from .sampling import SeedStream, random_matrix
from .tableaux import Chain, content_shape, shape_of

RETRY_BUDGET = 8
VERIFY_POINTS = 20
EXTRA_POINTS = 3

Matrix = Sequence[Sequence[Fraction]]


def minor_rows(rows: Sequence[int], Q: Matrix) -> Fraction:
    """Determinant of rows ``rows`` (1-based, in the given order) and columns 1..len(rows)."""
    r = len(rows)
    if r > len(Q[0]):
        raise PreconditionError(f"a {r}x{r} minor needs at least {r} columns")
    if any(not 1 <= i <= len(Q) for i in rows):
        raise PreconditionError(f"row indices {list(rows)} exceed {len(Q)} rows")
    return det([list(Q[i - 1][:r]) for i in rows])


def minor_eval(I: ColumnSet, Q: Matrix) -> Fraction:
    if len(Q) != I.m:
        raise PreconditionError(f"{I!r} needs an {I.m}-row matrix, got {len(Q)} rows")
    return minor_rows(I.entries, Q)


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    S: ColumnSet
    T: ColumnSet

    @property
    def pair(self) -> tuple[ColumnSet, ColumnSet]:
        return (self.S, self.T)

    def to_json(self) -> dict:
        return {"coeff": str(self.coeff), "S": self.S.to_json(), "T": self.T.to_json()}


@dataclass(frozen=True)
class StraighteningExpansion:
    """delta_I delta_J = sum of coeff * delta_S delta_T over standard pairs S <= T."""

    I: ColumnSet
    J: ColumnSet
    terms: tuple[Term, ...]

    def as_dict(self) -> dict[tuple[ColumnSet, ColumnSet], Fraction]:
        return {t.pair: t.coeff for t in self.terms}

    def to_json(self) -> dict:
        return {"I": self.I.to_json(), "J": self.J.to_json(), "terms": [t.to_json() for t in self.terms]}

    def evaluate(self, Q: Matrix) -> tuple[Fraction, Fraction]:
        """(lhs, rhs) at one matrix."""
        cache: dict[ColumnSet, Fraction] = {}

        def d(C):
            if C not in cache:
                cache[C] = minor_eval(C, Q)
            return cache[C]

        return d(self.I) * d(self.J), sum((t.coeff * d(t.S) * d(t.T) for t in self.terms), Fraction(0))


# ---------------------------------------------------------------- weights

def weight(I: ColumnSet, N: int | None = None) -> int:
    """wt(I) = sum_r i_r N^{m-r}; N defaults to 2m+1."""
    m = I.m
    N = default_base(m) if N is None else N
    if N <= 2 * m:
        raise PreconditionError(f"weight base must exceed 2m = {2 * m}, got {N}")
    return sum(e * N ** (m - r) for r, e in enumerate(I.entries, start=1))


def default_base(m: int) -> int:
    return 2 * m + 1


def chain_weight(cols: Iterable[ColumnSet], N: int | None = None) -> int:
    return sum(weight(c, N) for c in cols)


def _entry_sums(S: ColumnSet, T: ColumnSet) -> tuple[int, ...]:
    L = max(len(S), len(T))
    return tuple((S.entries[h] if h < len(S) else 0) + (T.entries[h] if h < len(T) else 0)
                 for h in range(L))


# ---------------------------------------------------------------- straightening

def standard_candidates(I: ColumnSet, J: ColumnSet) -> list[tuple[ColumnSet, ColumnSet]]:
    """Standard pairs S <= T with |S| = |I|, |T| = |J| and S ⊎ T = I ⊎ J."""
    content = Counter(I.entries) + Counter(J.entries)
    doubles = sorted(e for e, c in content.items() if c == 2)
    singles = sorted(e for e, c in content.items() if c == 1)
    take = len(I) - len(doubles)
    out = []
    if take < 0:
        return out
    for pick in combinations(singles, take):
        rest = [e for e in singles if e not in pick]
        S = ColumnSet(tuple(sorted(doubles + list(pick))), I.m)
        if len(doubles) + len(rest) == 0:
            continue
        T = ColumnSet(tuple(sorted(doubles + rest)), I.m)
        if leq(S, T):
            out.append((S, T))
    return out


def _pair_stream(seed: int, I: ColumnSet, J: ColumnSet) -> SeedStream:
    return SeedStream(seed).child("straighten", I.m, I.entries, J.entries)


def _sort_terms(terms: Iterable[Term], m: int) -> tuple[Term, ...]:
    N = default_base(m)
    return tuple(sorted(terms, key=lambda t: (weight(t.S, N) + weight(t.T, N), t.S.entries, t.T.entries)))


def straighten_pair(I: ColumnSet, J: ColumnSet, family: LatticeFamily | None = None,
                    seed: int = 0, check: bool = True) -> StraighteningExpansion:
    """Express delta_I delta_J in standard monomials.

    With ``family`` given, the structural properties of the expansion inside
    that lattice are asserted (InconsistencyError on failure).
    """
    if I.m != J.m:
        raise PreconditionError(f"ambient mismatch between {I!r} and {J!r}")
    if family is not None:
        family.require(I)
        family.require(J)
    if len(I) < len(J):
        I, J = J, I
    if leq(I, J):
        return StraighteningExpansion(I, J, (Term(Fraction(1), I, J),))
    if leq(J, I):
        return StraighteningExpansion(I, J, (Term(Fraction(1), J, I),))

    cands = standard_candidates(I, J)
    cols = len(I)
    stream = _pair_stream(seed, I, J)
    needed = {I, J} | {C for pair in cands for C in pair}

    solution = None
    for attempt in range(RETRY_BUDGET + 1):
        rng = stream.child("solve", attempt).rng()
        A, b = [], []
        for _ in range(len(cands) + EXTRA_POINTS):
            Q = random_matrix(I.m, cols, rng)
            d = {C: minor_eval(C, Q) for C in needed}
            A.append([d[S] * d[T] for S, T in cands])
            b.append(d[I] * d[J])
        solution, consistent = solve_unique(A, b)
        if not consistent:
            raise InconsistencyError(f"delta_{I!r} delta_{J!r} is not in the span of standard pairs")
        if solution is not None:
            break
    if solution is None:
        raise InconsistencyError(f"singular straightening system for {I!r}, {J!r} after {RETRY_BUDGET} retries")

    terms = [Term(c, S, T) for c, (S, T) in zip(solution, cands) if c != 0]
    exp = StraighteningExpansion(I, J, _sort_terms(terms, I.m))
    bad = verify_by_evaluation(exp, stream.child("verify"))
    if bad:
        raise InconsistencyError(f"expansion of {I!r}*{J!r} fails re-evaluation at {bad} points")
    if check and family is not None:
        problems = check_expansion(exp, family)
        if problems:
            raise InconsistencyError("; ".join(problems))
    return exp


def verify_by_evaluation(exp: StraighteningExpansion, stream: SeedStream,
                         points: int = VERIFY_POINTS) -> int:
    """Number of fresh random matrices at which the two sides disagree."""
    rng = stream.rng()
    cols = max(len(exp.I), len(exp.J))
    bad = 0
    for _ in range(points):
        lhs, rhs = exp.evaluate(random_matrix(exp.I.m, cols, rng))
        bad += lhs != rhs
    return bad


def check_expansion(exp: StraighteningExpansion, family: LatticeFamily | None = None,
                    N: int | None = None) -> list[str]:
    """Structural checks on one expansion; returns human-readable violations."""
    I, J = exp.I, exp.J
    m = I.m
    N = default_base(m) if N is None else N
    out = []
    content = Counter(I.entries) + Counter(J.entries)
    if comparable(I, J):
        return out
    lo, hi = meet(I, J), join(I, J)
    base_w = weight(I, N) + weight(J, N)
    base_sums = _entry_sums(I, J)
    coeffs = exp.as_dict()
    if coeffs.get((lo, hi)) != 1:
        out.append(f"leading pair ({lo!r},{hi!r}) has coefficient {coeffs.get((lo, hi), 0)}, not 1")
    if family is not None:
        shape = content_shape([I, J], family.n)
        bound = min(family.n, len(I))
    for t in exp.terms:
        S, T = t.S, t.T
        tag = f"term {t.coeff}*({S!r},{T!r})"
        if Counter(S.entries) + Counter(T.entries) != content:
            out.append(f"{tag}: content changed")
        if not leq(S, T):
            out.append(f"{tag}: not a standard pair")
        if not (leq(S, lo) and leq(hi, T)):
            out.append(f"{tag}: violates S <= I^J and I v J <= T")
        w = weight(S, N) + weight(T, N)
        if (S, T) == (lo, hi):
            if w != base_w:
                out.append(f"{tag}: leading weight {w} differs from {base_w}")
        else:
            if not w > base_w:
                out.append(f"{tag}: weight {w} is not above {base_w}")
            sums = _entry_sums(S, T)
            diff = next((h for h in range(len(sums)) if sums[h] != base_sums[h]), None)
            if diff is None or not sums[diff] > base_sums[diff]:
                out.append(f"{tag}: first differing row sum does not increase")
        if family is not None:
            if not (family.contains(S) and family.contains(T)):
                out.append(f"{tag}: leaves {family}")
            chain = Chain((S, T))
            if shape_of(chain, family.n) != shape:
                out.append(f"{tag}: shape {shape_of(chain, family.n)} differs from {shape}")
            for h in range(1, bound + 1):
                row = [C.entries[h - 1] for C in (S, T) if len(C) >= h]
                if any(e < h for e in row):
                    out.append(f"{tag}: row {h} has an entry below {h}")
                a = sum(1 for e in S.entries if e <= h)
                b = sum(1 for e in T.entries if e <= h)
                if a + b > 2 * h:
                    out.append(f"{tag}: alpha_{h} + beta_{h} = {a + b} > {2 * h}")
    return out


def initial_term(exp: StraighteningExpansion, N: int | None = None) -> Term:
    """The unique minimal-weight term, which must be 1 * (I^J, IvJ)."""
    m = exp.I.m
    N = default_base(m) if N is None else N
    weights = [(weight(t.S, N) + weight(t.T, N), t) for t in exp.terms]
    low = min(w for w, _ in weights)
    best = [t for w, t in weights if w == low]
    if len(best) != 1:
        raise InconsistencyError(f"{len(best)} terms tie for the minimal weight {low}")
    lead = best[0]
    if len(exp.terms) > 1 or not comparable(exp.I, exp.J):
        expected = (meet(exp.I, exp.J), join(exp.I, exp.J))
        if lead.pair != expected or lead.coeff != 1:
            raise InconsistencyError(f"initial term {lead} is not 1*{expected}")
    return lead


def straighten_monomial(cols: Iterable[ColumnSet], family: LatticeFamily | None = None,
                        seed: int = 0) -> list[tuple[Fraction, Chain]]:
    """Rewrite a product of minors as a combination of standard monomials.

    Incomparable pairs are replaced by their quadratic expansions until every
    surviving monomial is a chain.
    """
    cols = sorted(cols, key=ColumnSet.sort_key)
    if not cols:
        return [(Fraction(1), Chain(()))]
    m = cols[0].m
    pending: dict[tuple[ColumnSet, ...], Fraction] = {tuple(cols): Fraction(1)}
    done: dict[tuple[ColumnSet, ...], Fraction] = {}
    cache: dict[tuple[ColumnSet, ColumnSet], StraighteningExpansion] = {}
    steps = 0
    while pending:
        key, coeff = pending.popitem()
        if coeff == 0:
            continue
        pair = next(((a, b) for a, b in combinations(range(len(key)), 2)
                     if not comparable(key[a], key[b])), None)
        if pair is None:
            done[key] = done.get(key, Fraction(0)) + coeff
            continue
        a, b = pair
        steps += 1
        if steps > 10**6:
            raise InconsistencyError("straightening did not terminate")
        I, J = key[a], key[b]
        if (I, J) not in cache:
            cache[(I, J)] = straighten_pair(I, J, family, seed=seed)
        rest = [c for i, c in enumerate(key) if i not in (a, b)]
        for t in cache[(I, J)].terms:
            new = tuple(sorted(rest + [t.S, t.T], key=ColumnSet.sort_key))
            pending[new] = pending.get(new, Fraction(0)) + coeff * t.coeff
    N = default_base(m)
    out = [(c, Chain(k)) for k, c in done.items() if c != 0]
    out.sort(key=lambda ct: (chain_weight(ct[1], N), [c.sort_key() for c in ct[1]]))
    if family is not None:
        shapes = {shape_of(ch, family.n) for _, ch in out}
        if len(shapes) > 1:
            raise InconsistencyError(f"straightened terms have different shapes {shapes}")
    return out


# ---------------------------------------------------------------- Hibi normal form

def hibi_normal_form(cols: Iterable[ColumnSet], family: LatticeFamily) -> Chain:
    """The chain with the same pattern sum as the monomial z_{I_1} z_{I_2} ..."""
    poset = GTPoset.of_family(family)
    total = zero_pattern(poset)
    for I in cols:
        total = add(total, characteristic(family.require(I), poset))
    return Chain(decompose_levels(total))


def monomial_pattern(cols: Iterable[ColumnSet], family: LatticeFamily):
    poset = GTPoset.of_family(family)
    total = zero_pattern(poset)
    for I in cols:
        total = add(total, characteristic(I, poset))
    return total


# ---------------------------------------------------------------- degeneration report

@dataclass
class DegenerationReport:
    family: LatticeFamily
    base: int
    mode: str
    seed: int
    pairs_checked: int = 0
    comparable_skipped: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        F = self.family
        return {
            "family": {"m": F.m, "k": F.k, "n": F.n},
            "base": self.base,
            "mode": self.mode,
            "seed": self.seed,
            "pairs_checked": self.pairs_checked,
            "comparable_skipped": self.comparable_skipped,
            "violations": self.violations,
        }

    def render_text(self) -> str:
        lines = [f"{self.family}, base N={self.base}, mode={self.mode}",
                 f"checked {self.pairs_checked} pairs, {len(self.violations)} violations"]
        if self.comparable_skipped:
            lines.append(f"skipped {self.comparable_skipped} comparable pairs")
        for v in self.violations:
            lines.append(f"  {v['I']} * {v['J']}: {v['reason']}")
        return "\n".join(lines)


def _check_pair(args) -> list[str]:
    I, J, family, N, seed = args
    try:
        exp = straighten_pair(I, J, family, seed=seed, check=False)
        problems = check_expansion(exp, family, N)
        initial_term(exp, N)
    except InconsistencyError as exc:
        return [str(exc)]
    return problems


def verify_degeneration(family: LatticeFamily, trials: int | None = None, seed: int = 0,
                        base: int | None = None, jobs: int = 1) -> DegenerationReport:
    """Check the weight structure of straightening on incomparable pairs.

    ``trials=None`` checks every unordered pair exhaustively; otherwise that
    many pairs are sampled.
    """
    N = default_base(family.m) if base is None else base
    if N <= 2 * family.m:
        raise PreconditionError(f"weight base must exceed 2m = {2 * family.m}, got {N}")
    elems = family.elements
    if trials is None:
        pairs = list(combinations(elems, 2))
        mode = "exhaustive"
    else:
        if trials < 0:
            raise PreconditionError("trials must be nonnegative")
        rng = SeedStream(seed).child("degeneration-trials").rng()
        pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(trials)]
        mode = f"trials={trials}"
    report = DegenerationReport(family, N, mode, seed)
    work = []
    for I, J in pairs:
        if comparable(I, J):
            report.comparable_skipped += 1
        else:
            work.append((I, J, family, N, seed))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_pair, work, chunksize=8))
    else:
        results = [_check_pair(w) for w in work]
    for (I, J, *_), problems in zip(work, results):
        report.pairs_checked += 1
        for p in problems:
            report.violations.append({"I": I.to_json(), "J": J.to_json(), "reason": p})
    return report
