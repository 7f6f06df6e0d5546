"""Quantitative structure of the weak-identity ideal.

Multilinear consequence spans, evaluation kernels and quotient dimensions,
the insertion coefficients for pulling a variable out of an alternating sum,
commutator and standard-polynomial factorizations, and partition
combinatorics (hook lengths, involutions, diagram containment).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, Sequence

import numpy as np

from .clifford import word_sign_vector
from .freealg import (
    NcPoly,
    SQUARE_COMMUTATOR,
    Word,
    multidegree,
    multilinear_words,
    multilinearize,
    standard_poly,
    substitute_linear,
    word_key,
)
from .linalg import exact_rank, solve_exact
from .pairs import CliffordPair, MatrixPair, PairTarget, is_weak_identity, substitution_basis

Partition = tuple[int, ...]

#: Deterministic prime specializations of the form parameters, used to
#: cross-validate generic ranks.
DEFAULT_SEEDS = (
    (2, 3, 5, 7, 11, 13, 17, 19),
    (23, 29, 31, 37, 41, 43, 47, 53),
)

RANK_DEGREE_CAP = 6  # n! x columns exact elimination; 7 behind allow_degree_7


# ---------------------------------------------------------------------------
# partition combinatorics


def partitions(n: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions of n (optionally with at most max_rows rows), reverse-lex."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_rows is not None and len(prefix) == max_rows:
            return
        for p in range(min(max_part, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def _check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if any(p < 1 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition (weakly decreasing positive parts)")
    return lam


def conjugate_partition(lam: Sequence[int]) -> Partition:
    lam = _check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_dim(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of the shape, by the hook length formula."""
    lam = _check_partition(lam)
    n = sum(lam)
    conj = conjugate_partition(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    assert factorial(n) % hooks == 0
    return factorial(n) // hooks


def involutions(n: int) -> int:
    """Number of self-inverse permutations of n letters, by brute force (n <= 8)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 8:
        raise ValueError("brute-force involution count is capped at n = 8")
    count = 0
    for perm in itertools.permutations(range(n)):
        if all(perm[perm[i]] == i for i in range(n)):
            count += 1
    return count


def diagram_contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether the diagram of lam fits inside the diagram of mu, row by row."""
    lam = _check_partition(lam)
    mu = _check_partition(mu)
    return len(lam) <= len(mu) and all(l <= m for l, m in zip(lam, mu))


def minimal_diagrams(diagrams: Iterable[Sequence[int]]) -> list[Partition]:
    """The inclusion-minimal elements of a finite set of partitions."""
    pool = {_check_partition(p) for p in diagrams}
    return sorted(
        m
        for m in pool
        if not any(p != m and diagram_contains(p, m) for p in pool)
    )


# ---------------------------------------------------------------------------
# insertion coefficients and defect polynomials


@dataclass(frozen=True)
class InsertionCoeffs:
    """Coefficients for moving an inserted variable out of the alternating sum:

    sum(sign) x_{s(1)}..x_{s(k)} y x_{s(k+1)}..x_{s(n)}
        = alpha * y * S_n + beta * S_n * y   (modulo the identity ideal)
    """

    n: int
    k: int
    alpha: Fraction
    beta: Fraction


@lru_cache(maxsize=None)
def _insertion_ab(n: int, k: int) -> tuple[Fraction, Fraction]:
    if k == 1:
        return Fraction(-(n - 1), n), Fraction((-1) ** (n - 1), n)
    a1, b1 = _insertion_ab(n, 1)
    ap, bp = _insertion_ab(n - 1, k - 1)
    return ap * a1, ap * b1 + bp


def lemma2_coeffs(n: int, k: int) -> InsertionCoeffs:
    """Insertion coefficients alpha(n,k), beta(n,k), with the symmetry
    alpha(n,k) = beta(n,n-k) verified on the computed values."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= {n - 1}, got {k}")
    alpha, beta = _insertion_ab(n, k)
    alpha_m, beta_m = _insertion_ab(n, n - k)
    if alpha != beta_m or beta != alpha_m:
        raise ArithmeticError(
            f"insertion-coefficient symmetry violated at (n,k)=({n},{k}): "
            f"({alpha},{beta}) vs mirrored ({beta_m},{alpha_m})"
        )
    return InsertionCoeffs(n=n, k=k, alpha=alpha, beta=beta)


def lemma2_coeffs_by_evaluation(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Solve for the insertion coefficients directly from evaluations.

    Independent of the recursion in lemma2_coeffs; feasible for small n.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError("need n >= 2 and 1 <= k <= n-1")
    lhs = _insertion_lhs(n, k)
    y = NcPoly.gen(n + 1)
    sn = standard_poly(n)
    sol = _solve_modulo_identities(lhs, [y * sn, sn * y])
    if sol is None:
        raise ArithmeticError("insertion identity has no solution; recursion disagrees")
    return sol[0], sol[1]


def _insertion_lhs(n: int, k: int) -> NcPoly:
    y = n + 1
    terms: dict[Word, Fraction] = {}
    for word, sign in standard_poly(n).terms.items():
        w = word[:k] + (y,) + word[k:]
        terms[w] = sign
    return NcPoly(terms)


def eq5_defect(n: int, k: int) -> NcPoly:
    """Alternating sum with y inserted after position k, minus its two-sided
    normal form alpha*y*S_n + beta*S_n*y.  A weak identity of every Clifford pair."""
    co = lemma2_coeffs(n, k)
    y = NcPoly.gen(n + 1)
    sn = standard_poly(n)
    return _insertion_lhs(n, k) - (co.alpha * (y * sn) + co.beta * (sn * y))


def eq6_defect(n: int, i: int) -> NcPoly:
    """x_i * S_n - (-1)^(n-1) * S_n * x_i; a weak identity of every Clifford pair."""
    if not 1 <= i <= n:
        raise ValueError(f"i must satisfy 1 <= i <= {n}, got {i}")
    xi = NcPoly.gen(i)
    sn = standard_poly(n)
    return xi * sn - Fraction((-1) ** (n - 1)) * (sn * xi)


# ---------------------------------------------------------------------------
# commutator decomposition of x1 y1..yn x2 - x2 y1..yn x1


def _skew_decomp(ys: tuple[int, ...]) -> list[tuple[Fraction, Word, Word]]:
    """Represent x1 Y x2 - x2 Y x1 as sum of c * A [x1,x2] B, modulo identities.

    Base cases: the empty interleaving is the commutator itself; a single
    inserted variable y gives -(1/2)([x1,x2] y + y [x1,x2]).  Longer
    interleavings reduce by pulling the first two variables outward.
    """
    if not ys:
        return [(Fraction(1), (), ())]
    if len(ys) == 1:
        y = ys[0]
        return [(Fraction(-1, 2), (), (y,)), (Fraction(-1, 2), (y,), ())]
    y1, y2 = ys[0], ys[1]
    rest = ys[2:]
    out: list[tuple[Fraction, Word, Word]] = []
    for c, a, b in _skew_decomp((y2,) + rest):
        out.append((-c, (y1,) + a, b))
    for c, a, b in _skew_decomp((y1,) + rest):
        out.append((c, (y2,) + a, b))
    for c, a, b in _skew_decomp(rest):
        out.append((c, (y2, y1) + a, b))
    return out


def lemma1_lhs(n: int) -> NcPoly:
    """x1 y1..yn x2 - x2 y1..yn x1 with y_j the generator of index j+2."""
    ys = tuple(range(3, n + 3))
    return NcPoly({(1,) + ys + (2,): 1, (2,) + ys + (1,): -1})


def lemma1_decompose(n: int) -> list[tuple[NcPoly, NcPoly]]:
    """Pairs (A_i, B_i), A_i of positive degree in the y's, such that
    x1 y1..yn x2 - x2 y1..yn x1 - sum A_i [x1,x2] B_i is a weak identity."""
    if n < 2:
        raise ValueError("n must be at least 2")
    ys = tuple(range(3, n + 3))
    groups: dict[Word, dict[Word, Fraction]] = {}
    for c, a, b in _skew_decomp(ys):
        bucket = groups.setdefault(b, {})
        bucket[a] = bucket.get(a, Fraction(0)) + c
    pairs = []
    for b in sorted(groups, key=word_key):
        a_poly = NcPoly(groups[b])
        if a_poly.is_zero():
            continue
        if any(len(w) == 0 for w in a_poly.terms):
            raise ArithmeticError("left factor of zero degree produced")
        pairs.append((a_poly, NcPoly.monomial(b)))
    return pairs


def lemma1_defect(n: int) -> NcPoly:
    comm = NcPoly.gen(1) * NcPoly.gen(2) - NcPoly.gen(2) * NcPoly.gen(1)
    total = NcPoly.zero()
    for a, b in lemma1_decompose(n):
        total = total + a * comm * b
    return lemma1_lhs(n) - total


# ---------------------------------------------------------------------------
# rank reports: consequence spans and evaluation kernels


@dataclass(frozen=True)
class RankReport:
    """Exact rank data for a degree-n multilinear computation.

    rows x cols is the assembled matrix shape (before deduplication);
    kernel_dim = n! - rank and quotient_dim = rank always hold.
    """

    degree: int
    target: str
    rows: int
    cols: int
    rank: int
    kernel_dim: int
    quotient_dim: int
    seeds: tuple[tuple[int, ...], ...] = ()


def _check_rank_degree(n: int, allow_degree_7: bool):
    if n < 1:
        raise ValueError("degree must be positive")
    cap = 7 if allow_degree_7 else RANK_DEGREE_CAP
    if n > cap:
        raise ValueError(
            f"degree {n} above rank cap {cap}; pass allow_degree_7=True for n = 7"
        )


def _span_elements(n: int, generators: Sequence[NcPoly]) -> list[NcPoly]:
    """Spanning set of the degree-n multilinear slice of the GL-ideal.

    For each generator: multilinearize, substitute every injective renaming
    of its variables into {1..n}, and surround with every ordered split of
    the remaining letters into a left and a right word.
    """
    elems: list[NcPoly] = []
    for g in generators:
        gm = multilinearize(g)
        letters = sorted(gm.generators())
        d = len(letters)
        if d > n:
            continue
        for inj in itertools.permutations(range(1, n + 1), d):
            inst = substitute_linear(
                gm, {letters[j]: NcPoly.gen(inj[j]) for j in range(d)}
            )
            rest = sorted(set(range(1, n + 1)) - set(inj))
            for perm in itertools.permutations(rest):
                for cut in range(len(rest) + 1):
                    left = NcPoly.monomial(perm[:cut])
                    right = NcPoly.monomial(perm[cut:])
                    elems.append(left * inst * right)
    return elems


def _dedupe_vectors(
    elems: Sequence[NcPoly], words: Sequence[Word]
) -> list[list[Fraction]]:
    """Coefficient vectors of the elements, deduplicated up to scaling."""
    seen: set[tuple] = set()
    vecs: list[list[Fraction]] = []
    for p in elems:
        vec = [p.coeff(w) for w in words]
        first = next((c for c in vec if c), None)
        if first is None:
            continue
        key = tuple(c / first for c in vec)
        if key not in seen:
            seen.add(key)
            vecs.append(vec)
    return vecs


def consequence_span_dim(
    n: int, generators: Sequence[NcPoly], allow_degree_7: bool = False
) -> RankReport:
    """Exact dimension of the degree-n multilinear consequence span."""
    _check_rank_degree(n, allow_degree_7)
    for g in generators:
        multidegree(g)  # raises if not multihomogeneous
    words = multilinear_words(n)
    vecs = _dedupe_vectors(_span_elements(n, generators), words)
    rank = exact_rank(vecs)
    nfact = len(words)
    return RankReport(
        degree=n,
        target=f"consequence span of {len(generators)} generator(s)",
        rows=len(vecs),
        cols=nfact,
        rank=rank,
        kernel_dim=nfact - rank,
        quotient_dim=rank,
    )


def in_consequence_span(f: NcPoly, n: int, generators: Sequence[NcPoly]) -> bool:
    """Whether the multilinear degree-n polynomial f lies in the span of the
    degree-n multilinear consequences of the generators."""
    words = multilinear_words(n)
    if f.is_zero():
        return True
    md = multidegree(f)
    if sorted(md) != list(range(1, n + 1)) or any(d != 1 for d in md.values()):
        raise ValueError("f must be multilinear in x1..xn")
    vecs = _dedupe_vectors(_span_elements(n, generators), words)
    base = exact_rank(vecs)
    extended = exact_rank(vecs + [[f.coeff(w) for w in words]])
    return extended == base


def _clifford_sign_matrix(n: int, k: int) -> np.ndarray:
    """Rows: multilinear words; columns: basis tuples; entries: signs (+-1)."""
    words = multilinear_words(n)
    return np.stack([word_sign_vector(w, k) for w in words])


def _tuple_q_values(n: int, k: int, primes: Sequence[int]) -> list[int]:
    """Contraction monomial of each basis tuple, specialized at the primes."""
    if len(primes) < k:
        raise ValueError(f"seed list must provide at least {k} primes")
    vals = []
    for t in itertools.product(range(k), repeat=n):
        counts = [0] * k
        for i in t:
            counts[i] += 1
        v = 1
        for i, c in enumerate(counts):
            v *= primes[i] ** (c // 2)
        vals.append(v)
    return vals


def evaluation_kernel(
    n: int,
    target: PairTarget,
    seeds: tuple[tuple[int, ...], ...] = (),
    allow_degree_7: bool = False,
) -> RankReport:
    """Rank data of the degree-n multilinear evaluation map of the target.

    The kernel is the space of multilinear weak identities of degree n; the
    quotient dimension equals the rank.  For Clifford targets every column
    factors as a nonzero parameter monomial times an integer sign vector, so
    the generic rank is computed exactly on the sign vectors; any requested
    prime specializations (seeds) are computed independently and must agree.
    """
    _check_rank_degree(n, allow_degree_7)
    words = multilinear_words(n)
    nfact = len(words)
    if isinstance(target, CliffordPair):
        k = target.k
        m = _clifford_sign_matrix(n, k)
        cols = m.T.astype(np.int64)
        norm = cols * cols[:, :1]  # scale out the +-1 of the first word
        uniq = np.unique(norm, axis=0)
        rank = exact_rank(uniq.tolist())
        for primes in seeds:
            qvals = np.array(_tuple_q_values(n, k, primes), dtype=np.int64)
            scaled = np.unique(cols * qvals[:, None], axis=0)
            srank = exact_rank(scaled.tolist())
            if srank != rank:
                raise ArithmeticError(
                    f"specialized rank {srank} at seeds {primes} disagrees with "
                    f"generic rank {rank}"
                )
        desc = f"clifford k={k}" + (" (symbolic q)" if target.form.values is None else "")
        return RankReport(
            degree=n,
            target=desc,
            rows=nfact,
            cols=k ** n,
            rank=rank,
            kernel_dim=nfact - rank,
            quotient_dim=rank,
            seeds=tuple(tuple(s) for s in seeds),
        )
    if isinstance(target, MatrixPair):
        from .pairs import MAT_I

        basis = [elt for _, elt in substitution_basis(target)]
        seq_prod: dict[tuple[int, ...], object] = {}
        for seq in itertools.product(range(3), repeat=n):
            prod = MAT_I
            for i in seq:
                prod = prod * basis[i]
            seq_prod[seq] = prod
        seen: set[tuple] = set()
        vecs: list[tuple[int, ...]] = []
        for t in itertools.product(range(3), repeat=n):
            mats = [seq_prod[tuple(t[g - 1] for g in w)] for w in words]
            for pos in range(4):
                vec = tuple(int(m.entries()[pos]) for m in mats)
                if any(vec) and vec not in seen:
                    seen.add(vec)
                    vecs.append(vec)
        rank = exact_rank(vecs)
        return RankReport(
            degree=n,
            target="m2 (traceless substitution space)",
            rows=nfact,
            cols=4 * 3 ** n,
            rank=rank,
            kernel_dim=nfact - rank,
            quotient_dim=rank,
        )
    raise TypeError(f"unknown pair target {target!r}")


def _span_contained_in_kernel(
    vecs: Sequence[Sequence[Fraction]], n: int, k: int
) -> bool:
    """Exact check that every span vector evaluates to zero at all basis tuples."""
    if not vecs:
        return True
    m = _clifford_sign_matrix(n, k).astype(np.int64)
    rows = []
    for vec in vecs:
        den = lcm(*(Fraction(c).denominator for c in vec))
        rows.append([int(Fraction(c) * den) for c in vec])
    s = np.array(rows, dtype=np.int64)
    return not np.any(s @ m)


@dataclass(frozen=True)
class SpanKernelReport:
    """Result of comparing a consequence span against an evaluation kernel."""

    ok: bool
    degree: int
    span: RankReport
    kernel: RankReport
    containment_ok: bool
    predicted_quotient: int | None = None


def theorem1_check(
    n: int,
    seeds: tuple[tuple[int, ...], ...] = (),
    allow_degree_7: bool = False,
) -> SpanKernelReport:
    """Check that the degree-n multilinear weak identities of the generic
    Clifford pair (k = n) are exactly the consequences of [x1^2, x2]."""
    if n < 3:
        raise ValueError("the generator has degree 3; need n >= 3")
    _check_rank_degree(n, allow_degree_7)
    words = multilinear_words(n)
    vecs = _dedupe_vectors(_span_elements(n, [SQUARE_COMMUTATOR]), words)
    rank = exact_rank(vecs)
    nfact = len(words)
    span = RankReport(
        degree=n,
        target="consequence span of [x1^2,x2]",
        rows=len(vecs),
        cols=nfact,
        rank=rank,
        kernel_dim=nfact - rank,
        quotient_dim=rank,
    )
    kernel = evaluation_kernel(
        n, CliffordPair.symbolic(n), seeds=seeds, allow_degree_7=allow_degree_7
    )
    containment = _span_contained_in_kernel(vecs, n, n)
    ok = span.rank == kernel.kernel_dim and containment
    return SpanKernelReport(
        ok=ok,
        degree=n,
        span=span,
        kernel=kernel,
        containment_ok=containment,
        predicted_quotient=involutions(n) if n <= 8 else None,
    )


def corollary1_check(
    n: int,
    k: int,
    seeds: tuple[tuple[int, ...], ...] = (),
    allow_degree_7: bool = False,
) -> SpanKernelReport:
    """Check that the degree-n multilinear weak identities of the generic
    k-dimensional Clifford pair are spanned by the consequences of
    [x1^2, x2] together with the standard polynomial S_{k+1}."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_rank_degree(n, allow_degree_7)
    generators = [SQUARE_COMMUTATOR, standard_poly(k + 1)]
    words = multilinear_words(n)
    vecs = _dedupe_vectors(_span_elements(n, generators), words)
    rank = exact_rank(vecs)
    nfact = len(words)
    span = RankReport(
        degree=n,
        target=f"consequence span of [x1^2,x2] and S_{k + 1}",
        rows=len(vecs),
        cols=nfact,
        rank=rank,
        kernel_dim=nfact - rank,
        quotient_dim=rank,
    )
    kernel = evaluation_kernel(
        n, CliffordPair.symbolic(k), seeds=seeds, allow_degree_7=allow_degree_7
    )
    containment = _span_contained_in_kernel(vecs, n, k)
    ok = span.rank == kernel.kernel_dim and containment
    predicted = sum(hook_dim(p) for p in partitions(n, max_rows=k))
    return SpanKernelReport(
        ok=ok,
        degree=n,
        span=span,
        kernel=kernel,
        containment_ok=containment,
        predicted_quotient=predicted,
    )


# ---------------------------------------------------------------------------
# factoring alternating sums through the standard polynomial


@dataclass
class StandardFactorization:
    """Decomposition of sum(sign) x_{s(1)} Y_1 x_{s(2)} ... Y_{n-1} x_{s(n)}.

    For interleavings in disjoint y-variables the output is a list of
    (left, right) factor pairs around S_n; for interleavings in x_1..x_n it
    is a single right factor S_n * D.  Either way the defect is verified to
    be a weak identity of the generic Clifford pair.
    """

    n: int
    ys: tuple[Word, ...]
    variant: str  # "two-sided" or "right"
    pairs: list[tuple[NcPoly, NcPoly]] | None = None
    right_factor: NcPoly | None = None
    verified: bool = field(default=False)


def _distinct_words(multiset: Sequence[int]) -> list[Word]:
    return sorted(set(itertools.permutations(multiset)))


def _sub_multisets(multiset: Sequence[int]) -> list[tuple[int, ...]]:
    values = sorted(set(multiset))
    counts = [multiset.count(v) for v in values]
    subs = []
    for choice in itertools.product(*(range(c + 1) for c in counts)):
        sub = tuple(
            v for v, c in zip(values, choice) for _ in range(c)
        )
        subs.append(sub)
    return subs


def _multiset_difference(multiset: Sequence[int], sub: Sequence[int]) -> tuple[int, ...]:
    pool = list(multiset)
    for v in sub:
        pool.remove(v)
    return tuple(pool)


def interleaved_alternating_sum(n: int, ys: Sequence[Word]) -> NcPoly:
    """sum over permutations s of sign(s) x_{s(1)} Y_1 x_{s(2)} ... Y_{n-1} x_{s(n)}."""
    if len(ys) != n - 1:
        raise ValueError(f"need exactly {n - 1} interleaved monomials, got {len(ys)}")
    terms: dict[Word, Fraction] = {}
    for perm, sign in standard_poly(n).terms.items():
        w: Word = (perm[0],)
        for j, y in enumerate(ys):
            w = w + tuple(y) + (perm[j + 1],)
        terms[w] = terms.get(w, Fraction(0)) + sign
    return NcPoly(terms)


def factor_through_standard(
    n: int, ys: Sequence[Sequence[int]], variant: str | None = None
) -> StandardFactorization:
    """Factor the interleaved alternating sum through S_n, modulo identities.

    The variant is inferred from the interleaved letters: letters inside
    {1..n} give a single right factor, letters above n give two-sided
    monomial pairs.  Solved as an exact linear system in the multilinear
    quotient; failure to solve raises ``Lemma 3 violated``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    ys = tuple(tuple(y) for y in ys)
    letters = sorted({i for y in ys for i in y})
    if letters and letters[0] >= 1 and letters[-1] <= n:
        inferred = "right"
    elif letters and letters[0] > n:
        inferred = "two-sided"
    elif not letters:
        inferred = variant or "right"
    else:
        raise ValueError(
            f"inconsistent variable usage: interleaved letters {letters} mix the "
            f"x-range 1..{n} with higher indices"
        )
    if variant is not None and variant != inferred and letters:
        raise ValueError(f"interleaved letters force variant {inferred!r}")
    variant = inferred

    lhs = interleaved_alternating_sum(n, ys)
    sn = standard_poly(n)
    multiset = tuple(sorted(i for y in ys for i in y))

    if variant == "right":
        cand_words = _distinct_words(multiset)
        candidates = [sn * NcPoly.monomial(w) for w in cand_words]
        labels = [("", w) for w in cand_words]
    else:
        labels = []
        candidates = []
        for sub in _sub_multisets(multiset):
            comp = _multiset_difference(multiset, sub)
            for d in _distinct_words(sub):
                for e in _distinct_words(comp):
                    labels.append((d, e))
                    candidates.append(
                        NcPoly.monomial(d) * sn * NcPoly.monomial(e)
                    )

    if lhs.is_zero():
        coeffs = [Fraction(0)] * len(candidates)
    else:
        coeffs = _solve_modulo_identities(lhs, candidates)
        if coeffs is None:
            raise ArithmeticError("Lemma 3 violated: no factorization through S_n")

    result = StandardFactorization(n=n, ys=ys, variant=variant)
    if variant == "right":
        result.right_factor = NcPoly(
            {w: c for (_, w), c in zip(labels, coeffs) if c}
        )
    else:
        result.pairs = [
            (NcPoly.monomial(d, c), NcPoly.monomial(e))
            for (d, e), c in zip(labels, coeffs)
            if c
        ]

    defect = lhs
    for cand, c in zip(candidates, coeffs):
        if c:
            defect = defect - c * cand
    total_deg = n + len(multiset)
    if defect.is_zero() or is_weak_identity(defect, CliffordPair.symbolic(total_deg)) is None:
        result.verified = True
    else:
        raise ArithmeticError("factorization defect failed re-evaluation")
    return result


# ---------------------------------------------------------------------------
# exact solving in the multilinear quotient


def _solve_modulo_identities(
    lhs: NcPoly, candidates: Sequence[NcPoly]
) -> list[Fraction] | None:
    """Coefficients c with lhs = sum c_j * candidates_j modulo the weak
    identities of the generic Clifford pair, or None if no solution exists.

    All polynomials must share one multidegree; everything is polarized with
    the same operator and evaluated at all basis tuples of C_N, N the
    polarized degree.  At a fixed tuple all words share the same contraction
    monomial and blade, so each tuple contributes one rational equation.
    """
    md = multidegree(lhs)
    for c in candidates:
        if multidegree(c) != md:
            raise ValueError("candidate multidegree does not match the left-hand side")
    polys = [multilinearize(p) for p in [lhs, *candidates]]
    letters = sorted(polys[0].generators())
    rename = {g: i + 1 for i, g in enumerate(letters)}
    big_n = len(letters)
    vectors = []
    for ml in polys:
        if sorted(ml.generators()) != letters:
            raise AssertionError("polarization produced mismatched variable sets")
        den = lcm(*(c.denominator for c in ml.terms.values()))
        acc = np.zeros(big_n ** big_n, dtype=np.int64)
        for w, c in ml.terms.items():
            rw = tuple(rename[i] for i in w)
            acc += int(c * den) * word_sign_vector(rw, big_n).astype(np.int64)
        vectors.append((acc, den))
    stacked = np.stack([v for v, _ in vectors], axis=1)  # (tuples, 1 + m)
    uniq = np.unique(stacked, axis=0)
    dens = [d for _, d in vectors]
    rows = []
    rhs = []
    for row in uniq.tolist():
        rhs.append(Fraction(row[0], dens[0]))
        rows.append([Fraction(v, d) for v, d in zip(row[1:], dens[1:])])
    return solve_exact(rows, rhs)
