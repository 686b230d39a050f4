"""Order polynomials, their rational generating functions, runs and markings.

Everything is exact: polynomials are integer coefficient lists, series
coefficients come from long division of integer polynomials, and counts
are plain integers.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections import Counter
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .dag import Dag, ToricClass
from .enriched import delta_dag, delta_toric, is_enriched
from .permstat import Word, check_word, cpeak_set, peak_set, rotations

Poly = list[int]


def poly_mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a: Poly, k: int) -> Poly:
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


@dataclasses.dataclass
class RationalSeries:
    """num/den with den(0) = ±1; expansion by exact long division."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if not self.den or self.den[0] not in (1, -1):
            raise ValueError("denominator must have constant term ±1")

    def coefficients(self, order: int) -> list[int]:
        """Series coefficients c_0 .. c_order."""
        out = []
        for j in range(order + 1):
            acc = self.num[j] if j < len(self.num) else 0
            for i in range(1, min(j, len(self.den) - 1) + 1):
                acc -= self.den[i] * out[j - i]
            out.append(acc * self.den[0])
        return out


def multiset_coeff(a: int, k: int) -> int:
    """Number of k-element multisets on an a-element set."""
    return comb(a + k - 1, k) if k >= 0 else 0


def _binom(a: int, k: int) -> int:
    """Binomial coefficient, zero outside the usual range.

    The cyclic closed formula produces a -1 upper argument exactly when
    its prefactor n - 2 cpk vanishes, so zero is a safe value there.
    """
    return comb(a, k) if a >= 0 and k >= 0 else 0


def omega(w: Sequence[int], m: int) -> int:
    """Count of enriched partitions of the total order w with values <= m.

    Closed form 2^{2pk+1} * sum over k of ((n+1 multichoose k)) *
    C(n - 2pk - 1, m - 1 - pk - k).
    """
    n = len(w)
    pk = len(peak_set(w))
    total = 0
    for k in range(0, m - pk):
        total += multiset_coeff(n + 1, k) * comb(n - 2 * pk - 1, m - 1 - pk - k)
    return 2 ** (2 * pk + 1) * total


def omega_dag(d: Dag, m: int) -> int:
    """Order polynomial of a DAG via its weight enumerator."""
    return delta_dag(d).specialize_ones(m)


def omega_cyc_formula(n: int, cpk: int, m: int) -> int:
    """Closed formula for the toric order polynomial of a cyclic class."""
    first = sum(
        multiset_coeff(n + 1, k) * _binom(n - 2 * cpk - 1, m - 1 - cpk - k)
        for k in range(0, m - cpk)
    )
    second = sum(
        multiset_coeff(n + 1, k) * _binom(n - 2 * cpk + 1, m - cpk - k)
        for k in range(0, m - cpk + 1)
    )
    return (n - 2 * cpk) * 2 ** (2 * cpk + 1) * first + cpk * 2 ** (2 * cpk) * second


def omega_cyc(w: Sequence[int], m: int) -> int:
    """Toric order polynomial of the cyclic class of w.

    Evaluates the closed formula and cross-checks it against the sum of
    linear order polynomials over all rotations.
    """
    word = check_word(w)
    n = len(word)
    value = omega_cyc_formula(n, len(cpeak_set(word)), m)
    by_rotations = sum(omega(v, m) for v in rotations(word))
    if value != by_rotations:
        raise AssertionError(
            f"closed formula {value} disagrees with rotation sum {by_rotations}"
        )
    return value


def omega_toric(tc: ToricClass, m: int) -> int:
    """Toric order polynomial of a toric class, via its enumerator."""
    return delta_toric(tc).specialize_ones(m)


def gf_omega(w: Sequence[int], order: int) -> list[int]:
    """Series coefficients of the rational generating function of omega.

    2^{2pk+1} t^{pk+1} (1+t)^{n-2pk-1} / (1-t)^{n+1}.
    """
    n = len(w)
    pk = len(peak_set(w))
    num = poly_mul(
        [0] * (pk + 1) + [2 ** (2 * pk + 1)],
        poly_pow([1, 1], n - 2 * pk - 1),
    )
    den = poly_pow([1, -1], n + 1)
    return RationalSeries(num, den).coefficients(order)


def gf_omega_cyc(w: Sequence[int], order: int) -> list[int]:
    """Series coefficients of the cyclic generating function.

    (4t/(1+t)^2)^cpk ((1+t)/(1-t))^(n-1) (cpk + 2nt/(1-t)^2), cleared to
    an integer numerator and denominator.
    """
    n = len(w)
    cpk = len(cpeak_set(w))
    inner = [cpk, 2 * n - 2 * cpk, cpk]  # cpk*(1-t)^2 + 2nt
    num = poly_mul([0] * cpk + [4 ** cpk], inner)
    extra = n - 1 - 2 * cpk
    den = poly_pow([1, -1], n + 1)
    if extra >= 0:
        num = poly_mul(num, poly_pow([1, 1], extra))
    else:
        den = poly_mul(den, poly_pow([1, 1], -extra))
    return RationalSeries(num, den).coefficients(order)


@dataclasses.dataclass(frozen=True)
class RunDecomposition:
    """Alternating factorization of the sentinel extension of a word.

    Index 0 and n+1 carry the sentinel, a value above every label. Odd
    runs decrease, even runs increase; markable positions are those whose
    successor index sits in the same run.
    """

    runs: tuple[tuple[int, ...], ...]
    index_sets: tuple[frozenset[int], ...]
    markable: frozenset[int]


def runs(w: Sequence[int]) -> RunDecomposition:
    """Greedy alternating decreasing/increasing factorization."""
    word = check_word(w)
    if not word:
        raise ValueError("need a nonempty word")
    sentinel = max(word) + 1
    seq = (sentinel,) + word + (sentinel,)
    n = len(word)
    factors: list[tuple[int, ...]] = []
    index_sets: list[frozenset[int]] = []
    pos = 0
    decreasing = True
    while pos < len(seq):
        end = pos + 1
        while end < len(seq) and (
            seq[end] < seq[end - 1] if decreasing else seq[end] > seq[end - 1]
        ):
            end += 1
        factors.append(seq[pos:end])
        index_sets.append(frozenset(range(pos, end)))
        pos = end
        decreasing = not decreasing
    markable = frozenset(
        i
        for i in range(1, n + 1)
        if any(i in I and i + 1 in I for I in index_sets)
    )
    return RunDecomposition(tuple(factors), tuple(index_sets), markable)


@dataclasses.dataclass(frozen=True)
class Marking:
    """Bars in gaps 0..n (with multiplicity) and marked columns of w."""

    w: Word
    bars: tuple[int, ...]
    marked: frozenset[int]

    def __post_init__(self):
        n = len(self.w)
        if any(not 0 <= g <= n for g in self.bars):
            raise ValueError("bar outside the gap range")


def enumerate_markings(w: Sequence[int], m: int) -> list[Marking]:
    """All (w, m)-markings: b bars plus d marks with b + d = m - 1 - pk."""
    word = check_word(w)
    n = len(word)
    pk = len(peak_set(word))
    budget = m - 1 - pk
    if budget < 0:
        return []
    markable = sorted(runs(word).markable)
    out = []
    for d in range(0, min(budget, len(markable)) + 1):
        b = budget - d
        for marked in itertools.combinations(markable, d):
            for bars in itertools.combinations_with_replacement(range(n + 1), b):
                out.append(Marking(word, bars, frozenset(marked)))
    out.sort(key=lambda mk: (mk.bars, sorted(mk.marked)))
    return out


def partition_to_marking(f: Mapping[int, int], w: Sequence[int], m: int) -> Marking:
    """The marking associated to an enriched partition of w with |f| <= m.

    Marks column k when its sign disagrees with the trend of its run;
    bar counts come from the prefix formula |f(w_k)| - ceil(i/2) - delta_k.
    """
    word = check_word(w)
    n = len(word)
    if not is_enriched(f, Dag.from_word(word)):
        raise ValueError("f is not an enriched partition of w")
    if any(abs(v) > m for v in f.values()):
        raise ValueError(f"absolute values exceed {m}")
    decomp = runs(word)
    run_of = {}
    for idx, I in enumerate(decomp.index_sets, start=1):
        for i in I:
            run_of[i] = idx
    pk = len(peak_set(word))
    budget = m - 1 - pk

    delta, gamma = {}, {}
    for k in range(1, n + 1):
        i = run_of[k]
        val = f[word[k - 1]]
        delta[k] = 1 if i % 2 == 0 and val < 0 else 0
        gamma[k] = 1 if i % 2 == 1 and val > 0 else 0
    marked = frozenset(
        k for k in decomp.markable if delta[k] + gamma[k] == 1
    )

    def prefix_total(k: int) -> int:
        i = run_of[k]
        return abs(f[word[k - 1]]) - (i + 1) // 2 - delta[k]

    bars_before = []
    marks_so_far = 0
    prev_total = None
    for k in range(1, n + 1):
        total = prefix_total(k)
        if prev_total is not None and total < prev_total:
            raise ValueError("prefix counts are not monotone")
        bars = total - marks_so_far
        bars_before.append(bars)
        if k in marked:
            marks_so_far += 1
        prev_total = total
    bars_list = []
    prev = 0
    for g, cur in enumerate(bars_before):
        bars_list.extend([g] * (cur - prev))
        prev = cur
    trailing = budget - len(marked) - prev
    if trailing < 0:
        raise ValueError("negative trailing bar count")
    bars_list.extend([n] * trailing)
    return Marking(word, tuple(bars_list), marked)


def marking_fibers(w: Sequence[int], m: int) -> Counter:
    """Sizes of the fibers of partition_to_marking over all markings."""
    from .enriched import enumerate_enriched_word

    out: Counter = Counter()
    for f in enumerate_enriched_word(w, m):
        out[partition_to_marking(f, w, m)] += 1
    return out


def interpolate(points: Sequence[tuple[int, int]], x: int) -> Fraction:
    """Lagrange interpolation at integer nodes, exact rationals."""
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total
