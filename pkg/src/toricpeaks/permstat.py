"""Linear and cyclic permutations on finite label sets, and their statistics.

A permutation is a tuple of distinct positive integers (one-line notation).
Positions are 1-based throughout: statistics live in subsets of [n], [n-1]
or [2, n-1] depending on the statistic. A cyclic permutation is the set of
rotations of a word; we represent the class by its lexicographically least
rotation.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb
from typing import Iterable, Sequence

Word = tuple[int, ...]


def check_word(w: Sequence[int]) -> Word:
    """Validate and normalize a word: distinct, strictly positive labels."""
    word = tuple(w)
    if len(set(word)) != len(word):
        raise ValueError(f"labels must be distinct: {word}")
    if any(x <= 0 for x in word):
        raise ValueError(f"labels must be positive: {word}")
    return word


def des_set(w: Sequence[int]) -> frozenset[int]:
    """Positions i in [n-1] with w_i > w_{i+1}."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def peak_set(w: Sequence[int]) -> frozenset[int]:
    """Positions i in [2, n-1] with w_{i-1} < w_i > w_{i+1}."""
    return frozenset(
        i + 1
        for i in range(1, len(w) - 1)
        if w[i - 1] < w[i] > w[i + 1]
    )


def cdes_set(w: Sequence[int]) -> frozenset[int]:
    """Positions i in [n] with w_i > w_{i+1}, indices modulo n."""
    n = len(w)
    if n <= 1:
        return frozenset()
    return frozenset(i + 1 for i in range(n) if w[i] > w[(i + 1) % n])


def cpeak_set(w: Sequence[int]) -> frozenset[int]:
    """Positions i in [n] with w_{i-1} < w_i > w_{i+1}, indices modulo n."""
    n = len(w)
    if n <= 1:
        return frozenset()
    return frozenset(
        i + 1
        for i in range(n)
        if w[i - 1] < w[i] > w[(i + 1) % n]
    )


def rotations(w: Sequence[int]) -> list[Word]:
    """All n rotations of w, starting from w itself."""
    word = check_word(w)
    if not word:
        raise ValueError("empty permutation has no rotations")
    return [word[i:] + word[:i] for i in range(len(word))]


def canonical_rotation(w: Sequence[int]) -> Word:
    """Lexicographically least rotation; canonical key for the cyclic class."""
    return min(rotations(w))


def cyclic_stat_multiset(w: Sequence[int], stat: str) -> Counter:
    """Multiset of stat values over all rotations of w.

    ``stat`` is ``"cdes"`` or ``"cpeak"``. Keys are frozensets of positions.
    """
    fn = {"cdes": cdes_set, "cpeak": cpeak_set}[stat]
    return Counter(fn(v) for v in rotations(w))


def shifted_stat_multiset(w: Sequence[int], stat: str) -> Counter:
    """The same multiset computed as {{ i + stat(w) : i in [n] }}."""
    from .setcomp import shift_set

    fn = {"cdes": cdes_set, "cpeak": cpeak_set}[stat]
    n = len(w)
    base = fn(w)
    return Counter(shift_set(base, n, i) for i in range(1, n + 1))


def shuffle_set(p: Sequence[int], s: Sequence[int]) -> set[Word]:
    """All interleavings of p and s.  Label sets must be disjoint."""
    p, s = check_word(p), check_word(s)
    if set(p) & set(s):
        raise ValueError(f"label sets overlap: {sorted(set(p) & set(s))}")

    def rec(a: Word, b: Word) -> Iterable[Word]:
        if not a:
            yield b
            return
        if not b:
            yield a
            return
        for tail in rec(a[1:], b):
            yield (a[0],) + tail
        for tail in rec(a, b[1:]):
            yield (b[0],) + tail

    out = set(rec(p, s))
    assert len(out) == comb(len(p) + len(s), len(p))
    return out


def is_peak_set(S: frozenset[int] | set[int], n: int) -> bool:
    """Whether some w in S_n has Pk w = S.

    Fast path: S inside [2, n-1] with no two consecutive elements. The
    predicate is validated against exhaustive search in the test suite.
    """
    S = frozenset(S)
    if not S:
        return n >= 0
    if not S <= frozenset(range(2, n)):
        return False
    return all(i + 1 not in S for i in S)


def is_cyclic_peak_set(S: frozenset[int] | set[int], n: int) -> bool:
    """Whether some w in S_n has cPk w = S.

    Fast path: for n >= 2, S is nonempty, inside [n], with no two
    cyclically adjacent elements. For n <= 1 only the empty set occurs.
    Validated against exhaustive search in the test suite.
    """
    S = frozenset(S)
    if n <= 1:
        return not S
    if not S or not S <= frozenset(range(1, n + 1)):
        return False
    return all((i % n) + 1 not in S for i in S)


def peak_sets(n: int) -> list[frozenset[int]]:
    """All linear peak sets in [n], sorted by (cardinality, elements)."""
    out = [
        frozenset(S)
        for k in range(0, n // 2 + 1)
        for S in itertools.combinations(range(2, n), k)
        if is_peak_set(frozenset(S), n)
    ]
    if n >= 0 and frozenset() not in out:
        out.insert(0, frozenset())
    return sorted(set(out), key=lambda S: (len(S), sorted(S)))


def cyclic_peak_sets(n: int) -> list[frozenset[int]]:
    """Canonical (lex-least shift) cyclic peak sets in [n].

    Sorted first by cardinality, then lexicographically.
    """
    from .setcomp import canonical_subset_class

    if n <= 1:
        return [frozenset()]
    seen = set()
    for k in range(1, n // 2 + 1):
        for S in itertools.combinations(range(1, n + 1), k):
            fs = frozenset(S)
            if is_cyclic_peak_set(fs, n):
                seen.add(canonical_subset_class(fs, n))
    return sorted(seen, key=lambda S: (len(S), sorted(S)))


def peak_witness(S: frozenset[int] | set[int], n: int) -> Word:
    """Lexicographically first w in S_n with Pk w = S."""
    S = frozenset(S)
    for w in itertools.permutations(range(1, n + 1)):
        if peak_set(w) == S:
            return w
    raise ValueError(f"{sorted(S)} is not a peak set in [{n}]")


def cyclic_peak_witness(S: frozenset[int] | set[int], n: int) -> Word:
    """Lexicographically first w in S_n with cPk w = S."""
    S = frozenset(S)
    for w in itertools.permutations(range(1, n + 1)):
        if cpeak_set(w) == S:
            return w
    raise ValueError(f"{sorted(S)} is not a cyclic peak set in [{n}]")
