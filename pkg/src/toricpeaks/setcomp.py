"""Subsets of [n], compositions of n, cyclic shifts and the bijections
between them.

A subset is a frozenset of elements of [n] together with an explicit
ambient size n; a composition is a tuple of positive parts. Residue 0 is
always stored as n, so shifted sets stay inside [n].
"""

from __future__ import annotations

from typing import Iterable

Composition = tuple[int, ...]


def shift_set(E: Iterable[int], n: int, i: int) -> frozenset[int]:
    """Cyclic shift i + E in [n], residues taken in [n] (0 stored as n)."""
    return frozenset((e + i - 1) % n + 1 for e in E)


def phi(E: Iterable[int], n: int) -> Composition:
    """Consecutive differences of 0 < e_1 < ... < e_k < n padded with n.

    Bijection from subsets of [n-1] to compositions of n.
    """
    elems = sorted(E)
    if n == 0 and not elems:
        return ()
    if any(not 1 <= e <= n - 1 for e in elems):
        raise ValueError(f"subset {elems} not contained in [{n - 1}]")
    points = [0] + elems + [n]
    return tuple(points[i + 1] - points[i] for i in range(len(points) - 1))


def phi_inv(alpha: Composition) -> tuple[frozenset[int], int]:
    """Partial sums of a composition; inverse of :func:`phi`.

    Returns the subset of [n-1] and the ambient n = sum of parts.
    """
    if any(a < 1 for a in alpha):
        raise ValueError(f"parts must be positive: {alpha}")
    n = sum(alpha)
    sums, acc = [], 0
    for a in alpha[:-1]:
        acc += a
        sums.append(acc)
    return frozenset(sums), n


def psi(E: Iterable[int], n: int) -> Composition:
    """Cyclic gaps (e_2-e_1, ..., e_k-e_{k-1}, e_1-e_k+n) of nonempty E in [n]."""
    elems = sorted(E)
    if not elems:
        raise ValueError("psi is undefined on the empty set")
    if any(not 1 <= e <= n for e in elems):
        raise ValueError(f"subset {elems} not contained in [{n}]")
    k = len(elems)
    return tuple(
        elems[(i + 1) % k] - elems[i] + (n if i == k - 1 else 0)
        for i in range(k)
    )


def psi_preimage(alpha: Composition) -> tuple[frozenset[int], int]:
    """Some subset E of [n] with psi(E) = alpha (the one containing n)."""
    if any(a < 1 for a in alpha):
        raise ValueError(f"parts must be positive: {alpha}")
    n = sum(alpha)
    elems, acc = [n], 0
    for a in reversed(alpha[:-1]):
        acc += a
        elems.append(n - acc)
    return frozenset(elems), n


def composition_shifts(alpha: Composition) -> list[Composition]:
    """All cyclic shifts of a composition."""
    k = len(alpha)
    if k == 0:
        return [()]
    return [alpha[i:] + alpha[:i] for i in range(k)]


def canonical_composition_class(alpha: Composition) -> Composition:
    """Least cyclic shift; all shifts share a length so this is plain lex."""
    return min(composition_shifts(alpha))


def subset_class_members(E: Iterable[int], n: int) -> set[frozenset[int]]:
    """All cyclic shifts of E in [n]."""
    E = frozenset(E)
    return {shift_set(E, n, i) for i in range(n)}


def canonical_subset_class(E: Iterable[int], n: int) -> frozenset[int]:
    """Shift of E whose sorted element list is lexicographically least.

    Cardinality is shift-invariant, so the cardinality-then-lex order on
    subsets collapses to lex inside a class.
    """
    E = frozenset(E)
    if not E:
        raise ValueError("the empty set has no cyclic class in [n]")
    return min(subset_class_members(E, n), key=sorted)


def psi_class(E: Iterable[int], n: int) -> Composition:
    """Canonical cyclic composition of the class of psi(E)."""
    return canonical_composition_class(psi(E, n))
