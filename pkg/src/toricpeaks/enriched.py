"""Enriched partitions of DAGs and toric classes, weight enumerators, and
the (cyclic) peak functions they generate.

Values live in the nonzero integers ordered -1 < 1 < -2 < 2 < ...; an
assignment is a dict from vertex labels to such values. Weight enumerators
expand in the monomial bases of qsym via the peak-set formulas; the
brute-force enumerations here are the combinatorial side of every
identity the test suite checks.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .dag import Dag, ToricClass, disjoint_union, linear_extensions, toric_class, toric_extensions
from .permstat import (
    Word,
    cpeak_set,
    cyclic_peak_sets,
    cyclic_peak_witness,
    is_cyclic_peak_set,
    is_peak_set,
    peak_witness,
    peak_set,
)
from .qsym import CQSym, QSym, cyclic_fundamental
from .setcomp import canonical_subset_class, psi, shift_set

Assignment = dict[int, int]
FrozenAssignment = frozenset[tuple[int, int]]


def signed_key(v: int) -> tuple[int, int]:
    """Sort key realizing -1 < 1 < -2 < 2 < ... on nonzero integers."""
    if v == 0:
        raise ValueError("0 is not an admissible value")
    return (abs(v), 0 if v < 0 else 1)


def is_enriched(f: Mapping[int, int], d: Dag) -> bool:
    """Whether f is an enriched partition of d.

    Along every arc i -> j the value must weakly increase, positive ties
    force i < j and negative ties force i > j.
    """
    missing = d.vertices - f.keys()
    if missing:
        raise ValueError(f"assignment misses vertices {sorted(missing)}")
    for i, j in d.arcs:
        a, b = f[i], f[j]
        if signed_key(a) > signed_key(b):
            return False
        if a == b:
            if a > 0 and not i < j:
                return False
            if a < 0 and not i > j:
                return False
    return True


def freeze(f: Mapping[int, int]) -> FrozenAssignment:
    return frozenset(f.items())


def enumerate_enriched(d: Dag, m: int) -> list[Assignment]:
    """All enriched partitions of d with absolute value at most m.

    Brute force over (2m)^n candidate assignments; canonical sorted order.
    """
    verts = sorted(d.vertices)
    values = [v for k in range(1, m + 1) for v in (-k, k)]
    out = []
    for combo in itertools.product(values, repeat=len(verts)):
        f = dict(zip(verts, combo))
        if is_enriched(f, d):
            out.append(f)
    out.sort(key=lambda f: sorted(f.items()))
    return out


def enumerate_enriched_word(w: Sequence[int], m: int) -> list[Assignment]:
    return enumerate_enriched(Dag.from_word(w), m)


def enumerate_enriched_toric(tc: ToricClass, m: int) -> set[FrozenAssignment]:
    """Deduplicated union of enriched partitions over all class members."""
    out: set[FrozenAssignment] = set()
    for member in tc.members:
        out.update(freeze(f) for f in enumerate_enriched(member, m))
    return out


def assignment_to_json(f: Mapping[int, int]) -> str:
    return json.dumps({"f": {str(k): v for k, v in sorted(f.items())}}, sort_keys=True)


def delta_from_peak_set(S: frozenset[int], n: int) -> QSym:
    """Weight enumerator of any permutation with peak set S.

    Sum of 2^{|E|+1} M_{n,E} over E in [n-1] with S inside E ∪ (E+1).
    """
    if n == 0:
        return QSym.unit(1)
    terms: dict[frozenset, int] = {}
    for E in _subsets(range(1, n)):
        if S <= E | {e + 1 for e in E}:
            terms[E] = 2 ** (len(E) + 1)
    return QSym(n, terms)


def delta_perm(w: Sequence[int]) -> QSym:
    """Weight enumerator of the enriched partitions of a total order."""
    return delta_from_peak_set(peak_set(w), len(w))


def delta_dag(d: Dag) -> QSym:
    """Weight enumerator of d: sum over its linear extensions."""
    out = QSym.zero(len(d.vertices))
    for w in linear_extensions(d):
        out = out + delta_perm(w)
    return out


def delta_fundamental_expansion(w: Sequence[int]) -> dict[frozenset, int]:
    """F-basis coefficients of delta_perm(w).

    Coefficient 2^{pk+1} on each D in [n-1] with Pk w inside D △ (D+1).
    """
    n = len(w)
    S = peak_set(w)
    coeff = 2 ** (len(S) + 1)
    out = {}
    for D in _subsets(range(1, n)):
        if S <= D ^ {d + 1 for d in D}:
            out[D] = coeff
    return out


def k_peak(S: Iterable[int], n: int) -> QSym:
    """K_S, the peak function of a valid linear peak set S in [n]."""
    S = frozenset(S)
    if not is_peak_set(S, n):
        raise ValueError(f"{sorted(S)} is not a peak set in [{n}]")
    return delta_perm(peak_witness(S, n))


def kcyc(S: Iterable[int], n: int) -> CQSym:
    """Kcyc_S, the cyclic peak function of a cyclic peak set S in [n].

    Sum of 2^{|E|} Mcyc_{n,E} over E in [n] with S inside E ∪ (E+1),
    shifts taken cyclically.
    """
    S = frozenset(S)
    if not is_cyclic_peak_set(S, n):
        raise ValueError(f"{sorted(S)} is not a cyclic peak set in [{n}]")
    if n == 0:
        return CQSym.unit(1)
    terms: dict[frozenset, int] = {}
    for E in _subsets(range(1, n + 1)):
        if not E:
            continue  # Mcyc of the empty set is zero
        if S <= E | shift_set(E, n, 1):
            key = canonical_subset_class(E, n)
            terms[key] = terms.get(key, 0) + 2 ** len(E)
    return CQSym(n, terms)


def delta_toric(tc: ToricClass) -> CQSym:
    """Cyclic weight enumerator of a toric class: sum over toric extensions."""
    n = len(tc.canonical.vertices)
    out = CQSym.zero(n)
    for w in toric_extensions(tc.canonical):
        out = out + kcyc(cpeak_set(w), n)
    return out


def delta_toric_by_rotations(tc: ToricClass) -> CQSym:
    """Independent route: fold the linear enumerators of every rotation.

    Sums delta_perm over all representatives of all toric extensions and
    folds the result into the cyclic monomial basis.
    """
    from .permstat import rotations
    from .qsym import from_qsym

    n = len(tc.canonical.vertices)
    out = QSym.zero(n)
    for w in toric_extensions(tc.canonical):
        for v in rotations(w):
            out = out + delta_perm(v)
    return from_qsym(out)


def kcyc_fund_expansion(S: Iterable[int], n: int) -> tuple[dict[frozenset, int], CQSym]:
    """Expansion of Kcyc_S over fundamental cyclic functions.

    Returns the coefficient of each canonical class (2^{|S|} per
    qualifying E, accumulated over class members) and the resulting
    element. Qualification: S inside E △ (E+1), shifts cyclic in [n].
    The n = 1 degenerate case follows the literal definition and does not
    reproduce Kcyc.
    """
    S = frozenset(S)
    if not is_cyclic_peak_set(S, n):
        raise ValueError(f"{sorted(S)} is not a cyclic peak set in [{n}]")
    weight = 2 ** len(S)
    coeffs: dict[frozenset, int] = {}
    elem = CQSym.zero(n)
    for E in _subsets(range(1, n + 1)):
        if not E:
            continue
        if S <= E ^ shift_set(E, n, 1):
            key = canonical_subset_class(E, n)
            coeffs[key] = coeffs.get(key, 0) + weight
            elem = elem + cyclic_fundamental(n, E).scale(weight)
    return coeffs, elem


def kcyc_index_map(S: frozenset[int]) -> frozenset[int]:
    """The column index f(S) = {s_1} ∪ {s_i - 1 : i >= 2} of a canonical S."""
    elems = sorted(S)
    return frozenset([elems[0]] + [s - 1 for s in elems[1:]])


def kcyc_triangular_matrix(n: int) -> tuple[list[frozenset[int]], list[list[int]]]:
    """Matrix of Kcyc over the classes of the mapped index sets.

    Rows and columns follow the canonical cyclic peak sets in
    cardinality-then-lex order; entry (i, j) is the coefficient of the
    class of f(S_j) in Kcyc_{S_i}. Asserts upper triangularity with a
    nonzero diagonal.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    sets = cyclic_peak_sets(n)
    cols = [canonical_subset_class(kcyc_index_map(S), n) for S in sets]
    matrix = []
    for S in sets:
        row_elem = kcyc(S, n)
        matrix.append([row_elem.terms.get(c, 0) for c in cols])
    for i in range(len(sets)):
        if matrix[i][i] == 0:
            raise AssertionError(f"zero diagonal entry at {sorted(sets[i])}")
        for j in range(i):
            if matrix[i][j] != 0:
                raise AssertionError(
                    f"nonzero below-diagonal entry at ({i},{j}) for n={n}"
                )
    return sets, matrix


def matrix_rank(rows: list[list[int]]) -> int:
    """Exact rank over the rationals by Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank, col = 0, 0
    ncols = len(work[0]) if work else 0
    while rank < len(work) and col < ncols:
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][col]
        for r in range(rank + 1, len(work)):
            if work[r][col]:
                factor = work[r][col] / lead
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        col += 1
    return rank


def standardize(w: Sequence[int], offset: int) -> Word:
    """Shift every label of w by a fixed offset."""
    return tuple(x + offset for x in w)


def cyclic_peak_product(
    U: Iterable[int], mU: int, T: Iterable[int], nT: int
) -> tuple[CQSym, Counter]:
    """Product Kcyc_U * Kcyc_T with its toric-extension decomposition.

    Builds witnesses, standardizes the second to labels above mU, and
    checks that the ring product agrees with the sum of Kcyc over toric
    extensions of the disjoint union of the witness total orders.
    """
    U, T = frozenset(U), frozenset(T)
    lhs = kcyc(U, mU) * kcyc(T, nT)
    if mU == 0 or nT == 0:
        other = kcyc(T, nT) if mU == 0 else kcyc(U, mU)
        unit = kcyc(U, mU) if mU == 0 else kcyc(T, nT)
        scaled = other.scale(unit.terms.get(frozenset(), 0))
        if lhs != scaled:
            raise AssertionError("degree-0 unit case failed")
        return lhs, Counter()
    pi = cyclic_peak_witness(U, mU)
    w = standardize(cyclic_peak_witness(T, nT), mU)
    union = disjoint_union(Dag.from_word(pi), Dag.from_word(w))
    n = mU + nT
    rhs = CQSym.zero(n)
    decomposition: Counter = Counter()
    for sigma in toric_extensions(union):
        S = canonical_subset_class(cpeak_set(sigma), n)
        decomposition[S] += 1
        rhs = rhs + kcyc(cpeak_set(sigma), n)
    if lhs != rhs:
        raise AssertionError(
            f"subring closure failed for U={sorted(U)} (m={mU}), "
            f"T={sorted(T)} (n={nT})"
        )
    return lhs, decomposition


def _subsets(rng: Iterable[int]) -> Iterable[frozenset[int]]:
    items = sorted(rng)
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)
