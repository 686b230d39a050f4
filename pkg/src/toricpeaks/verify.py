"""Verification suites: exact identities checked on small instances.

Each suite returns a report dict with one entry per check. Everything is
deterministic; the one randomized ingredient (extra DAG samples in the
fundamental-lemma suite) uses a fixed seed.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter

from .dag import (
    Dag,
    disjoint_union,
    linear_extensions,
    toric_class,
    toric_extensions,
)
from .enriched import (
    cyclic_peak_product,
    delta_dag,
    delta_fundamental_expansion,
    delta_perm,
    delta_toric,
    delta_toric_by_rotations,
    enumerate_enriched,
    enumerate_enriched_toric,
    freeze,
    k_peak,
    kcyc,
    kcyc_triangular_matrix,
    matrix_rank,
    standardize,
)
from .orderpoly import (
    Marking,
    enumerate_markings,
    gf_omega,
    gf_omega_cyc,
    interpolate,
    marking_fibers,
    multiset_coeff,
    omega,
    omega_cyc,
    omega_toric,
    partition_to_marking,
    runs,
)
from .permstat import (
    canonical_rotation,
    cpeak_set,
    cyclic_peak_sets,
    peak_set,
    rotations,
    shuffle_set,
)
from .qsym import (
    CQSym,
    QSym,
    TruncPoly,
    cyclic_fundamental,
    cyclic_fundamental_via_F,
    cyclic_monomial_as_qsym,
    fcyc_pair_oracle,
)
from .setcomp import canonical_subset_class


def _check(checks: list, name: str, ok: bool, detail: str = "") -> None:
    checks.append({"name": name, "pass": bool(ok), "detail": detail})


def _report(suite: str, checks: list) -> dict:
    return {
        "suite": suite,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


# Shared memo tables; everything here is pure, so caching is safe.
_ENRICHED: dict[tuple[Dag, int], frozenset] = {}
_TORIC_ENR: dict[tuple[Dag, int], frozenset] = {}
_TORIC_CLS: dict[Dag, object] = {}
_DELTA_TORIC: dict[Dag, CQSym] = {}
_KPEAK: dict[tuple[frozenset, int], QSym] = {}


def _enriched_set(d: Dag, m: int) -> frozenset:
    key = (d, m)
    if key not in _ENRICHED:
        _ENRICHED[key] = frozenset(freeze(f) for f in enumerate_enriched(d, m))
    return _ENRICHED[key]


def _toric_of(d: Dag):
    if d not in _TORIC_CLS:
        _TORIC_CLS[d] = toric_class(d)
    return _TORIC_CLS[d]


def _toric_enriched_set(d: Dag, m: int) -> frozenset:
    tc = _toric_of(d)
    key = (tc.canonical, m)
    if key not in _TORIC_ENR:
        out: set = set()
        for member in tc.members:
            out |= _enriched_set(member, m)
        _TORIC_ENR[key] = frozenset(out)
    return _TORIC_ENR[key]


def _delta_toric_of(d: Dag) -> CQSym:
    tc = _toric_of(d)
    if tc.canonical not in _DELTA_TORIC:
        _DELTA_TORIC[tc.canonical] = delta_toric(tc)
    return _DELTA_TORIC[tc.canonical]


def _k_peak(S: frozenset, n: int) -> QSym:
    key = (S, n)
    if key not in _KPEAK:
        _KPEAK[key] = k_peak(S, n)
    return _KPEAK[key]


def small_dags(max_n: int = 4) -> list[Dag]:
    """Every DAG on a vertex set [n], n <= max_n.

    Every DAG embeds in the transitive tournament of any of its linear
    extensions, so arc subsets of all transitive tournaments exhaust them.
    """
    out = set()
    for n in range(1, max_n + 1):
        for w in itertools.permutations(range(1, n + 1)):
            full = sorted(Dag.from_word(w).arcs)
            for k in range(len(full) + 1):
                for arcs in itertools.combinations(full, k):
                    out.add(Dag.make(range(1, n + 1), arcs))
    return sorted(out, key=lambda d: (len(d.vertices), sorted(d.arcs)))


def random_dags(count: int, max_n: int = 4, seed: int = 0) -> list[Dag]:
    """Seeded random DAGs: random arc subsets of random tournaments."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        w = list(range(1, n + 1))
        rng.shuffle(w)
        arcs = [a for a in Dag.from_word(w).arcs if rng.random() < 0.5]
        out.append(Dag.make(range(1, n + 1), arcs))
    return out


def _count_enriched_word(w: tuple[int, ...], m: int) -> int:
    """Independent brute-force count for a total order.

    Checks only consecutive pairs; transitivity of the signed order makes
    that equivalent to the full arc set of the chain.
    """
    vals = [v for k in range(1, m + 1) for v in (-k, k)]
    n = len(w)
    count = 0
    for combo in itertools.product(vals, repeat=n):
        ok = True
        for i in range(n - 1):
            a, b = combo[i], combo[i + 1]
            if (abs(a), a > 0) > (abs(b), b > 0):
                ok = False
                break
            if a == b and ((a > 0) != (w[i] < w[i + 1])):
                ok = False
                break
        if ok:
            count += 1
    return count


def _weight_poly(assignments, m: int) -> TruncPoly:
    """Brute-force weight enumerator: sum of products of x_{|f(i)|}."""
    out = TruncPoly.zero(m)
    for frozen in assignments:
        expo = [0] * m
        for _, v in frozen:
            expo[abs(v) - 1] += 1
        key = tuple(expo)
        out.terms[key] = out.terms.get(key, 0) + 1
    out.terms = {k: v for k, v in out.terms.items() if v != 0}
    return out


D3 = Dag.make([1, 2, 3, 4], [(2, 1), (2, 4), (2, 3), (4, 1), (4, 3)])

# Cyclic monomial functions of degree 4 in the monomial basis, one row per
# cyclic composition class of 4, keyed by the canonical class subset.
TABLE1 = {
    frozenset({1}): {frozenset(): 1},
    frozenset({1, 2}): {frozenset({1}): 1, frozenset({3}): 1},
    frozenset({1, 3}): {frozenset({2}): 2},
    frozenset({1, 2, 3}): {
        frozenset({1, 2}): 1,
        frozenset({1, 3}): 1,
        frozenset({2, 3}): 1,
    },
    frozenset({1, 2, 3, 4}): {frozenset({1, 2, 3}): 4},
}

DELTA_CYC_D3 = CQSym(
    4,
    {
        frozenset({1, 2, 3, 4}): 32,
        frozenset({1, 2, 3}): 64,
        frozenset({1, 2}): 20,
        frozenset({1, 3}): 16,
        frozenset({1}): 4,
    },
)


def suite_table1(**_) -> dict:
    """The five degree-4 cyclic monomial expansions."""
    checks: list = []
    for key, expected in TABLE1.items():
        got = cyclic_monomial_as_qsym(4, key)
        _check(
            checks,
            f"Mcyc class {sorted(key)} expansion",
            got == QSym(4, expected),
            repr(got),
        )
    return _report("table1", checks)


def suite_cyclic_f(max_m: int = 5, **_) -> dict:
    """The degree-4 cyclic fundamental expansion and its pair oracle."""
    checks: list = []
    E = frozenset({1, 3})
    expected = QSym(
        4,
        {
            frozenset({2}): 2,
            frozenset({1, 2}): 2,
            frozenset({1, 3}): 2,
            frozenset({2, 3}): 2,
            frozenset({1, 2, 3}): 4,
        },
    )
    elem = cyclic_fundamental(4, E)
    _check(checks, "Fcyc_{4,{1,3}} monomial expansion", elem.as_qsym() == expected)
    _check(
        checks,
        "Fcyc_{4,{1,3}} via shifted fundamentals",
        cyclic_fundamental_via_F(4, E) == expected,
    )
    for m in range(1, max_m + 1):
        _check(
            checks,
            f"pair oracle m={m}",
            fcyc_pair_oracle(4, E, m) == elem.truncate(m),
        )
    return _report("cyclic-f", checks)


def suite_extensions(**_) -> dict:
    """Linear and toric extensions of the running 4-vertex example."""
    checks: list = []
    _check(
        checks,
        "linear extensions",
        linear_extensions(D3) == [(2, 4, 1, 3), (2, 4, 3, 1)],
        str(linear_extensions(D3)),
    )
    tc = _toric_of(D3)
    _check(checks, "toric class size 5", len(tc.members) == 5, str(len(tc.members)))
    _check(
        checks,
        "toric extensions",
        toric_extensions(D3) == [(1, 2, 4, 3), (1, 3, 2, 4)],
        str(toric_extensions(D3)),
    )
    _check(
        checks,
        "toric extensions as rotation classes of linear extensions",
        {canonical_rotation(w) for w in linear_extensions(D3)}
        == set(toric_extensions(D3)),
    )
    return _report("extensions", checks)


def suite_enumerator(max_n: int = 4, max_m: int = 3, **_) -> dict:
    """Cyclic weight enumerator of the example, two ways, plus oracles."""
    checks: list = []
    tc = _toric_of(D3)
    via_cpk = delta_toric(tc)
    via_rot = delta_toric_by_rotations(tc)
    _check(checks, "delta-cyc via cPk formula", via_cpk == DELTA_CYC_D3, repr(via_cpk))
    _check(checks, "delta-cyc via rotation sums", via_rot == DELTA_CYC_D3, repr(via_rot))
    for m in range(1, max_m + 1):
        brute = _weight_poly(_toric_enriched_set(D3, m), m)
        _check(
            checks,
            f"delta-cyc brute-force weights m={m}",
            brute == via_cpk.truncate(m),
        )
    # Linear enumerators against brute force, and the F-expansion shortcut.
    for n in range(1, max_n + 1):
        for w in itertools.permutations(range(1, n + 1)):
            dperm = delta_perm(w)
            if n <= 3 or w == (1, 3, 2, 4):
                for m in range(1, max_m + 1):
                    brute = _weight_poly(
                        _enriched_set(Dag.from_word(w), m), m
                    )
                    if brute != dperm.truncate(m):
                        _check(checks, f"delta brute force {w} m={m}", False)
            if delta_fundamental_expansion(w) != dperm.to_fundamental():
                _check(checks, f"delta F-expansion {w}", False)
    _check(checks, f"delta oracles all words n<={max_n}", True)
    # Dependence on the (cyclic) peak set alone.
    for n in range(1, 7):
        groups: dict = {}
        cgroups: dict = {}
        for w in itertools.permutations(range(1, n + 1)):
            groups.setdefault(peak_set(w), set()).add(delta_perm(w).to_json())
            cgroups.setdefault(cpeak_set(w), set()).add(
                kcyc(cpeak_set(w), n).to_json()
            )
        if any(len(v) != 1 for v in groups.values()):
            _check(checks, f"delta depends only on Pk, n={n}", False)
        if any(len(v) != 1 for v in cgroups.values()):
            _check(checks, f"delta-cyc depends only on cPk, n={n}", False)
    _check(checks, "enumerators depend only on peak data, n<=6", True)
    return _report("enumerator", checks)


def suite_fundamental_lemma(
    max_n: int = 4, max_m: int = 3, random_count: int = 200, seed: int = 0, **_
) -> dict:
    """Disjoint-union decompositions of enriched partitions, all small DAGs."""
    checks: list = []
    dags = small_dags(max_n) + random_dags(random_count, max_n, seed)
    linear_bad = toric_bad = spec_bad = 0
    toric_done: set = set()
    for d in dags:
        for m in range(1, max_m + 1):
            whole = _enriched_set(d, m)
            pieces = [
                _enriched_set(Dag.from_word(w), m) for w in linear_extensions(d)
            ]
            union: set = set()
            for p in pieces:
                union |= p
            if union != whole or sum(len(p) for p in pieces) != len(whole):
                linear_bad += 1
            if delta_dag(d).specialize_ones(m) != len(whole):
                spec_bad += 1
        tc = _toric_of(d)
        if (tc.canonical, max_m) in toric_done:
            continue
        toric_done.add((tc.canonical, max_m))
        for m in range(1, max_m + 1):
            whole = _toric_enriched_set(d, m)
            pieces = [
                _toric_enriched_set(Dag.from_word(w), m)
                for w in toric_extensions(d)
            ]
            union = set()
            for p in pieces:
                union |= p
            if union != whole or sum(len(p) for p in pieces) != len(whole):
                toric_bad += 1
            if _delta_toric_of(d).specialize_ones(m) != len(whole):
                spec_bad += 1
    _check(
        checks,
        f"linear decomposition, {len(dags)} DAGs, m<={max_m}",
        linear_bad == 0,
        f"{linear_bad} failures",
    )
    _check(
        checks,
        f"toric decomposition, {len(toric_done)} classes, m<={max_m}",
        toric_bad == 0,
        f"{toric_bad} failures",
    )
    _check(checks, "specialization counts", spec_bad == 0, f"{spec_bad} failures")
    return _report("fundamental-lemma", checks)


def suite_order_poly(max_n: int = 5, max_m: int = 3, series_m: int = 6, **_) -> dict:
    """Formula, brute force and series coefficients agree; run invariants."""
    checks: list = []
    formula_bad = series_bad = cyc_bad = 0
    for n in range(1, max_n + 1):
        classes: set = set()
        for w in itertools.permutations(range(1, n + 1)):
            coeffs = gf_omega(w, series_m)
            for m in range(0, series_m + 1):
                if coeffs[m] != omega(w, m):
                    series_bad += 1
            for m in range(1, max_m + 1):
                if omega(w, m) != _count_enriched_word(w, m):
                    formula_bad += 1
            if omega(w, 0) != 0:
                formula_bad += 1
            classes.add(canonical_rotation(w))
        for w in sorted(classes):
            ccoeffs = gf_omega_cyc(w, series_m)
            for m in range(0, series_m + 1):
                # omega_cyc itself asserts formula == rotation sum.
                if ccoeffs[m] != omega_cyc(w, m):
                    cyc_bad += 1
            if n <= 4:
                tc = _toric_of(Dag.from_word(w))
                for m in range(1, max_m + 1):
                    if omega_toric(tc, m) != omega_cyc(w, m):
                        cyc_bad += 1
                    if len(_toric_enriched_set(Dag.from_word(w), m)) != omega_cyc(
                        w, m
                    ):
                        cyc_bad += 1
    _check(checks, f"omega == brute force, n<={max_n}, m<={max_m}", formula_bad == 0)
    _check(checks, f"omega == series coefficients, m<={series_m}", series_bad == 0)
    _check(checks, f"cyclic triple agreement, n<={max_n}", cyc_bad == 0)
    run_bad = rot_bad = poly_bad = 0
    for n in range(1, 8):
        for w in itertools.permutations(range(1, n + 1)):
            pk = len(peak_set(w))
            decomp = runs(w)
            if len(decomp.runs) != 2 * pk + 2:
                run_bad += 1
            if len(decomp.markable) != n - 2 * pk - 1:
                run_bad += 1
            if n <= 6:
                cpk = len(cpeak_set(w))
                low = sum(
                    1 for v in rotations(w) if len(peak_set(v)) == cpk - 1
                )
                high = sum(1 for v in rotations(w) if len(peak_set(v)) == cpk)
                if low != 2 * cpk or low + high != n:
                    rot_bad += 1
            if n <= 4:
                pts = [(m, omega(w, m)) for m in range(1, n + 2)]
                for m in range(n + 2, n + 5):
                    if interpolate(pts, m) != omega(w, m):
                        poly_bad += 1
    _check(checks, "run invariants, n<=7", run_bad == 0)
    _check(checks, "rotation peak-count structure, n<=6", rot_bad == 0)
    _check(checks, "polynomiality of omega, n<=4", poly_bad == 0)
    return _report("order-poly", checks)


def suite_markings(max_m: int = 3, **_) -> dict:
    """The enriched-partition-to-marking correspondence on 4-letter words."""
    checks: list = []
    bad_fiber = bad_image = bad_count = 0
    for w in itertools.permutations(range(1, 5)):
        pk = len(peak_set(w))
        markable = runs(w).markable
        for m in range(1, max_m + 1):
            fibers = marking_fibers(w, m)
            expected = set(enumerate_markings(w, m))
            if set(fibers) != expected:
                bad_image += 1
            for mk, size in fibers.items():
                if size != 2 ** (2 * pk + 1):
                    bad_fiber += 1
                if not (
                    mk.marked <= markable
                    and len(mk.bars) + len(mk.marked) == m - 1 - pk
                ):
                    bad_image += 1
            if len(expected) * 2 ** (2 * pk + 1) != omega(w, m):
                bad_count += 1
            count = sum(
                multiset_coeff(5, k) * math.comb(len(markable), m - 1 - pk - k)
                for k in range(0, m - pk)
            )
            if count != len(expected):
                bad_count += 1
    _check(checks, "marking image matches enumeration, S_4", bad_image == 0)
    _check(checks, "every fiber has size 2^(2pk+1)", bad_fiber == 0)
    _check(checks, "marking counts match omega", bad_count == 0)
    w = (1, 4, 3, 2, 5, 6)
    decomp = runs(w)
    _check(
        checks,
        "run decomposition of 143256",
        [sorted(I) for I in decomp.index_sets]
        == [[0, 1], [2], [3, 4], [5, 6, 7]]
        and decomp.markable == frozenset({3, 5, 6}),
        str(decomp),
    )
    f = {1: 1, 4: -2, 3: -4, 2: -4, 5: -5, 6: 5}
    mk = partition_to_marking(f, w, 5)
    _check(
        checks,
        "displayed partition maps to bars {2,2}, mark {5}",
        mk == Marking(w, (2, 2), frozenset({5})),
        str(mk),
    )
    displayed = {Marking(w, (2, 2), frozenset({5})), Marking(w, (2, 6), frozenset({3}))}
    _check(
        checks,
        "both displayed markings occur for m=5",
        displayed <= set(enumerate_markings(w, 5)),
    )
    fibers1 = marking_fibers((1,), 1)
    _check(
        checks,
        "w=1, m=1 collapses to one empty marking with fiber 2",
        fibers1 == Counter({Marking((1,), (), frozenset()): 2}),
    )
    return _report("markings", checks)


def suite_triangularity(max_n: int = 6, **_) -> dict:
    """Kcyc against mapped cyclic monomial classes: triangular, full rank."""
    checks: list = []
    for n in range(2, max_n + 1):
        try:
            sets, matrix = kcyc_triangular_matrix(n)
        except AssertionError as exc:
            _check(checks, f"triangularity n={n}", False, str(exc))
            continue
        full = [
            [kcyc(S, n).terms.get(c, 0) for c in _all_classes(n)] for S in sets
        ]
        _check(
            checks,
            f"triangularity and rank n={n}",
            matrix_rank(full) == len(sets),
            f"{len(sets)} classes",
        )
    sets4, _ = kcyc_triangular_matrix(4)
    _check(
        checks,
        "n=4 cyclic peak sets are {1} and {1,3}",
        sets4 == [frozenset({1}), frozenset({1, 3})],
    )
    return _report("triangularity", checks)


def _all_classes(n: int) -> list[frozenset]:
    seen = set()
    for k in range(1, n + 1):
        for S in itertools.combinations(range(1, n + 1), k):
            seen.add(canonical_subset_class(frozenset(S), n))
    return sorted(seen, key=lambda S: (len(S), sorted(S)))


def suite_closure(max_total: int = 6, **_) -> dict:
    """The cyclic peak functions form a subring: products decompose."""
    checks: list = []
    pairs = bad = 0
    for mU in range(1, max_total):
        for nT in range(1, max_total - mU + 1):
            for U in cyclic_peak_sets(mU):
                for T in cyclic_peak_sets(nT):
                    pairs += 1
                    try:
                        cyclic_peak_product(U, mU, T, nT)
                    except AssertionError:
                        bad += 1
    _check(checks, f"{pairs} witness products, degrees <= {max_total}", bad == 0)
    try:
        cyclic_peak_product(frozenset(), 0, frozenset({1}), 2)
        cyclic_peak_product(frozenset({1}), 2, frozenset(), 0)
        _check(checks, "degree-0 unit cases", True)
    except AssertionError as exc:
        _check(checks, "degree-0 unit cases", False, str(exc))
    bad = total = 0
    rng = random.Random(1)
    left = small_dags(2)
    right = [d for d in small_dags(3) if len(d.vertices) == 3]
    shifted = [
        Dag.make([v + 3 for v in d.vertices], [(i + 3, j + 3) for i, j in d.arcs])
        for d in right
    ]
    pairs_small = [(a, b) for a in left for b in shifted]
    pairs_33 = [
        (rng.choice(right), rng.choice(shifted)) for _ in range(20)
    ]
    for a, b in pairs_small + pairs_33:
        if a.vertices & b.vertices:
            continue
        total += 1
        prod = _delta_toric_of(a) * _delta_toric_of(b)
        if prod != _delta_toric_of(disjoint_union(a, b)):
            bad += 1
    _check(
        checks,
        f"delta-cyc product rule on {total} disjoint unions",
        bad == 0,
        f"{bad} failures",
    )
    return _report("closure", checks)


def suite_shuffle(max_total: int = 6, **_) -> dict:
    """K_{Pk pi} K_{Pk sigma} = sum of K_{Pk tau} over interleavings."""
    checks: list = []
    pairs = bad = 0
    for a in range(1, max_total):
        for b in range(1, max_total - a + 1):
            for pi in itertools.permutations(range(1, a + 1)):
                for sig0 in itertools.permutations(range(1, b + 1)):
                    sig = standardize(sig0, a)
                    pairs += 1
                    lhs = _k_peak(peak_set(pi), a) * _k_peak(peak_set(sig0), b)
                    rhs = QSym.zero(a + b)
                    for tau in shuffle_set(pi, sig):
                        rhs = rhs + _k_peak(peak_set(tau), a + b)
                    if lhs != rhs:
                        bad += 1
    _check(checks, f"{pairs} shuffle products, degrees <= {max_total}", bad == 0)
    return _report("shuffle", checks)


SUITES = {
    "table1": suite_table1,
    "cyclic-f": suite_cyclic_f,
    "extensions": suite_extensions,
    "enumerator": suite_enumerator,
    "fundamental-lemma": suite_fundamental_lemma,
    "order-poly": suite_order_poly,
    "markings": suite_markings,
    "triangularity": suite_triangularity,
    "closure": suite_closure,
    "shuffle": suite_shuffle,
}


def run_suite(name: str, **kwargs) -> dict:
    if name == "all":
        reports = [run_suite(s, **kwargs) for s in SUITES]
        return {
            "suite": "all",
            "reports": reports,
            "pass": all(r["pass"] for r in reports),
        }
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    passed = {
        k: v for k, v in kwargs.items() if v is not None
    }
    return fn(**passed)
