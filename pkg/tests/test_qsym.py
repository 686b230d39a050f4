import itertools

import pytest

from toricpeaks.qsym import (
    CQSym,
    NotCyclicError,
    QSym,
    cyclic_fundamental,
    cyclic_fundamental_via_F,
    cyclic_monomial,
    cyclic_monomial_as_qsym,
    fcyc_pair_oracle,
    from_qsym,
    fundamental,
    monomial,
    quasi_shuffle,
)


def test_fundamental_is_superset_sum():
    f = fundamental(4, {1, 3})
    assert f.terms == {frozenset({1, 3}): 1, frozenset({1, 2, 3}): 1}
    assert fundamental(3, set()).terms == {
        frozenset(): 1,
        frozenset({1}): 1,
        frozenset({2}): 1,
        frozenset({1, 2}): 1,
    }


def test_monomial_fundamental_roundtrip():
    for n in range(0, 6):
        for k in range(0, max(n, 1)):
            for S in itertools.combinations(range(1, n), k):
                m = monomial(n, S)
                back = QSym.from_fundamental(n, m.to_fundamental())
                assert back == m


def test_quasi_shuffle_counts():
    out = list(quasi_shuffle((1,), (1,)))
    assert sorted(out) == [(1, 1), (1, 1), (2,)]
    out = list(quasi_shuffle((2,), (1, 1)))
    assert (3, 1) in out and (1, 2, 1) in out


def test_product_matches_truncated_polynomial_oracle():
    m = 4
    cases = [
        (monomial(2, {1}), monomial(1, set())),
        (monomial(2, set()), monomial(2, {1})),
        (fundamental(2, {1}), fundamental(1, set())),
        (monomial(3, {1, 2}), monomial(2, {1})),
    ]
    for a, b in cases:
        assert (a * b).truncate(m) == a.truncate(m) * b.truncate(m)


def test_specialize_ones():
    assert monomial(4, {1, 3}).specialize_ones(3) == 1
    assert monomial(4, set()).specialize_ones(3) == 3
    assert fundamental(2, set()).specialize_ones(2) == 3


def test_degree_mismatch_add_raises():
    with pytest.raises(ValueError):
        monomial(2, {1}) + monomial(3, {1})


def test_json_roundtrip_both_bases():
    a = 3 * fundamental(4, {2}) - monomial(4, {1, 3})
    assert QSym.from_json(a.to_json("M")) == a
    assert QSym.from_json(a.to_json("F")) == a


def test_cyclic_monomial_expansions_of_degree_4():
    assert cyclic_monomial_as_qsym(4, {4}) == QSym(4, {frozenset(): 1})
    assert cyclic_monomial_as_qsym(4, {1, 3}) == QSym(4, {frozenset({2}): 2})
    assert cyclic_monomial_as_qsym(4, {1, 2, 3, 4}) == QSym(
        4, {frozenset({1, 2, 3}): 4}
    )


def test_cyclic_monomial_shift_invariance_and_zero():
    assert cyclic_monomial(4, {1, 3}) == cyclic_monomial(4, {2, 4})
    assert cyclic_monomial(4, set()) == CQSym.zero(4)


def test_cyclic_fundamental_degree_4():
    elem = cyclic_fundamental(4, {1, 3})
    assert elem.terms == {
        frozenset({1, 3}): 1,
        frozenset({1, 2, 3}): 2,
        frozenset({1, 2, 3, 4}): 1,
    }
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
    assert elem.as_qsym() == expected
    assert cyclic_fundamental_via_F(4, {1, 3}) == expected


def test_cyclic_fundamental_shift_invariance():
    for n in range(2, 6):
        for k in range(1, n + 1):
            for S in itertools.combinations(range(1, n + 1), k):
                base = cyclic_fundamental(n, S)
                shifted = frozenset((s % n) + 1 for s in S)
                assert cyclic_fundamental(n, shifted) == base


def test_from_qsym_recovers_cyclic_elements():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for S in itertools.combinations(range(1, n + 1), k):
                elem = cyclic_monomial(n, S)
                assert from_qsym(elem.as_qsym()) == elem


def test_from_qsym_rejects_non_cyclic():
    with pytest.raises(NotCyclicError):
        from_qsym(monomial(4, {1}))
    # right multiple of one class member, wrong on the rest
    bad = QSym(4, {frozenset({1}): 2})
    with pytest.raises(NotCyclicError):
        from_qsym(bad)


def test_from_qsym_divisibility():
    ok = QSym(4, {frozenset({2}): 2})
    assert from_qsym(ok) == cyclic_monomial(4, {1, 3})
    with pytest.raises(NotCyclicError):
        from_qsym(QSym(4, {frozenset({2}): 3}))


def test_cqsym_product_stays_cyclic():
    a = cyclic_monomial(2, {1})
    b = cyclic_monomial(1, {1})
    prod = a * b
    assert prod.degree == 3
    assert from_qsym(prod.as_qsym()) == prod


def test_cqsym_json_roundtrip():
    elem = cyclic_fundamental(4, {1, 3}).scale(2)
    assert CQSym.from_json(elem.to_json()) == elem


def test_pair_oracle_small_cases():
    for n, E in [(2, {1}), (3, {1, 2}), (3, {2})]:
        elem = cyclic_fundamental(n, E)
        for m in (1, 2, 3):
            assert fcyc_pair_oracle(n, E, m) == elem.truncate(m)
