import itertools

import pytest

from toricpeaks.setcomp import (
    canonical_composition_class,
    canonical_subset_class,
    composition_shifts,
    phi,
    phi_inv,
    psi,
    psi_class,
    psi_preimage,
    shift_set,
    subset_class_members,
)


def test_phi_examples():
    assert phi({1, 3}, 4) == (1, 2, 1)
    assert phi(set(), 4) == (4,)
    assert phi(set(), 0) == ()


def test_phi_roundtrip_all_subsets():
    for n in range(0, 8):
        for k in range(0, n):
            for S in itertools.combinations(range(1, n), k):
                fs = frozenset(S)
                assert phi_inv(phi(fs, n)) == (fs, n)


def test_phi_rejects_out_of_range():
    with pytest.raises(ValueError):
        phi({4}, 4)


def test_psi_examples():
    assert psi({1, 3}, 4) == (2, 2)
    assert psi({2}, 4) == (4,)
    assert psi({1, 2, 4}, 4) == (1, 2, 1)


def test_psi_preimage_inverts_psi():
    assert psi_preimage((2, 2)) == (frozenset({2, 4}), 4)
    for alpha in [(1, 3), (2, 1, 1), (4,), (1, 1, 1, 1)]:
        E, n = psi_preimage(alpha)
        assert n in E
        assert psi(E, n) == alpha


def test_psi_undefined_on_empty():
    with pytest.raises(ValueError):
        psi(set(), 4)


def test_shift_set_wraps():
    assert shift_set({3, 4}, 4, 1) == frozenset({4, 1})
    assert shift_set({1}, 4, -1) == frozenset({4})


def test_shift_commutes_with_psi_up_to_rotation():
    E, n = frozenset({1, 3, 4}), 5
    base = psi(E, n)
    for i in range(n):
        assert canonical_composition_class(psi(shift_set(E, n, i), n)) == \
            canonical_composition_class(base)


def test_subset_classes():
    members = subset_class_members({1, 3}, 4)
    assert members == {frozenset({1, 3}), frozenset({2, 4})}
    assert canonical_subset_class({2, 4}, 4) == frozenset({1, 3})
    assert canonical_subset_class({1, 3, 4}, 4) == frozenset({1, 2, 3})
    with pytest.raises(ValueError):
        canonical_subset_class(set(), 4)


def test_composition_shifts_and_class():
    assert set(composition_shifts((1, 2, 1))) == {(1, 2, 1), (2, 1, 1), (1, 1, 2)}
    assert canonical_composition_class((3, 1)) == (1, 3)
    assert psi_class({1, 3}, 4) == (2, 2)
