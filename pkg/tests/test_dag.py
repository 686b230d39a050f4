import pytest

from toricpeaks.dag import (
    Dag,
    disjoint_union,
    flip,
    is_toric_poset,
    is_toric_transitive,
    linear_extensions,
    sinks,
    sources,
    toric_class,
    toric_extensions,
    transitive_closure,
)

D3 = Dag.make([1, 2, 3, 4], [(2, 1), (2, 4), (2, 3), (4, 1), (4, 3)])


def test_cycle_rejected():
    with pytest.raises(ValueError):
        Dag.make([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
    with pytest.raises(ValueError):
        Dag.make([1], [(1, 1)])


def test_arc_outside_vertices_rejected():
    with pytest.raises(ValueError):
        Dag.make([1, 2], [(1, 3)])


def test_from_word_is_total_order():
    d = Dag.from_word((2, 1, 3))
    assert d.arcs == frozenset({(2, 1), (2, 3), (1, 3)})
    assert linear_extensions(d) == [(2, 1, 3)]


def test_transitive_closure():
    d = Dag.make([1, 2, 3], [(1, 2), (2, 3)])
    assert transitive_closure(d).arcs == frozenset({(1, 2), (2, 3), (1, 3)})


def test_sources_sinks_and_flip():
    assert sources(D3) == frozenset({2})
    assert sinks(D3) == frozenset({1, 3})
    flipped = flip(D3, 2)
    assert (1, 2) in flipped.arcs and (3, 2) in flipped.arcs
    with pytest.raises(ValueError):
        flip(D3, 4)


def test_linear_extensions_of_example():
    assert linear_extensions(D3) == [(2, 4, 1, 3), (2, 4, 3, 1)]


def test_toric_class_of_example_has_five_members():
    tc = toric_class(D3)
    assert len(tc.members) == 5
    assert D3 in tc.members
    # the class is the same from any member
    for member in tc.members:
        assert toric_class(member).members == tc.members


def test_toric_extensions_of_example():
    assert toric_extensions(D3) == [(1, 2, 4, 3), (1, 3, 2, 4)]


def test_total_orders_are_toric_posets():
    for w in [(1, 2, 3), (3, 1, 2), (2, 4, 1, 3)]:
        assert is_toric_transitive(Dag.from_word(w))
        assert is_toric_poset(toric_class(Dag.from_word(w)))


def test_non_toric_transitive_example():
    # without the long arc there is no chord requirement at all
    assert is_toric_transitive(Dag.make([1, 2, 3], [(1, 2), (2, 3)]))
    assert is_toric_transitive(Dag.make([1, 2, 3], [(1, 2), (2, 3), (1, 3)]))
    # the long arc 1 -> 4 demands the chords (1,3) and (2,4)
    d = Dag.make([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert not is_toric_transitive(d)


def test_disjoint_union():
    a = Dag.from_word((1, 2))
    b = Dag.from_word((3, 4))
    u = disjoint_union(a, b)
    assert u.vertices == frozenset({1, 2, 3, 4})
    assert len(linear_extensions(u)) == 6
    with pytest.raises(ValueError):
        disjoint_union(a, Dag.from_word((2, 3)))


def test_json_roundtrip():
    assert Dag.from_json(D3.to_json()) == D3
    tc = toric_class(D3)
    assert '"size": 5' in tc.to_json()
