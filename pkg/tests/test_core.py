from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import tournaments
from tournaments.core import (
    Direction,
    FamilyTag,
    InvalidArgument,
    Tournament,
    all_labelled,
    backedges,
    canonical_code,
    canonical_form,
    check_ordering,
    contains_induced,
    edge_direction,
    induce,
    is_strongly_connected,
    is_transitive,
    isomorphic,
    make_family,
    max_backedge_length,
    read_tournaments,
    relabel,
    strong_components,
    substitute,
    transitive_order,
)
from tournaments.homog import is_prime


# ---- line format


def test_line_roundtrip_and_layout():
    t = Tournament.from_line("3:101")
    # pairs (0,1), (0,2), (1,2)
    assert t.beats(0, 1) and t.beats(2, 0) and t.beats(1, 2)
    assert t.to_line() == "3:101"
    assert Tournament.from_line(" 1: ").n == 1


@pytest.mark.parametrize("line", ["3:10", "3:1012", "x:1", "3-101", "0:", "17:" + "1" * 136])
def test_bad_lines_rejected(line):
    with pytest.raises(InvalidArgument):
        Tournament.from_line(line)


def test_read_skips_blank_and_comment_lines():
    ts = list(read_tournaments(["# header", "", "2:1", "  3:111  # trailing"]))
    assert [t.to_line() for t in ts] == ["2:1", "3:111"]


def test_constructor_checks_antisymmetry():
    with pytest.raises(InvalidArgument):
        Tournament((0b10, 0b01))
    with pytest.raises(InvalidArgument):
        Tournament((0, 0))
    with pytest.raises(InvalidArgument):
        Tournament((0b1,))


def test_edge_direction():
    t = make_family("I", 3)
    assert edge_direction(t, 0, 2) is Direction.PLUS
    assert edge_direction(t, 2, 0) is Direction.MINUS
    with pytest.raises(InvalidArgument):
        edge_direction(t, 1, 1)


@given(tournaments())
def test_exactly_one_orientation_per_pair(t):
    for u, v in combinations(range(t.n), 2):
        assert t.beats(u, v) != t.beats(v, u)
    assert sum(t.scores()) == t.n * (t.n - 1) // 2


# ---- families


def test_fig1_edge_lists_match_constructions():
    # edge lists read off the three drawings, 1-based
    t5 = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 1), (5, 1), (5, 2)]
    u5 = [(2, 1), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 1), (5, 1), (5, 2)]
    w5 = [(2, 1), (1, 3), (2, 3), (2, 4), (4, 3), (3, 5), (4, 5), (4, 1), (5, 1), (5, 2)]
    for kind, edges in (("T", t5), ("U", u5), ("W", w5)):
        drawn = Tournament.from_edges(5, [(a - 1, b - 1) for a, b in edges])
        assert isomorphic(drawn, make_family(kind, 5)) is not None
    assert Tournament.from_edges(5, [(a - 1, b - 1) for a, b in t5]) == make_family("T", 5)
    assert Tournament.from_edges(5, [(a - 1, b - 1) for a, b in u5]) == make_family("U", 5)


def test_family_definitions_edge_by_edge():
    n, k = 7, 3
    t = make_family("T", n)
    for i in range(n):
        for j in range(n):
            if i != j:
                assert t.beats(i, j) == (1 <= (j - i) % n <= k)
    u = make_family("U", n)
    for i, j in combinations(range(n), 2):
        flipped = j < k
        assert u.beats(i, j) == (t.beats(i, j) != flipped)
    w = make_family("W", n)
    for i, j in combinations(range(n - 1), 2):
        assert w.beats(i, j)
    for i in range(n - 1):
        # 1-based even w_{i+1} beats w_n; w_n beats the odd ones
        assert w.beats(i, n - 1) == (i % 2 == 1)


def test_small_family_facts():
    assert isomorphic(make_family("P", 2), make_family("I", 2)) is not None
    assert isomorphic(make_family("P", 3), make_family("C3")) is not None
    assert isomorphic(make_family("P", 5), make_family("W", 5)) is not None
    for kind in "TUW":
        assert make_family(kind, 1).n == 1
        assert isomorphic(make_family(kind, 3), make_family("C3")) is not None
    assert backedges(make_family("J", 5), range(5)) == [(4, 0)]
    assert backedges(make_family("K", 5), range(5)) == [(4, 1)]
    assert backedges(make_family("Kstar", 5), range(5)) == [(3, 0)]
    q = make_family("Q", 7)
    assert sorted(backedges(q, range(7))) == sorted([(5, 0), (6, 4), (1, 0), (2, 1), (3, 2), (4, 3)])


def test_d4_shapes():
    d4 = make_family("D4")
    assert d4.out[0] == 0b1110 and is_transitive(d4, 0b1110) is False
    ds = make_family("D4star")
    assert ds.in_mask(0) == 0b1110


@pytest.mark.parametrize("kind", "TUW")
def test_TUW_prime_up_to_9(kind):
    for n in range(1, 10, 2):
        assert is_prime(make_family(kind, n))


@pytest.mark.parametrize(
    "kind,n", [("T", 4), ("U", 0), ("W", 6), ("J", 2), ("D4", 5), ("Z", 3), ("I", 17)]
)
def test_family_rejects_bad_sizes(kind, n):
    with pytest.raises(InvalidArgument):
        FamilyTag(kind, n)


# ---- operations


@given(tournaments(max_n=6), st.data())
def test_relabel_matches_oracle(t, data):
    order = data.draw(st.permutations(range(t.n)))
    assert relabel(t, order) == oracles.relabel(t, order)


@given(tournaments(max_n=4), st.lists(tournaments(max_n=3), min_size=4, max_size=4))
def test_substitute_blocks_induce_parts(g, parts):
    parts = parts[: g.n]
    s = substitute(g, parts)
    start = 0
    starts = []
    for h in parts:
        block = sum(1 << (start + i) for i in range(h.n))
        assert induce(s, block) == h
        starts.append(start)
        start += h.n
    for i, j in combinations(range(g.n), 2):
        assert s.beats(starts[i], starts[j]) == g.beats(i, j)


def test_substitute_rejects_wrong_part_count():
    with pytest.raises(InvalidArgument):
        substitute(make_family("C3"), [make_family("I", 1)])


@given(tournaments())
def test_strong_components_ordered(t):
    comps = strong_components(t)
    assert sum(c.bit_count() for c in comps) == t.n
    for i, j in combinations(range(len(comps)), 2):
        for u in range(t.n):
            if comps[i] >> u & 1:
                assert t.out[u] & comps[j] == comps[j]
    assert is_strongly_connected(t) == oracles.strongly_connected(t)


def test_strong_components_examples():
    assert len(strong_components(make_family("I", 5))) == 5
    assert len(strong_components(make_family("J", 4))) == 1
    assert len(strong_components(make_family("T", 7))) == 1


@given(tournaments())
def test_transitive_order(t):
    if is_transitive(t):
        order = transitive_order(t)
        assert backedges(t, order) == []
    else:
        assert oracles.cyclic_triples(t)


def test_canonical_code_iff_isomorphic_n_le_5():
    for n in range(1, 6):
        seen = {}
        for t in all_labelled(n):
            code = canonical_code(t)
            ref = oracles.brute_code(t)
            assert code == canonical_form(t).to_line().encode()
            assert seen.setdefault(ref, code) == code
        assert len(set(seen.values())) == len(seen)
    assert canonical_code(make_family("I", 4)) == b"4:111111"


@settings(max_examples=50)
@given(tournaments(max_n=7), st.data())
def test_isomorphic_returns_a_witness(t, data):
    order = data.draw(st.permutations(range(t.n)))
    u = relabel(t, order)
    phi = isomorphic(t, u)
    assert phi is not None
    for a, b in combinations(range(t.n), 2):
        assert t.beats(a, b) == u.beats(phi[a], phi[b])
    assert canonical_code(t) == canonical_code(u)


def test_contains_induced_matches_oracle():
    d4 = make_family("D4")
    for t in all_labelled(5):
        found = contains_induced(t, d4)
        assert (found is not None) == oracles.induced_contains(t, d4)
        if found is not None:
            assert isomorphic(induce(t, found), d4) is not None


def test_backedge_lengths_and_ordering_checks():
    p = make_family("P", 5)
    assert max_backedge_length(p, range(5)) == 1
    assert max_backedge_length(make_family("J", 6), range(6)) == 5
    with pytest.raises(InvalidArgument):
        check_ordering(p, [0, 1, 2])
    with pytest.raises(InvalidArgument):
        backedges(p, [0, 0, 1, 2, 3])


def test_J_and_K_as_substitutions():
    i = lambda k: make_family("I", k)  # noqa: E731
    for n in (4, 5, 6):
        j = substitute(make_family("C3"), [i(1), i(1), i(n - 2)])
        assert isomorphic(j, make_family("J", n)) is not None
    k5 = substitute(make_family("D4"), [i(1), i(1), i(1), i(2)])
    assert isomorphic(k5, make_family("K", 5)) is not None
    assert isomorphic(induce(make_family("T", 5), 0b1111), make_family("J", 4)) is not None
