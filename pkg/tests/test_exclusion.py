from itertools import combinations, permutations

import pytest
from hypothesis import given, settings

import oracles
from strategies import tournaments
from tournaments.core import (
    InternalError,
    InvalidArgument,
    all_labelled,
    induce,
    is_transitive,
    isomorphic,
    make_family,
    max_backedge_length,
    substitute,
    to_mask,
)
from tournaments.exclusion import (
    Pattern,
    PatternKind,
    bounded_backedge_ordering,
    bucket_construction,
    check_converse_J,
    check_converse_K,
    has_pattern,
    kn_free_decompose,
    largest_J,
    max_transitive_subset,
    noKn_construct,
)
from tournaments.harness import enumerate_canonical
from tournaments.matching import apply_perm, pi1

KINDS = [Pattern.J, Pattern.K, Pattern.KSTAR]


def _free_of(t, kinds, n):
    return all(has_pattern(t, PatternKind(k, n)) is None for k in kinds)


def test_pattern_builds_match_families():
    for kind, fam in zip(KINDS, ("J", "K", "Kstar")):
        for n in range(3, 8):
            assert PatternKind(kind, n).build() == make_family(fam, n)
    with pytest.raises(InvalidArgument):
        PatternKind("J", 2)
    assert str(PatternKind("Kstar", 5)) == "Kstar5"


def test_has_pattern_examples():
    k5 = make_family("K", 5)
    assert has_pattern(k5, PatternKind("K", 5)) == k5.vertices
    assert has_pattern(make_family("I", 6), PatternKind("J", 3)) is None
    w = has_pattern(make_family("T", 5), PatternKind("J", 4))
    assert w is not None and isomorphic(induce(make_family("T", 5), w), make_family("J", 4)) is not None


@settings(max_examples=80)
@given(tournaments(max_n=7))
def test_has_pattern_matches_generic_search(t):
    for kind in KINDS:
        for n in range(3, min(t.n, 6) + 1):
            pat = PatternKind(kind, n).build()
            got = has_pattern(t, PatternKind(kind, n))
            assert (got is not None) == oracles.induced_contains(t, pat)
            if got is not None:
                assert isomorphic(induce(t, got), pat) is not None


@given(tournaments(max_n=8))
def test_patterns_are_hereditary(t):
    for kind in KINDS:
        hits = [has_pattern(t, PatternKind(kind, n)) is not None for n in range(3, t.n + 1)]
        assert hits == sorted(hits, reverse=True)


@given(tournaments(max_n=8))
def test_max_transitive_subset_is_maximum(t):
    best = max_transitive_subset(t)
    assert is_transitive(t, best)
    size = best.bit_count()
    if size < t.n:
        assert not any(oracles.is_transitive(t, c) for c in combinations(range(t.n), size + 1))


def test_max_transitive_examples():
    assert max_transitive_subset(make_family("I", 5)) == 0b11111
    assert max_transitive_subset(make_family("C3")).bit_count() == 2
    assert max_transitive_subset(make_family("T", 5)).bit_count() == 3
    assert largest_J(make_family("I", 4)) == 0
    assert largest_J(make_family("J", 6)) == 6


def test_bounded_ordering_examples():
    order, length = bounded_backedge_ordering(make_family("I", 5), 4)
    assert order == [0, 1, 2, 3, 4] and length == 0
    c3 = make_family("C3")
    order, length = bounded_backedge_ordering(c3, 4)
    assert sorted(order) == [0, 1, 2] and length <= 2
    assert length == max_backedge_length(c3, order)
    with pytest.raises(InvalidArgument):
        bounded_backedge_ordering(make_family("J", 5), 4)


def test_bucket_construction_all_J4_free_up_to_7():
    seen = 0
    for n in range(1, 8):
        for t in enumerate_canonical(n):
            if has_pattern(t, PatternKind("J", 4)) is not None:
                continue
            b = bucket_construction(t, 4)
            seen += 1
            assert sorted(b.order) == list(range(n))
            assert b.max_length == max_backedge_length(t, b.order)
            assert all(0 < s < 8 for s in b.spread.values())
    assert seen > 0


def test_converse_J():
    assert check_converse_J(make_family("I", 6), range(6), 1)
    p6 = make_family("P", 6)
    o = apply_perm(list(range(6)), pi1(6))
    # the longest backedge of this ordering is 3, not 2
    assert max_backedge_length(p6, o) == 3
    assert check_converse_J(p6, o, 3)
    with pytest.raises(InvalidArgument):
        check_converse_J(p6, o, 2)
    with pytest.raises(InvalidArgument):
        check_converse_J(make_family("J", 5), range(5), 1)


def test_converse_J_sharp_size_exhaustive():
    # an ordering with all backedges of length <= k cannot hold J_{3k+2}
    for n in range(5, 8):
        for t in enumerate_canonical(n):
            for o in permutations(range(n)):
                if max_backedge_length(t, o) == 1:
                    assert check_converse_J(t, o, 1, pattern_size=5)
                    break


def test_kn_free_decompose_examples():
    assert kn_free_decompose(make_family("I", 5)).r == 1
    d = kn_free_decompose(make_family("T", 7))
    assert d.r == 7 and d.sizes() == [1] * 7
    t = substitute(make_family("T", 3), [make_family("I", 2), make_family("I", 2), make_family("I", 1)])
    d = kn_free_decompose(t)
    assert d.r == 3 and d.sizes() == [2, 2, 1]
    assert str(d) == "T_3[2,2,1]"
    assert d.j_sizes == (0, 0, 0)


def test_check_converse_K_examples():
    i5 = make_family("I", 5)
    assert check_converse_K(i5, 1, [i5.vertices], 3)
    t = substitute(make_family("T", 3), [make_family("I", 2), make_family("I", 1), make_family("I", 2)])
    assert check_converse_K(t, 3, [0b11, 0b100, 0b11000], 3)
    with pytest.raises(InvalidArgument):
        check_converse_K(t, 3, [0b11, 0b11000, 0b100], 3)
    with pytest.raises(InvalidArgument):
        check_converse_K(make_family("C3"), 1, [0b111], 3)


def test_noKn_examples():
    r = noKn_construct(make_family("I", 16), 4)
    assert r.reason == "N-empty" and r.r == 1
    assert noKn_construct(make_family("C3"), 4).reason == "below-threshold"
    r = noKn_construct(make_family("C3"), 4, threshold=0)
    assert r.r in (1, 3)
    with pytest.raises(InvalidArgument):
        noKn_construct(make_family("K", 5), 5)


def test_noKn_no_internal_error_up_to_7():
    for n in range(1, 8):
        for t in enumerate_canonical(n):
            if not _free_of(t, [Pattern.K, Pattern.KSTAR], 4):
                continue
            r = noKn_construct(t, 4, threshold=0)
            if r.reason == "weave":
                cover = 0
                for b in r.layout():
                    assert b and not cover & b
                    cover |= b
                assert cover == t.vertices


def test_noKn_reports_failed_claim():
    # a K5-free input that is too small for the construction's claims to hold
    failures = 0
    for t in enumerate_canonical(7):
        if _free_of(t, [Pattern.K, Pattern.KSTAR], 5):
            try:
                noKn_construct(t, 5, threshold=0)
            except InternalError:
                failures += 1
    assert failures > 0
