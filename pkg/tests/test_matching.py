from itertools import permutations

import pytest
from hypothesis import given, settings

import oracles
from strategies import tournaments
from tournaments.core import InvalidArgument, Tournament, all_labelled, canonical_code, induce, make_family
from tournaments.harness import enumerate_canonical
from tournaments.matching import (
    apply_perm,
    compose,
    count_matching_orderings,
    cycles,
    decompose_ordering_pair,
    enumerate_matching_orderings,
    find_matching_ordering,
    is_matching_ordering,
    is_matching_tournament,
    is_minimal_non_matching,
    matching_report,
    minimal_non_matching_up_to,
    pi1,
    pi2,
    sigma_inverse,
    sigma_perm,
    tau_perm,
)


def test_is_matching_ordering_examples():
    assert is_matching_ordering(make_family("I", 6), range(6))
    assert not is_matching_ordering(make_family("P", 4), range(4))
    assert is_matching_ordering(make_family("P", 9), apply_perm(list(range(9)), pi1(9)))
    assert is_matching_ordering(make_family("P", 9), apply_perm(list(range(9)), pi2(9)))


def test_find_examples():
    assert find_matching_ordering(make_family("C3")) is not None
    q7 = make_family("Q", 7)
    assert find_matching_ordering(q7) is None
    for v in range(7):
        assert is_matching_tournament(q7, q7.vertices & ~(1 << v))
        assert find_matching_ordering(induce(q7, q7.vertices & ~(1 << v))) is not None


def test_fibonacci_counts_for_transitive():
    assert [count_matching_orderings(make_family("I", n)) for n in range(1, 10)] == [
        1, 2, 3, 5, 8, 13, 21, 34, 55
    ]


def test_counts_for_P():
    assert [count_matching_orderings(make_family("P", n)) for n in range(1, 9)] == [1, 2, 3, 3, 2, 2, 2, 2]


@settings(max_examples=60)
@given(tournaments(max_n=7))
def test_enumeration_matches_all_permutations(t):
    ref = oracles.matching_orderings(t)
    got = enumerate_matching_orderings(t)
    assert got == sorted(ref)
    assert count_matching_orderings(t) == len(ref)
    assert (find_matching_ordering(t) is None) == (not ref)


def test_report_limits_witnesses():
    rep = matching_report(make_family("I", 6), limit=3)
    assert rep.count == 13 and len(rep.witnesses) == 3


def test_permutation_shapes():
    # 0-based run 0..4 is the 1-based cycle (1 3 5 4 2)
    assert sigma_perm(range(5)) == {0: 2, 2: 4, 4: 3, 3: 1, 1: 0}
    assert sigma_perm([3]) == {3: 3}
    assert tau_perm(range(4)) == {0: 2, 2: 0, 1: 3, 3: 1}
    assert sigma_inverse(range(5))[2] == 0
    with pytest.raises(InvalidArgument):
        tau_perm(range(5))
    with pytest.raises(InvalidArgument):
        sigma_perm([1, 3])


@pytest.mark.parametrize("n", range(2, 10))
def test_sigma_is_pi1_then_pi2(n):
    s = sigma_perm(range(n))
    assert compose(pi1(n), pi2(n)) == tuple(s[i] for i in range(n))


def test_tau_is_pi2_pi1_pi2():
    t = tau_perm(range(4))
    assert compose(compose(pi2(4), pi1(4)), pi2(4)) == tuple(t[i] for i in range(4))


def test_cycles():
    assert cycles((1, 0, 2)) == [[0, 1], [2]]


def test_decompose_pair_examples():
    t = make_family("I", 5)
    d = decompose_ordering_pair(t, list(range(5)), tuple(range(5)))
    assert all(b.sigma_kind == "identity" for b in d.blocks) and len(d.blocks) == 5
    d = decompose_ordering_pair(make_family("I", 2), [0, 1], (1, 0))
    assert len(d.blocks) == 1 and d.blocks[0].h_kind == "transitive"
    assert d.blocks[0].sigma_kind in ("sigma", "sigma_inv")
    p = make_family("P", 6)
    o = apply_perm(list(range(6)), pi1(6))
    d = decompose_ordering_pair(p, o, compose(pi2(6), pi1(6)))
    assert apply_perm(o, compose(pi2(6), pi1(6))) == apply_perm(list(range(6)), pi2(6))
    assert [b.h_kind for b in d.blocks] == ["P"]


def test_decompose_pair_rejects_non_matching():
    p4 = make_family("P", 4)
    with pytest.raises(InvalidArgument):
        decompose_ordering_pair(p4, [0, 1, 2, 3], (0, 1, 2, 3))
    with pytest.raises(InvalidArgument):
        decompose_ordering_pair(make_family("I", 3), [0, 1, 2], (0, 0, 1))


def test_decompose_pair_exhaustive_n_le_5():
    for n in range(1, 6):
        for t in all_labelled(n):
            orders = enumerate_matching_orderings(t)
            pos = {tuple(o): o for o in orders}
            for o in orders:
                for o2 in orders:
                    where = {v: i for i, v in enumerate(o)}
                    pi = tuple(where[v] for v in o2)
                    assert apply_perm(o, pi) == o2
                    d = decompose_ordering_pair(t, o, pi)
                    assert d.perm() == pi
            assert len(pos) == len(orders)


def test_minimal_non_matching():
    assert is_minimal_non_matching(make_family("Q", 7))
    assert is_minimal_non_matching(make_family("Q", 9))
    assert not is_minimal_non_matching(make_family("I", 4))
    found = minimal_non_matching_up_to(7)
    assert canonical_code(make_family("Q", 7)) in found
    for code in found:
        assert is_minimal_non_matching(Tournament.from_line(code.decode()))
    small = [t for n in (3, 4) for t in enumerate_canonical(n) if not oracles.matching_orderings(t)]
    assert [c for c in found if int(c.split(b":")[0]) <= 4] == [canonical_code(t) for t in small]
    with pytest.raises(InvalidArgument):
        minimal_non_matching_up_to(9)


def test_prop_positions_small():
    for t in enumerate_canonical(6):
        indeg = [t.indegree(v) for v in range(t.n)]
        for o in enumerate_matching_orderings(t):
            for p, v in enumerate(o):
                assert indeg[v] - 1 <= p <= indeg[v] + 1


def test_permutation_helpers_roundtrip():
    for pi in permutations(range(4)):
        o = [10, 11, 12, 13]
        assert sorted(apply_perm(o, pi)) == o
