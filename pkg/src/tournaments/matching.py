"""Matching orderings: orderings whose backedges form a matching.

Positions are 0-based throughout the API.  A vertex with indegree ``b``
can only sit at 1-based position b, b+1 or b+2 of a matching ordering
(head of a backedge, untouched, tail of a backedge respectively), which
is what keeps the backtracking narrow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .core import (
    InternalError,
    InvalidArgument,
    Tournament,
    backedges,
    bits,
    canonical_code,
    check_ordering,
)
from .homog import is_homogeneous

Ordering = list[int]
Perm = tuple[int, ...]


def is_matching_ordering(t: Tournament, order: Sequence[int]) -> bool:
    touched = set()
    for j, i in backedges(t, order):
        if j in touched or i in touched:
            return False
        touched.update((i, j))
    return True


def _search(t: Tournament, within: int | None = None) -> Iterator[Ordering]:
    """All matching orderings of ``t`` (or of ``t[within]``) in lexicographic order."""
    w = t.vertices if within is None else within
    size = w.bit_count()
    indeg = {v: (t.in_mask(v) & w).bit_count() for v in bits(w)}
    # candidates by 0-based position p: indegree p-1 (head), p (free), p+1 (tail)
    by_indeg: dict[int, int] = {}
    for v, b in indeg.items():
        by_indeg[b] = by_indeg.get(b, 0) | 1 << v
    order: list[int] = []

    def rec(placed: int, matched: int) -> Iterator[Ordering]:
        p = len(order)
        if p == size:
            yield list(order)
            return
        pool = 0
        for b in (p - 1, p, p + 1):
            pool |= by_indeg.get(b, 0)
        pool &= ~placed
        for v in bits(pool):
            back = t.out[v] & placed
            # the tail of a backedge sits two past its indegree, everyone else has none going back
            need = 1 if indeg[v] == p - 1 else 0
            if back.bit_count() != need or back & matched:
                continue
            order.append(v)
            yield from rec(placed | 1 << v, matched | back | (1 << v if back else 0))
            order.pop()

    yield from rec(0, 0)


def find_matching_ordering(t: Tournament) -> Ordering | None:
    for order in _search(t):
        return order
    return None


def is_matching_tournament(t: Tournament, within: int | None = None) -> bool:
    for _ in _search(t, within):
        return True
    return False


def enumerate_matching_orderings(t: Tournament) -> list[Ordering]:
    return list(_search(t))


def count_matching_orderings(t: Tournament) -> int:
    return sum(1 for _ in _search(t))


@dataclass(frozen=True)
class MatchingReport:
    count: int
    witnesses: tuple[tuple[int, ...], ...]


def matching_report(t: Tournament, limit: int = 10) -> MatchingReport:
    count = 0
    witnesses = []
    for order in _search(t):
        count += 1
        if len(witnesses) < limit:
            witnesses.append(tuple(order))
    return MatchingReport(count, tuple(witnesses))


# ---------------------------------------------------------------- permutations
#
# A permutation of positions is a dict (or tuple, for 0..n-1) x -> pi(x).
# "pi then sigma" composition is written compose(pi, sigma): apply pi first.
# The ordering obtained from ``order`` by ``pi`` is order[pi(0)], order[pi(1)], ...

def sigma_perm(xs: Sequence[int]) -> dict[int, int]:
    """The cycle (b b+2 b+4 ... a ... b+3 b+1) on a run of consecutive integers."""
    xs = list(xs)
    if not xs or xs != list(range(xs[0], xs[0] + len(xs))):
        raise InvalidArgument("sigma needs a nonempty run of consecutive integers")
    b = xs[0]
    up = xs[0::2]
    down = xs[1::2][::-1]
    cycle = up + down
    perm = {x: x for x in xs}
    if len(cycle) > 1:
        for i, x in enumerate(cycle):
            perm[x] = cycle[(i + 1) % len(cycle)]
    assert perm[b] == (b + 2 if len(xs) > 2 else xs[-1])
    return perm


def sigma_inverse(xs: Sequence[int]) -> dict[int, int]:
    return {v: k for k, v in sigma_perm(xs).items()}


def tau_perm(xs: Sequence[int]) -> dict[int, int]:
    """(b b+2)(b+1 b+3) on four consecutive integers."""
    xs = list(xs)
    if len(xs) != 4 or xs != list(range(xs[0], xs[0] + 4)):
        raise InvalidArgument("tau needs exactly four consecutive integers")
    b = xs[0]
    return {b: b + 2, b + 2: b, b + 1: b + 3, b + 3: b + 1}


def alternating_transpositions(n: int, start: int) -> Perm:
    """Product of the adjacent swaps (i i+1) for i = start, start+2, ... (0-based)."""
    p = list(range(n))
    for i in range(start, n - 1, 2):
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def pi1(n: int) -> Perm:
    """Swap positions (1 2)(3 4)... in 1-based terms."""
    return alternating_transpositions(n, 0)


def pi2(n: int) -> Perm:
    """Swap positions (2 3)(4 5)... in 1-based terms."""
    return alternating_transpositions(n, 1)


def compose(first: Sequence[int] | Mapping[int, int], then: Sequence[int] | Mapping[int, int]) -> Perm:
    n = len(first)
    return tuple(then[first[i]] for i in range(n))


def apply_perm(order: Sequence[int], pi: Sequence[int] | Mapping[int, int]) -> list[int]:
    return [order[pi[i]] for i in range(len(order))]


def cycles(pi: Sequence[int]) -> list[list[int]]:
    seen = set()
    out = []
    for x in range(len(pi)):
        if x in seen:
            continue
        cyc = [x]
        seen.add(x)
        y = pi[x]
        while y != x:
            cyc.append(y)
            seen.add(y)
            y = pi[y]
        out.append(cyc)
    return out


# ---------------------------------------------------------------- pairs of orderings

@dataclass(frozen=True)
class Block:
    """One consecutive run of positions, the cycle type used on it, and what it induces."""

    positions: range
    sigma_kind: str  # "identity", "sigma", "sigma_inv" or "tau"
    h_kind: str  # "transitive" or "P"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]

    def perm(self) -> Perm:
        n = sum(len(b.positions) for b in self.blocks)
        p = list(range(n))
        for b in self.blocks:
            for x, y in _block_perm(b).items():
                p[x] = y
        return tuple(p)


def _block_perm(block: Block) -> dict[int, int]:
    xs = list(block.positions)
    return {
        "identity": lambda: {x: x for x in xs},
        "sigma": lambda: sigma_perm(xs),
        "sigma_inv": lambda: sigma_inverse(xs),
        "tau": lambda: tau_perm(xs),
    }[block.sigma_kind]()


def _is_P_order(t: Tournament, seq: Sequence[int]) -> bool:
    """Does ``seq`` satisfy the definition of P_k: only the consecutive pairs point back?"""
    k = len(seq)
    for i in range(k):
        for j in range(i + 1, k):
            forward = t.beats(seq[i], seq[j])
            if forward == (j == i + 1):
                return False
    return True


def _is_standard_order(t: Tournament, seq: Sequence[int]) -> bool:
    return all(t.beats(seq[i], seq[j]) for i in range(len(seq)) for j in range(i + 1, len(seq)))


def _defining_order(seq: Sequence[int], local: Sequence[int]) -> list[int]:
    """The order D with seq[i] = D[local[i]]."""
    d = [None] * len(seq)
    for i, v in enumerate(seq):
        d[local[i]] = v
    return d


def _block_kind(t: Tournament, seq: Sequence[int], kind: str) -> str | None:
    """h_kind if the block's ordering is the one the cycle type prescribes, else ``None``.

    sigma: ``seq`` is pi2 applied to a defining order; sigma_inv: pi1;
    tau: pi2 or pi2-then-pi1 applied to a defining order of P_4.
    """
    k = len(seq)
    if k == 1:
        return "transitive"
    if k == 2:
        return "transitive"
    if kind == "sigma":
        locals_ = [pi2(k)]
    elif kind == "sigma_inv":
        locals_ = [pi1(k)]
    else:
        locals_ = [pi2(4), compose(pi2(4), pi1(4))]
    for local in locals_:
        d = _defining_order(seq, local)
        if kind != "tau" and _is_standard_order(t, d):
            return "transitive"
        if _is_P_order(t, d):
            return "P"
    return None


def decompose_ordering_pair(t: Tournament, order: Sequence[int], pi: Sequence[int]) -> BlockDecomposition:
    """Split ``pi`` relating two matching orderings into consecutive blocks.

    ``order`` and ``apply_perm(order, pi)`` must both be matching orderings.
    Every block is checked: the product of the block cycles is ``pi``, the
    block's vertices form a homogeneous set, and the block induces a
    transitive tournament or P_k ordered as the cycle type prescribes.
    """
    check_ordering(t, order)
    n = t.n
    if sorted(pi) != list(range(n)):
        raise InvalidArgument("pi is not a permutation of the positions")
    if not is_matching_ordering(t, order) or not is_matching_ordering(t, apply_perm(order, pi)):
        raise InvalidArgument("both orderings must be matching orderings")
    if any(abs(pi[x] - x) > 2 for x in range(n)):
        raise InternalError(f"pi moves a position by more than 2: {pi}")

    spans: dict[int, tuple[list[int], str]] = {}
    owner = {}
    for cyc in cycles(pi):
        for x in cyc:
            owner[x] = tuple(sorted(cyc))
    handled = set()
    for x in range(n):
        key = owner[x]
        if key in handled:
            continue
        xs = list(key)
        if xs == list(range(xs[0], xs[0] + len(xs))):
            handled.add(key)
            if len(xs) == 1:
                kind = "identity"
            elif all(pi[y] == sigma_perm(xs)[y] for y in xs):
                kind = "sigma"
            elif all(pi[y] == sigma_inverse(xs)[y] for y in xs):
                kind = "sigma_inv"
            else:
                raise InternalError(f"cycle {xs} is neither sigma nor its inverse")
            spans[xs[0]] = (xs, kind)
            continue
        if len(xs) != 2 or xs[1] - xs[0] != 2:
            raise InternalError(f"cycle {xs} has an unexpected shape")
        mid = owner[xs[0] + 1]
        union = sorted(set(xs) | set(mid))
        if len(mid) != 2 or union != list(range(union[0], union[0] + 4)):
            raise InternalError(f"distance-2 swap {xs} has no partner swap")
        handled.update((key, mid))
        spans[union[0]] = (union, "tau")

    blocks = []
    for start in sorted(spans):
        xs, kind = spans[start]
        seq = [order[x] for x in xs]
        mask = 0
        for v in seq:
            mask |= 1 << v
        if not is_homogeneous(t, mask):
            raise InternalError(f"block {xs} is not a homogeneous set")
        h_kind = _block_kind(t, seq, kind)
        if h_kind is None:
            raise InternalError(f"block {xs} is not ordered as its cycle type prescribes")
        blocks.append(Block(range(xs[0], xs[-1] + 1), kind, h_kind))
    result = BlockDecomposition(tuple(blocks))
    if result.perm() != tuple(pi):
        raise InternalError("block cycles do not multiply back to pi")
    return result


# ---------------------------------------------------------------- minimality

def is_minimal_non_matching(t: Tournament) -> bool:
    if is_matching_tournament(t):
        return False
    full = t.vertices
    return all(is_matching_tournament(t, full & ~(1 << v)) for v in range(t.n))


def minimal_non_matching_up_to(n: int) -> list[bytes]:
    """Canonical codes of all minimal non-matching tournaments with at most ``n`` vertices."""
    from .harness import enumerate_canonical

    if n > 8:
        raise InvalidArgument("exhaustive search is limited to n <= 8")
    found = []
    for m in range(1, n + 1):
        for t in enumerate_canonical(m):
            if is_minimal_non_matching(t):
                found.append(canonical_code(t))
    return found
