"""Excluding the almost-transitive patterns J_n, K_n and K_n*.

J_n: a transitive tournament on v_1..v_n with only v_n -> v_1 reversed.
K_n: only v_n -> v_2 reversed, i.e. a vertex whose out-neighbourhood holds a J_{n-1}.
K_n*: only v_{n-1} -> v_1 reversed, i.e. a vertex whose in-neighbourhood holds a J_{n-1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .core import (
    InternalError,
    InvalidArgument,
    Tournament,
    bits,
    check_ordering,
    isomorphic,
    make_family,
    max_backedge_length,
    members,
    relabel,
    transitive_order,
)
from .homog import decompose


class Pattern(enum.Enum):
    J = "J"
    K = "K"
    KSTAR = "Kstar"


@dataclass(frozen=True)
class PatternKind:
    kind: Pattern
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Pattern(self.kind))
        if self.n < 3:
            raise InvalidArgument("pattern size must be at least 3")

    def build(self) -> Tournament:
        """The pattern itself on v_1..v_n (vertex i = v_{i+1})."""
        n = self.n
        rev = {Pattern.J: (n - 1, 0), Pattern.K: (n - 1, 1), Pattern.KSTAR: (n - 2, 0)}[self.kind]
        return Tournament.from_relation(n, lambda i, j: (j, i) != rev)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.n}"


# ---------------------------------------------------------------- search

def _transitive_of_size(t: Tournament, cand: int, k: int) -> int | None:
    """A k-subset of ``cand`` inducing a transitive tournament, picked source first."""
    if k <= 0:
        return 0
    if cand.bit_count() < k:
        return None
    for v in bits(cand):
        rest = _transitive_of_size(t, cand & t.out[v], k - 1)
        if rest is not None:
            return rest | 1 << v
    return None


def _find_J(t: Tournament, m: int, within: int) -> int | None:
    """Witness for J_m inside ``within``; m = 2 means any edge."""
    for a in bits(within):
        for b in bits(within & t.in_mask(a)):
            # b -> a is the reversed edge; the chain goes a -> chain -> b
            chain = _transitive_of_size(t, within & t.out[a] & t.in_mask(b), m - 2)
            if chain is not None:
                return chain | 1 << a | 1 << b
    return None


def has_pattern(t: Tournament, p: PatternKind, within: int | None = None) -> int | None:
    """Vertex set inducing the pattern, or ``None``."""
    w = t.vertices if within is None else within
    if p.kind is Pattern.J:
        return _find_J(t, p.n, w)
    for v in bits(w):
        side = t.out[v] if p.kind is Pattern.K else t.in_mask(v)
        found = _find_J(t, p.n - 1, w & side)
        if found is not None:
            return found | 1 << v
    return None


def largest_J(t: Tournament, within: int | None = None) -> int:
    """Largest m >= 3 with J_m present, 0 if the tournament is transitive."""
    w = t.vertices if within is None else within
    m = 2
    while m < w.bit_count() and _find_J(t, m + 1, w) is not None:
        m += 1
    return m if m >= 3 else 0


def max_transitive_subset(t: Tournament, within: int | None = None) -> int:
    """A largest vertex set inducing a transitive tournament."""
    w = t.vertices if within is None else within
    memo: dict[int, int] = {0: 0}

    def best(c: int) -> int:
        if c in memo:
            return memo[c]
        top = 0
        for v in bits(c):
            if top.bit_count() >= c.bit_count():
                break
            sub = best(c & t.out[v]) | 1 << v
            if sub.bit_count() > top.bit_count():
                top = sub
        memo[c] = top
        return top

    return best(w)


def _suborder_max_length(t: Tournament, order: Sequence[int]) -> int:
    """Longest backedge of an ordering of any subset of the vertices."""
    longest = 0
    for j, v in enumerate(order):
        for i in range(j - longest - 1, -1, -1):
            if t.beats(v, order[i]):
                longest = j - i
    return longest


# ---------------------------------------------------------------- J_n-free orderings

@dataclass(frozen=True)
class BucketOrdering:
    """Output of the bucket construction around a maximum transitive set.

    ``spine`` is u_1..u_m (source first), ``buckets[a]`` lists the outside
    vertices with a_v = a (0-based spine index), ``spread[v]`` is b_v - a_v.
    """

    order: tuple[int, ...]
    spine: tuple[int, ...]
    buckets: dict[int, tuple[int, ...]]
    spread: dict[int, int]
    max_length: int


def _bucket_ordering(t: Tournament, n: int, spine: list[int], outside: Sequence[int]) -> BucketOrdering:
    index = {u: i for i, u in enumerate(spine)}
    buckets: dict[int, list[int]] = {}
    spread = {}
    for v in outside:
        ahead = [index[u] for u in bits(t.out[v]) if u in index]
        behind = [index[u] for u in bits(t.in_mask(v)) if u in index]
        if not ahead or not behind:
            raise InternalError(f"vertex {v} extends the maximum transitive set")
        a_v, b_v = min(ahead), max(behind)
        if not a_v < b_v:
            raise InternalError(f"vertex {v}: a_v={a_v} is not below b_v={b_v}")
        if not b_v - a_v < 2 * n:
            raise InternalError(f"vertex {v}: b_v - a_v = {b_v - a_v} is not below {2 * n}")
        buckets.setdefault(a_v, []).append(v)
        spread[v] = b_v - a_v
    for a, xs in buckets.items():
        if len(xs) > 2 ** (2 * n):
            raise InternalError(f"bucket {a} holds {len(xs)} > 2^{2 * n} vertices")
    order = []
    for i, u in enumerate(spine):
        order.append(u)
        order.extend(sorted(buckets.get(i, ())))
    length = _suborder_max_length(t, order)
    if length > 10 * n * 2 ** (2 * n):
        raise InternalError(f"backedge of length {length} exceeds 10n*2^(2n)")
    return BucketOrdering(
        tuple(order),
        tuple(spine),
        {a: tuple(sorted(xs)) for a, xs in sorted(buckets.items())},
        spread,
        length,
    )


def bucket_construction(t: Tournament, n: int) -> BucketOrdering:
    """Full record of the bounded-backedge construction for a J_n-free tournament."""
    if n < 3:
        raise InvalidArgument("pattern size must be at least 3")
    if has_pattern(t, PatternKind(Pattern.J, n)) is not None:
        raise InvalidArgument(f"tournament contains J_{n}")
    spine = transitive_order(t, max_transitive_subset(t))
    outside = members(t.vertices & ~sum(1 << u for u in spine))
    return _bucket_ordering(t, n, spine, outside)


def bounded_backedge_ordering(t: Tournament, n: int) -> tuple[list[int], int]:
    """An ordering of a J_n-free tournament with short backedges, and its longest backedge."""
    b = bucket_construction(t, n)
    return list(b.order), b.max_length


def check_converse_J(t: Tournament, order: Sequence[int], k: int, pattern_size: int | None = None) -> bool:
    """With every backedge of ``order`` at most ``k`` long, is J_{10k} absent?

    ``pattern_size`` overrides 10k; position counting already rules out
    J_{3k+2}, which makes a much sharper check at small sizes.
    """
    check_ordering(t, order)
    if k < 1:
        raise InvalidArgument("k must be positive")
    if max_backedge_length(t, order) > k:
        raise InvalidArgument(f"ordering has a backedge longer than {k}")
    size = 10 * k if pattern_size is None else pattern_size
    if size > t.n:
        return True
    return has_pattern(t, PatternKind(Pattern.J, size)) is None


# ---------------------------------------------------------------- T_r structure

@dataclass(frozen=True)
class StructureDecomposition:
    """t written as T_r(H_1..H_r); ``j_sizes[i]`` is the largest J_m in part i (0 if none)."""

    r: int
    parts: tuple[int, ...]
    j_sizes: tuple[int, ...]

    def sizes(self) -> list[int]:
        return [p.bit_count() for p in self.parts]

    def __str__(self) -> str:
        return f"T_{self.r}[{','.join(map(str, self.sizes()))}]"


def _check_T_substitution(t: Tournament, r: int, parts: Sequence[int]) -> None:
    if r < 1 or r % 2 == 0:
        raise InvalidArgument("r must be odd and positive")
    if len(parts) != r:
        raise InvalidArgument("need exactly r parts")
    seen = 0
    for p in parts:
        if not p or p & seen:
            raise InvalidArgument("parts must be nonempty and disjoint")
        seen |= p
    if seen != t.vertices:
        raise InvalidArgument("parts must cover every vertex")
    model = make_family("T", r)
    for i in range(r):
        for j in range(r):
            if i != j and model.beats(i, j):
                for v in bits(parts[i]):
                    if t.out[v] & parts[j] != parts[j]:
                        raise InvalidArgument(f"part {i} does not beat part {j}")


def kn_free_decompose(t: Tournament) -> StructureDecomposition:
    """The T_r substitution with the largest r, read off the top decomposition node."""
    tree = decompose(t)
    q = tree.quotient
    if q is not None and q.n >= 3:
        phi = isomorphic(make_family("T", q.n), q)
        if phi is not None:
            parts = tuple(tree.children[phi[i]].span for i in range(q.n))
            return StructureDecomposition(q.n, parts, tuple(largest_J(t, p) for p in parts))
    return StructureDecomposition(1, (t.vertices,), (largest_J(t),))


def check_converse_K(t: Tournament, r: int, parts: Sequence[int], k: int) -> bool:
    """Given t = T_r(parts) with J_k-free parts, are K_{k+1} and K*_{k+1} both absent?"""
    if k < 3:
        raise InvalidArgument("k must be at least 3")
    _check_T_substitution(t, r, parts)
    for p in parts:
        if _find_J(t, k, p) is not None:
            raise InvalidArgument(f"part {members(p)} contains J_{k}")
    return all(
        has_pattern(t, PatternKind(kind, k + 1)) is None for kind in (Pattern.K, Pattern.KSTAR)
    )


@dataclass(frozen=True)
class NoKnResult:
    """Outcome of ``noKn_construct``.

    ``reason`` is "below-threshold", "N-empty" or "weave".  For "weave" the
    blocks in ``layout()`` order are M_1, N_1, M_2, ..., N_p, M_{p+1} and
    the quotient over them is T_r with r = 2p + 1.
    """

    reason: str
    r: int
    m_order: tuple[int, ...] = ()
    max_length: int = 0
    m_parts: tuple[int, ...] = ()
    n_parts: tuple[int, ...] = ()

    def layout(self) -> list[int]:
        out = []
        for i, m in enumerate(self.m_parts):
            out.append(m)
            if i < len(self.n_parts):
                out.append(self.n_parts[i])
        return out


def _all_beat(t: Tournament, xs: int, ys: int) -> bool:
    return all(t.out[x] & ys == ys for x in bits(xs))


def noKn_construct(t: Tournament, n: int, threshold: int = 4) -> NoKnResult:
    """Run the two-step weave construction on a K_n- and K_n*-free tournament.

    Inputs with fewer than 2**threshold vertices take the r = 1 branch
    without further work.  Every intermediate claim is checked and a
    failure raises ``InternalError`` naming the offending vertices.
    """
    if n < 3:
        raise InvalidArgument("pattern size must be at least 3")
    for kind in (Pattern.K, Pattern.KSTAR):
        if has_pattern(t, PatternKind(kind, n)) is not None:
            raise InvalidArgument(f"tournament contains {kind.value}_{n}")
    if t.n < 2 ** threshold:
        return NoKnResult("below-threshold", 1)

    spine = transitive_order(t, max_transitive_subset(t))
    first, last = spine[0], spine[-1]
    spine_mask = sum(1 << u for u in spine)
    x_set = [v for v in bits(t.vertices & ~spine_mask) if t.beats(first, v) or t.beats(v, last)]
    rest = t.vertices & ~spine_mask & ~sum(1 << v for v in x_set)

    step1 = _bucket_ordering(t, n, spine, x_set)
    m_mask = t.vertices & ~rest
    if not rest:
        return NoKnResult("N-empty", 1, step1.order, step1.max_length)

    # each outside vertex splits M into A_w before B_w
    classes: dict[int, int] = {}
    for w in bits(rest):
        a_w = t.out[w] & m_mask
        b_w = m_mask & ~a_w
        if not _all_beat(t, a_w, b_w):
            raise InternalError(f"vertex {w}: its out-set in M does not beat its in-set in M")
        classes[a_w] = classes.get(a_w, 0) | 1 << w
    chain = sorted(classes, key=int.bit_count)
    for lo, hi in zip(chain, chain[1:]):
        if lo & ~hi:
            raise InternalError(f"out-sets {members(lo)} and {members(hi)} are not nested")
    n_parts = [classes[a] for a in chain]
    m_parts = [chain[0]] + [hi & ~lo for lo, hi in zip(chain, chain[1:])] + [m_mask & ~chain[-1]]
    if not all(m_parts):
        raise InternalError("an M block is empty")
    p = len(n_parts)
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            if not _all_beat(t, m_parts[i], m_parts[j]):
                raise InternalError(f"M_{i + 1} does not beat M_{j + 1}")
    for i in range(p):
        for j in range(i + 1, p):
            if not _all_beat(t, n_parts[i], n_parts[j]):
                raise InternalError(f"N_{i + 1} does not beat N_{j + 1}")
        for j in range(p + 1):
            if j <= i and not _all_beat(t, n_parts[i], m_parts[j]):
                raise InternalError(f"N_{i + 1} does not beat M_{j + 1}")
            if j > i and not _all_beat(t, m_parts[j], n_parts[i]):
                raise InternalError(f"M_{j + 1} does not beat N_{i + 1}")

    result = NoKnResult("weave", 2 * p + 1, step1.order, step1.max_length, tuple(m_parts), tuple(n_parts))
    blocks = result.layout()
    quotient = relabel(t, [(b & -b).bit_length() - 1 for b in blocks])
    expected = Tournament.from_relation(len(blocks), lambda i, j: (i % 2 == j % 2) == (i < j))
    if quotient != expected or isomorphic(make_family("T", len(blocks)), quotient) is None:
        raise InternalError("block quotient is not T_{2p+1}")
    return result
