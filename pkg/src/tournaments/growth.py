"""Weaves, the T/U/W families, and growing or shrinking prime subtournaments."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import (
    InternalError,
    InvalidArgument,
    Tournament,
    bits,
    contains_induced,
    induce,
    is_strongly_connected,
    isomorphic,
    make_family,
    members,
    relabel,
    strong_components,
    substitute,
    to_mask,
    transitive_order,
    is_transitive,
)
from .homog import decompose, is_prime


class WeaveType(enum.Enum):
    FF = "FF"
    FB = "FB"
    BF = "BF"
    BB = "BB"

    @property
    def odd_dir(self) -> str:
        return self.value[0]

    @property
    def even_dir(self) -> str:
        return self.value[1]

    def __str__(self) -> str:
        return self.value


def _class_direction(t: Tournament, seq: Sequence[int]) -> set[str]:
    """Directions ("F"/"B") under which ``seq`` is uniformly oriented."""
    dirs = set()
    if all(t.beats(seq[i], seq[j]) for i, j in combinations(range(len(seq)), 2)):
        dirs.add("F")
    if all(t.beats(seq[j], seq[i]) for i, j in combinations(range(len(seq)), 2)):
        dirs.add("B")
    return dirs


def classify_weave(t: Tournament, order: Sequence[int]) -> frozenset[WeaveType]:
    """Every weave type the ordered vertices satisfy; empty if it is no weave.

    Parity is by 1-based position: ``order[0]`` is w_1, an odd position.
    ``order`` may be any list of distinct vertices of ``t``.
    """
    n = len(order)
    for i, j in combinations(range(n), 2):
        if (j - i) % 2 and not t.beats(order[i], order[j]):
            return frozenset()
    odd = _class_direction(t, order[0::2])
    even = _class_direction(t, order[1::2])
    return frozenset(WeaveType(a + b) for a in odd for b in even)


def make_weave(n: int, wtype: WeaveType | str) -> Tournament:
    """The weave <w_1..w_n> of the given type, vertex i = w_{i+1}."""
    wtype = WeaveType(str(wtype))

    def rel(i, j):
        if (j - i) % 2:
            return True
        direction = wtype.odd_dir if i % 2 == 0 else wtype.even_dir
        return direction == "F"

    return Tournament.from_relation(n, rel)


def make_weave_plus(n: int, wtype: WeaveType | str) -> Tournament:
    """Weave of size ``n`` plus a vertex ``n`` beating odd and losing to even positions."""
    w = make_weave(n, wtype)
    out = list(w.out) + [0]
    for i in range(n):
        if i % 2 == 0:
            out[n] |= 1 << i
        else:
            out[i] |= 1 << n
    return Tournament(tuple(out))


# ---------------------------------------------------------------- T, U, W

_TUW = ("T", "U", "W")


def recognize_TUW(t: Tournament) -> tuple[str, int] | None:
    """(family, n) if ``t`` is isomorphic to T_n, U_n or W_n; T wins ties at n <= 3."""
    n = t.n
    if n % 2 == 0:
        return None
    for kind in _TUW:
        if isomorphic(make_family(kind, n), t) is not None:
            return kind, n
    return None


_WEAVE_PLUS_FAMILY = {WeaveType.BB: "T", WeaveType.FB: "U", WeaveType.BF: "U", WeaveType.FF: "W"}


def recognize_TUW_by_weave(t: Tournament) -> tuple[str, int] | None:
    """Same question answered by writing ``t`` as an even weave plus one vertex.

    The extra vertex v fixes the parity classes (odd positions are its
    out-neighbours), each class must be transitive, and only four
    interleavings remain per choice of v.
    """
    n = t.n
    if n % 2 == 0:
        return None
    if n == 1:
        return "T", 1
    found = set()
    for v in range(n):
        odd_set, even_set = t.out[v], t.in_mask(v)
        if odd_set.bit_count() != even_set.bit_count():
            continue
        if not (is_transitive(t, odd_set) and is_transitive(t, even_set)):
            continue
        odd_f = transitive_order(t, odd_set)
        even_f = transitive_order(t, even_set)
        for odd in (odd_f, odd_f[::-1]):
            for even in (even_f, even_f[::-1]):
                order = [x for pair in zip(odd, even) for x in pair]
                for wt in classify_weave(t, order):
                    found.add(_WEAVE_PLUS_FAMILY[wt])
    for kind in _TUW:
        if kind in found:
            return kind, n
    return None


# ---------------------------------------------------------------- growing

def _check_prime_pair(g: Tournament, h: int) -> None:
    if h & ~g.vertices or not h:
        raise InvalidArgument("h must be a nonempty vertex set of g")
    if not is_prime(g):
        raise InvalidArgument("g is not prime")
    if not is_prime(g, h):
        raise InvalidArgument("the subtournament on h is not prime")


def grow_by_two(g: Tournament, h: int) -> tuple[int, int]:
    """Lexicographically least pair u < v outside ``h`` with g[h + {u, v}] prime."""
    _check_prime_pair(g, h)
    if not 3 <= h.bit_count() <= g.n - 2:
        raise InvalidArgument("need 3 <= |h| <= |g| - 2")
    outside = members(g.vertices & ~h)
    for u, v in combinations(outside, 2):
        if is_prime(g, h | 1 << u | 1 << v):
            return u, v
    raise InternalError(f"no prime extension by two vertices of {members(h)} in {g}")


def cyclic_triangle(t: Tournament) -> int | None:
    """Lexicographically first cyclic triangle as a mask."""
    for a in range(t.n):
        for b in bits(t.out[a]):
            closing = t.out[b] & t.in_mask(a)
            if closing:
                c = (closing & -closing).bit_length() - 1
                return 1 << a | 1 << b | 1 << c
    return None


def find_prime5(g: Tournament) -> int:
    """A 5-vertex prime subtournament, grown from a cyclic triangle."""
    if g.n < 5:
        raise InvalidArgument("g needs at least 5 vertices")
    if not is_prime(g):
        raise InvalidArgument("g is not prime")
    tri = cyclic_triangle(g)
    if tri is None:
        raise InternalError("prime tournament without a cyclic triangle")
    u, v = grow_by_two(g, tri)
    return tri | 1 << u | 1 << v


def grow_by_one(g: Tournament, h: int) -> int:
    """A prime (|h|+1)-set of ``g`` containing an induced copy of g[h].

    Supersets of ``h`` are tried first, then all other subsets in
    lexicographic order.
    """
    _check_prime_pair(g, h)
    k = h.bit_count()
    if not 5 <= k <= g.n - 1:
        raise InvalidArgument("need 5 <= |h| <= |g| - 1")
    if recognize_TUW(g) is not None:
        raise InvalidArgument("g is one of T_n, U_n, W_n")
    pattern = induce(g, h)
    for u in bits(g.vertices & ~h):
        s = h | 1 << u
        if is_prime(g, s):
            return s
    for combo in combinations(range(g.n), k + 1):
        s = to_mask(combo)
        if s & h == h:
            continue
        if is_prime(g, s) and contains_induced(g, pattern, within=s) is not None:
            return s
    raise InternalError(f"no one-vertex prime growth of {members(h)} in {g}")


def shrink_prime(g: Tournament, k: int) -> int | None:
    """First (|g|-k)-subset (lexicographic) inducing a prime tournament, or ``None``."""
    if k not in (1, 2):
        raise InvalidArgument("k must be 1 or 2")
    if not is_prime(g):
        raise InvalidArgument("g is not prime")
    size = g.n - k
    if size < 1:
        return None
    for combo in combinations(range(g.n), size):
        s = to_mask(combo)
        if is_prime(g, s):
            return s
    return None


# ---------------------------------------------------------------- D4-free

@dataclass(frozen=True)
class D4Structure:
    """Outcome of ``d4_classify``.

    ``form`` 1 means T_r(I^1..I^r); 2 means I_2(T_r(I^1..I^r), I) with
    ``tail`` the trailing transitive part; ``None`` means a D_4 was found
    and ``witness`` holds its vertices.  Blocks list their vertices
    source-first and follow the vertex order of ``make_family("T", r)``.
    """

    form: int | None
    r: int = 0
    blocks: tuple[tuple[int, ...], ...] = ()
    tail: tuple[int, ...] = ()
    witness: int | None = None

    def order(self) -> list[int]:
        return [v for b in self.blocks for v in b] + list(self.tail)

    def model(self) -> Tournament:
        """The substitution this structure describes, numbered like ``order()``."""
        inner = substitute(make_family("T", self.r), [make_family("I", len(b)) for b in self.blocks])
        if self.form == 2:
            return substitute(make_family("I", 2), [inner, make_family("I", len(self.tail))])
        return inner

    def matches(self, t: Tournament) -> bool:
        return self.form is not None and relabel(t, self.order()) == self.model()


def _t_blocks(t: Tournament, w: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """T_r quotient and transitive blocks of a D4-free vertex set ``w``."""
    if w.bit_count() <= 2 or is_transitive(t, w):
        return 1, (tuple(transitive_order(t, w)),)
    sub = induce(t, w)
    tree = decompose(sub)
    r = tree.quotient.n
    phi = isomorphic(make_family("T", r), tree.quotient)
    if phi is None:
        raise InternalError("D4-free strongly connected tournament with a non-T quotient")
    vs = members(w)
    blocks = []
    for i in range(r):
        span = tree.children[phi[i]].span
        block = to_mask(vs[x] for x in bits(span))
        if not is_transitive(t, block):
            raise InternalError("D4-free tournament with a non-transitive block")
        blocks.append(tuple(transitive_order(t, block)))
    return r, tuple(blocks)


def d4_classify(t: Tournament) -> D4Structure:
    witness = contains_induced(t, make_family("D4"))
    if witness is not None:
        return D4Structure(form=None, witness=witness)
    if is_transitive(t) or is_strongly_connected(t):
        r, blocks = _t_blocks(t, t.vertices)
        return D4Structure(form=1, r=r, blocks=blocks)
    comps = strong_components(t)
    # trailing singleton components form the largest possible transitive tail
    cut = len(comps)
    while cut > 0 and comps[cut - 1].bit_count() == 1:
        cut -= 1
    if cut != 1:
        raise InternalError("D4-free tournament whose head is not strongly connected")
    tail_mask = 0
    for c in comps[cut:]:
        tail_mask |= c
    r, blocks = _t_blocks(t, comps[0])
    return D4Structure(form=2, r=r, blocks=blocks, tail=tuple(transitive_order(t, tail_mask)))
