"""Homogeneous sets (modules), primality and substitution decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .core import (
    InternalError,
    InvalidArgument,
    Tournament,
    bits,
    induce,
    is_strongly_connected,
    members,
    relabel,
    strong_components,
    substitute,
)


def is_homogeneous(t: Tournament, x: int, within: int | None = None) -> bool:
    """True iff every vertex of ``within`` outside ``x`` sees ``x`` uniformly.

    ``within`` defaults to all of ``t``; passing a mask asks the question in
    the subtournament induced on it.
    """
    w = t.vertices if within is None else within
    if x & ~w:
        raise InvalidArgument("set is not inside the tournament")
    for v in bits(w & ~x):
        hit = t.out[v] & x
        if hit and hit != x:
            return False
    return True


def module_closure(t: Tournament, seed: int, within: int | None = None) -> int:
    """Smallest homogeneous set of ``t[within]`` containing ``seed``."""
    w = t.vertices if within is None else within
    x = seed
    while True:
        grow = 0
        for v in bits(w & ~x):
            hit = t.out[v] & x
            if hit and hit != x:
                grow |= 1 << v
        if not grow:
            return x
        x |= grow


def is_prime(t: Tournament, within: int | None = None) -> bool:
    w = t.vertices if within is None else within
    if w.bit_count() <= 2:
        return True
    vs = members(w)
    for a, b in combinations(vs, 2):
        if module_closure(t, 1 << a | 1 << b, w) != w:
            return False
    return True


def find_nontrivial_module(t: Tournament, within: int | None = None) -> int | None:
    """Smallest nontrivial module, ties broken by the sorted vertex list; else ``None``."""
    w = t.vertices if within is None else within
    best = None
    best_key = None
    for a, b in combinations(members(w), 2):
        x = module_closure(t, 1 << a | 1 << b, w)
        if x == w:
            continue
        key = (x.bit_count(), members(x))
        if best_key is None or key < best_key:
            best, best_key = x, key
    return best


def all_modules(t: Tournament, within: int | None = None) -> Iterator[int]:
    """Every nontrivial module by subset scan; exponential, meant for small checks."""
    w = t.vertices if within is None else within
    vs = members(w)
    for r in range(2, len(vs)):
        for combo in combinations(vs, r):
            x = 0
            for v in combo:
                x |= 1 << v
            if is_homogeneous(t, x, w):
                yield x


# ---------------------------------------------------------------- decomposition

@dataclass(frozen=True)
class DecompositionTree:
    """Substitution tree: ``quotient(children...)`` over the vertices in ``span``.

    Leaves have ``quotient=None`` and a single-vertex span.  Children are
    listed in the quotient's vertex order.
    """

    span: int
    quotient: Tournament | None = None
    children: tuple["DecompositionTree", ...] = field(default=())

    @property
    def is_leaf(self) -> bool:
        return self.quotient is None

    def recompose(self) -> tuple[Tournament, list[int]]:
        """Rebuild the tournament by substitution; also return the vertex order used."""
        if self.is_leaf:
            return Tournament((0,)), members(self.span)
        parts = []
        order: list[int] = []
        for child in self.children:
            h, o = child.recompose()
            parts.append(h)
            order.extend(o)
        return substitute(self.quotient, parts), order

    def to_text(self, base: int = 0) -> str:
        """Nested ``(quotient-line: child, ...)``; leaves print as vertex id plus ``base``."""
        if self.is_leaf:
            return str(members(self.span)[0] + base)
        inner = ", ".join(c.to_text(base) for c in self.children)
        return f"({self.quotient.to_line()}: {inner})"

    def __str__(self) -> str:
        return self.to_text()


def _maximal_modules(t: Tournament, w: int) -> list[int]:
    """Partition of a strongly connected, decomposable ``t[w]`` into maximal proper modules."""
    blocks: list[int] = []
    covered = 0
    vs = members(w)
    for v in vs:
        if covered >> v & 1:
            continue
        block = 1 << v
        for u in vs:
            if u == v:
                continue
            x = module_closure(t, 1 << v | 1 << u, w)
            if x != w:
                block |= x
        if block & covered:
            raise InternalError("maximal modules of a strongly connected tournament overlap")
        blocks.append(block)
        covered |= block
    return blocks


def _decompose(t: Tournament, w: int) -> DecompositionTree:
    size = w.bit_count()
    if size == 1:
        return DecompositionTree(span=w)
    if is_prime(t, w):
        blocks = [1 << v for v in bits(w)]
    else:
        sub = induce(t, w)
        if not is_strongly_connected(sub):
            # linear node: first strong component, then everything after it
            comps = strong_components(sub)
            vs = members(w)
            first = 0
            for i in bits(comps[0]):
                first |= 1 << vs[i]
            blocks = [first, w & ~first]
        else:
            blocks = sorted(_maximal_modules(t, w), key=lambda b: (b & -b))
    reps = [(b & -b).bit_length() - 1 for b in blocks]
    quotient = relabel(t, reps)
    if len(blocks) >= 3 and not is_prime(quotient):
        raise InternalError("quotient over maximal modules is not prime")
    children = tuple(_decompose(t, b) for b in blocks)
    return DecompositionTree(span=w, quotient=quotient, children=children)


def decompose(t: Tournament) -> DecompositionTree:
    """Recursive decomposition G'(H_1, ..., H_k) with a prime quotient at every node.

    Strongly connected inputs split into their maximal proper modules.  Other
    inputs use quotient I_2 with blocks (first strong component, the rest).
    """
    return _decompose(t, t.vertices)


# ---------------------------------------------------------------- vertex classes

@dataclass(frozen=True)
class VertexClass:
    kind: str  # "Ext", "Z" or "Vx"
    anchor: int | None = None

    def __str__(self) -> str:
        return f"V_{self.anchor}" if self.kind == "Vx" else self.kind


def classify_vertex(g: Tournament, h: int, v: int) -> VertexClass:
    """Place an outside vertex ``v`` relative to a prime subtournament ``g[h]``.

    Ext: g[h + v] is prime.  Z: h is a module of g[h + v].  Vx(x): {v, x} is.
    """
    if h.bit_count() < 3:
        raise InvalidArgument("the subtournament needs at least 3 vertices")
    if h & ~g.vertices or not 0 <= v < g.n or h >> v & 1:
        raise InvalidArgument("v must be a vertex of g outside h")
    if not is_prime(g, h):
        raise InvalidArgument("the subtournament on h is not prime")
    hv = h | 1 << v
    if is_prime(g, hv):
        return VertexClass("Ext")
    if is_homogeneous(g, h, hv):
        return VertexClass("Z")
    for x in bits(h):
        if is_homogeneous(g, 1 << v | 1 << x, hv):
            return VertexClass("Vx", x)
    raise InternalError("vertex fits none of Ext, Z, V_x")
