"""Tournament representation and the primitives everything else builds on.

A tournament on ``n`` vertices is stored as one out-neighbour bit mask per
vertex (``out[v]`` has bit ``u`` set iff ``v -> u``).  Vertex sets are plain
``int`` bit masks.  All values are immutable.

Line format: ``n:<bits>`` where ``<bits>`` lists the C(n,2) pairs (i, j),
i < j, in lexicographic order; ``1`` means i -> j.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 16


class InvalidArgument(ValueError):
    """A precondition of an operation was violated by the caller."""


class InternalError(RuntimeError):
    """A search that a theorem guarantees to succeed came back empty.

    Seeing one of these means either a bug here or a counterexample.
    """


# ---------------------------------------------------------------- bit masks

def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------- tournament

class Direction(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Tournament:
    out: tuple[int, ...]

    def __post_init__(self):
        n = len(self.out)
        if not 1 <= n <= MAX_VERTICES:
            raise InvalidArgument(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        full = full_mask(n)
        for v, row in enumerate(self.out):
            if row & ~full or row >> v & 1:
                raise InvalidArgument(f"bad out-neighbour mask for vertex {v}")
        for u, v in combinations(range(n), 2):
            if (self.out[u] >> v & 1) == (self.out[v] >> u & 1):
                raise InvalidArgument(f"pair ({u},{v}) must be oriented exactly once")

    @property
    def n(self) -> int:
        return len(self.out)

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def beats(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def in_mask(self, v: int) -> int:
        return self.vertices & ~self.out[v] & ~(1 << v)

    def outdegree(self, v: int) -> int:
        return self.out[v].bit_count()

    def indegree(self, v: int) -> int:
        return self.n - 1 - self.out[v].bit_count()

    def scores(self) -> list[int]:
        return [row.bit_count() for row in self.out]

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tournament":
        """Start from the transitive order 0 -> 1 -> ... and apply ``edges``.

        Every listed ``(u, v)`` forces ``u -> v``; unlisted pairs keep i -> j for i < j.
        """
        out = [full_mask(n) & ~((1 << (v + 1)) - 1) for v in range(n)]
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"bad edge ({u},{v})")
            out[u] |= 1 << v
            out[v] &= ~(1 << u)
        return cls(tuple(out))

    @classmethod
    def from_relation(cls, n: int, beats) -> "Tournament":
        """Build from a predicate ``beats(i, j)`` evaluated on pairs i < j."""
        out = [0] * n
        for i, j in combinations(range(n), 2):
            if beats(i, j):
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        return cls(tuple(out))

    @classmethod
    def from_bits(cls, n: int, bitstring: str) -> "Tournament":
        pairs = list(combinations(range(n), 2))
        if len(bitstring) != len(pairs) or set(bitstring) - {"0", "1"}:
            raise InvalidArgument(f"expected {len(pairs)} binary digits for n={n}")
        out = [0] * n
        for (i, j), b in zip(pairs, bitstring):
            if b == "1":
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        return cls(tuple(out))

    @classmethod
    def from_line(cls, line: str) -> "Tournament":
        text = line.split("#", 1)[0].strip()
        head, sep, body = text.partition(":")
        if not sep or not head.strip().isdigit():
            raise InvalidArgument(f"not a tournament line: {line!r}")
        return cls.from_bits(int(head), body.strip())

    def bitstring(self) -> str:
        return "".join(
            "1" if self.out[i] >> j & 1 else "0"
            for i, j in combinations(range(self.n), 2)
        )

    def to_line(self) -> str:
        return f"{self.n}:{self.bitstring()}"

    def __str__(self) -> str:
        return self.to_line()


def read_tournaments(lines: Iterable[str]) -> Iterator[Tournament]:
    """Parse a stream in line format, skipping blanks and ``#`` comments."""
    for line in lines:
        if line.split("#", 1)[0].strip():
            yield Tournament.from_line(line)


# ---------------------------------------------------------------- families

FAMILY_KINDS = ("I", "T", "U", "W", "P", "Q", "J", "K", "Kstar", "D4", "D4star", "C3")
_FIXED_SIZE = {"D4": 4, "D4star": 4, "C3": 3}


@dataclass(frozen=True)
class FamilyTag:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidArgument(f"unknown family {self.kind!r}")
        n = self.n
        if self.kind in _FIXED_SIZE:
            if n != _FIXED_SIZE[self.kind]:
                raise InvalidArgument(f"{self.kind} has exactly {_FIXED_SIZE[self.kind]} vertices")
        elif self.kind in ("T", "U", "W"):
            if n < 1 or n % 2 == 0:
                raise InvalidArgument(f"{self.kind}_n needs odd n >= 1, got {n}")
        elif self.kind in ("J", "K", "Kstar", "Q"):
            if n < 3:
                raise InvalidArgument(f"{self.kind}_n needs n >= 3, got {n}")
        elif n < 1:
            raise InvalidArgument(f"{self.kind}_n needs n >= 1, got {n}")
        if n > MAX_VERTICES:
            raise InvalidArgument(f"n={n} exceeds {MAX_VERTICES}")


def _with_backedges(n: int, back: Iterable[tuple[int, int]]) -> Tournament:
    """Transitive order 0..n-1 except that each listed (later, earlier) pair points back."""
    return Tournament.from_edges(n, back)


def make_family(tag: FamilyTag | str, n: int | None = None) -> Tournament:
    """Canonical labelled member of a named family; vertex ``i`` is v_{i+1}.

    Accepts either a ``FamilyTag`` or ``make_family("T", 5)``.
    """
    if not isinstance(tag, FamilyTag):
        tag = FamilyTag(tag, _FIXED_SIZE.get(tag, n) if n is None else n)
    kind, n = tag.kind, tag.n
    if kind == "I":
        return Tournament.from_relation(n, lambda i, j: True)
    if kind in ("T", "U"):
        k = n // 2
        t = Tournament.from_relation(n, lambda i, j: 1 <= (j - i) % n <= k)
        if kind == "U":
            # reverse every pair inside {v_1..v_k}
            flips = [(j, i) if t.beats(i, j) else (i, j) for i, j in combinations(range(k), 2)]
            t = _apply(t, flips)
        return t
    if kind == "W":
        last = n - 1

        def rel(i, j):
            if j < last:
                return True
            return i % 2 == 1  # w_{i+1} with even 1-based index beats w_n

        return Tournament.from_relation(n, rel)
    if kind == "P":
        return _with_backedges(n, [(i + 1, i) for i in range(n - 1)])
    if kind == "Q":
        back = [(n - 2, 0), (n - 1, n - 3)] + [(i + 1, i) for i in range(n - 3)]
        return _with_backedges(n, back)
    if kind == "J":
        return _with_backedges(n, [(n - 1, 0)])
    if kind == "K":
        return _with_backedges(n, [(n - 1, 1)])
    if kind == "Kstar":
        return _with_backedges(n, [(n - 2, 0)])
    if kind == "C3":
        return _with_backedges(3, [(2, 0)])
    if kind == "D4":
        # v1 beats the cyclic triangle v2 -> v3 -> v4 -> v2
        return _with_backedges(4, [(3, 1)])
    if kind == "D4star":
        return Tournament.from_edges(4, [(1, 2), (2, 3), (3, 1), (1, 0), (2, 0), (3, 0)])
    raise InvalidArgument(kind)  # pragma: no cover


def _apply(t: Tournament, edges: Iterable[tuple[int, int]]) -> Tournament:
    out = list(t.out)
    for u, v in edges:
        out[u] |= 1 << v
        out[v] &= ~(1 << u)
    return Tournament(tuple(out))


# ---------------------------------------------------------------- operations

def edge_direction(t: Tournament, u: int, v: int) -> Direction:
    if u == v or not (0 <= u < t.n and 0 <= v < t.n):
        raise InvalidArgument(f"need two distinct vertices below {t.n}, got {u}, {v}")
    return Direction.PLUS if t.beats(u, v) else Direction.MINUS


def relabel(t: Tournament, order: Sequence[int]) -> Tournament:
    """Tournament on ``len(order)`` vertices whose vertex ``i`` is ``order[i]`` of ``t``.

    ``order`` may list any subset of the vertices, so this doubles as an
    order-controlled ``induce``.
    """
    if len(set(order)) != len(order) or any(not 0 <= v < t.n for v in order):
        raise InvalidArgument(f"not a list of distinct vertices of t: {order}")
    out = []
    for v in order:
        row = t.out[v]
        m = 0
        for i, u in enumerate(order):
            if row >> u & 1:
                m |= 1 << i
        out.append(m)
    return Tournament(tuple(out))


def induce(t: Tournament, s: int) -> Tournament:
    """Subtournament on the vertex mask ``s``, relabelled in increasing order."""
    if s == 0:
        raise InvalidArgument("cannot induce on the empty set")
    if s & ~t.vertices:
        raise InvalidArgument("vertex set is not inside the tournament")
    return relabel(t, members(s))


def substitute(g: Tournament, parts: Sequence[Tournament]) -> Tournament:
    """G(H_1, ..., H_n): blow vertex i of ``g`` up into ``parts[i]``.

    The result numbers the blocks consecutively in ``g``'s vertex order.
    """
    if len(parts) != g.n:
        raise InvalidArgument(f"need {g.n} parts, got {len(parts)}")
    offsets = [0]
    for h in parts:
        offsets.append(offsets[-1] + h.n)
    total = offsets[-1]
    if total > MAX_VERTICES:
        raise InvalidArgument(f"substitution would have {total} vertices")
    block_mask = [full_mask(h.n) << offsets[i] for i, h in enumerate(parts)]
    out = []
    for i, h in enumerate(parts):
        beyond = 0
        for j in bits(g.out[i]):
            beyond |= block_mask[j]
        for row in h.out:
            out.append(beyond | row << offsets[i])
    return Tournament(tuple(out))


def strong_components(t: Tournament) -> list[int]:
    """Strong components S_1, ..., S_s ordered so that S_i => S_j for i < j."""
    n = t.n
    reach = []
    for v in range(n):
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= t.out[u]
            frontier = nxt & ~seen
            seen |= frontier
        reach.append(seen)
    comps: list[int] = []
    done = 0
    for v in range(n):
        if done >> v & 1:
            continue
        comp = 0
        for u in bits(reach[v]):
            if reach[u] >> v & 1:
                comp |= 1 << u
        comps.append(comp)
        done |= comp
    # an earlier component reaches everything after it
    comps.sort(key=lambda c: -reach[(c & -c).bit_length() - 1].bit_count())
    return comps


def is_strongly_connected(t: Tournament) -> bool:
    return len(strong_components(t)) == 1


def is_transitive(t: Tournament, within: int | None = None) -> bool:
    """Transitive iff the out-degrees (inside ``within``) are all distinct."""
    w = t.vertices if within is None else within
    degs = {(t.out[v] & w).bit_count() for v in bits(w)}
    return len(degs) == w.bit_count()


def transitive_order(t: Tournament, within: int | None = None) -> list[int]:
    """Source-first order of a transitive vertex set."""
    w = t.vertices if within is None else within
    if not is_transitive(t, w):
        raise InvalidArgument("vertex set does not induce a transitive tournament")
    return sorted(bits(w), key=lambda v: -(t.out[v] & w).bit_count())


def _neighbour_mask(t: Tournament, v: int, forward: bool) -> int:
    return t.out[v] if forward else t.in_mask(v)


def _embeddings(t: Tournament, pattern: Tournament, within: int) -> Iterator[list[int]]:
    """Injective edge-preserving maps pattern -> t inside ``within``, lexicographic."""
    k = pattern.n
    pin = [pattern.in_mask(v) for v in range(k)]
    tin = [t.in_mask(v) for v in range(t.n)]
    pout_deg = [pattern.outdegree(v) for v in range(k)]
    image = [0] * k

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == k:
            yield list(image)
            return
        cand = within & ~used
        for j in range(i):
            cand &= t.out[image[j]] if pattern.out[j] >> i & 1 else tin[image[j]]
            if not cand:
                return
        # a vertex needs at least as many out-/in-neighbours as its pattern image
        need_out = pout_deg[i]
        need_in = pin[i].bit_count()
        for c in bits(cand):
            if (t.out[c] & within).bit_count() < need_out:
                continue
            if (tin[c] & within).bit_count() < need_in:
                continue
            image[i] = c
            yield from rec(i + 1, used | 1 << c)

    yield from rec(0, 0)


def isomorphic(a: Tournament, b: Tournament) -> dict[int, int] | None:
    """Lexicographically least isomorphism a -> b, or ``None``."""
    if a.n != b.n or sorted(a.scores()) != sorted(b.scores()):
        return None
    for image in _embeddings(b, a, b.vertices):
        return dict(enumerate(image))
    return None


def contains_induced(t: Tournament, pattern: Tournament, within: int | None = None) -> int | None:
    """Vertex mask of an induced copy of ``pattern`` in ``t``, or ``None``."""
    w = t.vertices if within is None else within
    if pattern.n > w.bit_count():
        return None
    for image in _embeddings(t, pattern, w):
        return to_mask(image)
    return None


def canonical_labelling(t: Tournament) -> list[int]:
    """Vertex order whose relabelling has the lexicographically greatest bit string.

    Row i of the bit string is fixed once positions 0..i are chosen and the
    remaining vertices are grouped by their relation to them, so the search
    only branches where vertices tie.
    """
    n = t.n
    best_bits: list[str] = []
    best_order: list[int] = []

    def rec(order: list[int], cells: list[list[int]], prefix: list[str]) -> None:
        nonlocal best_bits, best_order
        depth = len(prefix)
        if best_bits and prefix != best_bits[:depth]:
            if prefix < best_bits[:depth]:
                return
        if not cells:
            if not best_bits or prefix > best_bits:
                best_bits, best_order = list(prefix), list(order)
            return
        first = cells[0]
        rows = []
        for c in first:
            oc = t.out[c]
            rest = [x for x in first if x != c]
            new_cells = []
            row = []
            for cell in [rest] + cells[1:]:
                fwd = [x for x in cell if oc >> x & 1]
                back = [x for x in cell if not oc >> x & 1]
                row.append("1" * len(fwd) + "0" * len(back))
                new_cells.extend(part for part in (fwd, back) if part)
            rows.append(("".join(row), c, new_cells))
        top = max(r[0] for r in rows)
        for row, c, new_cells in rows:
            if row == top:
                rec(order + [c], new_cells, prefix + [row])

    # score prefilter: higher out-degree first is forced by row 0
    cells = [list(range(n))]
    rec([], cells, [])
    return best_order


def canonical_form(t: Tournament) -> Tournament:
    return relabel(t, canonical_labelling(t))


def canonical_code(t: Tournament) -> bytes:
    """Isomorphism-invariant code: the canonical form's line, as bytes."""
    return canonical_form(t).to_line().encode()


def backedges(t: Tournament, order: Sequence[int]) -> list[tuple[int, int]]:
    """All (j, i) with positions j > i such that order[j] -> order[i] (0-based positions)."""
    check_ordering(t, order)
    out = []
    for j in range(len(order)):
        row = t.out[order[j]]
        for i in range(j):
            if row >> order[i] & 1:
                out.append((j, i))
    return out


def max_backedge_length(t: Tournament, order: Sequence[int]) -> int:
    return max((j - i for j, i in backedges(t, order)), default=0)


def check_ordering(t: Tournament, order: Sequence[int]) -> None:
    if sorted(order) != list(range(t.n)):
        raise InvalidArgument(f"not an ordering of the {t.n} vertices: {list(order)}")


def all_labelled(n: int) -> Iterator[Tournament]:
    """Every labelled tournament on ``n`` vertices (2^C(n,2) of them)."""
    m = n * (n - 1) // 2
    for code in range(1 << m):
        yield Tournament.from_bits(n, format(code, f"0{m}b") if m else "")
