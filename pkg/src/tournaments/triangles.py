"""Cyclic triangles and triangle-connectivity."""

from __future__ import annotations

from itertools import combinations

from networkx.utils import UnionFind

from .core import Tournament, bits, is_strongly_connected

Triangle = tuple[int, int, int]


def cyclic_triangles(t: Tournament) -> list[Triangle]:
    """All cyclic triangles as sorted vertex triples, in lexicographic order."""
    tris = []
    for a, b in combinations(range(t.n), 2):
        # for a < b < c the triple is cyclic iff a -> b -> c -> a or the reverse
        if t.beats(a, b):
            third = t.out[b] & t.in_mask(a)
        else:
            third = t.out[a] & t.in_mask(b)
        for c in bits(third >> (b + 1) << (b + 1)):
            tris.append((a, b, c))
    return tris


def triangle_components(t: Tournament) -> list[list[Triangle]]:
    """Classes of cyclic triangles under "share exactly two vertices", transitively closed.

    Each triangle is joined to a node per vertex pair it contains, so two
    triangles meet exactly when they share a pair.  Components come out in
    order of their first triangle.
    """
    tris = cyclic_triangles(t)
    uf = UnionFind()
    for tri in tris:
        uf[tri]
        a, b, c = tri
        for pair in ((a, b), (a, c), (b, c)):
            uf.union(tri, ("pair",) + pair)
    groups: dict[object, list[Triangle]] = {}
    for tri in tris:
        groups.setdefault(uf[tri], []).append(tri)
    return list(groups.values())


def is_triangle_connected(t: Tournament) -> bool:
    return is_strongly_connected(t) and len(triangle_components(t)) <= 1
