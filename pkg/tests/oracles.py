"""Slow, obviously-correct reference implementations used only by the tests."""

from itertools import combinations, permutations

from tournaments.core import Tournament


def beats(t, u, v):
    return bool(t.out[u] >> v & 1)


def is_module(t, xs, within=None):
    w = set(range(t.n)) if within is None else set(within)
    xs = set(xs)
    for v in w - xs:
        dirs = {beats(t, v, x) for x in xs}
        if len(dirs) > 1:
            return False
    return True


def is_prime(t, within=None):
    w = list(range(t.n)) if within is None else list(within)
    for r in range(2, len(w)):
        for c in combinations(w, r):
            if is_module(t, c, w):
                return False
    return True


def relabel(t, order):
    n = len(order)
    return Tournament.from_relation(n, lambda i, j: beats(t, order[i], order[j]))


def brute_code(t):
    """Largest bit string over all relabelings."""
    return max(relabel(t, p).bitstring() for p in permutations(range(t.n)))


def are_isomorphic(a, b):
    return a.n == b.n and brute_code(a) == brute_code(b)


def is_transitive(t, xs):
    xs = list(xs)
    return all(
        not (beats(t, a, b) and beats(t, b, c) and beats(t, c, a))
        for a, b, c in permutations(xs, 3)
    )


def strongly_connected(t):
    if t.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(t.n):
            if v not in seen and beats(t, u, v):
                seen.add(v)
                stack.append(v)
    if len(seen) < t.n:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(t.n):
            if v not in seen and beats(t, v, u):
                seen.add(v)
                stack.append(v)
    return len(seen) == t.n


def cyclic_triples(t):
    out = []
    for a, b, c in combinations(range(t.n), 3):
        if (beats(t, a, b) and beats(t, b, c) and beats(t, c, a)) or (
            beats(t, b, a) and beats(t, c, b) and beats(t, a, c)
        ):
            out.append((a, b, c))
    return out


def triangle_classes(t):
    tris = cyclic_triples(t)
    parent = list(range(len(tris)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i, j in combinations(range(len(tris)), 2):
        if len(set(tris[i]) & set(tris[j])) == 2:
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(tris))})


def matching_orderings(t):
    out = []
    for o in permutations(range(t.n)):
        touched = []
        for j in range(t.n):
            for i in range(j):
                if beats(t, o[j], o[i]):
                    touched += [i, j]
        if len(touched) == len(set(touched)):
            out.append(list(o))
    return out


def induced_contains(t, pattern):
    target = brute_code(pattern)
    for c in combinations(range(t.n), pattern.n):
        if brute_code(relabel(t, list(c))) == target:
            return True
    return False
