"""Canonical enumeration of small tournaments and exhaustive verification suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations, permutations
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from . import exclusion as ex
from .core import (
    InternalError,
    InvalidArgument,
    Tournament,
    all_labelled,
    bits,
    canonical_code,
    canonical_form,
    contains_induced,
    induce,
    is_strongly_connected,
    is_transitive,
    isomorphic,
    make_family,
    members,
    relabel,
    substitute,
    to_mask,
)
from .growth import (
    WeaveType,
    classify_weave,
    d4_classify,
    find_prime5,
    grow_by_one,
    grow_by_two,
    make_weave,
    make_weave_plus,
    recognize_TUW,
    shrink_prime,
)
from .homog import all_modules, is_homogeneous, is_prime
from .matching import (
    _block_kind,
    apply_perm,
    count_matching_orderings,
    cycles,
    decompose_ordering_pair,
    enumerate_matching_orderings,
    is_matching_ordering,
    is_minimal_non_matching,
    minimal_non_matching_up_to,
    sigma_inverse,
    sigma_perm,
    tau_perm,
)
from .triangles import cyclic_triangles, is_triangle_connected

MAX_CANONICAL_N = 8

# ---------------------------------------------------------------- enumeration

_levels: dict[int, list[Tournament]] = {1: [Tournament((0,))]}


def _extend(t: Tournament, pattern: int) -> Tournament:
    """Add vertex n to ``t``; bit i of ``pattern`` set means i -> n."""
    n = t.n
    out = list(t.out) + [0]
    for i in range(n):
        if pattern >> i & 1:
            out[i] |= 1 << n
        else:
            out[n] |= 1 << i
    return Tournament(tuple(out))


def enumerate_canonical(n: int) -> list[Tournament]:
    """One canonical representative per isomorphism class, sorted by canonical code."""
    if not 1 <= n <= MAX_CANONICAL_N:
        raise InvalidArgument(f"canonical enumeration supports 1 <= n <= {MAX_CANONICAL_N}")
    for m in range(2, n + 1):
        if m in _levels:
            continue
        seen: dict[bytes, Tournament] = {}
        for t in _levels[m - 1]:
            for pattern in range(1 << (m - 1)):
                u = _extend(t, pattern)
                code = canonical_code(u)
                if code not in seen:
                    seen[code] = canonical_form(u)
        _levels[m] = [seen[c] for c in sorted(seen)]
    return list(_levels[n])


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    mode: str = "canonical"

    def __post_init__(self):
        if self.mode not in ("canonical", "labeled"):
            raise InvalidArgument("mode must be 'canonical' or 'labeled'")
        if self.n < 1 or (self.mode == "canonical" and self.n > MAX_CANONICAL_N):
            raise InvalidArgument(f"n out of range for {self.mode} enumeration")

    def tournaments(self) -> Iterator[Tournament]:
        if self.mode == "canonical":
            return iter(enumerate_canonical(self.n))
        return all_labelled(self.n)


# ---------------------------------------------------------------- reports

@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    universe: str
    checked: int
    failures: tuple[str, ...]
    per_n: tuple[tuple[int, int], ...] = ()
    notes: tuple[str, ...] = ()
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def to_text(self) -> str:
        lines = [
            f"theorem: {self.theorem_id}",
            f"universe: {self.universe}",
            f"checked: {self.checked}",
            f"failures: {len(self.failures)}",
            f"status: {'pass' if self.passed else 'fail'}",
        ]
        lines += [f"n{n}: {c}" for n, c in self.per_n]
        lines += [f"note: {s}" for s in self.notes]
        lines.append(f"elapsed: {self.elapsed:.2f}s")
        lines += [f"counterexample: {f}" for f in self.failures]
        return "\n".join(lines)


# ---------------------------------------------------------------- helpers

def _fib(n: int) -> int:
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _is_P(t: Tournament) -> bool:
    return t.n >= 1 and isomorphic(make_family("P", t.n), t) is not None


def _subsets(mask: int) -> Iterator[int]:
    """Every subset of ``mask``, the empty set included."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _homogeneous_sets(t: Tournament, within: int) -> list[int]:
    return [x for x in _subsets(within) if x and is_homogeneous(t, x, within)]


def _prime_subsets(t: Tournament, lo: int, hi: int) -> Iterator[int]:
    for size in range(lo, hi + 1):
        for combo in combinations(range(t.n), size):
            s = to_mask(combo)
            if is_prime(t, s):
                yield s


def matching_orderings_plain(t: Tournament, within: int | None = None) -> list[list[int]]:
    """Matching orderings by prefix search with no degree reasoning; the independent oracle."""
    w = t.vertices if within is None else within
    size = w.bit_count()
    found = []
    order: list[int] = []

    def rec(placed: int, touched: int):
        if len(order) == size:
            found.append(list(order))
            return
        for v in bits(w & ~placed):
            back = t.out[v] & placed
            if back.bit_count() > 1 or back & touched or (back and touched >> v & 1):
                continue
            order.append(v)
            rec(placed | 1 << v, touched | (back | 1 << v if back else 0))
            order.pop()

    rec(0, 0)
    return found


def _has_short_ordering(t: Tournament, k: int) -> list[int] | None:
    """An ordering whose backedges all have length at most ``k``."""
    order: list[int] = []

    def rec(placed: int):
        if len(order) == t.n:
            return list(order)
        p = len(order)
        for v in bits(t.vertices & ~placed):
            if any(t.beats(v, order[i]) for i in range(0, p - k)):
                continue
            order.append(v)
            got = rec(placed | 1 << v)
            if got:
                return got
            order.pop()
        return None

    return rec(0)


# ---------------------------------------------------------------- checks
#
# Every check takes one universe item and returns None on success, SKIP when
# the item is outside the statement's hypotheses, or a short failure
# description.  They are module-level so worker processes can use them.

SKIP = False

def check_n4_decomposable(t: Tournament):
    return None if not is_prime(t) else "prime"


def check_fig1(t: Tournament):
    if is_prime(t) != (recognize_TUW(t) is not None):
        return "primality disagrees with T/U/W membership"
    return None


def check_grow_by_two(g: Tournament):
    if not is_prime(g):
        return SKIP
    for h in _prime_subsets(g, 3, g.n - 2):
        try:
            u, v = grow_by_two(g, h)
        except InternalError:
            return f"h={members(h)}"
        if not is_prime(g, h | 1 << u | 1 << v):
            return f"h={members(h)} grew to a decomposable set"
    return None


def check_find_prime5(g: Tournament):
    if not is_prime(g):
        return SKIP
    try:
        s = find_prime5(g)
    except InternalError as e:
        return str(e)
    return None if s.bit_count() == 5 and is_prime(g, s) else "result not a prime 5-set"


def check_grow_by_one(g: Tournament):
    if not is_prime(g) or recognize_TUW(g) is not None:
        return SKIP
    for h in _prime_subsets(g, 5, g.n - 1):
        try:
            s = grow_by_one(g, h)
        except InternalError:
            return f"h={members(h)}"
        if s.bit_count() != h.bit_count() + 1 or not is_prime(g, s):
            return f"h={members(h)} grew to a bad set"
        if contains_induced(g, induce(g, h), within=s) is None:
            return f"h={members(h)} not contained in the grown set"
    return None


def check_shrink_one(g: Tournament):
    if not is_prime(g):
        return SKIP
    expected = recognize_TUW(g) is None
    got = shrink_prime(g, 1) is not None
    return None if got == expected else f"shrink by one present={got}, expected {expected}"


def check_shrink_two(g: Tournament):
    if not is_prime(g):
        return SKIP
    return None if shrink_prime(g, 2) is not None else "no prime subtournament two smaller"


def check_d4_prime(t: Tournament):
    if t.n < 3 or not is_prime(t):
        return SKIP
    free = contains_induced(t, make_family("D4")) is None
    is_t = t.n % 2 == 1 and isomorphic(make_family("T", t.n), t) is not None
    return None if free == is_t else f"D4-free={free}, T_n={is_t}"


def check_d4_structure(t: Tournament):
    s = d4_classify(t)
    if s.form is None:
        if contains_induced(t, make_family("D4"), within=s.witness) is None:
            return "witness does not induce D4"
        return None
    return None if s.matches(t) else f"form {s.form} does not recompose"


def check_triangle_connected(t: Tournament):
    if t.n < 3 or not is_prime(t):
        return SKIP
    return None if is_triangle_connected(t) else "prime but not triangle-connected"


def check_triangle_modules(t: Tournament):
    if not is_strongly_connected(t):
        return SKIP
    tris = [to_mask(c) for c in cyclic_triangles(t)]
    blocked = any(any(tri & x == tri for tri in tris) for x in all_modules(t))
    return None if is_triangle_connected(t) == (not blocked) else "equivalence fails"


def check_fibonacci(n: int):
    t = make_family("I", n)
    got = count_matching_orderings(t)
    if got != _fib(n):
        return f"I_{n}: {got} != F_{n} = {_fib(n)}"
    if n <= 7:
        naive = sum(1 for o in permutations(range(n)) if is_matching_ordering(t, o))
        if naive != got:
            return f"I_{n}: all-orderings count {naive} != {got}"
    return None


P_COUNTS = {1: 1, 2: 2, 3: 3, 4: 3, 5: 2, 6: 2, 7: 2, 8: 2}


def check_P_count(n: int):
    got = count_matching_orderings(make_family("P", n))
    return None if got == P_COUNTS[n] else f"P_{n}: {got} != {P_COUNTS[n]}"


def check_prime_matching(t: Tournament):
    if not is_prime(t) or _is_P(t):
        return SKIP
    c = count_matching_orderings(t)
    return None if c <= 1 else f"{c} matching orderings"


def check_ordering_pairs(t: Tournament):
    orders = enumerate_matching_orderings(t)
    for o in orders:
        where = {v: i for i, v in enumerate(o)}
        for o2 in orders:
            pi = [where[v] for v in o2]
            try:
                decompose_ordering_pair(t, o, pi)
            except InternalError as e:
                return f"o={o} pi={pi}: {e}"
    return None


def check_minimal_Q(n: int):
    return None if is_minimal_non_matching(make_family("Q", n)) else f"Q_{n} not minimal non-matching"


def check_bucket_ordering(t: Tournament):
    if ex.has_pattern(t, ex.PatternKind("J", 4)) is not None:
        return SKIP
    try:
        b = ex.bucket_construction(t, 4)
    except InternalError as e:
        return str(e)
    if b.max_length > 10 * 4 * 2 ** 8:
        return f"length {b.max_length}"
    return None


def check_short_orderings(t: Tournament):
    for k in (1, 2):
        order = _has_short_ordering(t, k)
        if order is None:
            continue
        for size in (3 * k + 2, 10 * k):
            if not ex.check_converse_J(t, order, k, pattern_size=size):
                return f"k={k}: J_{size} present"
    return None


def _kn_free(t: Tournament, n: int) -> bool:
    return all(ex.has_pattern(t, ex.PatternKind(k, n)) is None for k in ("K", "Kstar"))


def check_weave_construction(t: Tournament):
    if not _kn_free(t, 4):
        return SKIP
    for threshold in (0, 4):
        try:
            ex.noKn_construct(t, 4, threshold=threshold)
        except InternalError as e:
            return f"threshold {threshold}: {e}"
    d = ex.kn_free_decompose(t)
    rebuilt = substitute(make_family("T", d.r), [induce(t, p) for p in d.parts])
    order = [v for p in d.parts for v in members(p)]
    if relabel(t, order) != rebuilt:
        return "T_r decomposition does not recompose"
    return None


def check_T_composition(sizes: tuple[int, ...]):
    r = len(sizes)
    t = substitute(make_family("T", r), [make_family("I", s) for s in sizes])
    parts, start = [], 0
    for s in sizes:
        parts.append(to_mask(range(start, start + s)))
        start += s
    return None if ex.check_converse_K(t, r, parts, 3) else "K_4 or K_4* present"


def check_restriction(t: Tournament):
    full = t.vertices
    for x in _homogeneous_sets(t, full):
        for h in range(1, 1 << t.n):
            if x & h and not is_homogeneous(t, x & h, h):
                return f"X={members(x)} H={members(h)}"
    return None


def check_extension(t: Tournament):
    full = t.vertices
    for x in range(1, 1 << t.n):
        hosts = [h for h in _subsets(full) if h & x == x and is_homogeneous(t, x, h)]
        for h1, h2 in combinations(hosts, 2):
            if not is_homogeneous(t, x, h1 | h2):
                return f"X={members(x)} H1={members(h1)} H2={members(h2)}"
    return None


def check_cloning(t: Tournament):
    full = t.vertices
    for x in range(t.n):
        for y in range(t.n):
            if x == y or not is_homogeneous(t, 1 << x | 1 << y):
                continue
            rest = full & ~(1 << y)
            for s in _subsets(rest):
                if s and is_homogeneous(t, s, rest) and not is_homogeneous(t, s):
                    return f"x={x} y={y} X={members(s)}"
    return None


def _pairs_of_modules(t: Tournament):
    mods = _homogeneous_sets(t, t.vertices)
    return [(a, b) for a in mods for b in mods]


def check_intersection(t: Tournament):
    for a, b in _pairs_of_modules(t):
        if a & b and not is_homogeneous(t, a & b):
            return f"X={members(a)} Y={members(b)}"
    return None


def check_subtraction(t: Tournament):
    for a, b in _pairs_of_modules(t):
        if b & ~a and a & ~b and not is_homogeneous(t, a & ~b):
            return f"X={members(a)} Y={members(b)}"
    return None


def check_union(t: Tournament):
    full = t.vertices
    for a in range(1, 1 << t.n):
        for b in range(1, 1 << t.n):
            if not a & b:
                continue
            if is_homogeneous(t, a, full & ~(b & ~a)) and is_homogeneous(t, b, full & ~(a & ~b)):
                if not is_homogeneous(t, a | b):
                    return f"X={members(a)} Y={members(b)}"
    return None


def _ext_z_v(g: Tournament, h: int, v: int) -> tuple[bool, bool, list[int]]:
    hv = h | 1 << v
    return (
        is_prime(g, hv),
        is_homogeneous(g, h, hv),
        [x for x in bits(h) if is_homogeneous(g, 1 << v | 1 << x, hv)],
    )


def check_vertex_classes(g: Tournament):
    for h in _prime_subsets(g, 3, g.n - 1):
        outside = members(g.vertices & ~h)
        cls = {}
        for v in outside:
            e, z, vx = _ext_z_v(g, h, v)
            if e + z + len(vx) != 1:
                return f"H={members(h)} v={v}: in {e + z + len(vx)} classes"
            cls[v] = "E" if e else "Z" if z else vx[0]
        for u, v in permutations(outside, 2):
            huv = h | 1 << u | 1 << v
            if is_prime(g, huv):
                continue
            if cls[u] == "E" and cls[v] == "E" and not is_homogeneous(g, 1 << u | 1 << v, huv):
                return f"H={members(h)} (ii) u={u} v={v}"
            if cls[u] == "Z" and cls[v] != "Z" and not is_homogeneous(g, h | 1 << v, huv):
                return f"H={members(h)} (iii) u={u} v={v}"
            if isinstance(cls[u], int) and cls[v] != cls[u]:
                if not is_homogeneous(g, 1 << u | 1 << cls[u], huv):
                    return f"H={members(h)} (iv) u={u} v={v}"
    return None


def check_prime_strong(t: Tournament):
    if not is_prime(t):
        return SKIP
    return None if is_strongly_connected(t) else "prime but not strongly connected"


def check_weave_table(item: tuple[int, str]):
    n, name = item
    wt = WeaveType(name)
    w = make_weave(n, wt)
    if wt is WeaveType.FF and not is_transitive(w):
        return "FF weave not transitive"
    if n % 2 == 0 and n >= 2:
        expect = {
            WeaveType.FB: to_mask(range(1, n)),
            WeaveType.BF: to_mask(range(0, n - 1)),
            WeaveType.BB: 1 | 1 << (n - 1),
        }.get(wt)
        if expect is not None and not is_homogeneous(w, expect):
            return f"expected module {members(expect)}"
    if n % 2 == 1:
        if wt is WeaveType.FB and not is_homogeneous(w, to_mask(range(n - 1))):
            return "odd FB: first n-1 not a module"
        for kind, want in (("U", WeaveType.BF), ("T", WeaveType.BB)):
            if wt is want and isomorphic(make_family(kind, n), w) is None:
                return f"odd {wt}: not {kind}_{n}"
    wp = make_weave_plus(n, wt)
    if n % 2 == 1:
        if wt in (WeaveType.FF, WeaveType.FB):
            if not is_homogeneous(wp, to_mask(range(n - 1)) | 1 << n):
                return f"odd {wt}+v: expected module missing"
        elif not is_homogeneous(wp, 1 << n | 1 << (n - 1)):
            return f"odd {wt}+v: {{v, w_n}} not a module"
    else:
        kind = {WeaveType.FF: "W", WeaveType.FB: "U", WeaveType.BF: "U", WeaveType.BB: "T"}[wt]
        if isomorphic(make_family(kind, n + 1), wp) is None:
            return f"even {wt}+v: not {kind}_{n + 1}"
    return None


def check_prime_weave(item: tuple[int, str]):
    n, name = item
    w = make_weave(n, name)
    if n >= 3 and is_prime(w):
        got = recognize_TUW(w)
        if got is None or got[0] not in ("T", "U"):
            return f"prime weave recognised as {got}"
    wp = make_weave_plus(n, name)
    if n >= 2 and is_prime(wp) and recognize_TUW(wp) is None:
        return "prime weave plus vertex outside T/U/W"
    return None


def check_delete_pair(item: tuple[int, str]):
    n, name = item
    w = make_weave(n, name)
    types = classify_weave(w, list(range(n)))
    for i in range(n - 1):
        rest = [v for v in range(n) if v not in (i, i + 1)]
        if not types <= classify_weave(w, rest):
            return f"removing positions {i},{i + 1} changes the type"
    return None


def check_positions(t: Tournament):
    indeg = [t.indegree(v) for v in range(t.n)]
    for o in matching_orderings_plain(t):
        heads = {o[i] for _, i in _pos_backedges(t, o)}
        tails = {o[j] for j, _ in _pos_backedges(t, o)}
        for p, v in enumerate(o, start=1):
            role = p - indeg[v]
            want = 0 if v in heads else 2 if v in tails else 1
            if role != want:
                return f"order {o}: vertex {v} at position {p} with indegree {indeg[v]}"
    return None


def _pos_backedges(t: Tournament, o: list[int]) -> list[tuple[int, int]]:
    return [(j, i) for j in range(len(o)) for i in range(j) if t.beats(o[j], o[i])]


def check_cycle_shapes(pi: tuple[int, ...]):
    for cyc in cycles(pi):
        xs = sorted(cyc)
        if xs == list(range(xs[0], xs[0] + len(xs))):
            if all(pi[x] == sigma_perm(xs)[x] for x in xs) or all(pi[x] == sigma_inverse(xs)[x] for x in xs):
                continue
        if len(xs) == 2 and xs[1] - xs[0] == 2:
            continue
        return f"cycle {cyc}"
    return None


def check_block_orderings(t: Tournament):
    n = t.n
    xs = list(range(n))
    perms = [("sigma", sigma_perm(xs)), ("sigma_inv", sigma_inverse(xs))]
    if n == 4:
        perms.append(("tau", tau_perm(xs)))
    for o in matching_orderings_plain(t):
        for kind, pi in perms:
            if n == 1 or not is_matching_ordering(t, apply_perm(o, pi)):
                continue
            if kind == "tau" and not _is_P(t):
                return f"tau pair on a non-P_4 tournament, order {o}"
            if not (is_transitive(t) or _is_P(t)):
                return f"{kind} pair on a tournament that is neither transitive nor P_n"
            if _block_kind(t, o, kind) is None:
                return f"{kind}: order {o} not as prescribed"
    return None


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class Suite:
    theorem_id: str
    citation: str
    criterion: int | None
    default_max_n: int
    check: Callable[[object], str | None]
    universe: Callable[[int], Iterable[tuple[int, object]]]
    describe: str


def _canonical(lo: int, exact: int | None = None):
    def gen(max_n: int):
        top = min(max_n, exact) if exact else max_n
        for n in range(lo, top + 1):
            for t in enumerate_canonical(n):
                yield n, t

    return gen


def _sizes(lo: int, cap: int | None = None):
    def gen(max_n: int):
        for n in range(lo, (min(max_n, cap) if cap else max_n) + 1):
            yield n, n

    return gen


def _weaves(lo: int):
    def gen(max_n: int):
        for n in range(lo, max_n + 1):
            for wt in WeaveType:
                yield n, (n, wt.value)

    return gen


def _close_permutations(max_n: int):
    for n in range(1, max_n + 1):
        for p in permutations(range(n)):
            if all(abs(p[x] - x) <= 2 for x in range(n)):
                yield n, p


def _compositions(max_n: int):
    for r in (1, 3, 5):
        for total in range(r, max_n + 1):
            for cuts in combinations(range(1, total), r - 1):
                bounds = (0,) + cuts + (total,)
                yield total, tuple(bounds[i + 1] - bounds[i] for i in range(r))


def _Q_sizes(max_n: int):
    for n in (7, 9):
        if n <= max(max_n, 9):
            yield n, n


def _exact(n: int):
    def gen(max_n: int):
        for t in enumerate_canonical(n):
            yield n, t

    return gen


_SUITES = [
    Suite("n4_decomposable", "every 4-vertex tournament is decomposable", 1, 4,
          check_n4_decomposable, _exact(4), "canonical n=4"),
    Suite("fig_1", "prime 5-vertex tournaments are T_5, U_5, W_5", 2, 5,
          check_fig1, _exact(5), "canonical n=5"),
    Suite("cor_2_8", "grow a prime subtournament by two vertices", 3, 7,
          check_grow_by_two, _canonical(5), "prime canonical 5..N, all prime H"),
    Suite("cor_2_9", "prime tournaments with >= 5 vertices contain a prime 5-set", 3, 7,
          check_find_prime5, _canonical(5), "prime canonical 5..N"),
    Suite("thm_3_1", "grow a prime subtournament by one vertex", 4, 7,
          check_grow_by_one, _canonical(6), "prime non-T/U/W canonical 6..N, prime H, |H| >= 5"),
    Suite("thm_2_10", "prime minus one vertex unless T/U/W", 5, 7,
          check_shrink_one, _canonical(6), "prime canonical 6..N"),
    Suite("thm_2_11", "prime minus two vertices", 5, 7,
          check_shrink_two, _canonical(7), "prime canonical 7..N"),
    Suite("thm_3_8", "prime and D4-free iff T_n", 6, 7,
          check_d4_prime, _canonical(3), "prime canonical 3..N"),
    Suite("cor_3_9", "D4-free tournaments are T_n(I..) or I_2(T_n(I..), I)", 6, 7,
          check_d4_structure, _canonical(1), "canonical 1..N"),
    Suite("thm_4_1", "strongly connected prime tournaments are triangle-connected", 7, 7,
          check_triangle_connected, _canonical(3), "prime canonical 3..N"),
    Suite("cor_4_2", "triangle-connected iff no module holds a cyclic triangle", 7, 6,
          check_triangle_modules, _canonical(1), "strongly connected canonical 1..N"),
    Suite("cor_5_7", "I_n has F_n matching orderings", 8, 9,
          check_fibonacci, _sizes(1), "I_1..I_N"),
    Suite("cor_5_6", "matching-ordering counts of P_n", 9, 8,
          check_P_count, _sizes(1, 8), "P_1..P_N"),
    Suite("cor_5_5", "prime non-P tournaments have at most one matching ordering", 10, 7,
          check_prime_matching, _canonical(1), "prime canonical 1..N"),
    Suite("thm_5_4", "pairs of matching orderings decompose into blocks", 11, 6,
          check_ordering_pairs, _canonical(1), "canonical 1..N, all ordering pairs"),
    Suite("thm_5_8", "Q_n is minimal non-matching", 12, 9,
          check_minimal_Q, _Q_sizes, "Q_7, Q_9"),
    Suite("thm_6_1_i", "J_4-free tournaments have short-backedge orderings", 13, 7,
          check_bucket_ordering, _canonical(1), "J_4-free canonical 1..N"),
    Suite("thm_6_1_ii", "short-backedge orderings exclude long J", None, 7,
          check_short_orderings, _canonical(1), "canonical 1..N, k = 1, 2"),
    Suite("thm_6_2_i", "K_4/K_4*-free tournaments are T_r substitutions", 14, 7,
          check_weave_construction, _canonical(1), "K_4/K_4*-free canonical 1..N"),
    Suite("thm_6_2_ii", "T_r of transitive parts excludes K_4 and K_4*", 14, 8,
          check_T_composition, _compositions, "T_r(I..) for r in 1,3,5, total <= N"),
    Suite("prop_2_1", "restriction of a homogeneous set", 15, 6,
          check_restriction, _canonical(1), "canonical 1..N, all modules and subsets"),
    Suite("prop_2_2", "extension of a homogeneous set", 15, 6,
          check_extension, _canonical(1), "canonical 1..N, all X and host pairs"),
    Suite("prop_2_3", "cloning of a homogeneous set", 15, 6,
          check_cloning, _canonical(1), "canonical 1..N, all modules {x,y} and X"),
    Suite("prop_2_4", "intersection of homogeneous sets", 15, 6,
          check_intersection, _canonical(1), "canonical 1..N, all module pairs"),
    Suite("prop_2_5", "subtraction of homogeneous sets", 15, 6,
          check_subtraction, _canonical(1), "canonical 1..N, all module pairs"),
    Suite("prop_2_6", "union of homogeneous sets", 15, 6,
          check_union, _canonical(1), "canonical 1..N, all set pairs"),
    Suite("prop_2_7", "Ext / Z / V_x partition and pair rules", 15, 7,
          check_vertex_classes, _canonical(4), "canonical 4..N, all prime H"),
    Suite("prime_strong", "prime tournaments with >= 3 vertices are strongly connected", 15, 7,
          check_prime_strong, _canonical(3), "canonical 3..N"),
    Suite("prop_3_2", "weave type table", 15, 7,
          check_weave_table, _weaves(1), "weaves of every type, 1..N"),
    Suite("cor_3_3", "prime weaves are T_n or U_n", 15, 7,
          check_prime_weave, _weaves(1), "weaves of every type, 1..N"),
    Suite("prop_3_4", "deleting adjacent weave vertices keeps the type", 15, 8,
          check_delete_pair, _weaves(2), "weaves of every type, 2..N"),
    Suite("prop_5_1", "positions of vertices in matching orderings", 15, 7,
          check_positions, _canonical(1), "canonical 1..N, all matching orderings"),
    Suite("prop_5_2", "cycle shapes of permutations moving points by <= 2", 15, 7,
          check_cycle_shapes, _close_permutations, "S_1..S_N, |pi(x) - x| <= 2"),
    Suite("prop_5_3", "orderings related by sigma or tau", 15, 7,
          check_block_orderings, _canonical(1), "canonical 1..N, all matching orderings"),
]

SUITES = {s.theorem_id: s for s in _SUITES}


def _describe_item(item) -> str:
    if isinstance(item, Tournament):
        return item.to_line()
    return repr(item)


def _run_chunk(check, chunk):
    return [check(item) for item in chunk]


def verify(theorem_id: str, max_n: int | None = None, jobs: int = 1) -> VerificationReport:
    """Run one registered suite; the report does not depend on ``jobs``."""
    suite = SUITES.get(theorem_id)
    if suite is None:
        raise InvalidArgument(f"unknown theorem id {theorem_id!r}; known: {', '.join(SUITES)}")
    top = suite.default_max_n if max_n is None else max_n
    if top < 1:
        raise InvalidArgument("max_n must be positive")
    start = time.perf_counter()
    items = list(suite.universe(top))
    if jobs > 1 and len(items) > 1:
        size = max(1, len(items) // (jobs * 8))
        chunks = [[it for _, it in items[i:i + size]] for i in range(0, len(items), size)]
        with Pool(jobs) as pool:
            results = [r for part in pool.map(partial(_run_chunk, suite.check), chunks) for r in part]
    else:
        results = [suite.check(it) for _, it in items]
    failures = []
    per_n: dict[int, int] = {}
    for (n, item), res in zip(items, results):
        if res is SKIP:
            continue
        per_n[n] = per_n.get(n, 0) + 1
        if res is not None:
            failures.append(f"{_describe_item(item)}\t{res}")
    notes = _notes(theorem_id, top, failures)
    return VerificationReport(
        theorem_id=theorem_id,
        universe=f"{suite.describe} (N={top})",
        checked=sum(per_n.values()),
        failures=tuple(failures),
        per_n=tuple(sorted(per_n.items())),
        notes=tuple(notes),
        elapsed=time.perf_counter() - start,
    )


def _notes(theorem_id: str, top: int, failures: list[str]) -> list[str]:
    if theorem_id == "cor_5_7":
        return [f"I_{n}: {count_matching_orderings(make_family('I', n))}" for n in range(1, top + 1)]
    if theorem_id == "cor_5_6":
        return [f"P_{n}: {count_matching_orderings(make_family('P', n))}" for n in range(1, min(top, 8) + 1)]
    if theorem_id == "thm_5_8":
        found = minimal_non_matching_up_to(7)
        listed = canonical_code(make_family("Q", 7)) in found
        if not listed:
            failures.append("Q_7 missing from minimal_non_matching_up_to(7)")
        return [f"minimal non-matching classes up to 7 vertices: {len(found)}", f"Q_7 listed: {listed}"]
    if theorem_id == "fig_1":
        primes = [t for t in enumerate_canonical(5) if is_prime(t)]
        kinds = sorted(recognize_TUW(t)[0] for t in primes if recognize_TUW(t))
        if kinds != ["T", "U", "W"]:
            failures.append(f"prime 5-vertex classes recognised as {kinds}")
        return [f"prime classes: {len(primes)} ({', '.join(kinds)})"]
    if theorem_id == "thm_6_1_i":
        worst = 0
        for n in range(1, top + 1):
            for t in enumerate_canonical(n):
                if ex.has_pattern(t, ex.PatternKind("J", 4)) is None:
                    worst = max(worst, ex.bucket_construction(t, 4).max_length)
        return [f"longest backedge achieved: {worst}", f"allowed: {10 * 4 * 2 ** 8}"]
    return []


def suite_ids(criterion: int | None = None) -> list[str]:
    return [s.theorem_id for s in _SUITES if criterion is None or s.criterion == criterion]
