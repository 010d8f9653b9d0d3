"""Partition arithmetic, sphere enumeration, and zig-zag counting.

The module reproduces the counting results for monogenic free adequate
monoids: left sphere sizes against the partition function, the trunk and
first-branch refinements, the two-sided sphere table, and the ballot
count of retract-free zig-zag idempotents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import Element, Flavor, make_element
from .retract import is_retract_free, retract
from .trees import XTree, canonical_code, out_adjacency, validate

GENERIC_LEFT_BOUND = 12
TWO_SIDED_BOUND = 8
ZIGZAG_BOUND = 18

# base cases are module state so a corrupted-table negative control can
# patch them without touching the recurrences
P_BASE = 1
Q_BASE = 1


@dataclass
class PartitionTable:
    """P(n,k): partitions of n into k parts; Q(n,k): into k distinct parts."""

    n_max: int
    P: dict[tuple[int, int], int] = field(default_factory=dict)
    Q: dict[tuple[int, int], int] = field(default_factory=dict)

    def p_total(self, n: int) -> int:
        return sum(self.P[(n, k)] for k in range(n + 1)) if n else self.P[(0, 0)]

    def q_total(self, n: int) -> int:
        return sum(self.Q[(n, k)] for k in range(n + 1)) if n else self.Q[(0, 0)]


def partition_table(n_max: int) -> PartitionTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    t = PartitionTable(n_max)

    def p(n: int, k: int) -> int:
        if n < 0 or k < 0:
            return 0
        if (n, k) in t.P:
            return t.P[(n, k)]
        if n == 0 and k == 0:
            v = P_BASE
        elif n == 0 or k == 0:
            v = 0
        else:
            v = p(n - 1, k - 1) + p(n - k, k)
        t.P[(n, k)] = v
        return v

    def q(n: int, k: int) -> int:
        if n < 0 or k < 0:
            return 0
        if (n, k) in t.Q:
            return t.Q[(n, k)]
        if n == 0 and k == 0:
            v = Q_BASE
        elif n == 0 or k == 0:
            v = 0
        else:
            v = q(n - k, k - 1) + q(n - k, k)
        t.Q[(n, k)] = v
        return v

    for n in range(n_max + 1):
        for k in range(n + 1):
            p(n, k)
            q(n, k)
    return t


def P(n: int, k: int | None = None) -> int:
    """P(n) or P(n,k); small values, recomputed per call for patchability."""
    if n < 0:
        return 0
    t = partition_table(n)
    return t.p_total(n) if k is None else t.P.get((n, k), 0)


def Q(n: int, k: int | None = None) -> int:
    if n < 0:
        return 0
    t = partition_table(n)
    return t.q_total(n) if k is None else t.Q.get((n, k), 0)


def partitions_into_distinct_parts(n: int, k: int):
    """All partitions of n into exactly k distinct positive parts, descending."""

    def rec(n: int, k: int, cap: int):
        if k == 0:
            if n == 0:
                yield ()
            return
        # largest part first; remaining k-1 distinct parts below it
        lo = (k * (k + 1)) // 2
        if n < lo:
            return
        for first in range(min(n - lo + k, cap), k - 1, -1):
            for rest in rec(n - first, k - 1, first - 1):
                yield (first,) + rest

    return rec(n, k, n)


# ---------------------------------------------------------------- censuses


@dataclass
class CensusRow:
    n: int
    total: int
    by_trunk: dict[int, int]
    by_trunk_and_first_branch: dict[tuple[int, int], int]
    idempotent_count: int


def _first_branch_index(t: XTree) -> int | None:
    """Smallest trunk index (from the start) carrying a non-trunk out-edge."""
    trunk = validate(t)
    trunk_next = {a: b for a, b, _ in trunk.edges}
    out = out_adjacency(t)
    for i, v in enumerate(trunk.vertices):
        nxt = trunk_next.get(v)
        if any(w != nxt for w, _ in out[v]):
            return i
    return None


def census_from_trees(n: int, trees: list[XTree]) -> CensusRow:
    by_trunk: dict[int, int] = {}
    by_kl: dict[tuple[int, int], int] = {}
    idem = 0
    for t in trees:
        k = validate(t).length
        by_trunk[k] = by_trunk.get(k, 0) + 1
        if k == 0:
            idem += 1
        l = _first_branch_index(t)
        if l is not None:
            by_kl[(k, l)] = by_kl.get((k, l), 0) + 1
    return CensusRow(n, len(trees), by_trunk, by_kl, idem)


# -------------------------------------------------- structural left sphere


def structural_left_trees(n: int) -> list[XTree]:
    """All retract-free left a-trees with n edges, built directly.

    For trunk length k, a tree is determined by the set Y of distances
    from the end carrying a branch and, per branch, its excess length
    over that distance; retract-freeness forces the excesses to be
    distinct, positive, and increasing with the distance.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[XTree] = []
    for k in range(n + 1):
        budget = n - k
        for r in range(0, k + 2):
            # r branch positions among distances {0..k}
            min_tau = r * (r + 1) // 2
            for Y in combinations(range(k + 1), r):
                rest = budget - sum(Y)
                if rest < min_tau:
                    continue
                for tau in partitions_into_distinct_parts(rest, r):
                    # tau descending; match to Y descending
                    lengths = {
                        y: y + tau[j]
                        for j, y in enumerate(sorted(Y, reverse=True))
                    }
                    out.append(_build_left_tree(k, lengths))
    return out


def _build_left_tree(k: int, branch_by_distance: dict[int, int]) -> XTree:
    # trunk vertices 0..k (start 0, end k), branch paths hang off v_{k-d}
    edges = [(i, i + 1, "a") for i in range(k)]
    nv = k + 1
    for d, length in sorted(branch_by_distance.items()):
        at = k - d
        prev = at
        for _ in range(length):
            edges.append((prev, nv, "a"))
            prev = nv
            nv += 1
    return XTree(nv, tuple(edges), 0, k)


# ----------------------------------------------------- generic enumeration


def rooted_tree_level_sequences(n_vertices: int):
    """Level sequences of all unlabeled rooted trees on n_vertices vertices."""
    if n_vertices <= 0:
        return
    if n_vertices == 1:
        yield [0]
        return
    L = list(range(n_vertices))
    yield L[:]
    while True:
        p = -1
        for i in range(n_vertices - 1, -1, -1):
            if L[i] > 1:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        for i in range(p, n_vertices):
            L[i] = L[i - (p - q)]
        yield L[:]


def _level_sequence_to_edges(L: list[int]) -> list[tuple[int, int, str]]:
    edges = []
    stack = [0]
    for i in range(1, len(L)):
        while len(stack) > L[i]:
            stack.pop()
        edges.append((stack[-1], i, "a"))
        stack.append(i)
    return edges


def generic_left_trees(n: int, bound: int = GENERIC_LEFT_BOUND) -> list[XTree]:
    """All retract-free left a-trees with n edges, by exhaustive search."""
    if n > bound:
        raise ValueError("n=%d exceeds the generic left bound %d" % (n, bound))
    seen: dict[bytes, XTree] = {}
    for L in rooted_tree_level_sequences(n + 1):
        edges = tuple(_level_sequence_to_edges(L))
        for end in range(n + 1):
            t = XTree(n + 1, edges, 0, end)
            if not is_retract_free(t):
                continue
            code = canonical_code(t)
            if code not in seen:
                seen[code] = t
    return [seen[c] for c in sorted(seen)]


def left_sphere(n: int, strategy: str = "structural") -> tuple[list[Element], CensusRow]:
    if strategy == "structural":
        trees = structural_left_trees(n)
    elif strategy == "generic":
        trees = generic_left_trees(n)
    else:
        raise ValueError("unknown strategy: %r" % strategy)
    trees = sorted(trees, key=canonical_code)
    elements = [
        Element(t, canonical_code(t), Flavor.LEFT) for t in trees
    ]
    return elements, census_from_trees(n, trees)


def two_sided_sphere(n: int, bound: int = TWO_SIDED_BOUND) -> tuple[list[Element], CensusRow]:
    """All retract-free a-trees with n edges: shapes x orientations x ends."""
    if n > bound:
        raise ValueError("n=%d exceeds the two-sided bound %d" % (n, bound))
    seen: dict[bytes, XTree] = {}
    for L in rooted_tree_level_sequences(n + 1):
        base = _level_sequence_to_edges(L)
        for mask in range(1 << n):
            edges = tuple(
                (a, b, lab) if not (mask >> i) & 1 else (b, a, lab)
                for i, (a, b, lab) in enumerate(base)
            )
            # ends: every vertex reachable by a directed path from the root
            out = [[] for _ in range(n + 1)]
            for a, b, _ in edges:
                out[a].append(b)
            reach = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for w in out[v]:
                    if w not in reach:
                        reach.add(w)
                        stack.append(w)
            for end in sorted(reach):
                t = XTree(n + 1, edges, 0, end)
                code = canonical_code(t)
                if code in seen:
                    continue
                if is_retract_free(t, engine="generic"):
                    seen[code] = t
    trees = [seen[c] for c in sorted(seen)]
    elements = [Element(t, canonical_code(t), Flavor.TWO_SIDED) for t in trees]
    return elements, census_from_trees(n, trees)


# ------------------------------------------------------------------ zig-zags


@dataclass(frozen=True)
class ZigZag:
    """A non-branching idempotent a-tree as an orientation word.

    away[i] is True when the i-th path edge (counted from the common
    start/end extremity) points away from the start.
    """

    away: tuple[bool, ...]

    @property
    def edges(self) -> int:
        return len(self.away)

    @property
    def height(self) -> int:
        return sum(self.away)


def zigzag_tree(z: ZigZag) -> XTree:
    n = z.edges
    edges = tuple(
        (i, i + 1, "a") if z.away[i] else (i + 1, i, "a") for i in range(n)
    )
    return XTree(n + 1, edges, 0, 0)


def tree_to_zigzag(t: XTree) -> ZigZag:
    validate(t)
    if t.start != t.end:
        raise ValueError("not a zig-zag tree: start and end differ")
    deg = [0] * t.vertices
    nbr: list[list[tuple[int, bool]]] = [[] for _ in range(t.vertices)]
    for a, b, _ in t.edges:
        deg[a] += 1
        deg[b] += 1
        nbr[a].append((b, True))
        nbr[b].append((a, False))
    if t.vertices > 1 and deg[t.start] != 1:
        raise ValueError("not a zig-zag tree: start is not at an extremity")
    if any(d > 2 for d in deg):
        raise ValueError("not a zig-zag tree: path branches")
    away = []
    prev, cur = -1, t.start
    for _ in range(t.edge_count):
        nxt = [(w, o) for w, o in nbr[cur] if w != prev]
        assert len(nxt) == 1
        w, outgoing = nxt[0]
        away.append(outgoing)
        prev, cur = cur, w
    return ZigZag(tuple(away))


def p_zigzag(n: int, i: int) -> ZigZag:
    """The minimal member of Z(n,i)."""
    if not (0 <= i < n / 2):
        raise ValueError("need 0 <= i < n/2")
    word = [False] * (n - 2 * i - 1)
    for j in range(2 * i):
        word.append(j % 2 == 0)
    word.append(False)
    return ZigZag(tuple(word))


def zigzag_ge(t: ZigZag, s: ZigZag) -> bool:
    """Prefix dominance of away-counts."""
    if t.edges != s.edges:
        raise ValueError("length mismatch")
    ct = cs = 0
    for at, as_ in zip(t.away, s.away):
        ct += at
        cs += as_
        if ct < cs:
            return False
    return True


def in_Z(z: ZigZag, i: int) -> bool:
    n = z.edges
    if i >= n / 2 or z.height != i:
        return False
    return zigzag_ge(z, p_zigzag(n, i))


def zigzag_census(n: int, bound: int = ZIGZAG_BOUND) -> dict[int, dict]:
    """Per height i: the total count C(n,i) and the Z(n,i) members."""
    if not (1 <= n <= bound):
        raise ValueError("n=%d outside 1..%d" % (n, bound))
    out: dict[int, dict] = {}
    max_i = (n - 1) // 2
    for i in range(max_i + 1):
        members = []
        for positions in combinations(range(n), i):
            away = [False] * n
            for p in positions:
                away[p] = True
            z = ZigZag(tuple(away))
            if in_Z(z, i):
                members.append(z)
        out[i] = {
            "all_count": math.comb(n, i),
            "Z_count": len(members),
            "members": members,
        }
    return out


def d_value(t: XTree, v: int) -> int:
    """Toward-edges minus away-edges along the start-to-v path of a zig-zag."""
    z = tree_to_zigzag(t)  # validates the shape
    if not (0 <= v < t.vertices):
        raise ValueError("vertex out of range")
    # path order from the start
    order = [t.start]
    nbr: list[list[int]] = [[] for _ in range(t.vertices)]
    for a, b, _ in t.edges:
        nbr[a].append(b)
        nbr[b].append(a)
    prev = -1
    cur = t.start
    d = 0
    pos = 0
    if v == t.start:
        return 0
    for step, away in enumerate(z.away):
        nxt = [w for w in nbr[cur] if w != prev][0]
        d += -1 if away else 1
        prev, cur = cur, nxt
        if cur == v:
            return d
    raise ValueError("vertex not on the path")


# --------------------------------------------------- identity checks


def sums_with_t_check(m: int, r: int, t: int) -> bool:
    """Both sides of the subset-sum partition identity, compared exactly."""
    if m < 1 or r < 1 or t < 1:
        raise ValueError("m, r, t must be >= 1")
    table = partition_table(m + t + 2)
    q = lambda n, k: table.Q.get((n, k), 0) if n >= 0 else 0

    def side(rr: int, mm: int, tt: int) -> int:
        # sum over Y subset of [rr] = {0..rr}; [-1] = empty set
        total = 0
        idx = list(range(rr + 1)) if rr >= 0 else []
        for size in range(len(idx) + 1):
            for Y in combinations(idx, size):
                total += q(mm - sum(Y), size + tt)
        return total

    lhs = side(r - 1, m, t)
    rhs = side(r - 2, m + t + 1, t + 1)
    return lhs == rhs


def hardy_ramanujan_estimate(n: int) -> float:
    """The classical asymptotic for the partition function P(n)."""
    if n <= 0:
        return 1.0
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


PUBLISHED_TABLE_S = [1, 3, 6, 14, 29, 74]
PUBLISHED_TABLE_SE = [1, 2, 3, 6, 11, 28]


def growth_report(n_max: int, rank: int = 1, two_sided_max: int = 5) -> dict:
    """Exact counts next to the reported growth estimates and bounds."""
    rows = []
    for n in range(n_max + 1):
        _, census = left_sphere(n, strategy="structural")
        binom = math.comb(n - 1, (n - 1) // 2) if n >= 1 else 1
        row = {
            "n": n,
            "left_sphere": census.total,
            "partition_value": P(n + 1),
            "hardy_ramanujan_estimate": hardy_ramanujan_estimate(n + 1),
            "idempotent_binomial_bound": binom,
        }
        if n <= two_sided_max:
            _, tcensus = two_sided_sphere(n)
            row["two_sided_sphere"] = tcensus.total
            row["two_sided_idempotents"] = tcensus.idempotent_count
            row["verified_by_published_table"] = n < len(PUBLISHED_TABLE_S)
            if row["two_sided_idempotents"] < binom:
                raise AssertionError(
                    "idempotent count below the binomial bound at n=%d" % n
                )
        rows.append(row)
    report = {
        "rank": rank,
        "growth_rate_lower_bound_base": 2 * rank,
        "rows": rows,
    }
    if rank >= 2:
        for row in rows:
            n = row["n"]
            row["rank_idempotent_lower_bound"] = (
                rank**n * row["idempotent_binomial_bound"]
            )
    return report
