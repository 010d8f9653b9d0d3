"""The retraction engine.

A branch of a tree is deleted when it admits a label- and
direction-preserving morphism, anchored at the branch's attachment
vertex, into the rest of the tree.  Extending such a morphism by the
identity on the rest yields an idempotent endomorphism fixing both
roots, so each deletion realises a retraction; greedily deleting until
nothing folds reaches the retract-free retract.

Completeness of the greedy loop: if a proper retraction with image R
exists, pick an edge e outside R whose anchor vertex lies in R (one
exists on the boundary).  The whole branch hanging off e is disjoint
from R and the retraction maps it into R, so a foldable branch exists
whenever the tree is not retract-free.  Uniqueness of the retract-free
retract is a general fact about relational structures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .trees import (
    XTree,
    TrunkInfo,
    canonical_code,
    classify,
    is_monogenic,
    undirected_adjacency,
    validate,
)

ORACLE_EDGE_BOUND = 8


@dataclass(frozen=True)
class Branch:
    """A deletable unit: a non-trunk edge plus the subtree hanging off it.

    `vertices` is the vertex set of the hanging subtree (anchor excluded);
    the trunk lies entirely outside it.
    """

    anchor: int
    edge: tuple[int, int, str]
    vertices: frozenset[int]


@dataclass(frozen=True)
class RootedPattern:
    """A subtree viewed as rooted at `root`, reusing host vertex ids."""

    root: int
    edges: tuple[tuple[int, int, str], ...]


@dataclass(frozen=True)
class Endomorphism:
    vertex_map: tuple[int, ...]

    @property
    def is_idempotent(self) -> bool:
        m = self.vertex_map
        return all(m[m[v]] == m[v] for v in range(len(m)))

    @property
    def is_identity(self) -> bool:
        return all(m == v for v, m in enumerate(self.vertex_map))


def _pattern_children(pattern: RootedPattern) -> dict[int, list[tuple[int, bool, str]]]:
    adj: dict[int, list[tuple[int, bool, str]]] = {pattern.root: []}
    for a, b, lab in pattern.edges:
        adj.setdefault(a, []).append((b, True, lab))
        adj.setdefault(b, []).append((a, False, lab))
    children: dict[int, list[tuple[int, bool, str]]] = {}
    stack = [(pattern.root, -1)]
    while stack:
        v, par = stack.pop()
        kids = [(w, out, lab) for w, out, lab in adj.get(v, []) if w != par]
        children[v] = kids
        for w, _, _ in kids:
            stack.append((w, v))
    return children


def hom_exists(
    pattern: RootedPattern,
    host: XTree,
    anchor: int,
    allowed: frozenset[int] | None = None,
    forbidden_first_edge: tuple[int, int, str] | None = None,
) -> bool:
    """Is there a morphism of the pattern into the host sending root to anchor?

    The map preserves edge directions and labels; folding is allowed
    (distinct pattern vertices may share an image).  `allowed` restricts
    image vertices; `forbidden_first_edge` excludes one host edge as the
    image of the pattern's root edge.
    """
    if not (0 <= anchor < host.vertices):
        raise ValueError("anchor not in host")
    if allowed is None:
        allowed = frozenset(range(host.vertices))
    host_adj = undirected_adjacency(host)
    children = _pattern_children(pattern)
    memo: dict[tuple[int, int], bool] = {}

    def match(p: int, h: int) -> bool:
        key = (p, h)
        if key in memo:
            return memo[key]
        memo[key] = ok = all(
            any(
                w in allowed and out2 == out and lab2 == lab and match(c, w)
                for w, out2, lab2 in host_adj[h]
            )
            for c, out, lab in children[p]
        )
        return ok

    if anchor not in allowed:
        return False
    for c, out, lab in children[pattern.root]:
        found = False
        for w, out2, lab2 in host_adj[anchor]:
            if w not in allowed or out2 != out or lab2 != lab:
                continue
            edge = (anchor, w, lab) if out else (w, anchor, lab)
            if forbidden_first_edge is not None and edge == forbidden_first_edge:
                continue
            if match(c, w):
                found = True
                break
        if not found:
            return False
    return True


def branches(t: XTree, trunk: TrunkInfo | None = None) -> list[Branch]:
    """All branches of t, one per non-trunk edge, in sorted edge order."""
    if trunk is None:
        trunk = validate(t)
    trunk_edge_set = set(trunk.edges)
    trunk_vertices = set(trunk.vertices)
    adj = undirected_adjacency(t)
    out: list[Branch] = []
    for edge in sorted(t.edges):
        if edge in trunk_edge_set:
            continue
        a, b, lab = edge
        # Component of b with the edge removed; the trunk sits on exactly
        # one side since it is connected and avoids this edge.
        comp = {b}
        stack = [b]
        while stack:
            v = stack.pop()
            for w, _, _ in adj[v]:
                if w not in comp and not (
                    (v == a and w == b) or (v == b and w == a)
                ):
                    comp.add(w)
                    stack.append(w)
        if comp & trunk_vertices:
            # trunk on the b side: the branch is a's component, anchored at b
            comp = set(range(t.vertices)) - comp
            anchor = b
        else:
            anchor = a
        out.append(Branch(anchor, edge, frozenset(comp)))
    return out


def _branch_pattern(t: XTree, br: Branch) -> RootedPattern:
    edges = [br.edge]
    inside = br.vertices
    for e in t.edges:
        a, b, _ = e
        if a in inside and b in inside:
            edges.append(e)
    return RootedPattern(br.anchor, tuple(edges))


def _branch_foldable(t: XTree, br: Branch) -> bool:
    allowed = frozenset(range(t.vertices)) - br.vertices
    return hom_exists(_branch_pattern(t, br), t, br.anchor, allowed=allowed)


def find_foldable_branch(
    t: XTree, rng: random.Random | None = None
) -> Branch | None:
    """A branch mapping into the rest of the tree, or None if retract-free.

    Deterministic (lowest edge first) unless an RNG is supplied, in which
    case a uniformly random foldable branch is returned.
    """
    trunk = validate(t)
    candidates = branches(t, trunk)
    if rng is None:
        for br in candidates:
            if _branch_foldable(t, br):
                return br
        return None
    foldable = [br for br in candidates if _branch_foldable(t, br)]
    return rng.choice(foldable) if foldable else None


def delete_branch(t: XTree, br: Branch) -> XTree:
    keep = [v for v in range(t.vertices) if v not in br.vertices]
    relabel = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (relabel[a], relabel[b], lab)
        for a, b, lab in t.edges
        if a not in br.vertices and b not in br.vertices
    )
    return XTree(len(keep), edges, relabel[t.start], relabel[t.end])


def retract(t: XTree, rng: random.Random | None = None) -> XTree:
    """The retract-free retract; independent of deletion order."""
    validate(t)
    while True:
        br = find_foldable_branch(t, rng=rng)
        if br is None:
            return t
        t = delete_branch(t, br)


def _left_monogenic_retract_free(t: XTree, trunk: TrunkInfo) -> bool:
    # Fast path for monogenic out-trees: a branch folds at its anchor iff
    # some sibling subtree is at least as high, so the tree is retract-free
    # iff every non-trunk child is its vertex's unique strict height maximum.
    children: list[list[int]] = [[] for _ in range(t.vertices)]
    for a, b, _ in t.edges:
        children[a].append(b)
    height = [0] * t.vertices
    order: list[int] = []
    stack = [t.start]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])
    for v in reversed(order):
        height[v] = 1 + max((height[c] for c in children[v]), default=-1)
    on_trunk = [False] * t.vertices
    trunk_child = [-1] * t.vertices
    for a, b, _ in trunk.edges:
        on_trunk[a] = True
        trunk_child[a] = b
    on_trunk[t.end] = True
    for v in range(t.vertices):
        kids = children[v]
        for c in kids:
            if c == trunk_child[v]:
                continue
            if any(height[c] <= height[c2] for c2 in kids if c2 != c):
                return False
    return True


def is_retract_free(t: XTree, engine: str = "auto") -> bool:
    """True iff the tree admits no non-trivial retraction.

    engine="auto" dispatches monogenic left trees to a height-comparison
    fast path (cross-validated against the generic engine); "generic"
    always runs the morphism search.
    """
    trunk = validate(t)
    if engine == "auto" and is_monogenic(t) and classify(t).is_left:
        return _left_monogenic_retract_free(t, trunk)
    if engine not in ("auto", "generic"):
        raise ValueError("unknown engine: %r" % engine)
    return find_foldable_branch(t) is None


def endomorphism_oracle(t: XTree, max_edges: int = ORACLE_EDGE_BOUND) -> list[Endomorphism]:
    """All label/direction-preserving self-maps fixing start and end.

    Brute-force validation oracle: the tree is retract-free iff the
    identity is the only idempotent map returned.
    """
    validate(t)
    if t.edge_count > max_edges:
        raise ValueError(
            "tree has %d edges; oracle bound is %d" % (t.edge_count, max_edges)
        )
    adj = undirected_adjacency(t)
    # BFS order from the start so every vertex is constrained by its parent.
    order: list[tuple[int, int, bool, str]] = []
    seen = {t.start}
    queue = [t.start]
    while queue:
        v = queue.pop(0)
        for w, out, lab in adj[v]:
            if w not in seen:
                seen.add(w)
                order.append((w, v, out, lab))
                queue.append(w)

    results: list[Endomorphism] = []
    amap = [-1] * t.vertices
    amap[t.start] = t.start

    def extend(i: int) -> None:
        if i == len(order):
            if amap[t.end] == t.end:
                results.append(Endomorphism(tuple(amap)))
            return
        v, par, out, lab = order[i]
        for w, out2, lab2 in adj[amap[par]]:
            if out2 == out and lab2 == lab:
                amap[v] = w
                extend(i + 1)
        amap[v] = -1

    extend(0)
    return results


def embeddings(small: XTree, big: XTree) -> list[tuple[int, ...]]:
    """All injective root-fixing morphisms of `small` into `big`."""
    validate(small)
    validate(big)
    if small.start == small.end:
        if big.start != big.end:
            return []
    elif big.start == big.end:
        return []
    adj_s = undirected_adjacency(small)
    adj_b = undirected_adjacency(big)
    order: list[tuple[int, int, bool, str]] = []
    seen = {small.start}
    queue = [small.start]
    while queue:
        v = queue.pop(0)
        for w, out, lab in adj_s[v]:
            if w not in seen:
                seen.add(w)
                order.append((w, v, out, lab))
                queue.append(w)

    results: list[tuple[int, ...]] = []
    amap = [-1] * small.vertices
    amap[small.start] = big.start
    used = [False] * big.vertices
    used[big.start] = True

    def extend(i: int) -> None:
        if i == len(order):
            if amap[small.end] == big.end:
                results.append(tuple(amap))
            return
        v, par, out, lab = order[i]
        for w, out2, lab2 in adj_b[amap[par]]:
            if out2 == out and lab2 == lab and not used[w]:
                amap[v] = w
                used[w] = True
                extend(i + 1)
                used[w] = False
        amap[v] = -1

    extend(0)
    return results


def strongly_retracts(t: XTree, path: list[tuple[int, int, str]]) -> bool:
    """True iff no root-fixing embedded copy of retract(t) meets the path."""
    validate(t)
    edge_set = set(t.edges)
    for i, e in enumerate(path):
        if tuple(e) not in edge_set:
            raise ValueError("path edge %r not in tree" % (e,))
        if i > 0 and path[i - 1][1] != e[0]:
            raise ValueError("edges do not form a directed path")
    path_set = {tuple(e) for e in path}
    rf = retract(t)
    for amap in embeddings(rf, t):
        image_edges = {(amap[a], amap[b], lab) for a, b, lab in rf.edges}
        if image_edges & path_set:
            return False
    return True
