"""Signed-graph data model and switching machinery.

A signed graph is a simple undirected graph whose edges carry a sign in
{+1, -1}.  Vertices are 0-based integers.  Edges are stored as (u, v, sign)
tuples with u < v, sorted by (u, v), so two graphs are equal exactly when
they have the same vertex count and the same signed edge set.

Everything here is immutable: operations return new graphs and never mutate
their inputs, so values can be shared freely across threads or processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import (
    BadSignError,
    DuplicateEdgeError,
    NotBipartiteError,
    SelfLoopError,
    UnderlyingGraphMismatchError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int, int]  # (u, v, sign) with u < v and sign in {+1, -1}


@dataclass(frozen=True)
class SignedGraph:
    """An immutable signed graph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edge_list(cls, n: int, edges: Sequence[tuple[int, int, int]]) -> "SignedGraph":
        """Validate and canonicalize an edge list into a SignedGraph.

        Raises VertexOutOfRangeError, SelfLoopError, BadSignError or
        DuplicateEdgeError on malformed input.
        """
        if n < 0:
            raise VertexOutOfRangeError(f"vertex count must be nonnegative, got {n}")
        seen: set[tuple[int, int]] = set()
        normalized: list[Edge] = []
        for u, v, sign in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if sign not in (1, -1):
                raise BadSignError(f"edge ({u},{v}) has sign {sign!r}, want +1 or -1")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append((key[0], key[1], sign))
        normalized.sort()
        return cls(n, tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, sign), sorted by neighbor."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _sign_index(self) -> dict[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    def sign(self, u: int, v: int) -> int:
        """Sign of edge uv, or 0 when uv is not an edge."""
        key = (u, v) if u < v else (v, u)
        return self._sign_index.get(key, 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.sign(u, v) != 0

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def underlying_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)


@dataclass(frozen=True)
class Bipartition:
    """The two sides of a bipartite graph, with len(left) <= len(right)."""

    left: frozenset[int]
    right: frozenset[int]

    @property
    def r(self) -> int:
        return len(self.left)

    @property
    def s(self) -> int:
        return len(self.right)


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given by its vertex sequence, with its edge-sign product."""

    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_vertices(cls, g: SignedGraph, seq: Sequence[int]) -> "CycleWitness":
        """Build a canonical witness from a vertex sequence, validating it.

        The sequence is rotated so its smallest vertex comes first and the
        direction is the lexicographically smaller of the two, which keeps
        witnesses byte-stable across runs.
        """
        t = len(seq)
        if t < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {t}")
        if len(set(seq)) != t:
            raise ValueError("cycle vertices must be distinct")
        sign = 1
        for i in range(t):
            s = g.sign(seq[i], seq[(i + 1) % t])
            if s == 0:
                raise ValueError(f"({seq[i]},{seq[(i + 1) % t]}) is not an edge")
            sign *= s
        return cls(_canonical_rotation(tuple(seq)), sign)

    def is_chordless(self, g: SignedGraph) -> bool:
        """True when no non-consecutive pair on the cycle is adjacent."""
        t = len(self.vertices)
        for i in range(t):
            for j in range(i + 2, t):
                if i == 0 and j == t - 1:
                    continue
                if g.has_edge(self.vertices[i], self.vertices[j]):
                    return False
        return True


@dataclass(frozen=True)
class SwitchCanonicalForm:
    """Forest-normalized representative of a switching class.

    ``graph`` carries +1 on every spanning-forest edge; ``cotree_signs``
    lists the signs of the remaining edges in edge-list order.  Two signed
    graphs on the same labeled underlying graph are switching equivalent
    exactly when their cotree sign vectors agree.
    """

    graph: SignedGraph
    switch_set: frozenset[int]
    forest: tuple[tuple[int, int], ...]
    cotree_signs: tuple[int, ...]


def _canonical_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate so the smallest vertex is first; pick the lex-smaller direction."""
    k = seq.index(min(seq))
    forward = seq[k:] + seq[:k]
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return min(forward, backward)


def _check_vertex_subset(g: SignedGraph, u_set) -> frozenset[int]:
    u_set = frozenset(u_set)
    for v in u_set:
        if not (0 <= v < g.n):
            raise VertexOutOfRangeError(f"switch vertex {v} outside 0..{g.n - 1}")
    return u_set


def switch(g: SignedGraph, u_set) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``u_set``."""
    u_set = _check_vertex_subset(g, u_set)
    edges = tuple(
        (u, v, -s if (u in u_set) != (v in u_set) else s) for u, v, s in g.edges
    )
    return SignedGraph(g.n, edges)


def negate(g: SignedGraph) -> SignedGraph:
    """Reverse the sign of every edge."""
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def relabel(g: SignedGraph, mapping: Sequence[int]) -> SignedGraph:
    """Apply the vertex bijection ``mapping`` (old label -> new label)."""
    if sorted(mapping) != list(range(g.n)):
        raise VertexOutOfRangeError("mapping is not a bijection on 0..n-1")
    return SignedGraph.from_edge_list(
        g.n, [(mapping[u], mapping[v], s) for u, v, s in g.edges]
    )


def _bfs_forest(g: SignedGraph):
    """Deterministic BFS forest over all components.

    Roots are the smallest unvisited labels, neighbors are scanned in sorted
    order.  Returns (parent, depth, theta, component) where theta[v] is the
    product of edge signs on the forest path from v's root, and the forest
    edge set as sorted (u, v) pairs.
    """
    n = g.n
    parent: list[int | None] = [None] * n
    depth = [0] * n
    theta = [1] * n
    comp = [-1] * n
    forest: list[tuple[int, int]] = []
    adj = g.adjacency
    c = 0
    for root in range(n):
        if comp[root] >= 0:
            continue
        comp[root] = c
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, s in adj[u]:
                if comp[v] >= 0:
                    continue
                comp[v] = c
                parent[v] = u
                depth[v] = depth[u] + 1
                theta[v] = theta[u] * s
                forest.append((u, v) if u < v else (v, u))
                queue.append(v)
        c += 1
    return parent, depth, theta, comp, sorted(forest)


def bipartition(g: SignedGraph) -> Bipartition:
    """2-color the underlying graph, or raise NotBipartiteError.

    Component roots go to the left side; the sides are swapped at the end
    if needed so that len(left) <= len(right).  The error carries an odd
    CycleWitness built from the BFS tree.
    """
    parent, depth, _, _, _ = _bfs_forest(g)
    for u, v, _s in g.edges:
        # forest edges always change depth parity, so only chords can trip this
        if (depth[u] + depth[v]) % 2 == 0:
            raise NotBipartiteError(_odd_cycle_witness(g, parent, depth, u, v))
    left = frozenset(v for v in range(g.n) if depth[v] % 2 == 0)
    right = frozenset(v for v in range(g.n) if depth[v] % 2 == 1)
    if len(left) > len(right):
        left, right = right, left
    return Bipartition(left, right)


def _odd_cycle_witness(g, parent, depth, u, v) -> CycleWitness:
    """Cycle through the BFS-tree paths of u and v plus the edge uv."""
    pu, pv = u, v
    path_u, path_v = [u], [v]
    while depth[pu] > depth[pv]:
        pu = parent[pu]
        path_u.append(pu)
    while depth[pv] > depth[pu]:
        pv = parent[pv]
        path_v.append(pv)
    while pu != pv:
        pu = parent[pu]
        pv = parent[pv]
        path_u.append(pu)
        path_v.append(pv)
    # path_u ends at the LCA; drop it from path_v and splice
    seq = path_u + list(reversed(path_v[:-1]))
    return CycleWitness.from_vertices(g, seq)


def component_count(g: SignedGraph) -> int:
    """Number of connected components of the underlying graph."""
    _, _, _, comp, _ = _bfs_forest(g)
    return max(comp) + 1 if g.n else 0


def underlying_positive(g: SignedGraph) -> SignedGraph:
    """The all-positive signature on g's underlying graph."""
    return SignedGraph(g.n, tuple((u, v, 1) for u, v, _ in g.edges))


def is_balanced(g: SignedGraph) -> bool:
    """True iff every cycle has positive sign.

    Uses forest sign-labeling: with theta the forest-path sign product,
    the graph is balanced iff theta[u]*sign(uv)*theta[v] = +1 for every
    non-forest edge.
    """
    _, _, theta, _, forest = _bfs_forest(g)
    forest_set = set(forest)
    for u, v, s in g.edges:
        if (u, v) in forest_set:
            continue
        if theta[u] * s * theta[v] == -1:
            return False
    return True


def forest_normalize(g: SignedGraph) -> SwitchCanonicalForm:
    """Switch so the deterministic BFS spanning forest is all-positive.

    The result is the unique representative of the switching class of g
    for this forest and labeling, so it doubles as a class fingerprint.
    """
    _, _, theta, _, forest = _bfs_forest(g)
    u_set = frozenset(v for v in range(g.n) if theta[v] == -1)
    normalized = switch(g, u_set)
    forest_set = set(forest)
    cotree = tuple(s for u, v, s in normalized.edges if (u, v) not in forest_set)
    return SwitchCanonicalForm(normalized, u_set, tuple(forest), cotree)


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True iff g2 = switch(g1, U) for some U (same labeled underlying graph)."""
    if g1.n != g2.n or g1.underlying_edges() != g2.underlying_edges():
        raise UnderlyingGraphMismatchError("graphs have different underlying graphs")
    return forest_normalize(g1).graph.edges == forest_normalize(g2).graph.edges


def shortest_negative_cycle(g: SignedGraph) -> CycleWitness | None:
    """A minimum-length negative cycle, or None when the graph is balanced.

    Searches the signed double cover: each vertex v lifts to (v, 0) and
    (v, 1), and an edge uv links sheets ((u,e) to (v,e)) when positive and
    crosses them when negative.  A shortest negative cycle through v is a
    shortest (v,0) -> (v,1) path; taking the minimum over v and splicing
    out positive sub-loops of the projected walk yields a simple cycle,
    which is necessarily chordless.
    """
    n = g.n
    adj = g.adjacency
    best_len: int | None = None
    best_walk: list[int] | None = None
    for v0 in range(n):
        # BFS in the double cover from (v0, 0); node id = 2*v + sheet
        dist = {2 * v0: 0}
        par: dict[int, int] = {}
        queue = deque([2 * v0])
        target = 2 * v0 + 1
        found = None
        while queue:
            node = queue.popleft()
            if best_len is not None and dist[node] >= best_len:
                break
            u, sheet = node >> 1, node & 1
            for w, s in adj[u]:
                nxt = 2 * w + (sheet if s == 1 else 1 - sheet)
                if nxt in dist:
                    continue
                dist[nxt] = dist[node] + 1
                par[nxt] = node
                if nxt == target:
                    found = nxt
                    queue.clear()
                    break
                queue.append(nxt)
        if found is None:
            continue
        if best_len is None or dist[found] < best_len:
            walk = [found]
            while walk[-1] != 2 * v0:
                walk.append(par[walk[-1]])
            best_walk = [node >> 1 for node in reversed(walk)]
            best_len = len(best_walk) - 1
    if best_walk is None:
        return None
    cycle = _extract_negative_cycle(g, best_walk)
    witness = CycleWitness.from_vertices(g, cycle)
    assert witness.sign == -1
    assert witness.is_chordless(g), "shortest negative cycle must be induced"
    return witness


def _extract_negative_cycle(g: SignedGraph, walk: list[int]) -> list[int]:
    """Reduce a closed negative walk to a simple negative cycle on it.

    Positive sub-loops are spliced out; a negative sub-loop is returned as
    soon as one closes.  The total walk sign is -1, so this terminates with
    a negative simple cycle no longer than the walk.
    """
    stack = [walk[0]]
    cum = [1]
    pos = {walk[0]: 0}
    for i in range(1, len(walk)):
        w = walk[i]
        s = g.sign(walk[i - 1], w)
        c = cum[-1] * s
        if w in pos:
            j = pos[w]
            loop_sign = c * cum[j]
            if loop_sign == -1:
                return stack[j:]
            for x in stack[j + 1 :]:
                del pos[x]
            del stack[j + 1 :]
            del cum[j + 1 :]
        else:
            stack.append(w)
            cum.append(c)
            pos[w] = len(stack) - 1
    raise AssertionError("closed walk was not negative")


def has_negative_c4(g: SignedGraph) -> CycleWitness | None:
    """A negative 4-cycle, or None.

    For each vertex pair {u, w} the products sign(ux)*sign(xw) over common
    neighbors x are collected; a negative 4-cycle through u, w exists iff
    both products +1 and -1 occur.
    """
    adj = g.adjacency
    for u in range(g.n):
        nbr_u = {x: s for x, s in adj[u]}
        for w in range(u + 1, g.n):
            plus = minus = None
            for x, sw in adj[w]:
                su = nbr_u.get(x)
                if su is None:
                    continue
                if su * sw == 1:
                    if plus is None:
                        plus = x
                else:
                    if minus is None:
                        minus = x
                if plus is not None and minus is not None:
                    return CycleWitness.from_vertices(g, (u, plus, w, minus))
    return None


def switching_class_representatives(g: SignedGraph) -> Iterator[SignedGraph]:
    """All switching classes of g's underlying graph, one representative each.

    Representatives carry +1 on the deterministic BFS forest and iterate
    every sign pattern on the co-tree edges, so exactly 2^(m-n+c) graphs
    are produced; the first one (all co-tree edges positive) is the
    balanced class.  The input's own signs are ignored.
    """
    _, _, _, _, forest = _bfs_forest(g)
    forest_set = set(forest)
    pairs = g.underlying_edges()
    cotree_idx = [i for i, uv in enumerate(pairs) if uv not in forest_set]
    k = len(cotree_idx)
    base = [(u, v, 1) for u, v in pairs]
    for bits in range(1 << k):
        edges = list(base)
        for b, i in enumerate(cotree_idx):
            if bits >> b & 1:
                u, v, _ = edges[i]
                edges[i] = (u, v, -1)
        yield SignedGraph(g.n, tuple(edges))


def _degree_profiles(g: SignedGraph) -> list[tuple]:
    """Switching-invariant vertex fingerprints: 2 rounds of color refinement."""
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(2):
        colors = [
            hash((colors[v], tuple(sorted(colors[w] for w, _ in g.adjacency[v]))))
            for v in range(g.n)
        ]
    return colors


def switching_isomorphism(
    g1: SignedGraph, g2: SignedGraph
) -> tuple[tuple[int, ...], frozenset[int]] | None:
    """A certificate (mapping, switch set) with switch(relabel(g1, mapping), U) == g2.

    Backtracking over underlying-graph isomorphisms with degree and
    color-refinement pruning; a candidate bijection is accepted when the
    pulled-back signature is switching equivalent to g2's.  Returns None
    when the graphs are not switching isomorphic.  Intended for small
    graphs (n up to ~16); larger inputs work but may be slow.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    n = g1.n
    if n == 0:
        return (), frozenset()
    prof1 = _degree_profiles(g1)
    prof2 = _degree_profiles(g2)
    if sorted(prof1) != sorted(prof2):
        return None

    # Placement order: most-constrained first (ties by label).
    order: list[int] = []
    placed = [False] * n
    for _ in range(n):
        best = min(
            (v for v in range(n) if not placed[v]),
            key=lambda v: (
                -sum(placed[w] for w, _ in g1.adjacency[v]),
                -g1.degree(v),
                v,
            ),
        )
        placed[best] = True
        order.append(best)

    mapping: list[int] = [-1] * n
    used = [False] * n
    adj2 = [{w for w, _ in g2.adjacency[v]} for v in range(n)]

    def extend(idx: int):
        if idx == n:
            h = relabel(g1, mapping)
            nf_h = forest_normalize(h)
            if nf_h.graph.edges == _nf2.graph.edges:
                return tuple(mapping), frozenset(nf_h.switch_set ^ _nf2.switch_set)
            return None
        u = order[idx]
        placed_nbrs = [(w, mapping[w]) for w, _ in g1.adjacency[u] if mapping[w] >= 0]
        for w2 in range(n):
            if used[w2] or prof2[w2] != prof1[u]:
                continue
            ok = True
            for _w1, img in placed_nbrs:
                if img not in adj2[w2]:
                    ok = False
                    break
            if ok and len(placed_nbrs) == sum(
                1 for x in adj2[w2] if x in _images
            ):
                mapping[u] = w2
                used[w2] = True
                _images.add(w2)
                result = extend(idx + 1)
                if result is not None:
                    return result
                mapping[u] = -1
                used[w2] = False
                _images.discard(w2)
        return None

    _nf2 = forest_normalize(g2)
    _images: set[int] = set()
    return extend(0)


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True iff some relabeling of g1 is switching equivalent to g2."""
    return switching_isomorphism(g1, g2) is not None


def canonical_key(g: SignedGraph):
    """A total invariant of the switching-isomorphism class of g.

    Minimizes, over vertex orderings, the per-position encoding: the
    adjacency bits to earlier vertices, plus one sign bit per cycle-closing
    back edge after normalizing the earliest-edge spanning forest to all
    positive signs (tracked with a signed union-find).  The co-tree sign
    vector determines all cycle signs, hence the switching class, so equal
    keys mean switching isomorphic.  Interchangeable twin candidates are
    explored once, which keeps highly symmetric graphs (empty, complete,
    complete bipartite) tractable; general worst cases remain exponential,
    so this is meant for small n.
    """
    n = g.n
    if n == 0:
        return (0,)
    prof = _degree_profiles(g)
    adj_sets = [{w for w, _ in g.adjacency[v]} for v in range(n)]

    best: list[tuple] | None = None

    def find(parent: list[int], sgn: list[int], x: int) -> tuple[int, int]:
        s = 1
        while parent[x] != x:
            s *= sgn[x]
            x = parent[x]
        return x, s

    def rows_for(perm: list[int], v: int, parent: list[int], sgn: list[int]) -> tuple:
        """Encoding row for placing v; mutates the union-find copy."""
        adj_row = tuple(1 if p in adj_sets[v] else 0 for p in perm)
        bits = []
        for j, p in enumerate(perm):
            if p not in adj_sets[v]:
                continue
            sigma = g.sign(v, p)
            rv, sv = find(parent, sgn, v)
            rp, sp = find(parent, sgn, p)
            if rv != rp:
                # spanning-forest edge: gauge the merged tree so it is +1
                parent[rp] = rv
                sgn[rp] = sigma * sv * sp
            else:
                bits.append(0 if sv * sp * sigma == 1 else 1)
        return (adj_row, tuple(bits))

    def twins(cands: list[int]) -> list[int]:
        """Drop candidates interchangeable with an earlier one by a
        (possibly sign-negating) swap automorphism."""
        kept: list[int] = []
        for v in cands:
            dup = False
            for w in kept:
                if adj_sets[v] - {w} != adj_sets[w] - {v}:
                    continue
                ratios = {
                    g.sign(v, x) * g.sign(w, x)
                    for x in adj_sets[v] - {w, v}
                }
                if len(ratios) <= 1:
                    dup = True
                    break
            if not dup:
                kept.append(v)
        return kept

    def search(perm: list[int], rows: list[tuple], parent: list[int], sgn: list[int]):
        nonlocal best
        if len(perm) == n:
            if best is None or rows < best:
                best = list(rows)
            return
        remaining = [v for v in range(n) if v not in perm_set]
        cands = twins(sorted(remaining, key=lambda v: prof[v]))
        scored = []
        for v in cands:
            par, sg = parent[:], sgn[:]
            row = rows_for(perm, v, par, sg)
            scored.append((row, v, par, sg))
        scored.sort(key=lambda t: t[0])
        for row, v, par, sg in scored:
            rows.append(row)
            if best is not None and rows > best[: len(rows)]:
                rows.pop()
                continue
            perm.append(v)
            perm_set.add(v)
            search(perm, rows, par, sg)
            perm.pop()
            perm_set.discard(v)
            rows.pop()

    perm_set: set[int] = set()
    search([], [], list(range(n)), [1] * n)
    assert best is not None
    return (n, tuple(best))
