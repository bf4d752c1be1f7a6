"""Shared generators and brute-force oracles for the test suite.

The oracles here deliberately avoid the package's algorithmic shortcuts:
balance is decided by trying every switching, negative 4-cycles by
scanning every 4-subset, shortest negative cycles by exhaustive simple
cycle enumeration, and switching classes by orbit flooding over single
vertex switchings.
"""

from __future__ import annotations

import random
from itertools import combinations

from sgraph import SignedGraph, switch


def random_signed_graph(rng: random.Random, n: int, p: float = 0.45) -> SignedGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.choice((1, -1))))
    return SignedGraph.from_edge_list(n, edges)


def random_connected_signed_graph(rng: random.Random, n: int, extra: float = 0.3) -> SignedGraph:
    """Random spanning tree plus density ``extra`` chords, random signs."""
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[rng.randrange(i)]
        v = order[i]
        edges.append((min(u, v), max(u, v), rng.choice((1, -1))))
    present = {(u, v) for u, v, _ in edges}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra:
                edges.append((u, v, rng.choice((1, -1))))
    return SignedGraph.from_edge_list(n, edges)


def random_bipartite_signed_graph(
    rng: random.Random, r: int, s: int, p: float = 0.5
) -> SignedGraph:
    edges = []
    for u in range(r):
        for v in range(r, r + s):
            if rng.random() < p:
                edges.append((u, v, rng.choice((1, -1))))
    return SignedGraph.from_edge_list(r + s, edges)


def brute_is_balanced(g: SignedGraph) -> bool:
    """Balanced iff some switching makes every edge positive (2^n trials,
    fixing vertex 0 out of the switch set since U and its complement act
    identically)."""
    if g.n == 0:
        return True
    for mask in range(1 << (g.n - 1)):
        u_set = {v for v in range(1, g.n) if mask >> (v - 1) & 1}
        if all(s == 1 for _, _, s in switch(g, u_set).edges):
            return True
    return False


def brute_has_negative_c4(g: SignedGraph) -> bool:
    """Scan every 4-subset and both pairings for a negative 4-cycle."""
    for quad in combinations(range(g.n), 4):
        a, b, c, d = quad
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            signs = [
                g.sign(order[i], order[(i + 1) % 4]) for i in range(4)
            ]
            if all(signs) and signs[0] * signs[1] * signs[2] * signs[3] == -1:
                return True
    return False


def brute_shortest_negative_cycle_length(g: SignedGraph) -> int | None:
    """Length of the shortest negative simple cycle, by exhaustive DFS over
    simple paths (smallest-vertex-rooted), pruned to the best length."""
    best: int | None = None
    adj = g.adjacency

    def dfs(root: int, path: list[int], sign: int):
        nonlocal best
        if best is not None and len(path) >= best:
            return
        u = path[-1]
        for v, s in adj[u]:
            if v == root and len(path) >= 3:
                if sign * s == -1 and (best is None or len(path) < best):
                    best = len(path)
            elif v > root and v not in path:
                path.append(v)
                dfs(root, path, sign * s)
                path.pop()

    for root in range(g.n):
        dfs(root, [root], 1)
    return best


def count_switching_classes_brute(g: SignedGraph) -> int:
    """Orbits of the 2^m signatures under switching, by orbit flooding."""
    pairs = g.underlying_edges()
    m = len(pairs)
    seen = [False] * (1 << m)
    classes = 0
    for start in range(1 << m):
        if seen[start]:
            continue
        classes += 1
        stack = [start]
        seen[start] = True
        while stack:
            cur = stack.pop()
            for v in range(g.n):
                flipped = cur
                for i, (a, b) in enumerate(pairs):
                    if (a == v) != (b == v):
                        flipped ^= 1 << i
                if not seen[flipped]:
                    seen[flipped] = True
                    stack.append(flipped)
    return classes


def signature_from_mask(g: SignedGraph, mask: int) -> SignedGraph:
    """Signature on g's underlying graph: bit i set = edge i negative."""
    return SignedGraph(
        g.n,
        tuple(
            (u, v, -1 if mask >> i & 1 else 1)
            for i, (u, v, _) in enumerate(g.edges)
        ),
    )


def multiset_close(xs, ys, tol: float) -> bool:
    if len(xs) != len(ys):
        return False
    return all(abs(a - b) <= tol for a, b in zip(sorted(xs), sorted(ys)))
