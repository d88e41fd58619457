"""Definition-level brute-force checkers used to derive and cross-check test expectations.

Everything here is deliberately naive (subset enumeration, exhaustive search) and
independent of the package's algorithms, so the two can disagree only if one side
is wrong.
"""

from __future__ import annotations

import random
from itertools import combinations

from sfvs.graph import Graph, Instance, edge_key


def subsets(items, min_size=0, max_size=None):
    items = sorted(items)
    if max_size is None:
        max_size = len(items)
    for size in range(min_size, max_size + 1):
        yield from combinations(items, size)


def induces_cycle(g: Graph, vs) -> bool:
    """True iff g[vs] is exactly one cycle: connected, every degree 2, |vs| >= 3."""
    vs = set(vs)
    if len(vs) < 3:
        return False
    for v in vs:
        if len(g.neighbors(v) & vs) != 2:
            return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v) & vs:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def vertex_on_cycle(g: Graph, v: int) -> bool:
    """True iff some cycle passes through v (shortest such cycle is chordless,
    so checking induced cycles over subsets containing v is exhaustive)."""
    others = [u for u in g.vertices() if u != v]
    for size in range(2, len(others) + 1):
        for rest in combinations(others, size):
            if induces_cycle(g, set(rest) | {v}):
                return True
    return False


def is_t_forest(g: Graph, terminals) -> bool:
    return not any(vertex_on_cycle(g, t) for t in terminals)


def bridges(g: Graph) -> set[tuple[int, int]]:
    out = set()
    for u, v in g.edges():
        h = g.without_edge(u, v)
        seen = {u}
        stack = [u]
        reached = False
        while stack:
            x = stack.pop()
            if x == v:
                reached = True
                break
            for w in h.neighbors(x):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if not reached:
            out.add(edge_key(u, v))
    return out


def triangles_through_terminals(g: Graph, terminals) -> set[tuple[int, int, int]]:
    out = set()
    for trio in combinations(g.vertices(), 3):
        a, b, c = trio
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            if set(trio) & set(terminals):
                out.add(trio)
    return out


def maximal_cliques(g: Graph) -> set[frozenset[int]]:
    cliques = [set(s) for s in subsets(g.vertices(), min_size=1) if g.is_clique(s)]
    return {
        frozenset(c)
        for c in cliques
        if not any(c < d for d in cliques)
    }


def is_chordal(g: Graph) -> bool:
    vs = g.vertices()
    for size in range(4, len(vs) + 1):
        for s in combinations(vs, size):
            if induces_cycle(g, s):
                return False
    return True


def split_partitions(g: Graph) -> list[tuple[set[int], set[int]]]:
    """All (clique side, independent side) partitions; empty list iff not split."""
    vs = g.vertices()
    out = []
    for kside in subsets(vs):
        kset = set(kside)
        iset = set(vs) - kset
        if g.is_clique(kset) and not any(
            g.has_edge(u, v) for u, v in combinations(sorted(iset), 2)
        ):
            out.append((kset, iset))
    return out


def min_subset_fvs(g: Graph, terminals, cap=None) -> set[int] | None:
    """Smallest vertex set whose removal leaves a T-forest; None if cap exceeded."""
    vs = g.vertices()
    top = len(vs) if cap is None else min(cap, len(vs))
    for size in range(top + 1):
        for s in combinations(vs, size):
            if is_t_forest(g.without_vertices(s), set(terminals) - set(s)):
                return set(s)
    return None


def min_vertex_cover_size(g: Graph) -> int:
    vs = g.vertices()
    for size in range(len(vs) + 1):
        for s in combinations(vs, size):
            ss = set(s)
            if all(u in ss or v in ss for u, v in g.edges()):
                return size
    return len(vs)


def hitting_set_decision(universe, sets, budget) -> bool:
    sets = [set(s) for s in sets]
    for size in range(min(budget, len(universe)) + 1):
        for s in combinations(sorted(universe), size):
            ss = set(s)
            if all(ss & x for x in sets):
                return True
    return False


# random instance builders (seeded, test-local)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    g = Graph(range(1, n + 1))
    for u, v in combinations(range(1, n + 1), 2):
        if rng.random() < p:
            g.add_edge(u, v)
    return g


def random_instance(n: int, p: float, tf: float, k: int, rng: random.Random) -> Instance:
    g = random_graph(n, p, rng)
    terms = {v for v in g.vertices() if rng.random() < tf}
    return Instance(g, terms, k)
