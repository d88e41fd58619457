"""Instance families pinned to a single first-firing rule.

Each family builds at least fifty instances on which the named rule is the
least-indexed applicable one, by construction: earlier rules' preconditions
are defeated (terminals keep neighbors alive, matchings stay below
threshold, clique edges stay highlighted) while the target rule's
precondition is met.  Identifier permutations and size parameters vary per
seed, so the families also exercise the deterministic lowest-id tie
breaking inside each rule.
"""

from __future__ import annotations

import random

from sfvs.graph import Graph, Instance
from test_kernel import clique_graph, covered_triangle_base, split_instance
from test_solver import leaf_forest

CASES_PER_FAMILY = 52


def relabel(inst, rng, anchor=None, group=()):
    """Same instance under a random bijection onto 1..n.

    When given, ``anchor`` is guaranteed the smallest new id within
    ``group``; constructions whose firing order scans ids use this to stay
    pinned to the target rule.
    """
    vs = inst.graph.vertices()
    new_ids = list(range(1, len(vs) + 1))
    rng.shuffle(new_ids)
    mapping = dict(zip(vs, new_ids))
    if anchor is not None:
        low = min(group, key=lambda v: mapping[v])
        mapping[anchor], mapping[low] = mapping[low], mapping[anchor]
    g = Graph(new_ids)
    for u, v in inst.graph.edges():
        g.add_edge(mapping[u], mapping[v])
    return Instance(g, {mapping[t] for t in inst.terminals}, inst.k)


def covered_clique(k):
    """K_{k+2} with one independent terminal witnessing every clique edge."""
    kside = list(range(1, k + 3))
    attach = {}
    nxt = k + 3
    for i, u in enumerate(kside):
        for w in kside[i + 1 :]:
            attach[nxt] = [u, w]
            nxt += 1
    return split_instance(kside, attach, set(range(k + 3, nxt)), k)


def _spread(makers, count=CASES_PER_FAMILY):
    """Round-robin the construction callbacks up to the family size."""
    out = []
    i = 0
    while len(out) < count:
        out.append(makers[i % len(makers)](i))
        i += 1
    return out


# ---------------------------------------------------------------- kernel


def decide_cases():
    def no_terminals(i):
        rng = random.Random(900 + i)
        inst = covered_clique(1 + i % 3)
        inst.terminals.clear()
        return relabel(inst, rng)

    def exhausted_budget(i):
        rng = random.Random(910 + i)
        inst = covered_triangle_base({4, 5, 6}, 0)
        return relabel(inst, rng)

    def no_terminal_triangle(i):
        rng = random.Random(920 + i)
        m = 3 + i % 3
        attach = {m + 1 + j: [1 + j % m] for j in range(2 + i % 2)}
        inst = split_instance(list(range(1, m + 1)), attach, set(attach), 1 + i % 2)
        return relabel(inst, rng)

    def small_clique_side(i):
        rng = random.Random(930 + i)
        inst = split_instance([1, 2, 3], {4: [1, 2]}, {4}, 3 + i % 2)
        return relabel(inst, rng)

    def unhighlighted_edge(i):
        rng = random.Random(940 + i)
        inst = split_instance([1, 2, 3, 4], {5: [1, 2], 6: [1, 3]}, {5, 6}, 2)
        return relabel(inst, rng)

    return _spread(
        [no_terminals, exhausted_budget, no_terminal_triangle, small_clique_side,
         unhighlighted_edge]
    )


def isolated_cases():
    def make(i):
        rng = random.Random(1000 + i)
        k = 1 + i % 3
        inst = covered_clique(k)
        lone = max(inst.graph.vertices()) + 1
        inst.graph.add_vertex(lone)
        if i % 2:
            inst.terminals.add(lone)
        return relabel(inst, rng)

    return _spread([make])


def lonely_cases():
    def make(i):
        rng = random.Random(1100 + i)
        k = 1 + i % 3
        inst = covered_clique(k)
        extra = max(inst.graph.vertices()) + 1
        inst.graph.add_vertex(extra)
        inst.graph.add_edge(extra, 1)
        inst.graph.add_edge(extra, 2 + i % (k + 1))
        return relabel(inst, rng)

    return _spread([make])


def bridge_cases():
    def make(i):
        rng = random.Random(1200 + i)
        k = 1 + i % 3
        inst = covered_clique(k)
        pendant = max(inst.graph.vertices()) + 1
        inst.graph.add_vertex(pendant)
        inst.graph.add_edge(pendant, 1 + i % (k + 2))
        inst.terminals.add(pendant)
        return relabel(inst, rng)

    return _spread([make])


def pick_terminal_cases():
    def make(i):
        rng = random.Random(1300 + i)
        k = 1 + i % 3
        inst = covered_clique(k)
        inst.terminals.add(1 + i % (k + 2))
        return relabel(inst, rng)

    return _spread([make])


def matching_cases():
    def make(i):
        rng = random.Random(1400 + i)
        return relabel(covered_clique(1 + i % 4), rng)

    return _spread([make])


def degree_cases():
    def make(i):
        rng = random.Random(1500 + i)
        k = 1 + i % 3
        kside = list(range(1, k + 4))
        attach = {}
        nxt = k + 4
        for _ in range(k + 2):
            attach[nxt] = [1, 2]
            nxt += 1
        ring = kside[2:]
        for j in range(len(ring)):
            attach[nxt] = [ring[j], ring[(j + 1) % len(ring)]]
            nxt += 1
        inst = split_instance(kside, attach, set(range(k + 4, nxt)), k)
        return relabel(inst, rng)

    return _spread([make])


def packing_cases():
    def make(i):
        rng = random.Random(1600 + i)
        k = 1 + i % 3
        pairs = k + 1
        kside = list(range(1, 2 * pairs + 1))
        attach = {
            2 * pairs + 1 + j: [2 * j + 1, 2 * j + 2] for j in range(pairs)
        }
        inst = split_instance(kside, attach, set(attach), k)
        return relabel(inst, rng)

    return _spread([make])


def k0_cases():
    def make(i):
        rng = random.Random(1700 + i)
        m = 2 + i % 3
        kside = list(range(1, 4 * m + 1))
        attach = {
            4 * m + 1 + j: [2 * j + 1, 2 * j + 2, 2 * m + 2 * j + 1, 2 * m + 2 * j + 2]
            for j in range(m)
        }
        inst = split_instance(kside, attach, set(attach), m)
        return relabel(inst, rng)

    return _spread([make])


def k1_cases():
    def make(i):
        rng = random.Random(1800 + i)
        m = 3 + i % 2
        kside = list(range(1, 2 * m + 3))
        hubs = [1, 2]
        cs = kside[2:]
        shared = 2 * m + 3
        attach = {shared: hubs[:]}
        nxt = shared + 1
        for j, c in enumerate(cs):
            attach[nxt] = [hubs[0] if j < m else hubs[1], c]
            nxt += 1
        inst = split_instance(kside, attach, set(range(shared, nxt)), m + 1)
        # the triangle packing scans independent ids upward, so the
        # hub-pair terminal must stay first to keep the packing at one
        # triangle and the leftover clique class large
        return relabel(inst, rng, anchor=shared, group=range(shared, nxt))

    return _spread([make])


KERNEL_FAMILIES = {
    "decide": decide_cases,
    "delete-isolated": isolated_cases,
    "no-terminal-neighbor": lonely_cases,
    "delete-bridge": bridge_cases,
    "pick-clique-terminal": pick_terminal_cases,
    "max-matching": matching_cases,
    "degree-bound": degree_cases,
    "packing-exceeds-budget": packing_cases,
    "bound-k0": k0_cases,
    "bound-k1": k1_cases,
}


# -------------------------------------------------------------- branching


def _complete_plus(clique, fans, terminals, k):
    """Clique plus fan vertices adjacent to listed subsets."""
    g = clique_graph(clique)
    for v, nbrs in sorted(fans.items()):
        g.add_vertex(v)
        for u in nbrs:
            g.add_edge(v, u)
    return Instance(g, set(terminals), k)


def br1_cases():
    def make(i):
        rng = random.Random(2100 + i)
        inst = _complete_plus([1, 2, 3, 4], {5: [2, 3]}, {1, 5}, 1 + i % 3)
        return relabel(inst, rng)

    return _spread([make])


def br2_cases():
    def make(i):
        rng = random.Random(2200 + i)
        inst = _complete_plus([1, 2, 3], {4: [2, 3]}, {1, 2, 3}, 1 + i % 3)
        return relabel(inst, rng)

    return _spread([make])


def br3_cases():
    def five(i):
        rng = random.Random(2300 + i)
        inst = _complete_plus(
            [1, 2, 3, 4, 5], {6: [2, 3, 4], 7: [3, 4, 5]}, {1, 6, 7}, 1 + i % 4
        )
        return relabel(inst, rng)

    def six(i):
        rng = random.Random(2350 + i)
        inst = _complete_plus(
            [1, 2, 3, 4, 5, 6], {7: [2, 3, 4], 8: [4, 5, 6]}, {1, 7, 8}, 1 + i % 4
        )
        return relabel(inst, rng)

    return _spread([five, six])


def br4_cases():
    def make(i):
        rng = random.Random(2400 + i)
        inst = _complete_plus([1, 2, 3, 4], {5: [2, 3, 4]}, {2, 3}, 1 + i % 3)
        return relabel(inst, rng)

    return _spread([make])


def br5_cases():
    def make(i):
        rng = random.Random(2500 + i)
        g = clique_graph([1, 2, 3, 4])
        for clique in ([3, 4, 5, 6], [5, 6, 7, 8]):
            for v in clique:
                if v not in g:
                    g.add_vertex(v)
            for a in clique:
                for b in clique:
                    if a < b and not g.has_edge(a, b):
                        g.add_edge(a, b)
        inst = Instance(g, {1, 2, 7, 8}, 2 + i % 3)
        return relabel(inst, rng)

    return _spread([make])


def br6_cases():
    def make(i):
        rng = random.Random(2600 + i)
        inst = leaf_forest(
            [1, 2, 3, 4, 5, 6],
            [(1, 2, 3), (1, 2, 4), (3, 4, 5), (3, 5, 6), (4, 5, 6)],
            7,
        )
        inst.k = 2 + i % 3
        return relabel(inst, rng)

    return _spread([make])


def br7_cases():
    def pasch(i):
        rng = random.Random(2700 + i)
        inst = leaf_forest(
            [1, 2, 3, 4, 5, 6], [(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)], 7
        )
        inst.k = 1 + i % 6
        return relabel(inst, rng)

    def eight(i):
        rng = random.Random(2750 + i)
        triples = [(1, 2, 3), (1, 4, 5), (2, 6, 7), (3, 6, 8), (4, 7, 8), (2, 5, 8)]
        inst = leaf_forest(list(range(1, 9)), triples, 9)
        inst.k = 1 + i % 6
        return relabel(inst, rng)

    def fano(i):
        rng = random.Random(2800 + i)
        triples = [
            (1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6),
            (2, 5, 7), (3, 4, 7), (3, 5, 6),
        ]
        inst = leaf_forest(list(range(1, 8)), triples, 8)
        inst.k = 1 + i % 6
        return relabel(inst, rng)

    return _spread([pasch, eight, fano])


BRANCH_FAMILIES = {
    "lone-terminal-neighbor": br1_cases,
    "triangle-simplicial": br2_cases,
    "big-clique": br3_cases,
    "nonterminal-simplicial": br4_cases,
    "twin-terminal-simplicial": br5_cases,
    "outside-terminal-pair": br6_cases,
    "sibling-leaf-cliques": br7_cases,
}
