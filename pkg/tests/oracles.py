"""Oráculos de força bruta usados pelos testes."""
from itertools import combinations, permutations, product
from typing import Iterator, Set

from graphs.graph import (
    Graph,
    bit,
    from_edge_list,
    is_connected,
    is_maximal_triangle_free,
    is_triangle_free,
)
from iso.canonical import canonical_form


def labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for chosen in range(1 << len(pairs)):
        yield from_edge_list(
            n, [pair for i, pair in enumerate(pairs) if chosen >> i & 1]
        )


def brute_force_mtf_forms(n: int) -> Set[str]:
    forms = set()
    for g in labeled_graphs(n):
        if (is_connected(g) and is_triangle_free(g)
                and is_maximal_triangle_free(g)):
            forms.add(canonical_form(g).graph6)
    return forms


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.edge_count() != h.edge_count():
        return False
    edges = set(h.edges())
    for perm in permutations(range(g.order)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in edges
            for u, v in g.edges()
        ):
            return True
    return False


def _connected(g: Graph, mask: int) -> bool:
    start = mask & -mask
    seen, frontier = start, start
    while frontier:
        grown = 0
        for v in range(g.order):
            if frontier & bit(v):
                grown |= g.rows[v]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen == mask


def brute_force_minor(pattern: Graph, host: Graph) -> bool:
    """Toda atribuição de vértices do hospedeiro a ramos (ou a nenhum)."""
    k = pattern.order
    for assignment in product(range(-1, k), repeat=host.order):
        masks = [0] * k
        for v, p in enumerate(assignment):
            if p >= 0:
                masks[p] |= bit(v)
        if not all(masks) or not all(_connected(host, m) for m in masks):
            continue
        reach = []
        for mask in masks:
            r = mask
            for v in range(host.order):
                if mask & bit(v):
                    r |= host.rows[v]
            reach.append(r)
        if all(reach[p] & masks[q] for p, q in pattern.edges()):
            return True
    return False


def shuffled(g: Graph, rng) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.permute(perm)
