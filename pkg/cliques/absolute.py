import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from cliques.search import Middles, first_failing_pair, search_labeling
from dictionary.exceptions import GraphError, ParamOutOfRange
from dictionary.vars import SEARCH_BUDGET
from graphs.graph import Graph


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedGraph:
    """
    Grafo com sinal ``+1`` ou ``-1`` em cada aresta, na ordem de
    ``base.edges()``.
    """

    base: Graph
    signs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.base.edge_count():
            raise GraphError(
                f"expected {self.base.edge_count()} signs, "
                f"got {len(self.signs)}"
            )
        if any(sign not in (1, -1) for sign in self.signs):
            raise ParamOutOfRange("signs must be +1 or -1")

    def codes(self) -> Tuple[int, ...]:
        return tuple(0 if sign == 1 else 1 for sign in self.signs)

    def lines(self) -> List[str]:
        return [
            f"{u} {v} : {'+' if sign == 1 else '-'}"
            for (u, v), sign in zip(self.base.edges(), self.signs)
        ]


@dataclass(frozen=True)
class OrientedGraph:
    """
    Orientação de um grafo: ``forward[i]`` indica que a i-ésima aresta
    ``(u, v)``, com ``u < v``, está orientada de ``u`` para ``v``.
    """

    base: Graph
    forward: Tuple[bool, ...]

    def __post_init__(self):
        if len(self.forward) != self.base.edge_count():
            raise GraphError(
                f"expected {self.base.edge_count()} directions, "
                f"got {len(self.forward)}"
            )

    def codes(self) -> Tuple[int, ...]:
        return tuple(0 if f else 1 for f in self.forward)

    def arcs(self) -> List[Tuple[int, int]]:
        return [
            (u, v) if f else (v, u)
            for (u, v), f in zip(self.base.edges(), self.forward)
        ]

    def lines(self) -> List[str]:
        return [
            f"{u} {v} : {'->' if f else '<-'}"
            for (u, v), f in zip(self.base.edges(), self.forward)
        ]


def signed_pair_check(u: int, w: int, middles: Middles) -> bool:
    # Ciclo u-a-w-b-u com número ímpar de arestas negativas
    products = {(code_uv + code_vw) % 2 for _, code_uv, code_vw in middles}
    return len(products) == 2


def pushable_pair_check(u: int, w: int, middles: Middles) -> bool:
    # Paridade dos arcos no sentido u -> v -> w; dois caminhos com
    # paridades distintas fecham um 4-ciclo ímpar
    parities = set()
    for v, code_uv, code_vw in middles:
        along_first = (code_uv == 0) == (u < v)
        along_second = (code_vw == 0) == (v < w)
        parities.add((along_first + along_second) % 2)
    return len(parities) == 2


def is_signed_absolute_clique(g: SignedGraph) -> bool:
    """
    Todo par não adjacente está num 4-ciclo com quantidade ímpar de
    arestas negativas.
    """
    return first_failing_pair(g.base, g.codes(), signed_pair_check) is None


def is_pushable_absolute_clique(g: OrientedGraph) -> bool:
    """
    Todo par não adjacente está num 4-ciclo em que o número de arcos no
    sentido de um percurso fixo do ciclo é ímpar. A paridade não depende
    do sentido nem do ponto de partida do percurso.
    """
    return first_failing_pair(g.base, g.codes(), pushable_pair_check) is None


def four_cycle_forward_parity(cycle: Tuple[int, int, int, int],
                              arcs: List[Tuple[int, int]]) -> int:
    """Paridade dos arcos que seguem o percurso ``c0 c1 c2 c3 c0``."""
    directed = set(arcs)
    steps = zip(cycle, cycle[1:] + cycle[:1])
    return sum((a, b) in directed for a, b in steps) % 2


def search_signed_clique(
    g: Graph, budget: int = SEARCH_BUDGET
) -> Optional[SignedGraph]:
    outcome = search_labeling(g, 2, signed_pair_check, budget)
    if outcome.codes is None:
        return None
    return SignedGraph(g, tuple(1 if c == 0 else -1 for c in outcome.codes))


def search_pushable_clique(
    g: Graph, budget: int = SEARCH_BUDGET
) -> Optional[OrientedGraph]:
    outcome = search_labeling(g, 2, pushable_pair_check, budget)
    if outcome.codes is None:
        return None
    return OrientedGraph(g, tuple(c == 0 for c in outcome.codes))


def two_disjoint_2paths_property(g: Graph) -> bool:
    """Todo par não adjacente tem pelo menos dois vizinhos comuns."""
    for u, w in combinations(range(g.order), 2):
        if g.adjacent(u, w):
            continue
        if (g.rows[u] & g.rows[w]).bit_count() < 2:
            return False
    return True


def degree2_agreement_bound(m: int, n: int) -> int:
    """
    Limite ``(2m+n-1)^2`` para a quantidade de vértices de grau 2 numa
    clique subjacente do formato K3,3(t)/K3,4(t).

    Raises
    ------
    ParamOutOfRange
        ``2m + n < 1`` ou parâmetro negativo.
    """
    if m < 0 or n < 0 or 2 * m + n < 1:
        raise ParamOutOfRange(f"2m + n must be at least 1, got ({m}, {n})")
    return (2 * m + n - 1) ** 2
