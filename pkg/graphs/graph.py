import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import networkx as nx

from dictionary.exceptions import (
    GraphError,
    NotTriangleFree,
    OrderOutOfRange,
    SelfLoop,
    VertexOutOfRange,
)
from dictionary.vars import MAX_ORDER


Edge = Tuple[int, int]


def bit(v: int) -> int:
    return 1 << v


def iter_bits(mask: int) -> Iterator[int]:
    """Percorre os índices dos bits ligados de ``mask`` em ordem crescente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """
    Grafo simples, não direcionado e imutável.

    Os vértices são os inteiros ``0..order-1`` e a adjacência é guardada
    como uma linha de bits por vértice (bit ``u`` de ``rows[v]`` ligado se
    ``uv`` é aresta).

    Attributes
    ----------
    order : int
        Número de vértices, entre 1 e 64.
    rows : Tuple[int, ...]
        Linhas de adjacência.
    """

    order: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise OrderOutOfRange(
                f"order must be in 1..{MAX_ORDER}, got {self.order}"
            )
        if len(self.rows) != self.order:
            raise OrderOutOfRange(
                f"expected {self.order} adjacency rows, got {len(self.rows)}"
            )
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise VertexOutOfRange(
                    f"row {v} references a vertex outside 0..{self.order - 1}"
                )
            if row & bit(v):
                raise SelfLoop(f"vertex {v} is adjacent to itself")
            for u in iter_bits(row):
                if not self.rows[u] & bit(v):
                    raise GraphError(
                        f"adjacency is not symmetric on edge {v}-{u}"
                    )

    # Construtores auxiliares

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        full = (1 << order) - 1
        return cls(order, tuple(full & ~bit(v) for v in range(order)))

    @classmethod
    def path(cls, order: int) -> "Graph":
        return from_edge_list(order, [(v, v + 1) for v in range(order - 1)])

    @classmethod
    def cycle(cls, order: int) -> "Graph":
        return from_edge_list(
            order, [(v, (v + 1) % order) for v in range(order)]
        )

    @classmethod
    def complete_bipartite(cls, left: int, right: int) -> "Graph":
        return from_edge_list(
            left + right,
            [(a, left + b) for a in range(left) for b in range(right)],
        )

    # Consultas

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbors(self, v: int) -> int:
        """Máscara de bits da vizinhança aberta ``N(v)``."""
        return self.rows[v]

    def neighbor_list(self, v: int) -> List[int]:
        return list(iter_bits(self.rows[v]))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] & bit(v))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.rows),
                            reverse=True))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> List[Edge]:
        """
        Arestas ``(u, v)`` com ``u < v`` em ordem lexicográfica.

        Esta é a ordem canônica de arestas usada por todas as rotulações
        de arestas (grafos mistos, sinais e orientações).
        """
        return [
            (u, v)
            for u in range(self.order)
            for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))
        ]

    # Transformações

    def permute(self, perm: Sequence[int]) -> "Graph":
        """
        Reetiqueta os vértices: o vértice ``v`` passa a ser ``perm[v]``.
        """
        rows = [0] * self.order
        for v, row in enumerate(self.rows):
            image = 0
            for u in iter_bits(row):
                image |= bit(perm[u])
            rows[perm[v]] = image
        return Graph(self.order, tuple(rows))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """
        Subgrafo induzido, com os vértices renumerados na ordem recebida.
        """
        chosen = list(vertices)
        index = {v: i for i, v in enumerate(chosen)}
        rows = []
        for v in chosen:
            row = 0
            for u in iter_bits(self.rows[v]):
                if u in index:
                    row |= bit(index[u])
            rows.append(row)
        return Graph(len(chosen), tuple(rows))

    def without_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph(u for u in range(self.order) if u != v)

    def with_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.order, u, v)
        rows = list(self.rows)
        rows[u] |= bit(v)
        rows[v] |= bit(u)
        return Graph(self.order, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~bit(v)
        rows[v] &= ~bit(u)
        return Graph(self.order, tuple(rows))

    def with_vertex(self, neighborhood: int) -> "Graph":
        """Acrescenta o vértice ``order`` ligado à máscara ``neighborhood``."""
        new = self.order
        rows = [
            row | (bit(new) if neighborhood & bit(v) else 0)
            for v, row in enumerate(self.rows)
        ]
        rows.append(neighborhood)
        return Graph(self.order + 1, tuple(rows))


@dataclass(frozen=True)
class GraphMetrics:
    """
    Invariantes básicos de um grafo.

    ``diameter`` vale ``math.inf`` quando o grafo é desconexo.
    """

    min_degree: int
    max_degree: int
    diameter: Union[int, float]
    triangle_free: bool
    edge_count: int

    @property
    def connected(self) -> bool:
        return self.diameter != math.inf


def _check_pair(order: int, u: int, v: int) -> None:
    for w in (u, v):
        if not 0 <= w < order:
            raise VertexOutOfRange(
                f"endpoint {w} outside 0..{order - 1}"
            )
    if u == v:
        raise SelfLoop(f"edge {u}-{v} is a loop")


def from_edge_list(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Constrói um grafo a partir de uma lista de pares não ordenados.

    Parameters
    ----------
    order : int
        Número de vértices (``n >= 1``).
    edges : Iterable[Sequence[int]]
        Pares ``(u, v)``; duplicatas são colapsadas.

    Returns
    -------
    Graph
        O grafo com exatamente as arestas informadas.

    Raises
    ------
    VertexOutOfRange
        Extremidade fora de ``0..n-1``.
    SelfLoop
        Par ``(v, v)``.
    """
    if not 1 <= order <= MAX_ORDER:
        raise OrderOutOfRange(f"order must be in 1..{MAX_ORDER}, got {order}")
    rows = [0] * order
    for pair in edges:
        u, v = pair
        _check_pair(order, u, v)
        rows[u] |= bit(v)
        rows[v] |= bit(u)
    return Graph(order, tuple(rows))


def bfs_layers(g: Graph, source: int) -> List[int]:
    """Camadas da busca em largura a partir de ``source``, como máscaras."""
    reached = bit(source)
    frontier = reached
    layers = [frontier]
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~reached
        reached |= frontier
        if frontier:
            layers.append(frontier)
    return layers


def is_connected(g: Graph) -> bool:
    reached = 0
    for layer in bfs_layers(g, 0):
        reached |= layer
    return reached == g.full_mask


def eccentricities(g: Graph) -> List[Union[int, float]]:
    result: List[Union[int, float]] = []
    for v in range(g.order):
        layers = bfs_layers(g, v)
        reached = 0
        for layer in layers:
            reached |= layer
        if reached != g.full_mask:
            result.append(math.inf)
        else:
            result.append(len(layers) - 1)
    return result


def diameter(g: Graph) -> Union[int, float]:
    return max(eccentricities(g))


def is_triangle_free(g: Graph) -> bool:
    """Nenhuma aresta ``uv`` com ``N(u) ∩ N(v)`` não vazio."""
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return False
    return True


def metrics(g: Graph) -> GraphMetrics:
    degrees = [row.bit_count() for row in g.rows]
    return GraphMetrics(
        min_degree=min(degrees),
        max_degree=max(degrees),
        diameter=diameter(g),
        triangle_free=is_triangle_free(g),
        edge_count=sum(degrees) // 2,
    )


def is_maximal_triangle_free(g: Graph) -> bool:
    """
    Verifica se nenhuma não-aresta pode ser acrescentada sem criar triângulo.

    Para grafos conexos equivale a ter diâmetro no máximo 2.

    Raises
    ------
    NotTriangleFree
        Quando o grafo já contém um triângulo.
    """
    if not is_triangle_free(g):
        raise NotTriangleFree("graph contains a triangle")
    for u, v in combinations(range(g.order), 2):
        if not g.adjacent(u, v) and not g.rows[u] & g.rows[v]:
            return False
    return True


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.order))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """
    Converte um grafo do networkx, renumerando os nós em ordem crescente.
    """
    relabeled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    edges = [(u, v) for u, v in relabeled.edges() if u != v]
    if len(edges) != relabeled.number_of_edges():
        raise SelfLoop("networkx graph contains self-loops")
    return from_edge_list(relabeled.number_of_nodes(), edges)


