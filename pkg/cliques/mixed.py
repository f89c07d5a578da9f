import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

from cliques.search import Middles, first_failing_pair, search_labeling
from dictionary.exceptions import GraphError, NotA2Path, ParamOutOfRange
from dictionary.vars import SEARCH_BUDGET
from graphs.graph import Graph


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeColor:
    color: int


@dataclass(frozen=True)
class ArcColor:
    """Arco de cor ``color`` de ``tail`` para ``head``."""

    color: int
    tail: int
    head: int


Label = Union[EdgeColor, ArcColor]


def _check_types(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ParamOutOfRange(f"(m, n) must be nonnegative, got ({m}, {n})")


def radix(m: int, n: int) -> int:
    """Opções por aresta: duas orientações por tipo de arco, uma por aresta."""
    _check_types(m, n)
    return 2 * m + n


def decode_label(code: int, u: int, v: int, m: int) -> Label:
    """
    Converte um código em rótulo da aresta ``uv`` (``u < v``).

    Códigos ``< 2m`` são arcos de cor ``code // 2 + 1``, de ``u`` para
    ``v`` quando o código é par; os demais são arestas de cor
    ``code - 2m + 1``.
    """
    if code < 2 * m:
        if code % 2 == 0:
            return ArcColor(code // 2 + 1, u, v)
        return ArcColor(code // 2 + 1, v, u)
    return EdgeColor(code - 2 * m + 1)


def encode_label(label: Label, u: int, m: int) -> int:
    if isinstance(label, EdgeColor):
        return 2 * m + label.color - 1
    return 2 * (label.color - 1) + (0 if label.tail == u else 1)


@dataclass(frozen=True)
class MixedGraph:
    """
    Grafo misto (m,n)-colorido.

    Attributes
    ----------
    base : Graph
        Grafo subjacente.
    m : int
        Quantidade de tipos de arco.
    n : int
        Quantidade de tipos de aresta.
    labels : Tuple[Label, ...]
        Um rótulo por aresta de ``base``, na ordem de ``base.edges()``.

    Raises
    ------
    ParamOutOfRange
        Cor fora de ``1..m`` / ``1..n`` ou ``m + n = 0`` com arestas.
    GraphError
        Quantidade de rótulos diferente do número de arestas, ou arco
        cujas pontas não são as da aresta.
    """

    base: Graph
    m: int
    n: int
    labels: Tuple[Label, ...]

    def __post_init__(self):
        _check_types(self.m, self.n)
        edges = self.base.edges()
        if len(self.labels) != len(edges):
            raise GraphError(
                f"expected {len(edges)} labels, got {len(self.labels)}"
            )
        if edges and self.m + self.n == 0:
            raise ParamOutOfRange("m + n must be at least 1")
        for (u, v), label in zip(edges, self.labels):
            if isinstance(label, EdgeColor):
                if not 1 <= label.color <= self.n:
                    raise ParamOutOfRange(
                        f"edge color {label.color} outside 1..{self.n}"
                    )
                continue
            if not 1 <= label.color <= self.m:
                raise ParamOutOfRange(
                    f"arc color {label.color} outside 1..{self.m}"
                )
            if {label.tail, label.head} != {u, v}:
                raise GraphError(
                    f"arc {label.tail}->{label.head} does not match "
                    f"edge {u}-{v}"
                )

    @classmethod
    def from_codes(
        cls, base: Graph, m: int, n: int, codes: Sequence[int]
    ) -> "MixedGraph":
        labels = tuple(
            decode_label(code, u, v, m)
            for (u, v), code in zip(base.edges(), codes)
        )
        return cls(base, m, n, labels)

    def codes(self) -> Tuple[int, ...]:
        return tuple(
            encode_label(label, u, self.m)
            for (u, _), label in zip(self.base.edges(), self.labels)
        )

    @cached_property
    def _by_pair(self) -> Dict[Tuple[int, int], Label]:
        return dict(zip(self.base.edges(), self.labels))

    def label(self, u: int, v: int) -> Label:
        return self._by_pair[(min(u, v), max(u, v))]

    def lines(self) -> List[str]:
        rendered = []
        for (u, v), label in zip(self.base.edges(), self.labels):
            if isinstance(label, EdgeColor):
                rendered.append(f"{u} {v} : E{label.color}")
            else:
                arrow = "->" if label.tail == u else "<-"
                rendered.append(f"{u} {v} : A{label.color} {arrow}")
        return rendered


def _relation(label: Label, outer: int) -> Tuple[str, int]:
    """Como a aresta entre ``outer`` e o vértice do meio chega ao meio."""
    if isinstance(label, EdgeColor):
        return "edge", label.color
    if label.tail == outer:
        return "in", label.color
    return "out", label.color


def _sees(first: Tuple[str, int], second: Tuple[str, int]) -> bool:
    kind_a, color_a = first
    kind_b, color_b = second
    if (kind_a == "edge") != (kind_b == "edge"):
        return True
    if kind_a != kind_b and kind_a != "edge":
        # u -> v -> w ou w -> v -> u
        return True
    return color_a != color_b


def is_special_2path(g: MixedGraph, u: int, v: int, w: int) -> bool:
    """
    Decide se ``u v w`` é um 2-caminho especial, isto é, se ``u`` vê
    ``w`` através de ``v``.

    São especiais: duas arestas de cores diferentes; ``u -> v -> w``;
    ``w -> v -> u``; dois arcos entrando em ``v`` com cores diferentes;
    dois arcos saindo de ``v`` com cores diferentes; exatamente uma
    aresta e um arco.

    Raises
    ------
    NotA2Path
        ``uv`` ou ``vw`` não é aresta, ou ``u == w``.
    """
    base = g.base
    if u == w or not base.adjacent(u, v) or not base.adjacent(v, w):
        raise NotA2Path(f"{u} {v} {w} is not a 2-path")
    return _sees(
        _relation(g.label(u, v), u), _relation(g.label(v, w), w)
    )


def mixed_pair_check(m: int):
    def check(u: int, w: int, middles: Middles) -> bool:
        for v, code_uv, code_vw in middles:
            first = _relation(
                decode_label(code_uv, min(u, v), max(u, v), m), u
            )
            second = _relation(
                decode_label(code_vw, min(v, w), max(v, w), m), w
            )
            if _sees(first, second):
                return True
        return False

    return check


def first_unseen_pair(g: MixedGraph) -> Optional[Tuple[int, int]]:
    """Primeiro par não adjacente ``(u, w)`` que não se vê, ou ``None``."""
    return first_failing_pair(g.base, g.codes(), mixed_pair_check(g.m))


def is_mn_clique(g: MixedGraph) -> bool:
    return first_unseen_pair(g) is None


def search_mn_clique_labeling(
    g: Graph, m: int, n: int, budget: int = SEARCH_BUDGET
) -> Optional[MixedGraph]:
    """
    Procura a menor rotulação (m,n) de ``g`` que forma uma clique.

    Returns
    -------
    Optional[MixedGraph]
        A primeira rotulação aprovada na ordem lexicográfica dos códigos,
        ou ``None`` depois de esgotar as ``(2m+n)^|E|`` rotulações.

    Raises
    ------
    SearchBudget
        Espaço de rotulações acima de ``budget``.
    """
    options = radix(m, n)
    if options == 0 and g.edge_count():
        raise ParamOutOfRange("m + n must be at least 1")
    outcome = search_labeling(g, options, mixed_pair_check(m), budget)
    if outcome.codes is None:
        return None
    return MixedGraph.from_codes(g, m, n, outcome.codes)
