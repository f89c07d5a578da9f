"""
Busca exaustiva de rotulações de arestas.

Uma rotulação atribui a cada aresta, na ordem canônica de
``Graph.edges()``, um código em ``0..radix-1``. A busca em profundidade
percorre os códigos em ordem lexicográfica e poda assim que um par não
adjacente tem todas as suas arestas relevantes rotuladas sem ser
atendido; a primeira rotulação completa encontrada é portanto a menor
rotulação aprovada na ordem do contador de base mista.
"""
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from dictionary.exceptions import SearchBudget
from graphs.graph import Graph, iter_bits


logger = logging.getLogger(__name__)

# (v, código de uv, código de vw) para cada vizinho comum v do par (u, w)
Middles = List[Tuple[int, int, int]]
PairCheck = Callable[[int, int, Middles], bool]


@dataclass(frozen=True)
class _Pair:
    u: int
    w: int
    # (v, índice da aresta uv, índice da aresta vw)
    middles: Tuple[Tuple[int, int, int], ...]


@dataclass
class SearchOutcome:
    """
    Resultado de uma busca.

    Attributes
    ----------
    codes : Optional[Tuple[int, ...]]
        A menor rotulação aprovada, ou ``None``.
    space : int
        Tamanho do espaço ``radix ** |E|`` coberto pela busca.
    nodes : int
        Nós visitados na árvore de busca.
    """

    codes: Optional[Tuple[int, ...]]
    space: int
    nodes: int


def _edge_index(g: Graph) -> Dict[Tuple[int, int], int]:
    return {edge: i for i, edge in enumerate(g.edges())}


def _pairs(g: Graph) -> List[_Pair]:
    index = _edge_index(g)
    pairs = []
    for u in range(g.order):
        for w in range(u + 1, g.order):
            if g.adjacent(u, w):
                continue
            middles = tuple(
                (v, index[(min(u, v), max(u, v))],
                 index[(min(v, w), max(v, w))])
                for v in iter_bits(g.rows[u] & g.rows[w])
            )
            pairs.append(_Pair(u, w, middles))
    return pairs


def _resolve(pair: _Pair, codes: Sequence[int]) -> Middles:
    return [(v, codes[a], codes[b]) for v, a, b in pair.middles]


def check_labeling(g: Graph, codes: Sequence[int], check: PairCheck) -> bool:
    """Confere uma rotulação completa, sem poda."""
    return first_failing_pair(g, codes, check) is None


def first_failing_pair(
    g: Graph, codes: Sequence[int], check: PairCheck
) -> Optional[Tuple[int, int]]:
    for pair in _pairs(g):
        if not check(pair.u, pair.w, _resolve(pair, codes)):
            return pair.u, pair.w
    return None


def search_labeling(
    g: Graph, radix: int, check: PairCheck, budget: int
) -> SearchOutcome:
    """
    Procura a menor rotulação em que todo par não adjacente é aprovado.

    Parameters
    ----------
    g : Graph
        Grafo subjacente.
    radix : int
        Número de códigos por aresta.
    check : PairCheck
        Decide se o par ``(u, w)`` é atendido dados os vizinhos comuns e
        os códigos das duas arestas de cada caminho ``u v w``.
    budget : int
        Maior espaço ``radix ** |E|`` aceito.

    Raises
    ------
    SearchBudget
        O espaço de rotulações excede ``budget``.
    """
    edge_total = g.edge_count()
    space = radix ** edge_total
    if space > budget:
        raise SearchBudget(
            f"{radix}^{edge_total} = {space} labelings exceed the budget "
            f"of {budget}"
        )
    pairs = _pairs(g)
    if any(not pair.middles for pair in pairs):
        return SearchOutcome(None, space, 0)
    due: List[List[_Pair]] = [[] for _ in range(edge_total)]
    for pair in pairs:
        last = max(max(a, b) for _, a, b in pair.middles)
        due[last].append(pair)
    codes = [0] * edge_total
    nodes = 0

    def descend(depth: int) -> bool:
        nonlocal nodes
        if depth == edge_total:
            return True
        for code in range(radix):
            nodes += 1
            codes[depth] = code
            if all(check(p.u, p.w, _resolve(p, codes)) for p in due[depth]):
                if descend(depth + 1):
                    return True
        return False

    found = descend(0) if edge_total else True
    logger.debug(
        f"labeling search radix={radix} edges={edge_total}: {nodes} nodes"
    )
    return SearchOutcome(tuple(codes) if found else None, space, nodes)


def decode_counter(value: int, radix: int, length: int) -> Tuple[int, ...]:
    """Dígitos do contador de base mista, com a primeira aresta mais alta."""
    digits = []
    for _ in range(length):
        value, digit = divmod(value, radix)
        digits.append(digit)
    return tuple(reversed(digits))


def audit_labelings(
    g: Graph, radix: int, check: PairCheck, fraction: float, seed: int
) -> Tuple[int, int]:
    """
    Reconfere uma amostra aleatória de rotulações sem poda.

    Returns
    -------
    Tuple[int, int]
        Quantidade amostrada e quantas delas passaram na verificação.
    """
    edge_total = g.edge_count()
    space = radix ** edge_total
    sample = max(1, min(space, int(space * fraction)))
    rng = random.Random(seed)
    passed = 0
    for _ in range(sample):
        codes = decode_counter(rng.randrange(space), radix, edge_total)
        if check_labeling(g, codes, check):
            passed += 1
    return sample, passed
