from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Tuple

from dictionary.exceptions import Disconnected, SizeBound
from dictionary.vars import DOMINATION_MAX_ORDER
from graphs.graph import Graph, bit, is_connected


@dataclass(frozen=True)
class DominationResult:
    """
    Número de dominação e um conjunto dominante mínimo.

    Attributes
    ----------
    gamma : int
        Tamanho do menor conjunto dominante.
    witness : Tuple[int, ...]
        O menor conjunto dominante em ordem lexicográfica.
    """

    gamma: int
    witness: Tuple[int, ...]


def dominates(g: Graph, vertices: Iterable[int]) -> bool:
    covered = 0
    for v in vertices:
        covered |= g.rows[v] | bit(v)
    return covered == g.full_mask


def domination_number(g: Graph) -> DominationResult:
    """
    Calcula γ(G) por aprofundamento iterativo no tamanho do conjunto.

    Raises
    ------
    Disconnected
        Grafo desconexo.
    SizeBound
        Ordem acima de ``PP2_DOMINATION_MAX_ORDER``.
    """
    if g.order > DOMINATION_MAX_ORDER:
        raise SizeBound(
            f"domination bounded to {DOMINATION_MAX_ORDER} vertices, "
            f"got {g.order}"
        )
    if not is_connected(g):
        raise Disconnected("domination number requires a connected graph")
    closed = [row | bit(v) for v, row in enumerate(g.rows)]
    full = g.full_mask
    for k in range(1, g.order + 1):
        for chosen in combinations(range(g.order), k):
            covered = 0
            for v in chosen:
                covered |= closed[v]
            if covered == full:
                return DominationResult(k, chosen)
    raise AssertionError("the full vertex set always dominates")
