import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from graphs.codecs import graph6_str
from graphs.graph import Graph, bit, iter_bits


logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Forma canônica de um grafo.

    Attributes
    ----------
    graph6 : str
        graph6 da rotulação cuja codificação do triângulo superior é a
        menor entre as folhas da busca guiada por refinamento.
    """

    graph6: str

    def __str__(self) -> str:
        return self.graph6


def _refine(rows: Sequence[int], cells: List[int]) -> List[int]:
    """
    Refina uma partição ordenada até ela ficar equitativa.

    Cada célula é dividida pela assinatura "quantos vizinhos em cada
    célula"; as subcélulas entram na ordem crescente das assinaturas.
    """
    changed = True
    while changed:
        changed = False
        refined: List[int] = []
        for cell in cells:
            if not cell & (cell - 1):
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                signature = tuple((rows[v] & c).bit_count() for c in cells)
                groups[signature] = groups.get(signature, 0) | bit(v)
            if len(groups) > 1:
                changed = True
            refined.extend(groups[key] for key in sorted(groups))
        cells = refined
    return cells


def _individualize(cells: List[int], index: int, v: int) -> List[int]:
    cell = cells[index]
    return cells[:index] + [bit(v), cell & ~bit(v)] + cells[index + 1:]


def _leaf_key(rows: Sequence[int], cells: List[int]) -> int:
    # Bits na ordem de coluna do graph6: x(0,1), x(0,2), x(1,2), x(0,3)...
    placed = [c.bit_length() - 1 for c in cells]
    key = 0
    for j in range(1, len(placed)):
        row = rows[placed[j]]
        for i in range(j):
            key = (key << 1) | ((row >> placed[i]) & 1)
    return key


def _are_twins(rows: Sequence[int], u: int, w: int) -> bool:
    """Gêmeos abertos ou fechados: a transposição ``(u w)`` é automorfismo."""
    strip = ~(bit(u) | bit(w))
    return rows[u] & strip == rows[w] & strip


@lru_cache(maxsize=8192)
def canonical_labeling(g: Graph) -> Tuple[CanonicalForm, Tuple[int, ...]]:
    """
    Calcula a forma canônica e a rotulação que a realiza.

    A busca parte da partição unitária refinada e, enquanto houver célula
    não trivial, individualiza cada vértice da primeira delas (do menor
    índice para o maior), ignorando vértices gêmeos de um já tentado. Nas
    folhas, a partição discreta define uma rotulação; fica a de menor
    codificação.

    Parameters
    ----------
    g : Graph
        Grafo de ordem até 64.

    Returns
    -------
    Tuple[CanonicalForm, Tuple[int, ...]]
        A forma canônica e a permutação ``perm`` (o vértice ``v`` vai para
        a posição ``perm[v]``) com ``graph6(g.permute(perm)) == forma``.
    """
    rows = g.rows
    best_key: Optional[int] = None
    best_cells: List[int] = []
    leaves = 0
    stack = [_refine(rows, [g.full_mask])]
    while stack:
        cells = stack.pop()
        target = next(
            (i for i, c in enumerate(cells) if c & (c - 1)), None
        )
        if target is None:
            leaves += 1
            key = _leaf_key(rows, cells)
            if best_key is None or key < best_key:
                best_key, best_cells = key, cells
            continue
        tried: List[int] = []
        children = []
        for v in iter_bits(cells[target]):
            if any(_are_twins(rows, v, u) for u in tried):
                continue
            tried.append(v)
            children.append(_refine(rows, _individualize(cells, target, v)))
        # Pilha LIFO: empilha ao contrário para visitar o menor vértice antes
        stack.extend(reversed(children))
    perm = [0] * g.order
    for position, cell in enumerate(best_cells):
        perm[cell.bit_length() - 1] = position
    logger.debug(f"canonical search on order {g.order}: {leaves} leaves")
    form = CanonicalForm(graph6_str(g.permute(perm)))
    return form, tuple(perm)


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def find_isomorphism(g: Graph, h: Graph) -> Optional[List[int]]:
    """
    Procura um isomorfismo de ``g`` em ``h``.

    Returns
    -------
    Optional[List[int]]
        ``perm`` com ``uv`` aresta de ``g`` se e somente se
        ``perm[u] perm[v]`` é aresta de ``h``; ``None`` se não existe.
    """
    if g.order != h.order or g.degree_sequence() != h.degree_sequence():
        return None
    form_g, label_g = canonical_labeling(g)
    form_h, label_h = canonical_labeling(h)
    if form_g != form_h:
        return None
    inverse_h = [0] * h.order
    for v, position in enumerate(label_h):
        inverse_h[position] = v
    return [inverse_h[label_g[v]] for v in range(g.order)]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
