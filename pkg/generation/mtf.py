import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Tuple

from tqdm import tqdm

from dictionary.exceptions import ParamOutOfRange, SizeBound
from dictionary.vars import ENUMERATION_MAX_N
from graphs.codecs import decode_graph6
from graphs.graph import Graph, bit, is_maximal_triangle_free, iter_bits
from iso.canonical import canonical_form


logger = logging.getLogger(__name__)


def independent_sets(g: Graph) -> List[int]:
    """Todos os conjuntos independentes não vazios, como máscaras."""
    found: List[int] = []

    def extend(chosen: int, start: int, blocked: int) -> None:
        for v in range(start, g.order):
            if blocked & bit(v):
                continue
            grown = chosen | bit(v)
            found.append(grown)
            extend(grown, v + 1, blocked | g.rows[v] | bit(v))

    extend(0, 0, 0)
    return found


def _dominating(g: Graph, mask: int) -> bool:
    covered = mask
    for v in iter_bits(mask):
        covered |= g.rows[v]
    return covered == g.full_mask


def _expand_parent(task: Tuple[Graph, bool]) -> List[str]:
    """
    Filhos de um pai conexo livre de triângulos, como formas canônicas.

    No último nível só vale ligar o vértice novo a conjuntos
    independentes maximais do pai, e só os filhos maximais livres de
    triângulos são mantidos.
    """
    parent, final = task
    forms = set()
    for mask in independent_sets(parent):
        if final and not _dominating(parent, mask):
            continue
        child = parent.with_vertex(mask)
        if final and not is_maximal_triangle_free(child):
            continue
        forms.add(canonical_form(child).graph6)
    return sorted(forms)


def _expand_level(
    parents: List[Graph], final: bool, jobs: int, progress: bool, order: int
) -> List[Graph]:
    tasks = [(parent, final) for parent in parents]
    bar = tqdm(
        total=len(tasks),
        desc=f"order {order}",
        file=sys.stderr,
        disable=not progress,
        leave=False,
    )
    merged = set()
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunk = max(1, len(tasks) // (jobs * 8))
                for forms in pool.map(_expand_parent, tasks, chunksize=chunk):
                    merged.update(forms)
                    bar.update(1)
        else:
            for task in tasks:
                merged.update(_expand_parent(task))
                bar.update(1)
    finally:
        bar.close()
    return [decode_graph6(form.encode("ascii")) for form in sorted(merged)]


def generate_levels(
    max_n: int, jobs: int = 1, progress: bool = False
) -> Iterator[Tuple[int, List[Graph]]]:
    """
    Gera, ordem a ordem, os grafos conexos maximais livres de triângulos.

    A geração acrescenta um vértice por vez a pais conexos livres de
    triângulos, ligando-o a um conjunto independente do pai, e elimina
    isomorfos pela forma canônica. Os representantes são as rotulações
    canônicas, em ordem crescente de graph6.

    Parameters
    ----------
    max_n : int
        Maior ordem gerada, entre 1 e ``PP2_ENUMERATION_MAX_N``.
    jobs : int
        Número de processos para expandir os pais de cada nível.
    progress : bool
        Exibe barras de progresso em stderr.

    Yields
    ------
    Tuple[int, List[Graph]]
        A ordem e os grafos maximais livres de triângulos dessa ordem.

    Raises
    ------
    ParamOutOfRange
        ``max_n < 1``.
    SizeBound
        ``max_n`` acima do limite configurado.
    """
    if max_n < 1:
        raise ParamOutOfRange(f"max_n must be at least 1, got {max_n}")
    if max_n > ENUMERATION_MAX_N:
        raise SizeBound(
            f"enumeration bounded to order {ENUMERATION_MAX_N}, got {max_n}"
        )
    level = [Graph.empty(1)]
    yield 1, list(level)
    for order in range(2, max_n + 1):
        final = order == max_n
        level = _expand_level(level, final, jobs, progress, order)
        logger.info(f"order {order}: {len(level)} graphs (final={final})")
        if final:
            yield order, level
        else:
            yield order, [g for g in level if is_maximal_triangle_free(g)]


def enumerate_mtf(
    max_n: int, jobs: int = 1, progress: bool = False
) -> Iterator[Graph]:
    for _, graphs in generate_levels(max_n, jobs, progress):
        yield from graphs


def count_by_order(max_n: int, jobs: int = 1) -> Dict[int, int]:
    return {
        order: len(graphs) for order, graphs in generate_levels(max_n, jobs)
    }
