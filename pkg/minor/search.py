import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from dictionary.exceptions import FormatError, SizeBound
from dictionary.vars import MINOR_MAX_HOST, MINOR_MAX_PATTERN
from graphs.graph import Graph, bit, iter_bits


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorModel:
    """
    Testemunha de que um padrão é menor de um hospedeiro.

    Attributes
    ----------
    branch_sets : Tuple[FrozenSet[int], ...]
        ``branch_sets[p]`` é o conjunto de vértices do hospedeiro contraído
        no vértice ``p`` do padrão.
    """

    branch_sets: Tuple[FrozenSet[int], ...]

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "MinorModel":
        return cls(tuple(frozenset(iter_bits(mask)) for mask in masks))

    def masks(self) -> List[int]:
        return [sum(bit(v) for v in branch) for branch in self.branch_sets]


def format_model(model: MinorModel) -> str:
    """Uma linha ``p: v1 v2 ...`` por vértice do padrão."""
    return "\n".join(
        f"{p}: " + " ".join(str(v) for v in sorted(branch))
        for p, branch in enumerate(model.branch_sets)
    )


def parse_model(text: str) -> MinorModel:
    branches: Dict[int, FrozenSet[int]] = {}
    for line in text.strip().splitlines():
        head, _, tail = line.partition(":")
        try:
            branches[int(head)] = frozenset(int(v) for v in tail.split())
        except ValueError as error:
            raise FormatError(
                f"invalid certificate line {line!r}"
            ) from error
    if sorted(branches) != list(range(len(branches))):
        raise FormatError("certificate pattern vertices are not 0..k-1")
    return MinorModel(tuple(branches[p] for p in range(len(branches))))


def _connected_within(rows: Sequence[int], mask: int) -> bool:
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= rows[v]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen == mask


def _closed_neighborhood(rows: Sequence[int], mask: int) -> int:
    reach = mask
    for v in iter_bits(mask):
        reach |= rows[v]
    return reach


def verify_model(model: MinorModel, pattern: Graph, host: Graph) -> bool:
    """
    Confere uma testemunha de menor de forma independente da busca.

    Returns
    -------
    bool
        ``True`` se os conjuntos são disjuntos, não vazios, conexos no
        hospedeiro e se toda aresta ``pq`` do padrão é realizada por
        alguma aresta entre ``B(p)`` e ``B(q)``.
    """
    if len(model.branch_sets) != pattern.order:
        return False
    masks = []
    used = 0
    for branch in model.branch_sets:
        if any(not 0 <= v < host.order for v in branch):
            return False
        mask = sum(bit(v) for v in branch)
        if mask & used or not _connected_within(host.rows, mask):
            return False
        used |= mask
        masks.append(mask)
    for p, q in pattern.edges():
        if not _closed_neighborhood(host.rows, masks[p]) & masks[q]:
            return False
    return True


@dataclass
class _Reduction:
    """Hospedeiro reduzido e o registro para reconstruir a testemunha."""

    graph: Optional[Graph]
    kept: List[int]
    # (v, a, b, criada): v de grau 2 suprimido em favor da aresta ab
    suppressed: List[Tuple[int, int, int, bool]]


def _reduce_host(host: Graph) -> _Reduction:
    """
    Remove vértices de grau <= 1 e suprime os de grau 2.

    Só é exata para padrões de grau mínimo >= 3.
    """
    adj: Dict[int, int] = {v: host.rows[v] for v in range(host.order)}
    suppressed: List[Tuple[int, int, int, bool]] = []
    queue = [v for v in adj if adj[v].bit_count() <= 2]
    while queue:
        v = queue.pop()
        if v not in adj or adj[v].bit_count() > 2:
            continue
        neighbors = list(iter_bits(adj.pop(v)))
        for u in neighbors:
            adj[u] &= ~bit(v)
        if len(neighbors) == 2:
            a, b = neighbors
            created = not adj[a] & bit(b)
            if created:
                adj[a] |= bit(b)
                adj[b] |= bit(a)
            suppressed.append((v, a, b, created))
        queue.extend(u for u in neighbors if adj[u].bit_count() <= 2)
    kept = sorted(adj)
    if not kept:
        return _Reduction(None, [], suppressed)
    index = {v: i for i, v in enumerate(kept)}
    rows = tuple(
        sum(bit(index[u]) for u in iter_bits(adj[v])) for v in kept
    )
    return _Reduction(Graph(len(kept), rows), kept, suppressed)


def _lift(masks: List[int], reduction: _Reduction) -> List[int]:
    lifted = []
    for mask in masks:
        lifted.append(sum(bit(reduction.kept[i]) for i in iter_bits(mask)))
    owner = {v: p for p, mask in enumerate(lifted) for v in iter_bits(mask)}
    for v, a, b, created in reversed(reduction.suppressed):
        if created and a in owner and b in owner:
            p = owner[a]
            lifted[p] |= bit(v)
            owner[v] = p
    return lifted


def _twin_predecessors(pattern: Graph, order: List[int]) -> Dict[int, int]:
    """
    Para cada vértice do padrão, o último gêmeo colocado antes dele.

    Gêmeos do padrão recebem conjuntos com raízes crescentes.
    """
    previous: Dict[int, int] = {}
    placed: List[int] = []
    for p in order:
        for q in reversed(placed):
            strip = ~(bit(p) | bit(q))
            if pattern.rows[p] & strip == pattern.rows[q] & strip:
                previous[p] = q
                break
        placed.append(p)
    return previous


def _placement_order(pattern: Graph) -> List[int]:
    order: List[int] = []
    placed = 0
    remaining = set(range(pattern.order))
    while remaining:
        p = min(
            remaining,
            key=lambda v: (
                -(pattern.rows[v] & placed).bit_count(),
                -pattern.degree(v),
                v,
            ),
        )
        order.append(p)
        placed |= bit(p)
        remaining.discard(p)
    return order


def _connected_sets(
    rows: Sequence[int], root: int, allowed: int, max_size: int
) -> Iterator[int]:
    """
    Conjuntos conexos contendo ``root`` dentro de ``allowed``.

    Cada conjunto aparece uma única vez: ao incluir o menor candidato,
    ele fica proibido nos ramos irmãos seguintes.
    """
    def extend(current: int, candidates: int, banned: int,
               size: int) -> Iterator[int]:
        yield current
        if size == max_size:
            return
        pending = candidates
        while pending:
            low = pending & -pending
            pending ^= low
            banned |= low
            v = low.bit_length() - 1
            grown = pending | (rows[v] & allowed & ~current & ~banned)
            yield from extend(current | low, grown, banned, size + 1)

    yield from extend(bit(root), rows[root] & allowed, bit(root), 1)


class _BranchSearch:
    """Backtracking sobre conjuntos de ramificação, padrão por padrão."""

    def __init__(self, pattern: Graph, host: Graph):
        self.pattern = pattern
        self.host = host
        self.order = _placement_order(pattern)
        self.twin_before = _twin_predecessors(pattern, self.order)
        self.budget = min(
            host.order - pattern.order,
            host.edge_count() - pattern.edge_count(),
        )
        self.masks = [0] * pattern.order
        self.nodes = 0

    def _boundary_ok(self, used: int, placed: int) -> bool:
        free = self.host.full_mask & ~used
        for p in iter_bits(placed):
            waiting = (self.pattern.rows[p] & ~placed).bit_count()
            if not waiting:
                continue
            boundary = _closed_neighborhood(self.host.rows, self.masks[p])
            if (boundary & free).bit_count() < waiting:
                return False
        return True

    def run(self) -> Optional[List[int]]:
        if self.budget < 0:
            return None
        if self._place(0, 0, 0, self.budget):
            return list(self.masks)
        return None

    def _place(self, depth: int, used: int, placed: int, extra: int) -> bool:
        if depth == len(self.order):
            return True
        self.nodes += 1
        p = self.order[depth]
        rows = self.host.rows
        free = self.host.full_mask & ~used
        if free.bit_count() < len(self.order) - depth:
            return False
        anchors = [self.masks[q] for q in iter_bits(self.pattern.rows[p]
                                                    & placed)]
        min_root = 0
        if p in self.twin_before:
            twin = self.masks[self.twin_before[p]]
            min_root = (twin & -twin).bit_length()
        for root in iter_bits(free >> min_root << min_root):
            allowed = free >> (root + 1) << (root + 1)
            for branch in _connected_sets(rows, root, allowed, extra + 1):
                reach = _closed_neighborhood(rows, branch)
                if any(not reach & anchor for anchor in anchors):
                    continue
                self.masks[p] = branch
                now_used = used | branch
                now_placed = placed | bit(p)
                if not self._boundary_ok(now_used, now_placed):
                    continue
                spent = branch.bit_count() - 1
                if self._place(depth + 1, now_used, now_placed,
                               extra - spent):
                    return True
        self.masks[p] = 0
        return False


def find_minor(pattern: Graph, host: Graph) -> Optional[MinorModel]:
    """
    Decide se ``pattern`` é menor de ``host`` e devolve uma testemunha.

    Para padrões de grau mínimo pelo menos 3 o hospedeiro é antes
    reduzido (vértices de grau <= 1 removidos, de grau 2 suprimidos) e a
    testemunha é reconstruída no hospedeiro original.

    Parameters
    ----------
    pattern : Graph
        Padrão ``H`` com no máximo ``PP2_MINOR_MAX_PATTERN`` vértices.
    host : Graph
        Hospedeiro ``G`` com no máximo ``PP2_MINOR_MAX_HOST`` vértices.

    Returns
    -------
    Optional[MinorModel]
        A primeira testemunha na ordem de exploração determinística, ou
        ``None`` quando ``H`` não é menor de ``G``.

    Raises
    ------
    SizeBound
        Entradas acima dos limites configurados.
    """
    if pattern.order > MINOR_MAX_PATTERN or host.order > MINOR_MAX_HOST:
        raise SizeBound(
            f"minor search bounded to pattern <= {MINOR_MAX_PATTERN} and "
            f"host <= {MINOR_MAX_HOST} vertices, got {pattern.order} "
            f"and {host.order}"
        )
    reduction: Optional[_Reduction] = None
    target = host
    if min(pattern.degree(p) for p in range(pattern.order)) >= 3:
        reduction = _reduce_host(host)
        if reduction.graph is None:
            return None
        target = reduction.graph
    if (target.order < pattern.order
            or target.edge_count() < pattern.edge_count()):
        return None
    search = _BranchSearch(pattern, target)
    masks = search.run()
    logger.debug(
        f"minor search ({pattern.order}v into {target.order}v): "
        f"{search.nodes} nodes, found={masks is not None}"
    )
    if masks is None:
        return None
    if reduction is not None:
        masks = _lift(masks, reduction)
    return MinorModel.from_masks(masks)
