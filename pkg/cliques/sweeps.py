import logging
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Union

import pandas as pd
from tqdm import tqdm

from catalog.families import all_members_with_order, construct
from cliques.absolute import (
    OrientedGraph,
    SignedGraph,
    search_pushable_clique,
    search_signed_clique,
    two_disjoint_2paths_property,
)
from cliques.mixed import MixedGraph, search_mn_clique_labeling
from dictionary.exceptions import SearchBudget
from dictionary.vars import SEARCH_BUDGET
from graphs.graph import Graph


logger = logging.getLogger(__name__)

Witness = Union[MixedGraph, SignedGraph, OrientedGraph]


@dataclass
class SweepRow:
    """Uma família da varredura e o resultado da busca nela."""

    spec: str
    order: int
    edges: int
    result: str
    witness: Optional[Witness] = None


@dataclass
class SweepReport:
    rows: List[SweepRow]
    min_order: int
    max_order: int

    @property
    def over_budget(self) -> bool:
        return any(row.result == "over-budget" for row in self.rows)

    @property
    def largest_clique_order(self) -> int:
        """Maior ordem de um membro que admitiu rotulação de clique."""
        found = [row.order for row in self.rows if row.result == "clique"]
        return max(found, default=0)

    def agrees_with(self, clique_number: int) -> bool:
        """
        Compara a varredura com um número de clique absoluto conhecido.

        Nenhum membro maior que ``clique_number`` pode admitir rotulação
        de clique; se a janela de ordens contém ``clique_number``, o maior
        membro encontrado tem exatamente essa ordem.
        """
        largest = self.largest_clique_order
        if largest > clique_number:
            return False
        if self.min_order <= clique_number <= self.max_order:
            return largest == clique_number
        return True

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame.from_records(
            [
                {
                    "spec": row.spec,
                    "order": row.order,
                    "edges": row.edges,
                    "result": row.result,
                }
                for row in self.rows
            ],
            columns=["spec", "order", "edges", "result"],
        )


def format_labeling(g: Witness) -> str:
    """Uma linha por aresta, na ordem canônica de arestas."""
    return "\n".join(g.lines())


def _sweep(
    search: Callable[[Graph], Optional[Witness]],
    min_order: int,
    max_order: int,
    require_two_paths: bool,
    progress: bool,
) -> SweepReport:
    specs = [
        spec
        for order in range(min_order, max_order + 1)
        for spec in all_members_with_order(order)
    ]
    rows = []
    for spec in tqdm(specs, file=sys.stderr, disable=not progress,
                     leave=False):
        g = construct(spec)
        row = SweepRow(str(spec), g.order, g.edge_count(), "none")
        if require_two_paths and not two_disjoint_2paths_property(g):
            row.result = "filtered"
        else:
            try:
                row.witness = search(g)
            except SearchBudget as error:
                logger.warning(f"sweep {row.spec} skipped: {error}")
                row.result = "over-budget"
            else:
                if row.witness is not None:
                    row.result = "clique"
        logger.info(f"sweep {row.spec}: {row.result}")
        rows.append(row)
    return SweepReport(rows, min_order, max_order)


def mn_clique_sweep(
    m: int,
    n: int,
    min_order: int,
    max_order: int,
    budget: int = SEARCH_BUDGET,
    progress: bool = False,
) -> SweepReport:
    """
    Procura rotulações (m,n) de clique em todo membro do catálogo com
    ordem entre ``min_order`` e ``max_order``.
    """
    return _sweep(
        lambda g: search_mn_clique_labeling(g, m, n, budget),
        min_order,
        max_order,
        False,
        progress,
    )


def signed_clique_sweep(
    min_order: int,
    max_order: int,
    budget: int = SEARCH_BUDGET,
    progress: bool = False,
) -> SweepReport:
    return _sweep(
        lambda g: search_signed_clique(g, budget),
        min_order,
        max_order,
        True,
        progress,
    )


def pushable_clique_sweep(
    min_order: int,
    max_order: int,
    budget: int = SEARCH_BUDGET,
    progress: bool = False,
) -> SweepReport:
    return _sweep(
        lambda g: search_pushable_clique(g, budget),
        min_order,
        max_order,
        True,
        progress,
    )
