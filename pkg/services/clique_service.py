import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from cliques.absolute import (
    pushable_pair_check,
    search_pushable_clique,
    search_signed_clique,
    signed_pair_check,
)
from cliques.mixed import mixed_pair_check, radix, search_mn_clique_labeling
from cliques.search import PairCheck, audit_labelings
from cliques.sweeps import (
    SweepReport,
    Witness,
    format_labeling,
    mn_clique_sweep,
    pushable_clique_sweep,
    signed_clique_sweep,
)
from dictionary.exceptions import ParamOutOfRange
from dictionary.vars import SEARCH_BUDGET
from graphs.graph import Graph


logger = logging.getLogger(__name__)

MODES = ("mn", "signed", "pushable")


@dataclass
class CliqueOutcome:
    """
    Resultado de uma busca de rotulação de clique.

    Attributes
    ----------
    witness : Optional[Witness]
        A menor rotulação aprovada, ou None
    space : int
        Quantidade de rotulações do espaço esgotado
    audit : Optional[Tuple[int, int]]
        Amostras reconferidas e quantas passaram, quando pedido
    """

    witness: Optional[Witness]
    space: int
    audit: Optional[Tuple[int, int]] = None

    def report(self) -> str:
        if self.witness is not None:
            return format_labeling(self.witness)
        lines = [f"NONE exhausted={self.space}"]
        if self.audit is not None:
            sample, passed = self.audit
            lines.append(f"audit sampled={sample} passed={passed}")
        return "\n".join(lines)


class CliqueService:
    """
    Serviço das buscas de cliques absolutas.
    Responsável por escolher a busca, auditar respostas negativas e
    rodar as varreduras do catálogo.
    """

    def __init__(self, budget: int = SEARCH_BUDGET):
        self.budget = budget
        logger.info(f"CliqueService initialized (budget={budget})")

    @staticmethod
    def _radix_and_check(mode: str, m: int, n: int) -> Tuple[int, PairCheck]:
        if mode == "mn":
            return radix(m, n), mixed_pair_check(m)
        if mode == "signed":
            return 2, signed_pair_check
        if mode == "pushable":
            return 2, pushable_pair_check
        raise ParamOutOfRange(f"unknown clique mode {mode!r}")

    def search(
            self,
            g: Graph,
            mode: str,
            m: int = 0,
            n: int = 0,
            audit: float = 0.0,
            seed: int = 0
    ) -> CliqueOutcome:
        """
        Procura uma rotulação de clique para ``g``.

        Parameters
        ----------
        g : Graph
            Grafo subjacente
        mode : str
            ``mn``, ``signed`` ou ``pushable``
        m, n : int
            Tipos de arco e de aresta no modo ``mn``
        audit : float
            Fração do espaço reconferida sem poda após uma resposta
            negativa (0 desliga)
        seed : int
            Semente da amostragem da auditoria

        Raises
        ------
        SearchBudget
            Espaço de rotulações acima do orçamento
        """
        options, check = self._radix_and_check(mode, m, n)
        witness: Optional[Witness]
        if mode == "mn":
            witness = search_mn_clique_labeling(g, m, n, self.budget)
        elif mode == "signed":
            witness = search_signed_clique(g, self.budget)
        else:
            witness = search_pushable_clique(g, self.budget)
        outcome = CliqueOutcome(witness, options ** g.edge_count())
        if witness is None and audit > 0:
            outcome.audit = audit_labelings(g, options, check, audit, seed)
            logger.info(f"audit after NONE: {outcome.audit}")
        return outcome

    def sweep(
            self,
            mode: str,
            min_order: int,
            max_order: int,
            m: int = 0,
            n: int = 0,
            progress: bool = False
    ) -> SweepReport:
        if mode == "mn":
            return mn_clique_sweep(
                m, n, min_order, max_order, self.budget, progress
            )
        if mode == "signed":
            return signed_clique_sweep(
                min_order, max_order, self.budget, progress
            )
        if mode == "pushable":
            return pushable_clique_sweep(
                min_order, max_order, self.budget, progress
            )
        raise ParamOutOfRange(f"unknown clique mode {mode!r}")
