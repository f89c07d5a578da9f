import logging
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

from catalog.fixtures import FIXTURES
from dictionary.exceptions import UnknownFamily
from graphs.graph import Graph
from minor.search import MinorModel, find_minor


logger = logging.getLogger(__name__)


class Obstruction(Enum):
    """
    Os três menores proibidos usados nos certificados de não pertinência.

    A ordem de declaração é a ordem de teste da bateria.
    """

    K35 = "k35"
    K44minus = "k44minus"
    F0 = "f0"

    @classmethod
    def from_name(cls, name: str) -> "Obstruction":
        try:
            return cls(name.strip().lower())
        except ValueError as error:
            raise UnknownFamily(f"unknown obstruction {name!r}") from error

    @property
    def pattern(self) -> Graph:
        return _pattern(self)


@lru_cache(maxsize=None)
def _pattern(obstruction: Obstruction) -> Graph:
    if obstruction is Obstruction.K35:
        return Graph.complete_bipartite(3, 5)
    if obstruction is Obstruction.K44minus:
        return Graph.complete_bipartite(4, 4).without_edge(0, 4)
    return FIXTURES["F0"].graph()


def obstruction_certificate(
    host: Graph,
) -> Optional[Tuple[Obstruction, MinorModel]]:
    """
    Roda a bateria K3,5 -> K4,4⁻ -> F0 e devolve o primeiro acerto.

    Raises
    ------
    SizeBound
        Hospedeiro acima do limite da busca de menores.
    """
    for obstruction in Obstruction:
        model = find_minor(obstruction.pattern, host)
        if model is not None:
            logger.debug(f"host contains {obstruction.name} as a minor")
            return obstruction, model
    return None
