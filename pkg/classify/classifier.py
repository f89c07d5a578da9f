import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from catalog.families import (
    FamilySpec,
    all_members_with_order,
    construct,
    order_and_size,
)
from graphs.graph import Graph, diameter, is_connected, is_triangle_free
from iso.canonical import find_isomorphism
from minor.obstructions import Obstruction, obstruction_certificate
from minor.search import MinorModel


logger = logging.getLogger(__name__)


class Reason(Enum):
    DISCONNECTED = "disconnected"
    HAS_TRIANGLE = "has_triangle"
    DIAMETER = "diameter!=2"


@dataclass(frozen=True)
class Classification:
    """
    Veredicto do reconhecedor.

    Exatamente uma das subclasses é devolvida por ``classify``.
    """

    order: int
    edge_count: int

    def verdict_line(self) -> str:
        raise NotImplementedError

    def _fields(self) -> Dict[str, Any]:
        return {}

    def detail(self) -> Dict[str, Any]:
        """Bloco de detalhes com ordem de chaves estável."""
        block: Dict[str, Any] = {
            "verdict": self.verdict_line().split()[0],
            "order": self.order,
            "edges": self.edge_count,
        }
        block.update(self._fields())
        return block


@dataclass(frozen=True)
class NotSimpleDiameter2(Classification):
    reason: Reason

    def verdict_line(self) -> str:
        return f"out-of-scope {self.reason.value}"

    def _fields(self) -> Dict[str, Any]:
        return {"reason": self.reason.value}


@dataclass(frozen=True)
class Member(Classification):
    """
    Pertinência confirmada.

    Attributes
    ----------
    spec : FamilySpec
        Família reconhecida.
    iso_witness : Tuple[int, ...]
        O vértice ``v`` de ``construct(spec)`` corresponde ao vértice
        ``iso_witness[v]`` da entrada.
    """

    spec: FamilySpec
    iso_witness: Tuple[int, ...]

    def verdict_line(self) -> str:
        return f"member {self.spec}"

    def _fields(self) -> Dict[str, Any]:
        return {"family": str(self.spec), "witness": list(self.iso_witness)}


@dataclass(frozen=True)
class NonMember(Classification):
    obstruction: Obstruction
    model: MinorModel

    def verdict_line(self) -> str:
        branches = " ".join(
            f"{p}:" + ",".join(str(v) for v in sorted(branch))
            for p, branch in enumerate(self.model.branch_sets)
        )
        return f"nonmember {self.obstruction.name} {branches}"

    def _fields(self) -> Dict[str, Any]:
        return {
            "obstruction": self.obstruction.name,
            "model": {
                str(p): sorted(branch)
                for p, branch in enumerate(self.model.branch_sets)
            },
        }


@dataclass(frozen=True)
class Unresolved(Classification):
    """Nem família nem obstrução: contraexemplo à caracterização."""

    reason: str

    def verdict_line(self) -> str:
        return f"unresolved {self.reason}"

    def _fields(self) -> Dict[str, Any]:
        return {"reason": self.reason}


def match_family(g: Graph) -> Optional[Tuple[FamilySpec, List[int]]]:
    """
    Procura a primeira família, na ordem de precedência, isomorfa a ``g``.
    """
    size = g.edge_count()
    degrees = g.degree_sequence()
    for spec in all_members_with_order(g.order):
        if order_and_size(spec)[1] != size:
            continue
        candidate = construct(spec)
        if candidate.degree_sequence() != degrees:
            continue
        witness = find_isomorphism(candidate, g)
        if witness is not None:
            return spec, witness
    return None


def classify(g: Graph) -> Classification:
    """
    Decide se ``g`` é um grafo livre de triângulos, de diâmetro 2 e
    projetivo-planar, identificando a família ou exibindo um menor
    proibido.

    Parameters
    ----------
    g : Graph
        Grafo de entrada.

    Returns
    -------
    Classification
        ``NotSimpleDiameter2`` para grafos desconexos, com triângulo ou
        de diâmetro diferente de 2; ``Member`` com a família e o
        isomorfismo; ``NonMember`` com a obstrução e sua
        testemunha; ``Unresolved`` se nenhum dos dois lados se confirmar.

    Raises
    ------
    SizeBound
        Nenhuma família reconhecida e o grafo excede o limite da busca
        de menores.
    """
    base = {"order": g.order, "edge_count": g.edge_count()}
    if not is_connected(g):
        return NotSimpleDiameter2(reason=Reason.DISCONNECTED, **base)
    if not is_triangle_free(g):
        return NotSimpleDiameter2(reason=Reason.HAS_TRIANGLE, **base)
    if diameter(g) != 2:
        return NotSimpleDiameter2(reason=Reason.DIAMETER, **base)
    found = match_family(g)
    if found is not None:
        spec, witness = found
        logger.debug(f"matched family {spec}")
        return Member(spec=spec, iso_witness=tuple(witness), **base)
    certificate = obstruction_certificate(g)
    if certificate is not None:
        obstruction, model = certificate
        return NonMember(obstruction=obstruction, model=model, **base)
    logger.warning(
        f"graph of order {g.order} matched no family and no obstruction"
    )
    return Unresolved(reason="no-family-no-obstruction", **base)


def is_pp2_member(g: Graph) -> bool:
    return isinstance(classify(g), Member)
