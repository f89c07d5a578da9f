import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from catalog.fixtures import FIXTURES
from dictionary.exceptions import ParamOutOfRange, UnknownFamily
from graphs.graph import Graph, from_edge_list


logger = logging.getLogger(__name__)


class Kind(Enum):
    STAR = "k1n"
    BICLIQUE2 = "k2n"
    C5ATTACH = "c5"
    K33 = "k33"
    K34 = "k34"
    K33SUB = "k33s"
    K34SUB = "k34s"
    SPECIAL = "special"
    AUX = "aux"


# Nome interno -> nome na CLI, na ordem de precedência do classificador
SPECIAL_NAMES = {
    "P10": "p10",
    "W8": "w8",
    "W8plus": "w8p",
    "M11": "m11",
    "M11minus": "m11m",
    "M11eq": "m11e",
    "K34star": "k34star",
}
AUX_NAMES = {"F0": "f0", "F1": "f1", "F2": "f2", "F3": "f3"}

_MINIMUM = {
    Kind.STAR: (2,),
    Kind.BICLIQUE2: (2,),
    Kind.C5ATTACH: (0, 0),
    Kind.K33SUB: (1,),
    Kind.K34SUB: (1,),
}

_PARAM_PATTERN = re.compile(r"^(k1n|k2n|k33s|k34s|c5):(\d+(?:,\d+)?)$")


@dataclass(frozen=True)
class FamilySpec:
    """
    Nome simbólico de um grafo das famílias do catálogo.

    Attributes
    ----------
    kind : Kind
        Família.
    params : Tuple[int, ...]
        ``(n,)`` para K1,n e K2,n, ``(m, n)`` para C5(m,n), ``(t,)`` para
        K3,3(t) e K3,4(t); vazio nos demais.
    name : str
        Nome do grafo fixo (``P10``, ``F0``...) quando ``kind`` é
        ``SPECIAL`` ou ``AUX``.

    Raises
    ------
    ParamOutOfRange
        Parâmetros fora das faixas da família.
    """

    kind: Kind
    params: Tuple[int, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.kind is Kind.SPECIAL and self.name not in SPECIAL_NAMES:
            raise UnknownFamily(f"unknown special graph {self.name!r}")
        if self.kind is Kind.AUX and self.name not in AUX_NAMES:
            raise UnknownFamily(f"unknown auxiliary graph {self.name!r}")
        minimum = _MINIMUM.get(self.kind, ())
        if len(self.params) != len(minimum):
            raise ParamOutOfRange(
                f"{self.kind.value} expects {len(minimum)} parameters, "
                f"got {len(self.params)}"
            )
        for value, low in zip(self.params, minimum):
            if value < low:
                raise ParamOutOfRange(
                    f"{self.kind.value} parameter {value} is below {low}"
                )

    @classmethod
    def star(cls, n: int) -> "FamilySpec":
        return cls(Kind.STAR, (n,))

    @classmethod
    def biclique2(cls, n: int) -> "FamilySpec":
        return cls(Kind.BICLIQUE2, (n,))

    @classmethod
    def c5attach(cls, m: int, n: int) -> "FamilySpec":
        return cls(Kind.C5ATTACH, (m, n))

    @classmethod
    def k33(cls) -> "FamilySpec":
        return cls(Kind.K33)

    @classmethod
    def k34(cls) -> "FamilySpec":
        return cls(Kind.K34)

    @classmethod
    def k33sub(cls, t: int) -> "FamilySpec":
        return cls(Kind.K33SUB, (t,))

    @classmethod
    def k34sub(cls, t: int) -> "FamilySpec":
        return cls(Kind.K34SUB, (t,))

    @classmethod
    def special(cls, name: str) -> "FamilySpec":
        return cls(Kind.SPECIAL, (), name)

    @classmethod
    def aux(cls, name: str) -> "FamilySpec":
        return cls(Kind.AUX, (), name)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """
        Interpreta um nome de família da CLI (``k1n:5``, ``c5:1,2``,
        ``m11``...).

        Raises
        ------
        UnknownFamily
            Nome ou sintaxe desconhecidos.
        ParamOutOfRange
            Sintaxe válida com parâmetro fora da faixa.
        """
        token = text.strip().lower()
        for name, cli in SPECIAL_NAMES.items():
            if token == cli:
                return cls.special(name)
        for name, cli in AUX_NAMES.items():
            if token == cli:
                return cls.aux(name)
        if token in ("k33", "k34"):
            return cls(Kind(token))
        match = _PARAM_PATTERN.match(token)
        if match is None:
            raise UnknownFamily(f"unknown family name {text!r}")
        kind = Kind(match.group(1))
        params = tuple(int(value) for value in match.group(2).split(","))
        return cls(kind, params)

    def __str__(self) -> str:
        if self.kind is Kind.SPECIAL:
            return SPECIAL_NAMES[self.name]
        if self.kind is Kind.AUX:
            return AUX_NAMES[self.name]
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}:" + ",".join(str(p) for p in self.params)

    def normalized(self) -> "FamilySpec":
        """C5(m,n) com m > n vira C5(n,m); os demais ficam iguais."""
        if self.kind is Kind.C5ATTACH and self.params[0] > self.params[1]:
            return FamilySpec.c5attach(self.params[1], self.params[0])
        return self

    @property
    def is_fixed(self) -> bool:
        return self.kind in (Kind.SPECIAL, Kind.AUX)


def fixture_letters(spec: FamilySpec) -> Optional[str]:
    """Letras dos vértices de um grafo fixo; senão ``None``."""
    if not spec.is_fixed:
        return None
    return FIXTURES[spec.name].letters


def _subdivided(left: int, right: int, t: int) -> Graph:
    # Aresta 0-left removida; t vértices novos ligados às duas pontas
    edges = [
        (a, left + b)
        for a in range(left)
        for b in range(right)
        if (a, b) != (0, 0)
    ]
    base = left + right
    for i in range(t):
        edges += [(0, base + i), (left, base + i)]
    return from_edge_list(base + t, edges)


@lru_cache(maxsize=1024)
def construct(spec: FamilySpec) -> Graph:
    """
    Constrói o grafo de uma família.

    Convenções de rotulação: K1,n tem centro 0; K2,n tem os polos 0 e 1;
    C5(m,n) usa o ciclo 0..4 (``v1..v5``), com os m vértices ligados a
    0 e 2 antes dos n ligados a 0 e 3; K3,3(t) e K3,4(t) partem de
    K3,3/K3,4 (lado menor ``0..2``), trocam a aresta 0-3 por t vértices
    de grau 2 ligados a 0 e 3.

    Parameters
    ----------
    spec : FamilySpec
        Família e parâmetros.

    Returns
    -------
    Graph
        O grafo, com a ordem e o tamanho de ``order_and_size(spec)``.
    """
    kind = spec.kind
    if kind is Kind.STAR:
        return Graph.complete_bipartite(1, spec.params[0])
    if kind is Kind.BICLIQUE2:
        return Graph.complete_bipartite(2, spec.params[0])
    if kind is Kind.C5ATTACH:
        m, n = spec.params
        edges = [(v, (v + 1) % 5) for v in range(5)]
        edges += [(0, 5 + i) for i in range(m + n)]
        edges += [(2, 5 + i) for i in range(m)]
        edges += [(3, 5 + m + i) for i in range(n)]
        return from_edge_list(5 + m + n, edges)
    if kind is Kind.K33:
        return Graph.complete_bipartite(3, 3)
    if kind is Kind.K34:
        return Graph.complete_bipartite(3, 4)
    if kind is Kind.K33SUB:
        return _subdivided(3, 3, spec.params[0])
    if kind is Kind.K34SUB:
        return _subdivided(3, 4, spec.params[0])
    return FIXTURES[spec.name].graph()


def order_and_size(spec: FamilySpec) -> Tuple[int, int]:
    kind = spec.kind
    if kind is Kind.STAR:
        n = spec.params[0]
        return n + 1, n
    if kind is Kind.BICLIQUE2:
        n = spec.params[0]
        return n + 2, 2 * n
    if kind is Kind.C5ATTACH:
        m, n = spec.params
        return 5 + m + n, 5 + 2 * m + 2 * n
    if kind is Kind.K33:
        return 6, 9
    if kind is Kind.K34:
        return 7, 12
    if kind is Kind.K33SUB:
        t = spec.params[0]
        return 6 + t, 8 + 2 * t
    if kind is Kind.K34SUB:
        t = spec.params[0]
        return 7 + t, 11 + 2 * t
    fixture = FIXTURES[spec.name]
    return len(fixture.letters), len(fixture.edges.split())


def all_members_with_order(k: int) -> List[FamilySpec]:
    """
    Todas as famílias não auxiliares com exatamente ``k`` vértices.

    A lista segue a precedência de reconhecimento: grafos fixos, K1,n,
    K2,n, K3,3/K3,4, K3,3(t), K3,4(t) e por fim C5(m,n) com m <= n.
    """
    members = [
        FamilySpec.special(name)
        for name in SPECIAL_NAMES
        if len(FIXTURES[name].letters) == k
    ]
    if k - 1 >= 2:
        members.append(FamilySpec.star(k - 1))
    if k - 2 >= 2:
        members.append(FamilySpec.biclique2(k - 2))
    if k == 6:
        members.append(FamilySpec.k33())
    if k == 7:
        members.append(FamilySpec.k34())
    if k - 6 >= 1:
        members.append(FamilySpec.k33sub(k - 6))
    if k - 7 >= 1:
        members.append(FamilySpec.k34sub(k - 7))
    extra = k - 5
    if extra >= 0:
        members.extend(
            FamilySpec.c5attach(m, extra - m) for m in range(extra // 2 + 1)
        )
    return members


def all_specs_up_to(order: int) -> Iterator[FamilySpec]:
    for k in range(1, order + 1):
        yield from all_members_with_order(k)
