"""
Listas de arestas dos grafos fixos do catálogo.

Cada grafo é transcrito com letras nos vértices, como nos desenhos usuais;
``letters`` dá a correspondência letra -> índice (posição na string).
"""
from typing import Dict, List, Tuple

from graphs.graph import Graph, from_edge_list


class FixtureGraph:
    """
    Grafo fixo descrito por letras.

    Attributes
    ----------
    letters : str
        Letras dos vértices; a letra ``letters[i]`` vira o vértice ``i``.
    edges : str
        Arestas separadas por espaço, cada uma com duas letras.
    """

    def __init__(self, letters: str, edges: str):
        self.letters = letters
        self.edges = edges

    def edge_pairs(self) -> List[Tuple[int, int]]:
        index = {letter: i for i, letter in enumerate(self.letters)}
        return [(index[e[0]], index[e[1]]) for e in self.edges.split()]

    def graph(self) -> Graph:
        return from_edge_list(len(self.letters), self.edge_pairs())


FIXTURES: Dict[str, FixtureGraph] = {
    # Petersen: ciclo externo a..f com cordas, estrela interna em j
    "P10": FixtureGraph(
        "abcdefghij",
        "ab bc cd de ef fa ai di fg gc eh bh ij gj hj",
    ),
    # Wagner: 8-ciclo com as quatro diagonais longas
    "W8": FixtureGraph(
        "abcdefgh",
        "ab bc cd de ef fg gh ha ae bf cg dh",
    ),
    "W8plus": FixtureGraph(
        "abcdefghi",
        "ab bc cd de ef fg gh ha ae bf cg dh if ia ic",
    ),
    # Grötzsch: 5-ciclo a..e, cópias f..j, centro k
    "M11": FixtureGraph(
        "abcdefghijk",
        "ab bc cd de ea ag aj bf bh cg ci dh dj ei ef "
        "kf kg kh ki kj",
    ),
    "M11minus": FixtureGraph(
        "abcdefghik",
        "ab bc cd de ea ag bf bh cg ci dh ei ef kf kg kh ki",
    ),
    "M11eq": FixtureGraph(
        "abcdefghk",
        "ab bc cd de ea ag bf bh cg dh ef kf kg kh",
    ),
    "K34star": FixtureGraph(
        "abcdefgh",
        "ab bc cd de ef fg gh ha ad bf ch dg eh",
    ),
    "F0": FixtureGraph(
        "abcdefghi",
        "ab bc cd af fc ah hc de eb dg gb hi if ei eg",
    ),
    "F1": FixtureGraph(
        "abcdefghi",
        "ab bc cd af fc ah hc de eb dg gb hi if ei eg da",
    ),
    "F2": FixtureGraph(
        "abcdefghij",
        "ab bj jc cd da af fc ah hc de eb dg gj hi if ei eg",
    ),
    "F3": FixtureGraph(
        "abcdefghijk",
        "ab bj jc ck dk da af fc ah hc ke eb dg gj hi if ei eg",
    ),
}
