import logging
from typing import Iterable, Iterator, List

import networkx as nx

from dictionary.exceptions import (
    MalformedEdgeList,
    MalformedGraph6,
)
from dictionary.vars import MAX_ORDER
from graphs.graph import Graph, from_edge_list, from_networkx, to_networkx

logger = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"


def encode_graph6(g: Graph) -> bytes:
    """
    Codifica o grafo no formato graph6 padrão, sem quebra de linha.

    Parameters
    ----------
    g : Graph
        Grafo a codificar.

    Returns
    -------
    bytes
        Cabeçalho ``N+63`` seguido dos bits do triângulo superior
        (``x(0,1), x(0,2), x(1,2), x(0,3), ...``) em grupos de 6 bits.
    """
    encoded = nx.to_graph6_bytes(
        to_networkx(g), nodes=list(range(g.order)), header=False
    )
    return encoded.rstrip(b"\n")


def decode_graph6(data: bytes) -> Graph:
    """
    Decodifica uma linha graph6.

    Parameters
    ----------
    data : bytes
        Linha graph6, opcionalmente com o cabeçalho ``>>graph6<<``.

    Returns
    -------
    Graph
        O grafo decodificado.

    Raises
    ------
    MalformedGraph6
        Byte fora de ``63..126``, vetor de bits truncado ou ordem não
        suportada.
    """
    line = data.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise MalformedGraph6("empty graph6 line")
    bad = [c for c in line if not 63 <= c <= 126]
    if bad:
        raise MalformedGraph6(
            f"byte {bad[0]} outside the graph6 range 63..126"
        )
    try:
        graph = nx.from_graph6_bytes(line)
    except (nx.NetworkXError, ValueError, IndexError) as error:
        raise MalformedGraph6(f"invalid graph6 data: {error}") from error
    if not 1 <= graph.number_of_nodes() <= MAX_ORDER:
        raise MalformedGraph6(
            f"graph6 order {graph.number_of_nodes()} is not supported"
        )
    return from_networkx(graph)


def graph6_str(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")


def write_edge_list(g: Graph) -> str:
    """Texto "n m" seguido de uma linha "u v" por aresta."""
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _parse_header(line: str) -> List[int]:
    fields = line.split()
    if len(fields) != 2:
        raise MalformedEdgeList(f"expected header 'n m', got {line!r}")
    try:
        return [int(field) for field in fields]
    except ValueError as error:
        raise MalformedEdgeList(f"non-integer header {line!r}") from error


def _edge_list_blocks(lines: List[str]) -> Iterator[Graph]:
    position = 0
    while position < len(lines):
        order, size = _parse_header(lines[position])
        body = lines[position + 1:position + 1 + size]
        if len(body) != size:
            raise MalformedEdgeList(
                f"header announces {size} edges, found {len(body)}"
            )
        short = [line for line in body if len(line.split()) != 2]
        if short:
            raise MalformedEdgeList(f"expected 'u v', got {short[0]!r}")
        try:
            parsed = nx.parse_edgelist(body, nodetype=int, data=False)
        except (TypeError, nx.NetworkXError) as error:
            raise MalformedEdgeList(f"invalid edge line: {error}") from error
        # Laços aparecem em parsed.edges() e são rejeitados por from_edge_list
        yield from_edge_list(order, list(parsed.edges()))
        position += 1 + size


def read_edge_list(text: str) -> Graph:
    """
    Lê um único grafo no formato de lista de arestas.

    Raises
    ------
    MalformedEdgeList
        Cabeçalho ausente ou número de arestas divergente.
    VertexOutOfRange, SelfLoop
        Arestas inválidas.
    """
    graphs = list(read_graphs(text, "edgelist"))
    if len(graphs) != 1:
        raise MalformedEdgeList(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def read_graphs(text: str, fmt: str = "graph6") -> Iterator[Graph]:
    """
    Lê uma sequência de grafos.

    Parameters
    ----------
    text : str
        Conteúdo lido do arquivo ou da entrada padrão.
    fmt : str
        ``graph6`` (um grafo por linha) ou ``edgelist`` (blocos "n m"
        concatenados).
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if fmt == "graph6":
        for line in lines:
            try:
                data = line.encode("ascii")
            except UnicodeEncodeError as error:
                raise MalformedGraph6(
                    f"non-ASCII character in graph6 line {line!r}"
                ) from error
            yield decode_graph6(data)
    elif fmt == "edgelist":
        yield from _edge_list_blocks(lines)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return graph6_str(g) + "\n"
    if fmt == "edgelist":
        return write_edge_list(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graphs(graphs: Iterable[Graph], fmt: str = "graph6") -> str:
    return "".join(write_graph(g, fmt) for g in graphs)
