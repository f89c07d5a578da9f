class PP2Error(Exception):
    """
    Classe base dos erros da aplicação.
    """

    def __init__(self, message: str):
        super().__init__(message)


class GraphError(PP2Error):
    """Grafo inválido ou fora das pré-condições da operação."""


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class OrderOutOfRange(GraphError):
    pass


class NotTriangleFree(GraphError):
    pass


class Disconnected(GraphError):
    pass


class FormatError(PP2Error):
    """Entrada textual que não pôde ser interpretada."""


class MalformedGraph6(FormatError):
    pass


class MalformedEdgeList(FormatError):
    pass


class UnknownFamily(FormatError):
    pass


class ParamOutOfRange(PP2Error):
    pass


class NotA2Path(PP2Error):
    pass


class BoundError(PP2Error):
    """
    A computação excederia os limites configurados.

    Mapeada para o código de saída 3 pela CLI.
    """


class SizeBound(BoundError):
    pass


class SearchBudget(BoundError):
    pass
