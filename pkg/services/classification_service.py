import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional

from classify.classifier import Member, classify
from dictionary.vars import CACHE_ENABLED
from graphs.codecs import graph6_str
from graphs.graph import Graph
from services.redis_service import RedisService


logger = logging.getLogger(__name__)


@dataclass
class VerdictRecord:
    """
    Veredicto pronto para a CLI.

    Attributes
    ----------
    line : str
        Linha de veredicto (``member ...``, ``nonmember ...``,
        ``out-of-scope ...`` ou ``unresolved ...``).
    detail : Dict[str, Any]
        Bloco de detalhes com ordem de chaves estável.
    member : bool
        Se o grafo pertence à família caracterizada.
    """

    line: str
    detail: Dict[str, Any]
    member: bool

    def to_payload(self) -> Dict[str, Any]:
        return {"line": self.line, "detail": self.detail}

    @classmethod
    def from_payload(cls, payload: Dict[str, Any]) -> "VerdictRecord":
        line = payload["line"]
        return cls(line, payload["detail"], line.startswith("member "))


def _classify_record(g: Graph) -> VerdictRecord:
    verdict = classify(g)
    return VerdictRecord(
        verdict.verdict_line(),
        verdict.detail(),
        isinstance(verdict, Member),
    )


class ClassificationService:
    """
    Serviço de classificação de fluxos de grafos.
    Responsável pelo cache opcional dos veredictos e pela distribuição
    do trabalho entre processos.
    """

    def __init__(
            self,
            use_cache: bool = CACHE_ENABLED,
            redis_service: Optional[RedisService] = None
    ):
        """
        Inicializa o serviço.

        Parameters
        ----------
        use_cache : bool
            Consulta e alimenta o cache Redis de veredictos
        redis_service : RedisService
            Serviço Redis já construído (se None e ``use_cache``, cria um)
        """
        self.redis_service = redis_service
        if use_cache and redis_service is None:
            try:
                self.redis_service = RedisService()
            except Exception as e:
                logger.warning(f"Redis service not available: {e}")
                self.redis_service = None
        logger.info(
            f"ClassificationService initialized "
            f"(cache={self.redis_service is not None})"
        )

    def classify_many(
            self,
            graphs: Iterable[Graph],
            jobs: int = 1
    ) -> List[VerdictRecord]:
        """
        Classifica uma sequência de grafos preservando a ordem de entrada.

        Parameters
        ----------
        graphs : Iterable[Graph]
            Grafos lidos da entrada
        jobs : int
            Processos de trabalho; com 1, tudo roda no processo atual

        Returns
        -------
        List[VerdictRecord]
            Um veredicto por grafo, na ordem recebida
        """
        pending = list(graphs)
        records: List[Optional[VerdictRecord]] = [None] * len(pending)
        missing = []
        for i, g in enumerate(pending):
            if self.redis_service is None:
                missing.append(i)
                continue
            cached = self.redis_service.get_cached_verdict(graph6_str(g))
            if cached:
                records[i] = VerdictRecord.from_payload(cached)
            else:
                missing.append(i)
        targets = [pending[i] for i in missing]
        if jobs > 1 and len(targets) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                computed = list(pool.map(_classify_record, targets))
        else:
            computed = [_classify_record(g) for g in targets]
        for i, record in zip(missing, computed):
            records[i] = record
            if self.redis_service is not None:
                self.redis_service.cache_verdict(
                    graph6_str(pending[i]), record.to_payload()
                )
        logger.info(
            f"classified {len(pending)} graphs "
            f"({len(pending) - len(missing)} from cache)"
        )
        return [record for record in records if record is not None]
