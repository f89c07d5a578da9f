import hashlib
import json
import logging
from datetime import datetime
from typing import Any, Dict, List, Optional

import redis

from dictionary.vars import CACHE_EXPIRATION, REDIS_URL


logger = logging.getLogger(__name__)

VERDICT_NAMESPACE = "classification"


class RedisService:
    """
    Serviço para interação com Redis.
    Responsável pelo cache dos veredictos de classificação.
    """

    def __init__(
            self,
            host: Optional[str] = None,
            port: int = 6379,
            db: int = 0,
            client: Optional[Any] = None
    ):
        """
        Inicializa o cliente Redis.

        Parameters
        ----------
        host : str
            Host do Redis (usado quando ``REDIS_URL`` não está definida)
        port : int
            Porta do Redis
        db : int
            Banco de dados Redis
        client : Any
            Cliente já construído, com a mesma interface de ``redis.Redis``
        """
        self.client: Optional[Any] = client
        if client is not None:
            return
        try:
            if REDIS_URL:
                self.client = redis.from_url(
                    REDIS_URL,
                    decode_responses=True
                )
                logger.info(f"Redis client initialized from URL: {REDIS_URL}")
            else:
                host = host or 'localhost'
                self.client = redis.Redis(
                    host=host,
                    port=port,
                    db=db,
                    decode_responses=True
                )
                logger.info(f"Redis client initialized: {host}:{port}")

            self.client.ping()
        except Exception as e:
            logger.warning(f"Redis unavailable, verdict cache disabled: {e}")
            self.client = None

    @staticmethod
    def verdict_key(graph6: str) -> str:
        digest = hashlib.md5(graph6.encode()).hexdigest()
        return f"{VERDICT_NAMESPACE}:{digest}"

    def cache_verdict(self,
                      graph6: str,
                      verdict: Dict[str, Any],
                      expiration: int = CACHE_EXPIRATION):
        """
        Armazena o veredicto de um grafo.

        Parameters
        ----------
        graph6 : str
            Linha graph6 da entrada, com a rotulação original
        verdict : Dict[str, Any]
            Linha de veredicto e bloco de detalhes
        expiration : int
            Tempo de expiração em segundos
        """
        try:
            if not self.client:
                return

            cache_data = {
                "graph6": graph6,
                "verdict": verdict,
                "cached_at": datetime.now().isoformat()
            }
            self.client.setex(
                self.verdict_key(graph6),
                expiration,
                json.dumps(cache_data)
            )
            logger.info(f"Verdict cached for graph: {graph6}")
        except Exception as e:
            logger.error(f"Error caching verdict: {e}")

    def get_cached_verdict(self, graph6: str) -> Optional[Dict[str, Any]]:
        """
        Recupera o veredicto em cache de um grafo.

        Returns
        -------
        Optional[Dict[str, Any]]
            O veredicto ou None se não encontrado
        """
        try:
            if not self.client:
                return None

            cached_data = self.client.get(self.verdict_key(graph6))
            if cached_data:
                data = json.loads(str(cached_data))
                logger.info(f"Found cached verdict for graph: {graph6}")
                return data.get("verdict")

            return None
        except Exception as e:
            logger.error(f"Error retrieving cached verdict: {e}")
            return None

    def get_all_keys(self, pattern: str = f"{VERDICT_NAMESPACE}:*") -> List:
        try:
            if not self.client:
                return []
            keys = self.client.keys(pattern)
            return [
                key.decode('utf-8') if isinstance(key, bytes) else key
                for key in keys
            ]
        except Exception as e:
            logger.error(f"Error getting Redis keys: {e}")
            return []

    def clear_cache(self) -> bool:
        """
        Remove os veredictos em cache.
        """
        try:
            if not self.client:
                return False

            keys = self.get_all_keys()
            if keys:
                self.client.delete(*keys)
            logger.info(f"Verdict cache cleared ({len(keys)} keys)")
            return True
        except Exception as e:
            logger.error(f"Error clearing verdict cache: {e}")
            return False

    def is_connected(self) -> bool:
        try:
            if not self.client:
                return False
            return bool(self.client.ping())
        except Exception as e:
            logger.error(f"Error checking Redis connection: {e}")
            return False
