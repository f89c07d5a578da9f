import logging
from typing import Iterator

from generation.mtf import enumerate_mtf
from generation.verification import (
    DominationReport,
    EnumerationReport,
    verify_domination,
    verify_theorem2,
)
from graphs.graph import Graph


logger = logging.getLogger(__name__)


class EnumerationService:
    """
    Serviço de enumeração e verificação.
    Guarda a quantidade de processos e a exibição de progresso usadas
    pela geração.
    """

    def __init__(self, jobs: int = 1, progress: bool = False):
        self.jobs = max(1, jobs)
        self.progress = progress
        logger.info(f"EnumerationService initialized (jobs={self.jobs})")

    def graphs(self, max_n: int) -> Iterator[Graph]:
        return enumerate_mtf(max_n, self.jobs, self.progress)

    def theorem2(self, max_n: int) -> EnumerationReport:
        report = verify_theorem2(max_n, self.jobs, self.progress)
        logger.info(
            f"characterization check up to {max_n}: "
            f"{report.anomaly_count} anomalies"
        )
        return report

    def domination(self, max_n: int) -> DominationReport:
        report = verify_domination(max_n, self.jobs, self.progress)
        logger.info(
            f"domination check up to {max_n}: matches={report.matches}"
        )
        return report
