import logging
from dataclasses import dataclass, field
from typing import Dict, List

import pandas as pd

from catalog.families import SPECIAL_NAMES, FamilySpec, order_and_size
from classify.classifier import Member, NonMember, Unresolved, classify
from classify.domination import domination_number
from generation.mtf import generate_levels
from graphs.codecs import graph6_str
from graphs.graph import diameter
from minor.obstructions import Obstruction


logger = logging.getLogger(__name__)


@dataclass
class OrderSummary:
    """Contagens de uma ordem na verificação da caracterização."""

    order: int
    total: int = 0
    member: int = 0
    nonmember: int = 0
    histogram: Dict[str, int] = field(
        default_factory=lambda: {o.name: 0 for o in Obstruction}
    )
    anomalies: List[str] = field(default_factory=list)


@dataclass
class EnumerationReport:
    """
    Resultado de ``verify_theorem2``.

    Attributes
    ----------
    orders : List[OrderSummary]
        Uma linha por ordem, de 1 até ``max_n``. ``total`` conta os grafos
        conexos livres de triângulos de diâmetro exatamente 2;
        ``anomalies`` guarda o graph6 dos grafos que não ficaram nem como
        membro nem com certificado.
    """

    orders: List[OrderSummary]

    @property
    def anomaly_count(self) -> int:
        return sum(len(row.anomalies) for row in self.orders)

    def machine_lines(self) -> List[str]:
        return [
            f"n={row.order} total={row.total} member={row.member} "
            f"nonmember={row.nonmember} anomalies={len(row.anomalies)}"
            for row in self.orders
        ]

    def to_dataframe(self) -> pd.DataFrame:
        records = []
        for row in self.orders:
            record = {
                "n": row.order,
                "total": row.total,
                "member": row.member,
                "nonmember": row.nonmember,
            }
            record.update(row.histogram)
            record["anomalies"] = len(row.anomalies)
            records.append(record)
        return pd.DataFrame.from_records(records)


def verify_theorem2(
    max_n: int, jobs: int = 1, progress: bool = False
) -> EnumerationReport:
    """
    Classifica todo grafo enumerado de diâmetro 2 até a ordem ``max_n``.

    Um relatório sem anomalias é a verificação da caracterização nessas
    ordens.
    """
    orders = []
    for order, graphs in generate_levels(max_n, jobs, progress):
        row = OrderSummary(order)
        for g in graphs:
            if diameter(g) != 2:
                continue
            row.total += 1
            verdict = classify(g)
            if isinstance(verdict, Member):
                row.member += 1
            elif isinstance(verdict, NonMember):
                row.nonmember += 1
                row.histogram[verdict.obstruction.name] += 1
            else:
                row.anomalies.append(graph6_str(g))
        if row.anomalies:
            logger.error(
                f"order {order}: {len(row.anomalies)} unresolved graphs"
            )
        orders.append(row)
    return EnumerationReport(orders)


@dataclass
class DominationReport:
    """
    Resultado de ``verify_domination``.

    Attributes
    ----------
    gamma_histogram : Dict[int, int]
        Quantos membros têm cada valor de γ.
    gamma3_specs : List[str]
        Famílias dos membros com γ = 3.
    expected_gamma3 : List[str]
        Os grafos fixos do catálogo com ordem até ``max_n``.
    violations : List[str]
        graph6 dos membros com γ > 3.
    """

    max_n: int
    gamma_histogram: Dict[int, int] = field(default_factory=dict)
    gamma3_specs: List[str] = field(default_factory=list)
    expected_gamma3: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return (
            not self.violations
            and sorted(self.gamma3_specs) == sorted(self.expected_gamma3)
        )

    def machine_lines(self) -> List[str]:
        histogram = " ".join(
            f"gamma{gamma}={count}"
            for gamma, count in sorted(self.gamma_histogram.items())
        )
        return [
            f"max_n={self.max_n} {histogram}".rstrip(),
            "gamma3=" + ",".join(sorted(self.gamma3_specs)),
            "expected=" + ",".join(sorted(self.expected_gamma3)),
            f"violations={len(self.violations)}",
        ]


def verify_domination(
    max_n: int, jobs: int = 1, progress: bool = False
) -> DominationReport:
    """
    Confere γ <= 3 em todo membro enumerado e que γ = 3 ocorre exatamente
    nos grafos fixos com ordem até ``max_n``.
    """
    report = DominationReport(max_n)
    report.expected_gamma3 = [
        cli
        for name, cli in SPECIAL_NAMES.items()
        if order_and_size(FamilySpec.special(name))[0] <= max_n
    ]
    for _, graphs in generate_levels(max_n, jobs, progress):
        for g in graphs:
            if diameter(g) != 2:
                continue
            verdict = classify(g)
            if not isinstance(verdict, Member):
                if isinstance(verdict, Unresolved):
                    logger.error(f"unresolved graph {graph6_str(g)}")
                continue
            gamma = domination_number(g).gamma
            report.gamma_histogram[gamma] = (
                report.gamma_histogram.get(gamma, 0) + 1
            )
            if gamma == 3:
                report.gamma3_specs.append(str(verdict.spec))
            elif gamma > 3:
                report.violations.append(graph6_str(g))
    return report
