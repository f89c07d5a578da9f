import functools
import json
import logging
import os
from typing import Callable, List, Optional, Sequence, Tuple

import click
import pandas as pd

from catalog.families import FamilySpec, construct
from classify.domination import domination_number
from dictionary.exceptions import (
    BoundError,
    FormatError,
    GraphError,
    NotA2Path,
    ParamOutOfRange,
    UnknownFamily,
)
from dictionary.vars import (
    CACHE_ACTIONS,
    DEFAULT_JOBS,
    EXIT_BOUND,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USAGE,
    GRAPH_FORMATS,
    KNOWN_CLIQUE_NUMBERS,
    SEARCH_BUDGET,
    VERIFY_TARGETS,
)
from graphs.codecs import read_graphs, write_graph
from graphs.graph import Graph
from minor.obstructions import Obstruction, obstruction_certificate
from minor.search import find_minor, format_model
from services.classification_service import ClassificationService
from services.clique_service import CliqueService
from services.enumeration_service import EnumerationService
from services.redis_service import RedisService


logger = logging.getLogger(__name__)

FORMAT_OPTION = click.option(
    "--format", "fmt",
    type=click.Choice(GRAPH_FORMATS),
    default="graph6",
    show_default=True,
    help="Graph text format.",
)
INPUT_OPTION = click.option(
    "--input", "source",
    type=click.File("r"),
    default="-",
    help="Graph stream (default: stdin).",
)


def _handle_errors(func: Callable) -> Callable:
    """Converte os erros da aplicação nos códigos de saída da CLI."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BoundError as error:
            click.echo(f"error: {error}", err=True)
            raise click.exceptions.Exit(EXIT_BOUND)
        except (FormatError, GraphError, ParamOutOfRange, NotA2Path) as error:
            click.echo(f"error: {error}", err=True)
            raise click.exceptions.Exit(EXIT_USAGE)
    return wrapper


def _read_stream(source, fmt: str) -> List[Graph]:
    graphs = list(read_graphs(source.read(), fmt))
    if not graphs:
        raise FormatError("no graph in input")
    return graphs


def _resolve_graph(value: str, fmt: str) -> Graph:
    """Nome de família do catálogo ou caminho de arquivo com um grafo."""
    try:
        return construct(FamilySpec.parse(value))
    except UnknownFamily:
        if not os.path.exists(value):
            raise
    with open(value) as handle:
        return _read_stream(handle, fmt)[0]


def _resolve_pattern(value: str) -> Tuple[str, Graph]:
    try:
        obstruction = Obstruction.from_name(value)
        return obstruction.name, obstruction.pattern
    except UnknownFamily:
        spec = FamilySpec.parse(value)
        return str(spec), construct(spec)


def _table(frame: pd.DataFrame) -> str:
    return frame.to_string(index=False)


@click.group(name="pp2")
@click.option("--jobs", type=click.IntRange(min=1), default=DEFAULT_JOBS,
              show_default=True, help="Worker processes.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for randomized audits.")
@click.option("--quiet", is_flag=True, help="Disable progress bars.")
@click.pass_context
def cli(ctx: click.Context, jobs: int, seed: int, quiet: bool):
    """Triangle-free projective-planar diameter-2 graphs."""
    ctx.ensure_object(dict)
    ctx.obj.update(jobs=jobs, seed=seed, progress=not quiet)


@cli.command(name="construct")
@click.argument("family")
@FORMAT_OPTION
@_handle_errors
def construct_cmd(family: str, fmt: str):
    """Print the graph of a catalog FAMILY (k1n:5, c5:1,2, m11, ...)."""
    click.echo(write_graph(construct(FamilySpec.parse(family)), fmt),
               nl=False)


@cli.command()
@INPUT_OPTION
@FORMAT_OPTION
@click.option("--detail", is_flag=True, help="Print the JSON detail block.")
@click.pass_context
@_handle_errors
def classify(ctx: click.Context, source, fmt: str, detail: bool):
    """Classify every graph of the input stream."""
    service = ClassificationService()
    records = service.classify_many(_read_stream(source, fmt),
                                    ctx.obj["jobs"])
    for record in records:
        click.echo(record.line)
        if detail:
            click.echo(json.dumps(record.detail, indent=2))
    members = all(record.member for record in records)
    ctx.exit(EXIT_OK if members else EXIT_NEGATIVE)


@cli.command()
@INPUT_OPTION
@FORMAT_OPTION
@_handle_errors
def dominate(source, fmt: str):
    """Exact domination number of every input graph."""
    for g in _read_stream(source, fmt):
        result = domination_number(g)
        witness = ",".join(str(v) for v in result.witness)
        click.echo(f"gamma={result.gamma} witness={witness}")


@cli.command()
@INPUT_OPTION
@FORMAT_OPTION
@click.option("--pattern", default=None,
              help="Obstruction (k35, k44minus, f0) or catalog family; "
                   "default runs the obstruction battery.")
@click.pass_context
@_handle_errors
def minor(ctx: click.Context, source, fmt: str, pattern: Optional[str]):
    """Search minor certificates in every input graph."""
    found_all = True
    for host in _read_stream(source, fmt):
        if pattern is None:
            certificate = obstruction_certificate(host)
            name = certificate[0].name if certificate else "battery"
            model = certificate[1] if certificate else None
        else:
            name, graph = _resolve_pattern(pattern)
            model = find_minor(graph, host)
        if model is None:
            found_all = False
            click.echo(f"no-minor {name}")
        else:
            click.echo(f"minor {name}")
            click.echo(format_model(model))
    ctx.exit(EXIT_OK if found_all else EXIT_NEGATIVE)


@cli.command(name="enumerate")
@click.option("--max-n", type=int, required=True)
@click.option("--emit", type=click.Choice(GRAPH_FORMATS), default=None,
              help="Write the graphs instead of the count table.")
@click.option("--verify", "verify_target",
              type=click.Choice(["thm2", "domination"]), default=None)
@click.pass_context
@_handle_errors
def enumerate_cmd(ctx: click.Context, max_n: int, emit: Optional[str],
                  verify_target: Optional[str]):
    """Connected maximal triangle-free graphs up to MAX_N vertices."""
    if verify_target is not None:
        ctx.invoke(verify, target=verify_target, max_n=max_n, min_n=1,
                   mn=(1, 0))
        return
    service = EnumerationService(ctx.obj["jobs"], ctx.obj["progress"])
    if emit is not None:
        for g in service.graphs(max_n):
            click.echo(write_graph(g, emit), nl=False)
        return
    counts: dict = {}
    for g in service.graphs(max_n):
        counts[g.order] = counts.get(g.order, 0) + 1
    frame = pd.DataFrame(
        {"n": list(range(1, max_n + 1)),
         "graphs": [counts.get(k, 0) for k in range(1, max_n + 1)]}
    )
    click.echo(_table(frame))


def _mode(mn: Optional[Sequence[int]], signed: bool,
          pushable: bool) -> str:
    chosen = [name for name, flag in (("mn", mn is not None),
                                      ("signed", signed),
                                      ("pushable", pushable)) if flag]
    if len(chosen) != 1:
        raise click.UsageError(
            "choose exactly one of --mn M N, --signed, --pushable"
        )
    return chosen[0]


@cli.command(name="clique-search")
@click.option("--graph", "graph_ref", required=True,
              help="Catalog family name or graph file.")
@FORMAT_OPTION
@click.option("--mn", type=(int, int), default=None, metavar="M N")
@click.option("--signed", is_flag=True)
@click.option("--pushable", is_flag=True)
@click.option("--audit", type=click.FloatRange(0, 1), default=0.0,
              help="Fraction of labelings rechecked after NONE.")
@click.option("--budget", type=click.IntRange(min=1), default=SEARCH_BUDGET,
              show_default=True)
@click.pass_context
@_handle_errors
def clique_search(ctx: click.Context, graph_ref: str, fmt: str,
                  mn: Optional[Tuple[int, int]], signed: bool,
                  pushable: bool, audit: float, budget: int):
    """Search the least clique labeling of a graph."""
    mode = _mode(mn, signed, pushable)
    m, n = mn if mn is not None else (0, 0)
    g = _resolve_graph(graph_ref, fmt)
    outcome = CliqueService(budget).search(
        g, mode, m, n, audit, ctx.obj["seed"]
    )
    click.echo(outcome.report())
    ctx.exit(EXIT_OK if outcome.witness is not None else EXIT_NEGATIVE)


@cli.command()
@click.argument("target", type=click.Choice(VERIFY_TARGETS))
@click.option("--max-n", type=int, default=10, show_default=True)
@click.option("--min-n", type=int, default=1, show_default=True)
@click.option("--mn", type=(int, int), default=(1, 0), show_default=True,
              metavar="M N")
@click.pass_context
@_handle_errors
def verify(ctx: click.Context, target: str, max_n: int, min_n: int,
           mn: Tuple[int, int]):
    """Machine checks of the characterization and its consequences."""
    jobs, progress = ctx.obj["jobs"], ctx.obj["progress"]
    if target == "thm2":
        report = EnumerationService(jobs, progress).theorem2(max_n)
        click.echo(_table(report.to_dataframe()))
        for line in report.machine_lines():
            click.echo(line)
        for row in report.orders:
            for text in row.anomalies:
                click.echo(f"unresolved {text}")
        click.echo(f"anomalies={report.anomaly_count}")
        ctx.exit(EXIT_OK if report.anomaly_count == 0 else EXIT_NEGATIVE)
    if target == "domination":
        domination = EnumerationService(jobs, progress).domination(max_n)
        for line in domination.machine_lines():
            click.echo(line)
        click.echo(f"matches={str(domination.matches).lower()}")
        ctx.exit(EXIT_OK if domination.matches else EXIT_NEGATIVE)
    mode = {"omega-mn": "mn", "omega-signed": "signed",
            "omega-pushable": "pushable"}[target]
    sweep = CliqueService().sweep(mode, min_n, max_n, mn[0], mn[1],
                                  progress)
    click.echo(_table(sweep.to_dataframe()))
    click.echo(f"largest={sweep.largest_clique_order}")
    if sweep.over_budget:
        ctx.exit(EXIT_BOUND)
    key = (mode, mn[0], mn[1]) if mode == "mn" else (mode, 0, 0)
    expected = KNOWN_CLIQUE_NUMBERS.get(key)
    if expected is None:
        logger.info(f"no known clique number for {key}")
        ctx.exit(EXIT_OK)
    matches = sweep.agrees_with(expected)
    click.echo(f"expected={expected}")
    click.echo(f"matches={str(matches).lower()}")
    ctx.exit(EXIT_OK if matches else EXIT_NEGATIVE)


@cli.command()
@click.argument("action", type=click.Choice(CACHE_ACTIONS))
@click.pass_context
def cache(ctx: click.Context, action: str):
    """Inspect or clear the Redis verdict cache."""
    service = RedisService()
    if not service.is_connected():
        click.echo("connected=false")
        ctx.exit(EXIT_NEGATIVE)
    if action == "status":
        click.echo(f"connected=true keys={len(service.get_all_keys())}")
        ctx.exit(EXIT_OK)
    keys = len(service.get_all_keys())
    cleared = service.clear_cache()
    click.echo(f"cleared={keys if cleared else 0}")
    ctx.exit(EXIT_OK if cleared else EXIT_NEGATIVE)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Executa a CLI e devolve o código de saída.

    Returns
    -------
    int
        0 sucesso, 1 resposta negativa, 2 erro de uso ou de entrada,
        3 limite de tamanho ou de orçamento excedido.
    """
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="pp2",
            standalone_mode=False,
            obj={},
        )
    except click.ClickException as error:
        error.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK
