import argparse
import json
import logging
import sys
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional, Sequence, TextIO

from canonical import canonical_form, canonical_graph
from chord_search import chord_augmentation_search
from codec import (
    JSON_SCHEMA_VERSION,
    encode,
    encode_digraph6,
    encode_graph6,
    read_json_edges,
    read_lines,
    write_json_edges,
)
from construction_registry import build, get_construction_entries
from formulas import FORMULAS, evaluate
from graph_types import AnyGraph, Digraph, GraphError, ParameterDomainError
from metrics import summarize
from report import build_table, write_csv
from run_config import FORMATS, LOG_LEVELS, SURVEY_MODES, RunConfig
from surveys import max_wiener_outradius1_survey, max_wiener_radius_survey, min_wiener_radius_survey
from verification import DEFAULT_SEED, run_suite, suite_names

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
EXIT_FAILED = 1
EXIT_USAGE = 2
MAX_FAILURES_SHOWN = 10


def _configure_logging(config: RunConfig) -> None:
    level = logging.ERROR if config.quiet else getattr(logging, config.log_level)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _progress(config: RunConfig) -> bool:
    return not config.quiet and sys.stderr.isatty()


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as stream:
        yield stream


def _read_graphs(path: Optional[str]) -> List[AnyGraph]:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as stream:
            text = stream.read()
    if text.lstrip().startswith("{"):
        return [read_json_edges(text)]
    return list(read_lines(text.splitlines()))


def _dump(payload: Dict[str, object], stream: TextIO) -> None:
    stream.write(json.dumps(payload, indent=2) + "\n")


def cmd_construct(config: RunConfig) -> int:
    spec = config.construction_spec()
    g = build(spec)
    logger.info("built %s: order %d, %s", spec.family, g.order, "directed" if g.directed else "undirected")
    if config.fmt == "json":
        payload = json.loads(write_json_edges(g, family=spec.family, params=spec.params()))
        payload["config"] = config.resolved()
        text = json.dumps(payload, indent=2)
    elif config.fmt == "graph6":
        if g.directed:
            raise ParameterDomainError(f"{spec.family} is directed; use --format digraph6")
        text = encode_graph6(g)
    elif config.fmt == "digraph6":
        text = encode_digraph6(g if g.directed else Digraph.from_graph(g))
    else:
        text = encode(g)
    if config.fmt != "json":
        # A graph6 stream has no room for a header line.
        logger.info("%s", config.header())
    with _output(config.output_path) as stream:
        stream.write(text + "\n")
    return 0


def cmd_metrics(config: RunConfig) -> int:
    graphs = _read_graphs(config.input_path)
    results = [summarize(g).to_json_dict() for g in graphs]
    logger.info("summarised %d input graph(s)", len(results))
    with _output(config.output_path) as stream:
        _dump({"schema": JSON_SCHEMA_VERSION, "config": config.resolved(), "results": results}, stream)
    return 0


def cmd_formula(config: RunConfig) -> int:
    result = evaluate(config.formula_id, config.formula_args)
    logger.info("%s", config.header())
    with _output(config.output_path) as stream:
        stream.write(f"{result.value}\n")
    return 0


def cmd_verify(config: RunConfig) -> int:
    results = run_suite(config.suite, seed=config.seed, progress=_progress(config))
    passed = all(result.passed for result in results)
    with _output(config.output_path) as stream:
        stream.write(config.header() + "\n")
        for result in results:
            # Timing stays in the log so the report is reproducible.
            status = "PASS" if result.passed else "FAIL"
            stream.write(f"{status} {result.name}: {result.cases} cases, {len(result.failures)} failures\n")
            for message in result.failures[:MAX_FAILURES_SHOWN]:
                stream.write(f"  {message}\n")
            for note in result.notes:
                stream.write(f"  note: {note}\n")
        stream.write(("PASS" if passed else "FAIL") + f" {config.suite}\n")
    return 0 if passed else EXIT_FAILED


def cmd_survey(config: RunConfig) -> int:
    n, r = config.params.get("n"), config.params.get("r")
    progress = _progress(config)
    payload: Dict[str, object] = {"schema": JSON_SCHEMA_VERSION, "config": config.resolved()}
    if config.mode == "chord":
        if r is None:
            raise ParameterDomainError("survey chord needs --r")
        results = chord_augmentation_search(r, keep=config.keep)
        payload["results"] = [result.to_json_dict() for result in results]
    elif config.mode == "outradius1-max":
        if n is None:
            raise ParameterDomainError("survey outradius1-max needs --n")
        report = max_wiener_outradius1_survey(n, threads=config.threads, shards=config.shards, progress=progress)
        payload["report"] = report.to_json_dict(include_timing=config.include_timing)
    else:
        if n is None or r is None:
            raise ParameterDomainError(f"survey {config.mode} needs --n and --r")
        survey = min_wiener_radius_survey if config.mode == "min-wiener" else max_wiener_radius_survey
        report = survey(n, r, threads=config.threads, shards=config.shards, progress=progress)
        payload["report"] = report.to_json_dict(include_timing=config.include_timing)
    with _output(config.output_path) as stream:
        _dump(payload, stream)
    return 0


def cmd_report(config: RunConfig) -> int:
    rows = build_table(
        config.table,
        config.n_values,
        config.r_values,
        survey_max_order=config.survey_max_order,
        threads=config.threads,
    )
    with _output(config.output_path) as stream:
        write_csv(rows, stream, header=config.header())
    return 0


def cmd_families(config: RunConfig) -> int:
    with _output(config.output_path) as stream:
        for entry in get_construction_entries():
            kind = "digraph" if entry.directed else "graph"
            required = ",".join(entry.required) or "-"
            stream.write(f"{entry.name}\t{kind}\t{required}\t{entry.description}\n")
    return 0


def cmd_canon(config: RunConfig) -> int:
    graphs = _read_graphs(config.input_path)
    with _output(config.output_path) as stream:
        for g in graphs:
            stream.write(f"{canonical_form(g).hex()} {encode(canonical_graph(g))}\n")
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "metrics": cmd_metrics,
    "formula": cmd_formula,
    "verify": cmd_verify,
    "survey": cmd_survey,
    "report": cmd_report,
    "families": cmd_families,
    "canon": cmd_canon,
}


def _add_family_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="order")
    parser.add_argument("--r", type=int, help="radius parameter")
    parser.add_argument("--s", type=int, help="blow-up split")
    parser.add_argument("--doubled-r", type=int, help="2r, for half-integer radii")
    parser.add_argument("--d", type=int, help="cycle length (DP) or hypercube dimension")
    parser.add_argument("--q", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--chords", help="backward chords as tail:head pairs, e.g. 7:1,6:2")
    parser.add_argument("--cycle-lengths", help="cycle lengths for min_rad2, e.g. 3,3")
    parser.add_argument("--figure", help="figure id for the figure family")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wiener",
        description="Exact Wiener index, radius and extremal constructions for graphs and digraphs.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--log-level", default="WARNING", choices=LOG_LEVELS)
    parser.add_argument("--quiet", action="store_true", help="errors only, no progress bars")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomised checks")
    parser.add_argument("--threads", type=int, default=1, help="worker threads for surveys")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_construct = subparsers.add_parser("construct", help="build a named family member")
    p_construct.add_argument("family")
    _add_family_params(p_construct)
    p_construct.add_argument("--format", default="auto", choices=FORMATS)
    p_construct.add_argument("--output", "-o")

    p_metrics = subparsers.add_parser("metrics", help="Wiener index, radii and eccentricities of input graphs")
    p_metrics.add_argument("input", nargs="?", help="graph6/digraph6 lines or a JSON edge list (default: stdin)")
    p_metrics.add_argument("--output", "-o")

    p_formula = subparsers.add_parser("formula", help="evaluate a closed form: " + ", ".join(FORMULAS))
    p_formula.add_argument("formula_id")
    p_formula.add_argument("formula_args", type=int, nargs="*")
    p_formula.add_argument("--output", "-o")

    p_verify = subparsers.add_parser("verify", help="run a verification suite: " + ", ".join(suite_names()))
    p_verify.add_argument("suite")
    p_verify.add_argument("--output", "-o")

    p_survey = subparsers.add_parser("survey", help="exhaustive extremal surveys and the chord search")
    p_survey.add_argument("mode", choices=SURVEY_MODES)
    p_survey.add_argument("--n", type=int)
    p_survey.add_argument("--r", type=int)
    p_survey.add_argument("--shards", type=int, help="work units (default: one per thread)")
    p_survey.add_argument("--keep", type=int, default=1, help="chord search: number of best values to report")
    p_survey.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")
    p_survey.add_argument("--output", "-o")

    p_report = subparsers.add_parser("report", help="CSV rows of the average distance tables")
    p_report.add_argument("table")
    p_report.add_argument("--n-values", default="10,20,30")
    p_report.add_argument("--r-values", default="3,4")
    p_report.add_argument("--survey-max-n", type=int, default=8)
    p_report.add_argument("--output", "-o")

    p_families = subparsers.add_parser("families", help="list construction families")
    p_families.add_argument("--output", "-o")

    p_canon = subparsers.add_parser("canon", help="certificate and canonical encoding of input graphs")
    p_canon.add_argument("input", nargs="?")
    p_canon.add_argument("--output", "-o")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.from_namespace(args).validate()
        _configure_logging(config)
        return COMMANDS[config.command](config)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
