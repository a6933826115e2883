import argparse
import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple

from constructions.base import Chord, ConstructionSpec
from enumeration import MAX_ENUMERATION_ORDER
from graph_types import ParameterDomainError
from report import DEFAULT_SURVEY_MAX_ORDER, TABLES
from verification import DEFAULT_SEED, suite_names

FORMATS = ("auto", "graph6", "digraph6", "json")
SURVEY_MODES = ("min-wiener", "max-wiener", "outradius1-max", "chord")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Knobs that change how a run executes but never what it prints.
EXECUTION_ONLY = ("threads", "shards", "quiet", "log_level")


def parse_int_list(text: Optional[str]) -> List[int]:
    """'6,8,10' or '6..10' or a mix such as '4,6..8'."""
    if not text:
        return []
    values: List[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                low, high = part.split("..", 1)
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(int(part))
        except ValueError as exc:
            raise ParameterDomainError(f"cannot read {part!r} as an integer or a low..high range") from exc
    return values


def parse_chords(text: Optional[str]) -> Tuple[Chord, ...]:
    """'7:1,6:2' is the chord set u_7 -> u_1, u_6 -> u_2."""
    if not text:
        return ()
    chords = []
    for part in text.split(","):
        try:
            tail, head = part.split(":")
            chords.append((int(tail), int(head)))
        except ValueError as exc:
            raise ParameterDomainError(f"cannot read chord {part!r}; expected tail:head") from exc
    return tuple(chords)


@dataclass
class RunConfig:
    command: str
    family: Optional[str] = None
    params: Dict[str, object] = field(default_factory=dict)
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    fmt: str = "auto"
    formula_id: Optional[str] = None
    formula_args: List[int] = field(default_factory=list)
    suite: Optional[str] = None
    mode: Optional[str] = None
    table: Optional[str] = None
    n_values: List[int] = field(default_factory=list)
    r_values: List[int] = field(default_factory=list)
    survey_max_order: int = DEFAULT_SURVEY_MAX_ORDER
    keep: int = 1
    include_timing: bool = False
    seed: int = DEFAULT_SEED
    threads: int = 1
    shards: Optional[int] = None
    quiet: bool = False
    log_level: str = "WARNING"

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        get = lambda name, default=None: getattr(args, name, default)  # noqa: E731
        params: Dict[str, object] = {}
        for name in ("n", "r", "s", "doubled_r", "d", "q", "k"):
            value = get(name)
            if value is not None:
                params[name] = value
        if get("chords"):
            params["chords"] = parse_chords(get("chords"))
        if get("cycle_lengths"):
            params["cycle_lengths"] = tuple(parse_int_list(get("cycle_lengths")))
        if get("figure"):
            params["figure"] = get("figure")
        return cls(
            command=args.command,
            family=get("family"),
            params=params,
            input_path=get("input"),
            output_path=get("output"),
            fmt=get("format", "auto") or "auto",
            formula_id=get("formula_id"),
            formula_args=list(get("formula_args", []) or []),
            suite=get("suite"),
            mode=get("mode"),
            table=get("table"),
            n_values=parse_int_list(get("n_values")),
            r_values=parse_int_list(get("r_values")),
            survey_max_order=get("survey_max_n", DEFAULT_SURVEY_MAX_ORDER),
            keep=get("keep", 1),
            include_timing=bool(get("timing", False)),
            seed=args.seed,
            threads=args.threads,
            shards=get("shards"),
            quiet=args.quiet,
            log_level=args.log_level,
        )

    def validate(self) -> "RunConfig":
        if self.threads < 1:
            raise ParameterDomainError(f"--threads must be >= 1, got {self.threads}")
        if self.shards is not None and self.shards < 1:
            raise ParameterDomainError(f"--shards must be >= 1, got {self.shards}")
        if self.fmt not in FORMATS:
            raise ParameterDomainError(f"unknown format {self.fmt!r}; known: {', '.join(FORMATS)}")
        if self.log_level not in LOG_LEVELS:
            raise ParameterDomainError(f"unknown log level {self.log_level!r}")
        for name, value in self.params.items():
            if isinstance(value, int) and value < 0:
                raise ParameterDomainError(f"--{name.replace('_', '-')} must be non-negative, got {value}")
        if self.command == "verify" and self.suite not in suite_names():
            raise ParameterDomainError(f"unknown suite {self.suite!r}; known: {', '.join(suite_names())}")
        if self.command == "survey":
            if self.mode not in SURVEY_MODES:
                raise ParameterDomainError(f"unknown survey mode {self.mode!r}; known: {', '.join(SURVEY_MODES)}")
            if self.keep < 1:
                raise ParameterDomainError(f"--keep must be >= 1, got {self.keep}")
        if self.command == "report":
            if self.table not in TABLES:
                raise ParameterDomainError(f"unknown table {self.table!r}; known: {', '.join(TABLES)}")
            if not self.n_values or not self.r_values:
                raise ParameterDomainError("report needs --n-values and --r-values")
            if not 1 <= self.survey_max_order <= MAX_ENUMERATION_ORDER:
                raise ParameterDomainError(
                    f"--survey-max-n must lie in [1, {MAX_ENUMERATION_ORDER}], got {self.survey_max_order}"
                )
        return self

    def construction_spec(self) -> ConstructionSpec:
        if self.family is None:
            raise ParameterDomainError("construct needs a family name")
        return ConstructionSpec(family=self.family, **self.params)

    def resolved(self) -> Dict[str, object]:
        """Every setting that can change the output, with tuples as lists."""
        data = asdict(self)
        for name in EXECUTION_ONLY:
            data.pop(name)
        return json.loads(json.dumps(data))

    def header(self) -> str:
        return "# " + " ".join(f"{key}={json.dumps(value, separators=(',', ':'))}" for key, value in self.resolved().items())
