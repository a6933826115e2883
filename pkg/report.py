"""Desk-scale numeric rows for the minimum/maximum average distance tables."""
import csv
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, TextIO

from constructions import D_nrs, G_nrs, max_rad_construction, min_rad_construction
from formulas import average, maxradplus_construction_wiener, pairs
from graph_types import INFINITE, ParameterDomainError
from metrics import wiener, wiener_digraph
from surveys import max_wiener_radius_survey, min_wiener_radius_survey

logger = logging.getLogger(__name__)

COLUMNS = ("table", "row", "n", "r", "total", "pairs", "mu", "mu_decimal", "provenance")
DEFAULT_SURVEY_MAX_ORDER = 8


@dataclass
class ReportRow:
    table: str
    row: str
    n: int
    r: int
    total: Optional[int]
    provenance: str
    directed: bool

    @property
    def pairs(self) -> int:
        return pairs(self.n, self.directed)

    @property
    def mu(self) -> Optional[Fraction]:
        return None if self.total is None else average(self.total, self.n, self.directed)

    def to_record(self) -> List[str]:
        mu = self.mu
        return [
            self.table,
            self.row,
            str(self.n),
            str(self.r),
            "" if self.total is None else str(self.total),
            str(self.pairs),
            "" if mu is None else f"{mu.numerator}/{mu.denominator}",
            "" if mu is None else f"{float(mu):.6f}",
            self.provenance,
        ]


@dataclass
class RowKind:
    label: str
    provenance: str
    applicable: Callable[[int, int], bool]
    compute: Callable[[int, int], object]


def _graph_rows(survey_max_order: int, threads: int) -> List[RowKind]:
    def min_survey(n: int, r: int) -> Optional[int]:
        return min_wiener_radius_survey(n, r, threads=threads).optimum

    def max_survey(n: int, r: int) -> Optional[int]:
        return max_wiener_radius_survey(n, r, threads=threads).optimum

    return [
        RowKind("min-radius", "G_nrs(n,r,1) BFS; equals eq1",
            lambda n, r: r >= 3 and n >= 2 * r, lambda n, r: wiener(G_nrs(n, r, 1))),
        RowKind("min-radius-survey", "min-wiener survey",
            lambda n, r: r >= 3 and 2 * r <= n <= survey_max_order, min_survey),
        RowKind("max-radius-survey", "max-wiener survey (extremal graphs are trees)",
            lambda n, r: 2 * r <= n <= survey_max_order, max_survey),
    ]


def _digraph_rows() -> List[RowKind]:
    return [
        RowKind("min-out-radius", "D_nrs(n,r,1) BFS; equals eq2",
            lambda n, r: r >= 3 and n >= 2 * r, lambda n, r: wiener_digraph(D_nrs(n, r, 1))),
        RowKind("min-radius", "min_rad construction BFS (exact minimum for r <= 2)",
            lambda n, r: n > r + 2, lambda n, r: wiener_digraph(min_rad_construction(n, 2 * r))),
        RowKind("max-radius", "max_rad construction BFS (lower bound)",
            lambda n, r: n >= 2 * r + 1, lambda n, r: wiener_digraph(max_rad_construction(n, r))),
        RowKind("max-out-radius", "maxradplus formula (out_radius_path construction)",
            lambda n, r: n >= r + 2, maxradplus_construction_wiener),
    ]


TABLES = ("graphs", "digraphs")


def build_table(
    table: str,
    n_values: Sequence[int],
    r_values: Sequence[int],
    survey_max_order: int = DEFAULT_SURVEY_MAX_ORDER,
    threads: int = 1,
) -> List[ReportRow]:
    """Rows in (row kind, n, r) order; pairs outside a row's domain are left out."""
    if table == "graphs":
        sources, directed = _graph_rows(survey_max_order, threads), False
    elif table == "digraphs":
        sources, directed = _digraph_rows(), True
    else:
        raise ParameterDomainError(f"unknown table {table!r}; known: {', '.join(TABLES)}")

    rows: List[ReportRow] = []
    for kind in sources:
        for n in n_values:
            for r in r_values:
                if not kind.applicable(n, r):
                    continue
                total = kind.compute(n, r)
                if total is INFINITE:
                    total = None
                rows.append(ReportRow(table, kind.label, n, r, total, kind.provenance, directed))
    logger.info("report %s: %d rows over n=%s, r=%s", table, len(rows), list(n_values), list(r_values))
    return rows


def write_csv(rows: Sequence[ReportRow], stream: TextIO, header: Optional[str] = None) -> None:
    if header:
        stream.write(header + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.to_record())
