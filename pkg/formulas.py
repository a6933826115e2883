"""Closed-form integer evaluators for the exact values and bounds of the families.

Radius arguments called doubled_r carry 2r so half-integer radii stay exact.
Every evaluator checks its parameter domain and refuses to extrapolate.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Sequence, Tuple

from graph_types import DivisibilityError, ParameterDomainError


@dataclass
class FormulaResult:
    value: int
    formula_id: str
    parameters: Dict[str, int] = field(default_factory=dict)


def _require(condition: bool, formula_id: str, message: str) -> None:
    if not condition:
        raise ParameterDomainError(f"{formula_id}: {message}")


def _exact_div(numerator: int, denominator: int, formula_id: str) -> int:
    if numerator % denominator:
        raise DivisibilityError(f"{formula_id}: {numerator} is not divisible by {denominator}")
    return numerator // denominator


def _half_offset(doubled_r: int) -> int:
    # floor((r - 1/2)^2) = floor((2r - 1)^2 / 4)
    return (doubled_r - 1) ** 2 // 4


def eq1_wiener(n: int, r: int) -> int:
    _require(r >= 3 and n >= 2 * r, "eq1", f"needs n >= 2r >= 6, got n={n}, r={r}")
    return comb(n, 2) + (r - 1) ** 2 * n - r * (r - 1) ** 2


def eq2_wiener(n: int, r: int) -> int:
    _require(r >= 3 and n >= 2 * r, "eq2", f"needs n >= 2r >= 6, got n={n}, r={r}")
    return 2 * comb(n, 2) + (r - 1) ** 2 * n - 4 * comb(r, 3)


def vizing_max_size(n: int, r: int) -> int:
    """Maximum edge count of a graph with order n and radius r."""
    _require(n >= 1 and r >= 1, "vizing", f"needs n >= 1 and r >= 1, got n={n}, r={r}")
    if r == 1:
        return comb(n, 2)
    if r == 2:
        _require(n >= 4, "vizing", f"radius 2 needs n >= 4, got n={n}")
        return n * (n - 2) // 2
    _require(n >= 2 * r, "vizing", f"needs n >= 2r for r >= 3, got n={n}, r={r}")
    return _exact_div((n - 2 * r) ** 2 + 5 * n - 6 * r, 2, "vizing")


def digraph_max_arcs(n: int, r: int) -> int:
    _require(r >= 3 and n >= 2 * r, "maxarcs", f"needs r >= 3 and n >= 2r, got n={n}, r={r}")
    return (n - r + 1) ** 2 + (r - 3)


def min_digraph_wiener_small_r(n: int, doubled_r: int) -> int:
    """Exact minimum for r = 1, 3/2, 2."""
    _require(doubled_r in (2, 3, 4), "minsmall", f"doubled_r must be 2, 3 or 4, got {doubled_r}")
    _require(n >= 2 if doubled_r == 2 else n >= 3, "minsmall", f"n too small for doubled_r={doubled_r}, got n={n}")
    if doubled_r == 2:
        return 2 * comb(n, 2)
    if doubled_r == 3:
        return 2 * comb(n, 2) + (n + 1) // 2
    return n * n


def min_rad_lower_bound(n: int, doubled_r: int) -> int:
    """Leading terms 2C(n,2) + floor((r - 1/2)^2) n of the minimum for r >= 5/2.

    The true minimum differs from this by a constant depending only on r, which
    may be negative; min_rad_rigorous_bound is a bound valid for every n.
    """
    _require(doubled_r >= 5 and n >= 1, "minrad", f"needs doubled_r >= 5 and n >= 1, got n={n}, 2r={doubled_r}")
    return 2 * comb(n, 2) + _half_offset(doubled_r) * n


def min_rad_rigorous_bound(n: int, doubled_r: int) -> int:
    """n(n-1) + ceil(n floor((r - 1/2)^2) / 2).

    Each vertex x satisfies d(x,V) + d(V,x) >= 2(n-1) + floor((r - 1/2)^2);
    summing over x counts every ordered pair twice.
    """
    _require(doubled_r >= 2 and n >= 1, "minrad-rigorous", f"needs doubled_r >= 2 and n >= 1, got n={n}, 2r={doubled_r}")
    return n * (n - 1) + -(-n * _half_offset(doubled_r) // 2)


def min_rad_core_parameters(doubled_r: int) -> Tuple[int, int, int]:
    """(cycle length L, core Wiener index, total distance S of the blown vertex)."""
    if doubled_r % 2 == 0:
        length = doubled_r // 2 + 1
        return length, length * length * (length - 1) // 2, length * (length - 1)
    length = (doubled_r - 1) // 2 + 2
    # The reverse arc only shortens d(tail, head) from L-1 to 1.
    return length, length * length * (length - 1) // 2 - (length - 2), (length - 1) ** 2 + 1


def min_rad_construction_wiener(n: int, doubled_r: int) -> int:
    _require(doubled_r >= 5, "minrad-exact", f"needs doubled_r >= 5, got {doubled_r}")
    _require(2 * n > doubled_r + 4, "minrad-exact", f"needs n > r + 2, got n={n}, 2r={doubled_r}")
    length, core, spread = min_rad_core_parameters(doubled_r)
    copies = n - length + 1
    return core + (copies - 1) * spread + copies * (copies - 1)


def maxrad_construction_lower(n: int, r: int) -> int:
    _require(r >= 1 and n >= 2 * r + 1, "maxrad-lower", f"needs r >= 1 and n >= 2r + 1, got n={n}, r={r}")
    return 2 * r * n * n - 4 * r * r * n + 2 * r * (2 * r - 1) + r ** 3 - r ** 2


def maxradplus_construction_wiener(n: int, r: int) -> int:
    """Exact Wiener index of the out-radius-r path digraph with n = q r + k, 2 <= k <= r + 1."""
    _require(r >= 1 and n >= r + 2, "maxradplus", f"needs r >= 1 and n >= r + 2, got n={n}, r={r}")
    k = (n - 2) % r + 2
    q = (n - k) // r
    total = 0
    for p in range(q):
        base = n - p * r
        total += sum(base * (base - i) for i in range(1, r + 1))
    return total + k * _exact_div(k * (k - 1), 2, "maxradplus")


def radplus1_max_wiener(n: int) -> int:
    _require(n >= 1, "radplus1", f"needs n >= 1, got n={n}")
    return _exact_div(n ** 3 - n, 3, "radplus1")


def pairs(n: int, directed: bool) -> int:
    return n * (n - 1) if directed else comb(n, 2)


def average(value: int, n: int, directed: bool) -> Fraction:
    count = pairs(n, directed)
    return Fraction(value, count) if count else Fraction(0)


@dataclass
class FormulaDef:
    formula_id: str
    evaluator: Callable[..., int]
    arg_names: Tuple[str, ...]
    domain: str


FORMULAS: Dict[str, FormulaDef] = {
    f.formula_id: f
    for f in [
        FormulaDef("eq1", eq1_wiener, ("n", "r"), "n >= 2r >= 6"),
        FormulaDef("eq2", eq2_wiener, ("n", "r"), "n >= 2r >= 6"),
        FormulaDef("vizing", vizing_max_size, ("n", "r"), "r = 1; r = 2, n >= 4; r >= 3, n >= 2r"),
        FormulaDef("maxarcs", digraph_max_arcs, ("n", "r"), "r >= 3, n >= 2r"),
        FormulaDef("minsmall", min_digraph_wiener_small_r, ("n", "doubled_r"), "doubled_r in {2, 3, 4}"),
        FormulaDef("minrad", min_rad_lower_bound, ("n", "doubled_r"), "doubled_r >= 5"),
        FormulaDef("minrad-rigorous", min_rad_rigorous_bound, ("n", "doubled_r"), "doubled_r >= 2"),
        FormulaDef("minrad-exact", min_rad_construction_wiener, ("n", "doubled_r"), "doubled_r >= 5, n > r + 2"),
        FormulaDef("maxrad-lower", maxrad_construction_lower, ("n", "r"), "r >= 1, n >= 2r + 1"),
        FormulaDef("maxradplus", maxradplus_construction_wiener, ("n", "r"), "r >= 1, n >= r + 2"),
        FormulaDef("radplus1", radplus1_max_wiener, ("n",), "n >= 1"),
    ]
}


def evaluate(formula_id: str, args: Sequence[int]) -> FormulaResult:
    definition = FORMULAS.get(formula_id)
    if definition is None:
        raise ParameterDomainError(f"unknown formula {formula_id!r}; known: {', '.join(FORMULAS)}")
    if len(args) != len(definition.arg_names):
        raise ParameterDomainError(
            f"{formula_id} takes {len(definition.arg_names)} argument(s) ({', '.join(definition.arg_names)}), got {len(args)}"
        )
    value = definition.evaluator(*args)
    return FormulaResult(value, formula_id, dict(zip(definition.arg_names, args)))


def formula_ids() -> List[str]:
    return list(FORMULAS)
