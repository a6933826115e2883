from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from graph_types import ParameterDomainError

Chord = Tuple[int, int]


@dataclass(frozen=True)
class ConstructionSpec:
    """A named family plus the parameters that rebuild one member.

    r is the integer radius parameter; doubled_r carries 2r for the families
    where r may be a half-integer. Chords are backward arcs u_i -> u_j in the
    1-based labels of the cycle vertices of DP(n, 2r).
    """

    family: str
    n: Optional[int] = None
    r: Optional[int] = None
    doubled_r: Optional[int] = None
    s: Optional[int] = None
    q: Optional[int] = None
    k: Optional[int] = None
    d: Optional[int] = None
    chords: Tuple[Chord, ...] = ()
    cycle_lengths: Tuple[int, ...] = ()
    figure: Optional[str] = None
    extra: Dict[str, int] = field(default_factory=dict)

    def params(self) -> Dict[str, object]:
        values: Dict[str, object] = {}
        for name in ("n", "r", "doubled_r", "s", "q", "k", "d", "figure"):
            value = getattr(self, name)
            if value is not None:
                values[name] = value
        if self.chords:
            values["chords"] = [list(c) for c in self.chords]
        if self.cycle_lengths:
            values["cycle_lengths"] = list(self.cycle_lengths)
        values.update(self.extra)
        return values


def require(condition: bool, family: str, message: str) -> None:
    if not condition:
        raise ParameterDomainError(f"{family}: {message}")


def split_bounds(n: int, r: int) -> Tuple[int, int]:
    """Valid range of s for the two-clique blow-ups: 1 <= s <= (n - 2r + 2) / 2."""
    return 1, (n - 2 * r + 2) // 2
