"""
ToughCycles - Toughness

Exact toughness by exhaustive cutset search with rational arithmetic.

Two facts keep the 2^n search tractable at desk scale:
  * a vertex adjacent to every other vertex lies in every cutset, so only
    subsets of the remaining vertices are enumerated;
  * c(G - S) <= n - |S|, so once |S| / (n - |S|) reaches the best ratio found,
    larger sets cannot improve it (and for is_t_tough, cannot violate t).
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import combinations
from typing import List, Optional, Tuple, Union

import networkx as nx

from . import config
from .errors import DisconnectedGraphError, InvalidParameterError, SizeGuardError
from .graph_core import Graph, count_components, iter_bits, mask_of

logger = logging.getLogger("toughcycles.toughness")

Rational = Union[int, Fraction]


@total_ordering
@dataclass(frozen=True, eq=False)
class ToughnessValue:
    """A reduced fraction, or +infinity for complete graphs (value is None)."""

    value: Optional[Fraction]

    @classmethod
    def finite(cls, numerator: int, denominator: int = 1) -> "ToughnessValue":
        if denominator <= 0 or numerator < 0:
            raise InvalidParameterError(f"toughness must be a non-negative fraction, got {numerator}/{denominator}")
        return cls(Fraction(numerator, denominator))

    @classmethod
    def infinite(cls) -> "ToughnessValue":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self) -> Tuple[int, Fraction]:
        return (1, Fraction(0)) if self.value is None else (0, self.value)

    @staticmethod
    def _coerce(other: object) -> Optional["ToughnessValue"]:
        if isinstance(other, ToughnessValue):
            return other
        if isinstance(other, (int, Fraction)):
            return ToughnessValue(Fraction(other))
        return None

    def __eq__(self, other: object) -> bool:
        other_value = self._coerce(other)
        if other_value is None:
            return NotImplemented
        return self._key() == other_value._key()

    def __lt__(self, other: object) -> bool:
        other_value = self._coerce(other)
        if other_value is None:
            return NotImplemented
        return self._key() < other_value._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        if self.value is None:
            return "inf"
        if self.value.denominator == 1:
            return str(self.value.numerator)
        return f"{self.value.numerator}/{self.value.denominator}"

    def __float__(self) -> float:
        return math.inf if self.value is None else float(self.value)


def parse_fraction(text: str) -> Fraction:
    """"p/q", an integer, or a decimal such as "2.5"."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidParameterError(f"expected a fraction 'p/q' or an integer, got {text!r}")
    if value < 0:
        raise InvalidParameterError(f"toughness threshold must be >= 0, got {text!r}")
    return value


def _prepare(g: Graph, operation: str, allow_large: bool) -> Tuple[int, List[int]]:
    if g.n > config.TOUGHNESS_MAX_N and not allow_large:
        raise SizeGuardError(
            operation, g.n, config.TOUGHNESS_MAX_N,
            "pass allow_large=True (or raise TOUGHCYCLES_TOUGHNESS_MAX_N) to search anyway",
        )
    if not g.is_connected():
        raise DisconnectedGraphError(operation)
    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    rest = [v for v in range(g.n) if g.degree(v) != g.n - 1]
    return mask_of(universal), rest


def _cutsets_of_size(g: Graph, universal: int, rest: List[int], extra: int):
    full = g.full_mask
    for chosen in combinations(rest, extra):
        removed = universal | mask_of(chosen)
        yield removed, full & ~removed


def toughness_with_witness(g: Graph, allow_large: bool = False) -> Tuple[ToughnessValue, Optional[Tuple[int, ...]]]:
    """Toughness plus a cutset attaining it (None for complete graphs)."""
    if g.is_complete():
        return ToughnessValue.infinite(), None
    universal, rest = _prepare(g, "toughness", allow_large)
    n = g.n
    base = universal.bit_count()
    best: Optional[Fraction] = None
    best_set = 0
    for extra in range(0, len(rest) - 1):
        size = base + extra
        if best is not None and Fraction(size, n - size) >= best:
            break
        for removed, alive in _cutsets_of_size(g, universal, rest, extra):
            pieces = count_components(g.rows, alive)
            if pieces >= 2:
                ratio = Fraction(size, pieces)
                if best is None or ratio < best:
                    best, best_set = ratio, removed
    # a connected non-complete graph always has a cutset
    assert best is not None
    return ToughnessValue(best), tuple(iter_bits(best_set))


def toughness(g: Graph, allow_large: bool = False) -> ToughnessValue:
    return toughness_with_witness(g, allow_large)[0]


def find_toughness_violation(g: Graph, t: Rational, allow_large: bool = False) -> Optional[Tuple[int, ...]]:
    """A cutset S with t * c(G - S) > |S|, or None when G is t-tough."""
    t = Fraction(t)
    if g.is_complete():
        return None
    universal, rest = _prepare(g, "is_t_tough", allow_large)
    if t <= 0:
        return None
    n = g.n
    base = universal.bit_count()
    for extra in range(0, len(rest) - 1):
        size = base + extra
        if t * (n - size) <= size:
            break
        needed = max(2, math.floor(Fraction(size) / t) + 1)
        for removed, alive in _cutsets_of_size(g, universal, rest, extra):
            if count_components(g.rows, alive, stop_at=needed) >= needed:
                return tuple(iter_bits(removed))
    return None


def is_t_tough(g: Graph, t: Rational, allow_large: bool = False) -> bool:
    return find_toughness_violation(g, t, allow_large) is None


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity from networkx flow cuts; not size guarded."""
    if g.n <= 1:
        return 0
    if g.is_complete():
        return g.n - 1
    if not g.is_connected():
        raise DisconnectedGraphError("vertex_connectivity")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.node_connectivity(nxg)
