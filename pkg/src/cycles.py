"""
ToughCycles - Cycle search

Exact fixed-length cycle detection by backtracking, anchored at the smallest
vertex of the cycle, plus the cycle spectrum, Hamiltonicity and pancyclicity
built on top of it.
"""
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence

from .errors import InvalidParameterError
from .graph_core import Graph, bipartition, iter_bits


@dataclass(frozen=True)
class CycleSpectrum:
    n: int
    present: FrozenSet[int]

    def missing(self) -> List[int]:
        return [length for length in range(3, self.n + 1) if length not in self.present]

    def as_list(self) -> List[int]:
        return sorted(self.present)

    def __contains__(self, length: object) -> bool:
        return length in self.present


def _reach(rows: Sequence[int], start: int, free: int) -> int:
    """Vertices of ``free`` reachable from ``start`` through ``free``."""
    component = rows[start] & free
    frontier = component
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= rows[v]
        frontier = grow & free & ~component
        component |= frontier
    return component


def _search_from(rows: Sequence[int], anchor: int, length: int, n: int) -> Optional[List[int]]:
    allowed = ((1 << n) - 1) & ~((1 << (anchor + 1)) - 1)
    closing = rows[anchor] & allowed
    if closing.bit_count() < 2:
        return None
    path = [anchor]

    def extend(u: int, visited: int) -> bool:
        k = len(path)
        if k == length:
            # each cycle is met twice; keep the direction whose last vertex beats the second
            return bool(closing >> u & 1) and u > path[1]
        remaining = length - k
        free = allowed & ~visited
        region = _reach(rows, u, free)
        if region.bit_count() < remaining or not region & closing:
            return False
        step = rows[u] & free
        if remaining == 1:
            step &= closing
        for v in iter_bits(step):
            path.append(v)
            if extend(v, visited | (1 << v)):
                return True
            path.pop()
        return False

    return list(path) if extend(anchor, 1 << anchor) else None


def find_cycle_of_length(g: Graph, length: int) -> Optional[List[int]]:
    """A cycle with exactly ``length`` vertices as a vertex list, or None."""
    if not 3 <= length <= g.n:
        raise InvalidParameterError(f"cycle length must lie in [3, n={g.n}], got {length}")
    if length % 2 and bipartition(g) is not None:
        return None
    rows = g.rows
    for anchor in range(g.n - length + 1):
        found = _search_from(rows, anchor, length, g.n)
        if found is not None:
            return found
    return None


def has_cycle_of_length(g: Graph, length: int) -> bool:
    return find_cycle_of_length(g, length) is not None


def cycle_spectrum(g: Graph) -> CycleSpectrum:
    present = frozenset(length for length in range(3, g.n + 1) if has_cycle_of_length(g, length))
    return CycleSpectrum(n=g.n, present=present)


def _require_order(g: Graph, what: str) -> None:
    if g.n < 3:
        raise InvalidParameterError(f"{what} is defined for n >= 3, got n={g.n}")


def is_hamiltonian(g: Graph) -> bool:
    _require_order(g, "Hamiltonicity")
    if g.min_degree() < 2 or not g.is_connected():
        return False
    return has_cycle_of_length(g, g.n)


def is_pancyclic(g: Graph) -> bool:
    _require_order(g, "pancyclicity")
    if g.min_degree() < 2 or not g.is_connected():
        return False
    # longest lengths first
    return all(has_cycle_of_length(g, length) for length in range(g.n, 2, -1))
