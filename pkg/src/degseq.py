"""
ToughCycles - Degree sequences

Graphicality (Erdős–Gallai), deterministic Havel–Hakimi realization,
exhaustive labeled realization for small n, degree-preserving edge switches,
the predicate P(t) and the degree-sum bound used by the edge-count theorem.
"""
import logging
import random
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from . import config
from .errors import InvalidParameterError, NotGraphicalError, SizeGuardError
from .graph_core import DegreeSequence, Graph

logger = logging.getLogger("toughcycles.degseq")

__all__ = [
    "DegreeSequence",
    "is_graphical",
    "realize",
    "iter_realizations",
    "enumerate_realizations",
    "edge_switch_samples",
    "predicate_P",
    "degree_sum_bound",
    "degree_sum_bound_chain",
    "m90_sequences",
    "m91_sequences",
]


def _erdos_gallai(values: Sequence[int]) -> bool:
    d = sorted(values, reverse=True)
    n = len(d)
    if sum(d) % 2:
        return False
    if any(x < 0 or x > n - 1 for x in d):
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def is_graphical(seq: DegreeSequence) -> bool:
    return _erdos_gallai(seq.degrees)


def realize(seq: DegreeSequence) -> Graph:
    """Havel–Hakimi: highest remaining degree first, ties to the smallest index.

    Vertex i of the result has degree seq[i].
    """
    if not is_graphical(seq):
        raise NotGraphicalError(f"{seq.notation()} is not graphical")
    n = seq.n
    remaining = list(seq.degrees)
    rows = [0] * n
    while True:
        v = max(range(n), key=lambda x: (remaining[x], -x), default=None)
        if v is None or remaining[v] == 0:
            break
        d = remaining[v]
        remaining[v] = 0
        targets = sorted((u for u in range(n) if remaining[u] > 0), key=lambda u: (-remaining[u], u))[:d]
        if len(targets) < d:
            raise NotGraphicalError(f"{seq.notation()} is not graphical")
        for u in targets:
            rows[v] |= 1 << u
            rows[u] |= 1 << v
            remaining[u] -= 1
    return Graph.from_rows(rows)


def iter_realizations(seq: DegreeSequence, allow_large: bool = False) -> Iterator[Graph]:
    """Every labeled graph with deg(i) = seq[i], each exactly once.

    Vertex i picks its neighbours among j > i; a branch is kept only while the
    residual demands of the later vertices stay graphical, so no branch dies.
    """
    n = seq.n
    if n > config.ENUMERATION_MAX_N and not allow_large:
        raise SizeGuardError(
            "enumerate_realizations", n, config.ENUMERATION_MAX_N,
            "use edge_switch_samples for randomized coverage instead",
        )
    if not is_graphical(seq):
        return
    need = list(seq.degrees)
    rows = [0] * n

    def extend(i: int) -> Iterator[Graph]:
        if i == n:
            yield Graph.from_rows(rows)
            return
        candidates = [j for j in range(i + 1, n) if need[j] > 0]
        for chosen in combinations(candidates, need[i]):
            for j in chosen:
                need[j] -= 1
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            saved = need[i]
            need[i] = 0
            if _erdos_gallai(need[i + 1:]):
                yield from extend(i + 1)
            need[i] = saved
            for j in chosen:
                need[j] += 1
                rows[i] &= ~(1 << j)
                rows[j] &= ~(1 << i)

    yield from extend(0)


def enumerate_realizations(seq: DegreeSequence, limit: int, allow_large: bool = False) -> List[Graph]:
    if limit < 0:
        raise InvalidParameterError(f"limit must be >= 0, got {limit}")
    out: List[Graph] = []
    for graph in iter_realizations(seq, allow_large=allow_large):
        if len(out) >= limit:
            logger.info(f"realization enumeration for {seq.notation()} truncated at {limit}")
            break
        out.append(graph)
    return out


def edge_switch_samples(
    g: Graph,
    samples: int,
    seed: int,
    switches_per_sample: Optional[int] = None,
) -> List[Graph]:
    """Degree-preserving double edge swaps: ab, cd -> ad, cb.

    The chain continues from one sample to the next; each sample is the state
    after ``switches_per_sample`` attempted swaps (default 10 m).
    """
    rng = random.Random(seed)
    rows = list(g.rows)
    edges = g.edges()
    attempts = switches_per_sample if switches_per_sample is not None else 10 * max(g.m, 1)
    out: List[Graph] = []
    if len(edges) < 2:
        return [g] * samples
    for _ in range(samples):
        for _ in range(attempts):
            i, j = rng.sample(range(len(edges)), 2)
            a, b = edges[i]
            c, d = edges[j]
            if rng.random() < 0.5:
                c, d = d, c
            if len({a, b, c, d}) < 4:
                continue
            if (rows[a] >> d) & 1 or (rows[c] >> b) & 1:
                continue
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
            rows[c] &= ~(1 << d)
            rows[d] &= ~(1 << c)
            rows[a] |= 1 << d
            rows[d] |= 1 << a
            rows[c] |= 1 << b
            rows[b] |= 1 << c
            edges[i] = (min(a, d), max(a, d))
            edges[j] = (min(c, b), max(c, b))
        out.append(Graph.from_rows(rows))
    return out


def predicate_P(seq: DegreeSequence, t: int) -> Tuple[bool, Optional[int]]:
    """P(t): for t <= i < n/2, d_i <= i implies d_{n-i+t} >= n-i (1-based).

    Returns (holds, smallest violating i).
    """
    if t < 1:
        raise InvalidParameterError(f"P(t) needs t >= 1, got {t}")
    n = seq.n
    d = seq.degrees
    i = t
    while 2 * i < n:
        if d[i - 1] <= i and d[n - i + t - 1] < n - i:
            return False, i
        i += 1
    return True, None


def _check_bound_range(n: int, k: int, t: int) -> None:
    if not (1 <= t <= k and 2 * k < n):
        raise InvalidParameterError(f"degree-sum bound needs 1 <= t <= k < n/2, got n={n}, k={k}, t={t}")


def degree_sum_bound(n: int, k: int, t: int) -> int:
    """Upper bound on the degree sum when P(t) fails at index k."""
    _check_bound_range(n, k, t)
    return n * n - n + 3 * k * k + k * (1 - 2 * n - t)


def degree_sum_bound_chain(n: int, k: int, t: int) -> int:
    """Same bound written around the edge threshold: 2 C(n-2t, 2) + 6t^2 - (k-2t)(2n-3k-5t-1)."""
    _check_bound_range(n, k, t)
    return 2 * comb(n - 2 * t, 2) + 6 * t * t - (k - 2 * t) * (2 * n - 3 * k - 5 * t - 1)


_M90 = (
    ((5, 1), (8, 10), (15, 1), (16, 5)),
    ((6, 1), (7, 2), (8, 8), (16, 6)),
    ((6, 1), (7, 1), (8, 9), (15, 1), (16, 5)),
    ((6, 1), (8, 10), (14, 1), (16, 5)),
    ((6, 1), (8, 10), (15, 2), (16, 4)),
    ((6, 2), (8, 9), (16, 6)),
    ((7, 4), (8, 7), (16, 6)),
    ((7, 3), (8, 8), (15, 1), (16, 5)),
    ((7, 2), (8, 9), (15, 2), (16, 4)),
    ((7, 2), (8, 9), (14, 1), (16, 5)),
    ((7, 1), (8, 10), (13, 1), (16, 5)),
    ((7, 1), (8, 10), (14, 1), (15, 1), (16, 4)),
    ((7, 1), (8, 10), (15, 3), (16, 3)),
    ((8, 11), (12, 1), (16, 5)),
    ((8, 11), (14, 2), (16, 4)),
)

_M91 = (
    ((8, 11), (15, 2), (16, 4)),
    ((7, 2), (8, 9), (16, 6)),
    ((7, 1), (8, 10), (15, 1), (16, 5)),
    ((6, 1), (8, 10), (16, 6)),
    ((8, 11), (14, 1), (16, 5)),
)


def m90_sequences() -> List[DegreeSequence]:
    """The fifteen graphical sequences on 17 vertices with 90 edges (t = 2 edge case)."""
    return [DegreeSequence.from_counts(row) for row in _M90]


def m91_sequences() -> List[DegreeSequence]:
    """The five graphical sequences on 17 vertices with 91 edges."""
    return [DegreeSequence.from_counts(row) for row in _M91]
