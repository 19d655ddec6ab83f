"""
ToughCycles - Graph value type

Simple undirected graphs on vertices 0..n-1. Each vertex owns one bitset row
(a Python int), so adjacency tests are a shift and a mask and neighbourhood
unions are a single OR.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import EdgeListParseError, Graph6ParseError, InvalidParameterError

Edge = Tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph backed by one adjacency bitset per vertex."""

    __slots__ = ("n", "_rows", "_m")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows = tuple(rows)
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from symmetric, loop-free bitset rows (not re-validated)."""
        graph = cls.__new__(cls)
        graph.n = len(rows)
        graph._rows = tuple(rows)
        graph._m = sum(r.bit_count() for r in rows) // 2
        return graph

    # --- structure ---

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def m(self) -> int:
        return self._m

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> List[Edge]:
        """Edges as (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self._rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> List[Edge]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n <= 1 or count_components(self._rows, self.full_mask) == 1

    # --- derived graphs ---

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidParameterError(f"cannot add edge ({u}, {v}) to a graph on {self.n} vertices")
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(rows)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
            raise InvalidParameterError(f"({u}, {v}) is not an edge")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_rows(rows)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph.from_rows([(full ^ r) & ~(1 << v) for v, r in enumerate(self._rows)])

    # --- value semantics ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


@dataclass(frozen=True)
class DegreeSequence:
    """Non-decreasing degree list; multiplicity notation (4^6, 8^3) for display."""

    degrees: Tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        values = tuple(sorted(int(d) for d in degrees))
        n = len(values)
        for d in values:
            if d < 0 or (n and d > n - 1):
                raise InvalidParameterError(f"degree {d} outside [0, {max(n - 1, 0)}] for n={n}")
        object.__setattr__(self, "degrees", values)

    @classmethod
    def from_counts(cls, counts: Iterable[Tuple[int, int]]) -> "DegreeSequence":
        """Expand (degree, multiplicity) pairs, e.g. [(8, 11), (16, 6)]."""
        values: List[int] = []
        for degree, multiplicity in counts:
            if multiplicity < 0:
                raise InvalidParameterError(f"negative multiplicity for degree {degree}")
            values.extend([degree] * multiplicity)
        return cls(values)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse "8^11,14^1,16^5", "(4^6, 8^3)" or a plain list "2,2,2"."""
        body = text.strip().strip("()[]").replace(" ", "")
        if not body:
            return cls(())
        counts: List[Tuple[int, int]] = []
        for token in body.split(","):
            try:
                if "^" in token:
                    degree, multiplicity = token.split("^", 1)
                    counts.append((int(degree), int(multiplicity)))
                else:
                    counts.append((int(token), 1))
            except ValueError:
                raise InvalidParameterError(f"bad degree-sequence token {token!r} in {text!r}")
        return cls.from_counts(counts)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def counts(self) -> List[Tuple[int, int]]:
        out: List[Tuple[int, int]] = []
        for d in self.degrees:
            if out and out[-1][0] == d:
                out[-1] = (d, out[-1][1] + 1)
            else:
                out.append((d, 1))
        return out

    def notation(self) -> str:
        return "(" + ", ".join(f"{d}^{x}" for d, x in self.counts()) + ")"

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, index: int) -> int:
        return self.degrees[index]

    def __str__(self) -> str:
        return self.notation()


# ============ Bitset primitives ============

def count_components(rows: Sequence[int], alive: int, stop_at: Optional[int] = None) -> int:
    """Connected components of the subgraph induced by the vertex mask ``alive``.

    With ``stop_at`` the count stops as soon as it reaches that value.
    """
    count = 0
    while alive:
        seed = alive & -alive
        component = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= rows[v]
            frontier = reach & alive & ~component
            component |= frontier
        alive &= ~component
        count += 1
        if stop_at is not None and count >= stop_at:
            return count
    return count


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# ============ Standard graphs ============

class GraphKind(str, Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    CYCLE = "cycle"
    EMPTY = "empty"
    MATCHING = "matching"
    STAR = "star"


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise InvalidParameterError(f"empty graph needs n >= 0, got {n}")
    return Graph(n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph.from_rows([full & ~(1 << v) for v in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}; vertices 0..a-1 form one side, a..a+b-1 the other."""
    if a < 1 or b < 1:
        raise InvalidParameterError(f"complete bipartite graph needs a, b >= 1, got ({a}, {b})")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph.from_rows([right] * a + [left] * b)


def cycle_graph(n: int) -> Graph:
    """C_n with edges i-(i+1 mod n)."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}: C_1 and C_2 are not simple graphs")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def matching_graph(k: int) -> Graph:
    """kK_2 on 2k vertices, edges (2i, 2i+1)."""
    if k < 0:
        raise InvalidParameterError(f"matching needs k >= 0, got {k}")
    return Graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise InvalidParameterError(f"star needs n >= 2, got {n}")
    return join(complete_graph(1), empty_graph(n - 1))


def standard_graph(kind: GraphKind, *params: int) -> Graph:
    builders = {
        GraphKind.COMPLETE: (complete_graph, 1),
        GraphKind.COMPLETE_BIPARTITE: (complete_bipartite_graph, 2),
        GraphKind.CYCLE: (cycle_graph, 1),
        GraphKind.EMPTY: (empty_graph, 1),
        GraphKind.MATCHING: (matching_graph, 1),
        GraphKind.STAR: (star_graph, 1),
    }
    kind = GraphKind(kind)
    builder, arity = builders[kind]
    if len(params) != arity:
        raise InvalidParameterError(f"{kind.value} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# ============ Combinators ============

def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H; H's vertices are shifted by g.n."""
    shift = g.n
    return Graph.from_rows(list(g.rows) + [r << shift for r in h.rows])


def join(g: Graph, h: Graph) -> Graph:
    """G v H: disjoint union plus every edge between the two parts."""
    g_mask = g.full_mask
    h_mask = h.full_mask << g.n
    rows = [r | h_mask for r in g.rows] + [(r << g.n) | g_mask for r in h.rows]
    return Graph.from_rows(rows)


def k_copies(k: int, g: Graph) -> Graph:
    """kG; k = 0 gives the empty graph on 0 vertices."""
    if k < 0:
        raise InvalidParameterError(f"number of copies must be >= 0, got {k}")
    result = Graph(0)
    for _ in range(k):
        result = disjoint_union(result, g)
    return result


# ============ Queries ============

def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees())


def bipartition(g: Graph) -> Optional[Tuple[int, ...]]:
    """A proper 2-colouring (0/1 per vertex), or None when G has an odd cycle."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in iter_bits(g.rows[u]):
                if colour[v] == -1:
                    colour[v] = 1 - colour[u]
                    stack.append(v)
                elif colour[v] == colour[u]:
                    return None
    return tuple(colour)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def components(g: Graph) -> int:
    return count_components(g.rows, g.full_mask)


def delete_vertices(g: Graph, removed: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """G - S as an induced subgraph with compacted labels, plus old -> new label map."""
    removed_set = set(removed)
    outside = [v for v in removed_set if not 0 <= v < g.n]
    if outside:
        raise InvalidParameterError(f"vertices {sorted(outside)} are not in V(G) (n={g.n})")
    kept = [v for v in range(g.n) if v not in removed_set]
    label = {old: new for new, old in enumerate(kept)}
    edges = [(label[u], label[v]) for u, v in g.edges() if u in label and v in label]
    return Graph(len(kept), edges), label


# ============ graph6 ============

def graph6_encode(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise InvalidParameterError(f"graph6 output supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(chr(63 + value))
    return "".join(out)


def graph6_decode(text: str, line: Optional[int] = None) -> Graph:
    body = text.strip()
    base = 0
    if body.startswith(GRAPH6_HEADER):
        body = body[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not body:
        raise Graph6ParseError("empty input", base, line)
    for offset, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ord(ch)} outside the printable range 63..126", base + offset, line)
    n = ord(body[0]) - 63
    if n > GRAPH6_MAX_N:
        raise Graph6ParseError(f"multi-byte size header (n > {GRAPH6_MAX_N}) is not supported", base, line)
    pairs = n * (n - 1) // 2
    expected = 1 + (pairs + 5) // 6
    if len(body) != expected:
        raise Graph6ParseError(
            f"expected {expected} bytes for n={n}, found {len(body)}", base + min(len(body), expected), line
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[1 + k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.from_rows(rows)


# ============ Edge lists ============

def read_edgelist(text: str) -> Graph:
    """Parse the "n m" header plus m lines of "u v" (0-based)."""
    lines = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, body) for no, body in lines if body]
    if not lines:
        raise EdgeListParseError("missing 'n m' header", 1)
    header_no, header = lines[0]
    try:
        n, m = (int(x) for x in header.split())
    except ValueError:
        raise EdgeListParseError(f"header must be 'n m', got {header!r}", header_no)
    edges: List[Edge] = []
    seen = set()
    for no, body in lines[1:]:
        try:
            u, v = (int(x) for x in body.split())
        except ValueError:
            raise EdgeListParseError(f"expected 'u v', got {body!r}", no)
        if u == v:
            raise EdgeListParseError(f"loop at vertex {u}", no)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex out of range for n={n}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(f"duplicate edge {key}", no)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise EdgeListParseError(f"header announces {m} edges, found {len(edges)}", header_no)
    return Graph(n, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ============ S_n ============

def make_S(n: int) -> Graph:
    """Clique on 0..n/2-1, matching (n/2+2i, n/2+2i+1), cross edges i-(n/2+i)."""
    if n <= 0 or n % 4:
        raise InvalidParameterError(
            f"S_n needs n divisible by 4 (a perfect matching on n/2 vertices), got n={n}"
        )
    half = n // 2
    edges = list(combinations(range(half), 2))
    edges += [(half + 2 * i, half + 2 * i + 1) for i in range(half // 2)]
    edges += [(i, half + i) for i in range(half)]
    return Graph(n, edges)


def is_isomorphic_to_S(g: Graph) -> bool:
    """Structural test: clique on half the vertices, perfect matching on the rest, matching across."""
    n = g.n
    if n <= 0 or n % 4:
        return False
    half = n // 2
    if n == 4:
        # S_4 is C_4
        return g.m == 4 and all(d == 2 for d in g.degrees()) and g.is_connected()
    degrees = g.degrees()
    clique = [v for v in range(n) if degrees[v] == half]
    outer = [v for v in range(n) if degrees[v] == 2]
    if len(clique) != half or len(outer) != half:
        return False
    clique_mask = mask_of(clique)
    outer_mask = mask_of(outer)
    for v in clique:
        if (g.rows[v] & clique_mask).bit_count() != half - 1 or (g.rows[v] & outer_mask).bit_count() != 1:
            return False
    for v in outer:
        if (g.rows[v] & clique_mask).bit_count() != 1 or (g.rows[v] & outer_mask).bit_count() != 1:
            return False
    return True
