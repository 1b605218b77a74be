"""Immutable simple-graph core: construction, basic queries, and text I/O.

Graphs live on dense 0-based vertex indices with bitmask adjacency rows.
The graph6 codec covers the standard one-byte-size format (n <= 62); the
edge-list format is a plain ``n m`` header followed by one ``u v`` line
per edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphInputError

GRAPH6_HEADER = ">>graph6<<"


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    """Ascending tuple of the set bit positions of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable after construction, hashable, and safe to share
    between concurrent workers.  Every iteration order is ascending by
    vertex index; there is no hash-order dependence anywhere.
    """

    __slots__ = ("n", "_rows", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for pos, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(
                    f"edge #{pos} = ({u}, {v}) out of range for {n} vertices"
                )
            if u == v:
                raise GraphInputError(f"edge #{pos} is a loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n: int = n
        self._rows: tuple[int, ...] = tuple(rows)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphInputError(f"expected {n} labels, got {len(labels)}")
        self.labels = labels

    # -- queries ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def vertices(self) -> range:
        return range(self.n)

    def adjacency_bits(self, v: int) -> int:
        """Neighbor set of ``v`` as a bitmask (performance-sensitive callers)."""
        return self._rows[v]

    def rows(self) -> tuple[int, ...]:
        return self._rows

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_to_tuple(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            higher = self._rows[u] >> (u + 1) << (u + 1)
            for v in bits_to_tuple(higher):
                yield (u, v)

    # -- derived graphs --------------------------------------------------

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise GraphInputError("relabel order must be a permutation of all vertices")
        pos = {old: new for new, old in enumerate(order)}
        edges = [(pos[u], pos[v]) for u, v in self.edges()]
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[old] for old in order)
        return Graph(self.n, edges, labels)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        edges = []
        for u in range(self.n):
            missing = full & ~self._rows[u] & ~(1 << u)
            for v in bits_to_tuple(missing >> (u + 1) << (u + 1)):
                edges.append((u, v))
        return Graph(self.n, edges)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- vertex-set helpers ---------------------------------------------------


def check_vertex_set(g: Graph, vertices: Iterable[int], what: str = "vertex set") -> tuple[int, ...]:
    """Validate indices against ``g`` and return them as a tuple.

    Order is preserved; duplicates and out-of-range indices are rejected.
    """
    tup = tuple(vertices)
    seen = set()
    for pos, v in enumerate(tup):
        if not (0 <= v < g.n):
            raise GraphInputError(f"{what}: index {v} at position {pos} out of range (n={g.n})")
        if v in seen:
            raise GraphInputError(f"{what}: duplicate index {v} at position {pos}")
        seen.add(v)
    return tup


def component_masks(rows: Sequence[int], sub_mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``sub_mask``, as masks.

    Components come out ordered by their smallest vertex.
    """
    comps = []
    rest = sub_mask
    while rest:
        start = rest & -rest
        frontier = start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & sub_mask & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def mask_is_connected(rows: Sequence[int], sub_mask: int) -> bool:
    """True iff ``sub_mask`` is non-empty and induces a connected subgraph."""
    if sub_mask == 0:
        return False
    start = sub_mask & -sub_mask
    frontier = start
    comp = 0
    while frontier:
        comp |= frontier
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & sub_mask & ~comp
    return comp == sub_mask


# -- spec operations -------------------------------------------------------


def build_graph(source) -> Graph:
    """Build a graph from ``(n, edge_pairs)``, graph6 text, or edge-list text.

    Text input is sniffed: a first line consisting of exactly two integers
    is treated as an edge-list header, anything else as graph6.
    """
    if isinstance(source, Graph):
        return source
    if isinstance(source, str):
        stripped = source.strip()
        if not stripped:
            raise GraphInputError("empty graph text")
        first = stripped.splitlines()[0].split()
        if len(first) == 2 and all(_is_int(t) for t in first):
            return parse_edge_list(source)
        return from_graph6(source)
    try:
        n, edges = source
    except (TypeError, ValueError):
        raise GraphInputError(
            "graph source must be text or an (n, edges) pair"
        ) from None
    return Graph(int(n), list(edges))


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the mapping from new indices to old ones.

    Vertex ``i`` of the result corresponds to the ``i``-th element of
    ``vertices`` (order preserved).
    """
    sel = check_vertex_set(g, vertices)
    pos = {old: new for new, old in enumerate(sel)}
    edges = []
    sel_mask = mask_of(sel)
    for old_u in sel:
        inside = g.adjacency_bits(old_u) & sel_mask
        for old_v in bits_to_tuple(inside):
            if old_u < old_v:
                edges.append((pos[old_u], pos[old_v]))
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[old] for old in sel)
    return Graph(len(sel), edges, labels), sel


@dataclass(frozen=True)
class ConnectivityResult:
    components: tuple[tuple[int, ...], ...]
    is_connected: bool


def connectivity(g: Graph) -> ConnectivityResult:
    """Connected components (ordered by smallest vertex).

    The empty graph has zero components and is flagged not connected.
    """
    full = (1 << g.n) - 1
    comps = tuple(bits_to_tuple(m) for m in component_masks(g.rows(), full))
    return ConnectivityResult(comps, len(comps) == 1)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    sel = check_vertex_set(g, vertices)
    m = mask_of(sel)
    return all(g.adjacency_bits(v) & m == m & ~(1 << v) for v in sel)


def is_stable(g: Graph, vertices: Iterable[int]) -> bool:
    sel = check_vertex_set(g, vertices)
    m = mask_of(sel)
    return all(g.adjacency_bits(v) & m == 0 for v in sel)


def is_complete_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    x = check_vertex_set(g, xs, "x")
    y = check_vertex_set(g, ys, "y")
    _require_disjoint(x, y)
    ym = mask_of(y)
    return all(g.adjacency_bits(v) & ym == ym for v in x)


def is_anticomplete_between(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    x = check_vertex_set(g, xs, "x")
    y = check_vertex_set(g, ys, "y")
    _require_disjoint(x, y)
    ym = mask_of(y)
    return all(g.adjacency_bits(v) & ym == 0 for v in x)


def neighborhood_of_set(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """N(X): vertices outside X adjacent to at least one member of X."""
    sel = check_vertex_set(g, vertices)
    m = mask_of(sel)
    nb = 0
    for v in sel:
        nb |= g.adjacency_bits(v)
    return bits_to_tuple(nb & ~m)


def _require_disjoint(x: tuple[int, ...], y: tuple[int, ...]) -> None:
    overlap = set(x) & set(y)
    if overlap:
        raise GraphInputError(
            f"between-queries need disjoint sets; shared vertices {sorted(overlap)}"
        )


@dataclass(frozen=True)
class SetQueries:
    is_clique: bool
    is_stable: bool
    is_complete_between: bool
    is_anticomplete_between: bool
    neighborhood_of_set: tuple[int, ...]


def set_queries(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> SetQueries:
    """All pairwise/unary set predicates of the core vocabulary at once."""
    x = check_vertex_set(g, xs, "x")
    return SetQueries(
        is_clique=is_clique(g, x),
        is_stable=is_stable(g, x),
        is_complete_between=is_complete_between(g, x, ys),
        is_anticomplete_between=is_anticomplete_between(g, x, ys),
        neighborhood_of_set=neighborhood_of_set(g, x),
    )


# -- graph6 codec ----------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode as graph6 text (no ``>>graph6<<`` header)."""
    n = g.n
    if n > 62:
        raise GraphInputError(f"graph6 output supports at most 62 vertices, got {n}")
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adjacency_bits(i) >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line; rejects malformed headers, bytes and padding."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphInputError("empty graph6 text")
    c0 = ord(s[0])
    if c0 == 126:
        raise GraphInputError("multi-byte graph6 sizes (n > 62) are not supported")
    if not (63 <= c0 <= 125):
        raise GraphInputError(f"invalid graph6 size byte {s[0]!r} at position 0")
    n = c0 - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphInputError(
            f"graph6 body for n={n} needs {need} characters, got {len(body)}"
        )
    bits = []
    for pos, ch in enumerate(body, start=1):
        val = ord(ch) - 63
        if not (0 <= val <= 63):
            raise GraphInputError(f"invalid graph6 byte {ch!r} at position {pos}")
        for k in range(5, -1, -1):
            bits.append(val >> k & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise GraphInputError(
            f"nonzero graph6 padding bits after bit {idx} (n={n})"
        )
    return Graph(n, edges)


# -- edge-list text --------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` header plus ``m`` lines of ``u v`` pairs."""
    numbered = [
        (lineno, line.strip())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not numbered:
        raise GraphInputError("empty edge-list text")
    lineno, header = numbered[0]
    tokens = header.split()
    if len(tokens) != 2 or not all(_is_int(t) for t in tokens):
        raise GraphInputError(f"line {lineno}: expected header 'n m', got {header!r}")
    n, m = int(tokens[0]), int(tokens[1])
    if n < 0 or m < 0:
        raise GraphInputError(f"line {lineno}: negative counts in header")
    body = numbered[1:]
    if len(body) != m:
        raise GraphInputError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != 2 or not all(_is_int(t) for t in tokens):
            raise GraphInputError(f"line {lineno}: expected edge 'u v', got {line!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise GraphInputError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"line {lineno}: edge ({u}, {v}) out of range (n={n})")
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
