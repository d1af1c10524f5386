"""Bitset graph core: construction, set algebra, graph6 / edge-list / DOT I/O.

Graphs are simple and undirected.  Vertices are the integers ``0..n-1`` and
every vertex set (neighborhoods, branch sets, pattern witnesses, ...) is a
plain Python int used as a bitmask: bit ``v`` set means vertex ``v`` is in the
set.  ``Graph.adj[v]`` is the open neighborhood ``N(v)`` as such a mask.

Graphs are immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_GRAPH6_CAP = 512

_G6_LONG_MAX = 258047  # largest n encodable in the 3-byte extended header


class GraphError(Exception):
    """Base class for graph construction and serialization errors."""


class GraphConstructionError(GraphError):
    pass


class Graph6ParseError(GraphError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph6RangeError(GraphError):
    """Vertex count outside the supported graph6 encoding range."""


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_to_list(mask: int) -> list[int]:
    return list(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as a tuple of neighborhood bitmasks."""

    n: int
    adj: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                yield (u, v)

    def check_invariants(self) -> None:
        """Assert symmetry, irreflexivity and clean high bits."""
        full = self.full_mask
        if len(self.adj) != self.n:
            raise GraphConstructionError("adjacency row count does not match n")
        for v in range(self.n):
            row = self.adj[v]
            if row & ~full:
                raise GraphConstructionError(f"row {v} has bits beyond n")
            if row >> v & 1:
                raise GraphConstructionError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v & 1):
                    raise GraphConstructionError(f"asymmetric pair ({v}, {u})")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicate edges collapse."""
    if n < 0:
        raise GraphConstructionError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"endpoint out of range in edge ({u}, {v})")
        if u == v:
            raise GraphConstructionError(f"self-loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adj_rows(n: int, rows: Iterable[int]) -> Graph:
    """Build a graph from prevalidated neighborhood masks (checked)."""
    g = Graph(n, tuple(rows))
    g.check_invariants()
    return g


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def parse_graph6(text: str, cap: int = DEFAULT_GRAPH6_CAP) -> Graph:
    """Decode one graph6 line (short header n < 63 or 3-byte form up to 258047).

    The 8-byte header form is rejected, as is any n above ``cap``.
    """
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    raw = data.encode("ascii", errors="replace")

    pos = 0
    first = raw[pos]
    if first == 126:  # '~'
        if len(raw) >= 2 and raw[1] == 126:
            raise Graph6ParseError("8-byte graph6 header form is not supported", 1)
        if len(raw) < 4:
            raise Graph6ParseError("truncated extended header", len(raw))
        n = 0
        for k in range(1, 4):
            b = raw[k]
            if not 63 <= b <= 126:
                raise Graph6ParseError(f"malformed header byte {b!r}", k)
            n = (n << 6) | (b - 63)
        pos = 4
    else:
        if not 63 <= first <= 126:
            raise Graph6ParseError(f"malformed header byte {first!r}", 0)
        n = first - 63
        pos = 1

    if n > cap:
        raise Graph6ParseError(f"vertex count {n} above cap {cap}", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - pos < nbytes:
        raise Graph6ParseError(
            f"truncated bit payload: need {nbytes} bytes, have {len(raw) - pos}", len(raw)
        )
    if len(raw) - pos > nbytes:
        raise Graph6ParseError("unexpected bytes after bit payload", pos + nbytes)

    adj = [0] * n
    bit_index = 0
    for k in range(nbytes):
        b = raw[pos + k]
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"malformed payload byte {b!r}", pos + k)
        group = b - 63
        for shift in range(5, -1, -1):
            if bit_index >= nbits:
                break
            if group >> shift & 1:
                i, j = _triangle_coords(bit_index)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(adj))


def _triangle_coords(k: int) -> tuple[int, int]:
    # k-th bit of the column-major upper triangle: columns j = 1.., rows i < j
    j = 1
    while k >= j:
        k -= j
        j += 1
    return k, j


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6; inverse of :func:`parse_graph6`."""
    n = g.n
    if n > _G6_LONG_MAX:
        raise Graph6RangeError(f"n={n} above graph6 3-byte range {_G6_LONG_MAX}")
    if n < 63:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))

    out = []
    group = 0
    nfill = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            nfill += 1
            if nfill == 6:
                out.append(chr(63 + group))
                group = 0
                nfill = 0
    if nfill:
        out.append(chr(63 + (group << (6 - nfill))))
    return head + "".join(out)


# ---------------------------------------------------------------------------
# edge-list text and DOT
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: first line ``n m``, then m ``u v`` lines.

    Lines starting with ``#`` are comments.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphConstructionError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphConstructionError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphConstructionError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphConstructionError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# set algebra over one graph
# ---------------------------------------------------------------------------

def induced_subgraph(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on mask ``s`` plus the sorted-order vertex bijection.

    The returned tuple ``vertices`` lists the original ids in ascending order;
    new vertex ``i`` corresponds to original vertex ``vertices[i]``.
    """
    verts = set_to_list(s & g.full_mask)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(verts), tuple(adj)), tuple(verts)


def relabel_mask(mask: int, vertices: tuple[int, ...]) -> int:
    """Map a subgraph-coordinate mask back through an induced-subgraph bijection."""
    out = 0
    for i in bits(mask):
        out |= 1 << vertices[i]
    return out


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(~g.adj[v] & full & ~(1 << v) for v in range(g.n)))


def neighbors_of_set(g: Graph, s: int) -> int:
    """Union of open neighborhoods of the vertices in ``s``."""
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out


def is_connected_set(g: Graph, s: int) -> bool:
    """True iff ``s`` is non-empty and induces a connected subgraph."""
    if s == 0:
        return False
    start = s & -s
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & s & ~seen
        seen |= frontier
    return seen == s


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    remaining = g.full_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or is_connected_set(g, g.full_mask)


def is_complete_to(g: Graph, x: int, y: int) -> bool:
    """True iff every vertex of mask ``x`` is adjacent to all of mask ``y``."""
    if x & y:
        raise ValueError("is_complete_to requires disjoint sets")
    return all(g.adj[v] & y == y for v in bits(x))


def is_anticomplete_to(g: Graph, x: int, y: int) -> bool:
    """True iff there is no edge between masks ``x`` and ``y``."""
    if x & y:
        raise ValueError("is_anticomplete_to requires disjoint sets")
    return all(g.adj[v] & y == 0 for v in bits(x))
