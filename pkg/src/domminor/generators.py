"""Deterministic graph families and seeded random generators.

Randomness is driven by a pinned splitmix64 stream so that every corpus is
reproducible from (family, params, seed) alone, on any platform.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph, from_edge_list
from .patterns import find_2k2

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Pinned 64-bit generator (splitmix64); identical streams everywhere."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def chance(self, p: float) -> bool:
        # 53-bit threshold comparison; exact for p in {0, 1}
        return (self.next_u64() >> 11) < int(p * (1 << 53))


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return from_edge_list(n, list(combinations(range(n), 2)))


def complete_multipartite(sizes: list[int]) -> Graph:
    """Parts are consecutive vertex blocks in the given order."""
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = [
        (u, v)
        for a, b in combinations(range(len(sizes)), 2)
        for u in bounds[a]
        for v in bounds[b]
    ]
    return from_edge_list(start, edges)


def petersen() -> Graph:
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return from_edge_list(10, edges)


def banner() -> Graph:
    """4-cycle 0-1-2-3 plus pendant 4 attached at 3; roles (b1,b2,b3,b;b')=(0..4)."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])


def t_graph() -> Graph:
    """The 7-vertex host: outer 5-cycle 0..4, center 5 adjacent to all of the
    cycle except 1, pendant 6 on the center. Contains an induced banner on
    (0, 1, 2, 5; 6) and the outer cycle is an induced C5."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    edges += [(5, 0), (5, 2), (5, 3), (5, 4), (6, 5)]
    return from_edge_list(7, edges)


def two_k2() -> Graph:
    return from_edge_list(4, [(0, 1), (2, 3)])


def one_subdivision_complete(k: int) -> Graph:
    """1-subdivision of K_k: branch vertices 0..k-1 first, then one
    subdivision vertex per pair (i, j) in lexicographic order."""
    if k < 1:
        raise ValueError("one_subdivision_complete needs k >= 1")
    edges = []
    nxt = k
    for i, j in combinations(range(k), 2):
        edges.append((i, nxt))
        edges.append((j, nxt))
        nxt += 1
    return from_edge_list(nxt, edges)


_FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete-multipartite": (None, -1),  # variadic, handled in family()
    "petersen": (petersen, 0),
    "banner": (banner, 0),
    "t-graph": (t_graph, 0),
    "two-k2": (two_k2, 0),
    "one-subdivision-complete": (one_subdivision_complete, 1),
}


def family(name: str, params: list[int] | None = None) -> Graph:
    """Build a named family graph; params are the family's integer arguments."""
    params = params or []
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {sorted(_FAMILIES)}")
    if name == "complete-multipartite":
        if not params:
            raise ValueError("complete-multipartite needs at least one part size")
        return complete_multipartite(params)
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def family_names() -> list[str]:
    return sorted(_FAMILIES)


# ---------------------------------------------------------------------------
# seeded random generators
# ---------------------------------------------------------------------------

def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with each pair decided independently from the seeded stream."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.chance(p)]
    return from_edge_list(n, edges)


def random_2k2_free(n: int, p: float, seed: int) -> Graph:
    """A 2K2-free graph: sample G(n, p), then repair every 2K2 witness by
    adding one random cross edge between its two edges until none remain.

    Each repair strictly increases the edge count, so the loop terminates; the
    result is re-verified 2K2-free. The repair biases toward denser graphs.
    """
    g = random_gnp(n, p, seed)
    rng = SplitMix64(seed ^ 0xD2B74407B1CE6E93)
    adj = list(g.adj)
    while True:
        g = Graph(n, tuple(adj))
        w = find_2k2(g)
        if w is None:
            break
        a1, a2, b1, b2 = w.vertices
        u, v = ((a1, b1), (a1, b2), (a2, b1), (a2, b2))[rng.below(4)]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    assert find_2k2(g) is None
    return g
