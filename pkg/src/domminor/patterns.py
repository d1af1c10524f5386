"""Induced-subgraph detection for the fixed patterns the extraction consumes.

Every search returns a role-labeled :class:`Embedding` or ``None``, and the
returned embedding is always the lexicographically least assignment under the
pattern's role order, so downstream traces are reproducible vertex by vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, bits, from_edge_list, mask_of


@dataclass(frozen=True)
class Pattern:
    """A template graph whose vertices carry distinct role names."""

    template: Graph
    roles: tuple[str, ...]

    def __post_init__(self):
        if len(self.roles) != self.template.n:
            raise ValueError("role count must equal template vertex count")
        if len(set(self.roles)) != len(self.roles):
            raise ValueError("role names must be distinct")


@dataclass(frozen=True)
class Embedding:
    """An injective role -> host vertex assignment of an induced copy."""

    roles: tuple[str, ...]
    vertices: tuple[int, ...]

    def vertex(self, role: str) -> int:
        return self.vertices[self.roles.index(role)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.roles, self.vertices))

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


# Banner (b1, b2, b3, b; b'): 4-cycle b1-b2-b3-b-b1 with pendant b' on b.
_BANNER_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]


def banner_pattern() -> Pattern:
    return Pattern(from_edge_list(5, _BANNER_EDGES), ("b1", "b2", "b3", "b", "bp"))


def two_k2_pattern() -> Pattern:
    return Pattern(from_edge_list(4, [(0, 1), (2, 3)]), ("a1", "a2", "b1", "b2"))


def cycle_pattern(length: int) -> Pattern:
    edges = [(i, (i + 1) % length) for i in range(length)]
    return Pattern(from_edge_list(length, edges), tuple(f"c{i}" for i in range(length)))


def path_pattern(length: int) -> Pattern:
    edges = [(i, i + 1) for i in range(length - 1)]
    return Pattern(from_edge_list(length, edges), tuple(f"p{i}" for i in range(length)))


def verify_embedding(host: Graph, pattern: Pattern, emb: Embedding) -> bool:
    """Re-check an embedding against the induced-copy definition from scratch."""
    vs = emb.vertices
    if len(vs) != pattern.template.n or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < host.n for v in vs):
        return False
    t = pattern.template
    for i in range(t.n):
        for j in range(i + 1, t.n):
            if t.has_edge(i, j) != host.has_edge(vs[i], vs[j]):
                return False
    return True


def find_induced(host: Graph, pattern: Pattern) -> Embedding | None:
    """Lexicographically least induced copy of ``pattern`` in ``host``."""
    t = pattern.template
    k = t.n
    if k > host.n:
        return None
    tdeg = [t.degree(i) for i in range(k)]
    assignment = [-1] * k
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        need_adj = 0
        need_non = 0
        for j in range(i):
            if t.has_edge(i, j):
                need_adj |= 1 << assignment[j]
            else:
                need_non |= 1 << assignment[j]
        for v in range(host.n):
            b = 1 << v
            if used & b or host.degree(v) < tdeg[i]:
                continue
            row = host.adj[v]
            if row & need_adj != need_adj or row & need_non:
                continue
            assignment[i] = v
            used |= b
            if extend(i + 1):
                return True
            used &= ~b
        assignment[i] = -1
        return False

    if extend(0):
        return Embedding(pattern.roles, tuple(assignment))
    return None


def find_2k2(host: Graph) -> Embedding | None:
    """Fast scan for two disjoint edges with no edge between them.

    Returns roles (a1, a2, b1, b2) with edges a1a2, b1b2, a1 the least vertex
    of any witness, each edge sorted; or ``None``.
    """
    full = host.full_mask
    for u, v in host.edges():
        rest = full & ~host.adj[u] & ~host.adj[v] & ~(1 << u) & ~(1 << v)
        for w in bits(rest):
            partner = host.adj[w] & rest
            partner &= ~((1 << (w + 1)) - 1)
            if partner:
                x = (partner & -partner).bit_length() - 1
                return Embedding(("a1", "a2", "b1", "b2"), (u, v, w, x))
    return None


def is_2k2_free(host: Graph) -> bool:
    return find_2k2(host) is None


def find_banner(host: Graph) -> Embedding | None:
    return find_induced(host, banner_pattern())


def find_induced_cycle(host: Graph, length: int) -> Embedding | None:
    """Least induced cycle of the given length (cyclically ordered roles)."""
    if length < 4:
        raise ValueError("induced cycle search requires length >= 4")
    return find_induced(host, cycle_pattern(length))


def induced_c5_iter(host: Graph) -> Iterator[tuple[int, ...]]:
    """Enumerate every induced 5-cycle once, in canonical tuple order.

    Canonical form: (v0, v1, v2, v3, v4) cyclic, v0 the least vertex on the
    cycle, v1 < v4 (the two cycle-neighbors of v0). Tuples come out in
    lexicographic order.
    """
    adj = host.adj
    full = host.full_mask
    for v0 in range(host.n):
        later = full & ~((1 << (v0 + 1)) - 1)
        n0 = adj[v0]
        for v1 in bits(n0 & later):
            # v2 adjacent to v1, not v0
            for v2 in bits(adj[v1] & later & ~n0 & ~(1 << v1)):
                block2 = n0 | adj[v1]
                # v3 adjacent to v2, not v0, v1
                for v3 in bits(adj[v2] & later & ~block2 & ~(1 << v2)):
                    # v4 adjacent to v3 and v0, not v1, v2; reflection: v4 > v1
                    cand = adj[v3] & n0 & later & ~adj[v1] & ~adj[v2]
                    cand &= ~((1 << (v1 + 1)) - 1)
                    cand &= ~mask_of((v2, v3))
                    for v4 in bits(cand):
                        yield (v0, v1, v2, v3, v4)


def has_induced_c5(host: Graph) -> bool:
    return next(induced_c5_iter(host), None) is not None


def is_split_graph(host: Graph) -> bool:
    """Recognition via the forbidden induced subgraphs 2K2, C4 and C5."""
    if find_2k2(host) is not None:
        return False
    if find_induced_cycle(host, 4) is not None:
        return False
    return not has_induced_c5(host)
