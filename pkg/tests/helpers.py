"""Crafted hosts that drive specific extraction branches, shared across tests.

Each builder returns a 2K2-free graph with chi > omega routed to one deep
branch of the extractor; the routing facts are asserted in test_extraction
and reused by the acceptance suite's branch-coverage check.
"""

import itertools

from domminor.graphs import Graph, from_edge_list


def join(g: Graph, h: Graph) -> Graph:
    """Complete join; h's vertices are shifted above g's."""
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return from_edge_list(g.n + h.n, edges)


def wheel5() -> Graph:
    """C5 plus a hub complete to the rim; chi=4, omega=3."""
    return from_edge_list(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)])


def singleton_class_host() -> Graph:
    """Rim 0..4, vertex 5 adjacent to all of the rim but 0, hub 6 complete to
    the rim only. Routes to the singleton miss-class branch."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5, i) for i in (1, 2, 3, 4)]
    edges += [(6, i) for i in range(5)]
    return from_edge_list(7, edges)


def forced_k4_host() -> Graph:
    """Rim 0..4, low-degree vertex 5 seeing {0, 2}, plus the four apex
    vertices 6..9 (a K4) that both banner orientations force, joined to a
    5-cycle. Routes through the apex-pair outcome twice into the K4 prefix."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5, 0), (5, 2)]
    edges += [(6, 5), (6, 2), (6, 4)]
    edges += [(7, 1), (7, 2), (7, 4)]
    edges += [(8, 0), (8, 1), (8, 3)]
    edges += [(9, 0), (9, 5), (9, 3)]
    edges += list(itertools.combinations([6, 7, 8, 9], 2))
    return join(from_edge_list(10, edges), from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)]))


def c5_blowup(m: int, extra: tuple = ()) -> Graph:
    """Rim 0..4; miss-class i is the m vertices 5+m*i .. 5+m*i+m-1, adjacent
    to every rim vertex except i; classes are cliques, classes two apart are
    complete, consecutive classes are joined by the complement of the
    index-aligned perfect matching."""
    edges = [(i, (i + 1) % 5) for i in range(5)]

    def y(i, a):
        return 5 + m * (i % 5) + a

    for i in range(5):
        for a in range(m):
            for jj in range(5):
                if jj != i:
                    edges.append((y(i, a), jj))
            for b in range(a + 1, m):
                edges.append((y(i, a), y(i, b)))
            for b in range(m):
                edges.append((y(i, a), y(i + 2, b)))
                if a != b:
                    edges.append((y(i, a), y(i + 1, b)))
    edges += list(extra)
    return from_edge_list(5 + 5 * m, edges)


def pentagon() -> Graph:
    return from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def final_host(m: int) -> Graph:
    """Matched blowup joined to a 5-cycle; routes to the (2m+2)-set prefix."""
    return join(c5_blowup(m), pentagon())


def complete_neighbor_host() -> Graph:
    """m=2 blowup with one matched non-edge turned into an edge, so one class
    vertex becomes complete to the next class; joined to a 5-cycle."""
    return join(c5_blowup(2, extra=((5, 7),)), pentagon())


def pendant_class_host() -> Graph:
    """m=2 blowup where class vertex 5 is made complete to both consecutive
    classes and then receives a pendant vertex; the pendant sits on the
    anticomplete side with an edge into a miss-class."""
    base = c5_blowup(2, extra=((5, 7), (5, 13)))
    edges = list(base.edges()) + [(base.n, 5)]
    return from_edge_list(base.n + 1, edges)
