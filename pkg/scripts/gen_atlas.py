#!/usr/bin/env python3
"""Generate isomorph-free corpora of all graphs on n <= N vertices.

Writes tests/data/graphs{n}.g6, one canonical graph6 line per isomorphism
class. Level n is built by attaching a new vertex to every level-(n-1) graph
with every possible neighborhood, then deduplicating by a canonical form
(iterated color refinement plus individualization, minimizing the relabeled
upper-triangle bitstring).

Known class counts per n (0..8): 1 1 2 4 11 34 156 1044 12346. The script
asserts them, so a silent canonicalization bug cannot ship a wrong corpus.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from domminor.graphs import Graph, bits, emit_graph6  # noqa: E402

EXPECTED_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


def refine(n: int, adj: tuple[int, ...], col: list[int]) -> list[int]:
    while True:
        sig = [
            (col[v], tuple(sorted(col[u] for u in bits(adj[v]))))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[sig[v]] for v in range(n)]
        if new == col:
            return col
        col = new


def _code_for_order(n: int, adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            code = code << 1 | (aj >> order[i] & 1)
    return code


def _canon_rec(n: int, adj: tuple[int, ...], col: list[int]) -> int:
    col = refine(n, adj, col)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(col[v], []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    target = next((cell for cell in ordered if len(cell) > 1), None)
    if target is None:
        order = [cell[0] for cell in ordered]
        return _code_for_order(n, adj, order)
    best = None
    for v in target:
        col2 = [2 * c for c in col]
        col2[v] -= 1
        code = _canon_rec(n, adj, col2)
        if best is None or code < best:
            best = code
    return best


def canonical_code(g: Graph) -> tuple[int, int]:
    n = g.n
    m = g.edge_count()
    if m == 0 or m == n * (n - 1) // 2:
        return n, _code_for_order(n, g.adj, list(range(n)))
    return n, _canon_rec(n, g.adj, [0] * n)


def canonical_graph(g: Graph) -> Graph:
    """Relabel g into the canonical-code labeling (for stable output)."""
    n, code = canonical_code(g)
    adj = [0] * n
    k = n * (n - 1) // 2
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if code >> (k - 1 - pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def extend_level(level: list[Graph]) -> list[Graph]:
    seen: set[tuple[int, int]] = set()
    out: list[Graph] = []
    for parent in level:
        n = parent.n
        for mask in range(1 << n):
            adj = list(parent.adj) + [mask]
            for u in bits(mask):
                adj[u] |= 1 << n
            g = Graph(n + 1, tuple(adj))
            key = canonical_code(g)
            if key not in seen:
                seen.add(key)
                out.append(canonical_graph(g))
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument(
        "--out-dir", type=Path, default=Path(__file__).resolve().parent.parent / "tests" / "data"
    )
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    level: list[Graph] = [Graph(0, ())]
    for n in range(args.max_n + 1):
        t0 = time.monotonic()
        if n > 0:
            level = extend_level(level)
        if n < len(EXPECTED_COUNTS):
            assert len(level) == EXPECTED_COUNTS[n], (
                f"n={n}: got {len(level)} classes, expected {EXPECTED_COUNTS[n]}"
            )
        path = args.out_dir / f"graphs{n}.g6"
        path.write_text("".join(emit_graph6(g) + "\n" for g in level))
        print(f"n={n}: {len(level)} graphs -> {path} ({time.monotonic() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
