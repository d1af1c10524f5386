"""Constructive extraction of dominating clique minors from 2K2-free graphs.

Given a 2K2-free graph G, :func:`extract_dominating` returns a verified
dominating minor model with exactly chi(G) branch sets.  The algorithm is a
recursive case analysis; every branch removes a structured vertex set U with
chi(G[U]) <= c, prepends c explicit branch sets that dominate everything kept,
recurses on G - U, and stitches the results with :func:`lift_model`.

Branches (trace names in parentheses):

* chi(G) <= 2 or omega(G) >= chi(G): clique singletons, routed through the
  split-graph model when G is split ("clique", "split_graph").
* C5-free with an induced banner: the banner step must complete, since the
  alternative would force an induced C5 ("banner_completed").
* C5-free, banner-free, with an induced C4: two-pair reduction over the
  4-cycle ("c4_reduction").
* {2K2, C4, C5}-free: split graph, maximum clique as singletons
  ("split_graph").
* some vertex sees 1..3 vertices of some induced C5: normalize, run the
  banner step twice; if both return apex structure, a forced K4 appears and a
  4-set prefix is built ("low_degree_c5", "low_degree_k4", "banner_structure").
* otherwise every vertex is complete, anticomplete, or misses exactly one
  vertex of every induced C5; the five miss-classes Y_1..Y_5 around a chosen
  C5 are analyzed ("y_empty", "y_small", "independent_side_edge",
  "y_complete_neighbor") until the fully regular shape remains, which yields
  a (2m+2)-set prefix ("final_construction").

An ordinary (non-dominating) clique minor of the same order is produced by
:func:`extract_ordinary_minor` via repeated induced-P4 removal.

Each recursion step is sound by construction and additionally re-verified:
the lift re-checks domination of every kept branch set by every prepended
set, and the final model always passes the exact verifier.  Structural facts
the analysis forces (e.g. the K4 in the low-degree branch) are asserted; a
violation raises :class:`InternalContradictionError`, never a wrong model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .exact import (
    MinorModel,
    chromatic_number,
    clique_number,
    verify_dominating_model,
    verify_ordinary_model,
)
from .graphs import (
    Graph,
    bits,
    induced_subgraph,
    mask_of,
    relabel_mask,
    set_to_list,
)
from .patterns import (
    Embedding,
    banner_pattern,
    find_2k2,
    find_banner,
    find_induced,
    find_induced_cycle,
    induced_c5_iter,
    path_pattern,
    verify_embedding,
)

DEFAULT_C5_CAP = 1_000_000


class ExtractionError(Exception):
    pass


class Not2K2FreeError(ExtractionError):
    """Input violates the 2K2-free precondition; carries the 4-vertex witness."""

    def __init__(self, witness: tuple[int, int, int, int]):
        a1, a2, b1, b2 = witness
        super().__init__(
            f"graph is not 2K2-free: edges ({a1},{a2}) and ({b1},{b2}) are "
            "disjoint with no edge between them"
        )
        self.witness = witness


class InternalContradictionError(ExtractionError):
    """A structural fact the analysis forces was violated.

    Unreachable on 2K2-free inputs; raised instead of emitting an unverified
    model, with the violated invariant named and a witness context attached.
    """

    def __init__(self, invariant: str, context: dict, depth: int):
        super().__init__(f"forced structural invariant violated: {invariant} (depth {depth}, {context})")
        self.invariant = invariant
        self.context = context
        self.depth = depth


class EnumerationCapError(ExtractionError):
    """The induced-C5 enumeration exceeded the configured embedding cap."""


class LiftError(ExtractionError):
    """Quota or domination failure while stitching a recursion result."""


@dataclass
class ExtractionConfig:
    verify_steps: bool = False  # re-verify every intermediate model (debug)
    c5_cap: int = DEFAULT_C5_CAP


@dataclass
class Trace:
    """Collects one event per branch taken; JSONL-serializable."""

    events: list[dict] = field(default_factory=list)

    def record(self, depth: int, branch: str, **extra) -> None:
        self.events.append({"depth": depth, "branch": branch, **extra})

    def branches(self) -> set[str]:
        return {e["branch"] for e in self.events}

    def to_jsonl(self) -> str:
        return "".join(json.dumps(e) + "\n" for e in self.events)

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_jsonl())


@dataclass(frozen=True)
class Completed:
    """A finished dominating model for the whole input of the current step."""

    model: MinorModel


@dataclass(frozen=True)
class Structure:
    """The banner step's apex pair: b4, b5 extend the banner to its forced host."""

    b4: int
    b5: int


BannerOutcome = Union[Completed, Structure]


@dataclass(frozen=True)
class C5Partition:
    """The fully regular decomposition around an induced 5-cycle.

    ``cycle`` lists the 5 cycle vertices in cyclic order; ``independent`` is
    the set anticomplete to the cycle; ``complete_side`` the set complete to
    it; ``classes[i]`` the vertices adjacent to all cycle vertices except
    ``cycle[i]``.  All five classes are cliques of one common size ``m >= 2``,
    classes two apart are complete to each other, and between consecutive
    classes non-adjacency is a perfect matching.
    """

    cycle: tuple[int, int, int, int, int]
    independent: int
    complete_side: int
    classes: tuple[int, int, int, int, int]
    m: int


class _Ctx:
    __slots__ = ("config", "trace")

    def __init__(self, config: ExtractionConfig, trace: Trace | None):
        self.config = config
        self.trace = trace

    def record(self, depth: int, branch: str, **extra) -> None:
        if self.trace is not None:
            self.trace.record(depth, branch, **extra)


def _default_ctx(config: ExtractionConfig | None, trace: Trace | None) -> _Ctx:
    return _Ctx(config or ExtractionConfig(), trace)


# ---------------------------------------------------------------------------
# model stitching
# ---------------------------------------------------------------------------

def lift_model(g: Graph, prefix: MinorModel, residual: MinorModel, residual_quota: int) -> MinorModel:
    """Concatenate ``prefix`` with the last ``residual_quota`` residual sets.

    Dropping leading residual sets is sound because the domination condition
    only constrains later sets against earlier ones.  Re-verifies that every
    vertex of every kept residual set has a neighbor in each prefix set.
    """
    if residual_quota < 0 or residual_quota > len(residual):
        raise LiftError(
            f"residual quota {residual_quota} not available from {len(residual)} residual sets"
        )
    kept = residual[len(residual) - residual_quota:]
    pmask = 0
    for p in prefix:
        pmask |= p
    for t in kept:
        if t & pmask:
            raise LiftError("residual set overlaps a prefix set")
        for p in prefix:
            for v in bits(t):
                if g.adj[v] & p == 0:
                    raise LiftError(
                        f"kept residual vertex {v} has no neighbor in prefix set {set_to_list(p)}"
                    )
    return tuple(prefix) + kept


# ---------------------------------------------------------------------------
# recursion plumbing
# ---------------------------------------------------------------------------

def _recurse(g: Graph, keep: int, ctx: _Ctx, depth: int) -> MinorModel:
    """Extract on the induced subgraph ``keep`` and map back to g's labels."""
    sub, verts = induced_subgraph(g, keep)
    if sub.n >= g.n:
        raise InternalContradictionError("recursion must shrink the graph", {"n": g.n}, depth)
    _, model = _extract(sub, ctx, depth + 1)
    return tuple(relabel_mask(t, verts) for t in model)


def _finish(g: Graph, chi: int, model: MinorModel, ctx: _Ctx, depth: int) -> MinorModel:
    """Trim a possibly oversized model to exactly chi sets and optionally verify."""
    if len(model) < chi:
        raise InternalContradictionError(
            "model smaller than the chromatic number",
            {"chi": chi, "got": len(model)},
            depth,
        )
    model = model[len(model) - chi:]
    if ctx.config.verify_steps:
        report = verify_dominating_model(g, model)
        if not report.valid:
            raise InternalContradictionError(
                "intermediate model failed verification", {"report": report.message}, depth
            )
    return model


def _require(ok: bool, invariant: str, context: dict, depth: int) -> None:
    if not ok:
        raise InternalContradictionError(invariant, context, depth)


# ---------------------------------------------------------------------------
# banner step
# ---------------------------------------------------------------------------

def _apex_or_complete(
    g: Graph, banner: tuple[int, int, int, int, int], chi: int, ctx: _Ctx, depth: int
) -> Completed | int:
    """One orientation of the banner step.

    Looks for an apex adjacent to exactly {b, b1} among the banner and to
    nothing in {b2, b3, bp}.  If none exists, the graph splits: everything
    anticomplete to {b1, b, bp} or to {b2, b3} can be removed alongside the
    banner at a cost of two colors, so the reduced graph finishes the model.
    """
    b1, b2, b3, b, bp = banner
    vb = mask_of(banner)
    full = g.full_mask
    cands = g.adj[b] & g.adj[b1] & ~g.adj[b2] & ~g.adj[b3] & ~vb & full
    if cands:
        _require(
            cands & g.adj[bp] == 0,
            "banner apex candidates must avoid the pendant (a 2K2 would exist)",
            {"banner": banner, "candidates": set_to_list(cands & g.adj[bp])},
            depth,
        )
        return (cands & -cands).bit_length() - 1
    d1 = mask_of((b1, b, bp))
    d2 = mask_of((b2, b3))
    a1 = full & ~vb & ~g.adj[b1] & ~g.adj[b] & ~g.adj[bp]
    a2 = full & ~vb & ~a1 & ~g.adj[b2] & ~g.adj[b3]
    removed = vb | a1 | a2
    residual = _recurse(g, full & ~removed, ctx, depth)
    model = lift_model(g, (d1, d2), residual, max(0, chi - 2))
    ctx.record(
        depth,
        "banner_completed",
        banner=list(banner),
        removed=set_to_list(removed),
        prefix=[set_to_list(d1), set_to_list(d2)],
    )
    return Completed(model)


def _banner_step(
    g: Graph, banner: tuple[int, int, int, int, int], chi: int, ctx: _Ctx, depth: int
) -> BannerOutcome:
    b1, b2, b3, b, bp = banner
    out5 = _apex_or_complete(g, banner, chi, ctx, depth)
    if isinstance(out5, Completed):
        return out5
    b5 = out5
    out4 = _apex_or_complete(g, (b3, b2, b1, b, bp), chi, ctx, depth)
    if isinstance(out4, Completed):
        return out4
    b4 = out4
    _require(
        b4 != b5 and g.has_edge(b4, b5),
        "the two banner apexes must be adjacent (a 2K2 would exist)",
        {"banner": banner, "b4": b4, "b5": b5},
        depth,
    )
    ctx.record(depth, "banner_structure", banner=list(banner), b4=b4, b5=b5)
    return Structure(b4=b4, b5=b5)


def banner_step(
    g: Graph,
    banner: Embedding,
    chi: int | None = None,
    config: ExtractionConfig | None = None,
    trace: Trace | None = None,
) -> BannerOutcome:
    """Public banner step on an induced banner embedding (roles b1,b2,b3,b,bp)."""
    if not verify_embedding(g, banner_pattern(), banner):
        raise ValueError("embedding is not an induced banner of the host")
    if chi is None:
        chi, _ = chromatic_number(g)
    return _banner_step(g, banner.vertices, chi, _default_ctx(config, trace), 0)


# ---------------------------------------------------------------------------
# C4 reduction (C5-free, banner-free hosts)
# ---------------------------------------------------------------------------

def _c4_reduction(
    g: Graph, c4: tuple[int, int, int, int], chi: int, ctx: _Ctx, depth: int
) -> MinorModel:
    v1, v2, v3, v4 = c4
    cmask = mask_of(c4)
    full = g.full_mask
    iso = full & ~cmask
    for v in c4:
        iso &= ~g.adj[v]
    h = full & ~cmask & ~iso
    for v in bits(h):
        _require(
            (g.adj[v] & cmask).bit_count() >= 2,
            "in a banner-free host every attached vertex meets the 4-cycle twice",
            {"vertex": v, "c4": c4},
            depth,
        )
    residual = _recurse(g, h, ctx, depth)
    for d1, d2 in (
        (mask_of((v1, v2)), mask_of((v3, v4))),
        (mask_of((v1, v4)), mask_of((v2, v3))),
    ):
        if all(g.adj[v] & d1 and g.adj[v] & d2 for v in bits(h)):
            model = lift_model(g, (d1, d2), residual, max(0, chi - 2))
            ctx.record(
                depth,
                "c4_reduction",
                c4=list(c4),
                prefix=[set_to_list(d1), set_to_list(d2)],
                removed=set_to_list(cmask | iso),
            )
            return model
    raise InternalContradictionError(
        "one opposite-pair split of the 4-cycle must dominate everything kept "
        "(otherwise an induced C5 exists)",
        {"c4": c4},
        depth,
    )


def c4_reduction_step(
    g: Graph,
    c4: Embedding,
    config: ExtractionConfig | None = None,
    trace: Trace | None = None,
) -> MinorModel:
    """Public C4 reduction; host must be 2K2-free, C5-free and banner-free."""
    from .patterns import cycle_pattern

    if not verify_embedding(g, cycle_pattern(4), c4):
        raise ValueError("embedding is not an induced 4-cycle of the host")
    chi, _ = chromatic_number(g)
    ctx = _default_ctx(config, trace)
    return _finish(g, chi, _c4_reduction(g, c4.vertices, chi, ctx, 0), ctx, 0)


# ---------------------------------------------------------------------------
# split-graph model
# ---------------------------------------------------------------------------

def _split_model(g: Graph, chi: int, ctx: _Ctx, depth: int) -> MinorModel:
    omega, cmask = clique_number(g)
    _require(
        omega == chi,
        "split graphs are perfect, so the clique and chromatic numbers agree",
        {"omega": omega, "chi": chi},
        depth,
    )
    model = tuple(1 << v for v in set_to_list(cmask)[:chi])
    ctx.record(depth, "split_graph", clique=set_to_list(cmask))
    return model


def split_graph_model(
    g: Graph, config: ExtractionConfig | None = None, trace: Trace | None = None
) -> MinorModel:
    """Maximum clique as singleton branch sets; valid for any split graph."""
    from .patterns import is_split_graph

    if not is_split_graph(g):
        raise ValueError("split_graph_model requires a split graph")
    chi, _ = chromatic_number(g)
    return _split_model(g, chi, _default_ctx(config, trace), 0)


# ---------------------------------------------------------------------------
# low-degree C5 branch
# ---------------------------------------------------------------------------

def _cycle_symmetries(c: tuple[int, ...]):
    for r in range(5):
        rot = c[r:] + c[:r]
        yield rot
        yield (rot[0],) + tuple(reversed(rot[1:]))


def _normalize_low_degree(
    g: Graph, c5: tuple[int, ...], x: int, depth: int
) -> tuple[int, ...]:
    """Rotate/reflect so x is adjacent to positions {0, 2} or {0, 2, 4}."""
    for sym in _cycle_symmetries(c5):
        pos = {i for i, v in enumerate(sym) if g.has_edge(x, v)}
        if pos == {0, 2} or pos == {0, 2, 4}:
            return sym
    raise InternalContradictionError(
        "a vertex with 1..3 neighbors on an induced C5 must see two at distance "
        "two (anything else forces a 2K2)",
        {"c5": c5, "x": x, "neighbors": set_to_list(g.adj[x] & mask_of(c5))},
        depth,
    )


def _low_degree_c5(
    g: Graph, c5: tuple[int, ...], x: int, chi: int, ctx: _Ctx, depth: int
) -> MinorModel:
    c = _normalize_low_degree(g, c5, x, depth)
    ctx.record(depth, "low_degree_c5", c5=list(c), x=x)
    full = g.full_mask
    cmask = mask_of(c)

    banner1 = (x, c[0], c[1], c[2], c[3])
    out1 = _banner_step(g, banner1, chi, ctx, depth)
    if isinstance(out1, Completed):
        return out1.model
    z, y = out1.b4, out1.b5
    _require(
        not g.has_edge(x, c[4]),
        "the chosen low-degree vertex must see exactly two cycle vertices once "
        "an apex pair exists (global minimality)",
        {"c5": list(c), "x": x},
        depth,
    )
    banner2 = (x, c[2], c[1], c[0], c[4])
    out2 = _banner_step(g, banner2, chi, ctx, depth)
    if isinstance(out2, Completed):
        return out2.model
    u, w = out2.b4, out2.b5

    quad = (y, z, u, w)
    _require(
        len(set(quad)) == 4,
        "the four apex vertices must be distinct",
        {"quad": quad},
        depth,
    )
    for a in range(4):
        for b in range(a + 1, 4):
            _require(
                g.has_edge(quad[a], quad[b]),
                "the four apex vertices must induce a K4",
                {"pair": (quad[a], quad[b])},
                depth,
            )
    _require(
        g.has_edge(c[3], u) and g.has_edge(c[3], w),
        "the cycle vertex opposite the first banner must see both later apexes",
        {"v4": c[3], "u": u, "w": w},
        depth,
    )
    _require(
        g.has_edge(c[4], y) and g.has_edge(c[4], z),
        "the cycle vertex opposite the second banner must see both first apexes",
        {"v5": c[4], "y": y, "z": z},
        depth,
    )

    d = (
        mask_of((x, c[0], c[4])),
        mask_of((c[1], c[2], c[3])),
        mask_of((z, u)),
        mask_of((y, w)),
    )
    report = verify_dominating_model(g, d)
    _require(
        report.valid,
        "the four-set prefix must itself be a dominating K4 model",
        {"report": report.message},
        depth,
    )

    smask = mask_of((x, y, z, u, w))
    iso = full & ~cmask
    for v in c:
        iso &= ~g.adj[v]
    h = full & ~cmask & ~iso
    pool = h & ~smask
    sieved = 0
    for dk in d:
        ak = 0
        for v in bits(pool & ~sieved):
            if g.adj[v] & dk == 0:
                ak |= 1 << v
        sieved |= ak
    keep = full & ~(iso | cmask | smask | sieved)
    residual = _recurse(g, keep, ctx, depth)
    model = lift_model(g, d, residual, max(0, chi - 4))
    ctx.record(
        depth,
        "low_degree_k4",
        c5=list(c),
        x=x,
        quad=list(quad),
        prefix=[set_to_list(t) for t in d],
        removed=set_to_list(full & ~keep),
    )
    return model


def low_degree_c5_step(
    g: Graph,
    c5: tuple[int, ...],
    x: int,
    config: ExtractionConfig | None = None,
    trace: Trace | None = None,
) -> MinorModel:
    """Public low-degree branch; (c5, x) should globally minimize the cycle degree."""
    chi, _ = chromatic_number(g)
    ctx = _default_ctx(config, trace)
    return _finish(g, chi, _low_degree_c5(g, tuple(c5), x, chi, ctx, 0), ctx, 0)


# ---------------------------------------------------------------------------
# C5 partition and its side branches
# ---------------------------------------------------------------------------

def _partition_fallback_banner(
    g: Graph,
    banner: tuple[int, int, int, int, int],
    chi: int,
    ctx: _Ctx,
    depth: int,
    invariant: str,
    context: dict,
) -> Completed:
    """Run the banner step where the regular shape is violated.

    Because every vertex sees 0, 4 or 5 vertices of every induced C5 at this
    point, the apex-pair outcome is impossible (an apex would see 1..3), so
    the step must complete; anything else is a genuine contradiction.
    """
    pat = banner_pattern()
    _require(
        verify_embedding(g, pat, Embedding(pat.roles, banner)),
        invariant + " (fallback banner is not induced)",
        context | {"banner": banner},
        depth,
    )
    out = _banner_step(g, banner, chi, ctx, depth)
    if isinstance(out, Completed):
        return out
    raise InternalContradictionError(invariant, context | {"banner": banner}, depth)


def _build_partition(
    g: Graph, c5: tuple[int, ...], chi: int, ctx: _Ctx, depth: int
) -> Completed | C5Partition:
    c = tuple(c5)
    full = g.full_mask
    cmask = mask_of(c)
    iso = full & ~cmask
    for v in c:
        iso &= ~g.adj[v]
    h = full & ~cmask & ~iso

    j = h
    y = [0] * 5
    for v in bits(h):
        misses = [i for i in range(5) if not g.has_edge(v, c[i])]
        _require(
            len(misses) <= 1,
            "after the low-degree phase every attached vertex misses at most one cycle vertex",
            {"vertex": v, "misses": misses},
            depth,
        )
        if misses:
            y[misses[0]] |= 1 << v
            j &= ~(1 << v)
    ymask = y[0] | y[1] | y[2] | y[3] | y[4]

    # each miss-class must be a clique; a non-edge spawns a banner
    for i in range(5):
        for a in bits(y[i]):
            non = y[i] & ~g.adj[a] & ~(1 << a)
            if non:
                b = (non & -non).bit_length() - 1
                banner = (a, c[(i + 3) % 5], b, c[(i + 1) % 5], c[i])
                return _partition_fallback_banner(
                    g, banner, chi, ctx, depth,
                    "each miss-class must be a clique",
                    {"class": i, "pair": (a, b)},
                )

    # all classes empty: remove cycle plus anticomplete side, three-set prefix
    if ymask == 0:
        prefix = (mask_of((c[0], c[1], c[2])), 1 << c[3], 1 << c[4])
        residual = _recurse(g, j, ctx, depth)
        model = lift_model(g, prefix, residual, max(0, chi - 3))
        ctx.record(
            depth,
            "y_empty",
            c5=list(c),
            prefix=[set_to_list(t) for t in prefix],
            removed=set_to_list(cmask | iso),
        )
        return Completed(model)

    # a singleton class, or an empty class right after a non-empty one
    for a in range(5):
        if y[a] == 0:
            continue
        ya = y[a]
        if ya.bit_count() == 1:
            yv = (ya & -ya).bit_length() - 1
            prefix = (
                mask_of((yv, c[(a + 1) % 5], c[(a + 2) % 5])),
                mask_of((c[(a + 3) % 5], c[(a + 4) % 5])),
                1 << c[a],
            )
            variant = "singleton"
        elif y[(a + 1) % 5] == 0:
            yv = (ya & -ya).bit_length() - 1
            prefix = (
                mask_of((yv, c[a], c[(a - 1) % 5])),
                mask_of((c[(a + 2) % 5], c[(a + 3) % 5])),
                1 << c[(a + 1) % 5],
            )
            variant = "next_empty"
        else:
            continue
        residual = _recurse(g, h & ~(1 << yv), ctx, depth)
        model = lift_model(g, prefix, residual, max(0, chi - 3))
        ctx.record(
            depth,
            "y_small",
            variant=variant,
            c5=list(c),
            klass=a,
            prefix=[set_to_list(t) for t in prefix],
            removed=set_to_list(cmask | iso | (1 << yv)),
        )
        return Completed(model)

    # every vertex on the complete side misses at most one vertex per class
    for v in bits(j):
        for i in range(5):
            missed = y[i] & ~g.adj[v]
            _require(
                missed.bit_count() <= 1,
                "a fully attached vertex misses at most one vertex of each class "
                "(two misses give a 2K2)",
                {"vertex": v, "class": i, "missed": set_to_list(missed)},
                depth,
            )

    # classes two apart are complete; consecutive classes miss at most one each
    for i in range(5):
        for a in bits(y[i]):
            far = y[(i + 2) % 5] & ~g.adj[a]
            _require(
                far == 0,
                "classes two apart on the cycle must be complete to each other",
                {"class": i, "vertex": a, "missed": set_to_list(far)},
                depth,
            )
            near = y[(i + 1) % 5] & ~g.adj[a]
            _require(
                near.bit_count() <= 1,
                "a class vertex misses at most one vertex of the next class",
                {"class": i, "vertex": a, "missed": set_to_list(near)},
                depth,
            )

    # An edge between the anticomplete side and a miss-class: the class vertex
    # v is then forced to be complete to both consecutive classes, because a
    # missed partner y+ would close the induced 5-cycle (u, v, c_{i+1}, c_i,
    # y+) on which c_{i+2} sees exactly three vertices, contradicting the
    # low-degree scan.  Likewise u picks up every fully attached vertex and
    # every class vertex that v misses (else a 2K2 appears with (c_i, .)), so
    # {v, u} dominates everything outside C, I and v's own removals.  Four
    # prefix sets then suffice, and C + I + {v, w1, w2} is 4-colorable.
    for u in bits(iso):
        hit = g.adj[u] & ymask
        if hit == 0:
            continue
        v = (hit & -hit).bit_length() - 1
        i = next(k for k in range(5) if y[k] >> v & 1)
        for di in (1, 4):
            gap = y[(i + di) % 5] & ~g.adj[v]
            _require(
                gap == 0,
                "a class vertex with an anticomplete-side neighbor must be "
                "complete to both consecutive classes (a missed partner would "
                "close a 5-cycle the low-degree scan had to catch)",
                {"u": u, "v": v, "class": i, "missed": set_to_list(gap)},
                depth,
            )
        w1 = y[(i - 1) % 5] & -y[(i - 1) % 5]
        w2 = y[(i + 2) % 5] & -y[(i + 2) % 5]
        w1v = w1.bit_length() - 1
        w2v = w2.bit_length() - 1
        prefix = (
            mask_of((v, u)),
            mask_of((c[(i + 2) % 5], c[(i + 3) % 5])),
            mask_of((c[(i + 4) % 5], w2v)),
            mask_of((c[(i + 1) % 5], w1v)),
        )
        removed = cmask | iso | (1 << v) | w1 | w2
        keep = full & ~removed
        report = verify_dominating_model(g, prefix)
        _require(
            report.valid,
            "the four-set prefix of the anticomplete-edge branch must itself "
            "be a dominating model",
            {"report": report.message},
            depth,
        )
        for x in bits(keep):
            for t in prefix:
                _require(
                    g.adj[x] & t != 0,
                    "every kept vertex must have a neighbor in each prefix set "
                    "of the anticomplete-edge branch",
                    {"vertex": x, "set": set_to_list(t)},
                    depth,
                )
        residual = _recurse(g, keep, ctx, depth)
        model = lift_model(g, prefix, residual, max(0, chi - 4))
        ctx.record(
            depth,
            "independent_side_edge",
            c5=list(c),
            u=u,
            v=v,
            klass=i,
            prefix=[set_to_list(t) for t in prefix],
            removed=set_to_list(removed),
        )
        return Completed(model)

    # a class vertex complete to a consecutive class collapses three classes
    for a in range(5):
        for yv in bits(y[a]):
            for direction in (1, -1):
                if y[(a + direction) % 5] & ~g.adj[yv]:
                    continue
                nb = y[(a + direction) % 5]
                far = y[(a + 3 * direction) % 5]
                ynb = (nb & -nb).bit_length() - 1
                yfar = (far & -far).bit_length() - 1
                cnb = c[(a + direction) % 5]
                cfar = c[(a + 3 * direction) % 5]
                prefix = (
                    mask_of((yv, cnb)),
                    mask_of((ynb, cfar)),
                    mask_of((yfar, c[a])),
                )
                smask = mask_of((c[a], cnb, cfar, yv, ynb, yfar))
                residual = _recurse(g, full & ~smask & ~iso, ctx, depth)
                model = lift_model(g, prefix, residual, max(0, chi - 3))
                ctx.record(
                    depth,
                    "y_complete_neighbor",
                    c5=list(c),
                    klass=a,
                    direction=direction,
                    vertex=yv,
                    prefix=[set_to_list(t) for t in prefix],
                    removed=set_to_list(smask | iso),
                )
                return Completed(model)

    sizes = [y[i].bit_count() for i in range(5)]
    _require(
        len(set(sizes)) == 1 and sizes[0] >= 2,
        "all five classes must share one size of at least two",
        {"sizes": sizes},
        depth,
    )
    m = sizes[0]

    # non-adjacency between consecutive classes is now a perfect matching;
    # no fully attached vertex may avoid both partners of a matched pair
    for i in range(5):
        for yv in bits(y[i]):
            prev = y[(i - 1) % 5] & ~g.adj[yv]
            nxt = y[(i + 1) % 5] & ~g.adj[yv]
            _require(
                prev.bit_count() == 1 and nxt.bit_count() == 1,
                "every class vertex has exactly one non-neighbor in each "
                "consecutive class",
                {"class": i, "vertex": yv},
                depth,
            )
            p = (prev & -prev).bit_length() - 1
            q = (nxt & -nxt).bit_length() - 1
            offenders = j & ~g.adj[p] & ~g.adj[q]
            _require(
                offenders == 0,
                "no fully attached vertex avoids both matched partners of a "
                "class vertex (it would see only three vertices of some induced C5)",
                {"class": i, "vertex": yv, "offenders": set_to_list(offenders)},
                depth,
            )

    ctx.record(depth, "c5_partition", c5=list(c), m=m)
    return C5Partition(c, iso, j, tuple(y), m)


def build_c5_partition(
    g: Graph,
    c5: tuple[int, ...],
    config: ExtractionConfig | None = None,
    trace: Trace | None = None,
) -> MinorModel | C5Partition:
    """Public partition builder; returns a finished model if a side branch fires."""
    chi, _ = chromatic_number(g)
    ctx = _default_ctx(config, trace)
    out = _build_partition(g, tuple(c5), chi, ctx, 0)
    if isinstance(out, Completed):
        return _finish(g, chi, out.model, ctx, 0)
    return out


# ---------------------------------------------------------------------------
# final (2m+2)-set construction
# ---------------------------------------------------------------------------

def _unique_nonneighbor(g: Graph, v: int, klass: int, depth: int) -> int:
    non = klass & ~g.adj[v]
    _require(
        non.bit_count() == 1,
        "matching relabeling needs exactly one non-neighbor per consecutive class",
        {"vertex": v, "class": set_to_list(klass)},
        depth,
    )
    return (non & -non).bit_length() - 1


def _final_construction(
    g: Graph, part: C5Partition, chi: int, ctx: _Ctx, depth: int
) -> MinorModel:
    c = part.cycle
    y = part.classes
    m = part.m
    full = g.full_mask

    y2 = set_to_list(y[1])
    y1 = [_unique_nonneighbor(g, v, y[0], depth) for v in y2]
    y3 = [_unique_nonneighbor(g, v, y[2], depth) for v in y2]
    y4 = set_to_list(y[3])
    _require(
        mask_of(y1) == y[0] and mask_of(y3) == y[2],
        "the non-adjacency matchings must be perfect",
        {"m": m},
        depth,
    )

    p, r = divmod(m, 2)
    d: list[int] = []
    if r == 0:
        d.append(mask_of((c[1], c[2], c[3])))
    else:
        d.append(mask_of((c[1], c[2], y4[m - 1])))
        d.append(mask_of((c[3], y2[m - 1])))
    for jj in range(p):
        d.append(mask_of((y2[2 * jj], y2[2 * jj + 1])))
    for jj in range(p):
        d.append(mask_of((y4[2 * jj], y4[2 * jj + 1])))
    for ell in range(m):
        d.append(mask_of((y1[ell], y3[ell])))
    d.append(1 << c[0])

    rmask = mask_of(c[:4]) | y[0] | y[1] | y[2] | y[3]
    union = 0
    for t in d:
        _require(union & t == 0, "prefix sets must be disjoint", {"m": m}, depth)
        union |= t
    _require(
        len(d) == 2 * m + 2 and union == rmask,
        "the prefix must cover the four cycle vertices and four classes exactly",
        {"m": m, "count": len(d)},
        depth,
    )
    report = verify_dominating_model(g, tuple(d))
    _require(
        report.valid,
        "the (2m+2)-set prefix must itself be a dominating model",
        {"report": report.message},
        depth,
    )

    keep = (1 << c[4]) | y[4] | part.complete_side
    _require(
        keep == full & ~(rmask | part.independent),
        "removed and kept sets must partition the graph",
        {},
        depth,
    )
    for v in bits(keep):
        for t in d:
            _require(
                g.adj[v] & t != 0,
                "every kept vertex must have a neighbor in each prefix set",
                {"vertex": v, "set": set_to_list(t)},
                depth,
            )
    residual = _recurse(g, keep, ctx, depth)
    model = lift_model(g, tuple(d), residual, max(0, chi - (2 * m + 2)))
    ctx.record(
        depth,
        "final_construction",
        m=m,
        parity="even" if r == 0 else "odd",
        c5=list(c),
        prefix=[set_to_list(t) for t in d],
        removed=set_to_list(rmask | part.independent),
    )
    return model


def final_construction(
    g: Graph,
    part: C5Partition,
    config: ExtractionConfig | None = None,
    trace: Trace | None = None,
) -> MinorModel:
    if part.m < 2:
        raise ValueError("final_construction requires class size m >= 2")
    chi, _ = chromatic_number(g)
    ctx = _default_ctx(config, trace)
    return _finish(g, chi, _final_construction(g, part, chi, ctx, 0), ctx, 0)


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def _scan_c5s(
    g: Graph, cap: int, depth: int
) -> tuple[tuple[int, ...] | None, tuple[tuple[int, ...], int] | None]:
    """First induced C5 plus the globally minimal low-degree (cycle, vertex) pair."""
    first = None
    best = None
    full = g.full_mask
    count = 0
    for tup in induced_c5_iter(g):
        count += 1
        if count > cap:
            raise EnumerationCapError(
                f"more than {cap} induced C5 embeddings; raise ExtractionConfig.c5_cap"
            )
        if first is None:
            first = tup
        cmask = mask_of(tup)
        for x in bits(full & ~cmask):
            dcount = (g.adj[x] & cmask).bit_count()
            if 1 <= dcount <= 3:
                key = (dcount, tup, x)
                if best is None or key < best:
                    best = key
    if best is None:
        return first, None
    return first, (best[1], best[2])


def _extract(g: Graph, ctx: _Ctx, depth: int) -> tuple[int, MinorModel]:
    n = g.n
    if n == 0:
        ctx.record(depth, "empty")
        return 0, ()
    chi, _ = chromatic_number(g)
    omega, cmask = clique_number(g)

    if omega >= chi:
        if find_induced_cycle(g, 4) is None and not _has_c5(g):
            model = _split_model(g, chi, ctx, depth)
        else:
            model = tuple(1 << v for v in set_to_list(cmask)[:chi])
            ctx.record(depth, "clique", clique=set_to_list(cmask)[:chi])
        return chi, _finish(g, chi, model, ctx, depth)

    first_c5, low = _scan_c5s(g, ctx.config.c5_cap, depth)

    if first_c5 is None:
        b = find_banner(g)
        if b is not None:
            out = _banner_step(g, b.vertices, chi, ctx, depth)
            if isinstance(out, Structure):
                raise InternalContradictionError(
                    "the banner step cannot produce an apex pair in a C5-free host",
                    {"banner": list(b.vertices)},
                    depth,
                )
            return chi, _finish(g, chi, out.model, ctx, depth)
        c4 = find_induced_cycle(g, 4)
        if c4 is not None:
            return chi, _finish(g, chi, _c4_reduction(g, c4.vertices, chi, ctx, depth), ctx, depth)
        # {2K2, C4, C5}-free, hence split; omega >= chi should have caught it
        return chi, _finish(g, chi, _split_model(g, chi, ctx, depth), ctx, depth)

    if low is not None:
        return chi, _finish(g, chi, _low_degree_c5(g, low[0], low[1], chi, ctx, depth), ctx, depth)

    out = _build_partition(g, first_c5, chi, ctx, depth)
    if isinstance(out, Completed):
        return chi, _finish(g, chi, out.model, ctx, depth)
    return chi, _finish(g, chi, _final_construction(g, out, chi, ctx, depth), ctx, depth)


def _has_c5(g: Graph) -> bool:
    return next(induced_c5_iter(g), None) is not None


def extract_dominating(
    g: Graph,
    config: ExtractionConfig | None = None,
    trace: Trace | None = None,
) -> MinorModel:
    """A verified dominating minor model with exactly chi(g) branch sets.

    Raises :class:`Not2K2FreeError` (with witness) if the input is not
    2K2-free, and :class:`InternalContradictionError` if any structural fact
    the analysis relies on fails, rather than ever returning an unverified
    model.
    """
    w = find_2k2(g)
    if w is not None:
        raise Not2K2FreeError(w.vertices)
    ctx = _default_ctx(config, trace)
    chi, model = _extract(g, ctx, 0)
    report = verify_dominating_model(g, model)
    if len(model) != chi or not report.valid:
        raise InternalContradictionError(
            "final model failed verification",
            {"chi": chi, "sets": len(model), "report": report.message},
            0,
        )
    return model


# ---------------------------------------------------------------------------
# ordinary (non-dominating) extraction via induced-P4 removal
# ---------------------------------------------------------------------------

def _extract_ordinary(g: Graph, depth: int) -> tuple[int, MinorModel]:
    if g.n == 0:
        return 0, ()
    chi, _ = chromatic_number(g)
    p4 = find_induced(g, path_pattern(4))
    if p4 is None:
        # P4-free graphs are perfect: maximum clique as singletons
        omega, cmask = clique_number(g)
        _require(
            omega == chi,
            "P4-free graphs are perfect, so the clique matches the chromatic number",
            {"omega": omega, "chi": chi},
            depth,
        )
        return chi, tuple(1 << v for v in set_to_list(cmask)[:chi])
    v1, v2, v3, v4 = p4.vertices
    full = g.full_mask
    pmask = mask_of(p4.vertices)
    a = full & ~pmask & ~g.adj[v1] & ~g.adj[v2]
    b = full & ~pmask & ~a & ~g.adj[v3] & ~g.adj[v4]
    keep = full & ~(pmask | a | b)
    sub, verts = induced_subgraph(g, keep)
    _, residual = _extract_ordinary(sub, depth + 1)
    residual = tuple(relabel_mask(t, verts) for t in residual)
    model = lift_model(g, (mask_of((v1, v2)), mask_of((v3, v4))), residual, max(0, chi - 2))
    if len(model) > chi:
        model = model[len(model) - chi:]
    return chi, model


def extract_ordinary_minor(g: Graph) -> MinorModel:
    """An ordinary clique-minor model with chi(g) sets, for any 2K2-free graph.

    Repeatedly removes an induced P4 together with everything anticomplete to
    one of its end pairs (a 2-chromatic chunk), prepending the two pairs; the
    P4-free base case is a maximum clique.  The result passes the ordinary
    verifier but generally not the dominating one.
    """
    w = find_2k2(g)
    if w is not None:
        raise Not2K2FreeError(w.vertices)
    chi, model = _extract_ordinary(g, 0)
    report = verify_ordinary_model(g, model)
    if len(model) != chi or not report.valid:
        raise InternalContradictionError(
            "ordinary model failed verification",
            {"chi": chi, "sets": len(model), "report": report.message},
            0,
        )
    return model
