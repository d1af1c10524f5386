"""Exact invariants and minor search: the ground-truth oracles.

Provides the dominating / ordinary minor-model verifiers, exact chromatic,
clique and independence numbers, connected-set enumeration, and exhaustive
searches for dominating and ordinary K_t minors.  Everything here is exact;
the exponential searches carry an explicit vertex cap that errs loudly.

A minor model is an ordered tuple of vertex-set bitmasks (T_1, ..., T_t).
A *dominating* model requires, for i < j, every vertex of T_j to have a
neighbor in T_i; the *ordinary* model only requires some vertex of T_j to.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, bits, is_connected_set, mask_of, neighbors_of_set, set_to_list

DEFAULT_SEARCH_CAP = 16

MinorModel = tuple[int, ...]


class CapacityError(Exception):
    """Exact search requested beyond the configured vertex cap."""


class SearchDeadlineExceeded(Exception):
    """Cooperative per-call time budget ran out."""


class Deadline:
    """Cheap cooperative deadline checked every few thousand search steps."""

    __slots__ = ("at", "counter")

    def __init__(self, seconds: float | None):
        self.at = None if seconds is None else time.monotonic() + seconds
        self.counter = 0

    def tick(self) -> None:
        if self.at is None:
            return
        self.counter += 1
        if self.counter & 0xFF == 0 and time.monotonic() > self.at:
            raise SearchDeadlineExceeded


_NO_DEADLINE = Deadline(None)


# ---------------------------------------------------------------------------
# model verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModelReport:
    """Verdict of a model check; indices are 1-based (T_1, ..., T_t)."""

    valid: bool
    condition: str | None = None
    set_index: int | None = None
    other_index: int | None = None
    witness: int | None = None
    message: str = "valid"

    def __bool__(self) -> bool:
        return self.valid


def _structural_report(g: Graph, model: MinorModel) -> ModelReport | None:
    full = g.full_mask
    seen = 0
    for idx, t in enumerate(model, start=1):
        if t == 0:
            return ModelReport(False, "nonempty", idx, None, None, f"T_{idx} is empty")
        if t & ~full:
            v = next(bits(t & ~full))
            return ModelReport(False, "range", idx, None, v, f"T_{idx} contains out-of-range vertex {v}")
        if t & seen:
            v = next(bits(t & seen))
            j = next(i for i, s in enumerate(model[: idx - 1], start=1) if s >> v & 1)
            return ModelReport(False, "disjoint", j, idx, v, f"vertex {v} lies in both T_{j} and T_{idx}")
        seen |= t
    for idx, t in enumerate(model, start=1):
        if not is_connected_set(g, t):
            return ModelReport(False, "connected", idx, None, None, f"T_{idx} does not induce a connected subgraph")
    return None


def verify_dominating_model(g: Graph, model: MinorModel) -> ModelReport:
    """Check the dominating-model conditions, reporting the first violation."""
    bad = _structural_report(g, model)
    if bad is not None:
        return bad
    for j in range(1, len(model)):
        for i in range(j):
            ti = model[i]
            for v in bits(model[j]):
                if g.adj[v] & ti == 0:
                    return ModelReport(
                        False, "domination", i + 1, j + 1, v,
                        f"vertex {v} in T_{j + 1} has no neighbor in T_{i + 1}",
                    )
    return ModelReport(True)


def verify_ordinary_model(g: Graph, model: MinorModel) -> ModelReport:
    """Check the ordinary (some-vertex) minor-model conditions."""
    bad = _structural_report(g, model)
    if bad is not None:
        return bad
    for j in range(1, len(model)):
        nj = neighbors_of_set(g, model[j])
        for i in range(j):
            if nj & model[i] == 0:
                return ModelReport(
                    False, "linkage", i + 1, j + 1, None,
                    f"no edge between T_{i + 1} and T_{j + 1}",
                )
    return ModelReport(True)


def model_to_lists(model: MinorModel) -> list[list[int]]:
    return [set_to_list(t) for t in model]


def model_from_lists(lists: list[list[int]]) -> MinorModel:
    return tuple(mask_of(part) for part in lists)


# ---------------------------------------------------------------------------
# clique / independence / chromatic numbers
# ---------------------------------------------------------------------------

def clique_number(g: Graph) -> tuple[int, int]:
    """Exact maximum clique as (omega, vertex mask), deterministic witness."""
    if g.n == 0:
        return 0, 0
    adj = g.adj
    best_size = 0
    best_mask = 0

    def greedy_bound(p: int) -> int:
        # greedy coloring of the candidate set; class count bounds the clique
        classes = 0
        rest = p
        while rest:
            classes += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~adj[v]
                rest &= ~(1 << v)
        return classes

    def expand(r_mask: int, r_size: int, p: int) -> None:
        nonlocal best_size, best_mask
        if p == 0:
            if r_size > best_size:
                best_size, best_mask = r_size, r_mask
            return
        if r_size + greedy_bound(p) <= best_size:
            return
        while p:
            if r_size + p.bit_count() <= best_size:
                return
            v = (p & -p).bit_length() - 1
            b = 1 << v
            expand(r_mask | b, r_size + 1, p & adj[v])
            p &= ~b

    expand(0, 0, g.full_mask)
    return best_size, best_mask


def independence_number(g: Graph) -> tuple[int, int]:
    """Exact independence number via the complement's clique number."""
    from .graphs import complement

    return clique_number(complement(g))


def _dsatur_greedy(g: Graph) -> tuple[int, list[int]]:
    n = g.n
    colors = [-1] * n
    forbidden = [0] * n  # bitmask of colors used by neighbors
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (forbidden[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        while forbidden[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in bits(g.adj[v]):
            if colors[u] == -1:
                forbidden[u] |= 1 << c
    return (max(colors) + 1 if n else 0), colors


def _k_colorable(g: Graph, k: int, deadline: Deadline) -> list[int] | None:
    """DSATUR-ordered backtracking k-colorability with first-new-color symmetry break."""
    n = g.n
    colors = [-1] * n
    forbidden = [0] * n
    kmask = (1 << k) - 1

    def rec(colored: int, used: int) -> bool:
        deadline.tick()
        if colored == n:
            return True
        best_v = -1
        best_key = (-1, -1)
        for u in range(n):
            if colors[u] == -1:
                sat = (forbidden[u] & kmask).bit_count()
                if sat == k:
                    return False
                key = (sat, g.degree(u))
                if key > best_key:
                    best_key, best_v = key, u
        v = best_v
        tryable = ~forbidden[v] & kmask
        # allow at most one brand-new color index
        cap_mask = (1 << min(k, used + 1)) - 1
        tryable &= cap_mask
        for c in bits(tryable):
            colors[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if colors[u] == -1 and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
            if rec(colored + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                forbidden[u] &= ~(1 << c)
        return False

    if rec(0, 0):
        return colors
    return None


def chromatic_number(g: Graph, deadline_s: float | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a proper witness coloring.

    Sequential k-colorability from a clique lower bound up to the DSATUR
    greedy upper bound, decomposed over connected components.
    """
    from .graphs import connected_components, induced_subgraph

    if g.n == 0:
        return 0, ()
    deadline = Deadline(deadline_s)
    colors = [0] * g.n
    k = 0
    for comp in connected_components(g):
        sub, verts = induced_subgraph(g, comp)
        ub, greedy = _dsatur_greedy(sub)
        lb = _greedy_clique_size(sub)
        sub_colors = greedy
        sub_k = ub
        for kk in range(lb, ub):
            attempt = _k_colorable(sub, kk, deadline)
            if attempt is not None:
                sub_colors, sub_k = attempt, kk
                break
        for i, v in enumerate(verts):
            colors[v] = sub_colors[i]
        k = max(k, sub_k)
    return k, tuple(colors)


def _greedy_clique_size(g: Graph) -> int:
    if g.n == 0:
        return 0
    best = 1
    for start in range(g.n):
        size = 1
        cand = g.adj[start]
        while cand:
            v = max(bits(cand), key=lambda u: (g.adj[u] & cand).bit_count())
            size += 1
            cand &= g.adj[v]
        best = max(best, size)
    return best


def is_proper_coloring(g: Graph, colors: tuple[int, ...], k: int) -> bool:
    if len(colors) != g.n:
        return False
    if any(not 0 <= c < k for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


# ---------------------------------------------------------------------------
# connected-set enumeration
# ---------------------------------------------------------------------------

def _connected_sets_of_size(g: Graph, within: int, size: int) -> Iterator[int]:
    """All connected subsets of `within` with exactly `size` vertices.

    Min-rooted growth with a declined-vertex exclusion mask; for a fixed size
    the emission order is lexicographic on the sorted vertex tuple.
    """
    if size <= 0:
        return
    adj = g.adj

    def grow(allowed: int, s_mask: int, count: int, frontier: int, banned: int) -> Iterator[int]:
        if count == size:
            yield s_mask
            return
        fr = frontier
        while fr:
            low = fr & -fr
            fr &= ~low
            v = low.bit_length() - 1
            new_frontier = (fr | (adj[v] & allowed)) & ~s_mask & ~low & ~banned
            yield from grow(allowed, s_mask | low, count + 1, new_frontier, banned)
            banned |= low

    for root in bits(within):
        later = within & ~((1 << (root + 1)) - 1)
        yield from grow(later, 1 << root, 1, g.adj[root] & later, 0)


def enumerate_connected_sets(g: Graph, within: int | None = None, max_size: int | None = None) -> Iterator[int]:
    """Yield every non-empty connected subset of ``within`` exactly once.

    Order: by size ascending; within a size, min-rooted depth-first growth
    order with ascending extensions (deterministic for a fixed graph).
    """
    w = g.full_mask if within is None else within & g.full_mask
    limit = w.bit_count() if max_size is None else min(max_size, w.bit_count())
    for size in range(1, limit + 1):
        yield from _connected_sets_of_size(g, w, size)


# ---------------------------------------------------------------------------
# dominating / ordinary K_t minor search
# ---------------------------------------------------------------------------

def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapacityError(
            f"exact minor search on n={g.n} exceeds cap {cap}; raise the cap explicitly to proceed"
        )


def has_dominating_kt(
    g: Graph, t: int, cap: int = DEFAULT_SEARCH_CAP, deadline_s: float | None = None
) -> MinorModel | None:
    """A verified dominating K_t model, or ``None`` after exhaustive search.

    Depth-first over ordered set sequences: T_1 ranges over connected sets;
    candidates for every later set are restricted to vertices adjacent to all
    sets chosen so far, which makes the domination pruning monotone.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    _check_cap(g, cap)
    if t > g.n:
        return None
    omega, cmask = clique_number(g)
    if omega >= t:
        model = tuple(1 << v for v in set_to_list(cmask)[:t])
        return model
    deadline = Deadline(deadline_s)

    def rec(cand: int, chosen: list[int], remaining: int) -> MinorModel | None:
        deadline.tick()
        if remaining == 0:
            return tuple(chosen)
        avail = cand.bit_count()
        if avail < remaining:
            return None
        for s in enumerate_connected_sets(g, cand, avail - (remaining - 1)):
            nxt = (cand & ~s) & neighbors_of_set(g, s)
            if nxt.bit_count() >= remaining - 1:
                chosen.append(s)
                found = rec(nxt, chosen, remaining - 1)
                if found is not None:
                    return found
                chosen.pop()
        return None

    model = rec(g.full_mask, [], t)
    if model is not None:
        assert verify_dominating_model(g, model).valid
    return model


def has_kt_minor(
    g: Graph, t: int, cap: int = DEFAULT_SEARCH_CAP, deadline_s: float | None = None
) -> bool:
    """Exact ordinary K_t minor decision (small-scale exhaustive search)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    _check_cap(g, cap)
    if t > g.n:
        return False
    omega, _ = clique_number(g)
    if omega >= t:
        return True
    deadline = Deadline(deadline_s)
    # Ordinary-model validity is order-insensitive, so enumerate families with
    # strictly increasing set minima (each new set lives above the previous
    # set's least vertex).
    def rec(used: int, floor: int, nbr_masks: list[int], remaining: int) -> bool:
        deadline.tick()
        if remaining == 0:
            return True
        avail = g.full_mask & ~used & ~((1 << floor) - 1)
        if avail.bit_count() < remaining:
            return False
        for s in enumerate_connected_sets(g, avail, avail.bit_count() - (remaining - 1)):
            if any(s & nm == 0 for nm in nbr_masks):
                continue
            nbr_masks.append(neighbors_of_set(g, s))
            if rec(used | s, (s & -s).bit_length(), nbr_masks, remaining - 1):
                return True
            nbr_masks.pop()
        return False

    return rec(0, 0, [], t)


def dominating_hadwiger_number(
    g: Graph, cap: int = DEFAULT_SEARCH_CAP, deadline_s: float | None = None
) -> tuple[int, MinorModel]:
    """Largest t admitting a dominating K_t minor, probed upward from omega."""
    if g.n == 0:
        raise ValueError("dominating Hadwiger number of the empty graph is undefined")
    _check_cap(g, cap)
    deadline = Deadline(deadline_s)
    omega, cmask = clique_number(g)
    t = omega
    best: MinorModel = tuple(1 << v for v in set_to_list(cmask))
    while t < g.n:
        remaining = None if deadline.at is None else max(deadline.at - time.monotonic(), 0.001)
        nxt = has_dominating_kt(g, t + 1, cap=cap, deadline_s=remaining)
        if nxt is None:
            break
        t += 1
        best = nxt
    assert best is not None and verify_dominating_model(g, best).valid
    return t, best


def hadwiger_number(
    g: Graph, cap: int = DEFAULT_SEARCH_CAP, deadline_s: float | None = None
) -> int:
    """Largest t with an ordinary K_t minor (desk-scale, same search cap)."""
    if g.n == 0:
        raise ValueError("Hadwiger number of the empty graph is undefined")
    _check_cap(g, cap)
    deadline = Deadline(deadline_s)
    t, _ = clique_number(g)
    while t < g.n:
        remaining = None if deadline.at is None else max(deadline.at - time.monotonic(), 0.001)
        if not has_kt_minor(g, t + 1, cap=cap, deadline_s=remaining):
            break
        t += 1
    return t
