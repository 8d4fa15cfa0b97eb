"""Deterministic generation of all non-isomorphic cacti on n vertices.

Every cactus with at least two vertices has a removable endblock (a pendant
edge, or a cycle whose vertices other than one cut vertex all have degree 2),
so attaching pendant edges and fresh cycles at every vertex of every smaller
cactus, with canonical-code deduplication, generates each isomorphism class
exactly once per size.  Output is sorted by canonical code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import (Graph, canonical_code, from_edges, is_cactus,
                    matching_number, pendant_count)

MAX_N = 10


@dataclass(frozen=True)
class CactusFilter:
    """Optional matching-number and pendant-count constraints."""
    matching: int | None = None
    pendants: int | None = None

    def validate(self, n: int) -> None:
        if self.matching is not None and not 1 <= self.matching <= n // 2:
            raise ValueError(f"matching filter {self.matching} out of range for n = {n}")
        if self.pendants is not None and not 0 <= self.pendants < n:
            raise ValueError(f"pendant filter {self.pendants} out of range for n = {n}")

    def admits(self, g: Graph) -> bool:
        if self.matching is not None and matching_number(g).size != self.matching:
            return False
        if self.pendants is not None and pendant_count(g) != self.pendants:
            return False
        return True


def _extensions(g: Graph, max_n: int):
    """All one-endblock extensions of g with order <= max_n."""
    n = g.order
    if n + 1 <= max_n:
        for v in range(n):
            yield from_edges(n + 1, list(g.edges) + [(v, n)])
    for c in range(3, max_n - n + 2):
        fresh = list(range(n, n + c - 1))
        for v in range(n):
            cyc = [v] + fresh
            extra = [(cyc[i], cyc[(i + 1) % c]) for i in range(c)]
            yield from_edges(n + c - 1, list(g.edges) + extra)


@lru_cache(maxsize=None)
def _all_cacti(n: int) -> tuple:
    """All non-isomorphic cacti on exactly n vertices, sorted by code."""
    if n < 1:
        return ()
    if n > MAX_N:
        raise ValueError(f"n = {n} exceeds the enumeration guard {MAX_N}")
    levels = {1: {canonical_code(from_edges(1, [])).code:
                  from_edges(1, [])}}
    for size in range(1, n):
        for g in levels.get(size, {}).values():
            for child in _extensions(g, n):
                bucket = levels.setdefault(child.order, {})
                code = canonical_code(child).code
                if code not in bucket:
                    bucket[code] = child
    bucket = levels.get(n, {})
    return tuple(bucket[c] for c in sorted(bucket))


def enumerate_cacti(n: int, filt: CactusFilter | None = None) -> tuple:
    """One representative per isomorphism class of cacti on n vertices meeting
    the filter, in ascending canonical-code order.

    An infeasible filter yields an empty sequence.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    filt = filt or CactusFilter()
    try:
        filt.validate(n)
    except ValueError:
        return ()
    return tuple(g for g in _all_cacti(n) if filt.admits(g))


def count_cacti(n: int, filt: CactusFilter | None = None) -> int:
    return len(enumerate_cacti(n, filt))


def oracle_cacti(n: int) -> tuple:
    """Exhaustive edge-subset oracle (test-grade, n <= 6): every labeled graph
    on n vertices, filtered for connected cactus, deduplicated by canonical
    code.  Independent of the endblock generator."""
    if n > 6:
        raise ValueError("oracle limited to n <= 6")
    pairs = [(i, j) for j in range(n) for i in range(j)]
    # a cactus on n vertices has between n-1 and 3(n-1)/2 edges
    lo, hi = n - 1, 3 * (n - 1) // 2
    out = {}
    for mask in range(1 << len(pairs)):
        if not lo <= mask.bit_count() <= hi:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = from_edges(n, edges)
        if is_cactus(g):
            out.setdefault(canonical_code(g).code, g)
    return tuple(out[c] for c in sorted(out))
