"""Exact maximum-clique engine and stable-set enumeration (bitmask B&B)."""

from __future__ import annotations

from .graphs import Graph, bits_to_tuple


def _max_clique_size(rows: tuple[int, ...], cand: int, size: int, best: int) -> int:
    """Branch and bound on the candidate mask; returns the best size found."""
    while cand:
        if size + cand.bit_count() <= best:
            return best
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        found = _max_clique_size(rows, cand & rows[v], size + 1, best)
        if found > best:
            best = found
        if size + 1 > best:
            best = size + 1
    return best


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with the lexicographically least maximum clique.

    The witness is grown greedily: at each step take the smallest vertex
    that still extends to a maximum clique (feasibility re-checked by the
    exact bound), which yields the lex-least witness overall.
    """
    n = g.n
    if n == 0:
        return 0, ()
    rows = g.rows()
    full = (1 << n) - 1
    omega = _max_clique_size(rows, full, 0, 0)
    chosen: list[int] = []
    cand = full
    need = omega
    while need:
        for v in bits_to_tuple(cand):
            rest = cand & rows[v]
            if 1 + _max_clique_size(rows, rest, 0, need - 2 if need >= 2 else 0) >= need:
                chosen.append(v)
                cand = rest
                need -= 1
                break
        else:  # pragma: no cover - unreachable if omega is correct
            raise RuntimeError("maximum clique reconstruction failed")
    return omega, tuple(chosen)


def max_clique_size_within(g: Graph, vertices_mask: int) -> int:
    """Clique number of the subgraph induced on a vertex mask."""
    rows = tuple(r & vertices_mask for r in g.rows())
    return _max_clique_size(rows, vertices_mask, 0, 0)


def maximal_stable_sets(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All maximal stable sets, sorted; Bron-Kerbosch on the complement."""
    comp = g.complement()
    rows = comp.rows()
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(bits_to_tuple(r))
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best_cover = -1
        for u in bits_to_tuple(pivot_pool):
            cover = (p & rows[u]).bit_count()
            if cover > best_cover:
                best_cover = cover
                pivot = u
        for v in bits_to_tuple(p & ~rows[pivot]):
            vb = 1 << v
            expand(r | vb, p & rows[v], x & rows[v])
            p &= ~vb
            x |= vb

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return tuple(sorted(out))


def is_triangle_free(g: Graph) -> bool:
    rows = g.rows()
    for u in range(g.n):
        for v in bits_to_tuple(rows[u] >> (u + 1) << (u + 1)):
            if rows[u] & rows[v]:
                return False
    return True
