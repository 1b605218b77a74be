"""Search for induced connected split (or complete split) dominating subgraphs.

Two routes: an exhaustive subset search that doubles as a proof of
non-existence, and a heuristic reducer that follows the exchange argument
(eliminate worst pattern, else adjoin a private neighbor, then prune to a
minimal connected dominating set).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError, GraphInputError, PreconditionError
from .graphs import (
    Graph,
    bits_to_tuple,
    check_vertex_set,
    connectivity,
    induced_subgraph,
    mask_is_connected,
    mask_of,
    to_graph6,
)
from .patterns import (
    catalog_lookup,
    count_induced_copies,
    family_membership,
    find_induced_embedding,
)
from .recognition import (
    SplitPartition,
    complete_split_partition,
    split_partition,
    validate_split_partition,
)

logger = logging.getLogger(__name__)

KINDS = ("split", "complete-split")

_EXHAUSTIVE_VERTEX_CAP = 16
_EXHAUSTIVE_SUBSET_BUDGET = 1 << 21

# elimination order of the exchange argument, per kind
_REDUCTION_PATTERNS = {
    "split": ("c4", "c5", "h1", "h2"),
    "complete-split": ("c4", "paw"),
}

# the family whose freeness guarantees a certificate exists, per kind
_GUARANTEE_FAMILY = {"split": "C", "complete-split": "D"}


@dataclass(frozen=True)
class DominationCertificate:
    """A dominating vertex set together with its structural proof parts."""

    vertices: tuple[int, ...]
    kind: str
    partition: SplitPartition
    connected: bool


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise GraphInputError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


def dominating_check(g: Graph, vertices) -> bool:
    """True iff every vertex outside the set has a neighbor inside it."""
    sel = check_vertex_set(g, vertices)
    m = mask_of(sel)
    covered = m
    for v in sel:
        covered |= g.adjacency_bits(v)
    return covered == (1 << g.n) - 1


def _partition_for(kind: str, sub: Graph) -> SplitPartition | None:
    if kind == "split":
        return split_partition(sub)
    return complete_split_partition(sub)


def _certificate(g: Graph, kind: str, vertices: tuple[int, ...]) -> DominationCertificate | None:
    sub, mapping = induced_subgraph(g, vertices)
    part = _partition_for(kind, sub)
    if part is None:
        return None
    lifted = SplitPartition(
        tuple(mapping[v] for v in part.clique),
        tuple(mapping[v] for v in part.stable),
    )
    return DominationCertificate(vertices, kind, lifted, True)


def validate_domination_certificate(g: Graph, cert: DominationCertificate) -> bool:
    """Independent re-check of every certificate invariant."""
    try:
        sel = check_vertex_set(g, cert.vertices)
    except GraphInputError:
        return False
    if not dominating_check(g, sel):
        return False
    if not mask_is_connected(g.rows(), mask_of(sel)):
        return False
    if set(cert.partition.clique) | set(cert.partition.stable) != set(sel):
        return False
    sub, mapping = induced_subgraph(g, sel)
    back = {old: new for new, old in enumerate(mapping)}
    local = SplitPartition(
        tuple(sorted(back[v] for v in cert.partition.clique)),
        tuple(sorted(back[v] for v in cert.partition.stable)),
    )
    return validate_split_partition(sub, local, complete=(cert.kind == "complete-split"))


def find_dominating_split(g: Graph, kind: str = "split") -> DominationCertificate | None:
    """Minimum-cardinality certificate by exhaustive subset search.

    Subsets are scanned in increasing size, lexicographically within each
    size, so the first hit is the minimum-size, lexicographically least
    certificate.  A None result is a proof of non-existence (every subset
    was examined).
    """
    _check_kind(kind)
    if not connectivity(g).is_connected:
        raise PreconditionError("domination search needs a connected graph")
    if g.n > _EXHAUSTIVE_VERTEX_CAP:
        raise BudgetExceededError(
            f"exhaustive domination search caps at {_EXHAUSTIVE_VERTEX_CAP} vertices, got {g.n}"
        )
    rows = g.rows()
    full = (1 << g.n) - 1
    examined = 0
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            examined += 1
            if examined > _EXHAUSTIVE_SUBSET_BUDGET:
                raise BudgetExceededError("subset budget exhausted")
            m = mask_of(combo)
            covered = m
            for v in combo:
                covered |= rows[v]
            if covered != full:
                continue
            if not mask_is_connected(rows, m):
                continue
            cert = _certificate(g, kind, combo)
            if cert is not None:
                return cert
    return None


# -- proof-guided reduction --------------------------------------------------


def _first_pattern_copy(sub: Graph, kind: str) -> tuple[str, tuple[int, ...]] | None:
    for pname in _REDUCTION_PATTERNS[kind]:
        emb = find_induced_embedding(sub, catalog_lookup(pname), pname)
        if emb is not None:
            return pname, emb.mapping
    return None


def _potential(g: Graph, h_vertices: tuple[int, ...], kind: str) -> tuple[int, ...]:
    """Lexicographic descent potential: pattern counts, then leaf bonus."""
    sub, mapping = induced_subgraph(g, h_vertices)
    counts = [count_induced_copies(sub, catalog_lookup(p)) for p in _REDUCTION_PATTERNS[kind]]
    copy = _first_pattern_copy(sub, kind)
    leaves = 0
    if copy is not None:
        image = set(copy[1])
        for v in range(sub.n):
            if sub.degree(v) == 1 and sub.neighbors(v)[0] in image:
                leaves += 1
    counts.append(-leaves)
    return tuple(counts)


def _private_neighbors(g: Graph, h_mask: int, x: int) -> tuple[int, ...]:
    out = []
    xb = 1 << x
    for y in range(g.n):
        if h_mask >> y & 1:
            continue
        if g.adjacency_bits(y) & h_mask == xb:
            out.append(y)
    return tuple(out)


def _candidate_moves(g: Graph, h: tuple[int, ...], kind: str) -> list[tuple[int, ...]]:
    """Next H candidates from the current worst pattern copy."""
    sub, mapping = induced_subgraph(g, h)
    copy = _first_pattern_copy(sub, kind)
    if copy is None:
        return []
    image = sorted(mapping[v] for v in copy[1])
    h_mask = mask_of(h)
    moves: list[tuple[int, ...]] = []
    rows = g.rows()
    for x in image:
        if len(h) > 1 and mask_is_connected(rows, h_mask & ~(1 << x)):
            if not _private_neighbors(g, h_mask, x):
                moves.append(tuple(v for v in h if v != x))
    for x in image:
        priv = _private_neighbors(g, h_mask, x)
        if priv:
            moves.append(tuple(sorted(h + (priv[0],))))
    return moves


def proof_guided_reduce(g: Graph, kind: str = "split") -> DominationCertificate | None:
    """Heuristic realization of the exchange argument.

    Starting from all of V, repeatedly remove a deletable vertex of the
    current worst pattern copy (or adjoin a blocked vertex's private
    neighbor), descending on the pattern-count potential with one uphill
    move allowed; then prune to a deletion-minimal connected dominating
    set and test the partition kind.  A stall on an input whose family
    guarantee holds is logged as a counterexample candidate.
    """
    _check_kind(kind)
    if not connectivity(g).is_connected:
        raise PreconditionError("domination reduction needs a connected graph")
    h = tuple(range(g.n))
    visited = {h}
    potential = _potential(g, h, kind)
    backtracks = 1
    stalled = False
    for _ in range(8 * g.n + 16):
        scored = []
        for move in _candidate_moves(g, h, kind):
            if move in visited:
                continue
            scored.append((_potential(g, move, kind), move))
        if not scored:
            break
        scored.sort()
        best_pot, best_move = scored[0]
        if best_pot < potential:
            h, potential = best_move, best_pot
        elif backtracks:
            backtracks -= 1
            h, potential = best_move, best_pot
        else:
            stalled = True
            break
        visited.add(h)
    sub, _ = induced_subgraph(g, h)
    if _first_pattern_copy(sub, kind) is not None:
        stalled = True
    result = None
    if not stalled:
        h = _prune_minimal(g, h)
        result = _certificate(g, kind, h)
    if result is None:
        fam = _GUARANTEE_FAMILY[kind]
        if family_membership(g, fam).is_free:
            logger.warning(
                "counterexample candidate: reducer stalled on a %s-free graph %s (kind=%s)",
                fam,
                to_graph6(g),
                kind,
            )
    return result


def _prune_minimal(g: Graph, h: tuple[int, ...]) -> tuple[int, ...]:
    """Deletion-minimal connected dominating subset of ``h``."""
    rows = g.rows()
    current = list(h)
    changed = True
    while changed:
        changed = False
        for v in list(current):
            if len(current) == 1:
                break
            trial = [u for u in current if u != v]
            tm = mask_of(trial)
            if not mask_is_connected(rows, tm):
                continue
            covered = tm
            for u in trial:
                covered |= rows[u]
            if covered != (1 << g.n) - 1:
                continue
            current = trial
            changed = True
    return tuple(current)


def is_deletion_minimal(g: Graph, vertices: tuple[int, ...]) -> bool:
    """No single vertex can be dropped keeping the set connected dominating."""
    rows = g.rows()
    full = (1 << g.n) - 1
    for v in vertices:
        trial = [u for u in vertices if u != v]
        if not trial:
            continue
        tm = mask_of(trial)
        if not mask_is_connected(rows, tm):
            continue
        covered = tm
        for u in trial:
            covered |= rows[u]
        if covered == full:
            return False
    return True
