"""Recognition of split graphs, complete split graphs, and Petersen blowups.

Each recognizer returns a constructive partition, or None when the input
is not in the class; returned partitions always validate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cliques import clique_number
from .errors import GraphInputError
from .graphs import (
    Graph,
    bits_to_tuple,
    is_clique,
    is_stable,
    mask_of,
)
from .patterns import catalog_lookup, find_induced_embedding


@dataclass(frozen=True)
class SplitPartition:
    """Partition of a vertex set into a clique and a stable set."""

    clique: tuple[int, ...]
    stable: tuple[int, ...]


def validate_split_partition(g: Graph, part: SplitPartition, complete: bool = False) -> bool:
    """True iff the partition covers V(g) exactly and each side validates.

    With ``complete`` the stable side must also be complete to the clique.
    """
    cm = mask_of(part.clique)
    sm = mask_of(part.stable)
    if cm & sm or (cm | sm) != (1 << g.n) - 1:
        return False
    if len(part.clique) + len(part.stable) != g.n:
        return False
    if not is_clique(g, part.clique) or not is_stable(g, part.stable):
        return False
    if complete:
        for v in part.stable:
            if g.adjacency_bits(v) & cm != cm:
                return False
    return True


def split_partition(g: Graph) -> SplitPartition | None:
    """Constructive split-graph recognition.

    Takes a maximum clique, puts the rest in the stable side, and repairs
    the one ambiguous vertex if needed; the candidate partition is verified
    before being returned, so the result is None exactly when ``g`` is not
    a split graph.
    """
    n = g.n
    if n == 0:
        return SplitPartition((), ())
    _, kli = clique_number(g)
    km = mask_of(kli)
    rest = ((1 << n) - 1) & ~km
    inner_edges = [
        (u, v)
        for u in bits_to_tuple(rest)
        for v in bits_to_tuple(g.adjacency_bits(u) & rest)
        if u < v
    ]
    if not inner_edges:
        return SplitPartition(kli, bits_to_tuple(rest))
    # In a split graph every edge left outside a maximum clique is incident
    # to a single displaced clique vertex; try each vertex covering all of
    # them, swapped with a non-neighbor from the clique.
    covering = set(inner_edges[0])
    for u, v in inner_edges[1:]:
        covering &= {u, v}
    for c in sorted(covering):
        for s in kli:
            if g.has_edge(s, c):
                continue
            new_clique = tuple(sorted((set(kli) - {s}) | {c}))
            new_stable = tuple(sorted((set(bits_to_tuple(rest)) - {c}) | {s}))
            cand = SplitPartition(new_clique, new_stable)
            if validate_split_partition(g, cand):
                return cand
    return None


def complete_split_partition(g: Graph) -> SplitPartition | None:
    """Complete-split recognition: clique = universal vertices, rest stable.

    In a complete split graph every clique vertex is universal, so the
    partition (universal vertices, rest) is valid exactly when some valid
    partition exists.
    """
    n = g.n
    if n == 0:
        return SplitPartition((), ())
    full = (1 << n) - 1
    universal = tuple(
        v for v in range(n) if g.adjacency_bits(v) == full & ~(1 << v)
    )
    rest = tuple(v for v in range(n) if v not in set(universal))
    cand = SplitPartition(universal, rest)
    if validate_split_partition(g, cand, complete=True):
        return cand
    return None


@dataclass(frozen=True)
class BlowupPartition:
    """Assignment of host vertices to clique bags indexed by template vertices."""

    template: Graph
    bags: tuple[tuple[int, ...], ...]


def validate_blowup_partition(g: Graph, part: BlowupPartition) -> list[str]:
    """All violations of the blowup invariant (empty list means valid)."""
    t = part.template
    problems: list[str] = []
    if len(part.bags) != t.n:
        return [f"expected {t.n} bags, got {len(part.bags)}"]
    seen = 0
    for i, bag in enumerate(part.bags):
        bm = mask_of(bag)
        if bm & seen:
            problems.append(f"bag {i} overlaps earlier bags")
        seen |= bm
        if not is_clique(g, bag):
            problems.append(f"bag {i} is not a clique")
    if seen != (1 << g.n) - 1:
        problems.append("bags do not cover every vertex")
    for i in range(t.n):
        for j in range(i + 1, t.n):
            want = t.has_edge(i, j)
            jm = mask_of(part.bags[j])
            for u in part.bags[i]:
                have = g.adjacency_bits(u) & jm
                if want and have != jm:
                    problems.append(f"bag {i} not complete to bag {j}")
                    break
                if not want and have:
                    problems.append(f"bag {i} not anticomplete to bag {j}")
                    break
    return problems


def build_blowup(template: Graph, weights: Sequence[int]) -> tuple[Graph, BlowupPartition]:
    """The blowup of ``template`` with the given bag sizes, plus its partition."""
    if len(weights) != template.n:
        raise GraphInputError(
            f"need {template.n} weights, got {len(weights)}"
        )
    if any(w < 0 for w in weights):
        raise GraphInputError("blowup weights must be non-negative")
    offsets = []
    total = 0
    for w in weights:
        offsets.append(total)
        total += w
    bags = tuple(
        tuple(range(offsets[i], offsets[i] + weights[i])) for i in range(template.n)
    )
    edges = []
    for i in range(template.n):
        bag = bags[i]
        for a in range(len(bag)):
            for b in range(a + 1, len(bag)):
                edges.append((bag[a], bag[b]))
        for j in range(i + 1, template.n):
            if template.has_edge(i, j):
                edges.extend((u, v) for u in bag for v in bags[j])
    return Graph(total, edges), BlowupPartition(template, bags)


def petersen_blowup_partition(g: Graph) -> BlowupPartition | None:
    """Recognize ``g`` as a blowup of the Petersen graph.

    Vertices are grouped by equal closed neighborhoods (the canonical
    quotient: two vertices share a bag in any blowup exactly when they are
    adjacent twins), and the quotient must embed as an induced subgraph of
    the Petersen template; the embedding is pulled back to bags.
    """
    pet = catalog_lookup("petersen")
    if g.n == 0:
        return BlowupPartition(pet, ((),) * 10)
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        closed = g.adjacency_bits(v) | (1 << v)
        classes.setdefault(closed, []).append(v)
    groups = sorted(classes.values(), key=lambda grp: grp[0])
    if len(groups) > pet.n:
        return None
    reps = [grp[0] for grp in groups]
    quotient = Graph(
        len(groups),
        [
            (a, b)
            for a in range(len(groups))
            for b in range(a + 1, len(groups))
            if g.has_edge(reps[a], reps[b])
        ],
    )
    emb = find_induced_embedding(pet, quotient)
    if emb is None:
        return None
    bags: list[tuple[int, ...]] = [()] * pet.n
    for cls_idx, target in enumerate(emb.mapping):
        bags[target] = tuple(groups[cls_idx])
    part = BlowupPartition(pet, tuple(bags))
    problems = validate_blowup_partition(g, part)
    if problems:  # pragma: no cover - impossible for a closed-neighborhood quotient
        raise RuntimeError(f"internal: quotient blowup failed validation: {problems}")
    return part
