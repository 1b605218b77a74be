"""Structural decomposition engines.

Clique cutsets are found through complete minimal-separator enumeration,
bisimplicial vertices through bipartiteness of the complemented
neighborhood, and the hexagon/pentagon neighborhood partitions feed the
two top-level structure-case evaluators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .cliques import clique_number
from .errors import GraphInputError, PreconditionError, TheoremViolationError
from .graphs import (
    Graph,
    bits_to_tuple,
    component_masks,
    connectivity,
    is_clique,
    mask_of,
    to_graph6,
)
from .patterns import (
    Embedding,
    catalog_lookup,
    embedding_is_induced,
    family_membership,
    find_induced_embedding,
)
from .recognition import BlowupPartition, petersen_blowup_partition, validate_blowup_partition


# -- clique cutsets --------------------------------------------------------


def minimal_separators(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All minimal vertex separators, by close-separator seeding plus
    one-vertex expansion until closure (complete at these sizes)."""
    rows = g.rows()
    full = (1 << g.n) - 1
    found: set[int] = set()
    queue: list[int] = []

    def neighborhood(mask: int) -> int:
        nb = 0
        m = mask
        while m:
            low = m & -m
            nb |= rows[low.bit_length() - 1]
            m ^= low
        return nb & ~mask

    def offer(sep: int) -> None:
        if sep and sep not in found:
            found.add(sep)
            queue.append(sep)

    for v in range(g.n):
        closed = rows[v] | (1 << v)
        for comp in component_masks(rows, full & ~closed):
            offer(neighborhood(comp))
    while queue:
        sep = queue.pop()
        for x in bits_to_tuple(sep):
            region = full & ~(sep | rows[x] | (1 << x))
            for comp in component_masks(rows, region):
                offer(neighborhood(comp))
    return tuple(sorted(bits_to_tuple(s) for s in found))


def find_clique_cutset(g: Graph) -> tuple[int, ...] | None:
    """Smallest clique cutset (ties broken lexicographically), or None.

    An empty result is a guarantee: a clique cutset exists iff some minimal
    separator is a clique, and minimal-separator enumeration is complete.
    """
    if not connectivity(g).is_connected:
        raise PreconditionError("clique-cutset search needs a connected graph")
    candidates = [s for s in minimal_separators(g) if is_clique(g, s)]
    if not candidates:
        return None
    return min(candidates, key=lambda s: (len(s), s))


# -- bisimplicial vertices -------------------------------------------------


def find_bisimplicial_vertex(g: Graph) -> tuple[int, tuple[int, ...], tuple[int, ...]] | None:
    """First vertex whose neighborhood is the union of two cliques.

    A vertex qualifies iff the complement of its neighborhood subgraph is
    bipartite; the bipartition is returned as the two cliques.
    """
    for v in range(g.n):
        split = _two_clique_cover(g, g.neighbors(v))
        if split is not None:
            return (v, split[0], split[1])
    return None


def _two_clique_cover(g: Graph, vertices: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    color: dict[int, int] = {}
    for start in vertices:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in vertices:
                if w == u or g.has_edge(u, w):
                    continue  # complement edges connect non-adjacent pairs
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = tuple(v for v in vertices if color[v] == 0)
    side1 = tuple(v for v in vertices if color[v] == 1)
    return side0, side1


# -- hexagon machinery -----------------------------------------------------

_C6 = catalog_lookup("c6")


def _check_c6_embedding(g: Graph, c6: Embedding) -> None:
    if not embedding_is_induced(g, _C6, c6.mapping):
        raise GraphInputError("not a valid induced six-cycle embedding")


def max_blowup_c6(g: Graph, c6: Embedding) -> BlowupPartition:
    """Grow the six-cycle embedding into a maximal blowup of it.

    Vertices are tried in ascending order against bags 1..6 in order,
    iterating to a fixpoint; the caller can re-verify maximality with
    :func:`blowup_maximality_violations`.
    """
    _check_c6_embedding(g, c6)
    bags = [1 << c6.mapping[i] for i in range(6)]
    placed = mask_of(c6.mapping)
    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            ub = 1 << u
            if placed & ub:
                continue
            for i in range(6):
                if _fits_bag(g, bags, i, u):
                    bags[i] |= ub
                    placed |= ub
                    changed = True
                    break
    return BlowupPartition(_C6, tuple(bits_to_tuple(b) for b in bags))


def _fits_bag(g: Graph, bags: list[int], i: int, u: int) -> bool:
    row = g.adjacency_bits(u)
    want = bags[i] | bags[(i + 1) % 6] | bags[(i - 1) % 6]
    forbid = bags[(i + 2) % 6] | bags[(i + 3) % 6] | bags[(i + 4) % 6]
    return row & want == want and row & forbid == 0


def blowup_maximality_violations(g: Graph, part: BlowupPartition) -> list[str]:
    """Vertices outside the blowup that could still join some bag."""
    bags = [mask_of(b) for b in part.bags]
    placed = 0
    for b in bags:
        placed |= b
    problems = []
    for u in range(g.n):
        if placed >> u & 1:
            continue
        for i in range(len(bags)):
            if _fits_bag(g, bags, i, u):
                problems.append(f"vertex {u} fits bag {i}")
    return problems


def c6_bag_violations(g: Graph, bags: tuple[tuple[int, ...], ...]) -> list[str]:
    """Blowup-adjacency violations for six bags under the six-cycle template
    (coverage of all of V is not required here)."""
    problems = []
    for i, bag in enumerate(bags):
        if not is_clique(g, bag):
            problems.append(f"bag {i} is not a clique")
    for i in range(6):
        for j in range(i + 1, 6):
            want = _C6.has_edge(i, j)
            jm = mask_of(bags[j])
            for u in bags[i]:
                have = g.adjacency_bits(u) & jm
                if want and have != jm:
                    problems.append(f"bag {i} not complete to bag {j}")
                    break
                if not want and have:
                    problems.append(f"bag {i} not anticomplete to bag {j}")
                    break
    return problems


@dataclass(frozen=True)
class C6Partition:
    """Neighborhood classes around a maximal six-cycle blowup.

    ``z_classes`` has three entries; entry ``i`` covers template positions
    ``i`` and ``i+3``, which coincide by the symmetry of the hexagon.
    """

    bags: tuple[tuple[int, ...], ...]
    x_classes: tuple[tuple[int, ...], ...]
    y_classes: tuple[tuple[int, ...], ...]
    z_classes: tuple[tuple[int, ...], ...]
    rest: tuple[int, ...]


def c6_neighborhood_partition(g: Graph, blowup: BlowupPartition) -> C6Partition:
    """Classify every vertex outside the blowup by its bag-neighborhood shape.

    A vertex fitting no class signals a violated precondition (the host is
    not family-free, or the blowup is not maximal).
    """
    if len(blowup.bags) != 6:
        raise GraphInputError("need a six-bag blowup")
    bag_masks = [mask_of(b) for b in blowup.bags]
    a_mask = 0
    for m in bag_masks:
        a_mask |= m
    xs: list[list[int]] = [[] for _ in range(6)]
    ys: list[list[int]] = [[] for _ in range(6)]
    zs: list[list[int]] = [[] for _ in range(3)]
    rest: list[int] = []
    for v in range(g.n):
        if a_mask >> v & 1:
            continue
        row = g.adjacency_bits(v)
        touched = [i for i in range(6) if row & bag_masks[i]]
        if not touched:
            rest.append(v)
        elif len(touched) == 1:
            ys[touched[0]].append(v)
        elif len(touched) == 2:
            a, b = touched
            if b - a == 1:
                xs[a].append(v)
            elif (a, b) == (0, 5):
                xs[5].append(v)
            elif b - a == 3:
                zs[a].append(v)
            else:
                raise PreconditionError(
                    f"unclassifiable vertex {v}: touches bags {touched}"
                )
        else:
            raise PreconditionError(
                f"unclassifiable vertex {v}: touches bags {touched}"
            )
    return C6Partition(
        bags=blowup.bags,
        x_classes=tuple(tuple(x) for x in xs),
        y_classes=tuple(tuple(y) for y in ys),
        z_classes=tuple(tuple(z) for z in zs),
        rest=tuple(rest),
    )


def c6_partition_violations(
    g: Graph,
    part: C6Partition,
    f1_free: bool | None = None,
    f2_free: bool | None = None,
) -> list[str]:
    """All violated hexagon-partition properties (empty list means valid).

    The last two property groups are guarded: they are only required when
    the host avoids the f1 (resp. f2) pattern, which is probed here when
    the caller does not pass the flags.
    """
    if f1_free is None:
        f1_free = find_induced_embedding(g, catalog_lookup("f1")) is None
    if f2_free is None:
        f2_free = find_induced_embedding(g, catalog_lookup("f2")) is None

    bag = [mask_of(b) for b in part.bags]
    xm = [mask_of(c) for c in part.x_classes]
    ym = [mask_of(c) for c in part.y_classes]
    zm = [mask_of(c) for c in part.z_classes]
    rm = mask_of(part.rest)
    a_all = 0
    for m in bag:
        a_all |= m
    x_all = 0
    for m in xm:
        x_all |= m
    y_all = 0
    for m in ym:
        y_all |= m
    z_all = 0
    for m in zm:
        z_all |= m
    b_all = x_all | y_all | z_all

    rows = g.rows()

    def nbhd(mask: int) -> int:
        nb = 0
        m = mask
        while m:
            low = m & -m
            nb |= rows[low.bit_length() - 1]
            m ^= low
        return nb & ~mask

    def anticomplete(ma: int, mb: int) -> bool:
        m = ma
        while m:
            low = m & -m
            if rows[low.bit_length() - 1] & mb:
                return False
            m ^= low
        return True

    problems = c6_bag_violations(g, part.bags)

    # (a) the classes are exactly the blowup's neighborhood, and everything
    # else is in the remainder
    if b_all != nbhd(a_all):
        problems.append("(a) classified vertices differ from N(A)")
    if a_all | b_all | rm != (1 << g.n) - 1 or (a_all & b_all) or (b_all & rm) or (a_all & rm):
        problems.append("(a) classes do not partition the vertex set")

    for i in range(6):
        # (b) X_i complete to its two supporting bags
        want = bag[i] | bag[(i + 1) % 6]
        for u in part.x_classes[i]:
            if rows[u] & want != want:
                problems.append(f"(b) X{i} vertex {u} misses part of its bags")
        # (c) forbidden adjacencies from X_i and Y_i
        x_banned = (
            (x_all & ~xm[i] & ~xm[(i + 3) % 6])
            | (y_all & ~ym[(i + 3) % 6] & ~ym[(i + 4) % 6])
            | zm[(i + 2) % 3]
            | rm
        )
        if not anticomplete(xm[i], x_banned):
            problems.append(f"(c) X{i} touches a banned class")
        y_banned = (y_all & ~ym[i] & ~ym[(i + 3) % 6]) | (z_all & ~zm[i % 3]) | rm
        if not anticomplete(ym[i], y_banned):
            problems.append(f"(c) Y{i} touches a banned class")
        # (d) exclusion pairs
        if xm[i] and (xm[(i + 1) % 6] | xm[(i - 1) % 6]):
            problems.append(f"(d) X{i} coexists with an adjacent X class")
        if xm[i] and (ym[(i + 2) % 6] | ym[(i - 1) % 6]):
            problems.append(f"(d) X{i} coexists with an excluded Y class")
        if ym[i] and (ym[(i + 2) % 6] | ym[(i - 2) % 6]):
            problems.append(f"(d) Y{i} coexists with an excluded Y class")
        # (e) consequences of a long-range X attachment
        trigger = xm[(i + 3) % 6] | ym[(i + 3) % 6] | ym[(i + 4) % 6]
        if not anticomplete(xm[i], trigger):
            if zm[(i + 2) % 3]:
                problems.append(f"(e) long-range X{i} edge with Z{(i + 2) % 3} non-empty")
            left_ok = nbhd(bag[(i - 1) % 6]) == bag[i] | bag[(i - 2) % 6]
            right_ok = nbhd(bag[(i + 2) % 6]) == bag[(i + 1) % 6] | bag[(i + 3) % 6]
            if not (left_ok or right_ok):
                problems.append(f"(e) long-range X{i} edge without a trapped bag")
        # guarded properties
        if f1_free and not anticomplete(ym[i], ym[(i + 3) % 6]):
            problems.append(f"(f1) Y{i} touches the opposite Y class")
        if f2_free and not anticomplete(xm[i], zm[i % 3] | zm[(i + 1) % 3]):
            problems.append(f"(g) X{i} touches a forbidden Z class")
    # (c) distinct Z classes never touch
    for a in range(3):
        for b in range(a + 1, 3):
            if not anticomplete(zm[a], zm[b]):
                problems.append(f"(c) Z{a} touches Z{b}")
    return problems


# -- pentagon machinery ----------------------------------------------------

_C5 = catalog_lookup("c5")


@dataclass(frozen=True)
class C5Partition:
    """Neighborhood classes around an induced five-cycle."""

    cycle: tuple[int, ...]
    x_classes: tuple[tuple[int, ...], ...]
    y_classes: tuple[tuple[int, ...], ...]
    rest: tuple[int, ...]


def c5_neighborhood_partition(g: Graph, c5: Embedding) -> C5Partition:
    """Classify vertices by their cycle neighborhood: one vertex, a
    consecutive pair, or nothing; anything else is a precondition failure."""
    if not embedding_is_induced(g, _C5, c5.mapping):
        raise GraphInputError("not a valid induced five-cycle embedding")
    cycle = c5.mapping
    cyc_mask = mask_of(cycle)
    xs: list[list[int]] = [[] for _ in range(5)]
    ys: list[list[int]] = [[] for _ in range(5)]
    rest: list[int] = []
    for v in range(g.n):
        if cyc_mask >> v & 1:
            continue
        row = g.adjacency_bits(v)
        touched = [i for i in range(5) if row >> cycle[i] & 1]
        if not touched:
            rest.append(v)
        elif len(touched) == 1:
            ys[touched[0]].append(v)
        elif len(touched) == 2:
            a, b = touched
            if b - a == 1:
                xs[a].append(v)
            elif (a, b) == (0, 4):
                xs[4].append(v)
            else:
                raise PreconditionError(
                    f"unclassifiable vertex {v}: cycle neighbors {touched}"
                )
        else:
            raise PreconditionError(
                f"unclassifiable vertex {v}: cycle neighbors {touched}"
            )
    return C5Partition(
        cycle=cycle,
        x_classes=tuple(tuple(x) for x in xs),
        y_classes=tuple(tuple(y) for y in ys),
        rest=tuple(rest),
    )


def c5_partition_violations(g: Graph, part: C5Partition) -> list[str]:
    """Violations of the pentagon-partition facts (empty list means valid)."""
    rows = g.rows()
    xm = [mask_of(c) for c in part.x_classes]
    ym = [mask_of(c) for c in part.y_classes]
    x_all = 0
    for m in xm:
        x_all |= m
    y_all = 0
    for m in ym:
        y_all |= m
    cyc_mask = mask_of(part.cycle)

    def nbhd(mask: int) -> int:
        nb = 0
        m = mask
        while m:
            low = m & -m
            nb |= rows[low.bit_length() - 1]
            m ^= low
        return nb & ~mask

    def anticomplete(ma: int, mb: int) -> bool:
        m = ma
        while m:
            low = m & -m
            if rows[low.bit_length() - 1] & mb:
                return False
            m ^= low
        return True

    problems = []
    if nbhd(cyc_mask) != x_all | y_all:
        problems.append("(1) classified vertices differ from N(C)")
    for i in range(5):
        block = list(part.x_classes[i]) + [part.cycle[i], part.cycle[(i + 1) % 5]]
        if not is_clique(g, block):
            problems.append(f"(2) X{i} plus its cycle edge is not a clique")
        banned = (x_all | y_all) & ~xm[i] & ~ym[(i + 3) % 5]
        if not anticomplete(xm[i], banned):
            problems.append(f"(3) X{i} touches a banned class")
        if not anticomplete(ym[i], y_all & ~ym[i]):
            problems.append(f"(3) Y{i} touches another Y class")
    return problems


# -- structure-case evaluators ----------------------------------------------


@dataclass(frozen=True)
class CliqueCutsetCase:
    cutset: tuple[int, ...]


@dataclass(frozen=True)
class BisimplicialCase:
    vertex: int
    clique_a: tuple[int, ...]
    clique_b: tuple[int, ...]


@dataclass(frozen=True)
class PetersenBlowupCase:
    partition: BlowupPartition


@dataclass(frozen=True)
class PetersenGraphCase:
    iso: Embedding


@dataclass(frozen=True)
class LowDegreeCase:
    vertex: int
    bound: int
    degree: int


StructureCase = Union[
    CliqueCutsetCase,
    BisimplicialCase,
    PetersenBlowupCase,
    PetersenGraphCase,
    LowDegreeCase,
]


def validate_structure_case(g: Graph, case: StructureCase) -> list[str]:
    """Re-validate the witness carried by a structure case."""
    problems: list[str] = []
    if isinstance(case, CliqueCutsetCase):
        if not is_clique(g, case.cutset):
            problems.append("cutset is not a clique")
        before = len(connectivity(g).components)
        keep = [v for v in range(g.n) if v not in set(case.cutset)]
        after = len(component_masks(g.rows(), mask_of(keep)))
        if after <= before:
            problems.append("cutset removal does not increase component count")
    elif isinstance(case, BisimplicialCase):
        union = set(case.clique_a) | set(case.clique_b)
        if union != set(g.neighbors(case.vertex)):
            problems.append("cliques do not cover the neighborhood")
        if not is_clique(g, case.clique_a) or not is_clique(g, case.clique_b):
            problems.append("a carried side is not a clique")
    elif isinstance(case, PetersenBlowupCase):
        problems.extend(validate_blowup_partition(g, case.partition))
    elif isinstance(case, PetersenGraphCase):
        pet = catalog_lookup("petersen")
        if g.n != pet.n or not embedding_is_induced(g, pet, case.iso.mapping):
            problems.append("carried map is not an isomorphism with the Petersen graph")
    elif isinstance(case, LowDegreeCase):
        if g.degree(case.vertex) != case.degree:
            problems.append("carried degree is wrong")
        if case.degree > case.bound:
            problems.append("degree exceeds the carried bound")
    else:  # pragma: no cover
        problems.append(f"unknown case {case!r}")
    return problems


def _require_connected_and_free(g: Graph, family: str) -> None:
    if not connectivity(g).is_connected:
        raise PreconditionError("structure cases need a connected graph")
    res = family_membership(g, family)
    if not res.is_free:
        raise PreconditionError(
            f"input is not {family}-free: contains {res.witness[0]}",
            witness=res.witness,
        )


def structure_case_gem(g: Graph) -> StructureCase:
    """Decompose a connected gem-route graph: clique cutset, then
    bisimplicial vertex, then Petersen blowup; anything else is a
    theorem violation."""
    _require_connected_and_free(g, "F")
    return _structure_case_gem(g)


def _structure_case_gem(g: Graph) -> StructureCase:
    cut = find_clique_cutset(g)
    if cut is not None:
        return CliqueCutsetCase(cut)
    bis = find_bisimplicial_vertex(g)
    if bis is not None:
        return BisimplicialCase(*bis)
    part = petersen_blowup_partition(g)
    if part is not None:
        return PetersenBlowupCase(part)
    raise TheoremViolationError(f"no structure case applies to {to_graph6(g)}")


def structure_case_diamond(g: Graph) -> StructureCase:
    """Decompose a connected diamond-route graph: Petersen isomorphism,
    then clique cutset, then a low-degree vertex.

    The degree bound is the clique number, tightened to 2 when the graph
    contains an induced six-cycle.
    """
    _require_connected_and_free(g, "H")
    return _structure_case_diamond(g)


def _structure_case_diamond(g: Graph) -> StructureCase:
    pet = catalog_lookup("petersen")
    if g.n == pet.n:
        emb = find_induced_embedding(g, pet)
        if emb is not None:
            return PetersenGraphCase(emb)
    cut = find_clique_cutset(g)
    if cut is not None:
        return CliqueCutsetCase(cut)
    if find_induced_embedding(g, _C6) is not None:
        bound = 2
    else:
        bound = clique_number(g)[0]
    deg, v = min((g.degree(u), u) for u in range(g.n))
    if deg <= bound:
        return LowDegreeCase(v, bound, deg)
    raise TheoremViolationError(
        f"no low-degree vertex within bound {bound} in {to_graph6(g)}"
    )
