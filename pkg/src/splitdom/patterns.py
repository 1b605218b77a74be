"""Catalog of named small graphs and induced-subgraph embedding search.

The catalog is data (literal adjacency tables), not generating code, so
tests can diff it against independently typed tables.  Embedding search is
plain backtracking with degree pruning; patterns never exceed 10 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import GraphInputError
from .graphs import Graph

# name -> (vertex count, edges, labels or None)
_TABLES: dict[str, tuple[int, tuple[tuple[int, int], ...], tuple[str, ...] | None]] = {
    "p2": (2, ((0, 1),), None),
    "p3": (3, ((0, 1), (1, 2)), None),
    "p4": (4, ((0, 1), (1, 2), (2, 3)), None),
    "p5": (5, ((0, 1), (1, 2), (2, 3), (3, 4)), None),
    "p6": (6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5)), None),
    "p7": (7, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)), None),
    "c4": (4, ((0, 1), (1, 2), (2, 3), (3, 0)), None),
    "c5": (5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0)), None),
    "c6": (6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)), None),
    "c7": (7, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)), None),
    "k1": (1, (), None),
    "k2": (2, ((0, 1),), None),
    "k3": (3, ((0, 1), (0, 2), (1, 2)), None),
    "k4": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)), None),
    "k5": (
        5,
        (
            (0, 1), (0, 2), (0, 3), (0, 4),
            (1, 2), (1, 3), (1, 4),
            (2, 3), (2, 4),
            (3, 4),
        ),
        None,
    ),
    "2k2": (4, ((0, 1), (2, 3)), None),
    "k2+k1": (3, ((0, 1),), None),
    # vertices a,b,c,d: triangle abc plus the pendant edge ad
    "paw": (4, ((0, 1), (1, 2), (2, 0), (0, 3)), ("a", "b", "c", "d")),
    # K4 minus the edge {0,3}
    "diamond": (4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)), None),
    # P4 = 0-1-2-3 plus vertex 4 adjacent to all of it
    "gem": (5, ((0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)), None),
    # paw plus vertex e with the edge de
    "h1": (5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4)), ("a", "b", "c", "d", "e")),
    # h1 plus the edge ae (two triangles sharing a)
    "h2": (
        5,
        ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (0, 4)),
        ("a", "b", "c", "d", "e"),
    ),
    # hexagon v1..v6 = 0..5 plus y1=6, y4=7 with edges y1v1, y1y4, y4v4
    "f1": (
        8,
        ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 7), (7, 3)),
        ("v1", "v2", "v3", "v4", "v5", "v6", "y1", "y4"),
    ),
    # hexagon plus x1=6, z1=7 with edges x1v1, x1v2, x1z1, z1v1, z1v4
    "f2": (
        8,
        (
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
            (6, 0), (6, 1), (6, 7), (7, 0), (7, 3),
        ),
        ("v1", "v2", "v3", "v4", "v5", "v6", "x1", "z1"),
    ),
    # hexagon plus z1=6, r=7 with edges z1v1, z1v4, rz1
    "f3": (
        8,
        ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 3), (7, 6)),
        ("v1", "v2", "v3", "v4", "v5", "v6", "z1", "r"),
    ),
    # five-cycle with one leaf attached to each cycle vertex
    "q1": (
        10,
        (
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ),
        None,
    ),
    # four-cycle with one leaf attached to each cycle vertex
    "q2": (
        8,
        ((0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)),
        None,
    ),
    # h1 with one leaf attached to each of its non-cut vertices b, c, e
    "q3": (
        8,
        ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (1, 5), (2, 6), (4, 7)),
        ("a", "b", "c", "d", "e", "b'", "c'", "e'"),
    ),
    # h2 with one leaf attached to each of its non-cut vertices b, c, d, e
    "q4": (
        9,
        (
            (0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (0, 4),
            (1, 5), (2, 6), (3, 7), (4, 8),
        ),
        ("a", "b", "c", "d", "e", "b'", "c'", "d'", "e'"),
    ),
    # paw with one leaf attached to each of its non-cut vertices b, c, d
    "q5": (
        7,
        ((0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (3, 6)),
        ("a", "b", "c", "d", "b'", "c'", "d'"),
    ),
    # outer cycle 0-4, inner pentagram 5-9, spokes i <-> i+5
    "petersen": (
        10,
        (
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (6, 8), (7, 9), (8, 5), (9, 6),
        ),
        None,
    ),
}

_ALIASES = {"k2uk1": "k2+k1", "k2 u k1": "k2+k1"}

FAMILIES: dict[str, tuple[str, ...]] = {
    "L1": ("p5", "c5", "c4", "h1", "h2"),
    "L2": ("p4", "c4", "paw"),
    "C": ("p7", "c7", "q1", "q2", "q3", "q4"),
    "D": ("p6", "c6", "q2", "q5"),
    "F": ("p7", "c7", "c4", "gem"),
    "H": ("p7", "c7", "c4", "diamond"),
}


def pattern_names() -> tuple[str, ...]:
    return tuple(sorted(_TABLES))


def catalog_lookup(name: str) -> Graph:
    """Fresh copy of a named catalog graph in its canonical labeling."""
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in _TABLES:
        raise GraphInputError(f"unknown pattern name {name!r}")
    n, edges, labels = _TABLES[key]
    return Graph(n, edges, labels)


def star(leaves: int) -> Graph:
    """The star with one center (vertex 0) and ``leaves`` leaves."""
    if leaves < 0:
        raise GraphInputError("star needs a non-negative leaf count")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern-index -> host-index witnessing an induced copy."""

    pattern: str | None
    mapping: tuple[int, ...]


def embedding_is_induced(host: Graph, pattern: Graph, mapping: tuple[int, ...]) -> bool:
    """Independent check that ``mapping`` is an induced-subgraph isomorphism."""
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= h < host.n for h in mapping):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != host.has_edge(mapping[i], mapping[j]):
                return False
    return True


def iter_induced_embeddings(host: Graph, pattern: Graph) -> Iterator[Embedding]:
    """All induced embeddings in lexicographic order of the mapping tuple."""
    np, nh = pattern.n, host.n
    if np > nh:
        return
    if np == 0:
        yield Embedding(None, ())
        return
    slack = nh - np
    pdeg = [pattern.degree(v) for v in range(np)]
    hdeg = [host.degree(v) for v in range(nh)]
    prows = pattern.rows()
    hrows = host.rows()
    mapping = [0] * np

    def extend(k: int, used: int) -> Iterator[Embedding]:
        prow = prows[k]
        for h in range(nh):
            hb = 1 << h
            if used & hb:
                continue
            if hdeg[h] < pdeg[k] or hdeg[h] > pdeg[k] + slack:
                continue
            hrow = hrows[h]
            ok = True
            for i in range(k):
                if (prow >> i & 1) != (hrow >> mapping[i] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[k] = h
            if k + 1 == np:
                yield Embedding(None, tuple(mapping))
            else:
                yield from extend(k + 1, used | hb)

    yield from extend(0, 0)


def find_induced_embedding(host: Graph, pattern: Graph, name: str | None = None) -> Embedding | None:
    """Lexicographically least induced embedding of ``pattern``, if any."""
    for emb in iter_induced_embeddings(host, pattern):
        return Embedding(name, emb.mapping)
    return None


def enumerate_automorphisms(g: Graph) -> tuple[Embedding, ...]:
    return tuple(iter_induced_embeddings(g, g))


@lru_cache(maxsize=256)
def _automorphism_count(pattern: Graph) -> int:
    return len(enumerate_automorphisms(pattern))


def count_induced_copies(host: Graph, pattern: Graph) -> int:
    """Number of induced copies (embeddings up to pattern automorphism)."""
    total = sum(1 for _ in iter_induced_embeddings(host, pattern))
    aut = _automorphism_count(pattern)
    if total % aut:
        raise RuntimeError("embedding count not divisible by automorphism count")
    return total // aut


@dataclass(frozen=True)
class FamilyResult:
    family: str
    is_free: bool
    witness: tuple[str, Embedding] | None


def family_membership(g: Graph, family: str) -> FamilyResult:
    """Freeness of ``g`` with respect to one of the named pattern families.

    The witness, when present, is the first family member (in family order)
    that embeds, with its lexicographically least embedding.
    """
    key = family.strip().upper()
    if key not in FAMILIES:
        raise GraphInputError(
            f"unknown family {family!r}; expected one of {sorted(FAMILIES)}"
        )
    for pname in FAMILIES[key]:
        emb = find_induced_embedding(g, catalog_lookup(pname), pname)
        if emb is not None:
            return FamilyResult(key, False, (pname, emb))
    return FamilyResult(key, True, None)
