"""Graph enumeration, random corpora, and verification campaigns.

Enumeration is one-vertex extension with canonical-form deduplication; the
canonical form is the maximum adjacency encoding over permutations, with
iterated degree-partition pre-partitioning and branch-and-bound pruning
(no external canonical-labeling dependency).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .cliques import clique_number
from .coloring import (
    blowup_clique_number,
    chromatic_number_exact,
    color_diamond_free_certified,
    color_gem_free_certified,
    color_petersen_blowup,
    expand_blowup_coloring,
    verify_coloring,
)
from .decomposition import (
    LowDegreeCase,
    PetersenBlowupCase,
    PetersenGraphCase,
    blowup_maximality_violations,
    c5_neighborhood_partition,
    c5_partition_violations,
    c6_neighborhood_partition,
    c6_partition_violations,
    find_bisimplicial_vertex,
    find_clique_cutset,
    max_blowup_c6,
    structure_case_diamond,
    structure_case_gem,
    validate_structure_case,
)
from .domination import find_dominating_split, validate_domination_certificate
from .errors import BudgetExceededError, GraphInputError, PreconditionError, TheoremViolationError
from .graphs import (
    Graph,
    bits_to_tuple,
    connectivity,
    induced_subgraph,
    mask_is_connected,
    mask_of,
    to_graph6,
)
from .patterns import (
    catalog_lookup,
    enumerate_automorphisms,
    family_membership,
    find_induced_embedding,
    iter_induced_embeddings,
)
from .recognition import build_blowup, validate_split_partition, split_partition, complete_split_partition

_ENUMERATION_CAP = 8


# -- canonical form ----------------------------------------------------------


def _wl_colors(g: Graph) -> list[int]:
    """Iterated degree refinement; final color ids are isomorphism-invariant."""
    n = g.n
    neighbors = [g.neighbors(v) for v in range(n)]
    colors = [g.degree(v) for v in range(n)]
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    distinct = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in neighbors[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        new_distinct = len(set(colors))
        if new_distinct == distinct:
            return colors
        distinct = new_distinct


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical integer key plus a permutation realizing it.

    The key is the maximum over allowed permutations of the lower-triangle
    adjacency bit string; permutations respect the refined color classes,
    and equal keys mean isomorphic graphs.
    """
    n = g.n
    if n == 0:
        return 0, ()
    rows = g.rows()
    colors = _wl_colors(g)
    by_class: dict[int, list[int]] = {}
    for v in range(n):
        by_class.setdefault(colors[v], []).append(v)
    class_ids = sorted(by_class)
    members = [by_class[c] for c in class_ids]
    class_of_pos: list[int] = []
    for idx, grp in enumerate(members):
        class_of_pos.extend([idx] * len(grp))

    used = [False] * n
    cur_order = [0] * n
    cur_chunks = [0] * n

    # greedy seed: maximum chunk at each level, first candidate on ties
    best_order = [0] * n
    best_chunks = [0] * n
    for k in range(n):
        pick, pick_chunk = -1, -1
        for v in members[class_of_pos[k]]:
            if used[v]:
                continue
            row = rows[v]
            chunk = 0
            for i in range(k):
                chunk = (chunk << 1) | (row >> best_order[i] & 1)
            if chunk > pick_chunk:
                pick, pick_chunk = v, chunk
        used[pick] = True
        best_order[k] = pick
        best_chunks[k] = pick_chunk if pick_chunk >= 0 else 0
    for v in range(n):
        used[v] = False

    version = [0]

    def rec(k: int, tight: bool) -> None:
        if k == n:
            if not tight:
                best_chunks[:] = cur_chunks
                best_order[:] = cur_order
                version[0] += 1
            return
        for v in members[class_of_pos[k]]:
            if used[v]:
                continue
            row = rows[v]
            chunk = 0
            for i in range(k):
                chunk = (chunk << 1) | (row >> cur_order[i] & 1)
            if tight:
                b = best_chunks[k]
                if chunk < b:
                    continue
                child_tight = chunk == b
            else:
                child_tight = False
            used[v] = True
            cur_order[k] = v
            cur_chunks[k] = chunk
            before = version[0]
            rec(k + 1, child_tight)
            used[v] = False
            if version[0] != before:
                tight = True

    rec(0, True)
    key = 0
    for k in range(n):
        key = (key << k) | best_chunks[k]
    return key, tuple(best_order)


# -- enumeration and random corpora -------------------------------------------


@lru_cache(maxsize=None)
def _graphs_exactly(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    out: dict[int, Graph] = {}
    for parent in _graphs_exactly(n - 1):
        base_edges = list(parent.edges())
        for mask in range(1 << (n - 1)):
            cand = Graph(
                n, base_edges + [(v, n - 1) for v in bits_to_tuple(mask)]
            )
            key, order = canonical_key(cand)
            if key not in out:
                out[key] = cand.relabel(order)
    return tuple(out[k] for k in sorted(out))


def enumerate_small_graphs(n: int, connected_only: bool = False) -> tuple[Graph, ...]:
    """All graphs on exactly ``n`` vertices up to isomorphism, in a fixed
    deterministic order (ascending canonical key)."""
    if n < 0:
        raise GraphInputError("vertex count must be non-negative")
    if n > _ENUMERATION_CAP:
        raise BudgetExceededError(
            f"enumeration caps at n={_ENUMERATION_CAP}, got {n}"
        )
    graphs = _graphs_exactly(n)
    if connected_only:
        graphs = tuple(g for g in graphs if connectivity(g).is_connected)
    return graphs


@lru_cache(maxsize=None)
def connected_graphs_upto(max_n: int) -> tuple[Graph, ...]:
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_small_graphs(n, connected_only=True))
    return tuple(out)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Reproducible G(n, p): each pair independently present, fixed pair order."""
    if not 0 <= edge_probability <= 1:
        raise GraphInputError(f"edge probability must be in [0, 1], got {edge_probability}")
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    return Graph(n, edges)


_CORPUS_PROBABILITIES = (0.10, 0.14, 0.18, 0.22, 0.26)


@lru_cache(maxsize=None)
def random_family_corpus(
    family: str, samples: int, seed: int, sizes: tuple[int, ...] = (9, 10)
) -> tuple[Graph, ...]:
    """Rejection-filtered connected family-free random graphs (deterministic)."""
    out: list[Graph] = []
    attempt = 0
    for idx in range(samples):
        n = sizes[idx % len(sizes)]
        while True:
            attempt += 1
            if attempt > 2_000_000:
                raise BudgetExceededError(
                    f"rejection sampling for family {family} did not converge"
                )
            p = _CORPUS_PROBABILITIES[attempt % len(_CORPUS_PROBABILITIES)]
            g = random_graph(n, p, seed * 1_000_003 + attempt)
            if not connectivity(g).is_connected:
                continue
            if family_membership(g, family).is_free:
                out.append(g)
                break
    return tuple(out)


@lru_cache(maxsize=None)
def _family_free_connected(family: str, max_n: int) -> tuple[Graph, ...]:
    return tuple(
        g for g in connected_graphs_upto(max_n) if family_membership(g, family).is_free
    )


# -- campaign reports ----------------------------------------------------------


@dataclass(frozen=True)
class FailureExhibit:
    graph6: str
    diagnostic: str


@dataclass(frozen=True)
class CampaignReport:
    """Outcome of one verification campaign; failures reproduce in isolation."""

    name: str
    corpus: str
    params: dict
    checked: int
    passed: int
    failed: int
    failures: tuple[FailureExhibit, ...]
    duration_seconds: float
    schema_version: int = 1

    def _payload(self, include_duration: bool) -> dict:
        data = {
            "schema_version": self.schema_version,
            "campaign": self.name,
            "corpus": self.corpus,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "failures": [
                {"graph6": f.graph6, "diagnostic": f.diagnostic} for f in self.failures
            ],
        }
        if include_duration:
            data["duration_seconds"] = self.duration_seconds
        return data

    def to_json(self) -> str:
        return json.dumps(self._payload(True), indent=2, sort_keys=True)

    def stable_json(self) -> str:
        """Byte-for-byte reproducible serialization (wall clock excluded)."""
        return json.dumps(self._payload(False), indent=2, sort_keys=True)


_Check = tuple[str, int, list[FailureExhibit]]


def run_campaign(name: str, *, max_n: int = 8, seed: int = 2024, samples: int = 1000) -> CampaignReport:
    """Run one named verification campaign and report pass/fail counts."""
    key = name.strip().lower()
    if key not in _CAMPAIGNS:
        raise GraphInputError(
            f"unknown campaign {name!r}; known: {', '.join(sorted(_CAMPAIGNS))}"
        )
    t0 = time.perf_counter()
    corpus, checked, failures = _CAMPAIGNS[key](max_n, seed, samples)
    duration = time.perf_counter() - t0
    failures = sorted(failures, key=lambda f: (f.graph6, f.diagnostic))
    return CampaignReport(
        name=key,
        corpus=corpus,
        params={"max_n": max_n, "seed": seed, "samples": samples},
        checked=checked,
        passed=checked - len(failures),
        failed=len(failures),
        failures=tuple(failures),
        duration_seconds=duration,
    )


def campaign_names() -> tuple[str, ...]:
    return tuple(sorted(_CAMPAIGNS))


# -- individual campaigns --------------------------------------------------------


def _campaign_lemma1(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    for g in connected_graphs_upto(max_n):
        checked += 1
        part = split_partition(g)
        free = family_membership(g, "L1").is_free
        if part is not None and not validate_split_partition(g, part):
            failures.append(FailureExhibit(to_graph6(g), "invalid split partition"))
        elif (part is not None) != free:
            failures.append(
                FailureExhibit(
                    to_graph6(g),
                    f"split={part is not None} but L1-free={free}",
                )
            )
    return f"connected graphs up to isomorphism, n<={max_n}", checked, failures


def _campaign_lemma2(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    for g in connected_graphs_upto(max_n):
        checked += 1
        part = complete_split_partition(g)
        free = family_membership(g, "L2").is_free
        if part is not None and not validate_split_partition(g, part, complete=True):
            failures.append(FailureExhibit(to_graph6(g), "invalid complete split partition"))
        elif (part is not None) != free:
            failures.append(
                FailureExhibit(
                    to_graph6(g),
                    f"complete-split={part is not None} but L2-free={free}",
                )
            )
    return f"connected graphs up to isomorphism, n<={max_n}", checked, failures


def _domination_forward(
    family: str, kind: str, max_n: int, subset_max_n: int
) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    memo: dict[tuple[int, int], bool] = {}
    for g in _family_free_connected(family, max_n):
        checked += 1
        cert = find_dominating_split(g, kind)
        if cert is None or not validate_domination_certificate(g, cert):
            failures.append(
                FailureExhibit(to_graph6(g), f"no valid {kind} domination certificate")
            )
    for g in _family_free_connected(family, min(subset_max_n, max_n)):
        rows = g.rows()
        for size in range(1, g.n + 1):
            for combo in combinations(range(g.n), size):
                if not mask_is_connected(rows, mask_of(combo)):
                    continue
                checked += 1
                sub, _ = induced_subgraph(g, combo)
                mkey = canonical_key(sub)
                ok = memo.get((sub.n, mkey[0]))
                if ok is None:
                    cert = find_dominating_split(sub, kind)
                    ok = cert is not None and validate_domination_certificate(sub, cert)
                    memo[(sub.n, mkey[0])] = ok
                if not ok:
                    failures.append(
                        FailureExhibit(
                            to_graph6(g),
                            f"connected subset {combo} lacks a {kind} certificate",
                        )
                    )
    return (
        f"connected {family}-free graphs n<={max_n}, plus connected subsets of hosts n<={subset_max_n}",
        checked,
        failures,
    )


def _domination_reverse(names: Iterable[str], kind: str) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    for name in names:
        checked += 1
        q = catalog_lookup(name)
        cert = find_dominating_split(q, kind)
        if cert is not None:
            failures.append(
                FailureExhibit(
                    to_graph6(q),
                    f"{name} unexpectedly admits a {kind} certificate {cert.vertices}",
                )
            )
    return f"obstruction list {', '.join(names)}", checked, failures


def _merge_checks(*parts: _Check) -> _Check:
    corpus = "; ".join(p[0] for p in parts)
    checked = sum(p[1] for p in parts)
    failures = [f for p in parts for f in p[2]]
    return corpus, checked, failures


def _campaign_thm3(max_n: int, seed: int, samples: int) -> _Check:
    return _merge_checks(
        _domination_forward("C", "split", max_n, 7),
        _domination_reverse(("p7", "c7", "q1", "q2", "q3", "q4"), "split"),
    )


def _campaign_thm3_reverse(max_n: int, seed: int, samples: int) -> _Check:
    return _domination_reverse(("p7", "c7", "q1", "q2", "q3", "q4"), "split")


def _campaign_thm4(max_n: int, seed: int, samples: int) -> _Check:
    return _merge_checks(
        _domination_forward("D", "complete-split", max_n, 7),
        _domination_reverse(("p6", "c6", "q2", "q5"), "complete-split"),
    )


def _campaign_thm4_reverse(max_n: int, seed: int, samples: int) -> _Check:
    return _domination_reverse(("p6", "c6", "q2", "q5"), "complete-split")


def _campaign_thm6(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    c6 = catalog_lookup("c6")
    f1 = catalog_lookup("f1")
    f2 = catalog_lookup("f2")
    for g in _family_free_connected("F", max_n):
        embeddings = list(iter_induced_embeddings(g, c6))
        if not embeddings:
            continue
        f1_free = find_induced_embedding(g, f1) is None
        f2_free = find_induced_embedding(g, f2) is None
        seen: set[tuple] = set()
        for emb in embeddings:
            blowup = max_blowup_c6(g, emb)
            if blowup.bags in seen:
                continue
            seen.add(blowup.bags)
            checked += 1
            problems = blowup_maximality_violations(g, blowup)
            try:
                part = c6_neighborhood_partition(g, blowup)
            except PreconditionError as exc:
                problems.append(str(exc))
            else:
                problems.extend(c6_partition_violations(g, part, f1_free, f2_free))
            if problems:
                failures.append(
                    FailureExhibit(to_graph6(g), "; ".join(sorted(set(problems))))
                )
    return (
        f"max-blowups of six-cycles in connected F-free graphs n<={max_n}",
        checked,
        failures,
    )


def _campaign_thm7(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    for base_name in ("f1", "f2"):
        base = catalog_lookup(base_name)
        hosts = [base]
        for mask in range(1 << base.n):
            hosts.append(
                Graph(
                    base.n + 1,
                    list(base.edges()) + [(v, base.n) for v in bits_to_tuple(mask)],
                )
            )
        for g in hosts:
            if not connectivity(g).is_connected:
                continue
            if not family_membership(g, "F").is_free:
                continue
            checked += 1
            bis = find_bisimplicial_vertex(g)
            if base_name == "f1":
                ok = bis is not None
            else:
                ok = bis is not None or find_clique_cutset(g) is not None
            if not ok:
                failures.append(
                    FailureExhibit(
                        to_graph6(g),
                        f"F-free host containing {base_name} has no required decomposition",
                    )
                )
    return "f1/f2 plus every one-vertex extension (connected, F-free)", checked, failures


def _structure_corpus(family: str, max_n: int, seed: int, samples: int) -> tuple[Graph, ...]:
    return (
        _family_free_connected(family, max_n)
        + random_family_corpus(family, samples, seed)
        + (catalog_lookup("petersen"),)
    )


def _campaign_thm10(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    petersen = catalog_lookup("petersen")
    for g in _structure_corpus("F", max_n, seed, samples):
        checked += 1
        try:
            case = structure_case_gem(g)
        except TheoremViolationError as exc:
            failures.append(FailureExhibit(to_graph6(g), f"theorem violation: {exc}"))
            continue
        problems = validate_structure_case(g, case)
        if g == petersen and not isinstance(case, PetersenBlowupCase):
            problems.append("Petersen did not resolve to a blowup case")
        if problems:
            failures.append(FailureExhibit(to_graph6(g), "; ".join(problems)))
    return (
        f"connected F-free graphs n<={max_n} plus {samples} random n in {{9,10}} plus Petersen",
        checked,
        failures,
    )


def _campaign_thm12(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    petersen = catalog_lookup("petersen")
    for g in _structure_corpus("F", max_n, seed, samples):
        checked += 1
        problems = []
        try:
            cert = color_gem_free_certified(g)
        except TheoremViolationError as exc:
            failures.append(FailureExhibit(to_graph6(g), f"theorem violation: {exc}"))
            continue
        if not verify_coloring(g, cert):
            problems.append("certificate failed verification")
        omega = len(cert.clique_witness)
        if cert.color_count > max(0, 2 * omega - 1):
            problems.append(
                f"{cert.color_count} colors above 2*{omega}-1"
            )
        chi, _ = chromatic_number_exact(g)
        if chi > cert.color_count:
            problems.append(f"exact chi {chi} above produced count {cert.color_count}")
        if g == petersen and cert.color_count != 3:
            problems.append(f"Petersen colored with {cert.color_count} != 3")
        if problems:
            failures.append(FailureExhibit(to_graph6(g), "; ".join(problems)))
    return (
        f"connected F-free graphs n<={max_n} plus {samples} random n in {{9,10}} plus Petersen",
        checked,
        failures,
    )


def _campaign_thm14(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    c5 = catalog_lookup("c5")
    c6 = catalog_lookup("c6")
    for g in _family_free_connected("H", max_n):
        if find_induced_embedding(g, c6) is not None:
            continue
        embeddings = list(iter_induced_embeddings(g, c5))
        if not embeddings:
            continue
        checked += 1
        problems = []
        seen_images: set[frozenset] = set()
        for emb in embeddings:
            image = frozenset(emb.mapping)
            if image in seen_images:
                continue
            seen_images.add(image)
            try:
                part = c5_neighborhood_partition(g, emb)
            except PreconditionError as exc:
                problems.append(str(exc))
                continue
            problems.extend(c5_partition_violations(g, part))
        omega, _ = clique_number(g)
        min_degree = min(g.degree(v) for v in range(g.n))
        if find_clique_cutset(g) is None and min_degree > omega:
            problems.append(
                f"no clique cutset and min degree {min_degree} above omega {omega}"
            )
        if problems:
            failures.append(FailureExhibit(to_graph6(g), "; ".join(sorted(set(problems)))))
    return (
        f"connected H-free, C6-free graphs n<={max_n} containing a five-cycle",
        checked,
        failures,
    )


def _campaign_thm15(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    petersen = catalog_lookup("petersen")
    c6 = catalog_lookup("c6")
    for g in _structure_corpus("H", max_n, seed, samples):
        checked += 1
        try:
            case = structure_case_diamond(g)
        except TheoremViolationError as exc:
            failures.append(FailureExhibit(to_graph6(g), f"theorem violation: {exc}"))
            continue
        problems = validate_structure_case(g, case)
        if isinstance(case, LowDegreeCase) and find_induced_embedding(g, c6) is not None:
            if case.bound != 2:
                problems.append(f"six-cycle present but bound {case.bound} != 2")
        if g == petersen and not isinstance(case, PetersenGraphCase):
            problems.append("Petersen did not resolve to the Petersen case")
        if problems:
            failures.append(FailureExhibit(to_graph6(g), "; ".join(problems)))
    return (
        f"connected H-free graphs n<={max_n} plus {samples} random n in {{9,10}} plus Petersen",
        checked,
        failures,
    )


def _campaign_thm16(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    petersen = catalog_lookup("petersen")
    for g in _structure_corpus("H", max_n, seed, samples):
        checked += 1
        problems = []
        try:
            cert = color_diamond_free_certified(g)
        except TheoremViolationError as exc:
            failures.append(FailureExhibit(to_graph6(g), f"theorem violation: {exc}"))
            continue
        if not verify_coloring(g, cert):
            problems.append("certificate failed verification")
        omega = len(cert.clique_witness)
        if cert.color_count > omega + 1:
            problems.append(f"{cert.color_count} colors above {omega}+1")
        chi, _ = chromatic_number_exact(g)
        if chi > cert.color_count:
            problems.append(f"exact chi {chi} above produced count {cert.color_count}")
        if g == petersen and cert.color_count != 3:
            problems.append(f"Petersen colored with {cert.color_count} != 3")
        if problems:
            failures.append(FailureExhibit(to_graph6(g), "; ".join(problems)))
    return (
        f"connected H-free graphs n<={max_n} plus {samples} random n in {{9,10}} plus Petersen",
        checked,
        failures,
    )


# -- blowup coloring: orbit enumeration and the independent cover oracle --------


@lru_cache(maxsize=1)
def _petersen_aut_mappings() -> tuple[tuple[int, ...], ...]:
    pet = catalog_lookup("petersen")
    return tuple(a.mapping for a in enumerate_automorphisms(pet))


def weight_orbit_representatives(max_weight: int) -> tuple[tuple[int, ...], ...]:
    """One representative per automorphism orbit of {0..max_weight}^10."""
    auts = _petersen_aut_mappings()
    reps: set[tuple[int, ...]] = set()
    from itertools import product

    for w in product(range(max_weight + 1), repeat=10):
        canon = min(tuple(w[a[i]] for i in range(10)) for a in auts)
        reps.add(canon)
    return tuple(sorted(reps))


@lru_cache(maxsize=1)
def _petersen_stable_subsets() -> tuple[tuple[int, ...], ...]:
    """All non-empty stable subsets of the Petersen template, by subset scan.

    Independent of the production cover family (which holds only maximal
    sets found by complement clique search).
    """
    pet = catalog_lookup("petersen")
    rows = pet.rows()
    out = []
    for mask in range(1, 1 << 10):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if rows[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            out.append(bits_to_tuple(mask))
    return tuple(out)


def brute_force_min_cover(weights: tuple[int, ...]) -> int:
    """Iterative-deepening exact minimum stable-set cover (oracle route).

    Deepening starts from elementary lower bounds: no class holds both ends
    of a template edge, and no class holds more vertices than the largest
    stable subset.
    """
    subsets = _petersen_stable_subsets()
    containing: list[list[tuple[int, ...]]] = [[] for _ in range(10)]
    for s in subsets:
        for v in s:
            containing[v].append(s)
    pet = catalog_lookup("petersen")
    edges = tuple(pet.edges())
    capacity = max(len(s) for s in subsets)

    def lower_bound(residual: tuple[int, ...]) -> int:
        lb = -(-sum(residual) // capacity)
        for u, v in edges:
            lb = max(lb, residual[u] + residual[v])
        return max(lb, max(residual))

    def can(residual: tuple[int, ...], k: int) -> bool:
        if not any(residual):
            return True
        if lower_bound(residual) > k:
            return False
        first = next(i for i, r in enumerate(residual) if r > 0)
        for s in containing[first]:
            nxt = list(residual)
            for v in s:
                if nxt[v]:
                    nxt[v] -= 1
            if can(tuple(nxt), k - 1):
                return True
        return False

    k = lower_bound(tuple(weights)) if any(weights) else 0
    while not can(tuple(weights), k):
        k += 1
    return k


def _campaign_blowup_color(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    for w in weight_orbit_representatives(2):
        checked += 1
        problems = []
        try:
            classes, count = color_petersen_blowup(w)
        except TheoremViolationError as exc:
            failures.append(FailureExhibit("", f"weights {w}: {exc}"))
            continue
        brute = brute_force_min_cover(w)
        if count != brute:
            problems.append(f"cover count {count} != brute-force minimum {brute}")
        omega = blowup_clique_number(w)
        if count > (5 * omega + 3) // 4:
            problems.append(f"cover count {count} above ceil(5*{omega}/4)")
        g, part = build_blowup(catalog_lookup("petersen"), w)
        coloring = expand_blowup_coloring(part, classes)
        for u, v in g.edges():
            if coloring[u] == coloring[v]:
                problems.append("expanded coloring is not proper")
                break
        if problems:
            failures.append(
                FailureExhibit(to_graph6(g), f"weights {w}: " + "; ".join(problems))
            )
    return "weight vectors in {0,1,2}^10 up to Petersen automorphism", checked, failures


def _campaign_q_validation(max_n: int, seed: int, samples: int) -> _Check:
    failures: list[FailureExhibit] = []
    checked = 0
    p7 = catalog_lookup("p7")
    c7 = catalog_lookup("c7")
    for name in ("q1", "q2", "q3", "q4", "q5"):
        q = catalog_lookup(name)
        checked += 1
        problems = []
        if find_induced_embedding(q, p7) is not None:
            problems.append("contains an induced seven-path")
        if find_induced_embedding(q, c7) is not None:
            problems.append("contains an induced seven-cycle")
        if name in ("q1", "q2", "q3", "q4"):
            if find_dominating_split(q, "split") is not None:
                problems.append("unexpectedly split-dominated")
        if name in ("q2", "q5"):
            if find_dominating_split(q, "complete-split") is not None:
                problems.append("unexpectedly complete-split-dominated")
        if problems:
            failures.append(FailureExhibit(to_graph6(q), f"{name}: " + "; ".join(problems)))
    return "reconstructed q1..q5 obstructions", checked, failures


_CAMPAIGNS: dict[str, Callable[[int, int, int], _Check]] = {
    "lemma1": _campaign_lemma1,
    "lemma2": _campaign_lemma2,
    "thm3": _campaign_thm3,
    "thm3-reverse": _campaign_thm3_reverse,
    "thm4": _campaign_thm4,
    "thm4-reverse": _campaign_thm4_reverse,
    "thm6": _campaign_thm6,
    "thm7": _campaign_thm7,
    "thm10": _campaign_thm10,
    "thm12": _campaign_thm12,
    "thm14": _campaign_thm14,
    "thm15": _campaign_thm15,
    "thm16": _campaign_thm16,
    "blowup-color": _campaign_blowup_color,
    "q-validation": _campaign_q_validation,
}
