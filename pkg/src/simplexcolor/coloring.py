"""Peeling, greedy (d+1)-coloring, verification and an exact chromatic oracle.

Coloring works by induction made explicit: repeatedly remove a simplex that
has an exposed facet (multiplicity 1), record the order, then replay it in
reverse giving each simplex the smallest color unused by its already-colored
neighbors.  A simplex with an exposed facet has at most d neighbors, so d+1
colors always suffice.

Two independent ways to find an exposed simplex are provided.  The
combinatorial finder just reads facet multiplicities.  The geometric finder
proves exposure from coordinates alone: starting from a hull vertex it
descends through a strictly shrinking chain of simplex subsets, each pinned
by a face lying on the subset's convex hull, until some facet containing the
current face sits on the hull, which forces that facet to be unglued.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from itertools import combinations

from .dual import DualGraph, build_dual
from .errors import InputError, InvariantError, UnrealizableComplexError
from .geometry import extreme_point, supporting_hyperplane
from .model import Coloring, Complex, Facet, facet_multiplicity

COMBINATORIAL = "combinatorial"
GEOMETRIC = "geometric"


@dataclass(frozen=True)
class TraceStep:
    """One level of the nested-hull descent: the pinning face and the size
    of the simplex subset sharing it."""

    anchor_ids: tuple[int, ...]
    subset_size: int


@dataclass(frozen=True)
class PeelCertificate:
    """Removal order with one exposed-facet witness per step."""

    steps: tuple[tuple[int, Facet], ...]
    method: str


@dataclass(frozen=True)
class OracleResult:
    chromatic_number: int
    optimal_coloring: Coloring


def certificate_to_dict(cert: PeelCertificate) -> dict:
    return {
        "method": cert.method,
        "steps": [[i, list(f.vertex_ids)] for i, f in cert.steps],
    }


def certificate_from_dict(data: dict) -> PeelCertificate:
    for key in ("method", "steps"):
        if key not in data:
            raise InputError(f"certificate JSON is missing the {key!r} field")
    steps = tuple((int(i), Facet(tuple(ids))) for i, ids in data["steps"])
    return PeelCertificate(steps, data["method"])


def save_certificate(cert: PeelCertificate, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(certificate_to_dict(cert), fh, separators=(",", ":"))
        fh.write("\n")


def load_certificate(path: str) -> PeelCertificate:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc.msg}") from exc
    return certificate_from_dict(data)


# ---------------------------------------------------------------------------
# Exposed-simplex finders


def find_exposed_combinatorial(c: Complex) -> tuple[int, Facet]:
    """Lowest-index simplex with a multiplicity-1 facet, with its
    lexicographically smallest exposed facet as witness."""
    if not c.simplices:
        raise InputError("empty complex has no exposed simplex")
    mult = facet_multiplicity(c)
    for i, s in enumerate(c.simplices):
        exposed = sorted(f for f in s.facets() if mult[f] == 1)
        if exposed:
            return i, exposed[0]
    raise UnrealizableComplexError(len(c.simplices))


def _find_exposed_geometric(c: Complex, alive: list[int]):
    """Exposed simplex among `alive`, found by nested-hull descent.

    The anchor face starts as the lexicographically minimal used vertex (a
    hull vertex) and grows strictly at each level; the working set is every
    alive simplex containing the anchor.  A facet containing the anchor that
    lies on the working set's hull must be exposed: any simplex glued to it
    would contain the anchor, hence belong to the working set, hence sit on
    the wrong side of its own supporting hyperplane.
    """
    if not alive:
        raise InputError("empty complex has no exposed simplex")
    d = c.dimension
    used_ids = sorted({v for i in alive for v in c.simplices[i].vertex_ids})
    used_points = [c.vertices[v] for v in used_ids]
    v = used_ids[extreme_point(used_points)]

    anchor = (v,)
    work = [i for i in alive if v in c.simplices[i].vertex_ids]
    trace = [TraceStep(anchor, len(work))]

    while True:
        cloud_ids = sorted({u for i in work for u in c.simplices[i].vertex_ids})
        cloud = [c.vertices[u] for u in cloud_ids]
        anchor_set = set(anchor)

        hull_cache: dict[tuple[int, ...], bool] = {}

        def on_hull(face_ids: tuple[int, ...]) -> bool:
            if face_ids not in hull_cache:
                pts = [c.vertices[u] for u in face_ids]
                hull_cache[face_ids] = supporting_hyperplane(pts, cloud) is not None
            return hull_cache[face_ids]

        # A facet containing the anchor on the hull of the working set is
        # exposed in the whole residual complex.  For inputs that are not
        # geometrically consistent (overlapping simplices) the exposure
        # argument breaks down, so the witness is verified before returning.
        for i in work:
            for f in sorted(c.simplices[i].facets()):
                if anchor_set <= set(f.vertex_ids) and on_hull(f.vertex_ids):
                    owners = sum(
                        1 for j in alive
                        if set(f.vertex_ids) <= set(c.simplices[j].vertex_ids)
                    )
                    if owners != 1:
                        raise UnrealizableComplexError(len(alive))
                    return i, f, tuple(trace)

        # Otherwise grow the anchor: the largest face strictly containing it
        # (below facet dimension) that lies on the hull.
        grown = None
        for size in range(d - 1, len(anchor), -1):
            candidates = set()
            for i in work:
                ids = c.simplices[i].vertex_ids
                if size >= len(ids):
                    continue
                others = [u for u in ids if u not in anchor_set]
                for extra in combinations(others, size - len(anchor)):
                    candidates.add(tuple(sorted(anchor + extra)))
            for face_ids in sorted(candidates):
                if on_hull(face_ids):
                    grown = face_ids
                    break
            if grown:
                break
        if grown is None:
            raise InvariantError(
                "nested-hull descent found no hull face above the anchor; "
                "the complex is not geometrically consistent"
            )
        new_work = [
            i for i in work if set(grown) <= set(c.simplices[i].vertex_ids)
        ]
        if len(new_work) >= len(work):
            raise InvariantError(
                "nested-hull descent failed to shrink the working set"
            )
        anchor = grown
        work = new_work
        trace.append(TraceStep(anchor, len(work)))


def find_exposed_geometric(c: Complex):
    """Geometric counterpart of find_exposed_combinatorial.

    Returns (simplex index, exposed facet, trace), where the trace records
    the strictly decreasing sizes of the nested working sets.
    """
    return _find_exposed_geometric(c, list(range(len(c.simplices))))


# ---------------------------------------------------------------------------
# Peeling


def _peel_combinatorial(c: Complex) -> PeelCertificate:
    n = len(c.simplices)
    owners: dict[Facet, list[int]] = {}
    facets_of: list[tuple[Facet, ...]] = []
    for i, s in enumerate(c.simplices):
        fs = s.facets()
        facets_of.append(fs)
        for f in fs:
            owners.setdefault(f, []).append(i)
    for f, own in owners.items():
        if len(own) > 2:
            raise InputError(
                f"invalid complex: facet {f.vertex_ids} shared by {len(own)} simplices"
            )

    mult = {f: len(own) for f, own in owners.items()}
    alive = [True] * n
    heap = [i for i in range(n) if any(mult[f] == 1 for f in facets_of[i])]
    heapq.heapify(heap)
    steps: list[tuple[int, Facet]] = []

    while heap:
        i = heapq.heappop(heap)
        if not alive[i]:
            continue
        witness = min(f for f in facets_of[i] if mult[f] == 1)
        steps.append((i, witness))
        alive[i] = False
        for f in facets_of[i]:
            mult[f] -= 1
            owners[f].remove(i)
            if mult[f] == 1:
                j = owners[f][0]
                if alive[j]:
                    heapq.heappush(heap, j)

    if len(steps) != n:
        raise UnrealizableComplexError(n - len(steps))
    return PeelCertificate(tuple(steps), COMBINATORIAL)


def _peel_geometric(c: Complex) -> PeelCertificate:
    alive = list(range(len(c.simplices)))
    steps: list[tuple[int, Facet]] = []
    while alive:
        i, witness, _trace = _find_exposed_geometric(c, alive)
        steps.append((i, witness))
        alive.remove(i)
    return PeelCertificate(tuple(steps), GEOMETRIC)


def peel(c: Complex, method: str = COMBINATORIAL) -> PeelCertificate:
    """Remove exposed simplices until the complex is empty.

    Raises UnrealizableComplexError if some residual complex has no
    exposed facet (impossible for geometrically valid complexes).
    """
    if method == COMBINATORIAL:
        return _peel_combinatorial(c)
    if method == GEOMETRIC:
        return _peel_geometric(c)
    raise InputError(f"unknown peel method {method!r}")


# ---------------------------------------------------------------------------
# Coloring


def color(c: Complex, cert: PeelCertificate) -> Coloring:
    """Replay the certificate backwards, greedily assigning the smallest
    color in {0..d} not used by an already-colored neighbor."""
    n = len(c.simplices)
    if sorted(i for i, _ in cert.steps) != list(range(n)):
        raise InputError("certificate does not cover the complex exactly once")
    g = build_dual(c)
    d = c.dimension
    colors = [-1] * n
    for i, _witness in reversed(cert.steps):
        used = {colors[j] for j in g.neighbors(i) if colors[j] >= 0}
        chosen = next(k for k in range(d + 2) if k not in used)
        if chosen > d:
            raise InvariantError(
                f"simplex {i} saw {len(used)} colored neighbors; certificate is not a peel order"
            )
        colors[i] = chosen
    return Coloring(tuple(colors))


def verify_coloring(c: Complex, col: Coloring):
    """True plus empty list iff all colors lie in {0..d} and every pair of
    facet-sharing simplices differs; otherwise False plus violations."""
    n = len(c.simplices)
    if len(col.colors) != n:
        raise InputError(
            f"coloring has {len(col.colors)} entries for {n} simplices"
        )
    violations = []
    d = c.dimension
    for i, k in enumerate(col.colors):
        if not 0 <= k <= d:
            violations.append(("color-range", i, k))
    g = build_dual(c)
    for i, j, f in g.edges():
        if col.colors[i] == col.colors[j]:
            violations.append(("conflict", i, j, f.vertex_ids))
    return not violations, violations


# ---------------------------------------------------------------------------
# Exact chromatic number


def _greedy_dsatur(g: DualGraph) -> list[int]:
    n = g.node_count
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        best, key = None, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            k = (len(neighbor_colors[v]), g.degree(v), -v)
            if best is None or k > key:
                best, key = v, k
        chosen = next(k for k in range(n + 1) if k not in neighbor_colors[best])
        colors[best] = chosen
        for w in g.neighbors(best):
            neighbor_colors[w].add(chosen)
    return colors


def _max_clique_size(g: DualGraph) -> int:
    n = g.node_count
    best = 1 if n else 0
    nbrs = [set(g.neighbors(v)) for v in range(n)]

    def grow(current: int, candidates: set[int]):
        nonlocal best
        if current + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, current)
            return
        for v in sorted(candidates):
            candidates = candidates - {v}
            grow(current + 1, candidates & nbrs[v])
            if current + len(candidates) <= best:
                return

    grow(0, set(range(n)))
    return best


def _try_k_coloring(g: DualGraph, k: int):
    """A proper k-coloring, or None after exhausting the search tree."""
    n = g.node_count
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            kk = (len(neighbor_colors[v]), g.degree(v), -v)
            if key is None or kk > key:
                best, key = v, kk
        return best

    def assign(v: int, col: int, delta: list[int]):
        colors[v] = col
        for w in g.neighbors(v):
            if col not in neighbor_colors[w]:
                neighbor_colors[w].add(col)
                delta.append(w)

    def unassign(v: int, col: int, delta: list[int]):
        colors[v] = -1
        for w in delta:
            neighbor_colors[w].discard(col)

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        if len(neighbor_colors[v]) >= k:
            return False
        limit = min(k, used + 1)  # new colors introduced in order
        for col in range(limit):
            if col in neighbor_colors[v]:
                continue
            delta: list[int] = []
            assign(v, col, delta)
            if solve(done + 1, max(used, col + 1)):
                return True
            unassign(v, col, delta)
        return False

    return list(colors) if solve(0, 0) else None


def exact_chromatic(g: DualGraph, node_limit: int = 40) -> OracleResult:
    """Exact chromatic number by branch and bound.

    Lower bound from a maximum clique, upper bound from greedy coloring;
    the minimum feasible k in between is found by exhaustive backtracking,
    and infeasibility of k-1 is certified the same way.
    """
    n = g.node_count
    if n > node_limit:
        raise InputError(
            f"graph has {n} nodes, above the oracle limit {node_limit}"
        )
    if n == 0:
        return OracleResult(0, Coloring(()))
    greedy = _greedy_dsatur(g)
    upper = max(greedy) + 1
    lower = _max_clique_size(g)
    best = greedy
    chi = upper
    for k in range(lower, upper):
        sol = _try_k_coloring(g, k)
        if sol is not None:
            best, chi = sol, k
            break
    # Certify optimality by exhausting the search for one color fewer.
    if chi > 1 and _try_k_coloring(g, chi - 1) is not None:
        raise InvariantError("chromatic search found an improvement during certification")
    return OracleResult(chi, Coloring(tuple(best)))
