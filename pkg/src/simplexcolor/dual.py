"""Facet-adjacency dual graph of a complex, degree statistics and cliques.

Nodes are simplices; an edge joins two simplices exactly when they share d
vertex indices (a whole facet).  Every node has degree at most d+1, which
keeps clique search linear: a clique of size r must sit inside a closed
neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .geometry import Hyperplane, _nullspace, _sub, side_of
from .model import Complex, Facet


@dataclass(frozen=True)
class DualGraph:
    node_count: int
    adjacency: tuple[tuple[tuple[int, Facet], ...], ...]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, _ in self.adjacency[i])

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edges(self) -> list[tuple[int, int, Facet]]:
        out = []
        for i, nbrs in enumerate(self.adjacency):
            for j, f in nbrs:
                if i < j:
                    out.append((i, j, f))
        return out


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    component_count: int
    chromatic_upper_bound: int
    clique_exclusion_bound: int | None  # None when the K_r bound's precondition fails


@dataclass(frozen=True)
class CliqueReport:
    clique_nodes: tuple[int, ...]
    distinct_vertex_ids: frozenset[int]
    vertex_count_ok: bool
    halfspace_condition_ok: bool


def build_dual(c: Complex) -> DualGraph:
    """Adjacency over shared facets; rejects facets owned by > 2 simplices."""
    owners: dict[Facet, list[int]] = {}
    for i, s in enumerate(c.simplices):
        for f in s.facets():
            owners.setdefault(f, []).append(i)
    adjacency: list[list[tuple[int, Facet]]] = [[] for _ in c.simplices]
    for f, own in owners.items():
        if len(own) > 2:
            raise InputError(
                f"invalid complex: facet {f.vertex_ids} shared by {len(own)} simplices"
            )
        if len(own) == 2:
            i, j = own
            adjacency[i].append((j, f))
            adjacency[j].append((i, f))
    return DualGraph(
        len(c.simplices),
        tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def stats(g: DualGraph, d: int) -> GraphStats:
    """Degree and component counts plus the no-K_{d+2} chromatic bound.

    The bound floor((r-1)/r * (max_degree+2)) with r = d+2 applies only when
    4 <= r <= max_degree+1; outside that range the greedy bound
    max_degree+1 is reported instead.
    """
    n = g.node_count
    max_degree = max((g.degree(i) for i in range(n)), default=0)

    components = 0
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        components += 1
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)

    r = d + 2
    exclusion_bound = None
    if 4 <= r <= max_degree + 1:
        exclusion_bound = (r - 1) * (max_degree + 2) // r
    upper = exclusion_bound if exclusion_bound is not None else max_degree + 1
    return GraphStats(max_degree, components, upper, exclusion_bound)


def _is_clique(g: DualGraph, nodes: tuple[int, ...]) -> bool:
    neighbor_sets = {v: set(g.neighbors(v)) for v in nodes}
    return all(b in neighbor_sets[a] for a, b in combinations(nodes, 2))


def find_clique(g: DualGraph, r: int):
    """Some r-clique as a sorted node list, or None.

    Degrees are bounded by d+1, so every r-clique lies inside the closed
    neighborhood of its minimal node; the scan is linear in nodes.
    """
    if r < 2:
        raise InputError(f"clique size must be >= 2, got {r}")
    for v in range(g.node_count):
        above = [u for u in g.neighbors(v) if u > v]
        if len(above) < r - 1:
            continue
        for rest in combinations(above, r - 1):
            if _is_clique(g, rest):
                return [v] + list(rest)
    return None


def find_all_cliques(g: DualGraph, r: int) -> list[list[int]]:
    """Every r-clique, each reported once (sorted by its node list)."""
    if r < 2:
        raise InputError(f"clique size must be >= 2, got {r}")
    out = []
    for v in range(g.node_count):
        above = [u for u in g.neighbors(v) if u > v]
        for rest in combinations(above, r - 1):
            if _is_clique(g, rest):
                out.append([v] + list(rest))
    return out


def _hyperplane_through(c: Complex, ids: list[int]) -> Hyperplane:
    """The hyperplane spanned by d affinely independent vertices."""
    d = c.dimension
    pts = [c.vertices[i] for i in ids]
    normals = _nullspace([_sub(p, pts[0]) for p in pts[1:]], d)
    if len(normals) != 1:
        raise InputError(f"vertices {ids} do not span a hyperplane")
    n = normals[0]
    offset = sum(a * b for a, b in zip(n, pts[0].coords))
    return Hyperplane(n, offset)


def analyze_max_clique_configuration(c: Complex, clique: list[int]) -> CliqueReport:
    """Check the two structural facts about a K_{d+1} of glued simplices.

    vertex_count_ok: the d+1 simplices use exactly d+2 distinct vertices.
    halfspace_condition_ok: with the common vertex as the apex and the base
    facet of the lowest-index clique simplex as reference hyperplane, the
    one vertex outside that simplex lies strictly on the same side as the
    apex.
    """
    d = c.dimension
    if len(clique) != d + 1 or len(set(clique)) != d + 1:
        raise InputError(f"expected {d + 1} distinct simplex indices, got {clique}")
    for i in clique:
        if not 0 <= i < len(c.simplices):
            raise InputError(f"simplex index {i} out of range")
    id_sets = {i: set(c.simplices[i].vertex_ids) for i in clique}
    for a, b in combinations(clique, 2):
        if len(id_sets[a] & id_sets[b]) != d:
            raise InputError(
                f"simplices {a} and {b} do not share a facet; input is not a clique"
            )

    union: set[int] = set()
    for i in clique:
        union |= id_sets[i]
    vertex_count_ok = len(union) == d + 2
    if not vertex_count_ok:
        return CliqueReport(tuple(sorted(clique)), frozenset(union), False, False)

    # The apex is the one vertex every clique simplex contains.
    common = set.intersection(*id_sets.values())
    if len(common) != 1:
        return CliqueReport(tuple(sorted(clique)), frozenset(union), True, False)
    apex = next(iter(common))

    first = min(clique)
    base_ids = sorted(id_sets[first] - {apex})
    outside = next(iter(union - id_sets[first]))
    h = _hyperplane_through(c, base_ids)
    side_apex = side_of(h, c.vertices[apex])
    side_outside = side_of(h, c.vertices[outside])
    halfspace_ok = side_apex != 0 and side_apex == side_outside
    return CliqueReport(tuple(sorted(clique)), frozenset(union), True, halfspace_ok)
