"""Automorphism groups, generator sets, and vertex/edge orbit partitions.

The group search is a plain backtracking over vertex images with degree and
partial-adjacency pruning; at the corpus scale (n <= 8, budget n <= 12) this
is fast and avoids an external canonical-labeling tool.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

AUTOMORPHISM_VERTEX_BUDGET = 12

Permutation = tuple[int, ...]


def identity_perm(n: int) -> Permutation:
    return tuple(range(n))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(v) = a(b(v))."""
    return tuple(a[b[v]] for v in range(len(a)))


def is_automorphism(g: Graph, sigma) -> bool:
    """True iff sigma maps edges to edges and non-edges to non-edges."""
    sigma = tuple(sigma)
    if len(sigma) != g.n or sorted(sigma) != list(range(g.n)):
        raise ValueError(f"not a permutation of [0, {g.n})")
    return all(g.has_edge(sigma[u], sigma[v]) for u, v in g.edges) and all(
        not g.has_edge(sigma[u], sigma[v])
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    )


def automorphism_group(g: Graph) -> list[Permutation]:
    """All automorphisms of g, in lexicographic order of the mapping.

    Backtracking assigns images to vertices 0,1,...,n-1 in turn, pruning on
    degree mismatch and on adjacency to already-placed vertices. Since edge
    count is preserved, edge->edge preservation against all placed vertices
    suffices.
    """
    if g.n > AUTOMORPHISM_VERTEX_BUDGET:
        raise ValueError(
            f"automorphism search budget is n <= {AUTOMORPHISM_VERTEX_BUDGET}, got {g.n}"
        )
    deg = g.degrees()
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)

    out: list[Permutation] = []
    image = [-1] * g.n
    used = [False] * g.n

    def place(v: int) -> None:
        if v == g.n:
            out.append(tuple(image))
            return
        for w in range(g.n):
            if used[w] or deg[w] != deg[v]:
                continue
            if any((u in adj[v]) != (image[u] in adj[w]) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            place(v + 1)
            used[w] = False
        image[v] = -1

    place(0)
    return out


def _closure(gens: list[Permutation], n: int) -> set[Permutation]:
    """Group generated by gens, by breadth-first multiplication."""
    seen = {identity_perm(n)}
    frontier = [identity_perm(n)]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                c = compose(s, a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def generator_set(group: list[Permutation]) -> list[Permutation]:
    """Greedy generating subset of a closed permutation group.

    Repeatedly adds the lexicographically smallest element not yet in the
    closure of the chosen generators. The identity appears only for the
    trivial group.
    """
    if not group:
        raise ValueError("empty group")
    n = len(group[0])
    ident = identity_perm(n)
    if len(group) == 1:
        return [ident]
    gens: list[Permutation] = []
    have = {ident}
    for sigma in sorted(group):
        if sigma not in have:
            gens.append(sigma)
            have = _closure(gens, n)
            if len(have) == len(group):
                break
    return gens


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # root at the smaller element so labels stay order-friendly
            if ri > rj:
                ri, rj = rj, ri
            self.parent[rj] = ri

    def labels(self) -> tuple[int, ...]:
        """Contiguous 0-based class ids assigned by smallest member."""
        out = []
        remap: dict[int, int] = {}
        for i in range(len(self.parent)):
            r = self.find(i)
            if r not in remap:
                remap[r] = len(remap)
            out.append(remap[r])
        return tuple(out)


@dataclass(frozen=True)
class OrbitPartition:
    """Vertex and edge orbit labelings induced by a set of automorphisms.

    Orbit ids are contiguous and assigned by smallest member, so the orbit
    containing vertex 0 (edge 0) always has id 0.
    """

    vertex_orbit: tuple[int, ...]
    edge_orbit: tuple[int, ...]

    @property
    def num_vertex_orbits(self) -> int:
        return max(self.vertex_orbit) + 1 if self.vertex_orbit else 0

    @property
    def num_edge_orbits(self) -> int:
        return max(self.edge_orbit) + 1 if self.edge_orbit else 0

    def is_discrete(self, g: Graph) -> bool:
        return self.num_vertex_orbits == g.n and self.num_edge_orbits == g.m


def orbits_of(g: Graph, sigmas, verify: bool = True) -> OrbitPartition:
    """Orbit partition from the closure of the given automorphisms.

    Union-find: each sigma unites v with sigma(v) and edge (u,v) with
    edge (sigma(u), sigma(v)); the transitive closure over all sigmas gives
    the equivalence classes. `verify=False` skips the automorphism check for
    permutations already known to come from the group.
    """
    vuf = UnionFind(g.n)
    euf = UnionFind(g.m)
    for sigma in sigmas:
        sigma = tuple(sigma)
        if verify and not is_automorphism(g, sigma):
            raise ValueError(f"permutation {sigma} is not an automorphism")
        for v in range(g.n):
            vuf.union(v, sigma[v])
        for i, (u, v) in enumerate(g.edges):
            su, sv = sigma[u], sigma[v]
            if su > sv:
                su, sv = sv, su
            euf.union(i, g.edge_index[(su, sv)])
    return OrbitPartition(vertex_orbit=vuf.labels(), edge_orbit=euf.labels())


def discrete_partition(g: Graph) -> OrbitPartition:
    return OrbitPartition(
        vertex_orbit=tuple(range(g.n)), edge_orbit=tuple(range(g.m))
    )


def distinct_orbit_partitions(
    g: Graph, group: list[Permutation] | None = None
) -> list[OrbitPartition]:
    """Orbit partitions of each single automorphism, deduplicated.

    Automorphisms that induce identical (vertex, edge) labelings collapse to
    one entry. Order follows the group's lexicographic order, so the identity's
    discrete partition comes first.
    """
    if group is None:
        group = automorphism_group(g)
    seen: dict[tuple, OrbitPartition] = {}
    for sigma in group:
        p = orbits_of(g, [sigma], verify=False)
        key = (p.vertex_orbit, p.edge_orbit)
        if key not in seen:
            seen[key] = p
    return list(seen.values())
