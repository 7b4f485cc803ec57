"""Dart-based combinatorial maps of embedded multigraphs on the sphere.

A map on darts ``0..2E-1`` is a pair of permutations: ``alpha`` pairs the two
darts of every edge, ``sigma`` lists the darts counterclockwise around each
vertex.  Faces are the cycles of ``sigma o alpha``.  Loops and parallel edges
are ordinary citizens, which the doubling constructions rely on.

Automorphisms are found by brute force: a connected map automorphism is
determined by the image of a single dart, so each candidate root image is
extended along ``sigma`` and ``alpha`` (or ``sigma^{-1}`` and ``alpha`` for
reflections) and kept when it closes up to a bijection.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import (BadParameter, BudgetExceeded, DisconnectedMap, InvalidMap,
                     NotPerfectMatchingOrbit, NotThreeRegular, UnknownSolid)

DEFAULT_MAX_DARTS = 200


def _cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(cyc)
    return out


def _invert(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class CombinatorialMap:
    alpha: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        n = len(self.alpha)
        if len(self.sigma) != n or n % 2:
            raise InvalidMap("alpha and sigma must act on the same even number of darts")
        if sorted(self.sigma) != list(range(n)) or sorted(self.alpha) != list(range(n)):
            raise InvalidMap("alpha and sigma must be permutations")
        for d in range(n):
            if self.alpha[d] == d or self.alpha[self.alpha[d]] != d:
                raise InvalidMap("alpha must be a fixed-point-free involution")

    # -- construction helpers -------------------------------------------
    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[Hashable]]) -> "CombinatorialMap":
        """Build from ccw lists of edge keys, one list per vertex.

        Every key must occur exactly twice (twice at one vertex for a loop).
        Darts are numbered in reading order.
        """
        alpha: dict[int, int] = {}
        first: dict[Hashable, int] = {}
        done: set = set()
        sigma = []
        d = 0
        for keys in rotation:
            if not keys:
                raise InvalidMap("isolated vertices are not representable")
            base = d
            for j, k in enumerate(keys):
                sigma.append(base + (j + 1) % len(keys))
                if k in done:
                    raise InvalidMap(f"edge key {k!r} used more than twice")
                if k in first:
                    other = first.pop(k)
                    alpha[d], alpha[other] = other, d
                    done.add(k)
                else:
                    first[k] = d
                d += 1
        if first:
            raise InvalidMap(f"unpaired edge keys: {sorted(map(repr, first))}")
        return cls(tuple(alpha[i] for i in range(d)), tuple(sigma))

    @classmethod
    def from_faces(cls, faces: Sequence[Sequence[int]]) -> "CombinatorialMap":
        """Build a simple polyhedral map from consistently oriented face cycles."""
        where: dict[tuple[int, int], tuple[int, int]] = {}
        for fi, face in enumerate(faces):
            for j in range(len(face)):
                e = (face[j], face[(j + 1) % len(face)])
                if e in where:
                    raise InvalidMap(f"directed edge {e} appears twice")
                where[e] = (fi, j)
        darts = sorted(where)
        index = {e: i for i, e in enumerate(darts)}
        alpha, sigma = [], []
        for (u, v) in darts:
            if (v, u) not in index:
                raise InvalidMap(f"edge {(u, v)} has no reverse")
            alpha.append(index[(v, u)])
            fi, j = where[(u, v)]
            face = faces[fi]
            pred = face[(j - 1) % len(face)]
            sigma.append(index[(u, pred)])
        return cls(tuple(alpha), tuple(sigma))

    # -- basic structure --------------------------------------------------
    @property
    def num_darts(self) -> int:
        return len(self.alpha)

    @cached_property
    def vertices(self) -> list[list[int]]:
        return _cycles(self.sigma)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for i, cyc in enumerate(self.vertices):
            for d in cyc:
                out[d] = i
        return tuple(out)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        """Face permutation sigma o alpha."""
        return tuple(self.sigma[self.alpha[d]] for d in range(self.num_darts))

    @cached_property
    def faces(self) -> list[list[int]]:
        return _cycles(self.phi)

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        return _invert(self.sigma)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return self.num_darts // 2

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    @cached_property
    def num_components(self) -> int:
        parent = list(range(self.num_darts))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d in range(self.num_darts):
            for e in (self.alpha[d], self.sigma[d]):
                ra, rb = find(d), find(e)
                if ra != rb:
                    parent[ra] = rb
        return len({find(d) for d in range(self.num_darts)})

    def is_connected(self) -> bool:
        return self.num_components <= 1

    def is_spherical(self) -> bool:
        """Every connected component is a sphere: V - E + F = 2 per component."""
        return self.euler_characteristic() == 2 * self.num_components

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def degrees(self) -> list[int]:
        return [len(c) for c in self.vertices]

    def is_regular(self, k: int) -> bool:
        return bool(self.vertices) and all(len(c) == k for c in self.vertices)

    def face_degrees(self) -> Counter:
        return Counter(len(f) for f in self.faces)

    def edge_id(self, d: int) -> int:
        return min(d, self.alpha[d])

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(d, self.alpha[d]) for d in range(self.num_darts) if d < self.alpha[d]]

    def edge_ends(self, e: int) -> tuple[int, int]:
        return self.vertex_of[e], self.vertex_of[self.alpha[e]]

    def is_simple(self) -> bool:
        seen = set()
        for d, dd in self.edges:
            u, v = self.vertex_of[d], self.vertex_of[dd]
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def rotation(self) -> list[list[int]]:
        """Per vertex, the ccw list of darts starting from its smallest dart."""
        return [list(c) for c in self.vertices]

    # -- serialization ----------------------------------------------------
    def to_json_obj(self) -> dict:
        return {"alpha": list(self.alpha), "sigma": list(self.sigma)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CombinatorialMap":
        return cls(tuple(obj["alpha"]), tuple(obj["sigma"]))

    @classmethod
    def from_json(cls, text: str) -> "CombinatorialMap":
        return cls.from_json_obj(json.loads(text))

    def summary(self) -> str:
        return (f"V={self.num_vertices} E={self.num_edges} F={self.num_faces} "
                f"degrees={sorted(set(self.degrees()))}")


# ---------------------------------------------------------------------------
# Elementary families
# ---------------------------------------------------------------------------

def cycle_map(k: int) -> CombinatorialMap:
    """The cycle C_k drawn as a circle (k = 1 is a loop, k = 2 a digon)."""
    if k < 1:
        raise BadParameter("cycle_map needs k >= 1")
    return CombinatorialMap.from_rotation([[i, (i - 1) % k] for i in range(k)])


def dipole_map(edges: int) -> CombinatorialMap:
    """Two vertices joined by ``edges`` parallel edges."""
    if edges < 2:
        raise BadParameter("dipole_map needs at least 2 edges")
    return CombinatorialMap.from_rotation([list(range(edges)), list(reversed(range(edges)))])


def bouquet_map(loops: int) -> CombinatorialMap:
    """One vertex carrying ``loops`` side-by-side loops."""
    if loops < 1:
        raise BadParameter("bouquet_map needs at least one loop")
    return CombinatorialMap.from_rotation([[j for j in range(loops) for _ in (0, 1)]])


def prism_map(k: int) -> CombinatorialMap:
    """Inner k-cycle t_i and outer k-cycle b_i joined by rungs t_i b_i.

    Edge keys: ("T", i) = t_i t_{i+1}, ("B", i) = b_i b_{i+1}, ("R", i) = t_i b_i.
    """
    if k < 3:
        raise BadParameter("prism_map needs k >= 3")
    rot = [[("T", i), ("T", (i - 1) % k), ("R", i)] for i in range(k)]
    rot += [[("B", i), ("R", i), ("B", (i - 1) % k)] for i in range(k)]
    return CombinatorialMap.from_rotation(rot)


def prism_rungs(k: int) -> list[int]:
    """Edge ids (smallest dart) of the rungs of ``prism_map(k)``."""
    # dart of ("R", i) at t_i is slot 2 of vertex i
    m = prism_map(k)
    return sorted(m.edge_id(3 * i + 2) for i in range(k))


def antiprism_map(k: int) -> CombinatorialMap:
    """Inner k-cycle t_i, outer k-cycle b_i, with b_i adjacent to t_i and t_{i+1}.

    k = 2 gives the digonal antiprism, a 4-regular multigraph on 4 vertices.
    """
    if k < 2:
        raise BadParameter("antiprism_map needs k >= 2")
    rot = [[("T", i), ("T", (i - 1) % k), ("U", (i - 1) % k), ("D", i)] for i in range(k)]
    rot += [[("B", i), ("U", i), ("D", i), ("B", (i - 1) % k)] for i in range(k)]
    return CombinatorialMap.from_rotation(rot)


_TETRA_FACES = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def _icosahedron_faces() -> list[tuple[int, ...]]:
    top, bottom = 0, 11
    u = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(top, u[i], u[j]), (u[i], lo[i], u[j]),
                  (u[j], lo[i], lo[j]), (bottom, lo[j], lo[i])]
    return faces


def dual(m: CombinatorialMap) -> CombinatorialMap:
    """Vertices and faces exchange roles."""
    return CombinatorialMap(m.alpha, m.phi)


def platonic(name: str) -> CombinatorialMap:
    if name == "tetrahedron":
        return CombinatorialMap.from_faces(_TETRA_FACES)
    if name == "cube":
        return prism_map(4)
    if name == "octahedron":
        return antiprism_map(3)
    if name == "icosahedron":
        return CombinatorialMap.from_faces(_icosahedron_faces())
    if name == "dodecahedron":
        return dual(CombinatorialMap.from_faces(_icosahedron_faces()))
    raise UnknownSolid(name)


PLATONIC = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def truncate(m: CombinatorialMap) -> CombinatorialMap:
    """Vertex truncation: one new vertex per dart of ``m``.

    New vertex d has darts 3d (along the old edge), 3d+1 (towards sigma(d))
    and 3d+2 (towards sigma^{-1}(d)), in that ccw order.
    """
    n = m.num_darts
    alpha = [0] * (3 * n)
    sigma = [0] * (3 * n)
    for d in range(n):
        alpha[3 * d] = 3 * m.alpha[d]
        alpha[3 * d + 1] = 3 * m.sigma[d] + 2
        alpha[3 * d + 2] = 3 * m.sigma_inv[d] + 1
        sigma[3 * d], sigma[3 * d + 1], sigma[3 * d + 2] = 3 * d + 1, 3 * d + 2, 3 * d
    return CombinatorialMap(tuple(alpha), tuple(sigma))


def truncation_edges(m: CombinatorialMap) -> list[int]:
    """Edge ids of ``truncate(m)`` that come from edges of ``m``."""
    return sorted({min(3 * d, 3 * m.alpha[d]) for d in range(m.num_darts)})


def medial(m: CombinatorialMap) -> CombinatorialMap:
    """Medial map: a vertex per edge, an edge per corner (d, sigma(d)).

    Dart 2d sits at the midpoint of d's edge heading to the edge of sigma(d);
    dart 2d+1 heads to the edge of sigma^{-1}(d).
    """
    n = m.num_darts
    alpha = [0] * (2 * n)
    sigma = [0] * (2 * n)
    for d in range(n):
        alpha[2 * d] = 2 * m.sigma[d] + 1
        alpha[2 * d + 1] = 2 * m.sigma_inv[d]
    for d, dd in m.edges:
        # ccw around the midpoint: y_dd, x_d, y_d, x_dd
        cyc = [2 * dd + 1, 2 * d, 2 * d + 1, 2 * dd]
        for j in range(4):
            sigma[cyc[j]] = cyc[(j + 1) % 4]
    return CombinatorialMap(tuple(alpha), tuple(sigma))


# 3-regular entries are doubled along an edge orbit; 4-regular ones are used as is
ARCHIMEDEAN = {
    "truncated-tetrahedron": 12,
    "cuboctahedron": 12,
    "truncated-octahedron": 24,
    "truncated-cube": 24,
    "rhombicuboctahedron": 24,
    "truncated-icosahedron": 60,
    "truncated-dodecahedron": 60,
    "rhombicosidodecahedron": 60,
}


def archimedean(name: str) -> CombinatorialMap:
    if name == "truncated-tetrahedron":
        return truncate(platonic("tetrahedron"))
    if name == "cuboctahedron":
        return medial(platonic("cube"))
    if name == "truncated-octahedron":
        return truncate(platonic("octahedron"))
    if name == "truncated-cube":
        return truncate(platonic("cube"))
    if name == "rhombicuboctahedron":
        return medial(medial(platonic("cube")))
    if name == "truncated-icosahedron":
        return truncate(platonic("icosahedron"))
    if name == "truncated-dodecahedron":
        return truncate(platonic("dodecahedron"))
    if name == "rhombicosidodecahedron":
        return medial(medial(platonic("dodecahedron")))
    if name == "icosidodecahedron":
        return medial(platonic("dodecahedron"))
    raise UnknownSolid(name)


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MapAutomorphism:
    """Dart permutation with chirality +1 (sigma -> sigma) or -1 (sigma -> sigma^{-1})."""

    perm: tuple[int, ...]
    orientation: int = 1

    @property
    def preserves_orientation(self) -> bool:
        return self.orientation == 1

    def __call__(self, d: int) -> int:
        return self.perm[d]

    def compose(self, other: "MapAutomorphism") -> "MapAutomorphism":
        """self after other."""
        return MapAutomorphism(tuple(self.perm[x] for x in other.perm),
                               self.orientation * other.orientation)

    def inverse(self) -> "MapAutomorphism":
        return MapAutomorphism(_invert(self.perm), self.orientation)

    def is_identity(self) -> bool:
        return self.orientation == 1 and all(i == x for i, x in enumerate(self.perm))

    def is_automorphism_of(self, m: CombinatorialMap) -> bool:
        s = m.sigma if self.orientation == 1 else m.sigma_inv
        p = self.perm
        return all(p[m.sigma[d]] == s[p[d]] and p[m.alpha[d]] == m.alpha[p[d]]
                   for d in range(m.num_darts))

    def vertex_perm(self, m: CombinatorialMap) -> tuple[int, ...]:
        return tuple(m.vertex_of[self.perm[c[0]]] for c in m.vertices)

    def edge_perm(self, m: CombinatorialMap) -> dict[int, int]:
        return {d: m.edge_id(self.perm[d]) for d, _ in m.edges}


def identity_automorphism(m: CombinatorialMap) -> MapAutomorphism:
    return MapAutomorphism(tuple(range(m.num_darts)), 1)


def _extend(m: CombinatorialMap, root: int, target: int, orientation: int):
    n = m.num_darts
    img = [-1] * n
    used = [False] * n
    s_img = m.sigma if orientation == 1 else m.sigma_inv
    img[root] = target
    used[target] = True
    stack = [root]
    while stack:
        d = stack.pop()
        t = img[d]
        for src, dst in ((m.sigma[d], s_img[t]), (m.alpha[d], m.alpha[t])):
            if img[src] == -1:
                if used[dst]:
                    return None
                img[src] = dst
                used[dst] = True
                stack.append(src)
            elif img[src] != dst:
                return None
    return tuple(img)


def map_automorphisms(m: CombinatorialMap, max_darts: int = DEFAULT_MAX_DARTS) -> list[MapAutomorphism]:
    """All orientation-preserving and -reversing automorphisms of a connected map.

    Ordered deterministically: identity first, then by (reversing, image of dart 0).
    """
    n = m.num_darts
    if n > max_darts:
        raise BudgetExceeded(f"map has {n} darts, budget is {max_darts}")
    if n == 0:
        return [MapAutomorphism((), 1)]
    if not m.is_connected():
        raise DisconnectedMap("automorphism search needs a connected map")
    out = []
    seen = set()
    for orientation in (1, -1):
        for t in range(n):
            perm = _extend(m, 0, t, orientation)
            # where every vertex has degree <= 2, sigma == sigma^{-1} and the
            # same permutation would be counted once per chirality
            if perm is not None and perm not in seen:
                seen.add(perm)
                out.append(MapAutomorphism(perm, orientation))
    return out


def _orbits(size: int, perms: Iterable[Sequence[int]]) -> list[list[int]]:
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(size):
            a, b = find(i), find(p[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(size):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def vertex_orbits(m: CombinatorialMap, group=None, max_darts: int = DEFAULT_MAX_DARTS) -> list[list[int]]:
    group = map_automorphisms(m, max_darts) if group is None else group
    return _orbits(m.num_vertices, (g.vertex_perm(m) for g in group))


def edge_orbits(m: CombinatorialMap, group=None, max_darts: int = DEFAULT_MAX_DARTS) -> list[list[int]]:
    """Partition of edge ids (smallest dart of each edge) into Aut(m)-orbits."""
    group = map_automorphisms(m, max_darts) if group is None else group
    ids = [d for d, _ in m.edges]
    pos = {e: i for i, e in enumerate(ids)}
    perms = []
    for g in group:
        ep = g.edge_perm(m)
        perms.append([pos[ep[e]] for e in ids])
    return [[ids[i] for i in orb] for orb in _orbits(len(ids), perms)]


def is_vertex_transitive(m: CombinatorialMap, group=None, max_darts: int = DEFAULT_MAX_DARTS) -> bool:
    return len(vertex_orbits(m, group, max_darts)) <= 1


def is_edge_transitive(m: CombinatorialMap, group=None, max_darts: int = DEFAULT_MAX_DARTS) -> bool:
    return len(edge_orbits(m, group, max_darts)) <= 1


def is_perfect_matching(m: CombinatorialMap, edge_ids: Iterable[int]) -> bool:
    hit = Counter()
    for e in edge_ids:
        u, v = m.edge_ends(e)
        if u == v:
            return False
        hit[u] += 1
        hit[v] += 1
    return len(hit) == m.num_vertices and all(c == 1 for c in hit.values())


def matching_orbits(m: CombinatorialMap, group=None, max_darts: int = DEFAULT_MAX_DARTS) -> list[list[int]]:
    return [o for o in edge_orbits(m, group, max_darts) if is_perfect_matching(m, o)]


def double_edge_orbit(m: CombinatorialMap, orbit: Iterable[int],
                      max_darts: int = DEFAULT_MAX_DARTS) -> CombinatorialMap:
    """Replace every edge of ``orbit`` by two parallel edges bounding a bigon.

    ``orbit`` is a set of edges (any dart of each edge) forming a perfect
    matching of a 3-regular map, and the automorphisms stabilizing the set
    must still act transitively on vertices.  A full Aut(m)-orbit that is a
    matching always qualifies; the rungs of the square prism (the cube, which
    is edge-transitive) qualify through their stabilizer.
    """
    if not m.is_regular(3):
        raise NotThreeRegular("double_edge_orbit needs a 3-regular map")
    chosen = {m.edge_id(d) for d in orbit}
    if not is_perfect_matching(m, chosen):
        raise NotPerfectMatchingOrbit("edge set is not a perfect matching")
    group = map_automorphisms(m, max_darts)
    stab = [g for g in group if {m.edge_id(g(e)) for e in chosen} == chosen]
    if not is_vertex_transitive(m, stab):
        raise NotPerfectMatchingOrbit("edge set is not preserved by a vertex-transitive group")
    rot = []
    for cyc in m.vertices:
        keys: list = []
        for d in cyc:
            e = m.edge_id(d)
            if e in chosen:
                keys += [(e, 0), (e, 1)] if d == e else [(e, 1), (e, 0)]
            else:
                keys.append((e, None))
        rot.append(keys)
    return CombinatorialMap.from_rotation(rot)


def double_all_edges(m: CombinatorialMap) -> CombinatorialMap:
    """Every edge doubled; on a cycle this gives the shadow of closure(sigma_1^k)."""
    rot = []
    for cyc in m.vertices:
        keys: list = []
        for d in cyc:
            e = m.edge_id(d)
            keys += [(e, 0), (e, 1)] if d == e else [(e, 1), (e, 0)]
        rot.append(keys)
    return CombinatorialMap.from_rotation(rot)


def named_map(name: str) -> CombinatorialMap:
    """Resolve names like ``cube``, ``prism:5``, ``antiprism:4``, ``cycle:3``."""
    if ":" in name:
        fam, _, arg = name.partition(":")
        try:
            k = int(arg)
        except ValueError as exc:
            raise BadParameter(f"bad parameter in {name!r}") from exc
        builders = {"cycle": cycle_map, "dipole": dipole_map, "bouquet": bouquet_map,
                    "prism": prism_map, "antiprism": antiprism_map,
                    "doubled-cycle": lambda j: double_all_edges(cycle_map(j))}
        if fam not in builders:
            raise UnknownSolid(name)
        return builders[fam](k)
    if name in PLATONIC:
        return platonic(name)
    return archimedean(name)
