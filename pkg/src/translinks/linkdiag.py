"""Oriented link diagrams as PD codes, braid closures and diagram symmetries.

Crossing convention: ``(a, b, c, d, sign)`` lists the four arc labels
counterclockwise starting from the incoming under-strand, so the under-strand
runs a -> c.  For ``sign = +1`` the over-strand runs d -> b, for ``-1`` it runs
b -> d.  Unknotted components that meet no crossing are counted in ``loops``.

A diagram symmetry is a map automorphism of the underlying 4-valent map that
either keeps every crossing's over-strand over or switches all of them.  Its
action on the 3-sphere is orientation preserving iff (map chirality) times
(switch sign) is +1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import (BadParameter, EdgeTransitiveInput, InconsistentPropagation,
                     IndexOutOfRange, InvalidDiagram, NotFourRegular)
from .planarmap import (DEFAULT_MAX_DARTS, CombinatorialMap, MapAutomorphism,
                        _orbits, is_edge_transitive, is_vertex_transitive,
                        map_automorphisms)


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def over_in(self) -> int:
        """Position (1 or 3) where the over-strand enters."""
        return 3 if self.sign > 0 else 1

    def is_incoming(self, pos: int) -> bool:
        return pos == 0 or pos == self.over_in

    def switched(self) -> "Crossing":
        a, b, c, d = self.labels
        if self.sign > 0:
            return Crossing(d, a, b, c, -1)
        return Crossing(b, c, d, a, 1)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    loops: int = 0

    def __post_init__(self):
        xs = tuple(x if isinstance(x, Crossing) else Crossing(*x) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        if self.loops < 0:
            raise InvalidDiagram("negative loop count")
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for x in xs:
            if x.sign not in (1, -1):
                raise InvalidDiagram(f"crossing sign must be +1 or -1, got {x.sign}")
            for pos, lab in enumerate(x.labels):
                side = heads if x.is_incoming(pos) else tails
                side[lab] = side.get(lab, 0) + 1
        for lab in set(heads) | set(tails):
            if heads.get(lab) != 1 or tails.get(lab) != 1:
                raise InvalidDiagram(f"arc {lab} must have exactly one head and one tail")

    # -- basic data -------------------------------------------------------
    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def labels(self) -> list[int]:
        return sorted({lab for x in self.crossings for lab in x.labels})

    @property
    def heads(self) -> dict[int, tuple[int, int]]:
        return _heads(self)

    def next_arc(self, lab: int) -> int:
        i, p = self.heads[lab]
        return self.crossings[i][(p + 2) % 4]

    def is_empty(self) -> bool:
        return not self.crossings and not self.loops

    def underlying_map(self) -> CombinatorialMap:
        """The 4-valent shadow; dart 4i+j is position j of crossing i."""
        return _shadow(self)

    def is_planar(self) -> bool:
        return not self.crossings or self.underlying_map().is_spherical()

    def validate_planar(self) -> "LinkDiagram":
        if not self.is_planar():
            raise InvalidDiagram("crossing data does not describe a planar diagram")
        return self

    # -- simple operations ------------------------------------------------
    def relabel(self, mapping) -> "LinkDiagram":
        f = mapping.__getitem__ if hasattr(mapping, "__getitem__") else mapping
        return LinkDiagram(tuple(Crossing(f(x.a), f(x.b), f(x.c), f(x.d), x.sign)
                                 for x in self.crossings), self.loops)

    def switch(self, i: int) -> "LinkDiagram":
        if not 0 <= i < len(self.crossings):
            raise IndexOutOfRange(f"no crossing {i}")
        xs = list(self.crossings)
        xs[i] = xs[i].switched()
        return LinkDiagram(tuple(xs), self.loops)

    def with_sign(self, i: int, sign: int) -> "LinkDiagram":
        if not 0 <= i < len(self.crossings):
            raise IndexOutOfRange(f"no crossing {i}")
        return self if self.crossings[i].sign == sign else self.switch(i)

    def smooth(self, i: int) -> "LinkDiagram":
        """Oriented smoothing at crossing i."""
        if not 0 <= i < len(self.crossings):
            raise IndexOutOfRange(f"no crossing {i}")
        x = self.crossings[i]
        parent: dict[int, int] = {}

        def find(u):
            while parent.get(u, u) != u:
                u = parent[u]
            return u

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)

        if x.sign > 0:
            union(x.a, x.b)
            union(x.d, x.c)
        else:
            union(x.a, x.d)
            union(x.b, x.c)
        rest = [y for j, y in enumerate(self.crossings) if j != i]
        new = tuple(Crossing(find(y.a), find(y.b), find(y.c), find(y.d), y.sign) for y in rest)
        used = {lab for y in new for lab in y.labels}
        closed = {find(lab) for lab in x.labels} - used
        return LinkDiagram(new, self.loops + len(closed))

    def mirror(self) -> "LinkDiagram":
        """Mirror image: every crossing switched, shadow unchanged."""
        return LinkDiagram(tuple(x.switched() for x in self.crossings), self.loops)

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def components(self) -> int:
        return len(self.component_arcs()) + self.loops

    def component_arcs(self) -> list[list[int]]:
        """Arc labels of each crossing-bearing component, in orientation order."""
        seen = set()
        out = []
        for lab in self.labels():
            if lab in seen:
                continue
            comp = []
            cur = lab
            while cur not in seen:
                seen.add(cur)
                comp.append(cur)
                cur = self.next_arc(cur)
            out.append(comp)
        return out

    def pieces(self) -> list[list[int]]:
        """Crossing indices of each connected piece of the shadow."""
        owner: dict[int, list[int]] = {}
        for i, x in enumerate(self.crossings):
            for lab in x.labels:
                owner.setdefault(lab, []).append(i)
        perms = []
        for occ in owner.values():
            p = list(range(len(self.crossings)))
            p[occ[0]], p[occ[-1]] = occ[-1], occ[0]
            perms.append(p)
        return _orbits(len(self.crossings), perms) if self.crossings else []

    # -- serialization ----------------------------------------------------
    def to_json_obj(self) -> dict:
        obj = {"crossings": [list(x) for x in self.crossings]}
        if self.loops:
            obj["loops"] = self.loops
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "LinkDiagram":
        if isinstance(obj, dict) and "gauss" in obj:
            return from_gauss(obj["gauss"], obj["signs"])
        if isinstance(obj, dict) and "braid" in obj:
            return closure(BraidWord(obj["strands"], tuple(obj["braid"])))
        if not isinstance(obj, dict) or "crossings" not in obj:
            raise InvalidDiagram("expected an object with a 'crossings' array")
        xs = []
        for row in obj["crossings"]:
            if len(row) != 5:
                raise InvalidDiagram(f"crossing {row} must have 4 labels and a sign")
            a, b, c, d, s = row
            if isinstance(s, str):
                s = 1 if s == "+" else -1
            xs.append(Crossing(int(a), int(b), int(c), int(d), int(s)))
        return cls(tuple(xs), int(obj.get("loops", 0))).validate_planar()

    @classmethod
    def from_json(cls, text: str) -> "LinkDiagram":
        return cls.from_json_obj(json.loads(text))

    def to_gauss(self) -> dict:
        """Signed Gauss code: +k over / -k under at crossing k (1-based)."""
        comps = []
        for arcs in self.component_arcs():
            seq = []
            for lab in arcs:
                i, p = self.heads[lab]
                seq.append(i + 1 if p == self.crossings[i].over_in else -(i + 1))
            comps.append(seq)
        comps += [[] for _ in range(self.loops)]
        return {"gauss": comps, "signs": [x.sign for x in self.crossings]}


@lru_cache(maxsize=4096)
def _heads(d: LinkDiagram) -> dict[int, tuple[int, int]]:
    out = {}
    for i, x in enumerate(d.crossings):
        for pos, lab in enumerate(x.labels):
            if x.is_incoming(pos):
                out[lab] = (i, pos)
    return out


@lru_cache(maxsize=1024)
def _shadow(d: LinkDiagram) -> CombinatorialMap:
    where: dict[int, list[int]] = {}
    sigma = []
    for i, x in enumerate(d.crossings):
        for j, lab in enumerate(x.labels):
            where.setdefault(lab, []).append(4 * i + j)
            sigma.append(4 * i + (j + 1) % 4)
    alpha = [0] * len(sigma)
    for u, v in where.values():
        alpha[u], alpha[v] = v, u
    return CombinatorialMap(tuple(alpha), tuple(sigma))


def unknot() -> LinkDiagram:
    return LinkDiagram((), 1)


def unlink(k: int) -> LinkDiagram:
    return LinkDiagram((), k)


def split_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Disjoint union, placing d2 in a face of d1."""
    off = max(d1.labels(), default=0)
    shifted = d2.relabel(lambda lab: lab + off)
    return LinkDiagram(d1.crossings + shifted.crossings, d1.loops + d2.loops)


def from_gauss(components: Sequence[Sequence[int]], signs: Sequence[int]) -> LinkDiagram:
    n = len(signs)
    info: dict[int, dict[str, int]] = {k: {} for k in range(1, n + 1)}
    loops = 0
    label = 0
    for comp in components:
        if not comp:
            loops += 1
            continue
        first = label + 1
        m = len(comp)
        for j, v in enumerate(comp):
            arc_in = first + (j - 1) % m
            arc_out = first + j
            k = abs(v)
            if k not in info:
                raise InvalidDiagram(f"crossing {k} has no sign")
            role = "o" if v > 0 else "u"
            if role + "i" in info[k]:
                raise InvalidDiagram(f"crossing {k} visited twice on the same strand")
            info[k][role + "i"] = arc_in
            info[k][role + "o"] = arc_out
        label += m
    xs = []
    for k in range(1, n + 1):
        r = info[k]
        if len(r) != 4:
            raise InvalidDiagram(f"crossing {k} must be visited once over and once under")
        if signs[k - 1] > 0:
            xs.append(Crossing(r["ui"], r["oo"], r["uo"], r["oi"], 1))
        else:
            xs.append(Crossing(r["ui"], r["oi"], r["uo"], r["oo"], -1))
    return LinkDiagram(tuple(xs), loops).validate_planar()


# ---------------------------------------------------------------------------
# Braids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """Word in sigma_1..sigma_{k-1}; letter +i is sigma_i, -i its inverse."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise BadParameter("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise BadParameter(f"letter {x} invalid on {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        letters = tuple(int(t) for t in text.replace(",", " ").split())
        k = strands if strands is not None else max((abs(x) for x in letters), default=0) + 1
        return cls(k, letters)

    def __pow__(self, n: int) -> "BraidWord":
        return BraidWord(self.strands, self.letters * n)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))


def closure(b: BraidWord) -> LinkDiagram:
    """Closure of a braid read bottom to top, strands oriented upwards.

    Labels are assigned in scan order; untouched strands become free loops.
    """
    cur = list(range(1, b.strands + 1))
    fresh = b.strands
    xs = []
    for x in b.letters:
        i = abs(x) - 1
        bl, br = cur[i], cur[i + 1]
        tl, tr = fresh + 1, fresh + 2
        fresh += 2
        if x > 0:
            xs.append(Crossing(br, tr, tl, bl, 1))
        else:
            xs.append(Crossing(bl, br, tr, tl, -1))
        cur[i], cur[i + 1] = tl, tr
    ident = {}
    for j in range(b.strands):
        ident[cur[j]] = j + 1
    # top label of position j is glued to bottom label j+1
    def root(lab):
        return ident.get(lab, lab)

    glued = [Crossing(*(root(v) for v in y.labels), y.sign) for y in xs]
    used = {lab for y in glued for lab in y.labels}
    loops = sum(1 for j in range(1, b.strands + 1) if j not in used)
    order: dict[int, int] = {}
    for y in glued:
        for lab in y.labels:
            order.setdefault(lab, len(order) + 1)
    return LinkDiagram(tuple(glued), loops).relabel(order)


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------

def _piece_key(d: LinkDiagram, idx: list[int]):
    labels = sorted({lab for i in idx for lab in d.crossings[i].labels})
    heads = d.heads
    best = None
    best_map = None
    for root in labels:
        new: dict[int, int] = {}
        visited: list[int] = []
        seen_x = set()
        start = root
        scan = 0
        while start is not None:
            lab = start
            while lab not in new:
                new[lab] = len(new) + 1
                i, p = heads[lab]
                if i not in seen_x:
                    seen_x.add(i)
                    visited.append(i)
                lab = d.crossings[i][(p + 2) % 4]
            start = None
            while scan < len(visited) and start is None:
                for v in d.crossings[visited[scan]].labels:
                    if v not in new:
                        start = v
                        break
                else:
                    scan += 1
        key = tuple(sorted(tuple(new[v] for v in d.crossings[i].labels) + (d.crossings[i].sign,)
                           for i in idx))
        if best is None or key < best:
            best, best_map = key, new
    return best, best_map


@lru_cache(maxsize=65536)
def canonical_form(d: LinkDiagram) -> tuple[str, LinkDiagram]:
    """Canonical code and the diagram relabeled to realize it."""
    keys = sorted(_piece_key(d, idx)[0] for idx in d.pieces())
    xs = []
    off = 0
    for key in keys:
        for row in key:
            xs.append(Crossing(*(v + off for v in row[:4]), row[4]))
        off += 2 * len(key)
    text = "|".join(";".join(",".join(map(str, row[:4])) + ("+" if row[4] > 0 else "-")
                             for row in key) for key in keys)
    if d.loops:
        text += f"/o{d.loops}"
    return text, LinkDiagram(tuple(xs), d.loops)


def canonical_code(d: LinkDiagram) -> str:
    return canonical_form(d)[0]


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagramSymmetry:
    map_auto: MapAutomorphism
    crossing_perm: tuple[int, ...]
    switches: bool

    @property
    def preserves_orientation(self) -> bool:
        """Whether the induced homeomorphism of S^3 preserves orientation."""
        return self.map_auto.orientation * (-1 if self.switches else 1) == 1

    def compose(self, other: "DiagramSymmetry") -> "DiagramSymmetry":
        return DiagramSymmetry(self.map_auto.compose(other.map_auto),
                               tuple(self.crossing_perm[i] for i in other.crossing_perm),
                               self.switches != other.switches)

    def order(self) -> int:
        k, g = 1, self
        while not g.map_auto.is_identity():
            g = g.compose(self)
            k += 1
        return k


def diagram_symmetries(d: LinkDiagram, max_darts: int = DEFAULT_MAX_DARTS) -> list[DiagramSymmetry]:
    m = d.underlying_map()
    out = []
    for g in map_automorphisms(m, max_darts):
        if not d.crossings:
            out.append(DiagramSymmetry(g, (), False))
            continue
        parities = {g.perm[4 * i + 1] % 2 for i in range(len(d.crossings))}
        if len(parities) != 1:
            continue
        perm = tuple(g.perm[4 * i] // 4 for i in range(len(d.crossings)))
        out.append(DiagramSymmetry(g, perm, parities == {0}))
    return out


def crossing_orbits(d: LinkDiagram, group: Iterable[DiagramSymmetry]) -> list[list[int]]:
    return _orbits(len(d.crossings), [s.crossing_perm for s in group])


def is_transitive_diagram(d: LinkDiagram, max_darts: int = DEFAULT_MAX_DARTS) -> bool:
    if not d.crossings:
        return True
    return len(crossing_orbits(d, diagram_symmetries(d, max_darts))) == 1


def is_positive_transitive_diagram(d: LinkDiagram, max_darts: int = DEFAULT_MAX_DARTS) -> bool:
    if not d.crossings:
        return True
    group = [s for s in diagram_symmetries(d, max_darts) if s.preserves_orientation]
    return len(crossing_orbits(d, group)) == 1


# ---------------------------------------------------------------------------
# Transitive diagrams from vertex-transitive 4-valent maps
# ---------------------------------------------------------------------------

def diagram_from_shadow(m: CombinatorialMap, over: Sequence[int]) -> LinkDiagram:
    """Diagram on a 4-regular map; ``over[v]`` picks darts (0,2) or (1,3) of v as over-strand.

    Components are oriented by leaving through their smallest dart; arcs are
    labeled in traversal order.
    """
    if not m.is_regular(4):
        raise NotFourRegular("shadow must be 4-regular")
    opp = [m.sigma[m.sigma[d]] for d in range(m.num_darts)]
    label = [0] * m.num_darts
    incoming = [False] * m.num_darts
    nxt = 0
    for start in range(m.num_darts):
        if label[start]:
            continue
        d = start
        while not label[d]:
            nxt += 1
            label[d] = nxt
            label[m.alpha[d]] = nxt
            incoming[m.alpha[d]] = True
            d = opp[m.alpha[d]]
    xs = []
    for v, cyc in enumerate(m.vertices):
        u = 1 - over[v]
        s = u if incoming[cyc[u]] else u + 2
        labs = [label[cyc[(s + j) % 4]] for j in range(4)]
        sign = 1 if incoming[cyc[(s + 3) % 4]] else -1
        xs.append(Crossing(*labs, sign))
    return LinkDiagram(tuple(xs))


def _closure_of(gens: list[MapAutomorphism]) -> dict:
    ident = MapAutomorphism(tuple(range(len(gens[0].perm))), 1) if gens else None
    elems = {ident.perm: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.compose(x)
                if y.perm not in elems:
                    elems[y.perm] = y
                    nxt.append(y)
        frontier = nxt
    return elems


def _generators(group: list[MapAutomorphism]) -> list[MapAutomorphism]:
    gens: list[MapAutomorphism] = []
    have = {group[0].perm}
    for g in group:
        if g.perm not in have:
            gens.append(g)
            have = set(_closure_of(gens))
        if len(have) == len(group):
            break
    return gens


def sign_characters(group: list[MapAutomorphism]) -> list[dict]:
    """All homomorphisms from the group to {0, 1}, as dicts perm -> bit.

    Ordered: chirality character first (when it is one), then the trivial
    character, then the rest.
    """
    gens = _generators(group)
    ident = group[0]
    chars = []
    for mask in range(2 ** len(gens)):
        bits = [(mask >> j) & 1 for j in range(len(gens))]
        val = {ident.perm: 0}
        frontier = [ident]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, bit in zip(gens, bits):
                    y = g.compose(x)
                    want = val[x.perm] ^ bit
                    got = val.get(y.perm)
                    if got is None:
                        val[y.perm] = want
                        nxt.append(y)
                    elif got != want:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if ok:
            chars.append(val)
    chi = {g.perm: (0 if g.orientation == 1 else 1) for g in group}
    chars.sort(key=lambda c: (c != chi, any(c.values())))
    return chars


def has_quarter_turn(m: CombinatorialMap, group: list[MapAutomorphism], v: int = 0) -> bool:
    """Some rotation fixing vertex v turns its darts by one step."""
    cyc = m.vertices[v]
    turn = {cyc[1], cyc[-1]}
    return any(g.orientation == 1 and g.perm[cyc[0]] in turn for g in group)


def from_map_with_seed(m: CombinatorialMap, seed_vertex: int = 0, seed_over_pair: int = 0,
                       max_darts: int = 256) -> LinkDiagram:
    """Transitive diagram on a vertex-transitive 4-regular spherical map.

    The seed fixes which opposite dart pair is over at one vertex; a sign
    character eps of Aut(m) then decides, for each automorphism, whether it
    carries the seed crossing to a copy (eps = 0) or to its switch (eps = 1).
    The first character compatible with the vertex stabilizer is used.
    """
    if not m.is_regular(4):
        raise NotFourRegular("from_map_with_seed needs a 4-regular map")
    if not m.is_spherical() or not m.is_connected():
        raise BadParameter("map must be connected and spherical")
    if seed_over_pair not in (0, 1) or not 0 <= seed_vertex < m.num_vertices:
        raise BadParameter("bad seed")
    group = map_automorphisms(m, max_darts)
    if not is_vertex_transitive(m, group):
        raise BadParameter("map is not vertex-transitive")
    if is_edge_transitive(m, group) and has_quarter_turn(m, group, seed_vertex):
        raise EdgeTransitiveInput("rotations fixing a vertex permute all its edges; "
                                  "no crossing survives the symmetry")
    pos = {}
    for v, cyc in enumerate(m.vertices):
        for j, d in enumerate(cyc):
            pos[d] = (v, j)
    seed_dart = m.vertices[seed_vertex][seed_over_pair]
    for eps in sign_characters(group):
        over = [-1] * m.num_vertices
        ok = True
        for g in group:
            v, j = pos[g.perm[seed_dart]]
            want = (j % 2) ^ eps[g.perm]
            if over[v] == -1:
                over[v] = want
            elif over[v] != want:
                ok = False
                break
        if ok:
            return diagram_from_shadow(m, over)
    raise InconsistentPropagation("no symmetric crossing assignment extends the seed")
