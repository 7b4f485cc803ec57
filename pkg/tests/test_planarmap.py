import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from translinks.errors import (BadParameter, BudgetExceeded, InvalidMap, NotPerfectMatchingOrbit,
                               NotThreeRegular, UnknownSolid)
from translinks.planarmap import (ARCHIMEDEAN, PLATONIC, CombinatorialMap, antiprism_map,
                                  archimedean, bouquet_map, cycle_map, dipole_map, double_all_edges,
                                  double_edge_orbit, dual, edge_orbits, identity_automorphism,
                                  is_edge_transitive, is_vertex_transitive, map_automorphisms,
                                  matching_orbits, medial, named_map, platonic, prism_map,
                                  prism_rungs, truncate)


def vef(m):
    return m.num_vertices, m.num_edges, m.num_faces


@pytest.mark.parametrize("name,counts", [
    ("tetrahedron", (4, 6, 4)), ("cube", (8, 12, 6)), ("octahedron", (6, 12, 8)),
    ("dodecahedron", (20, 30, 12)), ("icosahedron", (12, 30, 20)),
])
def test_platonic_counts(name, counts):
    m = platonic(name)
    assert vef(m) == counts
    assert m.is_spherical() and m.is_simple()


def test_unknown_solid():
    with pytest.raises(UnknownSolid):
        platonic("hypercube")
    with pytest.raises(UnknownSolid):
        archimedean("snub-cube")


def test_small_maps():
    c = cycle_map(5)
    assert vef(c)[:2] == (5, 5) and c.degrees() == [2] * 5
    d = dipole_map(4)
    assert vef(d)[:2] == (2, 4) and d.degrees() == [4, 4]
    b = bouquet_map(2)
    assert vef(b)[:2] == (1, 2) and b.degrees() == [4]
    for m in (c, d, b):
        assert m.is_spherical()
    for bad in (lambda: cycle_map(0), lambda: dipole_map(1), lambda: bouquet_map(0),
                lambda: prism_map(2), lambda: antiprism_map(1)):
        with pytest.raises(BadParameter):
            bad()


def test_prisms_and_antiprisms():
    p4 = prism_map(4)
    assert p4.is_regular(3) and p4.num_vertices == 8
    a3 = antiprism_map(3)
    assert a3.is_regular(4) and a3.num_vertices == 6
    a4 = antiprism_map(4)
    assert a4.is_regular(4) and (a4.num_vertices, a4.num_edges) == (8, 16)
    assert antiprism_map(2).is_spherical()
    for k in (3, 5, 6, 8):
        assert prism_map(k).face_degrees() == {4: k, k: 2}
    assert prism_map(4).face_degrees() == {4: 6}


def test_truncation_and_medial():
    tt = truncate(platonic("tetrahedron"))
    assert vef(tt)[:2] == (12, 18) and tt.is_regular(3)
    assert truncate(platonic("cube")).num_vertices == 24
    assert truncate(platonic("icosahedron")).num_vertices == 60
    co = medial(platonic("cube"))
    assert co.num_vertices == 12 and co.is_regular(4)
    rco = medial(medial(platonic("cube")))
    assert rco.num_vertices == 24 and rco.is_regular(4)
    assert rco.face_degrees() == {3: 8, 4: 18}
    rid = medial(medial(platonic("dodecahedron")))
    assert rid.num_vertices == 60 and rid.face_degrees() == {3: 20, 4: 30, 5: 12}


@pytest.mark.parametrize("name", PLATONIC)
def test_operations_preserve_sphere(name):
    m = platonic(name)
    for op in (truncate, medial, dual):
        r = op(m)
        assert r.is_spherical()
    assert truncate(m).is_regular(3)
    assert medial(m).is_regular(4)
    assert truncate(m).num_vertices == m.num_darts
    assert medial(m).num_vertices == m.num_edges


@pytest.mark.parametrize("name,faces", [
    ("truncated-tetrahedron", {3: 4, 6: 4}),
    ("cuboctahedron", {3: 8, 4: 6}),
    ("truncated-octahedron", {4: 6, 6: 8}),
    ("truncated-cube", {3: 8, 8: 6}),
    ("rhombicuboctahedron", {3: 8, 4: 18}),
    ("truncated-icosahedron", {5: 12, 6: 20}),
    ("truncated-dodecahedron", {3: 20, 10: 12}),
    ("rhombicosidodecahedron", {3: 20, 4: 30, 5: 12}),
])
def test_archimedean_face_vectors(name, faces):
    m = archimedean(name)
    assert m.is_spherical()
    assert dict(m.face_degrees()) == faces
    # 3-regular solids double a perfect matching, keeping one crossing per vertex
    assert m.is_regular(3) or m.is_regular(4)
    assert ARCHIMEDEAN[name] == m.num_vertices


def test_invalid_maps_rejected():
    with pytest.raises(InvalidMap):
        CombinatorialMap((0, 1), (0, 1))  # alpha with fixed points
    with pytest.raises(InvalidMap):
        CombinatorialMap((1, 0), (0, 0))
    with pytest.raises(InvalidMap):
        CombinatorialMap.from_rotation([["a", "a", "a"]])


def test_map_json_round_trip():
    m = archimedean("cuboctahedron")
    assert CombinatorialMap.from_json(m.to_json()) == m


@pytest.mark.parametrize("name,order", [("tetrahedron", 24), ("cube", 48), ("octahedron", 48),
                                        ("dodecahedron", 120), ("icosahedron", 120)])
def test_platonic_group_orders(name, order):
    assert len(map_automorphisms(platonic(name))) == order


def test_cycle_group_is_dihedral():
    g = map_automorphisms(cycle_map(5))
    assert len(g) == 10
    # degree-2 rotations satisfy sigma == sigma^-1, so reflections are not
    # distinguishable from rotations by chirality; the permutations are distinct
    assert len({a.perm for a in g}) == 10
    assert len({a.vertex_perm(cycle_map(5)) for a in g}) == 10


def _closed(m, group):
    perms = {a.perm for a in group}
    ident = identity_automorphism(m).perm
    if ident not in perms:
        return False
    for a in group:
        if a.inverse().perm not in perms:
            return False
        for b in group:
            if a.compose(b).perm not in perms:
                return False
    return all(a.is_automorphism_of(m) for a in group)


@pytest.mark.parametrize("m", [platonic("tetrahedron"), prism_map(5), antiprism_map(4),
                               dipole_map(4), bouquet_map(2), archimedean("cuboctahedron")],
                         ids=["tetra", "prism5", "antiprism4", "dipole4", "bouquet2", "cubocta"])
def test_group_closure(m):
    g = map_automorphisms(m)
    assert _closed(m, g)
    assert (2 * m.num_darts) % len(g) == 0


def test_budget():
    with pytest.raises(BudgetExceeded):
        map_automorphisms(platonic("icosahedron"), max_darts=10)


def test_transitivity_predicates():
    o = platonic("octahedron")
    assert is_vertex_transitive(o) and is_edge_transitive(o)
    tt = truncate(platonic("tetrahedron"))
    assert is_vertex_transitive(tt) and not is_edge_transitive(tt)
    assert sorted(len(x) for x in edge_orbits(tt)) == [6, 12]
    assert is_vertex_transitive(dipole_map(4))


@pytest.mark.parametrize("m", [cycle_map(4), dipole_map(4), prism_map(5), antiprism_map(5)]
                         + [archimedean(n) for n in ARCHIMEDEAN if ARCHIMEDEAN[n] <= 24],
                         ids=lambda m: m.summary())
def test_catalogue_maps_vertex_transitive(m):
    assert is_vertex_transitive(m)


def test_double_edge_orbit():
    for k in (3, 4, 5):
        d = double_edge_orbit(prism_map(k), prism_rungs(k))
        assert d.is_regular(4) and d.num_vertices == 2 * k and d.is_spherical()
        assert d.face_degrees()[2] == k
    tt = truncate(platonic("tetrahedron"))
    orbit = matching_orbits(tt)[0]
    assert len(orbit) == 6
    dt = double_edge_orbit(tt, orbit)
    assert dt.is_regular(4) and dt.num_vertices == 12 and is_vertex_transitive(dt)
    with pytest.raises(NotThreeRegular):
        double_edge_orbit(platonic("octahedron"), [0])
    with pytest.raises(NotPerfectMatchingOrbit):
        double_edge_orbit(tt, [0])


def test_doubled_automorphisms_extend():
    # every automorphism of the pentagonal prism fixes the rung orbit, and each
    # one extends to the doubled map without creating new ones
    base = prism_map(5)
    assert len(map_automorphisms(double_edge_orbit(base, prism_rungs(5)))) == len(map_automorphisms(base))
    doubled_cycle = double_all_edges(cycle_map(4))
    assert doubled_cycle.is_regular(4) and is_vertex_transitive(doubled_cycle)


def test_named_map():
    assert named_map("prism:5").num_vertices == 10
    assert named_map("cube") == platonic("cube")
    assert named_map("doubled-cycle:3").is_regular(4)
    with pytest.raises(UnknownSolid):
        named_map("wedge:3")
    with pytest.raises(BadParameter):
        named_map("prism:x")


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(2, 8))
def test_euler_on_families(k, j):
    for m in (cycle_map(k), dipole_map(j), bouquet_map(j), double_all_edges(cycle_map(k))):
        assert m.euler_characteristic() == 2
    if k >= 3:
        assert prism_map(k).euler_characteristic() == 2
    assert antiprism_map(j).euler_characteristic() == 2
