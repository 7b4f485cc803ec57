from collections import Counter

import pytest

from translinks.catalogue import (CatalogueEntry, antiprism_diagram, archimedean_diagram,
                                  chain_diagram, enumerate_catalogue, is_chiral_diagram)
from translinks.linkdiag import canonical_code, diagram_symmetries, is_transitive_diagram


def test_small_catalogue_multiset():
    got = Counter((e.family, e.crossings) for e in enumerate_catalogue(4))
    assert got == Counter({("torus-odd", 1): 1, ("torus-even", 2): 1, ("degenerate", 2): 1,
                           ("torus-odd", 3): 1, ("torus-even", 4): 1, ("antiprism-closure", 4): 1})


def test_every_small_entry_is_transitive(catalogue_12):
    for e in catalogue_12:
        assert is_transitive_diagram(e.diagram), e.name
        assert e.diagram.underlying_map().num_vertices == e.crossings


def test_twelve_crossing_archimedean(catalogue_12):
    names = {e.name for e in catalogue_12 if e.family == "archimedean"}
    assert names == {"truncated-tetrahedron", "cuboctahedron"}


def test_families_in_range(catalogue_12):
    fam = Counter(e.family for e in catalogue_12)
    assert fam["torus-odd"] == 6 and fam["torus-even"] == 6
    assert fam["chain"] == 4            # Ch_3 .. Ch_6
    assert fam["antiprism-closure"] == 5  # n = 2 .. 6
    assert fam["degenerate"] == 1


def test_components(catalogue_12):
    for e in catalogue_12:
        if e.family == "chain":
            assert e.components == e.parameter
        if e.family == "antiprism-closure":
            assert e.components == (3 if e.parameter % 3 == 0 else 1)
        if e.family == "torus-even":
            assert e.components == 2
        if e.family == "torus-odd":
            assert e.components == 1
    comps = {e.name: e.components for e in catalogue_12 if e.family == "archimedean"}
    assert comps == {"truncated-tetrahedron": 4, "cuboctahedron": 4}


def test_ordering_is_stable():
    a = [e.to_json_obj() for e in enumerate_catalogue(10)]
    b = [e.to_json_obj() for e in enumerate_catalogue(10)]
    assert a == b
    assert [x["crossings"] for x in a] == sorted(x["crossings"] for x in a)


def test_mirrors_flag():
    base = enumerate_catalogue(6)
    both = enumerate_catalogue(6, mirrors=True)
    mirrors = [e for e in both if e.mirror]
    assert len(both) == len(base) + len(mirrors)
    # the trefoil is chiral, the figure-eight and Borromean diagrams are not
    names = {e.name for e in mirrors}
    assert "(3)_1" in names
    assert "closure((s1 s2^-1)^2)" not in names
    # the unoriented Hopf link and the 2-unlink are amphichiral
    assert "(2)_1^2" not in names and "2-unlink" not in names
    for e in mirrors:
        assert canonical_code(e.diagram) != canonical_code(e.diagram.mirror())
        assert is_chiral_diagram(e.diagram)


def test_builders_match_named_families():
    assert chain_diagram(4).num_crossings == 8
    assert antiprism_diagram(3).components() == 3
    assert archimedean_diagram("cuboctahedron").num_crossings == 12


def test_entry_json():
    e = enumerate_catalogue(3)[0]
    obj = e.to_json_obj()
    assert set(obj) >= {"family", "parameter", "name", "crossings", "components", "pd"}
    assert isinstance(e, CatalogueEntry)


def test_bad_input():
    with pytest.raises(ValueError):
        enumerate_catalogue(0)


def test_sixty_crossing_entries_are_constructible_but_not_evaluable():
    e = archimedean_diagram("truncated-icosahedron")
    assert e.num_crossings == 60
    entries = [x for x in enumerate_catalogue(60) if x.family == "archimedean"]
    assert len(entries) == 8
    assert [x.evaluable for x in entries].count(False) == 6


def test_symmetry_groups_are_subgroups():
    for e in enumerate_catalogue(24):
        group = diagram_symmetries(e.diagram)
        elems = {(g.map_auto.perm, g.switches) for g in group}
        perms = {p for p, _ in elems}
        for a in group:
            assert a.map_auto.inverse().perm in perms, e.name
            for b in group:
                c = a.compose(b)
                assert (c.map_auto.perm, c.switches) in elems, e.name
