"""The catalogue of transitive link diagrams.

Families, by shadow:

* doubled cycles        -> closure(sigma_1^k): (2n+1)_1 and (2n)_1^2
* doubled prisms        -> Ch_n, 2n crossings
* digonal..n-gonal antiprisms -> closure((sigma_1 sigma_2^{-1})^n), 2n crossings
* eight Archimedean solids of valency 3 (doubled along the edge orbit that is a
  perfect matching) or valency 4 (used directly)

plus the 2-crossing unlink on the dipole, kept as an annotated degenerate case.

The doubled prism on 2n vertices is sometimes written (4n)_1^n; the diagram
built here has 2n crossings and n components and is named Ch_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .linkdiag import BraidWord, LinkDiagram, closure, diagram_symmetries, from_map_with_seed
from .planarmap import (ARCHIMEDEAN, archimedean, double_edge_orbit, matching_orbits,
                        prism_map, prism_rungs)
from .skein import DEFAULT_CROSSING_BUDGET

ARCH_MAX_DARTS = 256
_FAMILY_RANK = {"torus-odd": 0, "torus-even": 0, "degenerate": 1, "chain": 2,
                "antiprism-closure": 3, "archimedean": 4}


@dataclass(frozen=True)
class CatalogueEntry:
    family: str
    parameter: int | None
    name: str
    diagram: LinkDiagram = field(repr=False)
    note: str = ""
    mirror: bool = False

    @property
    def crossings(self) -> int:
        return self.diagram.num_crossings

    @property
    def components(self) -> int:
        return self.diagram.components()

    @property
    def evaluable(self) -> bool:
        return self.crossings <= DEFAULT_CROSSING_BUDGET

    def sort_key(self):
        return (self.crossings, _FAMILY_RANK[self.family], self.parameter or 0, self.name, self.mirror)

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "parameter": self.parameter,
            "name": self.name + (" (mirror)" if self.mirror else ""),
            "crossings": self.crossings,
            "components": self.components,
            "evaluable": self.evaluable,
            "note": self.note,
            "pd": self.diagram.to_json_obj(),
        }


def torus_entry(k: int) -> CatalogueEntry:
    d = closure(BraidWord(2, (1,) * k))
    note = {1: "bouquet of two circles; unknot", 2: "dipole D4 by rotation; Hopf link"}.get(k, "")
    if k % 2:
        return CatalogueEntry("torus-odd", (k - 1) // 2, f"({k})_1", d, note)
    return CatalogueEntry("torus-even", k // 2, f"({k})_1^2", d, note)


def dipole_unlink_entry() -> CatalogueEntry:
    return CatalogueEntry("degenerate", None, "2-unlink", closure(BraidWord(2, (1, -1))),
                          "dipole D4 by reflection; trivial link of two components")


def chain_diagram(n: int) -> LinkDiagram:
    return from_map_with_seed(double_edge_orbit(prism_map(n), prism_rungs(n)))


def antiprism_diagram(n: int) -> LinkDiagram:
    return closure(BraidWord(3, (1, -2) * n))


@lru_cache(maxsize=None)
def archimedean_diagram(name: str) -> LinkDiagram:
    m = archimedean(name)
    if m.is_regular(3):
        orbit = matching_orbits(m, max_darts=ARCH_MAX_DARTS)[0]
        m = double_edge_orbit(m, orbit, max_darts=ARCH_MAX_DARTS)
    return from_map_with_seed(m, max_darts=ARCH_MAX_DARTS)


def is_chiral_diagram(d: LinkDiagram) -> bool:
    """No symmetry of the diagram reverses the orientation of S^3."""
    return all(s.preserves_orientation for s in diagram_symmetries(d, ARCH_MAX_DARTS))


def enumerate_catalogue(max_crossings: int, mirrors: bool = False) -> list[CatalogueEntry]:
    if max_crossings < 1:
        raise ValueError("max_crossings must be >= 1")
    entries = [torus_entry(k) for k in range(1, max_crossings + 1)]
    if max_crossings >= 2:
        entries.append(dipole_unlink_entry())
    entries += [CatalogueEntry("chain", n, f"Ch_{n}", chain_diagram(n))
                for n in range(3, max_crossings // 2 + 1)]
    entries += [CatalogueEntry("antiprism-closure", n, f"closure((s1 s2^-1)^{n})", antiprism_diagram(n))
                for n in range(2, max_crossings // 2 + 1)]
    entries += [CatalogueEntry("archimedean", None, name, archimedean_diagram(name))
                for name, c in ARCHIMEDEAN.items() if c <= max_crossings]
    if mirrors:
        extra = [CatalogueEntry(e.family, e.parameter, e.name, e.diagram.mirror(), e.note, True)
                 for e in entries if is_chiral_diagram(e.diagram)]
        entries += extra
    return sorted(entries, key=CatalogueEntry.sort_key)
