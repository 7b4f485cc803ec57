"""Transitive links, their diagrams and HOMFLY congruence screens."""

from .catalogue import CatalogueEntry, enumerate_catalogue
from .config import DEFAULT_BUDGETS, Budgets
from .congruence import CongruenceReport, periodicity_screen, transitivity_screen
from .linkdiag import (BraidWord, LinkDiagram, canonical_code, closure, diagram_symmetries,
                       from_map_with_seed, is_positive_transitive_diagram, is_transitive_diagram)
from .planarmap import CombinatorialMap, map_automorphisms
from .qlaurent import IdealSpec, LaurentPoly, quantum_binomial, quantum_integer
from .skein import homfly_pn, jones_via_bracket

__all__ = [
    "BraidWord", "Budgets", "CatalogueEntry", "CombinatorialMap", "CongruenceReport",
    "DEFAULT_BUDGETS", "IdealSpec", "LaurentPoly", "LinkDiagram", "canonical_code", "closure",
    "diagram_symmetries", "enumerate_catalogue", "from_map_with_seed", "homfly_pn",
    "is_positive_transitive_diagram", "is_transitive_diagram", "jones_via_bracket",
    "map_automorphisms", "periodicity_screen", "quantum_binomial", "quantum_integer",
    "transitivity_screen",
]
