"""Necessary conditions for periodicity and transitivity via congruences mod I_n.

A p-periodic link L with factor link F satisfies P_n(L) = P_n(F)^p mod I_n.
A link with a transitive diagram of m crossings (m prime) satisfies
P_n(L) = [n]^m mod I_n, with the ideal built from modulus p := m.
A failed screen refutes the property; a pass proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linkdiag import LinkDiagram
from .qlaurent import IdealSpec, LaurentPoly, membership_witness, quantum_integer
from .skein import DEFAULT_CROSSING_BUDGET, homfly_pn


@dataclass(frozen=True)
class CongruenceReport:
    kind: str
    n: int
    p: int
    lhs: LaurentPoly
    rhs: LaurentPoly
    passed: bool
    witness: dict

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "p": self.p,
            "lhs": self.lhs.to_json_obj(),
            "rhs": self.rhs.to_json_obj(),
            "verdict": self.verdict,
            "witness": {"reduced_difference": self.witness["image"],
                        "residue_gcd": self.witness["gcd"]},
        }


def compare(lhs: LaurentPoly, rhs: LaurentPoly, p: int, n: int, kind: str = "congruence") -> CongruenceReport:
    spec = IdealSpec(n, p)
    w = membership_witness(lhs - rhs, spec)
    return CongruenceReport(kind, n, p, lhs, rhs, w["member"], w)


def periodicity_screen(link: LinkDiagram, factor: LinkDiagram, p: int, n: int,
                       crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> CongruenceReport:
    IdealSpec(n, p)  # reject bad (n, p) before any skein work
    lhs = homfly_pn(link, n, crossing_budget)
    rhs = homfly_pn(factor, n, crossing_budget) ** p
    return compare(lhs, rhs, p, n, "periodicity")


def transitivity_screen(link: LinkDiagram, m: int, n: int,
                        crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> CongruenceReport:
    IdealSpec(n, m)
    lhs = homfly_pn(link, n, crossing_budget)
    return compare(lhs, quantum_integer(n) ** m, m, n, "transitivity")


def run_batch(jobs: list[dict]) -> list[dict]:
    """Jobs are ``{"diagram": pd, "factor": pd?, "p": int, "n": int}``."""
    out = []
    for job in jobs:
        link = LinkDiagram.from_json_obj(job["diagram"])
        if job.get("factor") is not None:
            rep = periodicity_screen(link, LinkDiagram.from_json_obj(job["factor"]), job["p"], job["n"])
        else:
            rep = transitivity_screen(link, job["p"], job["n"])
        out.append(rep.to_json_obj())
    return out
