"""The one-variable specializations P_n of the HOMFLY polynomial.

P_n is fixed by

    P_n(empty) = 1,   P_n(O u D) = [n] P_n(D),
    q^{n/2} P_n(L+) - q^{-n/2} P_n(L-) = (q^{1/2} - q^{-1/2}) P_n(L0).

Evaluation relabels a diagram canonically, walks each component from its
smallest arc, and switches every crossing first met from below.  The result is
a descending diagram, i.e. a stacked unlink, and every switch contributes one
smoothed diagram that is evaluated recursively.  Values are memoized on the
canonical code.

``jones_via_bracket`` is an independent state-sum oracle for n = 2.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import BudgetExceeded, IndexOutOfRange
from .linkdiag import LinkDiagram, canonical_form
from .qlaurent import ONE, LaurentPoly, quantum_integer

DEFAULT_CROSSING_BUDGET = 16
V_MINUS_VINV = LaurentPoly({1: 1, -1: -1})


class SkeinTriple(NamedTuple):
    plus: LinkDiagram
    minus: LinkDiagram
    zero: LinkDiagram


def resolve_crossing(d: LinkDiagram, site: int) -> SkeinTriple:
    if not 0 <= site < d.num_crossings:
        raise IndexOutOfRange(f"no crossing {site}")
    return SkeinTriple(d.with_sign(site, 1), d.with_sign(site, -1), d.smooth(site))


def descending_plan(d: LinkDiagram, ascending: bool = False) -> list[int]:
    """Crossing indices in first-encounter order that must be switched.

    Components are taken in order of their smallest label and walked from
    that label.  A crossing is bad when first met on the under-strand (on the
    over-strand when ``ascending``).
    """
    seen = set()
    bad = []
    for arcs in sorted(d.component_arcs(), key=min):
        start = arcs.index(min(arcs))
        for lab in arcs[start:] + arcs[:start]:
            i, p = d.heads[lab]
            if i in seen:
                continue
            seen.add(i)
            under = p == 0
            if under != ascending:
                bad.append(i)
    return bad


@dataclass
class SkeinEvaluator:
    """Memoizing P_n evaluator.  The cache never changes results, only speed."""

    crossing_budget: int = DEFAULT_CROSSING_BUDGET
    ascending: bool = False
    memo: dict = field(default_factory=dict)

    def pn(self, d: LinkDiagram, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("n must be non-negative")
        if d.num_crossings > self.crossing_budget:
            raise BudgetExceeded(f"{d.num_crossings} crossings exceed the skein budget "
                                 f"of {self.crossing_budget}")
        return self._eval(d, n)

    def _eval(self, d: LinkDiagram, n: int) -> LaurentPoly:
        if not d.crossings:
            return quantum_integer(n) ** d.loops
        code, canon = canonical_form(d)
        key = (code, n)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        vn, vmn = LaurentPoly({n: 1}), LaurentPoly({-n: 1})
        v2n, vm2n = LaurentPoly({2 * n: 1}), LaurentPoly({-2 * n: 1})
        acc = LaurentPoly()
        factor = ONE
        cur = canon
        for i in descending_plan(canon, self.ascending):
            if cur.crossings[i].sign > 0:
                # P+ = q^{-n} P- + q^{-n/2}(v - 1/v) P0
                acc = acc + factor * vmn * V_MINUS_VINV * self._eval(cur.smooth(i), n)
                factor = factor * vm2n
            else:
                # P- = q^{n} P+ - q^{n/2}(v - 1/v) P0
                acc = acc - factor * vn * V_MINUS_VINV * self._eval(cur.smooth(i), n)
                factor = factor * v2n
            cur = cur.switch(i)
        result = acc + factor * quantum_integer(n) ** cur.components()
        self.memo[key] = result
        return result


_shared = {False: SkeinEvaluator(), True: SkeinEvaluator(ascending=True)}


def homfly_pn(d: LinkDiagram, n: int, crossing_budget: int = DEFAULT_CROSSING_BUDGET,
              ascending: bool = False) -> LaurentPoly:
    ev = _shared[ascending]
    if crossing_budget != ev.crossing_budget:
        ev = SkeinEvaluator(crossing_budget, ascending, ev.memo)
    return ev.pn(d, n)


def homfly_pn_timed(d: LinkDiagram, n: int, crossing_budget: int = DEFAULT_CROSSING_BUDGET) -> dict:
    t0 = time.perf_counter()
    value = homfly_pn(d, n, crossing_budget)
    return {"n": n, "crossings": d.num_crossings, "elapsed": round(time.perf_counter() - t0, 6),
            "polynomial": value.to_json_obj()}


def skein_residual(d: LinkDiagram, site: int, n: int) -> LaurentPoly:
    plus, minus, zero = resolve_crossing(d, site)
    return (LaurentPoly({n: 1}) * homfly_pn(plus, n) - LaurentPoly({-n: 1}) * homfly_pn(minus, n)
            - V_MINUS_VINV * homfly_pn(zero, n))


# ---------------------------------------------------------------------------
# Kauffman bracket oracle
# ---------------------------------------------------------------------------

def _bracket_in_a(d: LinkDiagram) -> dict[int, int]:
    """Unnormalized bracket in A: each circle counts -A^2 - A^-2, empty diagram 1."""
    labels = d.labels()
    index = {lab: k for k, lab in enumerate(labels)}
    n = len(d.crossings)
    # pairs joined by the A- and B-smoothings at each crossing
    joins = []
    for x in d.crossings:
        a, b, c, dd = (index[v] for v in x.labels)
        joins.append((((a, b), (c, dd)), ((a, dd), (b, c))))
    delta = {2: -1, -2: -1}
    delta_pows = {0: {0: 1}}

    def dpow(k):
        if k not in delta_pows:
            prev = dpow(k - 1)
            out: dict[int, int] = {}
            for e1, c1 in prev.items():
                for e2, c2 in delta.items():
                    out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
            delta_pows[k] = out
        return delta_pows[k]

    total: dict[int, int] = {}
    m = len(labels)
    for state in range(1 << n):
        parent = list(range(m))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        a_count = 0
        for k in range(n):
            b = (state >> k) & 1
            a_count += 1 - b
            for u, v in joins[k][b]:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        circles = len({find(u) for u in range(m)}) + d.loops
        shift = a_count - (n - a_count)
        for e, c in dpow(circles).items():
            total[e + shift] = total.get(e + shift, 0) + c
    return total


def jones_via_bracket(d: LinkDiagram, max_crossings: int = 24) -> LaurentPoly:
    """(-A^3)^{-w} <D> with A^2 = -v, so the unknot gives [2] and the value equals P_2."""
    if d.num_crossings > max_crossings:
        raise BudgetExceeded(f"{d.num_crossings} crossings exceed the state-sum budget")
    if d.is_empty():
        return ONE
    w = d.writhe()
    out: dict[int, int] = {}
    for e, c in _bracket_in_a(d).items():
        e2 = e - 3 * w
        c2 = c * (-1) ** (w % 2)
        # A^{e2} with e2 even -> (-v)^{e2/2}
        assert e2 % 2 == 0
        k = e2 // 2
        out[k] = out.get(k, 0) + c2 * (-1) ** (k % 2)
    return LaurentPoly(out)
