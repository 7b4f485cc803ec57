import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from translinks.errors import BudgetExceeded, IndexOutOfRange
from translinks.linkdiag import BraidWord, LinkDiagram, canonical_code, closure, split_union, unknot, unlink
from translinks.qlaurent import ONE, ZERO, LaurentPoly, quantum_integer
from translinks.skein import (SkeinEvaluator, homfly_pn, homfly_pn_timed, jones_via_bracket,
                              resolve_crossing, skein_residual)

braids = st.integers(2, 4).flatmap(
    lambda k: st.lists(st.sampled_from([i for i in range(1 - k, k) if i]), min_size=1, max_size=8)
    .map(lambda w: BraidWord(k, tuple(w))))
short_braids = braids.filter(lambda b: len(b.letters) <= 5)


def B(*letters, strands=None):
    return closure(BraidWord(strands or max(abs(x) for x in letters) + 1, letters))


def classical_jones(t_terms: dict, components: int) -> LaurentPoly:
    """Tabulated Jones value V(t), exponents in half-integers of t, mapped by t = v^-2.

    With the unknot normalized to [2] the value is (-1)^(c-1) [2] V(v^-2).
    """
    v = LaurentPoly({int(-2 * e): c for e, c in t_terms.items()})
    return (-1) ** (components - 1) * quantum_integer(2) * v


def test_axiom_examples():
    assert homfly_pn(unknot(), 3) == quantum_integer(3)
    assert homfly_pn(unlink(2), 2) == quantum_integer(2) ** 2
    assert homfly_pn(LinkDiagram(), 5) == ONE
    assert homfly_pn(B(1, 1, 1), 1) == ONE
    assert homfly_pn(B(1, 1, 1), 0) == ZERO
    assert homfly_pn(LinkDiagram(), 0) == ONE


def test_resolve_crossing():
    t = B(1, 1, 1)
    plus, minus, zero = resolve_crossing(t, 1)
    assert plus == t
    assert canonical_code(minus) == canonical_code(B(1, 1, -1))
    assert canonical_code(zero) == canonical_code(B(1, 1))
    assert zero.num_crossings == 2
    _, _, z = resolve_crossing(B(1), 0)
    assert z.num_crossings == 0 and z.components() == 2
    with pytest.raises(IndexOutOfRange):
        resolve_crossing(t, 5)


def test_bracket_anchors():
    assert jones_via_bracket(unknot()) == quantum_integer(2)
    assert jones_via_bracket(B(1)) == homfly_pn(B(1), 2)
    assert jones_via_bracket(LinkDiagram()) == ONE


@pytest.mark.parametrize("diagram,t_terms,comps", [
    (B(1, 1, 1), {1: 1, 3: 1, 4: -1}, 1),                       # right trefoil
    (B(-1, -1, -1), {-1: 1, -3: 1, -4: -1}, 1),                 # left trefoil
    (B(1, -2, 1, -2), {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}, 1),    # figure-eight
    (B(1, 1), {0.5: -1, 2.5: -1}, 2),                           # positive Hopf link
    (B(1, 1, 1, 1, 1), {2: 1, 4: 1, 5: -1, 6: 1, 7: -1}, 1),    # cinquefoil
])
def test_against_tabulated_jones(diagram, t_terms, comps):
    expected = classical_jones(t_terms, comps)
    assert jones_via_bracket(diagram) == expected
    assert homfly_pn(diagram, 2) == expected


@pytest.mark.parametrize("d,pinned", [
    (B(1), {1: 1, -1: 1}),
    (B(1, 1), {0: 1, -2: 1, -4: 1, -6: 1}),
    (B(1, 1, 1), {-1: 1, -3: 1, -5: 1, -9: -1}),
    (B(1, -2, 1, -2), {5: 1, -5: 1}),
    (B(1, 1, 2, 2), {-1: 1, -3: 1, -5: 2, -7: 2, -9: 1, -11: 1}),
], ids=["s1", "hopf", "trefoil", "figure8", "chain3"])
def test_pinned_p2(d, pinned):
    assert homfly_pn(d, 2) == LaurentPoly(pinned)


@settings(max_examples=40, deadline=None)
@given(braids, st.integers(1, 3))
def test_skein_residual_zero(b, n):
    d = closure(b)
    for site in range(d.num_crossings):
        assert skein_residual(d, site, n) == ZERO


@settings(max_examples=40, deadline=None)
@given(braids, st.integers(1, 4))
def test_order_independence(b, n):
    d = closure(b)
    assert homfly_pn(d, n) == homfly_pn(d, n, ascending=True)


@settings(max_examples=40, deadline=None)
@given(braids, st.integers(1, 4))
def test_value_at_one_and_mirror(b, n):
    d = closure(b)
    p = homfly_pn(d, n)
    assert p.at_one() == n ** d.components()
    assert homfly_pn(d.mirror(), n) == p.bar()
    assert homfly_pn(d, 1) == ONE


@settings(max_examples=30, deadline=None)
@given(braids)
def test_p2_equals_bracket(b):
    d = closure(b)
    assert homfly_pn(d, 2) == jones_via_bracket(d)


@settings(max_examples=20, deadline=None)
@given(short_braids, short_braids, st.integers(1, 3))
def test_split_union_multiplies(b1, b2, n):
    d1, d2 = closure(b1), closure(b2)
    assert homfly_pn(split_union(d1, d2), n) == homfly_pn(d1, n) * homfly_pn(d2, n)


def test_fresh_memo_agrees_with_shared():
    d = B(1, -2, 1, -2, 1, -2)
    for n in (2, 3):
        assert SkeinEvaluator().pn(d, n) == homfly_pn(d, n)


def test_budget():
    with pytest.raises(BudgetExceeded):
        homfly_pn(B(*([1] * 9)), 2, crossing_budget=8)
    with pytest.raises(BudgetExceeded):
        jones_via_bracket(B(*([1] * 25)))


def test_timed_metadata():
    out = homfly_pn_timed(B(1, 1, 1), 2)
    assert out["n"] == 2 and out["crossings"] == 3 and out["elapsed"] >= 0
    assert LaurentPoly.from_json_obj(out["polynomial"]) == homfly_pn(B(1, 1, 1), 2)
