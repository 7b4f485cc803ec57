"""Exact Laurent polynomials in v = q^{1/2} with integer coefficients.

Exponents are stored in v, so ``LaurentPoly({2: 1})`` is q and ``{1: 1, -1: 1}``
is the quantum integer [2].  Besides ring arithmetic this module provides the
quantum integers and balanced Gaussian binomials, and a decision procedure for
membership in the ideal

    I_n = (p, [n;1]^p - [n;1], ..., [n;n//2]^p - [n;n//2])

of Z[q^{1/2}, q^{-1/2}], valid when p is prime.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import BadParameter, CompositeModulus, IndexOutOfRange


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_e v^e`` over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def at_one(self) -> int:
        """Value at q = 1, i.e. the sum of the coefficients."""
        return sum(self._terms.values())

    def evaluate(self, v):
        return sum(c * v**e for e, c in self._terms.items())

    # -- ring operations ------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise BadParameter("exponent must be a non-negative integer")
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^{-1}."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """v -> v^k."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if ``other`` does not divide ``self``."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        top_e, top_c = other.max_exp, other._terms[other.max_exp]
        floor = self.min_exp - other.min_exp if self._terms else 0
        while rem:
            e = max(rem)
            c = rem[e]
            qe, qc = e - top_e, c // top_c
            if c % top_c or qe < floor:
                raise ValueError("inexact division")
            quot[qe] = qc
            for oe, oc in other._terms.items():
                k = oe + qe
                nv = rem.get(k, 0) - qc * oc
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                mono = ("" if abs(c) == 1 else f"{abs(c)}*") + (f"v^{e}" if e != 1 else "v")
            parts.append(("-" if c < 0 else "+") + mono)
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s

    # -- serialization --------------------------------------------------
    def to_json_obj(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items(), reverse=True)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(k): int(c) for k, c in obj.items()})

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def lp_pow(a: LaurentPoly, k: int) -> LaurentPoly:
    return a**k


@lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentPoly:
    """[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}."""
    if n < 0:
        raise BadParameter("quantum_integer needs n >= 0")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def quantum_binomial(n: int, i: int) -> LaurentPoly:
    """Balanced Gaussian binomial prod_{j=1..i} [n-j+1]/[j]."""
    if n < 0 or i < 0 or i > n:
        raise IndexOutOfRange(f"quantum_binomial({n}, {i}) needs 0 <= i <= n")
    num = ONE
    den = ONE
    for j in range(1, i + 1):
        num = num * quantum_integer(n - j + 1)
        den = den * quantum_integer(j)
    return num.divexact(den)


def reduce_coeffs_mod(f: LaurentPoly, p: int) -> LaurentPoly:
    """Coefficientwise reduction to representatives in [0, p)."""
    if p < 2:
        raise BadParameter("modulus must be at least 2")
    return LaurentPoly({e: c % p for e, c in f.items()})


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- univariate polynomials over GF(p), coefficient lists low -> high ------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _to_gfp(f: LaurentPoly, p: int) -> list[int]:
    """Image of f in GF(p)[v], shifted by a unit so the constant term is nonzero."""
    f = reduce_coeffs_mod(f, p)
    if f.is_zero():
        return []
    lo = f.min_exp
    out = [0] * (f.max_exp - lo + 1)
    for e, c in f.items():
        out[e - lo] = c
    return out


def _gfp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = a[-1] * inv % p
        for j, bj in enumerate(b):
            a[k + j] = (a[k + j] - c * bj) % p
        _trim(a)
    return a


def _gfp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _gfp_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


@dataclass(frozen=True)
class IdealSpec:
    """The ideal I_n of Z[q^{±1/2}] for invariant level n and prime modulus p."""

    n: int
    p: int

    def __post_init__(self):
        if self.n < 1:
            raise BadParameter("ideal level n must be >= 1")
        if not is_prime(self.p):
            raise CompositeModulus(f"modulus {self.p} is not prime")

    def generators(self) -> list[LaurentPoly]:
        """[n;i]^p - [n;i] for i = 1..n//2 (the integer generator p is implicit)."""
        return [quantum_binomial(self.n, i) ** self.p - quantum_binomial(self.n, i)
                for i in range(1, self.n // 2 + 1)]

    def residue_gcd(self) -> list[int]:
        """Monic generator of the image of I_n in GF(p)[v^{±1}], as a shifted coefficient list."""
        g: list[int] = []
        for gen in self.generators():
            g = _gfp_gcd(g, _to_gfp(gen, self.p), self.p)
        return g


def membership_witness(d: LaurentPoly, spec: IdealSpec) -> dict:
    """Reduced image of d and the residue gcd deciding whether d lies in I_n."""
    image = _to_gfp(d, spec.p)
    g = spec.residue_gcd()
    if not image:
        member = True
    elif not g:
        member = False
    else:
        member = not _gfp_rem(image, g, spec.p)
    return {"image": image, "gcd": g, "member": member}


def congruent_mod_ideal(f: LaurentPoly, g: LaurentPoly, spec: IdealSpec) -> bool:
    """True iff f - g lies in I_n."""
    return membership_witness(f - g, spec)["member"]


def lp_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for f in polys:
        for e, c in f.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out)
