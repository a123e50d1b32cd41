"""Exact arithmetic in R = Z[a^{+-1}, q^{+-1}, z^{-1}] with z = q - 1/q.

An element is stored as a sparse Laurent numerator in (a, q) with integer
coefficients together with a power of z in the denominator.  The form is
canonical: the numerator is never divisible by z when the denominator
exponent is positive, so structural equality is ring equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Tuple

__all__ = [
    "RingElement",
    "SingularSpecialization",
    "UndefinedDegree",
    "ZERO",
    "ONE",
    "A",
    "A_INV",
    "Q",
    "Q_INV",
    "Z",
    "DELTA",
    "DELTA_H",
    "ring_add",
    "ring_mul",
    "z_divide",
    "a_degrees",
    "ring_eval",
]

Monomial = Tuple[int, int]


class SingularSpecialization(ValueError):
    """Evaluation point where z or a vanishes."""


class UndefinedDegree(ValueError):
    """Degree requested for the zero element."""


def _slice_divisible_by_z(slice_: Dict[int, int]) -> bool:
    # z = q^{-1}(q - 1)(q + 1): test the roots q = 1 and q = -1.
    at_one = sum(slice_.values())
    at_minus_one = sum(c if e % 2 == 0 else -c for e, c in slice_.items())
    return at_one == 0 and at_minus_one == 0


def _slice_div_z(slice_: Dict[int, int]) -> Dict[int, int]:
    # x / z = q x / (q^2 - 1); coefficientwise: d[k-2] = c[k] + d[k].
    shifted = {e + 1: c for e, c in slice_.items()}
    lo, hi = min(shifted), max(shifted)
    quotient: Dict[int, int] = {}
    for k in range(hi, lo + 1, -1):
        d = shifted.get(k, 0) + quotient.get(k, 0)
        if d:
            quotient[k - 2] = d
    return quotient


def _divisible_by_z(num: Dict[Monomial, int]) -> bool:
    for slice_ in _slices(num).values():
        if not _slice_divisible_by_z(slice_):
            return False
    return True


def _slices(num: Dict[Monomial, int]) -> Dict[int, Dict[int, int]]:
    out: Dict[int, Dict[int, int]] = {}
    for (i, j), c in num.items():
        out.setdefault(i, {})[j] = c
    return out


def _div_z(num: Dict[Monomial, int]) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    for i, slice_ in _slices(num).items():
        for j, c in _slice_div_z(slice_).items():
            out[(i, j)] = c
    return out


class RingElement:
    """Immutable element numerator / z**zden of the coefficient ring."""

    __slots__ = ("_num", "_zden", "_hash")

    def __init__(self, terms: Dict[Monomial, int] | None = None, zden: int = 0, *, _canonical: bool = False):
        if zden < 0:
            raise ValueError("zden must be nonnegative")
        num = {m: c for m, c in (terms or {}).items() if c}
        if not _canonical:
            for c in num.values():
                if isinstance(c, bool) or not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
            while zden > 0 and num and _divisible_by_z(num):
                num = _div_z(num)
                zden -= 1
        if not num:
            zden = 0
        self._num = num
        self._zden = zden
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "RingElement":
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError("only integer constants are allowed in R")
        return cls({(0, 0): c}, 0, _canonical=True)

    @classmethod
    def monomial(cls, c: int, a_exp: int = 0, q_exp: int = 0) -> "RingElement":
        return cls({(a_exp, q_exp): c}, 0, _canonical=True)

    @staticmethod
    def _coerce(other) -> "RingElement":
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return RingElement.constant(other)
        return NotImplemented

    # -- accessors ----------------------------------------------------
    @property
    def zden(self) -> int:
        return self._zden

    @property
    def numerator(self) -> Dict[Monomial, int]:
        return dict(self._num)

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self) -> bool:
        return bool(self._num)

    def sorted_terms(self):
        return sorted(self._num.items())

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._num:
            return self
        if not self._num:
            return other
        k = max(self._zden, other._zden)
        num: Dict[Monomial, int] = {}
        for src in (self, other):
            lift = k - src._zden
            part = src._num
            if lift:
                part = _mul_num(part, _z_power_num(lift))
            for m, c in part.items():
                num[m] = num.get(m, 0) + c
        return RingElement(num, k, _canonical=(k == 0))

    __radd__ = __add__

    def __neg__(self):
        return RingElement({m: -c for m, c in self._num.items()}, self._zden, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._num or not other._num:
            return ZERO
        num = _mul_num(self._num, other._num)
        k = self._zden + other._zden
        if k == 0:
            return RingElement(num, 0, _canonical=True)
        return RingElement(num, k)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in R in general")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._zden == other._zden and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._zden, frozenset(self._num.items())))
        return self._hash

    def bar(self) -> "RingElement":
        """Ring involution a -> 1/a, q -> 1/q (so z -> -z)."""
        sign = -1 if self._zden % 2 else 1
        num = {(-i, -j): sign * c for (i, j), c in self._num.items()}
        return RingElement(num, self._zden, _canonical=True)

    def mul_a(self, k: int) -> "RingElement":
        """Multiply by a**k (k may be negative)."""
        if not k:
            return self
        return RingElement({(i + k, j): c for (i, j), c in self._num.items()}, self._zden, _canonical=True)

    # -- text / json --------------------------------------------------
    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"RingElement({to_text(self)!r})"

    def to_json(self) -> dict:
        return {"zden": self._zden, "terms": [[c, i, j] for (i, j), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "RingElement":
        terms = {}
        for c, i, j in data["terms"]:
            terms[(int(i), int(j))] = terms.get((int(i), int(j)), 0) + int(c)
        return cls(terms, int(data["zden"]))


def _mul_num(x: Dict[Monomial, int], y: Dict[Monomial, int]) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    for (i1, j1), c1 in x.items():
        for (i2, j2), c2 in y.items():
            m = (i1 + i2, j1 + j2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


_Z_POWERS: Dict[int, Dict[Monomial, int]] = {0: {(0, 0): 1}}


def _z_power_num(k: int) -> Dict[Monomial, int]:
    if k not in _Z_POWERS:
        _Z_POWERS[k] = _mul_num(_z_power_num(k - 1), {(0, 1): 1, (0, -1): -1})
    return _Z_POWERS[k]


def _format_monomial(c: int, i: int, j: int) -> str:
    factors = []
    for var, e in (("a", i), ("q", j)):
        if e == 1:
            factors.append(var)
        elif e:
            factors.append(f"{var}^{e}")
    if not factors:
        return str(abs(c))
    body = "*".join(factors)
    return body if abs(c) == 1 else f"{abs(c)}*{body}"


def to_text(x: RingElement) -> str:
    """Canonical text: terms by (a-exp, q-exp) ascending, optional /z^k."""
    terms = x.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for n, ((i, j), c) in enumerate(terms):
        mono = _format_monomial(c, i, j)
        if n == 0:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f" {'+' if c > 0 else '-'} {mono}")
    body = "".join(parts)
    if x.zden:
        if len(terms) > 1:
            body = f"({body})"
        body += "/z" if x.zden == 1 else f"/z^{x.zden}"
    return body


def from_text(text: str) -> RingElement:
    """Inverse of the canonical text form."""
    text = text.strip()
    zden = 0
    m = re.fullmatch(r"\((.*)\)/z(?:\^(\d+))?|(.*?)/z(?:\^(\d+))?", text)
    if m:
        body = m.group(1) if m.group(1) is not None else m.group(3)
        exp = m.group(2) if m.group(1) is not None else m.group(4)
        zden = int(exp) if exp else 1
    else:
        body = text
    body = body.replace(" ", "")
    if body == "0":
        return ZERO
    terms: Dict[Monomial, int] = {}
    for tok in filter(None, re.split(r"(?<!\^)(?=[+-])", body)):
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        coeff = 1
        i = j = 0
        for factor in tok.split("*"):
            if factor.isdigit():
                coeff = int(factor)
            elif factor.startswith("a"):
                i = int(factor[2:]) if "^" in factor else 1
            elif factor.startswith("q"):
                j = int(factor[2:]) if "^" in factor else 1
            else:
                raise ValueError(f"malformed ring term {tok!r}")
        terms[(i, j)] = terms.get((i, j), 0) + sign * coeff
    return RingElement(terms, zden)


ZERO = RingElement({}, 0, _canonical=True)
ONE = RingElement.constant(1)
A = RingElement.monomial(1, 1, 0)
A_INV = RingElement.monomial(1, -1, 0)
Q = RingElement.monomial(1, 0, 1)
Q_INV = RingElement.monomial(1, 0, -1)
Z = Q - Q_INV
DELTA_H = RingElement({(1, 0): 1, (-1, 0): -1}, 1)
DELTA = DELTA_H + ONE


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def z_divide(x: RingElement) -> RingElement:
    """Return x / z in canonical form."""
    if x.is_zero():
        return ZERO
    num = x._num
    if _divisible_by_z(num):
        return RingElement(_div_z(num), x.zden, _canonical=True)
    return RingElement(num, x.zden + 1, _canonical=True)


def a_degrees(x: RingElement) -> Tuple[int, int]:
    """Minimal and maximal power of a in the numerator."""
    if x.is_zero():
        raise UndefinedDegree("degree of 0 is undefined")
    exps = [i for (i, _j) in x._num]
    return min(exps), max(exps)


def ring_eval(x: RingElement, a0, q0) -> Fraction:
    """Exact rational value at a = a0, q = q0."""
    a0, q0 = Fraction(a0), Fraction(q0)
    if a0 == 0 or q0 in (0, 1, -1):
        raise SingularSpecialization(f"cannot evaluate at a={a0}, q={q0}")
    total = Fraction(0)
    for (i, j), c in x._num.items():
        total += c * a0**i * q0**j
    return total / (q0 - 1 / q0) ** x.zden


def dot(pairs: Iterable[Tuple[RingElement, RingElement]]) -> RingElement:
    """Sum of products x*y over the pairs, normalized once at the end."""
    raw = []
    k = 0
    for x, y in pairs:
        if not x._num or not y._num:
            continue
        d = x._zden + y._zden
        raw.append((_mul_num(x._num, y._num), d))
        if d > k:
            k = d
    num: Dict[Monomial, int] = {}
    for part, d in raw:
        if d < k:
            part = _mul_num(part, _z_power_num(k - d))
        for m, c in part.items():
            num[m] = num.get(m, 0) + c
    return RingElement(num, k, _canonical=(k == 0))
