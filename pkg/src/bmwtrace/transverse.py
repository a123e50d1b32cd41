"""Transverse Markov traces on the Hecke and BMW towers.

A transverse trace only has to satisfy the trace property and positive
stabilization, so its values are linear forms in free parameters:
alpha_k = tau_k(1) and, on the BMW tower, beta = tau_2(e_1).  Values are
returned as ``LinearForm`` objects holding the coefficients of those
parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import tangle
from .bmw import (
    BmwElement,
    _closure_basis,
    _descending,
    _expand_letters,
    hecke_image,
    kauffman_trace,
    reduce_letters,
)
from .braid import E, AlgebraWord, Letter, parse_word
from .hecke import HeckeElement, hecke_reduce, homfly, rmul_descending
from .ring import A, DELTA, DELTA_H, ONE, ZERO, Z, RingElement, UndefinedDegree, a_degrees

__all__ = [
    "LinearForm",
    "HeckeOnlyOperator",
    "transverse_trace_hecke",
    "basic_trace_hecke",
    "pushforward",
    "transverse_trace_bmw",
    "multiplicativity_check",
    "classical_check",
    "MfwReport",
    "mfw",
    "decomposition_check",
]


class HeckeOnlyOperator(ValueError):
    """Operation defined only for forms without a beta coefficient."""


@dataclass(frozen=True)
class LinearForm:
    """b*beta + sum_k c_k*alpha_k with ring coefficients."""

    beta: RingElement = ZERO
    alpha: Tuple[Tuple[int, RingElement], ...] = field(default=())

    def __post_init__(self):
        cleaned = tuple(sorted((k, c) for k, c in dict(self.alpha).items() if c))
        object.__setattr__(self, "alpha", cleaned)

    @classmethod
    def from_dict(cls, alpha: Dict[int, RingElement], beta: RingElement = ZERO) -> "LinearForm":
        return cls(beta, tuple(alpha.items()))

    @classmethod
    def alpha_k(cls, k: int, c: RingElement = ONE) -> "LinearForm":
        return cls(ZERO, ((k, c),))

    @property
    def alpha_dict(self) -> Dict[int, RingElement]:
        return dict(self.alpha)

    def coeff(self, k: int) -> RingElement:
        return self.alpha_dict.get(k, ZERO)

    @property
    def n_max(self) -> int:
        return max((k for k, _ in self.alpha), default=0)

    def is_zero(self) -> bool:
        return not self.beta and not self.alpha

    def __add__(self, other: "LinearForm") -> "LinearForm":
        acc = self.alpha_dict
        for k, c in other.alpha:
            acc[k] = acc.get(k, ZERO) + c
        return LinearForm.from_dict(acc, self.beta + other.beta)

    def __neg__(self):
        return self.scale(-ONE)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: RingElement) -> "LinearForm":
        return LinearForm(c * self.beta, tuple((k, c * v) for k, v in self.alpha))

    def evaluate(self, beta: RingElement, alpha: Dict[int, RingElement]) -> RingElement:
        """Value of the form for concrete parameters."""
        total = self.beta * beta
        for k, c in self.alpha:
            total = total + c * alpha[k]
        return total

    def to_json(self) -> dict:
        return {"beta": str(self.beta), "alpha": {str(k): str(c) for k, c in self.alpha}}

    def __str__(self):
        parts = []
        if self.beta:
            parts.append(f"({self.beta})*beta")
        parts.extend(f"({c})*alpha_{k}" for k, c in self.alpha)
        return " + ".join(parts) if parts else "0"


# -- Hecke tower ------------------------------------------------------------


@lru_cache(maxsize=None)
def _tau_hecke_basis(n: int, tags) -> LinearForm:
    tangle._tick()
    top = max((k for k, t in enumerate(tags, start=1) if t is not None), default=0)
    if top == 0:
        return LinearForm.alpha_k(n)
    i = tags[top - 1]
    u = tags[: top - 1] + (None,) * (n - 1 - top)
    inner = rmul_descending(HeckeElement.basis(n - 1, u), top - 1, i)
    return _tau_hecke(inner).scale(A)


def _tau_hecke(x: HeckeElement) -> LinearForm:
    acc: Dict[int, RingElement] = {}
    for tags, c in x._terms.items():
        for k, v in _tau_hecke_basis(x.strands, tags).alpha:
            acc[k] = acc.get(k, ZERO) + c * v
    return LinearForm.from_dict(acc)


def transverse_trace_hecke(x: HeckeElement | AlgebraWord | str) -> LinearForm:
    """Generic transverse trace tau_n(x) as a form in alpha_1..alpha_n."""
    if isinstance(x, str):
        x = parse_word(x)
    if isinstance(x, AlgebraWord):
        x = hecke_reduce(x)
    return _tau_hecke(x)


def basic_trace_hecke(k: int, x: HeckeElement | AlgebraWord | str) -> RingElement:
    """tau^{(k)}_n(x): the parameters are alpha_j = 1 if j == k else 0."""
    return transverse_trace_hecke(x).coeff(k)


def pushforward(f: LinearForm) -> LinearForm:
    """Move each alpha_k coefficient to alpha_{k+1}."""
    if f.beta:
        raise HeckeOnlyOperator("pushforward is defined for Hecke forms only (beta coefficient must vanish)")
    return LinearForm(ZERO, tuple((k + 1, c) for k, c in f.alpha))


def multiplicativity_check(alpha: Sequence[RingElement]) -> bool:
    """alpha_n = alpha_1^n for every provided n."""
    if not alpha:
        return True
    return all(alpha[n - 1] == alpha[0] ** n for n in range(2, len(alpha) + 1))


def classical_check(alpha: Sequence[RingElement]) -> bool:
    """alpha_n = (delta^H)^{n-1} alpha_1 for every provided n."""
    if not alpha:
        return True
    return all(alpha[n - 1] == DELTA_H ** (n - 1) * alpha[0] for n in range(2, len(alpha) + 1))


# -- BMW tower -------------------------------------------------------------


def _strip(tags) -> tuple:
    k = len(tags)
    while k and tags[k - 1] == 0:
        k -= 1
    return tuple(tags[:k])


def _tau_bmw(N: int, x: BmwElement) -> LinearForm:
    acc = LinearForm()
    for tags, c in x._terms.items():
        acc = acc + _tau_bmw_basis(N, _strip(tags)).scale(c)
    return acc


@lru_cache(maxsize=None)
def _tau_s1_inv(N: int) -> LinearForm:
    if N == 2:
        return LinearForm(Z, ((1, A), (2, -Z)))
    # tau_N(s^{-1}) through the descent of the last strand
    return (
        LinearForm.alpha_k(N - 2, -A * DELTA)
        + LinearForm.alpha_k(N - 1, A + Z * DELTA)
        + _tau_s1_inv(N - 1).scale(DELTA)
        + LinearForm.alpha_k(N, -Z)
    )


@lru_cache(maxsize=None)
def _tau_bmw_basis(N: int, tags) -> LinearForm:
    """tau_N of a basis word (without trailing Id tags) of BMW_{len+1}."""
    tangle._tick()
    if not tags:
        return LinearForm.alpha_k(N)
    k = len(tags)
    if k + 1 > N:
        raise ValueError(f"element of BMW_{k + 1} does not live in BMW_{N}")
    top = tags[-1]
    if k == 1:
        if top < 0:
            return LinearForm.alpha_k(N - 1, A)
        return _tau_s1_inv(N)
    b = BmwElement.basis(k, tags[:-1])
    if top < 0:
        i = -top
        prefix = _descending(k - 1, i, 1) if i <= k - 1 else []
        inner = reduce_letters(k, prefix + list(_expand_letters(tags[:-1])))
        return _tau_bmw(N - 1, inner).scale(A)
    i = top
    suffix = _descending(k - 1, i, -1) if i <= k - 1 else []
    bx = reduce_letters(k, suffix, b)
    xb = reduce_letters(k, suffix + list(_expand_letters(tags[:-1])))
    closed = xb.map_linear(_closure_basis, strands=k - 1)
    closed_e = reduce_letters(k, [Letter(E, k - 1)], _embed(closed, k))
    return _tau_bmw(N - 1, bx).scale(A) + _tau_bmw(N - 1, closed_e).scale(Z) - _tau_bmw(N, bx).scale(Z)


def _embed(x: BmwElement, n: int) -> BmwElement:
    pad = (0,) * (n - x.strands)
    return BmwElement(n, {t + pad: c for t, c in x._terms.items()})


def transverse_trace_bmw(x: BmwElement | AlgebraWord | str) -> LinearForm:
    """Generic transverse trace tau_n(x) as b*beta + sum c_i alpha_i."""
    from .bmw import bmw_reduce

    if isinstance(x, str):
        x = parse_word(x)
    if isinstance(x, AlgebraWord):
        x = bmw_reduce(x)
    return _tau_bmw(x.strands, x)


# -- inequalities ----------------------------------------------------------


@dataclass
class MfwReport:
    writhe: int
    index: int
    d: Optional[int]  # None when the trace vanishes
    per_k: List[Tuple[int, int]]
    holds: bool
    corollary_bound: Optional[int]  # -max a-degree of P
    corollary_holds: bool

    def to_json(self) -> dict:
        return {
            "writhe": self.writhe,
            "index": self.index,
            "d": "vanishing" if self.d is None else self.d,
            "per_k": {str(k): v for k, v in self.per_k},
            "holds": self.holds,
            "self_linking": self.writhe - self.index,
            "corollary_bound": self.corollary_bound,
            "corollary_holds": self.corollary_holds,
        }


def e_functional(f: LinearForm) -> Tuple[Optional[int], List[Tuple[int, int]]]:
    """min over k of (-max a-degree(P_k) - k); None for the zero form."""
    per_k = [(k, -a_degrees(c)[1] - k) for k, c in f.alpha]
    if not per_k:
        return None, []
    return min(v for _, v in per_k), per_k


def mfw(w: AlgebraWord | str) -> MfwReport:
    """The bound -i <= d for a braid and the resulting self-linking bound."""
    if isinstance(w, str):
        w = parse_word(w)
    writhe = sum(letter.sign for letter in w.letters)
    index = w.strands
    f = transverse_trace_hecke(hecke_reduce(w))
    d, per_k = e_functional(f)
    holds = d is None or -index <= d
    try:
        bound = -a_degrees(homfly(w))[1]
    except UndefinedDegree:
        bound = None
    cor = bound is None or writhe - index <= bound
    return MfwReport(writhe, index, d, per_k, holds, bound, cor)


# -- decomposition ---------------------------------------------------------


@dataclass
class DecompositionReport:
    ok: bool
    form: LinearForm
    mismatches: List[str]


def decomposition_check(x: BmwElement, report: bool = False):
    """Check c_i = tau^{(i)}(q_E(x)) and delta*b + sum c_i delta^i = t^K(x)."""
    form = transverse_trace_bmw(x)
    image = transverse_trace_hecke(hecke_image(x))
    bad = []
    for k in range(1, x.strands + 1):
        if form.coeff(k) != image.coeff(k):
            bad.append(f"c_{k}: {form.coeff(k)} != {image.coeff(k)}")
    lhs = DELTA * form.beta
    for k, c in form.alpha:
        lhs = lhs + c * DELTA**k
    rhs = kauffman_trace(x)
    if lhs != rhs:
        bad.append(f"delta*b + sum c_i delta^i = {lhs} != t^K = {rhs}")
    if report:
        return DecompositionReport(not bad, form, bad)
    return not bad


__all__ += ["DecompositionReport", "e_functional"]
