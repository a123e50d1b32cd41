"""The Hecke algebra H_n in the inductive basis.

A basis word is a tuple of tags, one per level k = 1..n-1.  Tag ``None``
means no factor at that level and tag ``i`` means the factor
sigma_k sigma_{k-1} ... sigma_i.  The word is the product of its factors in
increasing level.  These words are reduced expressions, one for each
permutation, so multiplication is done on permutations: T_w T_s is
T_{ws} when the length goes up and T_{ws} + z T_w otherwise.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

from .braid import E, AlgebraWord, parse_word
from .element import LinearElement
from .ring import A, DELTA_H, ONE, ZERO, Z, RingElement
from .tangle import charge

__all__ = [
    "HeckeElement",
    "hecke_basis",
    "hecke_reduce",
    "project_from_bmw",
    "markov_trace_h",
    "homfly",
    "tags_word",
    "format_hecke_tags",
]

Tags = Tuple[Optional[int], ...]


def format_hecke_tags(tags: Tags) -> str:
    if not tags:
        return "."
    return "/".join("." if t is None else str(t) for t in tags)


def tags_word(tags: Tags) -> List[int]:
    """Generator indices of the basis word (all positive)."""
    out: List[int] = []
    for k, t in enumerate(tags, start=1):
        if t is not None:
            out.extend(range(k, t - 1, -1))
    return out


def _tag_sort_key(tags: Tags):
    return tuple(0 if t is None else t for t in tags)


class HeckeElement(LinearElement):
    """Element of H_n keyed by basis tag tuples."""

    sort_key = staticmethod(_tag_sort_key)

    def __mul__(self, other):
        if isinstance(other, (RingElement, int)):
            return self.scale(other)
        self._check(other)
        out = HeckeElement.zero(self.strands)
        for tags, c in other._terms.items():
            part = self
            for j in tags_word(tags):
                part = _rmul_gen(part, j)
            out = out + part.scale(c)
        return out

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*[{format_hecke_tags(k)}]" for k, c in self.items())

    def to_json(self):
        return [{"word": format_hecke_tags(k), "coeff": c.to_json()} for k, c in self.items()]


@lru_cache(maxsize=None)
def _tables(n: int):
    tags_of: Dict[Tuple[int, ...], Tags] = {}
    perm_of: Dict[Tags, Tuple[int, ...]] = {}
    for tags in product(*[[None] + list(range(1, k + 1)) for k in range(1, n)]):
        perm = list(range(n))
        for j in tags_word(tags):
            perm[j - 1], perm[j] = perm[j], perm[j - 1]
        perm_t = tuple(perm)
        if perm_t in tags_of:
            raise AssertionError("inductive Hecke words are not distinct permutations")
        tags_of[perm_t] = tags
        perm_of[tags] = perm_t
    return tags_of, perm_of


def hecke_basis(n: int) -> List[Tags]:
    """All basis words of H_n in serialization order."""
    return sorted(_tables(n)[1], key=_tag_sort_key)


@lru_cache(maxsize=None)
def _rmul_basis(n: int, tags: Tags, j: int) -> Tuple[Tuple[Tags, RingElement], ...]:
    tags_of, perm_of = _tables(n)
    perm = list(perm_of[tags])
    up = perm[j - 1] < perm[j]
    perm[j - 1], perm[j] = perm[j], perm[j - 1]
    new = tags_of[tuple(perm)]
    if up:
        return ((new, ONE),)
    return ((new, ONE), (tags, Z))


def _rmul_gen(x: HeckeElement, j: int, sign: int = 1) -> HeckeElement:
    """x * sigma_j^{sign}."""
    charge(len(x._terms))
    out: Dict[Tags, RingElement] = {}
    for tags, c in x._terms.items():
        for new, c2 in _rmul_basis(x.strands, tags, j):
            out[new] = out.get(new, ZERO) + c * c2
        if sign < 0:
            out[tags] = out.get(tags, ZERO) - c * Z
    return HeckeElement(x.strands, out)


def identity(n: int) -> HeckeElement:
    return HeckeElement.basis(n, (None,) * (n - 1))


def hecke_reduce(w: AlgebraWord | str) -> HeckeElement:
    """Normal form of a braid word in the inductive basis of H_n."""
    if isinstance(w, str):
        w = parse_word(w)
    if not w.is_braid:
        raise ValueError("hecke_reduce takes braid words; use project_from_bmw for e letters")
    x = identity(w.strands)
    for letter in w.letters:
        x = _rmul_gen(x, letter.index, letter.sign)
    return x


def project_from_bmw(w: AlgebraWord | str) -> HeckeElement:
    """Image under s_i -> sigma_i, e_i -> 0."""
    if isinstance(w, str):
        w = parse_word(w)
    if any(letter.kind == E for letter in w.letters):
        return HeckeElement.zero(w.strands)
    return hecke_reduce(w)


def embed(x: HeckeElement, n: int) -> HeckeElement:
    """View x in H_n for n >= x.strands."""
    pad = (None,) * (n - x.strands)
    return HeckeElement(n, {tags + pad: c for tags, c in x._terms.items()})


def rmul_descending(x: HeckeElement, top: int, bottom: int) -> HeckeElement:
    """x * sigma_top sigma_{top-1} ... sigma_bottom (empty when top < bottom)."""
    for j in range(top, bottom - 1, -1):
        x = _rmul_gen(x, j)
    return x


@lru_cache(maxsize=None)
def _trace_basis(tags: Tags) -> RingElement:
    if not tags:
        return DELTA_H
    *rest, top = tags
    n = len(tags)  # element of H_{n+1}
    if top is None:
        return DELTA_H * _trace_basis(tuple(rest))
    inner = rmul_descending(HeckeElement.basis(n, tuple(rest)), n - 1, top)
    return A * markov_trace_h(inner)


def markov_trace_h(x: HeckeElement) -> RingElement:
    """Classical Markov trace t^H with t_1(1) = delta^H."""
    return x.apply_scalar(_trace_basis)


def homfly(w: AlgebraWord | str) -> RingElement:
    """HOMFLY-PT polynomial of the braid closure, unknot = delta^H."""
    if isinstance(w, str):
        w = parse_word(w)
    writhe = sum(letter.sign for letter in w.letters)
    return markov_trace_h(hecke_reduce(w)).mul_a(-writhe)
