"""The BMW algebra BMW_n in the inductive basis.

A basis word of BMW_n is a tuple of tags, one per level k = 1..n-1, encoded
as integers: 0 for Id, +i for X(i) and -i for Y(i).  At level k the tag
turns an element b of BMW_k into b (Id), b x_{k,i} (X(i)) or y_{i,k} b
(Y(i)) in BMW_{k+1}, where x_{k,i} = s_k^{-1}...s_i^{-1} and
y_{i,k} = s_i...s_k.

Right multiplication of a basis word by a generator is computed once and
cached: letters that only touch the level n-1 part recurse into the table
of BMW_{n-1}, the rest go through the tangle reduction in ``tangle.py``.
Everything else is built from that table.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Tuple

from .braid import E, S, AlgebraWord, Letter, parse_word
from .element import LinearElement
from .hecke import HeckeElement, hecke_reduce
from .ring import A, A_INV, DELTA, ZERO, RingElement, dot, z_divide
from .tangle import charge, tangle_reduce

__all__ = [
    "BmwElement",
    "bmw_basis",
    "basis_word_expand",
    "bmw_reduce",
    "bmw_mul",
    "bmw_identity",
    "closure",
    "eta",
    "kauffman_trace",
    "kauffman_poly",
    "format_bmw_tags",
    "parse_bmw_tags",
    "embed",
    "hecke_image",
]

Tags = Tuple[int, ...]


def format_bmw_tags(tags: Tags) -> str:
    if not tags:
        return "."
    return "/".join("." if t == 0 else (f"x{t}" if t > 0 else f"y{-t}") for t in tags)


def parse_bmw_tags(text: str, n: int) -> Tags:
    if n == 1:
        if text.strip() not in (".", ""):
            raise ValueError("BMW_1 has the single basis word '.'")
        return ()
    out = []
    parts = text.strip().split("/")
    if len(parts) != n - 1:
        raise ValueError(f"expected {n - 1} levels in {text!r}")
    for k, part in enumerate(parts, start=1):
        if part == ".":
            out.append(0)
        elif part[:1] in ("x", "y") and part[1:].isdigit() and 1 <= int(part[1:]) <= k:
            out.append(int(part[1:]) if part[0] == "x" else -int(part[1:]))
        else:
            raise ValueError(f"bad tag {part!r} at level {k}")
    return tuple(out)


def _tag_order(t: int):
    return 0 if t == 0 else (t if t > 0 else 10**6 - t)


def _tags_sort_key(tags: Tags):
    return tuple(_tag_order(t) for t in tags)


class BmwElement(LinearElement):
    """Element of BMW_n keyed by basis tag tuples."""

    sort_key = staticmethod(_tags_sort_key)

    def __mul__(self, other):
        if isinstance(other, (RingElement, int)):
            return self.scale(other)
        return bmw_mul(self, other)

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*[{format_bmw_tags(k)}]" for k, c in self.items())

    def to_json(self):
        return [{"word": format_bmw_tags(k), "coeff": c.to_json()} for k, c in self.items()]


def bmw_basis(n: int) -> List[Tags]:
    """All basis words of BMW_n in serialization order."""
    levels = [[0] + list(range(1, k + 1)) + [-i for i in range(1, k + 1)] for k in range(1, n)]
    return sorted(product(*levels), key=_tags_sort_key)


def _descending(k: int, i: int, sign: int) -> List[Letter]:
    if sign < 0:
        return [Letter(S, j, -1) for j in range(k, i - 1, -1)]
    return [Letter(S, j, 1) for j in range(i, k + 1)]


@lru_cache(maxsize=None)
def _expand_letters(tags: Tags) -> Tuple[Letter, ...]:
    if not tags:
        return ()
    k = len(tags)
    inner = list(_expand_letters(tags[:-1]))
    t = tags[-1]
    if t > 0:
        return tuple(inner + _descending(k, t, -1))
    if t < 0:
        return tuple(_descending(k, -t, 1) + inner)
    return tuple(inner)


def basis_word_expand(tags: Tags, n: int | None = None) -> AlgebraWord:
    """Concrete word in s_i^{+-1} for a basis word."""
    return AlgebraWord(len(tags) + 1 if n is None else n, _expand_letters(tuple(tags)))


def _letter_pieces(letter: Letter):
    if letter.kind == E:
        return (("C", letter.index), ("U", letter.index))
    return (("X", letter.index, letter.sign),)


def word_pieces(letters: Iterable[Letter]):
    out = []
    for letter in letters:
        out.extend(_letter_pieces(letter))
    return tuple(out)


def _inner_letter(tags: Tags, letter: Letter):
    """The letter acting on the level n-1 part, when it only touches that part.

    Id and Y(i) tops leave letters of index <= n-2 untouched; x_{n-1,i}
    commutes with index <= i-2 and satisfies x g_j = g_{j-1} x for j > i.
    """
    n = len(tags) + 1
    t, j = tags[-1], letter.index
    if t <= 0:
        return letter if j <= n - 2 else None
    if j <= t - 2:
        return letter
    if j > t:
        return Letter(letter.kind, j - 1, letter.sign)
    return None


@lru_cache(maxsize=None)
def _rmul_basis(n: int, tags: Tags, letter: Letter) -> Tuple[Tuple[Tags, RingElement], ...]:
    if n >= 3:
        inner = _inner_letter(tags, letter)
        if inner is not None:
            top = tags[-1]
            return tuple((b + (top,), c) for b, c in _rmul_basis(n - 1, tags[:-1], inner))
    pieces = word_pieces(_expand_letters(tags) + (letter,))
    result = tangle_reduce(n, pieces)
    return tuple(sorted(result.items()))


def rmul_letter(x: BmwElement, letter: Letter) -> BmwElement:
    charge(len(x._terms))
    pending: Dict[Tags, list] = {}
    for tags, c in x._terms.items():
        for new, c2 in _rmul_basis(x.strands, tags, letter):
            pending.setdefault(new, []).append((c, c2))
    return BmwElement(x.strands, {k: dot(v) for k, v in pending.items()})


def bmw_identity(n: int) -> BmwElement:
    return BmwElement.basis(n, (0,) * (n - 1))


def bmw_reduce(w: AlgebraWord | str) -> BmwElement:
    """Normal form of an algebra word in the inductive basis of BMW_n."""
    if isinstance(w, str):
        w = parse_word(w)
    x = bmw_identity(w.strands)
    for letter in w.letters:
        x = rmul_letter(x, letter)
    return x


def reduce_letters(n: int, letters: Iterable[Letter], start: BmwElement | None = None) -> BmwElement:
    x = bmw_identity(n) if start is None else start
    for letter in letters:
        x = rmul_letter(x, letter)
    return x


def bmw_mul(x: BmwElement, y: BmwElement) -> BmwElement:
    """Product x*y in normal form."""
    if x.strands != y.strands:
        raise ValueError(f"strand mismatch: {x.strands} vs {y.strands}")
    out = BmwElement.zero(x.strands)
    for tags, c in y._terms.items():
        out = out + reduce_letters(x.strands, _expand_letters(tags), x).scale(c)
    return out


def embed(x: BmwElement, n: int) -> BmwElement:
    """View x in BMW_n for n >= x.strands via the tower inclusions."""
    pad = (0,) * (n - x.strands)
    return BmwElement(n, {tags + pad: c for tags, c in x._terms.items()})


def combine_pair(n: int, i: int, j: int, inner: Dict[Tags, RingElement]) -> Dict[Tags, RingElement]:
    """Basis coefficients of y_{i,n-1} b e_n x_{n-1,j} in BMW_{n+1}.

    Here b in BMW_{n-1} is given by its coefficients ``inner``.  Expanding e_n
    as 1 + (s_n^{-1} - s_n)/z produces three terms that are each already in
    basis shape once their BMW_n parts are reduced.
    """
    out: Dict[Tags, RingElement] = {}

    def add(tags, c):
        out[tags] = out.get(tags, ZERO) + c

    if n == 1:
        c = inner.get((), ZERO)
        add((0,), c)
        add((j,), z_divide(c))
        add((-i,), -z_divide(c))
        return {k: v for k, v in out.items() if v}
    y = _descending(n - 1, i, 1) if i <= n - 1 else []
    x = _descending(n - 1, j, -1) if j <= n - 1 else []
    for tags, c in inner.items():
        core = list(_expand_letters(tags))
        full = reduce_letters(n, y + core + x)
        left = reduce_letters(n, y + core)
        right = reduce_letters(n, core + x)
        for t2, c2 in full._terms.items():
            add(t2 + (0,), c * c2)
        for t2, c2 in left._terms.items():
            add(t2 + (j,), z_divide(c * c2))
        for t2, c2 in right._terms.items():
            add(t2 + (-i,), -z_divide(c * c2))
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _closure_basis(tags: Tags) -> BmwElement:
    n = len(tags)  # element of BMW_{n+1}, closes to BMW_n
    b, top = tags[:-1], tags[-1]
    if top == 0:
        return BmwElement(n, {b: DELTA})
    start = BmwElement.basis(n, b)
    if top > 0:
        suffix = _descending(n - 1, top, -1) if top <= n - 1 else []
        return reduce_letters(n, suffix, start).scale(A_INV)
    i = -top
    prefix = _descending(n - 1, i, 1) if i <= n - 1 else []
    return reduce_letters(n, prefix + list(_expand_letters(b))).scale(A)


def closure(x: BmwElement) -> BmwElement:
    """Close the last strand: BMW_{n+1} -> BMW_n."""
    if x.strands < 2:
        raise ValueError("closure needs at least two strands")
    return x.map_linear(_closure_basis, strands=x.strands - 1)


@lru_cache(maxsize=None)
def _trace_basis(tags: Tags) -> RingElement:
    if not tags:
        return DELTA
    return _closure_basis(tags).apply_scalar(_trace_basis)


def kauffman_trace(x: BmwElement) -> RingElement:
    """Markov trace t^K with t_1(1) = delta."""
    return x.apply_scalar(_trace_basis)


def kauffman_poly(w: AlgebraWord | str) -> RingElement:
    """Two-variable Kauffman polynomial of the braid closure, unknot = delta."""
    if isinstance(w, str):
        w = parse_word(w)
    if not w.is_braid:
        raise ValueError("kauffman_poly takes braid words")
    writhe = sum(letter.sign for letter in w.letters)
    return kauffman_trace(bmw_reduce(w)).mul_a(-writhe)


def eta(x: BmwElement) -> BmwElement:
    """Anti-automorphism s_i -> s_i^{-1} with bar-conjugated coefficients."""
    return BmwElement(x.strands, {tuple(-t for t in tags): c.bar() for tags, c in x._terms.items()})


def eta_word(w: AlgebraWord) -> AlgebraWord:
    """Image of a word under eta (reversed, signs of s letters flipped)."""
    return AlgebraWord(w.strands, tuple(Letter(l.kind, l.index, -l.sign if l.kind == S else 1) for l in reversed(w.letters)))


@lru_cache(maxsize=None)
def _hecke_basis_image(n: int, tags: Tags) -> HeckeElement:
    return hecke_reduce(AlgebraWord(n, _expand_letters(tags)))


def hecke_image(x: BmwElement) -> HeckeElement:
    """Image of x under s_i -> sigma_i, e_i -> 0, basis word by basis word."""
    out = HeckeElement.zero(x.strands)
    for tags, c in x._terms.items():
        out = out + _hecke_basis_image(x.strands, tags).scale(c)
    return out
