"""Sparse linear combinations of basis words with ring coefficients."""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, Iterator, Tuple

from .ring import ONE, ZERO, RingElement

Key = Hashable


class LinearElement:
    """Immutable map basis key -> nonzero RingElement on a fixed strand count."""

    __slots__ = ("strands", "_terms")

    def __init__(self, strands: int, terms: Dict[Key, RingElement] | None = None):
        self.strands = strands
        self._terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, strands: int, key: Key, coeff: RingElement = ONE):
        return cls(strands, {key: coeff})

    @classmethod
    def zero(cls, strands: int):
        return cls(strands, {})

    @property
    def terms(self) -> Dict[Key, RingElement]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Key, RingElement]]:
        return iter(sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0])))

    @staticmethod
    def sort_key(key: Key):
        return key

    def coeff(self, key: Key) -> RingElement:
        return self._terms.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: "LinearElement"):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.strands != self.strands:
            raise ValueError(f"strand mismatch: {self.strands} vs {other.strands}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, ZERO) + c
        return type(self)(self.strands, out)

    def __neg__(self):
        return type(self)(self.strands, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: RingElement):
        if isinstance(c, int):
            c = RingElement.constant(c)
        return type(self)(self.strands, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (RingElement, int)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.strands == other.strands and self._terms == other._terms

    def __hash__(self):
        return hash((self.strands, frozenset(self._terms.items())))

    def map_linear(self, f: Callable[[Key], "LinearElement"], strands: int | None = None):
        """Extend f (defined on basis keys) linearly."""
        acc: Dict[Key, RingElement] = {}
        target = None
        for k, c in self._terms.items():
            image = f(k)
            target = type(image)
            for k2, c2 in image._terms.items():
                acc[k2] = acc.get(k2, ZERO) + c * c2
        if target is None:
            return type(self)(self.strands if strands is None else strands, {})
        return target(self.strands if strands is None else strands, acc)

    def apply_scalar(self, f: Callable[[Key], RingElement]) -> RingElement:
        total = ZERO
        for k, c in self._terms.items():
            total = total + c * f(k)
        return total


def accumulate(into: Dict[Key, RingElement], pairs: Iterable[Tuple[Key, RingElement]], scale: RingElement = ONE):
    for k, c in pairs:
        into[k] = into.get(k, ZERO) + scale * c
