"""Braid words and BMW algebra words.

Text grammar: ``<n> ":" tokens`` where a signed integer ``i`` or ``-i``
stands for s_i or its inverse and ``e<i>`` stands for e_i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

__all__ = [
    "Letter",
    "AlgebraWord",
    "WordParseError",
    "parse_word",
    "braid_word",
    "writhe_and_index",
    "shift",
    "tensor_embed",
    "closure_components",
    "permutation",
]

S, E = "S", "E"


class WordParseError(ValueError):
    """Malformed or out-of-range word."""


@dataclass(frozen=True, order=True)
class Letter:
    kind: str
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (S, E):
            raise WordParseError(f"unknown letter kind {self.kind!r}")
        if self.sign not in (1, -1) or (self.kind == E and self.sign != 1):
            raise WordParseError(f"bad sign for letter {self.kind}{self.index}")

    def token(self) -> str:
        if self.kind == E:
            return f"e{self.index}"
        return str(self.index * self.sign)


@dataclass(frozen=True)
class AlgebraWord:
    """Word in s_i^{+-1} and e_i on a fixed number of strands."""

    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise WordParseError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not 1 <= letter.index <= self.strands - 1:
                raise WordParseError(
                    f"index {letter.index} out of range for {self.strands} strands"
                )

    @property
    def is_braid(self) -> bool:
        return all(letter.kind == S for letter in self.letters)

    def __str__(self) -> str:
        body = " ".join(letter.token() for letter in self.letters)
        return f"{self.strands}: {body}" if body else f"{self.strands}:"

    def __mul__(self, other: "AlgebraWord") -> "AlgebraWord":
        if self.strands != other.strands:
            raise WordParseError("strand mismatch in concatenation")
        return AlgebraWord(self.strands, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)


_TOKEN = re.compile(r"^(?:([+-]?\d+)|e(\d+))$")


def parse_word(text: str) -> AlgebraWord:
    """Parse ``"3: 1 -2 e1"`` into an AlgebraWord."""
    if ":" not in text:
        raise WordParseError(f"missing ':' in {text!r}")
    head, _, body = text.partition(":")
    try:
        n = int(head.strip())
    except ValueError:
        raise WordParseError(f"bad strand count {head!r}") from None
    letters = []
    for tok in body.split():
        m = _TOKEN.match(tok)
        if not m:
            raise WordParseError(f"malformed token {tok!r}")
        if m.group(1) is not None:
            v = int(m.group(1))
            if v == 0:
                raise WordParseError("generator index 0 is not allowed")
            letters.append(Letter(S, abs(v), 1 if v > 0 else -1))
        else:
            letters.append(Letter(E, int(m.group(2))))
    return AlgebraWord(n, tuple(letters))


def braid_word(n: int, ints: Iterable[int]) -> AlgebraWord:
    """Build a braid word from signed generator indices."""
    return AlgebraWord(n, tuple(Letter(S, abs(v), 1 if v > 0 else -1) for v in ints))


def writhe_and_index(w: AlgebraWord) -> Tuple[int, int]:
    if not w.is_braid:
        raise WordParseError("writhe is defined for braid words only")
    return sum(letter.sign for letter in w.letters), w.strands


def shift(w: AlgebraWord, m: int, new_strands: int) -> AlgebraWord:
    """Raise every index by m and view the word on new_strands strands."""
    if m < 0:
        raise WordParseError("shift must be nonnegative")
    letters = tuple(Letter(x.kind, x.index + m, x.sign) for x in w.letters)
    return AlgebraWord(new_strands, letters)


def tensor_embed(w1: AlgebraWord, w2: AlgebraWord) -> AlgebraWord:
    """w1 on the first strands followed by w2 on the next ones."""
    n = w1.strands + w2.strands
    return AlgebraWord(n, w1.letters + shift(w2, w1.strands, n).letters)


def permutation(w: AlgebraWord) -> Tuple[int, ...]:
    """Position reached at the top by the strand starting at each bottom position."""
    if not w.is_braid:
        raise WordParseError("permutation is defined for braid words only")
    pos = list(range(w.strands))  # pos[strand] = current position
    where = list(range(w.strands))  # where[position] = strand
    for letter in w.letters:
        j = letter.index - 1
        a, b = where[j], where[j + 1]
        where[j], where[j + 1] = b, a
        pos[a], pos[b] = j + 1, j
    return tuple(pos)


def closure_components(w: AlgebraWord) -> int:
    perm = permutation(w)
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if not seen[start]:
            count += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
    return count
