"""Defining and derived relations of the Hecke and BMW algebras.

Each relation is a pair of linear combinations of words; both sides must
have the same normal form, and must keep it after multiplication by any
basis word on either side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .braid import E, S, Letter
from .ring import A, A_INV, DELTA, ONE, Z, RingElement, z_divide

Word = Tuple[Letter, ...]
Side = Tuple[Tuple[RingElement, Word], ...]


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: Side
    rhs: Side

    def describe(self) -> str:
        return f"{_side_text(self.lhs)} = {_side_text(self.rhs)}"


def _word_text(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(letter.token() for letter in word)


def _side_text(side: Side) -> str:
    parts = []
    for c, word in side:
        parts.append(_word_text(word) if c == ONE else f"({c})*{_word_text(word)}")
    return " + ".join(parts) if parts else "0"


def s(i: int, sign: int = 1) -> Letter:
    return Letter(S, i, sign)


def e(i: int) -> Letter:
    return Letter(E, i)


def _w(*letters: Letter) -> Side:
    return ((ONE, tuple(letters)),)


def hecke_relations(n: int) -> List[Relation]:
    """Relations of H_n written with s letters (sigma_i)."""
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation(f"H1[{i},{j}]", _w(s(i), s(j)), _w(s(j), s(i))))
        if i + 1 < n:
            rels.append(Relation(f"H2[{i}]", _w(s(i), s(i + 1), s(i)), _w(s(i + 1), s(i), s(i + 1))))
        rels.append(Relation(f"H3[{i}]", _w(s(i), s(i)), ((ONE, ()), (Z, (s(i),)))))
        rels.append(Relation(f"H4[{i}]", _w(s(i, -1)), ((ONE, (s(i),)), (-Z, ()))))
        # z^{-1} (s^{-1} - s) + 1 = 0
        zi = z_divide(ONE)
        rels.append(Relation(f"H5[{i}]", ((zi, (s(i, -1),)), (-zi, (s(i),)), (ONE, ())), ()))
    return rels


def bmw_relations(n: int) -> List[Relation]:
    """Defining and derived relations of BMW_n."""
    zi = z_divide(ONE)
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation(f"BMW1[{i},{j}]", _w(s(i), s(j)), _w(s(j), s(i))))
        rels.append(Relation(f"defei[{i}]", _w(e(i)), ((zi, (s(i, -1),)), (-zi, (s(i),)), (ONE, ()))))
        rels.append(Relation(f"BMW3[{i}]", _w(e(i), s(i)), ((A_INV, (e(i),)),)))
        rels.append(Relation(f"BMW3r[{i}]", _w(s(i), e(i)), ((A_INV, (e(i),)),)))
        rels.append(Relation(f"BMW7[{i}]", ((ONE, (s(i),)), (-ONE, (s(i, -1),))), ((Z, ()), (-Z, (e(i),)))))
        rels.append(Relation(f"BMW8[{i}]", _w(s(i), s(i)), ((ONE, ()), (Z, (s(i),)), (-Z * A_INV, (e(i),)))))
        rels.append(Relation(
            f"BMW9[{i}]",
            _w(s(i), s(i)),
            ((ONE - Z * A_INV, ()), (A_INV + Z, (s(i),)), (-A_INV, (s(i, -1),))),
        ))
        rels.append(Relation(f"BMW10[{i}]", _w(s(i, -1), s(i, -1)), ((ONE, ()), (-Z, (s(i, -1),)), (Z * A, (e(i),)))))
        rels.append(Relation(
            f"BMW11[{i}]",
            _w(s(i, -1), s(i, -1)),
            ((ONE + Z * A, ()), (A - Z, (s(i, -1),)), (-A, (s(i),))),
        ))
        rels.append(Relation(f"BMW12[{i}]", _w(e(i), e(i)), ((DELTA, (e(i),)),)))
        rels.append(Relation(f"inverse[{i}]", _w(s(i), s(i, -1)), ((ONE, ()),)))
    for i in range(1, n - 1):
        j = i + 1
        rels.append(Relation(f"BMW2[{i}]", _w(s(i), s(j), s(i)), _w(s(j), s(i), s(j))))
        rels.append(Relation(f"BMW4[{i}]", _w(e(i), s(j), e(i)), ((A, (e(i),)),)))
        rels.append(Relation(f"BMW4B[{i}]", _w(e(i), s(j, -1), e(i)), ((A_INV, (e(i),)),)))
        rels.append(Relation(f"BMW4'[{i}]", _w(e(j), s(i), e(j)), ((A, (e(j),)),)))
        rels.append(Relation(f"BMW4B'[{i}]", _w(e(j), s(i, -1), e(j)), ((A_INV, (e(j),)),)))
        rels.append(Relation(f"BMW5[{i}]", _w(e(i), e(j), e(i)), _w(e(i))))
        rels.append(Relation(f"BMW6[{i}]", _w(e(j), e(i), e(j)), _w(e(j))))
        rels.append(Relation(f"BMW13[{i}]", _w(s(j), e(i), s(j)), _w(s(i, -1), e(j), s(i, -1))))
        rels.append(Relation(f"BMW14[{i}]", _w(s(j, -1), e(i), s(j, -1)), _w(s(i), e(j), s(i))))
        rels.append(Relation(
            f"BMW15[{i}]",
            _w(s(j), s(i, -1), s(j)),
            (
                (-Z, (s(j), s(j))),
                (ONE, (s(j), s(i), s(j))),
                (-ONE, (s(i, -1), s(j), s(i, -1))),
                (ONE, (s(i, -1), s(j, -1), s(i, -1))),
                (Z, (s(i, -1), s(i, -1))),
            ),
        ))
        rels.append(Relation(
            f"BMW16[{i}]",
            _w(s(j, -1), s(i), s(j, -1)),
            (
                (Z, (s(j, -1), s(j, -1))),
                (ONE, (s(j, -1), s(i, -1), s(j, -1))),
                (-ONE, (s(i), s(j, -1), s(i))),
                (ONE, (s(i), s(j), s(i))),
                (-Z, (s(i), s(i))),
            ),
        ))
    return rels
