"""Brute-force link polynomials of braid closures by skein recursion.

This module is deliberately independent of the algebra code: it works on
the closed diagram of a word, switches the first crossing that keeps the
diagram from being descending, and stops at descending diagrams, which
are unlinks.  It serves as the reference for the trace-based invariants.

Conventions: all strands of a braid point upwards, s_j is a positive
crossing whose over strand goes from position j to j+1, and e_j is a
cap followed by a cup.  Components are stacked in the order they are
found; earlier components lie above later ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .braid import E, AlgebraWord, parse_word
from .ring import DELTA, DELTA_H, ONE, Z, RingElement

__all__ = ["SkeinNode", "OracleBudgetExceeded", "homfly_oracle", "kauffman_oracle", "kauffman_framed"]

# letters: ("s", j, eps) or ("e", j)
OWord = Tuple[Tuple, ...]


class OracleBudgetExceeded(RuntimeError):
    """The skein tree grew beyond the allowed number of nodes."""


@dataclass(frozen=True)
class SkeinNode:
    """One branch of a skein step: coeff * a**shift * value(word)."""

    word: OWord
    coeff: RingElement
    shift: int = 0


class _Counter:
    limit = 2_000_000
    used = 0


_COUNTER = _Counter()


def _count():
    _COUNTER.used += 1
    if _COUNTER.used > _COUNTER.limit:
        raise OracleBudgetExceeded(f"skein oracle exceeded {_COUNTER.limit} nodes")


class _Closure:
    """Components of the closed diagram and the over/under data of crossings."""

    def __init__(self, n: int, word: OWord):
        length = len(word)
        adj: Dict[Tuple[int, int], List[Tuple[int, Tuple[int, int], Optional[Tuple[int, str]]]]] = {}
        count = 0

        def node(t, p):
            return (0, p) if t == length else (t, p)

        def link(u, v, info=None):
            nonlocal count
            u, v = node(*u), node(*v)
            adj.setdefault(u, []).append((count, v, info))
            adj.setdefault(v, []).append((count, u, info))
            count += 1

        for t, letter in enumerate(word):
            j = letter[1]
            for p in range(1, n + 1):
                if p == j or p == j + 1:
                    continue
                link((t, p), (t + 1, p))
            if letter[0] == "s":
                link((t, j), (t + 1, j + 1), (t, "A", (t, j)))
                link((t, j + 1), (t + 1, j), (t, "B", (t, j + 1)))
            else:
                link((t, j), (t, j + 1))
                link((t + 1, j), (t + 1, j + 1))
        self.word = word
        self.components: List[List[Tuple[int, str, bool]]] = []
        self.loose = 0  # strands of an empty word: each one is a free loop
        if not word:
            self.loose = n
            return
        seen = set()
        for start in sorted(adj):
            if start in seen:
                continue
            events = []
            prev = None
            cur = start
            while True:
                seen.add(cur)
                options = [x for x in adj[cur] if x[0] != prev]
                eid, nxt, info = min(options)
                if info is not None:
                    events.append((info[0], info[1], cur == info[2]))
                prev = eid
                cur = nxt
                if cur == start:
                    break
            self.components.append(events)

    def first_bad(self) -> Optional[int]:
        where: Dict[int, Dict[str, Tuple[int, int]]] = {}
        for cid, events in enumerate(self.components):
            for k, (t, seg, _up) in enumerate(events):
                where.setdefault(t, {})[seg] = (cid, k)
        for t in sorted(where):
            letter = self.word[t]
            over, under = ("A", "B") if letter[2] == 1 else ("B", "A")
            (c_o, k_o), (c_u, k_u) = where[t][over], where[t][under]
            if (c_o, k_o) > (c_u, k_u):
                return t
        return None

    def self_writhes(self) -> List[int]:
        out = []
        for events in self.components:
            by_t: Dict[int, List[bool]] = {}
            for t, _seg, up in events:
                by_t.setdefault(t, []).append(up)
            w = 0
            for t, ups in by_t.items():
                if len(ups) == 2:
                    eps = self.word[t][2]
                    w += eps if ups[0] == ups[1] else -eps
            out.append(w)
        return out

    @property
    def count(self) -> int:
        return len(self.components) + self.loose


def _oword(w: AlgebraWord) -> OWord:
    return tuple(("e", l.index) if l.kind == E else ("s", l.index, l.sign) for l in w.letters)


# -- HOMFLY-PT ---------------------------------------------------------------


def _homfly_step(n: int, word: OWord) -> Optional[List[SkeinNode]]:
    c = _Closure(n, word)
    t = c.first_bad()
    if t is None:
        return None
    _, j, eps = word[t]
    switched = word[:t] + (("s", j, -eps),) + word[t + 1:]
    smoothed = word[:t] + word[t + 1:]
    if eps == 1:
        # a P(L+) - a^{-1} P(L-) = z P(L0)
        return [SkeinNode(switched, ONE, -2), SkeinNode(smoothed, Z, -1)]
    return [SkeinNode(switched, ONE, 2), SkeinNode(smoothed, -Z, 1)]


@lru_cache(maxsize=None)
def _homfly(n: int, word: OWord) -> RingElement:
    _count()
    step = _homfly_step(n, word)
    if step is None:
        return DELTA_H ** _Closure(n, word).count
    total = RingElement()
    for node in step:
        total = total + (node.coeff * _homfly(n, node.word)).mul_a(node.shift)
    return total


def homfly_oracle(w: AlgebraWord | str) -> RingElement:
    """HOMFLY-PT polynomial of the closure, unknot = delta^H."""
    if isinstance(w, str):
        w = parse_word(w)
    if not w.is_braid:
        raise ValueError("homfly_oracle takes braid words")
    return _homfly(w.strands, _oword(w))


# -- Kauffman ----------------------------------------------------------------


def _kauffman_step(n: int, word: OWord) -> Optional[List[SkeinNode]]:
    c = _Closure(n, word)
    t = c.first_bad()
    if t is None:
        return None
    _, j, eps = word[t]
    switched = word[:t] + (("s", j, -eps),) + word[t + 1:]
    smoothed = word[:t] + word[t + 1:]
    turned = word[:t] + (("e", j),) + word[t + 1:]
    sign = Z if eps == 1 else -Z
    # L+ - L- = z (L0 - Linf)
    return [SkeinNode(switched, ONE), SkeinNode(smoothed, sign), SkeinNode(turned, -sign)]


@lru_cache(maxsize=None)
def _framed(n: int, word: OWord) -> RingElement:
    _count()
    step = _kauffman_step(n, word)
    if step is None:
        c = _Closure(n, word)
        value = DELTA**c.count
        return value.mul_a(sum(c.self_writhes()))
    total = RingElement()
    for node in step:
        total = total + node.coeff * _framed(n, node.word)
    return total


def kauffman_framed(w: AlgebraWord | str) -> RingElement:
    """Regular isotopy invariant of the closure of a word (e letters allowed)."""
    if isinstance(w, str):
        w = parse_word(w)
    return _framed(w.strands, _oword(w))


def kauffman_oracle(w: AlgebraWord | str) -> RingElement:
    """Two-variable Kauffman polynomial of the closure, unknot = delta."""
    if isinstance(w, str):
        w = parse_word(w)
    if not w.is_braid:
        raise ValueError("kauffman_oracle takes braid words")
    writhe = sum(l.sign for l in w.letters)
    return kauffman_framed(w).mul_a(-writhe)


def reset_budget(limit: int = 2_000_000):
    _COUNTER.limit = limit
    _COUNTER.used = 0
