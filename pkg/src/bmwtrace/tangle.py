"""Framed tangle words and their reduction to the inductive BMW basis.

A tangle word is read from bottom to top and is made of pieces on a
varying number of points:

* ``("X", j, eps)``: a crossing of the points j, j+1 (s_j for eps = 1,
  s_j^{-1} for eps = -1);
* ``("C", j)``: a cap joining the points j, j+1 (the count drops by 2);
* ``("U", j)``: a cup creating two new points j, j+1.

e_j is the cap/cup pair at j.  In s_j the strand going from bottom j to top
j+1 passes over; in s_j^{-1} the strand going from bottom j+1 to top j does.

Reduction follows the lifting argument behind the inductive basis: the
strand (or pair of arcs) attached to the last points is made to lie above
the rest of the diagram and to be descending, using the skein relation
s - s^{-1} = z (1 - e) on offending crossings.  Such a strand is then
a standard arc up to framing, so it can be removed and replaced by the
corresponding basis factor.  Free loops are removed the same way with the
factor delta.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .ring import DELTA, ONE, ZERO, Z, RingElement

Piece = Tuple
Pieces = Tuple[Piece, ...]
Tags = Tuple[int, ...]

# Tag encoding used internally: 0 = Id, +i = X(i), -i = Y(i).


class BudgetExceeded(RuntimeError):
    """The reduction used more steps than allowed."""


class _Budget:
    limit: Optional[int] = None
    used = 0


BUDGET = _Budget()


def charge(steps: int = 1):
    """Count rewrite steps against the active budget."""
    BUDGET.used += steps
    if BUDGET.limit is not None and BUDGET.used > BUDGET.limit:
        raise BudgetExceeded(f"step budget of {BUDGET.limit} exceeded")


_tick = charge


def widths(bottom: int, pieces: Pieces) -> List[int]:
    out = [bottom]
    for p in pieces:
        w = out[-1]
        if p[0] == "C":
            w -= 2
        elif p[0] == "U":
            w += 2
        out.append(w)
    return out


class _Diagram:
    """Connectivity of a tangle word: components, traversals, crossings."""

    def __init__(self, bottom: int, pieces: Pieces):
        self.pieces = pieces
        self.w = widths(bottom, pieces)
        top = len(pieces)
        adj: Dict[Tuple[int, int], List[Tuple[int, Tuple[int, int], Optional[Tuple[int, str]]]]] = {}
        edge_id = 0

        def link(u, v, info=None):
            nonlocal edge_id
            adj.setdefault(u, []).append((edge_id, v, info))
            adj.setdefault(v, []).append((edge_id, u, info))
            edge_id += 1

        for t, p in enumerate(pieces):
            w = self.w[t]
            kind, j = p[0], p[1]
            if kind == "X":
                for q in range(1, w + 1):
                    if q == j:
                        link((t, j), (t + 1, j + 1), (t, "A"))
                    elif q == j + 1:
                        link((t, j + 1), (t + 1, j), (t, "B"))
                    else:
                        link((t, q), (t + 1, q))
            elif kind == "C":
                for q in range(1, w + 1):
                    if q < j:
                        link((t, q), (t + 1, q))
                    elif q > j + 1:
                        link((t, q), (t + 1, q - 2))
                link((t, j), (t, j + 1))
            else:
                for q in range(1, w + 1):
                    link((t, q), (t + 1, q if q < j else q + 2))
                link((t + 1, j), (t + 1, j + 1))
        for q in range(1, self.w[0] + 1):
            adj.setdefault((0, q), [])
        for q in range(1, self.w[top] + 1):
            adj.setdefault((top, q), [])
        self.adj = adj
        self.top = top
        self.owner: Dict[Tuple[int, int], int] = {}
        # per component: list of (crossing t, segment, going_up)
        self.events: List[List[Tuple[int, str, bool]]] = []
        self.ends: List[Tuple[Tuple[int, int], Optional[Tuple[int, int]]]] = []
        self.is_loop: List[bool] = []

    def endpoint_label(self, node):
        t, q = node
        return ("b", q) if t == 0 else ("t", q)

    def trace_from(self, start) -> int:
        """Walk the component containing boundary or loop node start."""
        cid = len(self.events)
        events: List[Tuple[int, str, bool]] = []
        prev_edge = None
        cur = start
        while True:
            self.owner[cur] = cid
            nxt = [(e, v, info) for e, v, info in self.adj[cur] if e != prev_edge]
            if not nxt:
                end = cur
                loop = False
                break
            e, v, info = min(nxt)
            if v in self.owner and self.owner[v] == cid and v == start:
                end = None
                loop = True
                if info is not None:
                    events.append((info[0], info[1], v[0] > cur[0]))
                break
            if info is not None:
                events.append((info[0], info[1], v[0] > cur[0]))
            prev_edge = e
            cur = v
        self.events.append(events)
        self.ends.append((start, end))
        self.is_loop.append(loop)
        return cid

    def trace_all(self):
        for q in range(1, self.w[0] + 1):
            if (0, q) not in self.owner:
                self.trace_from((0, q))
        for q in range(1, self.w[self.top] + 1):
            if (self.top, q) not in self.owner:
                self.trace_from((self.top, q))
        for node in sorted(self.adj):
            if node not in self.owner:
                self.trace_from(node)

    def crossing_owners(self):
        """Map crossing t -> {segment: (component, first visit index)}."""
        seen: Dict[int, Dict[str, Tuple[int, int]]] = {}
        for cid, events in enumerate(self.events):
            for k, (t, seg, _up) in enumerate(events):
                seen.setdefault(t, {})[seg] = (cid, k)
        return seen


def _component_writhe(d: _Diagram, cid: int) -> int:
    by_t: Dict[int, List[bool]] = {}
    for t, _seg, up in d.events[cid]:
        by_t.setdefault(t, []).append(up)
    total = 0
    for t, ups in by_t.items():
        if len(ups) == 2:
            eps = d.pieces[t][2]
            total += eps if ups[0] == ups[1] else -eps
    return total


def _first_bad_crossing(d: _Diagram, ranked: List[int]) -> Optional[int]:
    """First crossing violating the layering ranked[0] > ranked[1] > ... > rest."""
    rank = {cid: r for r, cid in enumerate(ranked)}
    owners = d.crossing_owners()
    bad = []
    for t, segs in owners.items():
        eps = d.pieces[t][2]
        over = "A" if eps == 1 else "B"
        under = "B" if eps == 1 else "A"
        c_over, k_over = segs[over]
        c_under, k_under = segs[under]
        r_over = rank.get(c_over, len(ranked))
        r_under = rank.get(c_under, len(ranked))
        if c_over == c_under:
            if c_over in rank and k_under < k_over:
                bad.append(t)
        elif r_under < r_over:
            bad.append(t)
    return min(bad) if bad else None


def _remove(d: _Diagram, cids) -> Tuple[int, Pieces]:
    gone = {node for node, c in d.owner.items() if c in cids}

    def below(t, j):
        return sum(1 for q in range(1, j) if (t, q) in gone)

    out = []
    for t, p in enumerate(d.pieces):
        kind, j = p[0], p[1]
        if kind == "X":
            if (t, j) in gone or (t, j + 1) in gone:
                continue
            out.append(("X", j - below(t, j), p[2]))
        elif kind == "C":
            if (t, j) in gone:
                continue
            out.append(("C", j - below(t, j)))
        else:
            if (t + 1, j) in gone:
                continue
            out.append(("U", j - below(t, j)))
    bottom = d.w[0] - sum(1 for q in range(1, d.w[0] + 1) if (0, q) in gone)
    return bottom, tuple(out)


def _switch(pieces: Pieces, t: int):
    """Skein expansion of crossing t: list of (coefficient, pieces)."""
    _kind, j, eps = pieces[t]
    flipped = pieces[:t] + (("X", j, -eps),) + pieces[t + 1:]
    smooth = pieces[:t] + pieces[t + 1:]
    turn = pieces[:t] + (("C", j), ("U", j)) + pieces[t + 1:]
    if eps == 1:
        return [(ONE, flipped), (Z, smooth), (-Z, turn)]
    return [(ONE, flipped), (-Z, smooth), (Z, turn)]


Result = Dict[Tags, RingElement]


def _add_into(acc: Result, part: Result, c: RingElement):
    for k, v in part.items():
        acc[k] = acc.get(k, ZERO) + c * v


def _clean(acc: Result) -> Result:
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _reduce_cached(bottom: int, pieces: Pieces) -> Tuple[Tuple[Tags, RingElement], ...]:
    return tuple(sorted(_reduce(bottom, pieces).items()))


def tangle_reduce(bottom: int, pieces: Pieces) -> Result:
    """Coefficients of the tangle word in the inductive basis of BMW_bottom."""
    return dict(_reduce_cached(bottom, tuple(pieces)))


def _skein(bottom: int, pieces: Pieces, t: int) -> Result:
    acc: Result = {}
    for c, alt in _switch(pieces, t):
        _add_into(acc, tangle_reduce(bottom, alt), c)
    return _clean(acc)


def _reduce(bottom: int, pieces: Pieces) -> Result:
    _tick()
    if not pieces:
        return {(0,) * max(bottom - 1, 0): ONE}
    d = _Diagram(bottom, pieces)
    if d.w[-1] != bottom:
        raise ValueError("tangle word does not have equal bottom and top widths")
    d.trace_all()
    n_plus_1 = bottom
    loops = [c for c, loop in enumerate(d.is_loop) if loop]
    if loops:
        cid = loops[0]
        t = _first_bad_crossing(d, [cid])
        if t is not None:
            return _skein(bottom, pieces, t)
        factor = DELTA.mul_a(_component_writhe(d, cid))
        b2, rest = _remove(d, {cid})
        return {k: factor * v for k, v in tangle_reduce(b2, rest).items()}
    if n_plus_1 == 0:
        return {(): ONE}
    n = n_plus_1 - 1
    last_bottom = d.owner[(0, n_plus_1)]
    start, end = d.ends[last_bottom]
    other_end = end if start == (0, n_plus_1) else start
    if other_end[0] == d.top:
        # the strand from the last bottom point ends on top
        i = other_end[1]
        return _lift_single(d, last_bottom, n, 0 if i == n_plus_1 else i)
    last_top = d.owner[(d.top, n_plus_1)]
    s, e = d.ends[last_top]
    other = e if s == (d.top, n_plus_1) else s
    if other[0] == 0:
        return _lift_single(d, last_top, n, -other[1])
    return _lift_pair(d, last_bottom, last_top, n, other_end[1], other[1])


def _lift_single(d: _Diagram, cid: int, n: int, tag: int) -> Result:
    t = _first_bad_crossing(d, [cid])
    if t is not None:
        return _skein(d.w[0], d.pieces, t)
    factor = ONE.mul_a(_component_writhe(d, cid))
    b2, rest = _remove(d, {cid})
    inner = tangle_reduce(b2, rest)
    if n == 0:
        return {(): factor * inner[()]} if () in inner else {}
    return _clean({k + (tag,): factor * v for k, v in inner.items()})


def _lift_pair(d: _Diagram, low: int, high: int, n: int, i: int, j: int) -> Result:
    from .bmw import combine_pair

    t = _first_bad_crossing(d, [high, low])
    if t is not None:
        return _skein(d.w[0], d.pieces, t)
    factor = ONE.mul_a(_component_writhe(d, low) + _component_writhe(d, high))
    b2, rest = _remove(d, {low, high})
    inner = tangle_reduce(b2, rest)
    return {k: factor * v for k, v in combine_pair(n, i, j, inner).items()}
