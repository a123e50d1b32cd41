"""Self-checks of the whole library, grouped into independent sub-suites."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Callable, Iterable, List, Optional

from .bmw import BmwElement, bmw_basis, bmw_mul, bmw_reduce, kauffman_poly, kauffman_trace, reduce_letters
from .braid import AlgebraWord, Letter, braid_word
from .hecke import HeckeElement, hecke_basis, hecke_reduce, homfly, markov_trace_h, tags_word
from .relations import Relation, bmw_relations, hecke_relations
from .ring import A, A_INV, DELTA, DELTA_H, ZERO
from .skein_oracle import homfly_oracle, kauffman_oracle
from .transverse import decomposition_check, mfw, transverse_trace_hecke

__all__ = ["CheckResult", "verify_suite", "random_braid", "random_bmw_word", "relation_failures"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.checked} checks)"


def random_braid(rng: random.Random, n: int, length: int) -> AlgebraWord:
    if n == 1:
        return AlgebraWord(1, ())
    return braid_word(n, [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)])


def random_bmw_word(rng: random.Random, n: int, length: int) -> AlgebraWord:
    letters = []
    for _ in range(length if n > 1 else 0):
        i = rng.randint(1, n - 1)
        kind = rng.choice(["S", "S", "E"])
        letters.append(Letter(kind, i, rng.choice([1, -1]) if kind == "S" else 1))
    return AlgebraWord(n, tuple(letters))


# -- relations -----------------------------------------------------------------


def _bmw_side(n: int, side) -> BmwElement:
    out = BmwElement.zero(n)
    for c, word in side:
        out = out + reduce_letters(n, word).scale(c)
    return out


def _hecke_side(n: int, side) -> HeckeElement:
    out = HeckeElement.zero(n)
    for c, word in side:
        out = out + hecke_reduce(AlgebraWord(n, word)).scale(c)
    return out


def relation_failures(
    n: int,
    rels: Iterable[Relation],
    side: Callable,
    basis: List,
    element_cls,
    fault: Optional[str] = None,
) -> tuple:
    """Check every relation as an operator identity on all basis words of rank n."""
    failures = []
    count = 0
    elems = [element_cls.basis(n, b) for b in basis]
    for rel in rels:
        lhs, rhs = side(n, rel.lhs), side(n, rel.rhs)
        if fault and rel.name.startswith(fault + "["):
            lhs = lhs + lhs.scale(A - A_INV)
        count += 1
        if lhs != rhs:
            failures.append(f"{rel.name}: {rel.describe()} fails\n  lhs = {lhs}\n  rhs = {rhs}")
            continue
        for b in elems:
            count += 2
            if b * lhs != b * rhs or lhs * b != rhs * b:
                failures.append(f"{rel.name}: {rel.describe()} fails next to basis word {b}")
                break
    return count, failures


def check_relations(max_n: int, fault: Optional[str] = None) -> List[CheckResult]:
    out = []
    total, fails = 0, []
    for n in range(2, max_n + 1):
        c, f = relation_failures(n, hecke_relations(n), _hecke_side, hecke_basis(n), HeckeElement)
        total, fails = total + c, fails + f
    out.append(CheckResult(f"Hecke relations H1-H5, n <= {max_n}", not fails, total, fails))
    total, fails = 0, []
    for n in range(2, max_n + 1):
        c, f = relation_failures(n, bmw_relations(n), _bmw_side, bmw_basis(n), BmwElement, fault)
        total, fails = total + c, fails + f
    out.append(CheckResult(f"BMW relations, n <= {max_n}", not fails, total, fails))
    return out


def check_relations_sample(n: int, samples: int, rng: random.Random, fault: Optional[str] = None) -> CheckResult:
    """BMW relations next to a random sample of basis words (spot check for large n)."""
    sample = rng.sample(bmw_basis(n), samples)
    count, fails = relation_failures(n, bmw_relations(n), _bmw_side, sample, BmwElement, fault)
    return CheckResult(f"BMW relations, n = {n}, {samples} sampled basis words", not fails, count, fails)


def check_dimensions(max_hecke: int, max_bmw: int) -> CheckResult:
    fails = []
    for n in range(1, max_hecke + 1):
        if len(hecke_basis(n)) != factorial(n):
            fails.append(f"|basis H_{n}| = {len(hecke_basis(n))} != {factorial(n)}")
    for n in range(1, max_bmw + 1):
        want = prod(range(1, 2 * n, 2))
        if len(bmw_basis(n)) != want:
            fails.append(f"|basis BMW_{n}| = {len(bmw_basis(n))} != {want}")
    return CheckResult("basis dimensions", not fails, max_hecke + max_bmw, fails)


# -- traces ----------------------------------------------------------------------


def check_trace_axioms(max_n: int, samples: int, rng: random.Random) -> List[CheckResult]:
    results = []
    fails, count = [], 0
    for _ in range(samples):
        n = rng.randint(2, max_n)
        u, v = random_braid(rng, n, rng.randint(0, 4)), random_braid(rng, n, rng.randint(0, 4))
        tu = markov_trace_h(hecke_reduce(u) * hecke_reduce(v))
        tv = markov_trace_h(hecke_reduce(v) * hecke_reduce(u))
        count += 1
        if tu != tv:
            fails.append(f"t^H trace property: {u} | {v}")
        for eps, factor in ((1, A), (-1, A_INV)):
            big = AlgebraWord(n + 1, u.letters + (Letter("S", n, eps),) + v.letters)
            count += 1
            if markov_trace_h(hecke_reduce(big)) != factor * markov_trace_h(hecke_reduce(u * v)):
                fails.append(f"t^H stabilization eps={eps}: {u} | {v}")
        count += 1
        if markov_trace_h(hecke_reduce(AlgebraWord(n + 1, u.letters))) != DELTA_H * markov_trace_h(hecke_reduce(u)):
            fails.append(f"t^H inclusion: {u}")
    results.append(CheckResult("Hecke trace axioms", not fails, count, fails))

    fails, count = [], 0
    for _ in range(samples):
        n = rng.randint(2, max_n)
        u, v = random_bmw_word(rng, n, rng.randint(0, 4)), random_bmw_word(rng, n, rng.randint(0, 4))
        count += 1
        if kauffman_trace(bmw_reduce(u * v)) != kauffman_trace(bmw_reduce(v * u)):
            fails.append(f"t^K trace property: {u} | {v}")
        base = kauffman_trace(bmw_reduce(u * v))
        for letter, factor in ((Letter("S", n, 1), A), (Letter("S", n, -1), A_INV), (Letter("E", n), None)):
            big = AlgebraWord(n + 1, u.letters + (letter,) + v.letters)
            count += 1
            want = base if factor is None else factor * base
            if kauffman_trace(bmw_reduce(big)) != want:
                fails.append(f"t^K stabilization {letter.token()}: {u} | {v}")
        count += 1
        if kauffman_trace(bmw_reduce(AlgebraWord(n + 1, u.letters))) != DELTA * kauffman_trace(bmw_reduce(u)):
            fails.append(f"t^K inclusion: {u}")
    results.append(CheckResult("Kauffman trace axioms", not fails, count, fails))
    return results


def check_oracles(max_n: int, max_len: int) -> CheckResult:
    fails, count = [], 0
    for n in range(1, max_n + 1):
        gens = [s * i for i in range(1, n) for s in (1, -1)]
        for length in range(max_len + 1):
            for ints in itertools.product(gens, repeat=length):
                w = braid_word(n, ints)
                count += 1
                if homfly(w) != homfly_oracle(w):
                    fails.append(f"HOMFLY mismatch on {w}")
                if kauffman_poly(w) != kauffman_oracle(w):
                    fails.append(f"Kauffman mismatch on {w}")
    return CheckResult(f"oracle agreement, n <= {max_n}, length <= {max_len}", not fails, count, fails)


def check_basic_expansion(max_n: int) -> CheckResult:
    fails, count = [], 0
    for n in range(1, max_n + 1):
        for tags in hecke_basis(n):
            x = HeckeElement.basis(n, tags)
            f = transverse_trace_hecke(x)
            total = ZERO
            for k, c in f.alpha:
                total = total + c * DELTA_H**k
            count += 1
            if total != markov_trace_h(x):
                fails.append(f"basic expansion fails on {tags_word(tags)} in H_{n}")
    return CheckResult(f"t^H = sum (delta^H)^k tau^(k), n <= {max_n}", not fails, count, fails)


def check_mfw(samples: int, rng: random.Random) -> CheckResult:
    fails = []
    for _ in range(samples):
        n = rng.randint(1, 5)
        w = random_braid(rng, n, rng.randint(0, 10))
        report = mfw(w)
        if not (report.holds and report.corollary_holds):
            fails.append(f"MFW violated on {w}: {report}")
    return CheckResult(f"MFW inequality on {samples} random braids", not fails, samples, fails)


def check_decomposition(n: int, samples: int, rng: random.Random) -> CheckResult:
    fails = []
    for _ in range(samples):
        w = random_bmw_word(rng, n, rng.randint(0, 6))
        rep = decomposition_check(bmw_reduce(w), report=True)
        if not rep.ok:
            fails.append(f"decomposition fails on {w}: {rep.mismatches}")
    return CheckResult(f"BMW transverse decomposition, n = {n}", not fails, samples, fails)


def check_associativity(n: int, samples: int, rng: random.Random) -> CheckResult:
    basis = bmw_basis(n)
    fails = []
    for _ in range(samples):
        x, y, z = (BmwElement.basis(n, rng.choice(basis)) for _ in range(3))
        if bmw_mul(bmw_mul(x, y), z) != bmw_mul(x, bmw_mul(y, z)):
            fails.append(f"associativity fails on {x}, {y}, {z}")
    return CheckResult(f"associativity in BMW_{n}", not fails, samples, fails)


def verify_suite(level: str = "quick", seed: int = 0, fault: Optional[str] = None) -> List[CheckResult]:
    """Run the sub-suites: quick covers n <= 3, full covers n <= 4 plus spot checks."""
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    rng = random.Random(seed)
    full = level == "full"
    results = [check_dimensions(7 if full else 5, 6 if full else 4)]
    results += check_relations(4 if full else 3, fault)
    results += check_trace_axioms(4 if full else 3, 100 if full else 20, rng)
    results.append(check_oracles(3 if full else 2, 6 if full else 4))
    results.append(check_basic_expansion(5 if full else 4))
    results.append(check_mfw(200 if full else 30, rng))
    results.append(check_decomposition(4 if full else 3, 50 if full else 10, rng))
    if full:
        results.append(check_associativity(4, 50, rng))
        results.append(check_relations_sample(5, 5, rng, fault))
        results.append(check_associativity(5, 2, rng))
    else:
        results.append(check_associativity(3, 20, rng))
    return results
