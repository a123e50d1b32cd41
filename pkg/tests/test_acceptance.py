"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with its runtime and fails if the
check is wrong or exceeds its time limit.
"""

import random
import time
from contextlib import contextmanager
from math import factorial, prod

import pytest

from bmwtrace.bmw import BmwElement, bmw_basis, bmw_identity, bmw_reduce, kauffman_poly, kauffman_trace
from bmwtrace.braid import AlgebraWord, Letter
from bmwtrace.hecke import HeckeElement, hecke_basis, hecke_reduce, homfly, identity, markov_trace_h
from bmwtrace.relations import bmw_relations, hecke_relations
from bmwtrace.ring import A, A_INV, DELTA, DELTA_H, ONE, Z
from bmwtrace.skein_oracle import homfly_oracle, kauffman_oracle
from bmwtrace.transverse import (
    LinearForm,
    basic_trace_hecke,
    decomposition_check,
    mfw,
    transverse_trace_bmw,
    transverse_trace_hecke,
)
from bmwtrace.verify import (
    _bmw_side,
    _hecke_side,
    check_associativity,
    check_basic_expansion,
    check_oracles,
    random_bmw_word,
    random_braid,
    relation_failures,
)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        state = {"ok": False}
        start = time.perf_counter()
        try:
            yield state
        finally:
            elapsed = time.perf_counter() - start
            ok = state["ok"] and elapsed < limit
            with capsys.disabled():
                status = "PASS" if ok else "FAIL"
                print(f"\n{status} criterion {number}: {title} ({elapsed:.1f}s, limit {limit}s)")
        assert state["ok"], state.get("detail", "check failed")
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"

    return run


def test_1_dimension_counts(criterion):
    with criterion(1, "basis sizes n! (n <= 7) and (2n-1)!! (n <= 6)", 5) as st:
        hecke_ok = all(len(hecke_basis(n)) == factorial(n) for n in range(1, 8))
        sizes = [len(bmw_basis(n)) for n in range(1, 7)]
        st["detail"] = f"BMW sizes {sizes}"
        st["ok"] = hecke_ok and sizes == [1, 3, 15, 105, 945, 10395] == [prod(range(1, 2 * n, 2)) for n in range(1, 7)]


def test_2_exact_values(criterion):
    checks = {
        "P(unknot)": lambda: homfly("1:") == DELTA_H,
        "t_1^K(1)": lambda: kauffman_trace(bmw_identity(1)) == DELTA,
        "F(unknot)": lambda: kauffman_poly("1:") == DELTA,
        "t^K(e1)": lambda: kauffman_trace(bmw_reduce("2: e1")) == DELTA,
        "s1^2": lambda: bmw_reduce("2: 1 1")
        == BmwElement(2, {(0,): ONE - Z * A_INV, (-1,): A_INV + Z, (1,): -A_INV}),
        "tau_3(s2 s1 s2)": lambda: transverse_trace_hecke("3: 2 1 2") == LinearForm.from_dict({2: A, 1: A * A * Z}),
        "tau_2(s1^-1)": lambda: transverse_trace_hecke("2: -1") == LinearForm.from_dict({1: A, 2: -Z}),
        "basic traces": lambda: (basic_trace_hecke(1, "2: -1"), basic_trace_hecke(2, "2: -1")) == (A, -Z),
        "BMW tau_2(s1^-1)": lambda: transverse_trace_bmw("2: -1") == LinearForm(Z, ((1, A), (2, -Z))),
    }
    with criterion(2, "exact values of traces, normal forms and transverse forms (< 1s each)", len(checks)) as st:
        bad = []
        for name, check in checks.items():
            start = time.perf_counter()
            if not check() or time.perf_counter() - start >= 1:
                bad.append(name)
        st["detail"] = bad
        st["ok"] = not bad


def test_3_relation_suite(criterion):
    with criterion(3, "all Hecke and BMW relations on every basis word, n <= 4", 120) as st:
        failures = []
        for n in range(2, 5):
            failures += relation_failures(n, hecke_relations(n), _hecke_side, hecke_basis(n), HeckeElement)[1]
            failures += relation_failures(n, bmw_relations(n), _bmw_side, bmw_basis(n), BmwElement)[1]
        st["detail"] = failures[:5]
        st["ok"] = not failures


def test_4_trace_axioms(criterion):
    with criterion(4, "Markov and transverse trace axioms on 100 random pairs, rank <= 4", 120) as st:
        rng = random.Random(4)
        bad = []
        for trial in range(100):
            n = rng.randint(1, 4)
            u, v = random_braid(rng, n, rng.randint(0, 5)), random_braid(rng, n, rng.randint(0, 5))
            th = markov_trace_h(hecke_reduce(u * v))
            if markov_trace_h(hecke_reduce(v * u)) != th:
                bad.append(f"t^H trace {u} {v}")
            if markov_trace_h(hecke_reduce(AlgebraWord(n + 1, (u * v).letters))) != DELTA_H * th:
                bad.append(f"t^H inclusion {u} {v}")
            for eps, factor in ((1, A), (-1, A_INV)):
                big = AlgebraWord(n + 1, u.letters + (Letter("S", n, eps),) + v.letters)
                if markov_trace_h(hecke_reduce(big)) != factor * th:
                    bad.append(f"t^H stabilization {eps} {u} {v}")
            x, y = random_bmw_word(rng, n, rng.randint(0, 5)), random_bmw_word(rng, n, rng.randint(0, 5))
            tk = kauffman_trace(bmw_reduce(x * y))
            if kauffman_trace(bmw_reduce(y * x)) != tk:
                bad.append(f"t^K trace {x} {y}")
            if kauffman_trace(bmw_reduce(AlgebraWord(n + 1, (x * y).letters))) != DELTA * tk:
                bad.append(f"t^K inclusion {x} {y}")
            for eps, factor in ((1, A), (-1, A_INV)):
                big = AlgebraWord(n + 1, x.letters + (Letter("S", n, eps),) + y.letters)
                if kauffman_trace(bmw_reduce(big)) != factor * tk:
                    bad.append(f"t^K stabilization {eps} {x} {y}")
            # transverse traces: trace property and positive stabilization only
            if transverse_trace_hecke(hecke_reduce(u * v)) != transverse_trace_hecke(hecke_reduce(v * u)):
                bad.append(f"tau^H trace {u} {v}")
            pos = AlgebraWord(n + 1, u.letters + (Letter("S", n, 1),) + v.letters)
            if transverse_trace_hecke(hecke_reduce(pos)) != transverse_trace_hecke(hecke_reduce(u * v)).scale(A):
                bad.append(f"tau^H stabilization {u} {v}")
            if transverse_trace_bmw(x * y) != transverse_trace_bmw(y * x):
                bad.append(f"tau^BMW trace {x} {y}")
            pos = AlgebraWord(n + 1, x.letters + (Letter("S", n, 1),) + y.letters)
            if transverse_trace_bmw(pos) != transverse_trace_bmw(x * y).scale(A):
                bad.append(f"tau^BMW stabilization {x} {y}")
        # negative stabilization fails for the generic transverse trace
        neg = transverse_trace_hecke("2: -1")
        if neg == transverse_trace_hecke(identity(1)).scale(A_INV):
            bad.append("negative stabilization unexpectedly holds")
        st["detail"] = bad[:5]
        st["ok"] = not bad


def test_5_oracle_equivalence(criterion):
    with criterion(5, "trace invariants equal skein oracles (exhaustive n <= 3, length <= 6, 50 random n = 4)", 600) as st:
        result = check_oracles(3, 6)
        bad = list(result.failures)
        rng = random.Random(5)
        for _ in range(50):
            w = random_braid(rng, 4, rng.randint(0, 8))
            if homfly(w) != homfly_oracle(w) or kauffman_poly(w) != kauffman_oracle(w):
                bad.append(str(w))
        st["detail"] = bad[:5]
        st["ok"] = not bad and result.checked > 5000


def test_6_basic_trace_expansion(criterion):
    with criterion(6, "t^H = sum (delta^H)^k tau^(k) on every basis word, n <= 5", 60) as st:
        result = check_basic_expansion(5)
        st["detail"] = result.failures[:5]
        st["ok"] = result.passed and result.checked == sum(factorial(n) for n in range(1, 6))


def test_7_bmw_transverse_decomposition(criterion):
    with criterion(7, "delta*b + sum c_i delta^i = t^K and c_i = tau^(i)(q_E x), 50 random BMW_4 elements", 300) as st:
        rng = random.Random(7)
        bad = []
        basis4 = bmw_basis(4)
        for _ in range(50):
            x = BmwElement.zero(4)
            for _ in range(rng.randint(1, 4)):
                x = x + bmw_reduce(random_bmw_word(rng, 4, rng.randint(0, 6)))
            x = x + BmwElement.basis(4, rng.choice(basis4)).scale(A + rng.randint(-2, 2) * Z)
            report = decomposition_check(x, report=True)
            if not report.ok:
                bad.append(report.mismatches)
        st["detail"] = bad[:3]
        st["ok"] = not bad


def test_8_mfw(criterion):
    with criterion(8, "-i <= d and w - i <= -deg_a P on 200 random braids (n <= 5, length <= 10)", 300) as st:
        rng = random.Random(8)
        bad = []
        for _ in range(200):
            w = random_braid(rng, rng.randint(1, 5), rng.randint(0, 10))
            report = mfw(w)
            if not (report.holds and report.corollary_holds):
                bad.append(str(w))
        st["detail"] = bad[:5]
        st["ok"] = not bad


def test_9_uniqueness_and_associativity(criterion):
    with criterion(9, "relation sides give equal transverse forms; 100 associativity triples", 120) as st:
        bad = []
        for n in range(2, 5):
            for rel in bmw_relations(n):
                if transverse_trace_bmw(_bmw_side(n, rel.lhs)) != transverse_trace_bmw(_bmw_side(n, rel.rhs)):
                    bad.append(rel.name)
        assoc = check_associativity(4, 100, random.Random(9))
        st["detail"] = bad[:5] + assoc.failures[:2]
        st["ok"] = not bad and assoc.passed
