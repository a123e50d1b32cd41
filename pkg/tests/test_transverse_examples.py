import pytest

from bmwtrace.bmw import bmw_identity, bmw_reduce, kauffman_trace
from bmwtrace.hecke import hecke_reduce, identity
from bmwtrace.ring import A, A_INV, DELTA, DELTA_H, ONE, Q, ZERO, Z
from bmwtrace.transverse import (
    HeckeOnlyOperator,
    LinearForm,
    basic_trace_hecke,
    classical_check,
    decomposition_check,
    e_functional,
    mfw,
    multiplicativity_check,
    pushforward,
    transverse_trace_bmw,
    transverse_trace_hecke,
)


def alpha(**coeffs):
    return LinearForm.from_dict({int(k[1:]): v for k, v in coeffs.items()})


def test_basic_trace_examples():
    for n in range(1, 5):
        for k in range(1, 5):
            assert basic_trace_hecke(k, identity(n)) == (ONE if n == k else ZERO)
    assert basic_trace_hecke(1, "2: -1") == A
    assert basic_trace_hecke(2, "2: -1") == -Z


def test_hecke_form_examples():
    assert transverse_trace_hecke("3: 2 1 2") == alpha(k2=A, k1=A * A * Z)
    assert transverse_trace_hecke("2: -1") == alpha(k1=A, k2=-Z)
    for n in range(1, 5):
        assert transverse_trace_hecke(identity(n)) == LinearForm.alpha_k(n)


def test_pushforward_examples():
    assert pushforward(LinearForm.alpha_k(1)) == LinearForm.alpha_k(2)
    assert pushforward(alpha(k1=A, k2=-Z)) == alpha(k2=A, k3=-Z)
    assert pushforward(LinearForm()) == LinearForm()
    with pytest.raises(HeckeOnlyOperator):
        pushforward(LinearForm(ONE))


def test_bmw_form_examples():
    assert transverse_trace_bmw("2: e1") == LinearForm(ONE)
    assert transverse_trace_bmw("2: -1") == LinearForm(Z, ((1, A), (2, -Z)))
    assert transverse_trace_bmw("3: 1") == LinearForm.alpha_k(2, A)
    assert transverse_trace_bmw("3: 2") == LinearForm.alpha_k(2, A)


def test_form_serialization():
    f = transverse_trace_bmw("2: -1")
    assert f.to_json() == {"beta": "-q^-1 + q", "alpha": {"1": "a", "2": "q^-1 - q"}}
    assert str(LinearForm()) == "0"


def test_multiplicativity_examples():
    assert multiplicativity_check([DELTA_H, DELTA_H**2, DELTA_H**3])
    assert classical_check([DELTA_H, DELTA_H**2, DELTA_H**3])
    assert not multiplicativity_check([ONE, ZERO, ZERO])
    c = A + Q
    assert multiplicativity_check([c, c**2, c**3])
    assert not classical_check([c, c**2, c**3])


def test_mfw_examples():
    r = mfw("2:")
    assert (r.d, r.holds) == (-2, True)
    r = mfw("2: -1")
    assert dict(r.per_k) == {1: -2, 2: -2}
    assert (r.d, r.holds) == (-2, True)
    r = mfw("2: 1")
    assert dict(r.per_k) == {1: -2}
    assert (r.d, r.holds) == (-2, True)
    assert r.corollary_holds


def test_vanishing_form_is_reported():
    assert e_functional(LinearForm()) == (None, [])


def test_decomposition_examples():
    for n in range(1, 5):
        x = bmw_identity(n)
        f = transverse_trace_bmw(x)
        assert f == LinearForm.alpha_k(n)
        assert decomposition_check(x)
        assert kauffman_trace(x) == DELTA**n
    f = transverse_trace_bmw("2: e1")
    assert (f.beta, f.alpha) == (ONE, ())
    assert decomposition_check(bmw_reduce("2: e1"))
    f = transverse_trace_bmw("2: -1")
    assert (f.beta, f.coeff(1), f.coeff(2)) == (Z, A, -Z)
    assert DELTA * Z + A * DELTA - Z * DELTA**2 == A_INV * DELTA
    assert decomposition_check(bmw_reduce("2: -1"))


def test_negative_stabilization_counterexample():
    f = transverse_trace_hecke(hecke_reduce("2: -1"))
    g = transverse_trace_hecke(identity(1)).scale(A_INV)
    assert f != g
