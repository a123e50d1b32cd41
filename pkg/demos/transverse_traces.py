"""
Transverse Markov traces
========================

A transverse trace keeps only positive stabilization, so its value on a
braid is a linear form in free parameters alpha_k = tau_k(1) (and
beta = tau_2(e1) on BMW).
"""

from bmwtrace import (
    DELTA,
    ONE,
    bmw_reduce,
    decomposition_check,
    kauffman_trace,
    mfw,
    transverse_trace_bmw,
    transverse_trace_hecke,
)

# on the Hecke side tau_2 of s1^-1 is not a^-1 alpha_1
print("tau_2(s1^-1) =", transverse_trace_hecke("2: -1"))
print("tau_3(s2 s1 s2) =", transverse_trace_hecke("3: 2 1 2"))

# on BMW a single new parameter beta appears
f = transverse_trace_bmw("2: -1")
print("BMW tau_2(s1^-1) =", f)

# substituting beta = 1 and alpha_k = delta^(k-1) recovers the Kauffman trace
x = bmw_reduce("3: -1 2 -1 e2")
form = transverse_trace_bmw(x)
value = form.evaluate(ONE, {k: DELTA ** (k - 1) for k in range(1, 4)}) * DELTA
print(value == kauffman_trace(x), decomposition_check(x))

# self-linking bound for a few braids
for text in ["2: 1 1 1", "3: -1 2 -1 2", "4: 1 -2 3 -2 -1"]:
    r = mfw(text)
    print(text, "d =", r.d, "bound holds:", r.holds, "self-linking", r.writhe - r.index)
