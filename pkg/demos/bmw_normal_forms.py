"""
Normal forms in the BMW algebra
===============================

Every word in s_i, s_i^-1 and e_i reduces to a combination of inductive
basis words.  A basis word is written level by level: "." keeps the
previous element, "x<i>" appends s_k^-1...s_i^-1 and "y<i>" prepends
s_i...s_k.
"""

from bmwtrace import DELTA, bmw_basis, bmw_reduce, closure, eta, kauffman_trace
from bmwtrace.bmw import format_bmw_tags

# BMW_3 has 15 basis words
print([format_bmw_tags(t) for t in bmw_basis(3)])

# the quadratic relation: s1^2 in terms of 1, s1 and s1^-1
print("s1^2 =", bmw_reduce("2: 1 1"))

# e1 itself is a combination of basis words with 1/z coefficients
e1 = bmw_reduce("2: e1")
print("e1 =", e1)
print("e1^2 = delta e1:", e1 * e1 == e1.scale(DELTA))

# e1 s2 e1 = a e1
print(bmw_reduce("3: e1 2 e1"))

# closing the last strand, then tracing, gives the same value as tracing
x = bmw_reduce("3: 1 -2 e1 2")
print(kauffman_trace(x) == kauffman_trace(closure(x)))

# eta reverses words and inverts crossings
print(eta(bmw_reduce("3: 1 2")) == bmw_reduce("3: -2 -1"))
