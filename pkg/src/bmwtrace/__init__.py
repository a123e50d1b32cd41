"""Exact Hecke and BMW algebra computations: normal forms, Markov traces,
link polynomials and transverse traces from braid words."""

from .braid import AlgebraWord, Letter, WordParseError, closure_components, parse_word, shift, tensor_embed, writhe_and_index
from .bmw import (
    BmwElement,
    basis_word_expand,
    bmw_basis,
    bmw_mul,
    bmw_reduce,
    closure,
    eta,
    kauffman_poly,
    kauffman_trace,
)
from .hecke import HeckeElement, hecke_basis, hecke_reduce, homfly, markov_trace_h, project_from_bmw
from .ring import A, DELTA, DELTA_H, ONE, Z, ZERO, RingElement, a_degrees, ring_eval, z_divide
from .skein_oracle import homfly_oracle, kauffman_oracle
from .transverse import (
    LinearForm,
    basic_trace_hecke,
    classical_check,
    decomposition_check,
    mfw,
    multiplicativity_check,
    pushforward,
    transverse_trace_bmw,
    transverse_trace_hecke,
)

__version__ = "0.1.0"

__all__ = [
    "A",
    "AlgebraWord",
    "BmwElement",
    "DELTA",
    "DELTA_H",
    "HeckeElement",
    "Letter",
    "LinearForm",
    "ONE",
    "RingElement",
    "WordParseError",
    "Z",
    "ZERO",
    "a_degrees",
    "basic_trace_hecke",
    "basis_word_expand",
    "bmw_basis",
    "bmw_mul",
    "bmw_reduce",
    "classical_check",
    "closure",
    "closure_components",
    "decomposition_check",
    "eta",
    "hecke_basis",
    "hecke_reduce",
    "homfly",
    "homfly_oracle",
    "kauffman_oracle",
    "kauffman_poly",
    "kauffman_trace",
    "markov_trace_h",
    "mfw",
    "multiplicativity_check",
    "parse_word",
    "project_from_bmw",
    "pushforward",
    "ring_eval",
    "shift",
    "tensor_embed",
    "transverse_trace_bmw",
    "transverse_trace_hecke",
    "writhe_and_index",
    "z_divide",
]
