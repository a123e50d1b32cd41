"""Shared strategies and helpers for the test suite."""

from hypothesis import settings, strategies as st

from bmwtrace.braid import AlgebraWord, Letter
from bmwtrace.ring import RingElement

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@st.composite
def ring_elements(draw, max_terms=4, max_exp=3, max_zden=2):
    """Random ring elements, including ones with a z-denominator."""
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(-max_exp, max_exp), st.integers(-max_exp, max_exp)),
            st.integers(-3, 3).filter(bool),
            max_size=max_terms,
        )
    )
    return RingElement(terms, draw(st.integers(0, max_zden)))


@st.composite
def braid_words(draw, min_n=1, max_n=4, max_len=6):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return AlgebraWord(1, ())
    ints = draw(st.lists(st.integers(1, n - 1), max_size=max_len))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(ints), max_size=len(ints)))
    return AlgebraWord(n, tuple(Letter("S", i, e) for i, e in zip(ints, signs)))


@st.composite
def bmw_words(draw, min_n=1, max_n=3, max_len=5, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    if n == 1:
        return AlgebraWord(1, ())
    letters = draw(
        st.lists(
            st.one_of(
                st.builds(lambda i, e: Letter("S", i, e), st.integers(1, n - 1), st.sampled_from([1, -1])),
                st.builds(lambda i: Letter("E", i), st.integers(1, n - 1)),
            ),
            max_size=max_len,
        )
    )
    return AlgebraWord(n, tuple(letters))
