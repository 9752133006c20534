"""Hypothesis strategies for random labeled trees."""

from hypothesis import strategies as st

from tree_spectra.trees.generators import from_pruefer


@st.composite
def pruefer_sequences(draw, min_n: int = 2, max_n: int = 12):
    """Pruefer sequences of trees with ``min_n..max_n`` vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n - 2, max_size=n - 2))


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 12):
    """Uniformly built labeled trees via their Pruefer sequences."""
    return from_pruefer(draw(pruefer_sequences(min_n, max_n)))
