"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st


@st.composite
def partitions(draw, max_size=8, max_parts=None):
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_parts or max_size))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_size:
        parts.pop(0)
    return tuple(parts)


@st.composite
def partitions_of(draw, n):
    parts, remaining = [], n
    while remaining:
        part = draw(st.integers(1, min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return tuple(parts)


def rationals(bound=Fraction(1, 2), denominators=20):
    bound = Fraction(bound)

    def with_denominator(den):
        top = int(bound * den)
        return st.integers(-top, top).map(lambda num: Fraction(num, den))

    return st.integers(1, denominators).flatmap(with_denominator)


@st.composite
def rational_vectors(draw, min_g=1, max_g=3, bound=Fraction(1, 2)):
    g = draw(st.integers(min_g, max_g))
    return tuple(draw(rationals(bound)) for _ in range(g))
