"""Named posets used throughout the tests and the bundled fixtures."""

from .poset import FinitePoset


def chain(n, labels=None):
    return FinitePoset.chain(n, labels)


def antichain(n, labels=None):
    return FinitePoset.antichain(n, labels)


def diamond():
    """The four-element Boolean lattice: bot < a, b < top."""
    return FinitePoset.from_relation(4, [(0, 1), (0, 2), (1, 3), (2, 3)],
                                     labels=["bot", "a", "b", "top"])


def m3():
    """Three incomparable atoms between bot and top; the smallest modular
    non-distributive lattice."""
    return FinitePoset.from_relation(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        labels=["bot", "a", "b", "c", "top"])


def n5():
    """The pentagon: bot < x < z < top and bot < y < top; the smallest
    non-modular lattice."""
    return FinitePoset.from_relation(
        5, [(0, 1), (1, 3), (0, 2), (3, 4), (2, 4)],
        labels=["bot", "x", "y", "z", "top"])


def seven_element():
    """The seven-element poset separating the pairwise law from maxitivity:
    a, b <= alpha; b, c <= beta; c, a <= gamma; a, b, c <= z."""
    return FinitePoset.from_relation(
        7,
        [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5), (0, 6), (1, 6), (2, 6)],
        labels=["a", "b", "c", "alpha", "beta", "gamma", "z"])
