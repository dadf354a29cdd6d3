import itertools

import pytest

from maxilat import FinitePoset
from maxilat.catalog import antichain, chain, diamond, m3, n5, seven_element


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def two_antichain():
    return antichain(2)


@pytest.fixture
def b2():
    return diamond()


@pytest.fixture
def pentagon():
    return n5()


@pytest.fixture
def m3_lattice():
    return m3()


@pytest.fixture
def seven():
    return seven_element()


# -- test-local oracles, independent of the library internals ----------------


def brute_force_posets(n):
    """Every labeled partial order on n points, by filtering all relations."""
    out = []
    strict_pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for chosen in itertools.product((False, True), repeat=len(strict_pairs)):
        rows = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), on in zip(strict_pairs, chosen):
            if on:
                rows[i][j] = True
        if _is_partial_order(rows):
            out.append(tuple(tuple(r) for r in rows))
    return out


def _is_partial_order(rows):
    n = len(rows)
    for i in range(n):
        if not rows[i][i]:
            return False
        for j in range(n):
            if i != j and rows[i][j] and rows[j][i]:
                return False
            for k in range(n):
                if rows[i][j] and rows[j][k] and not rows[i][k]:
                    return False
    return True


def oracle_sup(p, subset):
    """Least upper bound by definition: scan bounds, then scan for a least."""
    bounds = [u for u in range(p.n) if all(p.leq(x, u) for x in subset)]
    for m in bounds:
        if all(p.leq(m, u) for u in bounds):
            return m
    return None


def oracle_inf(p, subset):
    bounds = [u for u in range(p.n) if all(p.leq(u, x) for x in subset)]
    for m in bounds:
        if all(p.leq(u, m) for u in bounds):
            return m
    return None


def oracle_is_maxitive(v):
    """Direct quantifier over nonempty subsets, written against definitions."""
    e, l = v.source, v.target
    for r in range(1, e.n + 1):
        for family in itertools.combinations(range(e.n), r):
            sup = oracle_sup(e, family)
            if sup is None:
                continue
            value_join = oracle_sup(l, set(v.values[g] for g in family))
            if value_join is None or value_join != v.values[sup]:
                return False
    return True


def oracle_monotone_maps(e, l):
    for values in itertools.product(range(l.n), repeat=e.n):
        if all(l.leq(values[g], values[h])
               for g in range(e.n) for h in range(e.n) if e.leq(g, h)):
            yield values
