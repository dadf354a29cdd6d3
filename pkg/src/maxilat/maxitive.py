"""Maxitive maps between finite posets, their ideal-family representations,
the alternating property over the rational cone, and the two canonical
extensions to an order completion.

A map v: E -> L is maxitive when it turns every existing finite supremum of
a nonempty family in E into the supremum of the values in L.  On a join
semilattice this reduces to the pairwise law, but not in general.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .poset import FinitePoset, classify, _SUBSET_SCAN_CAP
from .selections import (FilterSelection, _inf_allowing_empty,
                         continuity_report, way_above)


class MapError(ValueError):
    """A map violates monotonicity, maxitivity or an extension hypothesis."""


@dataclass(frozen=True)
class MonotoneMap:
    """An order-preserving map, stored as one target index per source element."""

    source: FinitePoset
    target: FinitePoset
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.source.n:
            raise MapError(f"expected {self.source.n} values, got {len(values)}")
        for t in values:
            if not 0 <= t < self.target.n:
                raise MapError(f"value {t} out of range for the target poset")
        for g in range(self.source.n):
            for h in self.source.up(g):
                if not self.target.leq(values[g], values[h]):
                    raise MapError(f"not order-preserving on ({g}, {h})")

    def __call__(self, g):
        return self.values[g]

    def pointwise_leq(self, other):
        if self.source != other.source or self.target != other.target:
            raise MapError("maps live on different posets")
        return all(self.target.leq(a, b)
                   for a, b in zip(self.values, other.values))


def iter_monotone_values(e, l):
    """All order-preserving value tuples E -> L, in lexicographic order."""
    n = e.n
    values = [0] * n

    def rec(g):
        if g == n:
            yield tuple(values)
            return
        for t in range(l.n):
            ok = True
            for h in range(g):
                if e.leq(h, g) and not l.leq(values[h], t):
                    ok = False
                    break
                if e.leq(g, h) and not l.leq(t, values[h]):
                    ok = False
                    break
            if ok:
                values[g] = t
                yield from rec(g + 1)

    yield from rec(0)


def maxitivity_witness(v: MonotoneMap):
    """The first offending family in a canonical scan, or None if v is maxitive.

    Scans every nonempty subset of the source whose supremum exists and
    demands that the values join, in the target, exactly to the value at
    the supremum.
    """
    e, l = v.source, v.target
    if e.n > _SUBSET_SCAN_CAP:
        raise MapError(f"maxitivity scan needs |E| <= {_SUBSET_SCAN_CAP}")
    for members, sup in e._iter_sups(range(e.n)):
        if sup is None:
            continue
        vals = frozenset(v.values[g] for g in members)
        if l.sup_of(vals) != v.values[sup]:
            return members
    return None


def is_maxitive(v: MonotoneMap) -> bool:
    return maxitivity_witness(v) is None


def is_pairwise_maxitive(v: MonotoneMap) -> bool:
    """The pairwise law: v(g or g') is the join of v(g), v(g') when it exists."""
    e, l = v.source, v.target
    for g in range(e.n):
        for h in range(g, e.n):
            sup = e.sup_of((g, h))
            if sup is None:
                continue
            if l.sup_of((v.values[g], v.values[h])) != v.values[sup]:
                return False
    return True


@dataclass(frozen=True)
class IdealFamily:
    """A nondecreasing family of ideals of a source poset, indexed by a target."""

    source: FinitePoset
    target: FinitePoset
    family: tuple

    def __post_init__(self):
        family = tuple(frozenset(i) for i in self.family)
        object.__setattr__(self, "family", family)
        if len(family) != self.target.n:
            raise MapError("the family must index every target element")
        for t, ideal in enumerate(family):
            if not self.source.is_ideal(ideal):
                raise MapError(f"member at {t} is not an ideal of the source")
        for s in range(self.target.n):
            for t in self.target.up(s):
                if not family[s] <= family[t]:
                    raise MapError(f"family decreases from {s} to {t}")

    def membership_set(self, g):
        """Indices t with g in the ideal at t."""
        return frozenset(t for t in range(self.target.n) if g in self.family[t])

    def is_right_continuous(self, sel: FilterSelection) -> bool:
        """True iff each member is the intersection of the members way-above it."""
        rel = way_above(self.target, sel)
        everything = frozenset(range(self.source.n))
        for t in range(self.target.n):
            inter = everything
            for s in rel.above_set(t):
                inter &= self.family[s]
            if inter != self.family[t]:
                return False
        return True


def from_ideal_family(fam: IdealFamily, sel_l: FilterSelection) -> MonotoneMap:
    """The map sending g to the infimum of the indices whose ideal contains g.

    Each membership set must be a selected set of the target with an
    infimum; when the family is right-continuous under sel_l's way-above,
    the result is maxitive.
    """
    if sel_l.poset != fam.target:
        raise MapError("selection was built on a different target poset")
    values = []
    for g in range(fam.source.n):
        ts = fam.membership_set(g)
        if ts not in sel_l.fsets:
            raise MapError(f"membership set of {g} is not a selected set")
        m = _inf_allowing_empty(fam.target, ts)
        if m is None:
            raise MapError(f"membership set of {g} has no infimum")
        values.append(m)
    return MonotoneMap(fam.source, fam.target, tuple(values))


def ideal_family_of(v: MonotoneMap) -> IdealFamily:
    """The canonical family of sublevel ideals of a maxitive map."""
    witness = maxitivity_witness(v)
    if witness is not None:
        raise MapError(f"map is not maxitive; offending family {sorted(witness)}")
    family = tuple(frozenset(g for g in range(v.source.n)
                             if v.target.leq(v.values[g], t))
                   for t in range(v.target.n))
    return IdealFamily(v.source, v.target, family)


# -- the rational cone ----------------------------------------------------


@dataclass(frozen=True)
class RationalConeMap:
    """A monotone map from a join-semilattice into the nonnegative rationals.

    Values are exact (ints or Fractions); no floating point enters the sign
    tests of the alternating property.
    """

    source: FinitePoset
    values: tuple

    def __post_init__(self):
        values = tuple(Fraction(x) for x in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.source.n:
            raise MapError(f"expected {self.source.n} values, got {len(values)}")
        if any(x < 0 for x in values):
            raise MapError("cone values must be nonnegative")
        joins = {}
        for g in range(self.source.n):
            for h in range(g, self.source.n):
                sup = self.source.sup_of((g, h))
                if sup is None:
                    raise MapError("the source must be a join-semilattice")
                joins[g, h] = joins[h, g] = sup
        object.__setattr__(self, "_joins", joins)
        for g in range(self.source.n):
            for h in self.source.up(g):
                if values[g] > values[h]:
                    raise MapError(f"not order-preserving on ({g}, {h})")

    def __call__(self, g):
        return self.values[g]

    def join(self, g, h):
        return self._joins[g, h]

    def is_maxitive(self) -> bool:
        for members, sup in self.source._iter_sups(range(self.source.n)):
            if sup is not None and self.values[sup] != max(self.values[g]
                                                           for g in members):
                return False
        return True


def delta(v: RationalConeMap, g, gs):
    """Iterated Choquet difference of v at g along the list gs."""
    gs = tuple(gs)
    if not gs:
        return v.values[g]
    head, rest = gs[0], gs[1:]
    return delta(v, v.join(g, head), rest) - delta(v, g, rest)


def alternating_witness(v: RationalConeMap, depth=4):
    """First (g, gs) violating the alternating sign condition, else None.

    The iterated differences commute in the perturbing elements, so tuples
    are scanned as nondecreasing multisets; verdicts are depth-bounded.
    """
    if depth < 1:
        raise MapError("depth must be at least 1")
    n = v.source.n
    memo = {}

    def d(g, gs):
        if not gs:
            return v.values[g]
        key = (g, gs)
        found = memo.get(key)
        if found is None:
            rest = gs[1:]
            found = d(v.join(g, gs[0]), rest) - d(g, rest)
            memo[key] = found
        return found

    for length in range(1, depth + 1):
        sign = 1 if length % 2 == 1 else -1
        for gs in combinations_with_replacement(range(n), length):
            for g in range(n):
                if sign * d(g, gs) < 0:
                    return g, gs
    return None


def is_alternating(v: RationalConeMap, depth=4) -> bool:
    return alternating_witness(v, depth) is None


# -- extensions -----------------------------------------------------------


def e_star(ext, sel_e: FilterSelection) -> frozenset:
    """Completion elements whose upper trace on the base is a nonempty
    selected set; always contains the image of the base."""
    if sel_e.poset != ext.base:
        raise MapError("selection was built on a different base poset")
    star = frozenset(a for a in range(ext.complete.n)
                     if (trace := ext.up_in_base(a)) and trace in sel_e.fsets)
    assert ext.image() <= star
    return star


def extend_star(v: MonotoneMap, ext, sel_e: FilterSelection,
                sel_l: FilterSelection) -> MonotoneMap:
    """Maximal maxitive extension of v to the star region of the completion.

    The result lives on the induced subposet of the completion, indexed in
    sorted order of the star elements; composing with the embedding gives
    back v.
    """
    if v.source != ext.base:
        raise MapError("map and extension have different base posets")
    if v.target != sel_l.poset:
        raise MapError("target selection was built on a different poset")
    if not classify(v.source).is_join_semilattice:
        raise MapError("the base must be a join-semilattice")
    if not continuity_report(v.target, sel_l).is_domain:
        raise MapError("the target must be a domain under the given selection")
    witness = maxitivity_witness(v)
    if witness is not None:
        raise MapError(f"map is not maxitive; offending family {sorted(witness)}")
    star = sorted(e_star(ext, sel_e))
    l = v.target
    values = []
    for a in star:
        trace = ext.up_in_base(a)
        image = l.upper_closure(v.values[g] for g in trace)
        if image not in sel_l.fsets:
            raise MapError(f"value trace of {a} escapes the target selection")
        m = _inf_allowing_empty(l, image)
        if m is None:
            raise MapError(f"value trace of {a} has no infimum")
        values.append(m)
    result = MonotoneMap(ext.complete.restrict(star), l, tuple(values))
    index = {a: k for k, a in enumerate(star)}
    assert all(result.values[index[ext.embed[g]]] == v.values[g]
               for g in range(v.source.n))
    return result


def e_lower_star(ext) -> frozenset:
    """Completion elements whose meet with every base element stays in the base."""
    big = ext.complete
    image = ext.image()
    members = frozenset(
        a for a in range(big.n)
        if all(big.inf_of((ext.embed[g], a)) in image for g in range(ext.base.n)))
    base_profile = classify(ext.base)
    if base_profile.is_meet_semilattice:
        assert image <= members
    if base_profile.is_join_semilattice and classify(big).is_distributive:
        assert all(big.sup_of((a, b)) in members
                   for a in members for b in members)
    return members


def extend_lower_star(v: MonotoneMap, ext) -> MonotoneMap:
    """Minimal maxitive extension of v to the lower-star region.

    Requires a distributive completion; raises when some needed supremum of
    values is missing in the target, which can happen for targets that are
    not complete.
    """
    if v.source != ext.base:
        raise MapError("map and extension have different base posets")
    if not classify(ext.complete).is_distributive:
        raise MapError("the completion must be distributive")
    witness = maxitivity_witness(v)
    if witness is not None:
        raise MapError(f"map is not maxitive; offending family {sorted(witness)}")
    members = sorted(e_lower_star(ext))
    l = v.target
    values = []
    for a in members:
        trace = ext.down_in_base(a)
        if not trace:
            raise MapError(f"lower trace of {a} is empty")
        s = l.sup_of(frozenset(v.values[g] for g in trace))
        if s is None:
            raise MapError(f"values under {a} have no supremum in the target")
        values.append(s)
    result = MonotoneMap(ext.complete.restrict(members), l, tuple(values))
    index = {a: k for k, a in enumerate(members)}
    for g in range(v.source.n):
        a = ext.embed[g]
        if a in index:
            assert result.values[index[a]] == v.values[g]
    return result
