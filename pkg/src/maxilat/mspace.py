"""The space of all maxitive maps from a poset into a complete lattice.

The space is materialized exhaustively and ordered pointwise.  Pointwise
infima of selected families stay inside the space; joins need not be
pointwise and are computed as least-upper-bound scans within it.  The
filtered selection is hard-wired for the way-above and frame claims, which
on finite posets collapse way-above in the space to its order.
"""

from dataclasses import dataclass

from .poset import FinitePoset, PosetError, classify
from .selections import (FilterSelection, SelectionError, SelectionKind,
                         build_selection, way_above)
from .maxitive import (IdealFamily, MapError, MonotoneMap, from_ideal_family,
                       is_maxitive, iter_monotone_values, maxitivity_witness)

DEFAULT_SPACE_CAP = 10 ** 6


@dataclass(frozen=True)
class Generator:
    """The pair (h, s) naming the maxitive map that is s below h and top
    elsewhere."""

    h: int
    s: int


class MaxMapSpace:
    """All maxitive maps source -> target, ordered pointwise.

    Maps are value tuples sorted lexicographically; ``poset`` carries the
    pointwise order on them, so the whole selection and way-above machinery
    applies to the space itself.
    """

    def __init__(self, source, target, maps):
        self.source = source
        self.target = target
        self.maps = tuple(tuple(m) for m in maps)
        self.index = {m: k for k, m in enumerate(self.maps)}
        rows = tuple(tuple(all(target.leq(a[g], b[g]) for g in range(source.n))
                           for b in self.maps) for a in self.maps)
        labels = tuple("(" + ",".join(target.label_of(t) for t in m) + ")"
                       for m in self.maps)
        self.poset = FinitePoset(rows, labels)
        self._joins = {}

    def __len__(self):
        return len(self.maps)

    def map_at(self, k) -> MonotoneMap:
        return MonotoneMap(self.source, self.target, self.maps[k])

    def index_of(self, values):
        values = tuple(getattr(values, "values", values))
        try:
            return self.index[values]
        except KeyError:
            raise MapError(f"{values} is not a maxitive map of this space") from None

    def join(self, i, j):
        """Join inside the space: the least maxitive map above both."""
        key = (i, j) if i <= j else (j, i)
        found = self._joins.get(key)
        if found is None:
            found = self.poset.sup_of(key)
            if found is None:
                raise MapError("the space is missing a join; target not complete?")
            self._joins[key] = found
        return found

    def meet(self, i, j):
        return self.poset.inf_of((i, j))


def build_space(e, l, cap=DEFAULT_SPACE_CAP) -> MaxMapSpace:
    """Materialize every maxitive map e -> l; the candidate pool is |L|^|E|."""
    if l.n ** e.n > cap:
        raise MapError(f"candidate pool {l.n}^{e.n} exceeds the cap {cap}")
    if not classify(l).is_complete_lattice:
        raise MapError("the target must be a complete lattice")
    maps = []
    for values in iter_monotone_values(e, l):
        candidate = MonotoneMap(e, l, values)
        if maxitivity_witness(candidate) is None:
            maps.append(values)
    return MaxMapSpace(e, l, maps)


def pointwise_inf(space, family, sel: FilterSelection) -> MonotoneMap:
    """Pointwise infimum of a selected family of maps in the space.

    The family must be a nonempty selected set of the space's poset; the
    result is again maxitive and is the family's infimum in the space.
    """
    family = frozenset(family)
    if sel.poset != space.poset:
        raise SelectionError("selection was built on a different space")
    if not family:
        raise SelectionError("the empty family has no pointwise infimum here")
    if family not in sel.fsets:
        raise SelectionError("family is not a selected set of the space")
    values = []
    for g in range(space.source.n):
        m = space.target.inf_of(frozenset(space.maps[k][g] for k in family))
        if m is None:
            raise MapError(f"pointwise infimum missing at {g}")
        values.append(m)
    return MonotoneMap(space.source, space.target, tuple(values))


def generator_values(space, gen: Generator):
    top = space.target.top()
    if top is None:
        raise MapError("the target needs a top for generator maps")
    return tuple(gen.s if space.source.leq(g, gen.h) else top
                 for g in range(space.source.n))


def generator_map(space, gen: Generator) -> MonotoneMap:
    """The map of a generator pair, checked to be a member of the space."""
    values = generator_values(space, gen)
    space.index_of(values)
    return MonotoneMap(space.source, space.target, values)


def representation(space, values, sel_l: FilterSelection = None):
    """All generator pairs (h, s) with s way-above the value of the map at h.

    The way-above relation of the target defaults to the filtered selection;
    the pointwise infimum of the generators' maps reconstructs the map
    exactly when the target is continuous under the chosen selection.
    """
    values = tuple(getattr(values, "values", values))
    if sel_l is None:
        sel_l = build_selection(space.target, SelectionKind.FILTERED)
    rel = way_above(space.target, sel_l)
    return tuple(Generator(h, s)
                 for h in range(space.source.n)
                 for s in range(space.target.n)
                 if rel.way_above(s, values[h]))


def reconstruction(space, gens):
    """Pointwise infimum of the maps of the given generators."""
    l = space.target
    values = []
    for g in range(space.source.n):
        pool = frozenset(generator_values(space, gen)[g] for gen in gens)
        m = l.inf_of(pool) if pool else l.top()
        if m is None:
            raise MapError(f"generator infimum missing at {g}")
        values.append(m)
    return tuple(values)


def way_above_in_space(space):
    """Way-above on the space's poset under the filtered selection."""
    sel = build_selection(space.poset, SelectionKind.FILTERED)
    return way_above(space.poset, sel)


def corollary_way_above(space, w, v, sel_l=None) -> bool:
    """The generator characterization: w is way-above v iff w dominates the
    pointwise infimum of some finite family of generators of v.

    Enlarging the family only lowers the infimum, so a witnessing family
    exists exactly when the full generator family works.
    """
    gens = representation(space, space.maps[v], sel_l)
    floor = reconstruction(space, gens)
    l = space.target
    return all(l.leq(floor[g], space.maps[w][g]) for g in range(space.source.n))


def m_arrow(space, u, v) -> MonotoneMap:
    """Residuation u <- v inside the space: the least w with v <= u join w.

    Built through the sublevel-ideal family whose member at t collects the
    g such that v(h) <= u(h) join t for every h below g, then evaluated via
    the infimum formula; requires a distributive target.
    """
    from .residuation import heyting_arrow  # local: avoids a module cycle

    l = space.target
    if not classify(l).is_distributive:
        raise PosetError("the target must be distributive")
    uvals = space.maps[u] if isinstance(u, int) else tuple(u)
    vvals = space.maps[v] if isinstance(v, int) else tuple(v)
    e = space.source
    family = []
    for t in range(l.n):
        family.append(frozenset(
            g for g in range(e.n)
            if all(l.leq(vvals[h], l.sup_of((uvals[h], t)))
                   for h in e.down(g))))
    fam = IdealFamily(e, l, tuple(family))
    sel = build_selection(l, SelectionKind.PRINCIPAL)
    arrow = from_ideal_family(fam, sel)
    space.index_of(arrow.values)
    expected = tuple(l.sup_of(frozenset(heyting_arrow(l, uvals[h], vvals[h])
                                        for h in e.down(g)))
                     for g in range(e.n))
    assert arrow.values == expected
    return arrow
