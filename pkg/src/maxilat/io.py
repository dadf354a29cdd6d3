"""JSON round-tripping for posets, maps, selections and verdict records.

Poset files carry element names and covering pairs; the reflexive and
transitive closure is rebuilt on load and antisymmetry violations are
reported with the offending cycle.  Maps and selections refer to elements
by label.
"""

import json
from fractions import Fraction
from importlib import resources

from .poset import FinitePoset, PosetError
from .selections import FilterSelection, SelectionKind, build_selection
from .maxitive import MonotoneMap, RationalConeMap


class FormatError(ValueError):
    """A file or document does not match the expected schema."""


def _require(doc, key, kind, where):
    if key not in doc:
        raise FormatError(f"{where}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise FormatError(f"{where}: field {key!r} must be a {kind.__name__}")
    return value


# -- posets -----------------------------------------------------------------


def poset_from_dict(doc, where="poset") -> FinitePoset:
    elements = _require(doc, "elements", list, where)
    if not all(isinstance(x, str) for x in elements):
        raise FormatError(f"{where}: element names must be strings")
    if len(set(elements)) != len(elements):
        raise FormatError(f"{where}: element names must be distinct")
    index = {name: i for i, name in enumerate(elements)}
    covers = _require(doc, "covers", list, where)
    pairs = []
    for k, edge in enumerate(covers):
        if not (isinstance(edge, list) and len(edge) == 2):
            raise FormatError(f"{where}: covers[{k}] must be a pair")
        a, b = edge
        for name in (a, b):
            if name not in index:
                raise FormatError(f"{where}: covers[{k}] uses unknown element "
                                  f"{name!r}")
        pairs.append((index[a], index[b]))
    try:
        return FinitePoset.from_relation(len(elements), pairs, tuple(elements))
    except PosetError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def poset_to_dict(p) -> dict:
    labels = p.labels or tuple(f"e{i}" for i in range(p.n))
    return {"elements": list(labels),
            "covers": [[labels[i], labels[j]] for i, j in p.covers()]}


def load_poset(path) -> FinitePoset:
    with open(path, encoding="utf-8") as fh:
        return poset_from_dict(json.load(fh), where=str(path))


def save_poset(p, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(poset_to_dict(p), fh, indent=2)
        fh.write("\n")


# -- maps ---------------------------------------------------------------------


def map_from_dict(doc, where="map"):
    """A MonotoneMap, or a RationalConeMap when no target poset is given."""
    source = poset_from_dict(_require(doc, "source", dict, where),
                             where=f"{where}.source")
    values_doc = _require(doc, "values", dict, where)
    values = []
    for g in range(source.n):
        name = source.labels[g]
        if name not in values_doc:
            raise FormatError(f"{where}: no value for element {name!r}")
    if "target" in doc:
        target = poset_from_dict(_require(doc, "target", dict, where),
                                 where=f"{where}.target")
        for g in range(source.n):
            raw = values_doc[source.labels[g]]
            if not isinstance(raw, str):
                raise FormatError(f"{where}: values must name target elements")
            try:
                values.append(target.index_of(raw))
            except PosetError as exc:
                raise FormatError(f"{where}: {exc}") from exc
        try:
            return MonotoneMap(source, target, tuple(values))
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from exc
    for g in range(source.n):
        raw = values_doc[source.labels[g]]
        try:
            values.append(Fraction(raw))
        except (ValueError, TypeError) as exc:
            raise FormatError(f"{where}: value for {source.labels[g]!r} is not "
                              f"rational") from exc
    try:
        return RationalConeMap(source, tuple(values))
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def map_to_dict(v) -> dict:
    doc = {"source": poset_to_dict(v.source)}
    labels = v.source.labels or tuple(f"e{i}" for i in range(v.source.n))
    if isinstance(v, MonotoneMap):
        doc["target"] = poset_to_dict(v.target)
        doc["values"] = {labels[g]: v.target.label_of(v.values[g])
                         for g in range(v.source.n)}
    else:
        doc["values"] = {labels[g]: str(v.values[g])
                         for g in range(v.source.n)}
    return doc


def load_map(path):
    with open(path, encoding="utf-8") as fh:
        return map_from_dict(json.load(fh), where=str(path))


def save_map(v, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(map_to_dict(v), fh, indent=2)
        fh.write("\n")


# -- selections -----------------------------------------------------------------


def parse_selection_spec(p, spec) -> FilterSelection:
    """Build a selection from a CLI spec: a kind name or explicit:<file>."""
    if spec.startswith("explicit:"):
        path = spec.split(":", 1)[1]
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        return selection_from_dict(p, doc, where=path)
    try:
        kind = SelectionKind(spec)
    except ValueError:
        raise FormatError(f"unknown selection kind {spec!r}") from None
    if kind is SelectionKind.EXPLICIT:
        raise FormatError("explicit selections need a file: explicit:<path>")
    return build_selection(p, kind)


def selection_from_dict(p, doc, where="selection") -> FilterSelection:
    sets_doc = _require(doc, "fsets", list, where)
    recursion = doc.get("recursion", "principal")
    fsets = []
    for k, names in enumerate(sets_doc):
        if not isinstance(names, list):
            raise FormatError(f"{where}: fsets[{k}] must be a list of labels")
        try:
            fsets.append(frozenset(p.index_of(name) for name in names))
        except PosetError as exc:
            raise FormatError(f"{where}: fsets[{k}]: {exc}") from exc
    try:
        return build_selection(p, SelectionKind.EXPLICIT, explicit_sets=fsets,
                               recursion_kind=SelectionKind(recursion))
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


# -- bundled fixtures ----------------------------------------------------------


def fixture(name):
    """Parsed JSON of a bundled fixture file."""
    text = resources.files("maxilat.data").joinpath(name).read_text("utf-8")
    return json.loads(text)


def fixture_poset(name) -> FinitePoset:
    return poset_from_dict(fixture(name), where=name)


def fixture_map(name):
    return map_from_dict(fixture(name), where=name)
