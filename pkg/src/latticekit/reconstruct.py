"""Rebuild a full labeled submodule lattice from partial information.

Input: the composition-factor labels of a multiplicity-free module, a list
of join-irreducible submodules covering all factors (each with its factor
multiset and top factor), and containment facts among them.  The declared
irreducibles form a poset; its lattice of down-sets, with each cover edge
labeled by the top factor of the irreducible it adds, is the submodule
lattice.  An optional post-step adjoins the ambient module and the simple
socle as new top and bottom.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .birkhoff import LabeledLattice, ideals_lattice, irreducible_poset
from .errors import (
    CoverageGap,
    CycleDetected,
    DuplicateTopFactor,
    EmbeddingFailure,
    InconsistentOrder,
    InvalidSpec,
    NotComparable,
    OrderConflict,
    UnknownElement,
)
from .lattice import add_bounds, interval_sublattice
from .poset import DEFAULT_IDEAL_CAP, Poset, build_poset, is_isomorphic
from .properties import is_distributive, is_multiplicity_free


@dataclass(frozen=True)
class IrreducibleDecl:
    """One declared join-irreducible submodule."""

    name: str
    top: str  # its head: the factor added by its unique upper edge
    factors: tuple[str, ...]  # full composition-factor set (multiplicity free)


@dataclass(frozen=True)
class Bounds:
    """Names and edge labels used when adjoining the module top and socle."""

    bottom_name: str = "0̂"
    bottom_label: str = "socle"
    top_name: str = "1̂"
    top_label: str = "head"


@dataclass(frozen=True)
class ReconstructionSpec:
    factors: tuple[str, ...]
    irreducibles: tuple[IrreducibleDecl, ...]
    order: tuple[tuple[str, str], ...] = ()
    edges: tuple[tuple[str, str, str], ...] = ()
    bounds: Optional[Bounds] = None

    def declared(self, name: str) -> IrreducibleDecl:
        for decl in self.irreducibles:
            if decl.name == name:
                return decl
        raise UnknownElement(f"no irreducible named {name!r}")


def load_spec(source: Union[str, Path, dict]) -> ReconstructionSpec:
    """Read a reconstruction spec from a JSON file or an already-parsed dict."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = source
    bounds = None
    if "bounds" in data:
        bounds = Bounds(**data["bounds"])
    return ReconstructionSpec(
        factors=tuple(data["factors"]),
        irreducibles=tuple(
            IrreducibleDecl(d["name"], d["top"], tuple(d["factors"]))
            for d in data["irreducibles"]
        ),
        order=tuple((a, b) for a, b in data.get("order", ())),
        edges=tuple((a, b, lab) for a, b, lab in data.get("edges", ())),
        bounds=bounds,
    )


@dataclass(frozen=True)
class SpecReport:
    ok: bool
    factor_count: int
    irreducible_count: int


def validate_spec(s: ReconstructionSpec) -> SpecReport:
    """Coverage, multiplicity-freeness and the factor/irreducible bijection.

    Every declared factor must appear in some irreducible; factor multisets
    must be duplicate free; and the top factors must hit each factor exactly
    once (one irreducible per composition-factor class).
    """
    declared = set(s.factors)
    if len(s.factors) != len(declared):
        raise InvalidSpec("duplicate labels in the factor list")
    names = [d.name for d in s.irreducibles]
    if len(set(names)) != len(names):
        raise InvalidSpec("duplicate irreducible names")
    seen_tops: dict[str, str] = {}
    covered: set[str] = set()
    for d in s.irreducibles:
        if len(set(d.factors)) != len(d.factors):
            raise InvalidSpec(
                f"irreducible {d.name!r} repeats a factor; "
                "the module would not be multiplicity free"
            )
        if d.top not in d.factors:
            raise InvalidSpec(
                f"irreducible {d.name!r} does not contain its own top factor"
            )
        unknown = set(d.factors) - declared
        if unknown:
            raise InvalidSpec(
                f"irreducible {d.name!r} uses undeclared factors {sorted(unknown)}"
            )
        if d.top in seen_tops:
            raise DuplicateTopFactor(d.top)
        seen_tops[d.top] = d.name
        covered.update(d.factors)
    for label in s.factors:
        if label not in covered:
            raise CoverageGap(label)
        if label not in seen_tops:
            raise CoverageGap(label)
    known = set(names)
    for a, b in s.order:
        if a not in known or b not in known:
            raise UnknownElement(f"order fact ({a!r}, {b!r}) names unknown modules")
    try:
        build_poset(names, s.order, warn_redundant=False)
    except CycleDetected as exc:
        raise InconsistentOrder(f"declared order facts are cyclic: {exc}") from exc
    return SpecReport(True, len(s.factors), len(s.irreducibles))


def irreducible_order(s: ReconstructionSpec, infer: bool = False) -> Poset:
    """Poset of the declared irreducibles.

    Declared containments are always corroborated against factor sets
    (containment of submodules forces containment of factor sets in a
    multiplicity-free module).  With ``infer=True``, strict factor-subset
    pairs are added as containments; by default they are only checked.
    """
    validate_spec(s)
    fsets = {d.name: frozenset(d.factors) for d in s.irreducibles}
    for a, b in s.order:
        if not fsets[a] <= fsets[b]:
            raise OrderConflict(
                (a, b),
                f"declared {a!r} <= {b!r} but factors {sorted(fsets[a] - fsets[b])} "
                f"of {a!r} do not occur in {b!r}",
            )
    names = [d.name for d in s.irreducibles]
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if fsets[a] == fsets[b]:
                raise OrderConflict(
                    (a, b),
                    "equal factor sets: two distinct join irreducibles would "
                    "share a head, so the module is not multiplicity free",
                )
    pairs = list(s.order)
    if infer:
        declared = set(pairs)
        for a in names:
            for b in names:
                if a != b and fsets[a] < fsets[b] and (a, b) not in declared:
                    pairs.append((a, b))
    return build_poset(names, pairs, warn_redundant=False)


def _join_name(parts: tuple[str, ...]) -> str:
    return "+".join(parts) if parts else "0"


def reconstruct(
    s: ReconstructionSpec,
    with_bounds: bool = False,
    infer: bool = False,
    cap: int = DEFAULT_IDEAL_CAP,
) -> LabeledLattice:
    """The full labeled lattice determined by the declared irreducibles.

    Elements are down-sets of the irreducible poset, named by the join of
    their maximal irreducibles (bottom is "0"); the cover edge adding
    irreducible J is labeled by J's top factor.  The result is checked to
    be distributive and multiplicity free, to round-trip to the input
    poset, and to embed every declared partial edge label-preservingly.
    """
    p = irreducible_order(s, infer=infer)
    top_of = {d.name: d.top for d in s.irreducibles}

    up_masks = p.up_masks

    def namer(members: tuple[str, ...]) -> str:
        idx = [p.index(x) for x in members]
        mask = 0
        for i in idx:
            mask |= 1 << i
        maximal = [i for i in idx if up_masks[i] & mask & ~(1 << i) == 0]
        return _join_name(tuple(p.names[i] for i in sorted(maximal)))

    raw = ideals_lattice(p, cap=cap, namer=namer)
    labels = {edge: top_of[irr] for edge, irr in raw.edge_labels.items()}
    result = LabeledLattice(raw.lattice, labels)
    result.validate()

    assert is_distributive(result.lattice).distributive
    assert is_multiplicity_free(result.lattice)
    assert is_isomorphic(irreducible_poset(result.lattice), p) is not None

    for edge in s.edges:
        _check_embedded(result, p, edge)

    if with_bounds:
        bounds = s.bounds or Bounds()
        lattice = add_bounds(
            result.lattice, bottom=bounds.bottom_name, top=bounds.top_name
        )
        labels = dict(result.edge_labels)
        labels[(bounds.bottom_name, result.lattice.bottom)] = bounds.bottom_label
        labels[(result.lattice.top, bounds.top_name)] = bounds.top_label
        result = LabeledLattice(lattice, labels)
        result.validate()
    return result


def _resolve_join_expr(ll: LabeledLattice, p: Poset, text: str) -> str:
    """Map a '+'-join of irreducible names (or '0') to an element name."""
    text = text.strip()
    if text == "0":
        return ll.lattice.bottom
    parts = [part.strip().strip("()").strip() for part in text.split("+")]
    value = ll.lattice.bottom
    for part in parts:
        if part not in p:
            raise UnknownElement(f"unknown irreducible {part!r} in {text!r}")
        principal = _join_name((part,))
        # principal ideals keep their irreducible's name
        value = ll.lattice.join_of(value, principal)
    return value


def _check_embedded(ll: LabeledLattice, p: Poset, edge: tuple[str, str, str]):
    lower_text, upper_text, label = edge
    try:
        lower = _resolve_join_expr(ll, p, lower_text)
        upper = _resolve_join_expr(ll, p, upper_text)
    except UnknownElement as exc:
        raise EmbeddingFailure(edge) from exc
    covers = ll.lattice.poset.covers_matrix
    i, j = ll.lattice.index(lower), ll.lattice.index(upper)
    if not covers[i, j] or ll.edge_labels.get((lower, upper)) != label:
        raise EmbeddingFailure(edge)


# -- reading off the result ------------------------------------------------------


def element_factors(ll: LabeledLattice, x: str) -> Counter:
    """Multiset of edge labels along any maximal chain from the bottom to x.

    Chain independence holds in any modular labeled lattice (labels are
    constant on interval classes); for multiplicity-free lattices the
    result is a plain set.
    """
    l = ll.lattice
    i = l.index(x)
    out: Counter = Counter()
    while i != l.bottom_index:
        j = min(l.poset.lower_covers(i))
        out[ll.label(l.names[j], l.names[i])] += 1
        i = j
    return out


def interval_of(ll: LabeledLattice, a: str, b: str) -> LabeledLattice:
    """The interval [a, b] as a labeled lattice with inherited labels."""
    sub = interval_sublattice(ll.lattice, a, b)
    keep = set(sub.names)
    labels = {
        (lo, up): lab
        for (lo, up), lab in ll.edge_labels.items()
        if lo in keep and up in keep
    }
    out = LabeledLattice(sub, labels)
    out.validate()
    return out


def quotient_by(ll: LabeledLattice, s: str) -> LabeledLattice:
    """Identify along everything below s: the interval [s, top]."""
    if not ll.lattice.le(s, ll.lattice.top):
        raise NotComparable(f"{s!r} is not below the top")
    return interval_of(ll, s, ll.lattice.top)
