"""JSON and DOT serialization.

Poset/lattice files share one shape:

    { "elements": ["0", "a", ...],
      "covers":   [["0", "a"], ...],
      "labels":   { "0|a": "g", ... } }        # optional, keyed lower|upper

DOT output is a digraph with edges oriented lower to upper, rankdir=BT,
and the factor letter as edge label when present.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .birkhoff import LabeledLattice
from .errors import InvalidSpec
from .lattice import Lattice, as_lattice
from .poset import Poset, build_poset

PathLike = Union[str, Path]


def poset_to_dict(p: Poset, labels: Optional[dict] = None) -> dict:
    out = {
        "elements": list(p.names),
        "covers": [[a, b] for a, b in p.cover_names()],
    }
    if labels:
        for a, b in labels:
            if "|" in a or "|" in b:
                raise InvalidSpec(
                    "element names may not contain '|' when labels are stored"
                )
        out["labels"] = {f"{a}|{b}": lab for (a, b), lab in sorted(labels.items())}
    return out


def poset_from_dict(data: dict) -> tuple[Poset, dict]:
    p = build_poset(data["elements"], [tuple(c) for c in data["covers"]])
    labels = {}
    for key, lab in data.get("labels", {}).items():
        a, _, b = key.partition("|")
        labels[(a, b)] = lab
    return p, labels


def read_poset(path: PathLike) -> tuple[Poset, dict]:
    with open(path, encoding="utf-8") as fh:
        return poset_from_dict(json.load(fh))


def write_poset(path: PathLike, p: Poset, labels: Optional[dict] = None) -> None:
    Path(path).write_text(
        json.dumps(poset_to_dict(p, labels), ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )


def read_lattice(path: PathLike) -> Lattice:
    """Load a poset file and validate lattice-ness."""
    p, _ = read_poset(path)
    return as_lattice(p)


def read_labeled_lattice(path: PathLike) -> LabeledLattice:
    p, labels = read_poset(path)
    ll = LabeledLattice(as_lattice(p), labels)
    ll.validate()
    return ll


def write_lattice(path: PathLike, l: Lattice, labels: Optional[dict] = None) -> None:
    write_poset(path, l.poset, labels)


def _dot_quote(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)


def to_dot(p: Poset, labels: Optional[dict] = None, name: str = "lattice") -> str:
    """Graphviz digraph: one node per element, one edge per cover pair."""
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=BT;"]
    for x in p.names:
        lines.append(f"  {_dot_quote(x)};")
    for a, b in p.cover_names():
        attr = ""
        if labels and (a, b) in labels:
            attr = f" [label={_dot_quote(labels[(a, b)])}]"
        lines.append(f"  {_dot_quote(a)} -> {_dot_quote(b)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def labeled_to_dot(ll: LabeledLattice, name: str = "lattice") -> str:
    return to_dot(ll.lattice.poset, ll.edge_labels, name)
