"""Lattices on top of posets: total meet/join tables, grading, join
irreducibles, generated sublattices and rank."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    NotALattice,
    NotComparable,
    NotRestricted,
    SizeLimitExceeded,
)
from .poset import Poset, dual_poset

VERIFY_LIMIT = 2000  # exhaustive table verification cap
RANK_IRREDUCIBLE_CAP = 20


class Lattice:
    """A finite lattice: poset plus full n-by-n meet and join index tables.

    Tables are int16 numpy arrays (all target lattices stay well below
    32768 elements); lookups are O(1).  Instances are immutable and safe
    for concurrent reads.
    """

    def __init__(
        self,
        poset: Poset,
        meet: np.ndarray,
        join: np.ndarray,
        bottom: int,
        top: int,
        *,
        verify: bool = True,
    ):
        self.poset = poset
        self.meet = np.asarray(meet, dtype=np.int16)
        self.join = np.asarray(join, dtype=np.int16)
        self.meet.flags.writeable = False
        self.join.flags.writeable = False
        self.bottom_index = int(bottom)
        self.top_index = int(top)
        if verify and self.n <= VERIFY_LIMIT:
            self._verify()

    # -- delegation -------------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    def index(self, name: str) -> int:
        return self.poset.index(name)

    def le(self, a: str, b: str) -> bool:
        return self.poset.le(a, b)

    @property
    def bottom(self) -> str:
        return self.names[self.bottom_index]

    @property
    def top(self) -> str:
        return self.names[self.top_index]

    def meet_of(self, a: str, b: str) -> str:
        return self.names[self.meet[self.index(a), self.index(b)]]

    def join_of(self, a: str, b: str) -> str:
        return self.names[self.join[self.index(a), self.index(b)]]

    def __repr__(self):
        return f"Lattice({self.n} elements, bottom={self.bottom!r}, top={self.top!r})"

    # -- verification ------------------------------------------------------

    def _verify(self):
        """Exhaustive lub/glb universal property, absorption and the
        three-way equivalence b<=a <=> a^b=b <=> avb=a over all pairs."""
        n = self.n
        leq = self.leq
        meet, join = self.meet, self.join
        rows = np.arange(n)
        # join(a,b) is an upper bound; meet(a,b) a lower bound
        if not leq[rows[:, None], join].all() or not leq[rows[None, :], join].all():
            raise NotALattice(("<table>", "<table>"), [], "join")
        if not leq[meet, rows[None, :]].all() or not leq[meet, rows[:, None]].all():
            raise NotALattice(("<table>", "<table>"), [], "meet")
        # least/greatest among bounds: up(a) & up(b) == up(join(a,b))
        packed = np.packbits(leq, axis=1)
        packed_t = np.packbits(leq.T, axis=1)
        for a in range(n):
            ub = packed[a] & packed
            if not (ub == packed[join[a]]).all():
                b = int(np.nonzero((ub != packed[join[a]]).any(axis=1))[0][0])
                raise NotALattice(
                    (self.names[a], self.names[b]),
                    self._minimal_upper_bounds(a, b),
                    "join",
                )
            lb = packed_t[a] & packed_t
            if not (lb == packed_t[meet[a]]).all():
                b = int(np.nonzero((lb != packed_t[meet[a]]).any(axis=1))[0][0])
                raise NotALattice(
                    (self.names[a], self.names[b]),
                    self._maximal_lower_bounds(a, b),
                    "meet",
                )
        # absorption a ^ (a v b) = a and the order equivalences
        if not (meet[rows[:, None], join] == rows[:, None]).all():
            raise NotALattice(("<table>", "<table>"), [], "absorption")
        if not ((meet == rows[None, :]) == leq.T).all():
            raise NotALattice(("<table>", "<table>"), [], "meet-order")
        if not ((join == rows[:, None]) == leq.T).all():
            raise NotALattice(("<table>", "<table>"), [], "join-order")

    def _minimal_upper_bounds(self, a: int, b: int) -> list[str]:
        ub = self.poset.up_masks[a] & self.poset.up_masks[b]
        down = self.poset.down_masks
        out = []
        m = ub
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            if down[i] & ub & ~(1 << i) == 0:
                out.append(self.names[i])
        return out

    def _maximal_lower_bounds(self, a: int, b: int) -> list[str]:
        lb = self.poset.down_masks[a] & self.poset.down_masks[b]
        up = self.poset.up_masks
        out = []
        m = lb
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            if up[i] & lb & ~(1 << i) == 0:
                out.append(self.names[i])
        return out

    # -- grading ------------------------------------------------------------

    @cached_property
    def grading(self) -> "GradeResult":
        return grade(self)

    @cached_property
    def dual(self) -> "Lattice":
        """Order-reversed lattice (meet and join tables swapped)."""
        return Lattice(
            dual_poset(self.poset),
            self.join,
            self.meet,
            self.top_index,
            self.bottom_index,
            verify=False,
        )


# -- construction ------------------------------------------------------------


def as_lattice(p: Poset) -> Lattice:
    """Promote a poset to a lattice, verifying unique lubs and glbs.

    Raises :class:`NotALattice` with the witness pair and its set of
    minimal upper (or maximal lower) bounds.
    """
    n = p.n
    if n == 0:
        raise NotALattice((None, None), [], "empty")
    up, down = p.up_masks, p.down_masks
    meet = np.zeros((n, n), dtype=np.int16)
    join = np.zeros((n, n), dtype=np.int16)
    for a in range(n):
        for b in range(a, n):
            j = _unique_least(up[a] & up[b], down, p, a, b, "join")
            m = _unique_least(down[a] & down[b], up, p, a, b, "meet")
            join[a, b] = join[b, a] = j
            meet[a, b] = meet[b, a] = m
    bottom, top = 0, 0
    for a in range(n):
        bottom = int(meet[bottom, a])
        top = int(join[top, a])
    return Lattice(p, meet, join, bottom, top, verify=n <= VERIFY_LIMIT)


def _unique_least(bounds: int, opposite: tuple[int, ...], p: Poset, a, b, kind):
    """Index of the unique minimal element of ``bounds`` (a bitmask);
    minimality measured against ``opposite`` masks."""
    if bounds == 0:
        raise NotALattice((p.names[a], p.names[b]), [], kind)
    minimal = []
    m = bounds
    while m:
        low = m & -m
        i = low.bit_length() - 1
        m ^= low
        if opposite[i] & bounds & ~(1 << i) == 0:
            minimal.append(i)
    if len(minimal) != 1:
        raise NotALattice(
            (p.names[a], p.names[b]), [p.names[i] for i in minimal], kind
        )
    return minimal[0]


def lattice_from_le_pairs(names: Sequence[str], le_pairs, **kw) -> Lattice:
    """Convenience: build the poset from arbitrary <= pairs, then promote."""
    from .poset import build_poset

    return as_lattice(build_poset(names, le_pairs, **kw))


# -- grading -----------------------------------------------------------------


@dataclass(frozen=True)
class GradeResult:
    """Degree function when all maximal chains have equal length.

    ``degree`` maps name -> level with degree(bottom) = 0 and +1 across
    covers; None when the lattice is not graded, in which case ``witness``
    holds two maximal chains of different lengths.
    """

    degree: Optional[dict[str, int]]
    witness: Optional[tuple[list[str], list[str]]]

    @property
    def graded(self) -> bool:
        return self.degree is not None


def grade(l: Lattice) -> GradeResult:
    """Degree function of a graded lattice, or a two-chain witness."""
    p = l.poset
    rho = [None] * l.n
    rho[l.bottom_index] = 0
    for i in p.topo_order:
        if i == l.bottom_index:
            continue
        lows = p.lower_covers(i)
        levels = {rho[j] for j in lows}
        if len(levels) != 1 or None in levels:
            return GradeResult(None, _unequal_chain_witness(l))
        rho[i] = levels.pop() + 1
    return GradeResult({l.names[i]: rho[i] for i in range(l.n)}, None)


def _unequal_chain_witness(l: Lattice) -> tuple[list[str], list[str]]:
    """Two maximal chains of different length (shortest vs longest path)."""
    p = l.poset
    short = {l.bottom_index: [l.bottom_index]}
    long = {l.bottom_index: [l.bottom_index]}
    for i in p.topo_order:
        if i == l.bottom_index:
            continue
        lows = p.lower_covers(i)
        s = min((short[j] for j in lows), key=len)
        g = max((long[j] for j in lows), key=len)
        short[i] = s + [i]
        long[i] = g + [i]
    a = [l.names[i] for i in short[l.top_index]]
    b = [l.names[i] for i in long[l.top_index]]
    return a, b


# -- join irreducibles --------------------------------------------------------


@dataclass(frozen=True)
class JoinIrreducibles:
    """Join irreducibles in canonical element order.

    ``lower_cover`` maps each nonzero irreducible J to its unique lower
    cover (the J^0 of a unique maximal subobject); the bottom, when
    included, maps to None.
    """

    names: tuple[str, ...]
    lower_cover: dict[str, Optional[str]]


def join_irreducibles(l: Lattice, include_bottom: bool = False) -> JoinIrreducibles:
    """Elements with at most one lower cover.

    With ``include_bottom=False`` (the Birkhoff convention) the bottom is
    excluded; with True it is included, matching the reading under which
    the glb of the whole lattice counts as join irreducible.
    """
    out, lower = [], {}
    for i in range(l.n):
        lows = l.poset.lower_covers(i)
        if i == l.bottom_index:
            if include_bottom:
                out.append(l.names[i])
                lower[l.names[i]] = None
            continue
        if len(lows) == 1:
            out.append(l.names[i])
            lower[l.names[i]] = l.names[lows[0]]
    return JoinIrreducibles(tuple(out), lower)


# -- sublattices and rank ------------------------------------------------------


def sublattice_closure(l: Lattice, seed: Iterable[str]) -> frozenset[str]:
    """Least superset of ``seed`` closed under meet and join."""
    idx = {l.index(x) for x in seed}
    if not idx:
        raise ValueError("seed must be nonempty")
    current = sorted(idx)
    while True:
        new = set(current)
        arr = np.array(current)
        new.update(int(v) for v in l.meet[np.ix_(arr, arr)].ravel())
        new.update(int(v) for v in l.join[np.ix_(arr, arr)].ravel())
        if len(new) == len(current):
            return frozenset(l.names[i] for i in current)
        current = sorted(new)


def atoms(l: Lattice) -> list[str]:
    """Covers of the bottom element."""
    return [l.names[i] for i in l.poset.upper_covers(l.bottom_index)]


def coatoms(l: Lattice) -> list[str]:
    """Elements covered by the top element."""
    return [l.names[i] for i in l.poset.lower_covers(l.top_index)]


@dataclass(frozen=True)
class RankResult:
    rank: int
    witness: tuple[str, ...]


def rank(l: Lattice, *, irreducible_cap: int = RANK_IRREDUCIBLE_CAP) -> RankResult:
    """Minimal number of nonzero join irreducibles generating the lattice.

    Defined for restricted lattices (at least 2 atoms and 2 coatoms);
    exhaustive search in increasing subset size over the join
    irreducibles, ties broken by canonical element order.
    """
    if len(atoms(l)) < 2 or len(coatoms(l)) < 2:
        raise NotRestricted(
            "rank requires at least 2 atoms and 2 coatoms "
            f"(got {len(atoms(l))} and {len(coatoms(l))})"
        )
    irr = join_irreducibles(l, include_bottom=False).names
    if len(irr) > irreducible_cap:
        raise SizeLimitExceeded(
            f"rank search capped at {irreducible_cap} join irreducibles"
        )
    everything = frozenset(l.names)
    for k in range(1, len(irr) + 1):
        for subset in itertools.combinations(irr, k):
            if sublattice_closure(l, subset) == everything:
                return RankResult(k, subset)
    raise RuntimeError("join irreducibles failed to generate the lattice")


# -- derived lattices -----------------------------------------------------------


def interval_sublattice(l: Lattice, a: str, b: str) -> Lattice:
    """The interval [a, b] as a lattice (tables restricted and reindexed)."""
    ia, ib = l.index(a), l.index(b)
    if not l.leq[ia, ib]:
        raise NotComparable(f"{a!r} is not below {b!r}")
    keep = [i for i in range(l.n) if l.leq[ia, i] and l.leq[i, ib]]
    pos = {i: k for k, i in enumerate(keep)}
    sub = l.poset.restrict(keep)
    arr = np.array(keep)
    meet = np.vectorize(pos.__getitem__)(l.meet[np.ix_(arr, arr)])
    join = np.vectorize(pos.__getitem__)(l.join[np.ix_(arr, arr)])
    return Lattice(sub, meet, join, pos[ia], pos[ib], verify=False)


def add_bounds(
    l: Lattice,
    *,
    bottom: Optional[str] = None,
    top: Optional[str] = None,
) -> Lattice:
    """Adjoin a new bottom and/or top element strictly outside the lattice."""
    names = list(l.names)
    n = l.n
    bi, ti = l.bottom_index, l.top_index
    extra = []
    if bottom is not None:
        if bottom in l.poset:
            raise ValueError(f"name {bottom!r} already present")
        extra.append(("bottom", bottom))
    if top is not None:
        if top in l.poset or top == bottom:
            raise ValueError(f"name {top!r} already present")
        extra.append(("top", top))
    if not extra:
        return l
    m = n + len(extra)
    leq = np.zeros((m, m), dtype=bool)
    leq[:n, :n] = l.leq
    meet = np.zeros((m, m), dtype=np.int16)
    join = np.zeros((m, m), dtype=np.int16)
    meet[:n, :n] = l.meet
    join[:n, :n] = l.join
    for kind, name in extra:
        k = len(names)
        names.append(name)
        leq[k, k] = True
        if kind == "bottom":
            leq[k, :n] = True
            meet[k, :] = meet[:, k] = k
            join[k, :n] = join[:n, k] = np.arange(n)
            join[k, k] = k
            bi = k
        else:
            leq[:n, k] = True
            join[k, :] = join[:, k] = k
            meet[k, :n] = meet[:n, k] = np.arange(n)
            meet[k, k] = k
            ti = k
    if bottom is not None and top is not None:
        b, t = n, n + 1
        leq[b, t] = True
        meet[b, t] = meet[t, b] = b
        join[b, t] = join[t, b] = t
    return Lattice(Poset(names, leq), meet, join, bi, ti, verify=m <= VERIFY_LIMIT)
