"""Schur rings: validation, structure constants, A-subgroups and enumeration
of central S-rings as fusions of the class algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .groups import Group, Subgroup, generated_subgroup, join_closure, radical


class SRingError(ValueError):
    """Base class for S-ring validation failures."""

    axiom = "S-ring"

    def __init__(self, message: str, witness: Optional[dict] = None):
        super().__init__(message)
        self.witness = witness or {}


class NotPartition(SRingError):
    axiom = "partition"


class S1Violation(SRingError):
    axiom = "S1"


class S2Violation(SRingError):
    axiom = "S2"


class S3Violation(SRingError):
    axiom = "S3"


class ClassCountExceeded(ValueError):
    pass


class ResultLimitExceeded(RuntimeError):
    pass


def _canonical(parts: Iterable[Iterable[int]]) -> tuple[frozenset, ...]:
    return tuple(sorted((frozenset(p) for p in parts), key=lambda s: (len(s), min(s))))


@dataclass(frozen=True, eq=False)
class SRing:
    """A validated S-ring over ``group``.

    Build instances with :func:`from_partition`; the constructor itself
    does no checking.
    """

    group: Group
    basic_sets: tuple[frozenset, ...]
    set_of: np.ndarray = field(repr=False)
    constants: np.ndarray = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.basic_sets)

    @cached_property
    def is_central(self) -> bool:
        cls = self.group.conjugacy
        return all(cls.classes[cls.class_of[x]] <= b for b in self.basic_sets for x in b)

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.constants, self.constants.transpose(1, 0, 2)))

    @cached_property
    def key(self) -> tuple:
        return tuple(tuple(sorted(b)) for b in self.basic_sets)

    @cached_property
    def inverse_index(self) -> tuple[int, ...]:
        inv = self.group.inv
        return tuple(int(self.set_of[inv[min(b)]]) for b in self.basic_sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SRing):
            return NotImplemented
        return self.group is other.group and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"SRing({self.group!r}, rank={self.rank}, central={self.is_central})"

    def index_of(self, xs: Iterable[int]) -> int:
        """Index of the basic set equal to ``xs``; ``ValueError`` if none."""
        s = frozenset(xs)
        if s:
            i = int(self.set_of[min(s)])
            if self.basic_sets[i] == s:
                return i
        raise ValueError("not a basic set")

    def to_document(self, group_ref=None) -> dict:
        return {
            "group": group_ref if group_ref is not None else self.group.to_document(),
            "basic_sets": [sorted(b) for b in self.basic_sets],
            "central": self.is_central,
            "rank": self.rank,
        }


def _product_counts(g: Group, xs: Sequence[int], ys: Sequence[int]) -> np.ndarray:
    # coefficient of every group element in (sum xs)(sum ys)
    return np.bincount(g.mult[np.ix_(xs, ys)].ravel(), minlength=g.order)


def from_partition(g: Group, parts: Iterable[Iterable[int]]) -> SRing:
    """Validate a partition of ``g`` against the S-ring axioms."""
    parts = [list(p) for p in parts]
    if not all(parts):
        raise NotPartition("empty part")
    basic = _canonical(parts)
    n = g.order
    set_of = np.full(n, -1, dtype=np.int64)
    for i, b in enumerate(basic):
        for x in b:
            if not 0 <= x < n:
                raise NotPartition(f"element {x} out of range")
            if set_of[x] >= 0:
                raise NotPartition(f"element {x} lies in two parts", {"element": x})
            set_of[x] = i
    missing = np.flatnonzero(set_of < 0)
    if missing.size:
        raise NotPartition(f"elements {missing.tolist()} are not covered", {"missing": missing.tolist()})
    if basic[0] != frozenset({0}):
        raise S1Violation("{e} is not a basic set", {"part": sorted(basic[set_of[0]])})
    for i, b in enumerate(basic):
        image = frozenset(int(g.inv[x]) for x in b)
        j = int(set_of[min(image)])
        if basic[j] != image:
            raise S2Violation(
                f"inverse of basic set {i} is not a basic set",
                {"X": sorted(b), "X_inverse": sorted(image)},
            )
    r = len(basic)
    members = [np.fromiter(sorted(b), dtype=np.int64) for b in basic]
    reps = [int(m[0]) for m in members]
    constants = np.zeros((r, r, r), dtype=np.int64)
    for i, j in itertools.product(range(r), repeat=2):
        prod = _product_counts(g, members[i], members[j])
        for k in range(r):
            vals = prod[members[k]]
            bad = np.flatnonzero(vals != vals[0])
            if bad.size:
                y, z = int(members[k][0]), int(members[k][bad[0]])
                raise S3Violation(
                    f"product of basic sets {i} and {j} is not constant on basic set {k}",
                    {"X": sorted(basic[i]), "Y": sorted(basic[j]), "Z": sorted(basic[k]),
                     "elements": [y, z], "coefficients": [int(prod[y]), int(prod[z])]},
                )
            constants[i, j, k] = prod[reps[k]]
    constants.setflags(write=False)
    set_of.setflags(write=False)
    return SRing(g, basic, set_of, constants)


def class_algebra(g: Group) -> SRing:
    return from_partition(g, g.conjugacy.classes)


def trivial_sring(g: Group) -> SRing:
    rest = [x for x in range(1, g.order)]
    return from_partition(g, [[0], rest] if rest else [[0]])


def structure_constants(a: SRing) -> np.ndarray:
    """Tensor ``c[X, Y, Z]``: coefficient of ``Z`` in ``X * Y`` (basic-set indices)."""
    return a.constants


def is_A_set(a: SRing, xs: Iterable[int]) -> bool:
    s = frozenset(xs)
    return all(a.basic_sets[a.set_of[x]] <= s for x in s)


@dataclass(frozen=True)
class ASubgroupLattice:
    members: tuple[frozenset, ...]
    join: np.ndarray
    meet: np.ndarray

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, h) -> bool:
        return frozenset(h) in self.members


def a_subgroups(a: SRing) -> ASubgroupLattice:
    g = a.group
    seeds = [generated_subgroup(g, b).members for b in a.basic_sets[1:]]
    members = tuple(join_closure(g, seeds))
    index = {m: i for i, m in enumerate(members)}
    k = len(members)
    join = np.zeros((k, k), dtype=np.int64)
    meet = np.zeros((k, k), dtype=np.int64)
    for i, j in itertools.product(range(k), repeat=2):
        u = members[i] | members[j]
        join[i, j] = index[u] if u in index else index[generated_subgroup(g, u).members]
        meet[i, j] = index[members[i] & members[j]]
    return ASubgroupLattice(members, join, meet)


def is_primitive(a: SRing) -> bool:
    g = a.group
    return all(len(generated_subgroup(g, b)) == g.order for b in a.basic_sets[1:])


def radical_of_basic(a: SRing, xs: Iterable[int]) -> Subgroup:
    s = frozenset(xs)
    a.index_of(s)
    rad = radical(a.group, s)
    if not is_A_set(a, rad.members):
        raise AssertionError("radical of a basic set is not an A-set")
    return rad


def is_fusion_of(a: SRing, b: SRing) -> bool:
    """True iff every basic set of ``a`` is a union of basic sets of ``b``."""
    if a.group is not b.group:
        raise ValueError("S-rings over different groups")
    return all(is_A_set(b, x) for x in a.basic_sets)


def is_proper_central(a: SRing) -> bool:
    if not a.is_central:
        raise ValueError("S-ring is not central")
    return a.rank > 2 and a.rank != len(a.group.conjugacy)


# --------------------------------------------------------------------------
# enumeration


def class_constants(g: Group) -> np.ndarray:
    """Class-algebra constants ``a[i, j, k]``: coefficient of class ``k`` in ``K_i K_j``."""
    cls = g.conjugacy
    r = len(cls)
    cof = cls.class_of
    out = np.zeros((r, r, r), dtype=np.int64)
    xs = np.arange(g.order)
    for k, c in enumerate(cls.classes):
        z = min(c)
        js = cof[g.mult[g.inv[xs], z]]  # x^-1 z must lie in K_j
        np.add.at(out[:, :, k], (cof, js), 1)
    return out


def enumerate_central_srings(g: Group, max_classes: int = 14, max_results: int = 10**6) -> list[SRing]:
    """All central S-rings over ``g``, sorted by rank then canonical form."""
    return [from_partition(g, p) for p in enumerate_central_partitions(g, max_classes, max_results)]


def enumerate_central_partitions(g: Group, max_classes: int = 14, max_results: int = 10**6) -> list[list[frozenset]]:
    """Element-level partitions of every central S-ring over ``g``.

    Depth-first search over blocks of conjugacy classes. Adding a block also
    adds its inverse block. The products of finished blocks must be constant
    on every finished block, and they split the remaining classes into
    colours that later blocks may not cross.
    """
    cls = g.conjugacy
    r = len(cls)
    if r > max_classes:
        raise ClassCountExceeded(f"{r} conjugacy classes exceed the cap of {max_classes}")
    a = class_constants(g)
    inv_class = [int(cls.class_of[g.inv[min(c)]]) for c in cls.classes]
    found: set[tuple] = set()

    def row_sum(block):
        return a[list(block)].sum(axis=0)  # r x r: sum over i in block of a[i]

    def dfs(blocks, rows, colour, free):
        if not free:
            found.add(tuple(sorted(tuple(sorted(b)) for b in blocks)))
            if len(found) > max_results:
                raise ResultLimitExceeded(f"more than {max_results} central S-rings")
            return
        k = free[0]
        same = [i for i in free[1:] if colour[i] == colour[k]]
        for extra in _subsets(same):
            block = frozenset((k,) + extra)
            new = [block]
            inv_block = frozenset(inv_class[i] for i in block)
            if inv_block != block:
                if inv_block & block or not inv_block <= set(free):
                    continue
                new.append(inv_block)
            res = _extend(new, blocks, rows, colour, free)
            if res is not None:
                dfs(*res)

    def _extend(new, blocks, rows, colour, free):
        blocks = blocks + new
        rows = rows + [row_sum(b) for b in new]
        left = [i for i in free if not any(i in b for b in new)]
        colour = dict(colour)
        m = len(blocks)
        for bi in range(m - len(new), m):
            for yi in range(m):
                v = rows[bi][list(blocks[yi])].sum(axis=0)
                for z in blocks:
                    zl = list(z)
                    if (v[zl] != v[zl[0]]).any():
                        return None
                for i in left:
                    colour[i] = colour[i] + (int(v[i]),)
        return blocks, rows, colour, left

    start = [frozenset({0})]
    free = list(range(1, r))
    init = _extend(start, [], [], {i: () for i in free}, free)
    dfs(*init)

    out = []
    for key in found:
        out.append([frozenset().union(*(cls.classes[i] for i in b)) for b in key])
    out.sort(key=lambda p: (len(p), _canonical_key(p)))
    return out


def _canonical_key(parts) -> tuple:
    return tuple(tuple(sorted(b)) for b in _canonical(parts))


def _subsets(items: Sequence[int]):
    for size in range(len(items) + 1):
        yield from itertools.combinations(items, size)
