"""Finite groups stored as full multiplication tables.

Elements are the integers ``0..n-1`` and the identity is always ``0``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

DEFAULT_SIZE_CAP = 512
_FULL_ASSOC_LIMIT = 512
_SAMPLED_TRIPLES = 10_000

ElementSet = frozenset


class GroupError(ValueError):
    """Raised when a group cannot be built or a table fails validation."""


@dataclass(frozen=True)
class ConjClassTable:
    classes: tuple[frozenset, ...]
    class_of: np.ndarray

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


@dataclass(frozen=True)
class Subgroup:
    members: frozenset
    is_normal: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by its Cayley table.

    ``mult[x, y]`` is the index of ``x*y``; ``inv[x]`` the index of ``x**-1``.
    Instances are immutable; derived tables are cached on first use.
    """

    mult: np.ndarray
    inv: np.ndarray
    names: Optional[tuple[str, ...]] = None
    family: Optional[str] = None
    identity: int = field(default=0, init=False)

    @property
    def order(self) -> int:
        return int(self.mult.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.family or 'table'}, order={self.order})"

    def label(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def mul(self, x: int, y: int) -> int:
        return int(self.mult[x, y])

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([len(c) for c in self._cycles], dtype=np.int64)

    @cached_property
    def _cycles(self) -> list[np.ndarray]:
        # _cycles[x] = [e, x, x^2, ..., x^(k-1)] with k = order(x)
        out = []
        for x in range(self.order):
            seq = [0]
            y = x
            while y != 0:
                seq.append(y)
                y = int(self.mult[y, x])
            out.append(np.array(seq, dtype=np.int64))
        return out

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(k) for k in self.element_orders))

    def power(self, x: int, m: int) -> int:
        cyc = self._cycles[x]
        return int(cyc[m % len(cyc)])

    def power_map(self, m: int) -> np.ndarray:
        """Array ``a`` with ``a[x] = x**m`` for every element ``x``."""
        return np.array([c[m % len(c)] for c in self._cycles], dtype=np.int64)

    @cached_property
    def conjugacy(self) -> ConjClassTable:
        return _conjugacy_classes(self)

    def to_document(self) -> dict:
        doc = {"order": self.order, "table": self.mult.tolist()}
        if self.names:
            doc["names"] = list(self.names)
        if self.family:
            doc["family"] = self.family
        return doc


# --------------------------------------------------------------------------
# validation


def _validate_table(mult: np.ndarray, *, seed: int = 0) -> np.ndarray:
    if mult.ndim != 2 or mult.shape[0] != mult.shape[1] or mult.shape[0] == 0:
        raise GroupError("multiplication table must be a nonempty square")
    n = mult.shape[0]
    if mult.min() < 0 or mult.max() >= n:
        raise GroupError("table entries out of range")
    ref = np.arange(n)
    if not (np.sort(mult, axis=1) == ref).all() or not (np.sort(mult, axis=0) == ref[:, None]).all():
        raise GroupError("table is not a Latin square")
    if not (np.array_equal(mult[0], ref) and np.array_equal(mult[:, 0], ref)):
        raise GroupError("element 0 is not a two-sided identity")
    if n <= _FULL_ASSOC_LIMIT:
        for x in range(n):
            # (x y) z  vs  x (y z), for all y, z at once
            if not np.array_equal(mult[mult[x]], mult[x][mult]):
                raise GroupError(f"associativity fails for x={x}")
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, n, size=(3, _SAMPLED_TRIPLES))
        if not np.array_equal(mult[mult[x, y], z], mult[x, mult[y, z]]):
            raise GroupError("associativity fails on a sampled triple")
    inv = np.argmin(mult, axis=1)  # position of the 0 entry in each row
    if not (mult[ref, inv] == 0).all():
        raise GroupError("missing inverses")
    return inv.astype(np.int64)


def _make(mult, names=None, family=None) -> Group:
    mult = np.asarray(mult, dtype=np.int64)
    inv = _validate_table(mult)
    mult.setflags(write=False)
    inv.setflags(write=False)
    return Group(mult, inv, tuple(names) if names is not None else None, family)


def _check_cap(n: int, size_cap: int) -> None:
    if n > size_cap:
        raise GroupError(f"group order {n} exceeds size cap {size_cap}")


def _from_product_rule(elems: Sequence, rule, names=None, family=None, size_cap=DEFAULT_SIZE_CAP) -> Group:
    """Tabulate ``rule`` over ``elems``; ``elems[0]`` must be the identity."""
    _check_cap(len(elems), size_cap)
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    mult = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            mult[i, j] = index[rule(a, b)]
    return _make(mult, names, family)


# --------------------------------------------------------------------------
# builders


def build_cyclic(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    _check_cap(n, size_cap)
    k = np.arange(n)
    return _make((k[:, None] + k[None, :]) % n, [str(i) for i in range(n)], f"cyclic({n})")


def build_dihedral(two_n: int, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    """Dihedral group of order ``two_n``; element ``j*m + k`` is ``r^k s^j``."""
    if two_n < 2 or two_n % 2:
        raise GroupError("dihedral order must be a positive even integer")
    _check_cap(two_n, size_cap)
    m = two_n // 2
    elems = [(k, j) for j in range(2) for k in range(m)]

    def rule(a, b):
        (k, j), (l, i) = a, b
        return ((k + (l if j == 0 else -l)) % m, (j + i) % 2)

    names = [(f"r^{k}" if k else "e") + ("s" if j else "") for k, j in elems]
    return _from_product_rule(elems, rule, names, f"dihedral({two_n})")


def build_dicyclic(m: int, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    """Dicyclic group of order ``4m``: ``<a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>``.

    ``m = 2`` gives the quaternion group Q8.
    """
    if m < 1:
        raise GroupError("dicyclic parameter must be positive")
    _check_cap(4 * m, size_cap)
    two_m = 2 * m
    elems = [(k, j) for j in range(2) for k in range(two_m)]

    def rule(a, b):
        (k, j), (l, i) = a, b
        k2 = (k + (l if j == 0 else -l)) % two_m
        if j + i == 2:
            return ((k2 + m) % two_m, 0)
        return (k2, j + i)

    names = [f"a^{k}" + ("x" if j else "") for k, j in elems]
    family = "quaternion(8)" if m == 2 else f"dicyclic({4 * m})"
    return _from_product_rule(elems, rule, names, family)


def build_quaternion() -> Group:
    return build_dicyclic(2)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def build_extraspecial(p: int, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    """Heisenberg group of upper unitriangular 3x3 matrices over GF(p).

    Element ``(a, b, c)`` is the matrix with superdiagonal ``a, b`` and
    corner ``c``; ``(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')``.
    """
    if not _is_prime(p) or p == 2:
        raise GroupError("extraspecial builder needs an odd prime")
    elems = list(itertools.product(range(p), repeat=3))

    def rule(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    names = ["(%d,%d,%d)" % e for e in elems]
    return _from_product_rule(elems, rule, names, f"extraspecial({p}^3)", size_cap)


def build_frobenius(p: int, q: int, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    """Semidirect product Z_p x| Z_q, the generator of Z_q acting by an order-q unit."""
    if not _is_prime(p):
        raise GroupError(f"{p} is not prime")
    if q <= 1 or (p - 1) % q:
        raise GroupError(f"q={q} must be > 1 and divide p-1={p - 1}")
    r = next(u for u in range(2, p) if pow(u, q, p) == 1 and all(pow(u, d, p) != 1 for d in range(1, q)))
    elems = [(x, y) for y in range(q) for x in range(p)]

    def rule(a, b):
        (x, y), (x2, y2) = a, b
        return ((x + pow(r, y, p) * x2) % p, (y + y2) % q)

    names = [f"({x},{y})" for x, y in elems]
    return _from_product_rule(elems, rule, names, f"frobenius({p},{q})", size_cap)


def _compose(a: tuple, b: tuple) -> tuple:
    # apply a first, then b (left-to-right, as in cycle notation products)
    return tuple(b[i] for i in a)


def _closure(gens: Sequence[tuple], degree: int, size_cap: int) -> list[tuple]:
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = _compose(g, s)
            if h not in seen:
                seen.add(h)
                if len(seen) > size_cap:
                    raise GroupError(f"permutation group exceeds size cap {size_cap}")
                queue.append(h)
    return sorted(seen)  # identity is lexicographically first


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse ``"(1 2 3)(4 5)"`` (commas also accepted) into 1-based cycles."""
    text = text.strip()
    if not text or text == "()":
        return []
    if _CYCLE_RE.sub("", text).strip():
        raise GroupError(f"malformed permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if any(p < 1 for p in pts) or len(set(pts)) != len(pts):
            raise GroupError(f"malformed cycle ({body})")
        cycles.append(pts)
    return cycles


def _cycles_to_perm(cycles: list[list[int]], degree: int) -> tuple:
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def perm_to_cycles(perm: Sequence[int]) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def from_permutation_generators(gens: Iterable, size_cap: int = DEFAULT_SIZE_CAP, family: Optional[str] = None) -> Group:
    """Group generated by permutations given as cycle strings or image tuples."""
    gens = list(gens)
    parsed = []
    degree = 1
    for g in gens:
        if isinstance(g, str):
            cyc = parse_cycles(g)
            parsed.append(cyc)
            degree = max([degree] + [max(c) for c in cyc])
        else:
            parsed.append(tuple(int(i) for i in g))
            degree = max(degree, len(parsed[-1]))
    perms = []
    for g in parsed:
        if isinstance(g, tuple):
            if sorted(g) != list(range(len(g))):
                raise GroupError(f"not a permutation: {g}")
            perms.append(g + tuple(range(len(g), degree)))
        else:
            perms.append(_cycles_to_perm(g, degree))
    elems = _closure(perms, degree, size_cap)
    names = [perm_to_cycles(e) for e in elems]
    return _from_product_rule(elems, _compose, names, family or "permutation", size_cap)


def build_symmetric(k: int) -> Group:
    if k < 1 or k > 6:
        raise GroupError("symmetric groups are limited to degree <= 6")
    gens = [] if k == 1 else ["(1 2)", "(" + " ".join(map(str, range(1, k + 1))) + ")"]
    if k == 2:
        gens = ["(1 2)"]
    return from_permutation_generators(gens, size_cap=720, family=f"symmetric({k})")


def build_alternating(k: int) -> Group:
    if k < 1 or k > 6:
        raise GroupError("alternating groups are limited to degree <= 6")
    gens = [f"(1 2 {i})" for i in range(3, k + 1)]
    return from_permutation_generators(gens, size_cap=720, family=f"alternating({k})")


def build_psl27() -> Group:
    """PSL(2,7) as a transitive group of degree 7 (order 168)."""
    return from_permutation_generators(["(1 2 3 4 5 6 7)", "(2 3)(4 7)"], family="psl(2,7)")


def direct_product(g1: Group, g2: Group, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    """Componentwise product; element ``a*|G2| + b`` is the pair ``(a, b)``."""
    n1, n2 = g1.order, g2.order
    _check_cap(n1 * n2, size_cap)
    m1 = np.repeat(np.repeat(g1.mult, n2, axis=0), n2, axis=1)
    m2 = np.tile(g2.mult, (n1, n1))
    mult = m1 * n2 + m2
    names = [f"({g1.label(a)},{g2.label(b)})" for a in range(n1) for b in range(n2)]
    fam = f"{g1.family or 'G'} x {g2.family or 'G'}"
    return _make(mult, names, fam)


def from_cayley_table(data: dict, size_cap: int = DEFAULT_SIZE_CAP) -> Group:
    """Build a group from ``{"order": n, "table": [[int]], "names"?, "family"?}``."""
    try:
        table = data["table"]
        order = int(data.get("order", len(table)))
    except (KeyError, TypeError) as exc:
        raise GroupError(f"malformed group document: {exc}") from None
    if len(table) != order or any(len(row) != order for row in table):
        raise GroupError("table shape does not match order")
    _check_cap(order, size_cap)
    names = data.get("names")
    if names is not None and len(names) != order:
        raise GroupError("names length does not match order")
    return _make(table, names, data.get("family"))


# --------------------------------------------------------------------------
# structure


def element_order(g: Group, x: int) -> int:
    return int(g.element_orders[x])


def _conjugacy_classes(g: Group) -> ConjClassTable:
    n = g.order
    # conj[h, x] = h^-1 x h
    conj = np.empty((n, n), dtype=np.int64)
    for h in range(n):
        conj[h] = g.mult[g.inv[h]][g.mult[:, h]]
    class_of = np.full(n, -1, dtype=np.int64)
    raw = []
    for x in range(n):
        if class_of[x] < 0:
            members = frozenset(int(y) for y in np.unique(conj[:, x]))
            for y in members:
                class_of[y] = len(raw)
            raw.append(members)
    order = sorted(range(len(raw)), key=lambda i: (len(raw[i]), min(raw[i])))
    classes = tuple(raw[i] for i in order)
    for idx, c in enumerate(classes):
        for y in c:
            class_of[y] = idx
    class_of.setflags(write=False)
    return ConjClassTable(classes, class_of)


def conjugacy_classes(g: Group) -> ConjClassTable:
    return g.conjugacy


def is_normal_set(g: Group, members: Iterable[int]) -> bool:
    s = frozenset(members)
    cls = g.conjugacy
    return all(cls.classes[cls.class_of[x]] <= s for x in s)


def _subgroup(g: Group, members: frozenset) -> Subgroup:
    return Subgroup(members, is_normal_set(g, members))


def generated_subgroup(g: Group, xs: Iterable[int]) -> Subgroup:
    gens = sorted({int(x) for x in xs} - {0})
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for y in frontier:
            for s in gens:
                z = int(g.mult[y, s])
                if z not in members:
                    members.add(z)
                    nxt.append(z)
        frontier = nxt
    return _subgroup(g, frozenset(members))


def radical(g: Group, xs: Iterable[int]) -> Subgroup:
    """Two-sided stabilizer ``{h : hX = Xh = X}`` of a nonempty set."""
    x = frozenset(int(v) for v in xs)
    if not x:
        raise GroupError("radical of the empty set is undefined")
    xa = np.fromiter(sorted(x), dtype=np.int64)
    members = frozenset(
        h for h in range(g.order)
        if frozenset(g.mult[h, xa].tolist()) == x and frozenset(g.mult[xa, h].tolist()) == x
    )
    return _subgroup(g, members)


def is_normal(g: Group, h: Subgroup | Iterable[int]) -> bool:
    return is_normal_set(g, h.members if isinstance(h, Subgroup) else h)


def center(g: Group) -> Subgroup:
    return centralizer(g, range(g.order))


def centralizer(g: Group, s: Iterable[int]) -> Subgroup:
    sa = np.fromiter(sorted({int(v) for v in s}), dtype=np.int64)
    members = frozenset(h for h in range(g.order) if np.array_equal(g.mult[h, sa], g.mult[sa, h]))
    return _subgroup(g, members)


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def normal_sylow_subgroup(g: Group, p: int) -> Optional[Subgroup]:
    """The normal Sylow ``p``-subgroup, or ``None`` if Sylow ``p``-subgroups are not normal."""
    n = g.order
    if not _is_prime(p) or n % p:
        raise GroupError(f"{p} is not a prime divisor of {n}")
    full = 1
    while n % (full * p) == 0:
        full *= p
    members = frozenset(x for x in range(n) if full % int(g.element_orders[x]) == 0)
    if len(members) != full:
        return None
    # a set of exactly |P| elements of p-power order closed under products is the normal Sylow
    ma = np.fromiter(sorted(members), dtype=np.int64)
    if not set(g.mult[np.ix_(ma, ma)].ravel().tolist()) <= members:
        return None
    return Subgroup(members, True)


def is_cyclic(g: Group, h: Subgroup) -> bool:
    return any(int(g.element_orders[x]) == len(h) for x in h.members)


def join_closure(g: Group, seeds: Iterable[frozenset]) -> list[frozenset]:
    """Close a family of subgroups (given as member sets) under joins.

    ``{e}`` is always included. Output is sorted by (size, members).
    """
    found = {frozenset({0})} | set(seeds)
    frontier = list(found)
    while frontier:
        nxt = []
        snapshot = list(found)
        for a in frontier:
            for b in snapshot:
                if a <= b or b <= a:
                    continue
                j = generated_subgroup(g, a | b).members
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda m: (len(m), sorted(m)))


def normal_subgroups(g: Group) -> list[Subgroup]:
    """All normal subgroups: joins of the normal closures of single classes."""
    seeds = [generated_subgroup(g, c).members for c in g.conjugacy.classes[1:]]
    return [Subgroup(m, True) for m in join_closure(g, seeds)]


def cyclic_subgroups(g: Group) -> list[Subgroup]:
    seen = {}
    for x in range(g.order):
        m = frozenset(int(v) for v in g._cycles[x])
        seen.setdefault(m, None)
    return [_subgroup(g, m) for m in sorted(seen, key=lambda m: (len(m), sorted(m)))]


def is_simple(g: Group) -> bool:
    return g.order > 1 and len(normal_subgroups(g)) == 2
