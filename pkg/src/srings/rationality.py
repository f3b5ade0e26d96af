"""Multiplier action ``x -> x^m`` on central S-rings, traces, rational
closure, and the spectral character table of a commutative S-ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .groups import Group
from .sring import SRing, from_partition

DEFAULT_TOL = 1e-8
DEFAULT_SEED = 42
_MAX_RETRIES = 8


class GcdNotOne(ValueError):
    pass


class NotCentral(ValueError):
    pass


class NonCommutative(ValueError):
    pass


class DegenerateCombination(RuntimeError):
    pass


class TheoremViolation(AssertionError):
    """A multiplier failed to permute the basic sets of a central S-ring."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


def units(n: int) -> list[int]:
    return [m for m in range(1, max(n, 2)) if math.gcd(m, n) == 1]


@dataclass(frozen=True)
class MultiplierAction:
    group: Group
    m: int
    class_perm: tuple[int, ...]


def multiplier_action(g: Group, m: int) -> MultiplierAction:
    if math.gcd(m, g.order) != 1:
        raise GcdNotOne(f"m={m} is not coprime to {g.order}")
    cls = g.conjugacy
    pm = g.power_map(m)
    perm = tuple(int(cls.class_of[pm[min(c)]]) for c in cls.classes)
    return MultiplierAction(g, m % g.order if g.order > 1 else 0, perm)


def _check_central(a: SRing, m: int) -> None:
    if math.gcd(m, a.group.order) != 1:
        raise GcdNotOne(f"m={m} is not coprime to {a.group.order}")
    if not a.is_central:
        raise NotCentral("S-ring is not central")


def sigma_action(a: SRing, m: int) -> tuple[int, ...]:
    """Permutation of basic-set indices induced by ``X -> X^(m)``."""
    _check_central(a, m)
    pm = a.group.power_map(m)
    perm = []
    for i, b in enumerate(a.basic_sets):
        image = frozenset(int(pm[x]) for x in b)
        j = int(a.set_of[min(image)])
        if a.basic_sets[j] != image:
            raise TheoremViolation(
                f"image of basic set {i} under x -> x^{m} is not a basic set",
                {"m": m, "X": sorted(b), "image": sorted(image)},
            )
        perm.append(j)
    return tuple(perm)


def verify_automorphism(a: SRing, m: int) -> dict:
    """Check ``c[X^(m), Y^(m), Z^(m)] == c[X, Y, Z]`` for every triple."""
    perm = np.array(sigma_action(a, m))
    c = a.constants
    permuted = c[np.ix_(perm, perm, perm)]
    bad = np.argwhere(permuted != c)
    report = {"m": m, "triples": int(c.size), "holds": not bad.size}
    if bad.size:
        x, y, z = (int(v) for v in bad[0])
        report["witness"] = {"X": x, "Y": y, "Z": z, "before": int(c[x, y, z]), "after": int(permuted[x, y, z])}
    return report


def trace_set(g: Group, xs: Iterable[int]) -> frozenset:
    xs = list(xs)
    out: set[int] = set()
    for m in units(g.order):
        pm = g.power_map(m)
        out.update(int(pm[x]) for x in xs)
    return frozenset(out)


@dataclass(frozen=True)
class TraceClosure:
    original: SRing
    orbits: tuple[tuple[int, ...], ...]
    closed: SRing


def rational_closure(a: SRing) -> TraceClosure:
    _check_central(a, 1)
    r = a.rank
    parent = list(range(r))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for m in units(a.group.order):
        for i, j in enumerate(sigma_action(a, m)):
            pi, pj = find(i), find(j)
            if pi != pj:
                parent[max(pi, pj)] = min(pi, pj)
    groups: dict[int, list[int]] = {}
    for i in range(r):
        groups.setdefault(find(i), []).append(i)
    orbits = tuple(sorted(tuple(v) for v in groups.values()))
    parts = [frozenset().union(*(a.basic_sets[i] for i in orb)) for orb in orbits]
    return TraceClosure(a, orbits, from_partition(a.group, parts))


def is_rational(a: SRing) -> bool:
    _check_central(a, 1)
    ident = tuple(range(a.rank))
    return all(sigma_action(a, m) == ident for m in units(a.group.order))


# --------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class CharacterTableA:
    """Rows are the irreducible characters, columns the basic sets.

    ``values[p, X]`` is the value of character ``p`` on the sum of ``X``;
    the ``{e}`` column is all ones.
    """

    sring: SRing
    values: np.ndarray
    residual: float

    @property
    def rank(self) -> int:
        return self.values.shape[0]

    def to_document(self, tol: float = DEFAULT_TOL) -> dict:
        return {
            "rank": self.rank,
            "values": [[{"re": float(v.real), "im": float(v.imag)} for v in row] for row in self.values],
            "residual": float(self.residual),
            "rational": _all_integral(self.values, tol, self.residual),
        }


def multiplication_matrices(a: SRing) -> np.ndarray:
    """``M[X]`` with ``M[X][Z, Y] = c[X, Y, Z]``: left multiplication by ``X``."""
    return a.constants.transpose(0, 2, 1).astype(float)


def central_characters(a: SRing, seed: int = DEFAULT_SEED) -> CharacterTableA:
    if not a.is_commutative:
        raise NonCommutative("S-ring is not commutative")
    mats = multiplication_matrices(a)
    r = a.rank
    rng = np.random.default_rng(seed)
    # characters are the common left eigenvectors of the M[X]
    for _ in range(_MAX_RETRIES + 1):
        weights = rng.standard_normal(r)
        combo = np.tensordot(weights, mats, axes=1)
        evals, evecs = np.linalg.eig(combo.T)
        gaps = np.abs(evals[:, None] - evals[None, :])
        np.fill_diagonal(gaps, np.inf)
        if r == 1 or gaps.min() > 1e-6 * max(1.0, np.abs(evals).max()):
            break
    else:
        raise DegenerateCombination("random combinations kept producing repeated eigenvalues")
    vals = (evecs / evecs[0]).T  # row p: values on each basic set, normalised at {e}
    residual = 0.0
    for x in range(r):
        lhs = vals @ mats[x]
        rhs = vals[:, [x]] * vals
        residual = max(residual, float(np.abs(lhs - rhs).max()))
    order = sorted(range(r), key=lambda p: (tuple(np.round(vals[p].real, 9)), tuple(np.round(vals[p].imag, 9))))
    vals = vals[order]
    return CharacterTableA(a, vals, residual)


def _all_integral(values: np.ndarray, tol: float, residual: float) -> bool:
    slack = tol + residual
    return bool((np.abs(values - np.round(values.real)) <= slack).all())


def is_rational_numeric(a: SRing, tol: float = DEFAULT_TOL, seed: int = DEFAULT_SEED) -> bool:
    """Rationality via character values.

    Character values on basic-set sums are algebraic integers, so a value
    is rational exactly when it is an integer.
    """
    table = central_characters(a, seed)
    return _all_integral(table.values, tol, table.residual)


def eigenprojections(table: CharacterTableA) -> np.ndarray:
    """Projections onto the common eigenlines; they sum to the identity."""
    r = table.rank
    # right eigenvectors: columns of the inverse of the left-eigenvector matrix
    left = table.values
    right = np.linalg.inv(left)
    return np.array([np.outer(right[:, p], left[p]) for p in range(r)])


def column_multisets_match(table: CharacterTableA, perm: tuple[int, ...], tol: float = 1e-6) -> bool:
    """Whether column ``X`` and column ``perm[X]`` carry the same multiset of values."""
    v = table.values
    for x, y in enumerate(perm):
        a = _sorted_complex(v[:, x])
        b = _sorted_complex(v[:, y])
        if np.abs(a - b).max() > tol:
            return False
    return True


def _sorted_complex(col: np.ndarray) -> np.ndarray:
    return col[np.lexsort((np.round(col.imag, 6), np.round(col.real, 6)))]
