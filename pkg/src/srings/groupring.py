"""Exact arithmetic in the integral group ring ZG."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

import numpy as np

from .groups import Group


class GroupRingError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    """Integer combination of group elements, stored densely.

    Coefficients are Python ints so powers of large set sums stay exact.
    """

    group: Group
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise GroupRingError("coefficient vector length must equal the group order")

    @classmethod
    def from_array(cls, group: Group, arr) -> "GroupRingElement":
        return cls(group, tuple(int(a) for a in arr))

    @classmethod
    def zero(cls, group: Group) -> "GroupRingElement":
        return cls(group, (0,) * group.order)

    @classmethod
    def identity(cls, group: Group) -> "GroupRingElement":
        return basis(group, 0)

    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)

    def __getitem__(self, x: int) -> int:
        return self.coeffs[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return other.group is self.group and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((id(self.group), self.coeffs))

    def _check(self, other: "GroupRingElement") -> None:
        if other.group is not self.group:
            raise GroupRingError("operands live in different group rings")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> "GroupRingElement":
        return GroupRingElement(self.group, tuple(k * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            return ring_mul(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "GroupRingElement":
        return ring_pow(self, k)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_document(self) -> dict:
        return {"coeffs": {str(i): str(a) for i, a in enumerate(self.coeffs) if a}}

    @classmethod
    def from_document(cls, group: Group, doc: Mapping) -> "GroupRingElement":
        coeffs = [0] * group.order
        for k, v in doc["coeffs"].items():
            i = int(k)
            if not 0 <= i < group.order:
                raise GroupRingError(f"element index {i} out of range")
            coeffs[i] = int(v)
        return cls(group, tuple(coeffs))

    def __repr__(self) -> str:
        terms = [f"{a}*{self.group.label(i)}" for i, a in enumerate(self.coeffs) if a]
        return " + ".join(terms) or "0"


def basis(group: Group, x: int) -> GroupRingElement:
    c = [0] * group.order
    c[x] = 1
    return GroupRingElement(group, tuple(c))


def set_sum(group: Group, xs: Iterable[int]) -> GroupRingElement:
    c = [0] * group.order
    for x in xs:
        c[x] = 1
    return GroupRingElement(group, tuple(c))


def ring_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    a._check(b)
    g = a.group
    bv = b.array()
    out = np.zeros(g.order, dtype=object)
    for x, ax in enumerate(a.coeffs):
        if ax:
            # row x of the table is a permutation, so fancy-index += is safe
            out[g.mult[x]] += ax * bv
    return GroupRingElement(g, tuple(int(v) for v in out))


def ring_pow(a: GroupRingElement, k: int) -> GroupRingElement:
    if k < 1:
        raise GroupRingError("exponent must be positive")
    result: Optional[GroupRingElement] = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else ring_mul(result, base)
        k >>= 1
        if k:
            base = ring_mul(base, base)
    return result


class CoeffTransform:
    """A total integer function applied to every coefficient.

    Use the constructors :meth:`support_indicator`, :meth:`mod` or
    :meth:`table`; a table transform leaves unlisted values unchanged
    unless ``default`` is given.
    """

    def __init__(self, fn: Callable[[int], int], name: str):
        self.fn = fn
        self.name = name

    def __call__(self, a: int) -> int:
        return int(self.fn(a))

    def __repr__(self) -> str:
        return f"CoeffTransform({self.name})"

    @classmethod
    def support_indicator(cls) -> "CoeffTransform":
        return cls(lambda a: 1 if a else 0, "support")

    @classmethod
    def mod(cls, p: int) -> "CoeffTransform":
        if p < 1:
            raise GroupRingError("modulus must be positive")
        return cls(lambda a: a % p, f"mod {p}")

    @classmethod
    def table(cls, values: Mapping[int, int], default: Optional[int] = None) -> "CoeffTransform":
        values = dict(values)

        def fn(a):
            if a in values:
                return values[a]
            if default is None:
                return a
            return default

        return cls(fn, "table")


def coeff_transform(f: CoeffTransform, xi: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(xi.group, tuple(f(a) for a in xi.coeffs))


def support(xi: GroupRingElement) -> frozenset:
    return frozenset(i for i, a in enumerate(xi.coeffs) if a)


def power_map_set(group: Group, xs: Iterable[int], m: int) -> frozenset:
    pm = group.power_map(m)
    return frozenset(int(pm[x]) for x in xs)


def power_sum(group: Group, xs: Iterable[int], m: int) -> GroupRingElement:
    """``sum of x^m over x in X``, counted with multiplicity."""
    pm = group.power_map(m)
    c = [0] * group.order
    for x in xs:
        c[int(pm[x])] += 1
    return GroupRingElement(group, tuple(c))


def is_central(xi: GroupRingElement) -> bool:
    cls = xi.group.conjugacy
    return all(len({xi.coeffs[y] for y in c}) == 1 for c in cls.classes)


def class_coefficients(xi: GroupRingElement) -> list[int]:
    """Coefficients of a central element in the basis of class sums."""
    if not is_central(xi):
        raise GroupRingError("element is not constant on conjugacy classes")
    return [xi.coeffs[min(c)] for c in xi.group.conjugacy.classes]


def sigma_m(group: Group, xi: GroupRingElement, m: int) -> GroupRingElement:
    """Image of a central element under the linear map induced by ``x -> x^m`` on classes."""
    if math.gcd(m, group.order) != 1:
        raise GroupRingError(f"m={m} is not coprime to |G|={group.order}")
    if xi.group is not group:
        raise GroupRingError("element belongs to a different group")
    if not is_central(xi):
        raise GroupRingError("sigma_m is defined on central elements only")
    pm = group.power_map(m)
    out = [0] * group.order
    # x -> x^m is a bijection carrying classes onto classes
    for x, a in enumerate(xi.coeffs):
        out[int(pm[x])] = a
    return GroupRingElement(group, tuple(out))
