"""Orbit counting through symmetric functions and class formulas.

Four independent routes compute the number of group orbits of tabloids per
shape (optionally filtered by a character pair): the scalar product of the
generalized cycle index with a complete homogeneous product, a conjugacy
class formula, its unit-character specialization over cycle types, Ruch's
double-coset formula, and definitional brute force.  All arithmetic is
exact: rationals throughout, sums of roots of unity reduced against
cyclotomic polynomials, so every integrality assertion is sharp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .orbits import is_character_orbit, orbit_space
from .partitions import (
    Partition,
    all_partitions,
    centralizer_order,
    dominance_leq,
)
from .perms import LinearCharacter, PermGroup, sign_product_character

__all__ = [
    "CountReport",
    "PowerSumPoly",
    "RootOfUnitySum",
    "build_report",
    "combinatorially_equivalent",
    "complete_homogeneous",
    "count_brute",
    "count_classes",
    "count_ruch",
    "count_scalar",
    "count_types",
    "cycle_index",
    "monotonicity_check",
    "scalar_product",
]

BRUTE_FORCE_DEGREE_CAP = 10


# -- exact root-of-unity sums -------------------------------------------------

@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    # divide x^n - 1 by the cyclotomic polynomials of all proper divisors
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d:
            continue
        div = [Fraction(c) for c in _cyclotomic(d)]
        poly = _polydiv_exact(poly, div)
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


def _polydiv_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        out[k] = c
        for i, dc in enumerate(den):
            num[k + i] -= c * dc
    assert all(c == 0 for c in num[: len(den) - 1])
    return out


class RootOfUnitySum:
    """An exact element of the n-th cyclotomic field.

    Stored as rational coefficients over exponents of a primitive n-th root
    of unity; rationality tests reduce against the cyclotomic polynomial.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: dict[int, Fraction]):
        self.order = order
        self.coeffs = {e % order: c for e, c in coeffs.items() if c != 0}

    @classmethod
    def root(cls, exponent: int, order: int) -> "RootOfUnitySum":
        return cls(order, {exponent % order: Fraction(1)})

    @classmethod
    def of(cls, value) -> "RootOfUnitySum":
        if isinstance(value, RootOfUnitySum):
            return value
        return cls(1, {0: Fraction(value)})

    def _lift(self, order: int) -> dict[int, Fraction]:
        step = order // self.order
        return {e * step: c for e, c in self.coeffs.items()}

    def __add__(self, other):
        other = RootOfUnitySum.of(other)
        n = math.lcm(self.order, other.order)
        coeffs = self._lift(n)
        for e, c in other._lift(n).items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + c
        return RootOfUnitySum(n, coeffs)

    __radd__ = __add__

    def __mul__(self, other):
        other = RootOfUnitySum.of(other)
        n = math.lcm(self.order, other.order)
        a, b = self._lift(n), other._lift(n)
        coeffs: dict[int, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = (ea + eb) % n
                coeffs[e] = coeffs.get(e, Fraction(0)) + ca * cb
        return RootOfUnitySum(n, coeffs)

    __rmul__ = __mul__

    def conjugate(self) -> "RootOfUnitySum":
        return RootOfUnitySum(self.order, {(-e) % self.order: c for e, c in self.coeffs.items()})

    def _reduced(self) -> list[Fraction]:
        phi = _cyclotomic(self.order) if self.order > 1 else (Fraction(-1), Fraction(1))
        deg = len(phi) - 1
        rem = [Fraction(0)] * self.order
        for e, c in self.coeffs.items():
            rem[e] += c
        for k in range(len(rem) - 1, deg - 1, -1):
            c = rem[k] / phi[-1]
            if c:
                for i, pc in enumerate(phi):
                    rem[k - deg + i] -= c * pc
        return rem[:deg] if deg else [Fraction(0)]

    def as_fraction(self) -> Fraction | None:
        """The rational value, or None when the sum is irrational."""
        red = self._reduced()
        if any(c != 0 for c in red[1:]):
            return None
        return red[0] if red else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, (RootOfUnitySum, Fraction, int)):
            return NotImplemented
        diff = self + (RootOfUnitySum.of(other) * -1)
        return all(c == 0 for c in diff._reduced())

    def __repr__(self):
        if (f := self.as_fraction()) is not None:
            return f"RootOfUnitySum.of({f})"
        terms = ", ".join(f"{e}: {c}" for e, c in sorted(self.coeffs.items()))
        return f"RootOfUnitySum({self.order}, {{{terms}}})"


def _char_value(chi: LinearCharacter, perm):
    """chi's value as Fraction (orders 1, 2) or RootOfUnitySum."""
    e = chi.exponent(perm) % chi.order
    if chi.order <= 2:
        return Fraction(-1) if e else Fraction(1)
    return RootOfUnitySum.root(e, chi.order)


def _exactify(value) -> Fraction:
    """Collapse to a Fraction, failing loudly if irrational."""
    if isinstance(value, RootOfUnitySum):
        f = value.as_fraction()
        if f is None:
            raise ArithmeticError(f"value is not rational: {value!r}")
        return f
    return Fraction(value)


def _as_count(value) -> int:
    f = _exactify(value)
    if f.denominator != 1 or f < 0:
        raise ArithmeticError(f"expected a non-negative integer, got {f}")
    return int(f)


# -- power-sum polynomials ----------------------------------------------------

class PowerSumPoly:
    """A sparse polynomial in the power-sum basis, keyed by cycle type.

    Keys are trimmed partition tuples; a key of weight d stands for the
    product of power sums over its parts.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict[tuple[int, ...], Fraction | RootOfUnitySum]):
        self.degree = degree
        self.coeffs = {k: v for k, v in coeffs.items() if not _is_zero(v)}

    def coefficient(self, key: Sequence[int]):
        return self.coeffs.get(tuple(sorted((k for k in key if k), reverse=True)), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, PowerSumPoly) or self.degree != other.degree:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(_is_zero(self.coeffs.get(k, 0) + other.coeffs.get(k, 0) * Fraction(-1)) for k in keys)

    def __repr__(self):
        terms = " + ".join(f"({v})p_{list(k)}" for k, v in sorted(self.coeffs.items()))
        return f"PowerSumPoly<{terms or '0'}>"


def _is_zero(v) -> bool:
    if isinstance(v, RootOfUnitySum):
        return v.as_fraction() == 0 if v.as_fraction() is not None else False
    return v == 0


def cycle_index(group: PermGroup, chi: LinearCharacter | None = None) -> PowerSumPoly:
    """Character-weighted average of power-sum monomials over the group."""
    if chi is not None and chi.group != group:
        raise ValueError("character does not live on this group")
    inv = Fraction(1, group.order)
    if chi is None or chi.order == 1:
        return PowerSumPoly(group.degree, {k: v * inv for k, v in group.cycle_type_census().items()})
    coeffs: dict[tuple[int, ...], Fraction | RootOfUnitySum] = {}
    for g in group.elements:
        key = g.cycle_type().trimmed()
        coeffs[key] = coeffs.get(key, Fraction(0)) + _char_value(chi, g)
    return PowerSumPoly(group.degree, {k: v * inv for k, v in coeffs.items()})


@lru_cache(maxsize=None)
def _h_single(n: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """The n-th complete homogeneous function in the power-sum basis."""
    return tuple(
        (alpha.trimmed(), Fraction(1, centralizer_order(alpha))) for alpha in all_partitions(n)
    ) if n else ((tuple(), Fraction(1)),)


@lru_cache(maxsize=None)
def complete_homogeneous(lam: Partition) -> PowerSumPoly:
    """Product of complete homogeneous functions over the parts of lam."""
    coeffs: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    for part in lam.trimmed():
        nxt: dict[tuple[int, ...], Fraction] = {}
        for key, c in coeffs.items():
            for hkey, hc in _h_single(part):
                merged = tuple(sorted(key + hkey, reverse=True))
                nxt[merged] = nxt.get(merged, Fraction(0)) + c * hc
        coeffs = nxt
    return PowerSumPoly(lam.d, coeffs)


def scalar_product(f: PowerSumPoly, g: PowerSumPoly):
    """Hall pairing: power sums are orthogonal with norm the centralizer order."""
    if f.degree != g.degree:
        raise ValueError("degree mismatch")
    total: Fraction | RootOfUnitySum = Fraction(0)
    for key, fv in f.coeffs.items():
        gv = g.coeffs.get(key)
        if gv is None:
            continue
        if isinstance(gv, RootOfUnitySum):
            gv = gv.conjugate()
        total = total + fv * gv * centralizer_order(key)
    return total


# -- the four counting routes -------------------------------------------------

@lru_cache(maxsize=None)
def _young_cycle_index(trimmed: tuple[int, ...], mask: tuple[bool, ...], d: int) -> PowerSumPoly:
    theta = sign_product_character(Partition(trimmed, d), mask, d)
    return cycle_index(theta.group, theta)


def count_scalar(
    group: PermGroup,
    chi: LinearCharacter | None,
    lam: Partition,
    theta: LinearCharacter | None = None,
) -> int:
    """Orbit count as a pairing of generalized cycle indices.

    With unit theta the second factor collapses to the complete
    homogeneous product over the shape.
    """
    if theta is None or theta.order == 1:
        other = complete_homogeneous(lam)
    else:
        if theta.factor_mask is None or theta.shape is None:
            raise ValueError("theta must be a sign-product character")
        other = _young_cycle_index(theta.shape.trimmed(), theta.factor_mask, lam.d)
    value = scalar_product(cycle_index(group, chi), other)
    return _as_count(value)


def _split_multiset(parts: tuple[int, ...], targets: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Distinct ways to split the multiset of parts into blocks of given weights."""
    distinct = sorted(set(parts), reverse=True)
    counts = [parts.count(v) for v in distinct]
    t = len(targets)

    def rec(vi: int, loads: tuple[int, ...], blocks: tuple[tuple[int, ...], ...]):
        if vi == len(distinct):
            if loads == targets:
                yield blocks
            return
        v, c = distinct[vi], counts[vi]

        def distribute(bi: int, left: int, loads, blocks):
            if bi == t:
                if left == 0:
                    yield from rec(vi + 1, loads, blocks)
                return
            maxk = min(left, (targets[bi] - loads[bi]) // v)
            for k in range(maxk + 1):
                yield from distribute(
                    bi + 1,
                    left - k,
                    loads[:bi] + (loads[bi] + k * v,) + loads[bi + 1 :],
                    blocks[:bi] + (blocks[bi] + (v,) * k,) + blocks[bi + 1 :],
                )

        yield from distribute(0, c, loads, blocks)

    yield from rec(0, (0,) * t, ((),) * t)


def _sign_of_type(beta: tuple[int, ...], weight: int) -> int:
    return -1 if (weight - len(beta)) % 2 else 1


def count_classes(
    group: PermGroup,
    chi: LinearCharacter | None,
    lam: Partition,
    theta: LinearCharacter | None = None,
) -> int:
    """Orbit count from conjugacy classes and cycle-type splittings.

    theta must be a sign-product character of the Young subgroup of lam
    (None means the unit character).  The leading term handles the
    all-fixed type; every other common cycle type contributes its class
    sums weighted by centralizer ratios and block signs.
    """
    d = group.degree
    if lam.d != d:
        raise ValueError("shape degree differs from group degree")
    blocks = lam.trimmed()
    if theta is None:
        mask: tuple[bool, ...] = (False,) * len(blocks)
    else:
        if theta.factor_mask is None or theta.shape is None or theta.shape.trimmed() != blocks:
            raise ValueError("theta must be a sign-product character on the shape's Young subgroup")
        mask = theta.factor_mask
    total: Fraction | RootOfUnitySum = Fraction(
        math.factorial(d), group.order * math.prod(math.factorial(k) for k in blocks)
    )
    identity_type = (1,) * d
    for census_key, type_count in group.cycle_type_census().items():
        if census_key == identity_type:
            continue
        splits = list(_split_multiset(census_key, blocks))
        if not splits:
            continue
        if chi is None or chi.order == 1:
            class_sum: Fraction | RootOfUnitySum = Fraction(type_count)
        else:
            class_sum = Fraction(0)
            for cls in group.classes:
                if cls.cycle_type.trimmed() == census_key:
                    class_sum = class_sum + _char_value(chi, cls.representative) * len(cls)
        z_alpha = centralizer_order(census_key)
        for split in splits:
            ratio = Fraction(z_alpha, math.prod(centralizer_order(b) for b in split))
            theta_val = 1
            for b, weight, flag in zip(split, blocks, mask):
                if flag:
                    theta_val *= _sign_of_type(b, weight)
            total = total + class_sum * (ratio * theta_val * Fraction(1, group.order))
    return _as_count(total)


def count_types(group: PermGroup, lam: Partition) -> int:
    """Unit-character specialization of the class formula."""
    return count_classes(group, None, lam, None)


def count_ruch(group: PermGroup, lam: Partition) -> int:
    """Double-coset count over cycle types shared with the Young subgroup."""
    d = group.degree
    if lam.d != d:
        raise ValueError("shape degree differs from group degree")
    blocks = lam.trimmed()
    young_order = math.prod(math.factorial(k) for k in blocks)
    census = group.cycle_type_census()
    total = Fraction(0)
    for alpha in all_partitions(d):
        key = alpha.trimmed()
        w_count = census.get(key, 0)
        if not w_count:
            continue
        young_count = 0
        for split in _split_multiset(key, blocks):
            young_count += math.prod(
                math.factorial(weight) // centralizer_order(b) for b, weight in zip(split, blocks)
            )
        if not young_count:
            continue
        class_size = math.factorial(d) // centralizer_order(key)
        total += Fraction(w_count * young_count, class_size)
    total *= Fraction(math.factorial(d), group.order * young_order)
    return _as_count(total)


def count_brute(
    group: PermGroup,
    lam: Partition,
    chi: LinearCharacter | None = None,
    theta: LinearCharacter | None = None,
) -> int:
    """Definitional count: enumerate tabloids, form orbits, filter by characters."""
    if group.degree > BRUTE_FORCE_DEGREE_CAP:
        raise ValueError(f"degree {group.degree} exceeds the brute-force cap")
    space = orbit_space(group, lam)
    if chi is None and theta is None:
        return len(space)
    if chi is None:
        chi = _unit_on(group)
    if theta is None:
        theta = sign_product_character(lam, [False] * len(lam.trimmed()), lam.d)
    return sum(1 for orbit in space if is_character_orbit(orbit, chi, theta))


def _unit_on(group: PermGroup) -> LinearCharacter:
    return LinearCharacter(group, 1, fn=lambda p: 0)


# -- cross-validation and order properties ------------------------------------

@dataclass(frozen=True)
class CountReport:
    """One shape's counts along every applicable route."""

    shape: Partition
    chi_label: str
    theta_label: str
    via_scalar: int
    via_classes: int
    via_types: int | None
    via_ruch: int | None
    via_brute: int

    @property
    def agree(self) -> bool:
        vals = {self.via_scalar, self.via_classes, self.via_brute}
        vals.update(v for v in (self.via_types, self.via_ruch) if v is not None)
        return len(vals) == 1

    def to_json_dict(self) -> dict:
        return {
            "shape": str(self.shape),
            "chi": self.chi_label,
            "theta": self.theta_label,
            "scalar": self.via_scalar,
            "t527": self.via_classes,
            "t529": self.via_types,
            "ruch": self.via_ruch,
            "brute": self.via_brute,
            "agree": self.agree,
        }


def build_report(
    group: PermGroup,
    lam: Partition,
    chi: LinearCharacter | None = None,
    theta: LinearCharacter | None = None,
    chi_label: str = "1",
    theta_label: str = "1",
) -> CountReport:
    """Run every applicable counting route for one shape and compare."""
    unit_case = (chi is None or chi.order == 1) and (theta is None or theta.order == 1)
    return CountReport(
        shape=lam,
        chi_label=chi_label,
        theta_label=theta_label,
        via_scalar=count_scalar(group, chi, lam, theta),
        via_classes=count_classes(group, chi, lam, theta),
        via_types=count_types(group, lam) if unit_case else None,
        via_ruch=count_ruch(group, lam) if unit_case else None,
        via_brute=count_brute(group, lam, chi, theta),
    )


def combinatorially_equivalent(w1: PermGroup, w2: PermGroup) -> bool:
    """Equality of cycle-type censuses; equivalent to equal counts at every shape."""
    if w1.degree != w2.degree:
        raise ValueError("degree mismatch")
    return w1.cycle_type_census() == w2.cycle_type_census()


def monotonicity_check(group: PermGroup, chi: LinearCharacter | None = None) -> list[tuple[Partition, Partition]]:
    """Shape pairs violating descent of counts along dominance (expected none)."""
    shapes = all_partitions(group.degree)
    counts = {lam: count_scalar(group, chi, lam) for lam in shapes}
    violations = []
    for lam in shapes:
        for mu in shapes:
            if lam != mu and dominance_leq(lam, mu) and counts[lam] < counts[mu]:
                violations.append((lam, mu))
    return violations
