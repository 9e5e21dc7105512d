"""Group orbits of tabloids and the factored substitution order.

A W-orbit of tabloids stands for one (potential) isomer; the partial order
between orbits, inherited from dominance on tabloids, is the genetic order
of substitution reactions.  Character tests on orbit stabilizers pick out
distinguished orbit families, in particular the ones holding chiral pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dissections import (
    Dissection,
    all_tabloids,
    is_cover_tabloid,
    leq_dissection,
    standard_tabloid,
)
from .partitions import Partition, dominance_leq, all_partitions
from .perms import (
    LinearCharacter,
    PermGroup,
    Permutation,
    relative_sign_character,
    sign_product_character,
)

__all__ = [
    "ChiralReport",
    "Orbit",
    "OrbitSpace",
    "classify_chiral",
    "is_character_orbit",
    "orbit_adjacent",
    "orbit_cover",
    "orbit_interval",
    "orbit_leq",
    "orbit_space",
    "reaction_pairs",
    "refine",
    "stabilizer",
    "transporter",
]


@dataclass(frozen=True)
class Orbit:
    """A W-orbit of tabloids; the representative is the minimal member."""

    group: PermGroup
    shape: Partition
    representative: Dissection
    members: tuple[Dissection, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, a: Dissection) -> bool:
        return a in self.members

    def __repr__(self):
        return f"Orbit({self.representative}, size={self.size})"


@dataclass(frozen=True)
class OrbitSpace:
    """All W-orbits on the tabloids of one shape, in representative order."""

    group: PermGroup
    shape: Partition
    orbits: tuple[Orbit, ...]

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def orbit_of(self, a: Dissection) -> Orbit:
        for orbit in self.orbits:
            if a in orbit:
                return orbit
        raise ValueError(f"{a} is not a tabloid of shape {self.shape}")


def orbit_space(group: PermGroup, lam: Partition) -> OrbitSpace:
    """Partition the tabloids of shape lam into group orbits (memoized)."""
    if lam.d != group.degree:
        raise ValueError("shape degree differs from group degree")
    cached = group._memo.get(("orbit_space", lam))
    if cached is not None:
        return cached
    orbits = []
    seen: set[Dissection] = set()
    for a in all_tabloids(lam):
        if a in seen:
            continue
        members = sorted({a.acted_by(g) for g in group.elements})
        seen.update(members)
        orbits.append(Orbit(group, lam, members[0], tuple(members)))
    orbits.sort(key=lambda o: o.representative.components)
    space = OrbitSpace(group, lam, tuple(orbits))
    group._memo[("orbit_space", lam)] = space
    return space


def stabilizer(group: PermGroup, a: Dissection) -> PermGroup:
    """The subgroup fixing the dissection a (memoized per group)."""
    cached = group._memo.get(("stabilizer", a))
    if cached is not None:
        return cached
    fixed = [g for g in group.elements if a.acted_by(g) == a]
    sub = PermGroup(group.degree, tuple(fixed), tuple(fixed))
    group._memo[("stabilizer", a)] = sub
    return sub


def transporter(a: Dissection) -> Permutation:
    """A permutation carrying the standard tabloid of a's shape onto a."""
    lam = a.shape_partition()
    images = [0] * a.degree
    for std_comp, comp in zip(standard_tabloid(lam).components, a.components):
        for src, dst in zip(std_comp, comp):
            images[src - 1] = dst
    return Permutation(images)


def orbit_leq(a: Orbit, b: Orbit) -> bool:
    """Factored dominance: some group translate of a's representative precedes b's."""
    if a.group != b.group:
        raise ValueError("orbits belong to different groups")
    ra, rb = a.representative, b.representative
    return any(leq_dissection(ra.acted_by(g), rb) for g in a.group.elements)


def orbit_adjacent(a: Orbit, b: Orbit) -> bool:
    """a < b with shapes one raising operator apart."""
    if a.group != b.group:
        raise ValueError("orbits belong to different groups")
    if not _shapes_adjacent(a.shape, b.shape):
        return False
    return a != b and orbit_leq(a, b)


def _shapes_adjacent(lam: Partition, mu: Partition) -> bool:
    diff = [m - l for l, m in zip(lam, mu)]
    nz = [k for k, v in enumerate(diff) if v != 0]
    return len(nz) == 2 and diff[nz[0]] == 1 and diff[nz[1]] == -1


def orbit_cover(a: Orbit, b: Orbit) -> bool:
    """Neighbour test in the orbit order, through tabloid-level covers.

    The open interval between the orbits is the image of the open tabloid
    intervals over all comparable translates of a's representative, so the
    orbits are neighbours exactly when every comparable translate pair is a
    tabloid cover (and at least one comparable translate exists).
    """
    if a.group != b.group:
        raise ValueError("orbits belong to different groups")
    if a == b:
        return False
    ra, rb = a.representative, b.representative
    found = False
    for g in a.group.elements:
        t = ra.acted_by(g)
        if leq_dissection(t, rb):
            if not is_cover_tabloid(t, rb):
                return False
            found = True
    return found


def orbit_interval(a: Orbit, b: Orbit, spaces: dict[Partition, OrbitSpace] | None = None) -> list[Orbit]:
    """All orbits c with a <= c <= b, across every intermediate shape."""
    if not orbit_leq(a, b):
        raise ValueError("a does not precede b in the orbit order")
    group = a.group
    if spaces is None:
        spaces = {}
    out = []
    for lam in all_partitions(group.degree):
        if not (dominance_leq(a.shape, lam) and dominance_leq(lam, b.shape)):
            continue
        if lam not in spaces:
            spaces[lam] = orbit_space(group, lam)
        for c in spaces[lam]:
            if orbit_leq(a, c) and orbit_leq(c, b):
                out.append(c)
    return out


def reaction_pairs(group: PermGroup, lam: Partition, mu: Partition) -> list[tuple[Orbit, Orbit]]:
    """All orbit pairs (a, b) with a < b across two adjacent shapes.

    Their number is the count of simple substitution reactions between the
    two empirical formulas.
    """
    if not _shapes_adjacent(lam, mu):
        raise ValueError(f"shapes {lam} and {mu} are not adjacent")
    lower = orbit_space(group, lam)
    upper = orbit_space(group, mu)
    return [(a, b) for a in lower for b in upper if orbit_leq(a, b)]


def is_character_orbit(orbit: Orbit, chi: LinearCharacter, theta: LinearCharacter) -> bool:
    """Whether chi(sigma) * theta(u^-1 sigma u) is 1 on the whole stabilizer.

    Here u carries the standard tabloid onto the orbit representative; the
    answer does not depend on the representative.  All arithmetic is on
    exact root-of-unity exponents.
    """
    group = orbit.group
    if chi.group != group:
        raise ValueError("chi is not a character of the orbit's group")
    lam = orbit.shape
    if theta.shape is not None and theta.shape.trimmed() != lam.trimmed():
        raise ValueError(f"theta lives on shape {theta.shape}, orbit has shape {lam}")
    a = orbit.representative
    u = transporter(a)
    u_inv = u.inverse()
    n = math.lcm(chi.order, theta.order)
    for sigma in stabilizer(group, a).elements:
        e = chi.exponent(sigma) * (n // chi.order) + theta.exponent(u_inv * sigma * u) * (n // theta.order)
        if e % n != 0:
            return False
    return True


def refine(coarse: OrbitSpace, fine: OrbitSpace) -> dict[Orbit, tuple[Orbit, ...]]:
    """Map each coarse-group orbit to the fine-group orbits it contains."""
    if not fine.group.is_subgroup_of(coarse.group):
        raise ValueError("fine group is not a subgroup of the coarse group")
    if fine.shape != coarse.shape:
        raise ValueError("orbit spaces have different shapes")
    holder_of = {m: k for k, c in enumerate(coarse.orbits) for m in c.members}
    buckets: list[list[Orbit]] = [[] for _ in coarse.orbits]
    for f in fine.orbits:
        buckets[holder_of[f.representative]].append(f)
    return {c: tuple(fs) for c, fs in zip(coarse.orbits, buckets)}


@dataclass(frozen=True)
class ChiralEntry:
    coarse: Orbit
    fine_orbits: tuple[Orbit, ...]
    is_pair: bool
    chi_e_orbit: bool


@dataclass(frozen=True)
class ChiralReport:
    """Per coarse-group orbit: the fine orbits inside and the mirror test.

    An orbit splitting in two holds a chiral pair; equivalently the
    relative sign character is identically 1 on its stabilizers.
    """

    group: PermGroup
    extended_group: PermGroup
    shape: Partition
    entries: tuple[ChiralEntry, ...]

    @property
    def pairs(self) -> tuple[ChiralEntry, ...]:
        return tuple(e for e in self.entries if e.is_pair)

    @property
    def singles(self) -> tuple[ChiralEntry, ...]:
        return tuple(e for e in self.entries if not e.is_pair)


def classify_chiral(group: PermGroup, extended: PermGroup, lam: Partition) -> ChiralReport:
    """Split the extended-group orbits into chiral pairs and singles.

    Requires group <= extended of index 1 or 2.  With index 1 every orbit
    is a single.  With index 2 an orbit is a pair exactly when the relative
    sign character is identically 1 on its stabilizers; the report asserts
    that equivalence.
    """
    if not group.is_subgroup_of(extended):
        raise ValueError("group is not a subgroup of the extended group")
    index = extended.order // group.order
    if extended.order % group.order or index not in (1, 2):
        raise ValueError(f"index must be 1 or 2, got {extended.order}/{group.order}")
    coarse = orbit_space(extended, lam)
    fine = orbit_space(group, lam)
    mapping = refine(coarse, fine)
    theta = sign_product_character(lam, [False] * len(lam.trimmed()), lam.d)
    chi_e = relative_sign_character(extended, group) if index == 2 else None
    entries = []
    for c in coarse.orbits:
        fs = mapping[c]
        if index == 1:
            entries.append(ChiralEntry(c, fs, False, False))
            continue
        flag = is_character_orbit(c, chi_e, theta)
        is_pair = len(fs) == 2
        if is_pair != flag:
            raise AssertionError(f"splitting and character test disagree on {c}")
        entries.append(ChiralEntry(c, fs, is_pair, flag))
    return ChiralReport(group, extended, lam, tuple(entries))
