"""Ordered dissections of [1,d], tabloids, and raising moves between them.

A dissection is a d-tuple of disjoint subsets of [1,d] covering [1,d]
(empty components allowed); a tabloid additionally has weakly decreasing
component sizes.  The dominance order compares prefix unions.  Raising
moves transfer single elements toward earlier components and model inverse
substitution steps; every comparison A <= B is witnessed by an explicit
sequence of such moves.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .partitions import (
    Partition,
    all_partitions,
    common_prefix_len,
    dominance_leq,
    in_M,
    raising_op,
)
from .perms import Permutation

__all__ = [
    "Dissection",
    "all_dissections",
    "all_tabloids",
    "format_tabloid",
    "interval_dissections",
    "interval_shapes",
    "is_cover_dissection",
    "is_cover_tabloid",
    "leq_dissection",
    "lift_shape",
    "parse_tabloid",
    "raise_into",
    "raise_set",
    "raising_moves",
    "shape_assignment",
    "shape_feasible",
    "standard_tabloid",
    "substitution_chain",
]


class Dissection:
    """A d-tuple of sorted disjoint subsets of [1,d] whose union is [1,d]."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Iterable[int]], d: int | None = None):
        comps = [tuple(sorted(c)) for c in components]
        if d is not None:
            if len(comps) > d:
                raise ValueError(f"more than {d} components")
            comps.extend([()] * (d - len(comps)))
        d = len(comps)
        flat = [x for c in comps for x in c]
        if sorted(flat) != list(range(1, d + 1)):
            raise ValueError(f"components do not dissect [1,{d}]: {comps}")
        object.__setattr__(self, "components", tuple(comps))

    def __setattr__(self, *a):
        raise AttributeError("Dissection is immutable")

    @property
    def degree(self) -> int:
        return len(self.components)

    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def shape_partition(self) -> Partition:
        if not self.is_tabloid():
            raise ValueError(f"{self} is not a tabloid")
        return Partition(self.shape())

    def is_tabloid(self) -> bool:
        sizes = self.shape()
        return all(a >= b for a, b in zip(sizes, sizes[1:]))

    def component_of(self, s: int) -> int:
        """The (1-based) index of the component containing s."""
        for k, comp in enumerate(self.components, start=1):
            if s in comp:
                return k
        raise ValueError(f"point {s} outside [1,{self.degree}]")

    def index_map(self) -> dict[int, int]:
        return {s: k for k, comp in enumerate(self.components, start=1) for s in comp}

    def prefix_union(self, i: int) -> frozenset[int]:
        out: set[int] = set()
        for comp in self.components[:i]:
            out.update(comp)
        return frozenset(out)

    def acted_by(self, perm: Permutation) -> "Dissection":
        if perm.degree != self.degree:
            raise ValueError("degree mismatch")
        return Dissection((perm(x) for x in comp) for comp in self.components)

    def __eq__(self, other):
        return isinstance(other, Dissection) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __lt__(self, other):  # lexicographic on component tuples, for canonical order
        return self.components < other.components

    def __le__(self, other):
        return self.components <= other.components

    def __repr__(self):
        return f"Dissection.parse({str(self)!r})"

    def __str__(self):
        return format_tabloid(self)

    @staticmethod
    def parse(text: str, d: int | None = None) -> "Dissection":
        return parse_tabloid(text, d)


def format_tabloid(a: Dissection) -> str:
    """Brace syntax with all components, e.g. ``{2,3,5,6}{1,4}{}{}{}{}``."""
    return "".join("{" + ",".join(map(str, comp)) + "}" for comp in a.components)


def parse_tabloid(text: str, d: int | None = None) -> Dissection:
    """Parse brace syntax; trailing empty components may be omitted if d given."""
    text = text.strip()
    if text and (not text.startswith("{") or not text.endswith("}")):
        raise ValueError(f"malformed dissection text: {text!r}")
    comps: list[list[int]] = []
    for part in text[1:-1].split("}{") if text else []:
        comps.append([int(tok) for tok in part.split(",") if tok.strip()] if part.strip() else [])
    if d is None:
        d = sum(len(c) for c in comps)
        if len(comps) > d:
            comps = comps[:d] if all(not c for c in comps[d:]) else comps
    return Dissection(comps, d)


def all_dissections(d: int) -> list[Dissection]:
    """Every ordered dissection of [1,d]; there are d**d of them."""
    out = []

    def rec(point: int, comps: list[list[int]]):
        if point > d:
            out.append(Dissection([tuple(c) for c in comps]))
            return
        for k in range(d):
            comps[k].append(point)
            rec(point + 1, comps)
            comps[k].pop()

    rec(1, [[] for _ in range(d)])
    return sorted(out)


def all_tabloids(lam: Partition) -> list[Dissection]:
    """All tabloids of shape lam, in canonical (lexicographic) order."""
    d = lam.d
    sizes = lam.parts
    out = []

    def rec(k: int, remaining: tuple[int, ...], comps: list[tuple[int, ...]]):
        if k == d:
            out.append(Dissection(comps))
            return
        size = sizes[k]
        if size == 0:
            comps.append(())
            rec(k + 1, remaining, comps)
            comps.pop()
            return
        for chosen in combinations(remaining, size):
            rest = tuple(x for x in remaining if x not in chosen)
            comps.append(chosen)
            rec(k + 1, rest, comps)
            comps.pop()

    rec(0, tuple(range(1, d + 1)), [])
    return sorted(out)


def standard_tabloid(lam: Partition) -> Dissection:
    """The tabloid with consecutive blocks [1..lam_1], [lam_1+1..], ..."""
    comps = []
    start = 1
    for size in lam.parts:
        comps.append(tuple(range(start, start + size)))
        start += size
    return Dissection(comps)


def leq_dissection(a: Dissection, b: Dissection) -> bool:
    """Dominance: every prefix union of a is contained in that of b."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    seen_a: set[int] = set()
    seen_b: set[int] = set()
    for ca, cb in zip(a.components[:-1], b.components[:-1]):
        seen_a.update(ca)
        seen_b.update(cb)
        if not seen_a <= seen_b:
            return False
    return True


def raise_into(i: int, s: int, a: Dissection) -> Dissection:
    """Move element s into component i if it currently sits later; else a."""
    j = a.component_of(s)
    if j <= i:
        return a
    comps = list(a.components)
    comps[j - 1] = tuple(x for x in comps[j - 1] if x != s)
    comps[i - 1] = tuple(sorted(comps[i - 1] + (s,)))
    return Dissection(comps)


def raise_set(i: int, xs: Iterable[int], a: Dissection) -> Dissection:
    """Apply raise_into for every element of xs (the moves commute)."""
    for s in xs:
        a = raise_into(i, s, a)
    return a


def shape_assignment(a: Dissection, b: Dissection, n: Sequence[int]) -> Dissection | None:
    """Some X with a <= X <= b and shape(X) = n, or None when impossible.

    An element sitting in component beta of b and alpha of a may occupy any
    component of X in [beta, alpha]; filling components in order and always
    spending the elements with the earliest deadline alpha decides
    feasibility exactly.  Ties break on the element, so the result is
    deterministic.
    """
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    d = a.degree
    n = tuple(n)
    if len(n) != d or sum(n) != d or not in_M(n):
        raise ValueError(f"{n} is not a non-negative composition of {d}")
    if not leq_dissection(a, b):
        return None
    alpha = a.index_map()
    beta = b.index_map()
    arrivals: list[list[int]] = [[] for _ in range(d + 1)]
    for x in range(1, d + 1):
        arrivals[beta[x]].append(x)
    pool: list[int] = []
    comps: list[tuple[int, ...]] = []
    for v in range(1, d + 1):
        pool.extend(arrivals[v])
        pool.sort(key=lambda x: (alpha[x], x))
        if len(pool) < n[v - 1]:
            return None
        chosen, pool = pool[: n[v - 1]], pool[n[v - 1] :]
        if any(alpha[x] < v for x in chosen) or any(alpha[x] <= v for x in pool):
            return None  # an element passed its deadline
        comps.append(tuple(sorted(chosen)))
    return Dissection(comps)


def shape_feasible(a: Dissection, b: Dissection, n: Sequence[int]) -> bool:
    """Whether the interval [a, b] contains a dissection of shape n."""
    return shape_assignment(a, b, n) is not None


def lift_shape(a: Dissection, b: Dissection, n: Sequence[int]) -> Dissection:
    """The canonical X with a <= X <= b and shape(X) = n.

    Requires a <= b and shape(a) <= n <= shape(b) in dominance with n
    non-negative.  Those conditions do not guarantee existence: a shape
    inside the dominance interval can still be unrealizable between a and
    b, and then this raises.
    """
    n = tuple(n)
    if not leq_dissection(a, b):
        raise ValueError("a does not precede b")
    if not in_M(n) or not dominance_leq(a.shape(), n) or not dominance_leq(n, b.shape()):
        raise ValueError(f"target shape {n} outside the dominance interval")
    out = shape_assignment(a, b, n)
    if out is None:
        raise ValueError(f"no dissection of shape {n} lies between {a} and {b}")
    return out


def raising_moves(a: Dissection, b: Dissection) -> list[tuple[int, int]] | None:
    """A sequence of single-element raises carrying a onto b, or None.

    None exactly when a does not precede b in dominance.  Applying the
    returned (component, element) moves in order transforms a into b; the
    walk fills components left to right from b's prefixes.
    """
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    if not leq_dissection(a, b):
        return None
    moves: list[tuple[int, int]] = []
    cur = a
    target = b.shape()
    while cur.shape() != target:
        l = cur.shape()
        i = common_prefix_len(l, target) + 1
        pool = sorted(b.prefix_union(i) - cur.prefix_union(i))
        xs = pool[: target[i - 1] - l[i - 1]]
        cur = raise_set(i, xs, cur)
        moves.extend((i, s) for s in xs)
    if cur != b:  # shapes equal and cur <= b forces equality
        raise RuntimeError("lift terminated away from target")
    return moves


def interval_dissections(a: Dissection, b: Dissection) -> list[Dissection]:
    """The closed interval [a, b]: all X with a <= X <= b.

    Grown by closure under single raises that stay below b; every interval
    member is reachable this way because raises commute.
    """
    if not leq_dissection(a, b):
        raise ValueError("a does not precede b")
    d = a.degree
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(1, d):
                for s in range(1, d + 1):
                    y = raise_into(i, s, x)
                    if y not in seen and leq_dissection(y, b):
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return sorted(seen)


def interval_shapes(a: Dissection, b: Dissection) -> set[tuple[int, ...]]:
    """Shapes attained on the interval [a, b]."""
    return {x.shape() for x in interval_dissections(a, b)}


def substitution_chain(a: Dissection, b: Dissection) -> list[tuple[int, int]]:
    """The canonical move chain for a pair at dominance-adjacent shapes.

    Requires a < b with shape(b) obtained from shape(a) by one raising
    operator i <- j.  Returns moves (i_1, s_1), ..., (i_r, s_r) with
    strictly increasing components i = i_1 < ... < i_r, each s_k taken from
    component i_{k+1} of a (i_{r+1} = j); the moves commute and their
    product carries a onto b.  Intermediate stages may leave the tabloid
    family, never the dissection family.
    """
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    l, m = a.shape(), b.shape()
    pair = _adjacency_pair(l, m)
    if pair is None or a == b or not leq_dissection(a, b):
        raise ValueError("shapes are not adjacent with a < b")
    i, j = pair
    if a.components[: i - 1] != b.components[: i - 1]:
        raise RuntimeError("prefixes disagree below the raise index")
    extra = set(b.components[i - 1]) - set(a.components[i - 1])
    if len(extra) != 1:
        raise RuntimeError("no single entering element at the raise index")
    moves: list[tuple[int, int]] = []
    s = extra.pop()
    cur_i = i
    while True:
        moves.append((cur_i, s))
        nxt = a.component_of(s)
        if nxt <= cur_i:
            raise RuntimeError("element does not move upward")
        if nxt == j:
            break
        leaving = set(b.components[nxt - 1]) - (set(a.components[nxt - 1]) - {s})
        if len(leaving) != 1:
            raise RuntimeError("chain step is not a single swap")
        cur_i, s = nxt, leaving.pop()
    result = a
    for i_k, s_k in moves:
        result = raise_into(i_k, s_k, result)
    if result != b:
        raise RuntimeError("substitution chain fails to reach the target")
    return moves


def _adjacency_pair(l: Sequence[int], m: Sequence[int]) -> tuple[int, int] | None:
    """(i, j) with m equal to the i<-j raise of l, if any."""
    diff = [bm - al for al, bm in zip(l, m)]
    nz = [k for k, v in enumerate(diff) if v != 0]
    if len(nz) == 2 and diff[nz[0]] == 1 and diff[nz[1]] == -1:
        return nz[0] + 1, nz[1] + 1
    return None


def is_cover_dissection(a: Dissection, b: Dissection) -> bool:
    """Covering relation on dissections: one element drops one component."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    pair = _diff_pair(a, b)
    if pair is None:
        return False
    i, moved = pair
    return a.component_of(moved) == i + 1


def _diff_pair(a: Dissection, b: Dissection) -> tuple[int, int] | None:
    """If b = raise of a single element into component i, return (i, element)."""
    diffs = [k for k in range(a.degree) if a.components[k] != b.components[k]]
    if len(diffs) != 2:
        return None
    i, j = diffs[0] + 1, diffs[1] + 1
    gained = set(b.components[i - 1]) - set(a.components[i - 1])
    lost = set(a.components[j - 1]) - set(b.components[j - 1])
    if len(gained) == 1 and gained == lost:
        if set(a.components[i - 1]) <= set(b.components[i - 1]) and set(b.components[j - 1]) <= set(a.components[j - 1]):
            return i, gained.pop()
    return None


@lru_cache(maxsize=None)
def _partition_tuples(d: int) -> tuple[tuple[int, ...], ...]:
    return tuple(p.parts for p in all_partitions(d))


def is_cover_tabloid(a: Dissection, b: Dissection) -> bool:
    """Covering relation on tabloids: a < b with no tabloid strictly between.

    Any strictly intermediate tabloid would carry a shape strictly between
    the two shapes (equal shapes force equality), so the open interval is
    empty exactly when no strictly intermediate shape is realizable inside
    [a, b].  Shapes one raising step apart never admit an intermediate
    shape; for wider pairs realizability is decided per shape.
    """
    if not (a.is_tabloid() and b.is_tabloid()):
        raise ValueError("both arguments must be tabloids")
    if a == b or not leq_dissection(a, b):
        return False
    lam, mu = a.shape(), b.shape()
    for nu in _partition_tuples(a.degree):
        if nu in (lam, mu):
            continue
        if dominance_leq(lam, nu) and dominance_leq(nu, mu) and shape_feasible(a, b, nu):
            return False
    return True
