"""Integer compositions and partitions under the dominance order.

Compositions are plain length-d integer tuples summing to d (entries may be
negative in transient contexts; ``in_M`` tests non-negativity).  Partitions
are zero-padded to length d so raising operators always have defined
coordinates.  All operator indices are 1-based.
"""

from __future__ import annotations

import math
from itertools import accumulate
from typing import Iterable, Sequence

__all__ = [
    "Partition",
    "all_compositions",
    "all_partitions",
    "adjacent_raising_chain",
    "centralizer_order",
    "common_prefix_len",
    "covers_above",
    "dominance_cmp",
    "dominance_leq",
    "format_partition",
    "in_M",
    "is_cover_composition",
    "is_cover_partition",
    "parse_partition",
    "prefix_gaps",
    "raising_op",
]


def _parts(x) -> tuple[int, ...]:
    return x.parts if isinstance(x, Partition) else tuple(x)


class Partition:
    """A weakly decreasing composition of d, stored padded to length d."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int], d: int | None = None):
        p = tuple(parts)
        if d is not None:
            if len(p) > d:
                raise ValueError(f"more than {d} parts: {p}")
            p = p + (0,) * (d - len(p))
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"parts not weakly decreasing: {p}")
        if p and (p[-1] < 0 or sum(p) != len(p)):
            raise ValueError(f"not a partition of {len(p)}: {p}")
        object.__setattr__(self, "parts", p)

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @property
    def d(self) -> int:
        return len(self.parts)

    def trimmed(self) -> tuple[int, ...]:
        return tuple(k for k in self.parts if k > 0)

    def multiplicities(self) -> tuple[int, ...]:
        """(m_1, ..., m_d) with m_k the number of parts equal to k."""
        m = [0] * self.d
        for k in self.parts:
            if k > 0:
                m[k - 1] += 1
        return tuple(m)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __lt__(self, other):  # lexicographic, for deterministic sorting only
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition({list(self.trimmed())}, d={self.d})"

    def __str__(self):
        return format_partition(self)


def format_partition(lam: Partition | Sequence[int]) -> str:
    """Render with exponents for repeated parts, e.g. ``2^2,1^2``."""
    parts = [k for k in _parts(lam) if k > 0]
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append(f"{parts[i]}^{j - i}" if j - i > 1 else str(parts[i]))
        i = j
    return ",".join(out) if out else "0"


def parse_partition(text: str, d: int | None = None) -> Partition:
    """Parse ``4,2`` or exponent form ``2^2,1^2``; inverse of format_partition."""
    parts: list[int] = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError(f"empty part in partition {text!r}")
        if "^" in tok:
            base, _, exp = tok.partition("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(tok))
    return Partition(parts, d if d is not None else sum(parts))


def in_M(l: Sequence[int]) -> bool:
    """Whether all entries are non-negative (the composition lies in M_d)."""
    return all(k >= 0 for k in _parts(l))


def _check_same_d(l, m):
    if len(l) != len(m):
        raise ValueError(f"length mismatch: {len(l)} vs {len(m)}")


def dominance_cmp(l: Sequence[int], m: Sequence[int]) -> str:
    """Single-scan comparison: 'lt', 'eq', 'gt' or 'incomparable'."""
    l, m = _parts(l), _parts(m)
    _check_same_d(l, m)
    below = above = True
    sl = sm = 0
    for a, b in zip(l, m):
        sl += a
        sm += b
        if sl > sm:
            below = False
        elif sl < sm:
            above = False
        if not (below or above):
            return "incomparable"
    if below and above:
        return "eq"
    return "lt" if below else "gt"


def dominance_leq(l: Sequence[int], m: Sequence[int]) -> bool:
    """True iff every prefix sum of l is at most that of m."""
    return dominance_cmp(l, m) in ("lt", "eq")


def raising_op(i: int, j: int, l: Sequence[int]) -> tuple[int, ...]:
    """Move one unit from part j to part i (identity when j <= i)."""
    p = _parts(l)
    d = len(p)
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError(f"indices out of range: i={i}, j={j}, d={d}")
    if j <= i:
        return p
    out = list(p)
    out[i - 1] += 1
    out[j - 1] -= 1
    return tuple(out)


def common_prefix_len(l: Sequence[int], m: Sequence[int]) -> int:
    """Length of the maximal common prefix (0 when first entries differ)."""
    l, m = _parts(l), _parts(m)
    _check_same_d(l, m)
    q = 0
    for a, b in zip(l, m):
        if a != b:
            break
        q += 1
    return q


def prefix_gaps(l: Sequence[int], m: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Prefix-sum differences (r_1, ..., r_{d-1}) and their total."""
    l, m = _parts(l), _parts(m)
    _check_same_d(l, m)
    gaps = tuple(b - a for a, b in zip(accumulate(l), accumulate(m)))[: len(l) - 1]
    return gaps, sum(gaps)


def adjacent_raising_chain(l: Sequence[int], m: Sequence[int]) -> list[int]:
    """Indices i of adjacent raises i -> i+1 carrying l up to m.

    Requires l <= m with both in M_d.  Applying the raises in order keeps
    every intermediate composition in M_d and strictly increasing in
    dominance; the chain length equals the prefix-gap total.  The
    construction is inductive: locate the first stretch of positive gaps,
    pick the smallest donor part inside it, and expand the single raise
    into adjacent steps.
    """
    l, m = _parts(l), _parts(m)
    _check_same_d(l, m)
    if not (in_M(l) and in_M(m)):
        raise ValueError("both compositions must be non-negative")
    if not dominance_leq(l, m):
        raise ValueError(f"{l} does not precede {m} in dominance")
    d = len(l)
    chain: list[int] = []
    cur = l
    while cur != m:
        gaps, _ = prefix_gaps(cur, m)
        q = common_prefix_len(cur, m)
        # smallest kappa >= 2 with gap q+kappa zero; the gap at d is 0 by mass.
        kappa = 2
        while q + kappa <= d - 1 and gaps[q + kappa - 1] != 0:
            kappa += 1
        i = q + 1
        j = next(jj for jj in range(q + 2, q + kappa + 1) if cur[jj - 1] >= 1)
        # expand the i<-j move into adjacent steps j-1, j-2, ..., i
        for k in range(j - 1, i - 1, -1):
            cur = raising_op(k, k + 1, cur)
            chain.append(k)
    return chain


def is_cover_composition(l: Sequence[int], m: Sequence[int]) -> bool:
    """Covering relation in M_d: m is one adjacent raise above l."""
    l, m = _parts(l), _parts(m)
    _check_same_d(l, m)
    if not (in_M(l) and in_M(m)):
        return False
    diff = [b - a for a, b in zip(l, m)]
    nz = [k for k, v in enumerate(diff) if v != 0]
    return len(nz) == 2 and nz[1] == nz[0] + 1 and diff[nz[0]] == 1 and diff[nz[1]] == -1


def is_cover_partition(lam: Partition, mu: Partition) -> bool:
    """Covering relation in P_d: one box moves up, minimally."""
    l, m = _parts(lam), _parts(mu)
    _check_same_d(l, m)
    diff = [b - a for a, b in zip(l, m)]
    nz = [k for k, v in enumerate(diff) if v != 0]
    if len(nz) != 2 or diff[nz[0]] != 1 or diff[nz[1]] != -1:
        return False
    i, j = nz[0] + 1, nz[1] + 1
    return j == i + 1 or l[i - 1] == l[j - 1]


def all_partitions(d: int) -> list[Partition]:
    """All partitions of d in decreasing lexicographic order."""
    if d < 1:
        raise ValueError("d must be positive")
    out: list[Partition] = []

    def rec(remaining: int, maxpart: int, acc: list[int]):
        if remaining == 0:
            out.append(Partition(acc, d))
            return
        for k in range(min(maxpart, remaining), 0, -1):
            acc.append(k)
            rec(remaining - k, k, acc)
            acc.pop()

    rec(d, d, [])
    return out


def covers_above(lam: Partition) -> list[Partition]:
    """Partitions covering lam in the dominance order on P_d."""
    d = lam.d
    found = []
    for j in range(2, d + 1):
        if lam[j - 1] < 1:
            continue
        for i in range(1, j):
            mu = raising_op(i, j, lam)
            if all(a >= b for a, b in zip(mu, mu[1:])) and mu[-1] >= 0:
                cand = Partition(mu)
                if is_cover_partition(lam, cand) and cand not in found:
                    found.append(cand)
    return sorted(found, key=lambda p: p.parts, reverse=True)


def all_compositions(d: int) -> list[tuple[int, ...]]:
    """All length-d non-negative integer tuples summing to d (the set M_d)."""
    out: list[tuple[int, ...]] = []

    def rec(pos: int, remaining: int, acc: list[int]):
        if pos == d - 1:
            acc.append(remaining)
            out.append(tuple(acc))
            acc.pop()
            return
        for k in range(remaining + 1):
            acc.append(k)
            rec(pos + 1, remaining - k, acc)
            acc.pop()

    rec(0, d, [])
    return out


def centralizer_order(lam: Partition | Sequence[int]) -> int:
    """z_lam = prod_k k^{m_k} m_k! over the part multiplicities."""
    counts: dict[int, int] = {}
    for k in _parts(lam):
        if k > 0:
            counts[k] = counts.get(k, 0) + 1
    z = 1
    for k, mk in counts.items():
        z *= k**mk * math.factorial(mk)
    return z
