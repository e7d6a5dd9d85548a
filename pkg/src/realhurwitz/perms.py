"""Exact permutation algebra on {1, ..., d}.

Points are 1-based in every external form (cycle notation, one-line form) and
0-based in storage.  Composition is right-to-left::

    (p * q)(x) == p(q(x))

so a factorization ``s2 * t_r * ... * t_1 * s1 == id`` reads exactly as the
product is written.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_DEGREE = 16


def max_degree() -> int:
    """Degree safety cap, overridable through ``HNUM_MAX_D``."""
    raw = os.environ.get("HNUM_MAX_D")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"HNUM_MAX_D must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("HNUM_MAX_D must be positive")
    return value


def check_degree(d: int) -> int:
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    cap = max_degree()
    if d > cap:
        raise ValueError(f"degree {d} exceeds the safety cap {cap} (set HNUM_MAX_D)")
    return d


# ---------------------------------------------------------------------------
# raw tuple helpers (0-based images); the search code works on these directly
# ---------------------------------------------------------------------------

def tcompose(p: tuple, q: tuple) -> tuple:
    return tuple([p[x] for x in q])


def tinverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def tis_involution(p: tuple) -> bool:
    return all(p[p[i]] == i for i in range(len(p)))


def treverses(g: tuple, p: tuple) -> bool:
    """True iff g p g == p^-1, i.e. g∘p is an involution (g assumed one)."""
    gp = [g[x] for x in p]
    return all(gp[gp[i]] == i for i in range(len(gp)))


def tcycles(p: tuple) -> list[tuple[int, ...]]:
    """Cycles (0-based), each starting at its smallest point, sorted by start."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def tcycle_type(p: tuple) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in tcycles(p)), reverse=True))


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

@total_ordering
@dataclass(frozen=True)
class Permutation:
    """Element of S_d stored as a 0-based image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))) or not images:
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    # construction -----------------------------------------------------------
    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))

    @classmethod
    def from_one_line(cls, values: Sequence[int]) -> "Permutation":
        return cls(tuple(v - 1 for v in values))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], d: int) -> "Permutation":
        images = list(range(d))
        used = set()
        for cyc in cycles:
            cyc = [c - 1 for c in cyc]
            for x in cyc:
                if not 0 <= x < d:
                    raise ValueError(f"point {x + 1} outside 1..{d}")
                if x in used:
                    raise ValueError(f"point {x + 1} appears twice")
                used.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> "Permutation":
        """Parse ``"(1 2 3)(4 5)"``, ``"()"`` or ``"[2,3,1,5,4]"``."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"malformed one-line permutation {text!r}")
            body = text[1:-1].strip()
            values = [int(v) for v in re.split(r"[,\s]+", body) if v]
            if d is not None and len(values) != d:
                raise ValueError(f"one-line form has length {len(values)}, expected {d}")
            return cls.from_one_line(values)
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise ValueError(f"malformed cycle notation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(v) for v in re.split(r"[,\s]+", body.strip()) if v]
            if pts:
                cycles.append(pts)
        top = max((max(c) for c in cycles), default=1)
        if d is None:
            d = top
        return cls.from_cycles(cycles, d)

    # views ------------------------------------------------------------------
    @property
    def d(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __lt__(self, other: "Permutation") -> bool:
        return (self.d, self.images) < (other.d, other.images)

    def inverse(self) -> "Permutation":
        return Permutation(tinverse(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        return [tuple(x + 1 for x in c) for c in tcycles(self.images)
                if include_fixed or len(c) > 1]

    def cycle_type(self) -> "Partition":
        return Partition(tcycle_type(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def one_line(self) -> str:
        return "[" + ",".join(str(x + 1) for x in self.images) + "]"

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self}, d={self.d})"


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not re.fullmatch(r"\d+(\s*,\s*\d+)*", text):
            raise ValueError(f"malformed partition {text!r}; expected e.g. '3,1,1'")
        return cls(tuple(int(v) for v in text.split(",")))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self})"


def as_partition(value) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    if isinstance(value, int):
        return Partition((value,))
    return Partition(tuple(value))


@dataclass(frozen=True)
class SignSplitting:
    """Signs of the r branch points (pairs), each +1 or -1."""

    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be +1 or -1: {signs}")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def parse(cls, text: str) -> "SignSplitting":
        text = text.strip()
        if not text or set(text) - {"+", "-"}:
            raise ValueError(f"malformed sign string {text!r}; use only '+' and '-'")
        return cls(tuple(1 if c == "+" else -1 for c in text))

    @classmethod
    def all_of_length(cls, r: int) -> list["SignSplitting"]:
        out = []
        for mask in range(2 ** r):
            out.append(cls(tuple(-1 if (mask >> (r - 1 - i)) & 1 else 1 for i in range(r))))
        return out

    @property
    def s(self) -> int:
        return sum(1 for x in self.signs if x == 1)

    @property
    def r(self) -> int:
        return len(self.signs)

    def doubled(self) -> "SignSplitting":
        return SignSplitting(tuple(x for x in self.signs for _ in range(2)))

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self):
        return iter(self.signs)

    def __getitem__(self, i):
        return self.signs[i]

    def __str__(self) -> str:
        return "".join("+" if x == 1 else "-" for x in self.signs)

    def __repr__(self) -> str:
        return f"SignSplitting({self})"


def as_signs(value) -> SignSplitting:
    if isinstance(value, SignSplitting):
        return value
    if isinstance(value, str):
        return SignSplitting.parse(value)
    return SignSplitting(tuple(value))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _same_degree(*perms: Permutation) -> int:
    d = perms[0].d
    for p in perms[1:]:
        if p.d != d:
            raise ValueError(f"degree mismatch: {d} vs {p.d}")
    return d


def compose(p: Permutation, q: Permutation) -> Permutation:
    """x -> p(q(x))."""
    _same_degree(p, q)
    return Permutation(tcompose(p.images, q.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def conjugate(g: Permutation, p: Permutation) -> Permutation:
    """g∘p∘g⁻¹."""
    _same_degree(g, p)
    return Permutation(tcompose(tcompose(g.images, p.images), tinverse(g.images)))


def cycle_type(p: Permutation) -> Partition:
    return p.cycle_type()


def orbits(gens: Iterable[Sequence[int]], d: int) -> list[int]:
    """Union-find roots (0-based) of the point orbits of the generated group."""
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(d)]


def is_transitive(gens: Sequence[Permutation], d: int) -> bool:
    for g in gens:
        if g.d != d:
            raise ValueError(f"generator of degree {g.d} in a degree-{d} check")
    if d == 1:
        return True
    return all(root == 0 for root in orbits((g.images for g in gens), d))


def _reversing_involutions_raw(p: tuple) -> list[tuple]:
    # A reversing involution permutes the cycles of p by an involution that
    # preserves lengths; on a fixed cycle (c_0..c_{L-1}) it is c_i -> c_{j-i},
    # on a swapped pair c, c' it is c_i <-> c'_{j-i}, for any offset j.
    cycles = tcycles(p)
    results = []
    d = len(p)

    def rec(remaining: list[int], img: list[int]):
        if not remaining:
            results.append(tuple(img))
            return
        first, rest = remaining[0], remaining[1:]
        c = cycles[first]
        L = len(c)
        for j in range(L):
            for i in range(L):
                img[c[i]] = c[(j - i) % L]
            rec(rest, img)
        for idx, other in enumerate(rest):
            c2 = cycles[other]
            if len(c2) != L:
                continue
            rest2 = rest[:idx] + rest[idx + 1:]
            for j in range(L):
                for i in range(L):
                    img[c[i]] = c2[(j - i) % L]
                    img[c2[(j - i) % L]] = c[i]
                rec(rest2, img)

    rec(list(range(len(cycles))), [0] * d)
    results.sort()
    return results


def reversing_involutions(sigma: Permutation) -> list[Permutation]:
    """All γ with γ² = id and γσγ = σ⁻¹, in lexicographic one-line order."""
    return [Permutation(g) for g in _reversing_involutions_raw(sigma.images)]


def _perms_of_type_raw(d: int, lengths: tuple[int, ...]) -> list[tuple]:
    out = []

    def rec(free: list[int], lens: dict, img: list[int]):
        if not free:
            out.append(tuple(img))
            return
        first = free[0]
        rest = free[1:]
        for L in sorted(lens):
            if lens[L] == 0:
                continue
            lens[L] -= 1
            for others in _itertools_permutations(rest, L - 1):
                cyc = (first,) + others
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    img[a] = b
                rec([x for x in rest if x not in others], lens, img)
            lens[L] += 1

    counts: dict[int, int] = {}
    for L in lengths:
        counts[L] = counts.get(L, 0) + 1
    rec(list(range(d)), counts, list(range(d)))
    out.sort()
    return out


def permutations_of_type(d: int, t) -> Iterator[Permutation]:
    """Every permutation of S_d with cycle type t, lexicographically."""
    t = as_partition(t)
    if t.size != d:
        raise ValueError(f"cycle type {t} does not sum to d={d}")
    check_degree(d)
    for img in _perms_of_type_raw(d, t.parts):
        yield Permutation(img)


def three_cycles(d: int) -> Iterator[Permutation]:
    if d < 3:
        raise ValueError("3-cycles need d >= 3")
    return permutations_of_type(d, (3,) + (1,) * (d - 3))


def involutions(d: int) -> list[Permutation]:
    """All involutions of S_d (identity included), lexicographic."""
    check_degree(d)
    out = []
    for k in range(0, d // 2 + 1):
        out.extend(permutations_of_type(d, (2,) * k + (1,) * (d - 2 * k)))
    out.sort()
    return out


def partitions(d: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of d in reverse lexicographic order."""
    if max_part is None:
        max_part = d

    def rec(n, m):
        if n == 0:
            yield ()
            return
        for first in range(min(n, m), 0, -1):
            for tail in rec(n - first, first):
                yield (first,) + tail

    for parts in rec(d, max_part):
        yield Partition(parts)


def tail_decomposition(lam) -> tuple[Partition, Partition, Partition, Partition]:
    """Split λ into (λ_oo, λ_ee, λ_o, λ_e).

    λ_oo / λ_ee record the pairs of repeated odd / even parts (one entry per
    pair), λ_o / λ_e the leftover single odd / even parts, which are distinct.
    """
    lam = as_partition(lam)
    counts: dict[int, int] = {}
    for part in lam:
        counts[part] = counts.get(part, 0) + 1
    oo, ee, o, e = [], [], [], []
    for value, m in counts.items():
        pairs, single = divmod(m, 2)
        (oo if value % 2 else ee).extend([value] * pairs)
        if single:
            (o if value % 2 else e).append(value)
    return Partition(tuple(oo)), Partition(tuple(ee)), Partition(tuple(o)), Partition(tuple(e))
