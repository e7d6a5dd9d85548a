"""Universally enhanced covers and the enhanced number E_g(λ, μ).

A cover is universally enhanced when every pair shows one of the fourteen
uncoloured pair pictures and its only even inner edges are bridges.  Such a
cover has exactly one colouring for each sign splitting, which makes the
weighted count E_g(λ, μ) a lower bound for every real count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .oracle import LemmaViolation, branch_point_count
from .perms import Partition, SignSplitting, as_partition, as_signs, check_degree, tail_decomposition
from .tropical.covers import (
    LEFT,
    RED,
    BLUE,
    RIGHT,
    RealStructure,
    TropicalCover,
    mult_enhanced,
    normalized_cover,
    validate_cover,
)
from .tropical.enumerate import initial_states, sweep
from .tropical.pairs import match_uncoloured
from .tropical.templates import POSITIVE


class HypothesisError(ValueError):
    pass


def is_universally_enhanced(cover: TropicalCover) -> bool:
    for i in range(cover.r):
        if match_uncoloured(cover, i) is None:
            return False
    bridges = set(cover.bridges)
    return all(cover.edges[j].weight % 2 == 1 or j in bridges for j in cover.inner_edges)


def canonical_colouring(cover: TropicalCover, splitting) -> RealStructure:
    """The unique colouring of a universal cover reproducing the splitting."""
    splitting = as_signs(splitting)
    if len(splitting) != cover.r:
        raise ValueError(f"need {cover.r} signs, got {len(splitting)}")
    if not is_universally_enhanced(cover):
        raise ValueError("cover is not universally enhanced")
    dotted = set()
    colours: dict[int, str] = {}
    for i, sign in enumerate(splitting):
        t, slots = match_uncoloured(cover, i)
        for name, letter in t.slots:
            if name == "D":
                dotted.add(tuple(sorted(slots["D"])))
                continue
            if letter == "B":
                continue
            red = (letter == "R") == (sign == 1)
            j = slots[name]
            colour = RED if red else BLUE
            if colours.setdefault(j, colour) != colour:
                raise LemmaViolation(f"lemma violation: edge {j} coloured both ways")
    return RealStructure.from_edge_colours(cover, dotted, colours)


def dotted_set(cover: TropicalCover) -> frozenset:
    """I_ρ of any colouring: the symmetric pairs used by join-join and cut-cut pairs."""
    out = set()
    for i in range(cover.r):
        found = match_uncoloured(cover, i)
        if found is None:
            raise ValueError("cover is not universally enhanced")
        if "D" in found[1]:
            out.add(tuple(sorted(found[1]["D"])))
    return frozenset(out)


def universal_mult(cover: TropicalCover) -> int:
    """2^(dotted circles) times their weights; the general formula when r = 1."""
    if not is_universally_enhanced(cover):
        raise ValueError("cover is not universally enhanced")
    if cover.r == 1:
        return mult_enhanced(cover, canonical_colouring(cover, SignSplitting((1,))))
    circles = [p for p in dotted_set(cover) if all(cover.is_inner(j) for j in p)]
    value = 2 ** len(circles)
    for p in circles:
        value *= cover.edges[p[0]].weight
    return value


@dataclass(frozen=True)
class UniversalClass:
    cover: TropicalCover
    canonical_key: tuple
    multiplicity: int


def _parity_match(have: str, want: str) -> bool:
    if want == "B":
        return have == "B"
    return have == "E" and want in ("R", "U")


def _freeze(letter: str, weight: int) -> str:
    # even non-bridge outputs may only become right ends
    if letter == "D":
        return "D" if weight % 2 else "DF"
    return "B" if letter == "B" else "F"


def enumerate_universal(g, lam, mu) -> list[UniversalClass]:
    lam, mu = as_partition(lam), as_partition(mu)
    r = branch_point_count(g, lam, mu)
    check_degree(lam.size)
    found: dict[tuple, TropicalCover] = {}
    per_pair = [POSITIVE] * r
    for records, _ in sweep(lam, mu, r, per_pair, initial_states(lam, coloured=False),
                            match=_parity_match, relabel=_freeze):
        cover = normalized_cover(2 * r, [(s, t, w) for s, t, w, _, _ in records])
        found.setdefault(cover.key(), cover)
    return [UniversalClass(found[k], k, universal_mult(found[k])) for k in sorted(found)]


def enhanced_number(g, lam, mu) -> int:
    return sum(c.multiplicity for c in enumerate_universal(g, lam, mu))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

class CoverBuilder:
    """Places pairs left to right on named active edges."""

    def __init__(self):
        self.n = 0
        self.records: list[tuple[int, int, int]] = []
        self.active: dict[str, tuple[int, int]] = {}

    def weight(self, name: str) -> int:
        return self.active[name][1]

    def left(self, name: str, w: int):
        if name in self.active:
            raise ValueError(f"edge {name} already active")
        self.active[name] = (LEFT, w)

    def _consume(self, name: str, v: int) -> int:
        origin, w = self.active.pop(name)
        self.records.append((origin, v, w))
        return w

    def _pair(self) -> tuple[int, int]:
        self.n += 2
        return self.n - 2, self.n - 1

    def join_fork(self, k: int, x: str, out: str):
        """A symmetric left fork of weight k joins into 2k, which joins x."""
        v1, v2 = self._pair()
        self.records += [(LEFT, v1, k), (LEFT, v1, k), (v1, v2, 2 * k)]
        w = self._consume(x, v2)
        self.active[out] = (v2, w + 2 * k)

    def cut_fork(self, x: str, k: int, out: str):
        """x sheds a bridge 2k that splits into a symmetric right fork."""
        v1, v2 = self._pair()
        w = self._consume(x, v1)
        if w - 2 * k < 1:
            raise ValueError(f"cannot cut {2 * k} from an edge of weight {w}")
        self.records += [(v1, v2, 2 * k), (v2, RIGHT, k), (v2, RIGHT, k)]
        self.active[out] = (v1, w - 2 * k)

    def cut_join(self, x: str, y_weight: int, y: str, w: str, out: str):
        """x cut into y and a bridge; the bridge joins w."""
        v1, v2 = self._pair()
        wx = self._consume(x, v1)
        z = wx - y_weight
        if y_weight < 1 or z < 1:
            raise ValueError(f"cannot cut {wx} into {y_weight} and {z}")
        self.active[y] = (v1, y_weight)
        self.records.append((v1, v2, z))
        ww = self._consume(w, v2)
        self.active[out] = (v2, z + ww)

    def circle(self, x: str, z: int, out: str):
        v1, v2 = self._pair()
        wx = self._consume(x, v1)
        if not 0 < z < wx:
            raise ValueError(f"cannot split {wx} into {z} and {wx - z}")
        self.records += [(v1, v2, z), (v1, v2, wx - z)]
        self.active[out] = (v2, wx)

    def finish(self) -> TropicalCover:
        records = self.records + [(o, RIGHT, w) for o, w in self.active.values()]
        return normalized_cover(self.n, records)


def _replay(ops) -> CoverBuilder:
    b = CoverBuilder()
    for name, args in ops:
        getattr(b, name)(*args)
    return b


def build_nonvanishing_cover(g, lam, mu) -> TropicalCover:
    """The universal cover of the existence theorem (strings, tails, bridges, circles)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if g < 0:
        raise HypothesisError("non-vanishing hypothesis not met: negative genus")
    r = branch_point_count(g, lam, mu)
    loo, lee, lo, le = tail_decomposition(lam)
    moo, mee, mo, me = tail_decomposition(mu)
    k = len(lo)
    if not (k == len(mo) and k > 0 and len(le) == 0 and len(me) == 0):
        raise HypothesisError(
            "non-vanishing hypothesis not met: need l(λ_o) = l(μ_o) > 0 and l(λ_e) = l(μ_e) = 0")
    lam_o = sorted(lo.parts)
    mu_o = sorted(mo.parts)
    ops = []
    for i in range(1, k + 1):
        ops.append(("left", (f"in{i}", lam_o[k - i])))
    # S_1 starts at its left end; tails of the repeated parts of λ join it
    cur = "in1"
    for n, w in enumerate(list(loo.parts) + list(lee.parts)):
        ops.append(("join_fork", (w, cur, f"S1.{n}")))
        cur = f"S1.{n}"
    for i in range(1, k):
        ops.append(("cut_join", (cur, mu_o[i - 1], f"out{i}", f"in{i + 1}", f"S{i + 1}")))
        cur = f"S{i + 1}"
    for n, w in enumerate(list(moo.parts) + list(mee.parts)):
        ops.append(("cut_fork", (cur, w, f"Sk.{n}")))
        cur = f"Sk.{n}"

    if g:
        # the latest moment at which some odd edge of weight ≥ 3 is active
        spot = None
        b = CoverBuilder()
        for pos in range(len(ops) + 1):
            if pos:
                name, args = ops[pos - 1]
                getattr(b, name)(*args)
            odd = [(-w, h) for h, (_, w) in b.active.items() if w % 2 and w >= 3]
            if odd:
                spot = (pos, min(odd)[1])
        if spot is None:
            raise HypothesisError(
                "non-vanishing hypothesis not met: no odd edge of weight >= 3 can carry a circle")
        pos, handle = spot
        circles = [("circle", (handle, 1, handle))] * g
        ops = ops[:pos] + circles + ops[pos:]

    cover = _replay(ops).finish()
    report = validate_cover(cover, g, lam, mu)
    if not report or cover.r != r or not is_universally_enhanced(cover):
        raise LemmaViolation(f"lemma violation: construction failed ({report.clause})")
    return cover


def _block_ops(tag: str, j: int, upper_in: str, lower_in: str,
               upper_out: str, lower_out: str) -> list:
    """A block of j weight-1 strings: a fork tail, j − 1 bridges, a fork tail."""
    ops = []
    ins = [upper_in] + [f"{tag}.in{t}" for t in range(2, j)] + [lower_in]
    outs = [upper_out] + [f"{tag}.out{t}" for t in range(2, j)] + [lower_out]
    for t in range(2, j):
        ops.append(("left", (ins[t - 1], 1)))
    ops.append(("join_fork", (1, ins[0], f"{tag}.S1")))
    for t in range(1, j):
        ops.append(("cut_join", (f"{tag}.S{t}", 1, outs[t - 1], ins[t], f"{tag}.S{t + 1}")))
    ops.append(("cut_fork", (f"{tag}.S{j}", 1, outs[j - 1])))
    return ops


def block_sizes(m: int) -> list[int]:
    """Strings per block, chain order: the residue block first, then 1⁴ blocks."""
    if m <= 3:
        raise ValueError(f"block family needs m > 3, got {m}")
    n = (m - 1) // 3
    first = {1: 2, 2: 3, 0: 4}[m % 3]
    return [first] + [2] * (n - 1)


def build_block_family(m: int):
    """Universal covers of type (0, 1^m, 1^m): chained blocks in every x-order."""
    sizes = block_sizes(m)
    n = len(sizes)
    mm = Partition((1,) * m)
    for order in permutations(range(n)):
        pos = {c: p for p, c in enumerate(order)}
        ops = []
        for c in order:
            # link c-1 -> c feeds the upper string, link c -> c+1 the lower one
            up_in, up_out = f"b{c}.uin", f"b{c}.uout"
            lo_in, lo_out = f"b{c}.lin", f"b{c}.lout"
            if c > 0:
                if pos[c - 1] < pos[c]:
                    up_in = f"link{c - 1}"
                else:
                    up_out = f"link{c - 1}"
            if c < n - 1:
                if pos[c] < pos[c + 1]:
                    lo_out = f"link{c}"
                else:
                    lo_in = f"link{c}"
            block = []
            for name in (up_in, lo_in):
                if not name.startswith("link"):
                    block.append(("left", (name, 1)))
            ops += block + _block_ops(f"b{c}", sizes[c], up_in, lo_in, up_out, lo_out)
        cover = _replay(ops).finish()
        if not validate_cover(cover, 0, mm, mm) or not is_universally_enhanced(cover):
            raise LemmaViolation("lemma violation: glued block cover is not universal")
        yield cover


def block_family_bound(m: int) -> int:
    return math.factorial((m - 1) // 3)
