"""Factorization-side counts: real and complex double Hurwitz numbers with 3-cycles.

A real factorization of type (g, λ, μ) with signs s is a tuple
(γ, σ₁, τ₁, …, τ_r, σ₂) where

* σ₂∘τ_r∘…∘τ₁∘σ₁ = id, σ₁ has type λ, σ₂ has type μ, every τ_i is a 3-cycle;
* σ₁, τ₁, …, τ_r generate a transitive group;
* γ is an involution reversing σ₁, and γ_i reverses π_i = τ_i∘…∘τ₁∘σ₁ for every
  i, where γ₁ = γ (s₁ = +) or γ∘σ₁ (s₁ = −) and γ_{i+1} = γ_i if the sign does not
  change, γ_i∘π_i otherwise.

The real number is the count of such tuples divided by d!.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .perms import (
    Partition,
    Permutation,
    _perms_of_type_raw,
    _reversing_involutions_raw,
    as_partition,
    as_signs,
    check_degree,
    involutions,
    tcompose,
    tcycle_type,
    tcycles,
    tinverse,
    tis_involution,
    treverses,
)


class DegenerateBranchData(ValueError):
    """r is not a positive integer, or the profiles are inconsistent."""


class LemmaViolation(RuntimeError):
    """A statement that must always hold failed; reaching this is a bug."""


@dataclass(frozen=True)
class HurwitzCount:
    raw: int
    degree_factorial: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.raw, self.degree_factorial)

    def __str__(self) -> str:
        return str(self.value)


def branch_point_count(g: int, lam, mu) -> int:
    """Number r of interior branch points; validates the input."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise DegenerateBranchData(
            f"degenerate branch data: |λ|={lam.size} differs from |μ|={mu.size}")
    if g < 0:
        raise DegenerateBranchData(f"degenerate branch data: negative genus {g}")
    total = len(lam) + len(mu) + 2 * g - 2
    if total % 2:
        raise DegenerateBranchData(
            f"parity mismatch: l(λ)={len(lam)} and l(μ)={len(mu)} differ in parity")
    r = total // 2
    if r <= 0:
        raise DegenerateBranchData(f"degenerate branch data: r={r} must be positive")
    return r


def _prepare(g, lam, mu, signs=None):
    lam, mu = as_partition(lam), as_partition(mu)
    r = branch_point_count(g, lam, mu)
    check_degree(lam.size)
    if signs is not None:
        signs = as_signs(signs)
        if len(signs) != r:
            raise ValueError(f"need {r} signs, got {len(signs)} ({signs})")
    return lam, mu, r, signs


# ---------------------------------------------------------------------------
# depth-first search over real chains
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _three_cycle_triples(d: int) -> tuple[tuple[int, int, int], ...]:
    """(a, b, c) with a→b→c→a, a the smallest entry; 2·C(d,3) of them."""
    out = []
    for a in range(d):
        for b in range(a + 1, d):
            for c in range(b + 1, d):
                out.append((a, b, c))
                out.append((a, c, b))
    return tuple(out)


def _apply_3cycle(pi: tuple, pinv: tuple, t) -> tuple:
    """(τ∘π) for τ = (a b c)."""
    a, b, c = t
    new = list(pi)
    new[pinv[a]] = b
    new[pinv[b]] = c
    new[pinv[c]] = a
    return tuple(new)


def _merge(comp: tuple, t) -> tuple:
    roots = {comp[t[0]], comp[t[1]], comp[t[2]]}
    if len(roots) == 1:
        return comp
    low = min(roots)
    return tuple(low if x in roots else x for x in comp)


def _initial_comp(pi: tuple) -> tuple:
    comp = [0] * len(pi)
    for cyc in tcycles(pi):
        for x in cyc:
            comp[x] = cyc[0]
    return tuple(comp)


class _ChainSearch:
    """Tallies real chains by the cycle type of the final product."""

    def __init__(self, d: int, r: int, signs: tuple[int, ...]):
        self.d = d
        self.r = r
        self.signs = signs
        self.triples = _three_cycle_triples(d)
        self.admissible: dict = {}
        self.memo: dict = {}

    def steps(self, pi: tuple, gam: tuple):
        key = (pi, gam)
        hit = self.admissible.get(key)
        if hit is None:
            pinv = tinverse(pi)
            hit = []
            for t in self.triples:
                new = _apply_3cycle(pi, pinv, t)
                if treverses(gam, new):
                    hit.append((t, new))
            self.admissible[key] = hit
        return hit

    def tally(self, i: int, pi: tuple, gam: tuple, comp: tuple) -> Counter:
        """Chains continuing from step i (0-based) with partial product pi."""
        if i == self.r:
            out = Counter()
            if all(x == 0 for x in comp):
                out[tcycle_type(pi)] = 1
            return out
        key = (i, pi, gam, comp)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if i > 0 and self.signs[i] != self.signs[i - 1]:
            gam = tcompose(gam, pi)
        out = Counter()
        for t, new in self.steps(pi, gam):
            out.update(self.tally(i + 1, new, gam, _merge(comp, t)))
        self.memo[key] = out
        return out

    def root(self, sigma: tuple) -> Counter:
        total = Counter()
        comp = _initial_comp(sigma)
        for gam in _reversing_involutions_raw(sigma):
            g1 = gam if self.signs[0] == 1 else tcompose(gam, sigma)
            total.update(self.tally(0, sigma, g1, comp))
        return total


def _tally_chunk(args) -> Counter:
    d, r, signs, roots = args
    search = _ChainSearch(d, r, signs)
    total = Counter()
    for sigma in roots:
        total.update(search.root(sigma))
    return total


@lru_cache(maxsize=None)
def _real_tally_cached(lam_parts: tuple, r: int, signs: tuple) -> dict:
    return dict(_real_tally(lam_parts, r, signs, threads=1))


def _real_tally(lam_parts: tuple, r: int, signs: tuple, threads: int = 1) -> Counter:
    d = sum(lam_parts)
    if d < 3:
        return Counter()
    roots = _perms_of_type_raw(d, lam_parts)
    if threads <= 1 or len(roots) < 2:
        return _tally_chunk((d, r, signs, roots))
    chunks = [roots[k::threads] for k in range(threads)]
    total = Counter()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_tally_chunk, [(d, r, signs, c) for c in chunks if c]):
            total.update(part)
    return total


def real_tally(lam, r: int, signs, threads: int = 1) -> dict[Partition, int]:
    """Raw real-chain counts for every final profile μ at once."""
    lam = as_partition(lam)
    signs = as_signs(signs)
    if len(signs) != r:
        raise ValueError(f"need {r} signs, got {len(signs)}")
    if threads <= 1:
        raw = _real_tally_cached(lam.parts, r, signs.signs)
    else:
        raw = _real_tally(lam.parts, r, signs.signs, threads)
    return {Partition(k): v for k, v in raw.items()}


def _naive_real_count(lam: Partition, mu: Partition, r: int, signs: tuple) -> int:
    # Post-filter over every full sequence; reference only, tiny inputs.
    d = lam.size
    if d < 3:
        return 0
    triples = _three_cycle_triples(d)
    invs = [g.images for g in involutions(d)]
    count = 0
    for sigma in _perms_of_type_raw(d, lam.parts):
        for seq in product(triples, repeat=r):
            partials = []
            pi = sigma
            for t in seq:
                pi = _apply_3cycle(pi, tinverse(pi), t)
                partials.append(pi)
            if tcycle_type(tinverse(pi)) != mu.parts:
                continue
            comp = _initial_comp(sigma)
            for t in seq:
                comp = _merge(comp, t)
            if any(x != 0 for x in comp):
                continue
            for gam in invs:
                if not treverses(gam, sigma):
                    continue
                gi = gam if signs[0] == 1 else tcompose(gam, sigma)
                ok = treverses(gi, partials[0])
                for i in range(1, r):
                    if not ok:
                        break
                    if signs[i] != signs[i - 1]:
                        gi = tcompose(gi, partials[i - 1])
                    ok = tis_involution(gi) and treverses(gi, partials[i])
                if ok:
                    count += 1
    return count


def count_real_tuples(g, lam, mu, signs, method: str = "pruned", threads: int = 1) -> int:
    """|F̄^ℝ(g, λ, μ; s)|, the raw number of real factorization tuples."""
    lam, mu, r, signs = _prepare(g, lam, mu, signs)
    if method == "pruned":
        return real_tally(lam, r, signs, threads).get(mu, 0)
    if method == "naive":
        return _naive_real_count(lam, mu, r, signs.signs)
    raise ValueError(f"unknown method {method!r}")


def real_hurwitz_oracle(g, lam, mu, signs, threads: int = 1) -> HurwitzCount:
    lam, mu, r, signs = _prepare(g, lam, mu, signs)
    raw = count_real_tuples(g, lam, mu, signs, threads=threads)
    return HurwitzCount(raw, math.factorial(lam.size))


def iter_real_tuples(g, lam, mu, signs):
    """Yield every real tuple (γ, σ₁, (τ₁..τ_r), σ₂) as raw 0-based tuples."""
    lam, mu, r, signs = _prepare(g, lam, mu, signs)
    d = lam.size
    if d < 3:
        return
    s = signs.signs
    search = _ChainSearch(d, r, s)

    def rec(i, pi, gam, comp, taus):
        if i == r:
            if all(x == 0 for x in comp) and tcycle_type(pi) == mu.parts:
                yield tuple(taus), tinverse(pi)
            return
        if i > 0 and s[i] != s[i - 1]:
            gam = tcompose(gam, pi)
        for t, new in search.steps(pi, gam):
            taus.append(t)
            yield from rec(i + 1, new, gam, _merge(comp, t), taus)
            taus.pop()

    for sigma in _perms_of_type_raw(d, lam.parts):
        comp = _initial_comp(sigma)
        for gam in _reversing_involutions_raw(sigma):
            g1 = gam if s[0] == 1 else tcompose(gam, sigma)
            for taus, sigma2 in rec(0, sigma, g1, comp, []):
                yield gam, sigma, taus, sigma2


# ---------------------------------------------------------------------------
# complex count and fixed-target factorizations
# ---------------------------------------------------------------------------

def _complex_tally(lam_parts: tuple, r: int) -> Counter:
    d = sum(lam_parts)
    if d < 3:
        return Counter()
    triples = _three_cycle_triples(d)
    memo: dict = {}

    def rec(i, pi, comp):
        if i == r:
            out = Counter()
            if all(x == 0 for x in comp):
                out[tcycle_type(pi)] = 1
            return out
        key = (i, pi, comp)
        if key in memo:
            return memo[key]
        pinv = tinverse(pi)
        out = Counter()
        for t in triples:
            out.update(rec(i + 1, _apply_3cycle(pi, pinv, t), _merge(comp, t)))
        memo[key] = out
        return out

    total = Counter()
    for sigma in _perms_of_type_raw(d, lam_parts):
        total.update(rec(0, sigma, _initial_comp(sigma)))
    return total


def complex_hurwitz_oracle(g, lam, mu) -> HurwitzCount:
    """H^ℂ_g(λ, μ) with r 3-cycles, raw tuples over d!."""
    lam, mu, r, _ = _prepare(g, lam, mu)
    raw = _complex_tally(lam.parts, r).get(mu.parts, 0)
    return HurwitzCount(raw, math.factorial(lam.size))


def count_fixed_target_factorizations(d: int) -> int:
    """Sequences of (d−1)/2 3-cycles whose product τ_r∘…∘τ₁ is (1 2 … d)."""
    if d < 3 or d % 2 == 0:
        raise DegenerateBranchData(
            f"degenerate branch data: fixed-target count needs odd d >= 3, got {d}")
    check_degree(d)
    r = (d - 1) // 2
    target = tuple((x + 1) % d for x in range(d))
    triples = _three_cycle_triples(d)
    memo: dict = {}

    def rec(i, pi):
        # pi = τ_i∘…∘τ₁; the last factor is forced as target∘pi⁻¹
        if i == r - 1:
            rest = tcompose(target, tinverse(pi))
            return 1 if tcycle_type(rest) == (3,) + (1,) * (d - 3) else 0
        key = (i, pi)
        if key in memo:
            return memo[key]
        pinv = tinverse(pi)
        total = sum(rec(i + 1, _apply_3cycle(pi, pinv, t)) for t in triples)
        memo[key] = total
        return total

    return rec(0, tuple(range(d)))


# ---------------------------------------------------------------------------
# real decomposition of a 3-cycle and the local census
# ---------------------------------------------------------------------------

def _transposition(d: int, a: int, b: int) -> tuple:
    img = list(range(d))
    img[a], img[b] = b, a
    return tuple(img)


def _decomposition_candidates(t) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    # τ = (a b c) equals (a c)∘(a b) = (a b)∘(b c) = (b c)∘(a c); pairs are (τ̄₁, τ̄₂)
    a, b, c = t
    return [((a, b), (a, c)), ((b, c), (a, b)), ((a, c), (b, c))]


def _support_3cycle(tau: tuple) -> tuple[int, int, int]:
    moved = [x for x in range(len(tau)) if tau[x] != x]
    if len(moved) != 3:
        raise ValueError("τ must be a 3-cycle")
    a = moved[0]
    return a, tau[a], tau[tau[a]]


def _used_involution(sigma: tuple, gamma: tuple, sign: int) -> tuple:
    if not tis_involution(gamma):
        raise ValueError("γ must be an involution")
    if not treverses(gamma, sigma):
        raise ValueError("γ must reverse σ (γσγ = σ⁻¹)")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return gamma if sign == 1 else tcompose(gamma, sigma)


def _real_decompose_raw(sigma: tuple, gu: tuple, t) -> tuple[tuple[int, int], tuple[int, int]]:
    d = len(sigma)
    hits = [(t1, t2) for t1, t2 in _decomposition_candidates(t)
            if treverses(gu, tcompose(_transposition(d, *t1), sigma))]
    if len(hits) != 1:
        raise LemmaViolation(
            f"lemma violation: {len(hits)} real decompositions of {t} (σ={sigma}, γ={gu})")
    return hits[0]


def _parse_sign(sign) -> int:
    if sign in ("+", 1, "+1"):
        return 1
    if sign in ("-", -1, "-1"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def real_decompose_3cycle(sigma: Permutation, gamma: Permutation, tau: Permutation,
                          sign) -> tuple[Permutation, Permutation]:
    """The unique (τ̄₁, τ̄₂) with τ = τ̄₂∘τ̄₁ and τ̄₁∘σ real for the sign's involution."""
    sign = _parse_sign(sign)
    d = sigma.d
    if gamma.d != d or tau.d != d:
        raise ValueError("degree mismatch")
    gu = _used_involution(sigma.images, gamma.images, sign)
    t = _support_3cycle(tau.images)
    if not treverses(gu, tcompose(tau.images, sigma.images)):
        raise ValueError("τ∘σ is not real for the sign's involution")
    t1, t2 = _real_decompose_raw(sigma.images, gu, t)
    return Permutation(_transposition(d, *t1)), Permutation(_transposition(d, *t2))


ODD_REAL = "odd-real"
EVEN_REAL_0FIX = "even-real-0fix"
EVEN_REAL_2FIX = "even-real-2fix"
CONJUGATED_PAIR = "conjugated-pair"


def classify_cycles(p: tuple, gu: tuple, cycles=None) -> dict[tuple, tuple[str, int]]:
    """Kind of each cycle of a γ-real permutation, keyed by the cycle.

    Each member of a conjugated pair maps to the same ("conjugated-pair", k)
    label; callers de-duplicate by the pair.
    """
    out = {}
    for cyc in (cycles if cycles is not None else tcycles(p)):
        image = {gu[x] for x in cyc}
        if image != set(cyc):
            out[cyc] = (CONJUGATED_PAIR, len(cyc))
            continue
        fixed = sum(1 for x in cyc if gu[x] == x)
        if len(cyc) % 2:
            out[cyc] = (ODD_REAL, len(cyc))
        elif fixed == 0:
            out[cyc] = (EVEN_REAL_0FIX, len(cyc))
        elif fixed == 2:
            out[cyc] = (EVEN_REAL_2FIX, len(cyc))
        else:
            raise LemmaViolation(f"lemma violation: even real cycle {cyc} with {fixed} fixed points")
    return out


def _kinds(cycles: list[tuple], p: tuple, gu: tuple) -> tuple:
    """Sorted multiset of kinds, conjugated pairs counted once."""
    labels = classify_cycles(p, gu, tcycles(p))
    kinds = []
    seen = set()
    for cyc in cycles:
        if cyc in seen:
            continue
        seen.add(cyc)
        kind = labels[cyc]
        if kind[0] == CONJUGATED_PAIR:
            partner = _partner(cyc, p, gu)
            if partner in cycles:
                seen.add(partner)
            else:
                # half of a pair; recorded with a marker so that it shows up
                kind = ("conjugated-half", kind[1])
        kinds.append(kind)
    return tuple(sorted(kinds))


def _partner(cyc: tuple, p: tuple, gu: tuple) -> tuple:
    image = {gu[x] for x in cyc}
    for other in tcycles(p):
        if set(other) == image:
            return other
    raise LemmaViolation("lemma violation: conjugate cycle not found")


@dataclass(frozen=True)
class TransitionDescriptor:
    """What one admissible 3-cycle does to the cycles of σ.

    ``bridge`` lists the intermediate cycles of τ̄₁∘σ that τ̄₁ creates and τ̄₂
    consumes; kinds are read with respect to γ (sign +) or γ∘σ (sign −).
    """

    incoming: tuple
    bridge: tuple
    outgoing: tuple
    sign: int

    def __post_init__(self):
        for name in ("incoming", "bridge", "outgoing"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))

    @staticmethod
    def total(kinds) -> int:
        return sum(2 * k if kind == CONJUGATED_PAIR else k for kind, k in kinds)


def _touched(p: tuple, points) -> list[tuple]:
    pts = set(points)
    return [c for c in tcycles(p) if pts.intersection(c)]


def describe_transition(sigma: tuple, gu: tuple, t, sign: int) -> TransitionDescriptor:
    d = len(sigma)
    t1, t2 = _real_decompose_raw(sigma, gu, t)
    mid = tcompose(_transposition(d, *t1), sigma)
    final = tcompose(_transposition(d, *t2), mid)
    created = set(_touched(mid, t1))
    consumed = set(_touched(mid, t2))
    bridge = sorted(created & consumed)
    return TransitionDescriptor(
        incoming=_kinds(_touched(sigma, t), sigma, gu),
        bridge=_kinds(bridge, mid, gu),
        outgoing=_kinds(_touched(final, t), final, gu),
        sign=sign,
    )


def local_multiplicity_census(sigma: Permutation, gamma: Permutation,
                              sign) -> dict[TransitionDescriptor, int]:
    """Admissible 3-cycles at σ grouped by the transition they induce."""
    sign = _parse_sign(sign)
    if gamma.d != sigma.d:
        raise ValueError("degree mismatch")
    s, gam = sigma.images, gamma.images
    gu = _used_involution(s, gam, sign)
    d = len(s)
    out: Counter = Counter()
    if d < 3:
        return {}
    sinv = tinverse(s)
    for t in _three_cycle_triples(d):
        if treverses(gu, _apply_3cycle(s, sinv, t)):
            out[describe_transition(s, gu, t, sign)] += 1
    return dict(out)


def count_admissible_3cycles(sigma: Permutation, gamma: Permutation, sign) -> int:
    """Direct count of 3-cycles τ with τ∘σ real for the sign's involution."""
    sign = _parse_sign(sign)
    gu = _used_involution(sigma.images, gamma.images, sign)
    sinv = tinverse(sigma.images)
    return sum(1 for t in _three_cycle_triples(sigma.d)
               if treverses(gu, _apply_3cycle(sigma.images, sinv, t)))


def real_configuration(blocks, sign=1) -> tuple[Permutation, Permutation]:
    """Build (σ, γ) from blocks (kind, size); sign − makes γ∘σ carry the blocks.

    odd-real and even-real-2fix: γ(p_i) = p_{−i}; even-real-0fix: γ(p_i) = p_{1−i};
    conjugated-pair of size k: two k-cycles a, b with γ(a_i) = b_{−i}.
    With sign − the returned γ satisfies γ∘σ = γ₀, so the kinds hold for γ∘σ.
    """
    sign = _parse_sign(sign)
    cycles: list[list[int]] = []
    gmap: dict[int, int] = {}
    nxt = 0
    for kind, size in blocks:
        if size < 1:
            raise ValueError("block sizes must be positive")
        if kind == CONJUGATED_PAIR:
            a = list(range(nxt, nxt + size))
            b = list(range(nxt + size, nxt + 2 * size))
            nxt += 2 * size
            cycles += [a, b]
            for i in range(size):
                gmap[a[i]] = b[(-i) % size]
                gmap[b[(-i) % size]] = a[i]
            continue
        c = list(range(nxt, nxt + size))
        nxt += size
        cycles.append(c)
        if kind == ODD_REAL and size % 2 == 1 or kind == EVEN_REAL_2FIX and size % 2 == 0:
            shift = 0
        elif kind == EVEN_REAL_0FIX and size % 2 == 0:
            shift = 1
        else:
            raise ValueError(f"block {kind} of size {size} is inconsistent")
        for i in range(size):
            gmap[c[i]] = c[(shift - i) % size]
    d = nxt
    sigma = [0] * d
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            sigma[a] = b
    sigma_t = tuple(sigma)
    g0 = tuple(gmap[x] for x in range(d))
    if sign == 1:
        gamma = g0
    else:
        # want γ with γ∘σ = γ₀, i.e. γ = γ₀∘σ⁻¹
        gamma = tcompose(g0, tinverse(sigma_t))
    return Permutation(sigma_t), Permutation(gamma)
