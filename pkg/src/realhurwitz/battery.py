"""The acceptance battery, shared by ``verify`` and the test suite.

Each check returns a CriterionResult; ``passed`` is exact (no tolerances).
"""
from __future__ import annotations

import math
import time
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .enhanced import (
    HypothesisError,
    block_family_bound,
    build_block_family,
    build_nonvanishing_cover,
    enhanced_number,
    enumerate_universal,
    is_universally_enhanced,
)
from .oracle import (
    CONJUGATED_PAIR,
    EVEN_REAL_0FIX,
    EVEN_REAL_2FIX,
    ODD_REAL,
    LemmaViolation,
    TransitionDescriptor,
    _real_decompose_raw,
    _three_cycle_triples,
    _apply_3cycle,
    count_fixed_target_factorizations,
    local_multiplicity_census,
    real_configuration,
    real_tally,
)
from .perms import (
    Partition,
    SignSplitting,
    involutions,
    partitions,
    tail_decomposition,
    tcompose,
    tinverse,
    treverses,
)
from .tropical.covers import validate_cover
from .tropical.enumerate import enumerate_enhanced_covers
from .tropical.templates import CUT_CUT, CUT_JOIN, JOIN_JOIN, PairTemplate, by_shape


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.number} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def battery_cases(max_d: int, max_r: int, min_d: int = 1) -> Iterator[tuple[int, Partition, Partition, int]]:
    """All (g, λ, μ, r) with min_d ≤ d ≤ max_d, equal length parity and 1 ≤ r ≤ max_r."""
    for d in range(min_d, max_d + 1):
        parts = list(partitions(d))
        for lam in parts:
            for mu in parts:
                g = 0
                while True:
                    total = len(lam) + len(mu) + 2 * g - 2
                    if total // 2 > max_r:
                        break
                    if total % 2 == 0 and total > 0:
                        yield g, lam, mu, total // 2
                    g += 1


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


# 1 --------------------------------------------------------------------------

def check_fixed_target(limit_seconds: float = 10.0) -> CriterionResult:
    def run():
        start = time.perf_counter()
        rows = [(d, count_fixed_target_factorizations(d), d ** ((d - 3) // 2)) for d in (3, 5, 7)]
        elapsed = time.perf_counter() - start
        ok = all(n == e for _, n, e in rows) and elapsed < limit_seconds
        return ok, ", ".join(f"d={d} N={n} expected={e}" for d, n, e in rows)
    return _timed(1, "fixed-target factorizations", run)


# 2, 3, 4 --------------------------------------------------------------------

@dataclass
class BatteryRow:
    g: int
    lam: Partition
    mu: Partition
    signs: SignSplitting
    oracle: object
    tropical: int
    enhanced: int


def run_correspondence_battery(max_d: int = 6, max_r: int = 3) -> list[BatteryRow]:
    rows = []
    enhanced_cache: dict = {}
    for g, lam, mu, r in battery_cases(max_d, max_r):
        key = (g, lam, mu)
        if key not in enhanced_cache:
            enhanced_cache[key] = enhanced_number(g, lam, mu)
        fact = math.factorial(lam.size)
        for signs in SignSplitting.all_of_length(r):
            raw = real_tally(lam, r, signs).get(mu, 0)
            tropical = sum(c.multiplicity for c in enumerate_enhanced_covers(g, lam, mu, signs))
            rows.append(BatteryRow(g, lam, mu, signs, Fraction(raw, fact), tropical,
                                   enhanced_cache[key]))
    return rows


def check_correspondence(rows: list[BatteryRow], seconds: float, limit_seconds: float = 600.0) -> CriterionResult:
    bad = [r for r in rows if r.oracle != r.tropical or r.oracle.denominator != 1]
    detail = f"{len(rows) - len(bad)}/{len(rows)} cases agree"
    if bad:
        b = bad[0]
        detail += f"; first mismatch g={b.g} λ={b.lam} μ={b.mu} s={b.signs}: oracle={b.oracle} tropical={b.tropical}"
    return CriterionResult(2, "correspondence theorem", not bad and seconds < limit_seconds,
                           detail + f"; battery time {seconds:.0f}s", seconds)


def check_lower_bound(rows: list[BatteryRow]) -> CriterionResult:
    bad = [r for r in rows if not (r.enhanced <= r.oracle and (r.oracle - r.enhanced) % 2 == 0)]
    detail = f"{len(rows) - len(bad)}/{len(rows)} cases satisfy E <= H and E = H mod 2"
    if bad:
        b = bad[0]
        detail += f"; first failure g={b.g} λ={b.lam} μ={b.mu} s={b.signs}: E={b.enhanced} H={b.oracle}"
    return CriterionResult(3, "lower bound and parity", not bad, detail)


def check_sign_invariance(rows: list[BatteryRow]) -> CriterionResult:
    groups = defaultdict(set)
    for r in rows:
        groups[(r.g, r.lam, r.mu, r.signs.s)].add(r.oracle)
    bad = [k for k, v in groups.items() if len(v) != 1]
    detail = f"{len(groups) - len(bad)}/{len(groups)} (g, λ, μ, s) groups constant"
    if bad:
        detail += f"; first failure {bad[0]}: {sorted(groups[bad[0]])}"
    return CriterionResult(4, "sign-arrangement invariance", not bad, detail)


# 5 --------------------------------------------------------------------------

def check_unique_decomposition(max_d: int = 6) -> CriterionResult:
    def run():
        checked = 0
        violations = 0
        for d in range(3, max_d + 1):
            invs = [g.images for g in involutions(d)]
            triples = _three_cycle_triples(d)
            # (σ, γ) with γ reversing σ are exactly σ = γ∘δ for involutions γ, δ
            for gam in invs:
                for delta in invs:
                    sigma = tcompose(gam, delta)
                    sinv = tinverse(sigma)
                    for sign in (1, -1):
                        gu = gam if sign == 1 else delta  # γ∘σ = δ
                        for t in triples:
                            if not treverses(gu, _apply_3cycle(sigma, sinv, t)):
                                continue
                            checked += 1
                            try:
                                _real_decompose_raw(sigma, gu, t)
                            except LemmaViolation:
                                violations += 1
        return violations == 0, f"{checked} admissible (σ, γ, τ, sign) for d <= {max_d}, {violations} violations"
    return _timed(5, "unique real decomposition", run)


# 6 --------------------------------------------------------------------------

_KIND = {"B": ODD_REAL, "U": EVEN_REAL_0FIX, "R": EVEN_REAL_2FIX}


def template_descriptor(t: PairTemplate, w: dict[str, int]) -> TransitionDescriptor:
    """The census descriptor a positive template produces at weights w."""
    c = dict(t.slots)

    def kind(slot):
        return (_KIND[c[slot]], w[slot])

    dpair = (CONJUGATED_PAIR, w.get("D", 0))
    if t.structure == JOIN_JOIN:
        incoming, bridge, outgoing = [dpair, kind("X")], [kind("Z")], [kind("O")]
    elif t.structure == CUT_CUT:
        incoming, bridge, outgoing = [kind("X")], [kind("Z")], [kind("Y"), dpair]
    elif t.structure == CUT_JOIN:
        incoming, bridge, outgoing = [kind("X"), kind("W")], [kind("Z")], [kind("Y"), kind("O")]
    else:
        incoming, bridge, outgoing = [kind("X")], [kind("Z"), kind("Z2")], [kind("O")]
    return TransitionDescriptor(tuple(incoming), tuple(bridge), tuple(outgoing), t.sign)


def template_blocks(t: PairTemplate, w: dict[str, int]) -> list[tuple[str, int]]:
    """Cycles of σ that realise the template's incoming slots."""
    return [(k, size) for k, size in template_descriptor(t, w).incoming]


# (shape, weights, expected count as printed in the local multiplicity table)
CENSUS_CASES = [
    ("i", dict(D=1, X=2, Z=2, O=4), 4),
    ("i", dict(D=2, X=2, Z=4, O=6), 8),
    ("ii", dict(D=1, X=1, Z=2, O=3), 2),
    ("ii", dict(D=2, X=1, Z=4, O=5), 4),
    ("iii", dict(X=4, Y=2, Z=2, D=1), 2),
    ("iv", dict(X=3, Y=1, Z=2, D=1), 1),
    ("v", dict(X=6, Y=2, Z=4, W=2, O=6), 4),
    ("vi", dict(X=4, Y=1, Z=3, W=2, O=5), 4),
    ("vii", dict(X=4, Y=1, Z=3, W=1, O=4), 2),
    ("viii", dict(X=4, Y=2, Z=2, W=1, O=3), 2),
    ("ix", dict(X=3, Y=2, Z=1, W=2, O=3), 2),
    ("x", dict(X=3, Y=1, Z=2, W=2, O=4), 2),
    ("xi", dict(X=3, Y=2, Z=1, W=1, O=2), 1),
    ("xii", dict(X=3, Y=1, Z=2, W=1, O=3), 1),
    ("xiii", dict(X=3, Z=1, Z2=2, O=3), 1),
    ("xiv", dict(X=6, Z=2, Z2=4, O=6), 4),
    ("xiv", dict(X=4, Z=2, Z2=2, O=4), 2),
]


def census_observation(shape: str, w: dict[str, int], sign: int) -> tuple[int, int]:
    """(census count, table count) for a configuration built for the shape."""
    t = by_shape(shape, 1)
    if not t.weights_ok(w):
        raise ValueError(f"weights {w} do not fit shape {shape}")
    sigma, gamma = real_configuration(template_blocks(t, w), sign)
    census = local_multiplicity_census(sigma, gamma, sign)
    desc = template_descriptor(t, w)
    desc = TransitionDescriptor(desc.incoming, desc.bridge, desc.outgoing, sign)
    return census.get(desc, 0), t.local_count(w)


def check_census() -> CriterionResult:
    def run():
        bad = []
        for shape, w, expected in CENSUS_CASES:
            for sign in (1, -1):
                got, table = census_observation(shape, w, sign)
                if got != expected or table != expected:
                    bad.append(f"({shape}) {w} sign {sign:+d}: census {got}, expected {expected}")
        n = 2 * len(CENSUS_CASES)
        detail = f"{n - len(bad)}/{n} configurations match"
        if bad:
            detail += "; " + "; ".join(bad[:3])
        return not bad, detail
    return _timed(6, "local multiplicity census", run)


# 7 --------------------------------------------------------------------------

def nonvanishing_cases(max_d: int = 8, max_r: int = 5) -> Iterator[tuple[int, Partition, Partition]]:
    """Battery inputs satisfying l(λ_o) = l(μ_o) > 0 and l(λ_e) = l(μ_e) = 0.

    Degree 1 is left out: no cover of degree 1 has a 3-valent vertex.
    """
    for g, lam, mu, r in battery_cases(max_d, max_r, min_d=2):
        _, _, lo, le = tail_decomposition(lam)
        _, _, mo, me = tail_decomposition(mu)
        if len(lo) == len(mo) > 0 and not le and not me:
            yield g, lam, mu


def check_nonvanishing(max_d: int = 8, max_r: int = 5) -> CriterionResult:
    def run():
        bad = []
        n = 0
        for g, lam, mu in nonvanishing_cases(max_d, max_r):
            n += 1
            try:
                cover = build_nonvanishing_cover(g, lam, mu)
            except (HypothesisError, LemmaViolation) as exc:
                bad.append(f"g={g} λ={lam} μ={mu}: {exc}")
                continue
            keys = {u.canonical_key for u in enumerate_universal(g, lam, mu)}
            if not keys or cover.key() not in keys:
                bad.append(f"g={g} λ={lam} μ={mu}: construction not among {len(keys)} universal covers")
        detail = f"{n - len(bad)}/{n} inputs (d <= {max_d}, r <= {max_r}) have the construction among a nonempty enumeration"
        if bad:
            detail += "; " + bad[0]
        return not bad, detail
    return _timed(7, "non-vanishing", run)


# 8 --------------------------------------------------------------------------

def check_block_family(max_m: int = 13, max_enumerated: int = 7,
                       limit_seconds: float = 900.0) -> CriterionResult:
    def run():
        parts = []
        ok = True
        for m in range(4, max_m + 1):
            keys = set()
            for cover in build_block_family(m):
                mm = Partition((1,) * m)
                if not (validate_cover(cover, 0, mm, mm) and is_universally_enhanced(cover)):
                    ok = False
                keys.add(cover.key())
            bound = block_family_bound(m)
            ok &= len(keys) >= bound
            parts.append(f"m={m}: {len(keys)}>={bound}")
        start = time.perf_counter()
        for m in range(4, max_enumerated + 1):
            e = enhanced_number(0, (1,) * m, (1,) * m)
            bound = block_family_bound(m)
            ok &= e >= bound
            parts.append(f"E_0(1^{m},1^{m})={e}>={bound}")
        ok &= time.perf_counter() - start < limit_seconds
        return ok, ", ".join(parts)
    return _timed(8, "asymptotic block family", run)


def run_all(max_d: int = 6, max_r: int = 3, echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    results = []

    def emit(res):
        results.append(res)
        if echo:
            echo(res.line())

    emit(check_fixed_target())
    start = time.perf_counter()
    rows = run_correspondence_battery(max_d, max_r)
    seconds = time.perf_counter() - start
    emit(check_correspondence(rows, seconds))
    emit(check_lower_bound(rows))
    emit(check_sign_invariance(rows))
    emit(check_unique_decomposition(min(max_d, 6)))
    emit(check_census())
    emit(check_nonvanishing())
    emit(check_block_family())
    return results
