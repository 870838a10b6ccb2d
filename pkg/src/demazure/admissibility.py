"""Splittings of a weight and the r-admissibility test.

A split of mu into k parts is a tuple (mu_1, ..., mu_k) summing to mu.
Pre-admissibility asks every part to inherit the sign of mu against each
positive root (zero pairing forces all parts to pair to zero).  On top of
that, r-admissibility runs two counting conditions on the per-root value
profiles; condition A compares the remainder class of the largest value
against the weighted multiplicities below it, condition B bounds how far
the values may spread when mu itself pairs large.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .rootdata import Root, RootSystem
from .weights import finite_dominance


@dataclass(frozen=True)
class RootProfile:
    """Value profile of one (root, sign) against the parts of a split.

    values[i] = -mu_i(h_alpha) for sign '+', +mu_i(h_alpha) for sign '-';
    x is the largest value, t = x - min, counts[j] = #{i : values[i] = x - j}
    (interior zeros allowed).  m(r) is the representative of x in
    (0, d*r] modulo d*r.
    """

    root: Root
    sign: str
    d: int
    values: tuple[int, ...]

    @cached_property
    def x(self) -> int:
        return max(self.values)

    @cached_property
    def t(self) -> int:
        return self.x - min(self.values)

    @cached_property
    def counts(self) -> tuple[int, ...]:
        return tuple(sum(1 for v in self.values if v == self.x - j)
                     for j in range(self.t + 1))

    def m(self, r: int) -> int:
        if r < 1:
            raise ValueError("r must be >= 1")
        return (self.x - 1) % (self.d * r) + 1

    def weighted_count(self) -> int:
        return sum(j * c for j, c in enumerate(self.counts))


@dataclass(frozen=True)
class ConditionRecord:
    profile: RootProfile
    condition_a: bool
    condition_b: bool | None  # None when not applicable

    @property
    def ok(self) -> bool:
        return self.condition_a and self.condition_b is not False


@dataclass(frozen=True)
class AdmissibilityReport:
    mu: tuple[int, ...]
    split: tuple[tuple[int, ...], ...]
    r: int
    preadmissible: bool
    sign_witnesses: tuple  # (root, part index, part pairing) breaking inheritance
    records: tuple[ConditionRecord, ...]

    @property
    def k(self) -> int:
        return len(self.split)

    @property
    def admissible(self) -> bool:
        return self.preadmissible and all(rec.ok for rec in self.records)

    @property
    def failures(self) -> tuple[ConditionRecord, ...]:
        return tuple(rec for rec in self.records if not rec.ok)


def _check_split(rs: RootSystem, mu, split) -> None:
    if len(split) < 1:
        raise ValueError("split needs at least one part")
    if any(len(part) != rs.rank for part in split):
        raise ValueError("part length does not match the rank")
    total = tuple(sum(cs) for cs in zip(*split))
    if total != tuple(mu):
        raise ValueError(f"split sums to {total}, not {tuple(mu)}")


def is_preadmissible(rs: RootSystem, mu, split):
    """Sign inheritance of every part against every positive root.

    Returns (flag, witnesses); a witness is (root, part index, pairing).
    """
    _check_split(rs, mu, split)
    witnesses = []
    for root in rs.positive_roots:
        pair = rs.pairing(mu, root)
        for idx, part in enumerate(split):
            v = rs.pairing(part, root)
            if (pair > 0 and v < 0) or (pair < 0 and v > 0) or (pair == 0 and v != 0):
                witnesses.append((root, idx, v))
    return not witnesses, tuple(witnesses)


def _applicable_signs(pair: int):
    if pair > 0:
        return ("-",)
    if pair < 0:
        return ("+",)
    return ("+", "-")


def root_profile(rs: RootSystem, split, root: Root, sign: str) -> RootProfile:
    values = tuple((-1 if sign == "+" else 1) * rs.pairing(part, root)
                   for part in split)
    return RootProfile(root, sign, rs.d(root), values)


def is_r_admissible(rs: RootSystem, mu, split, r: int) -> AdmissibilityReport:
    """Run the admissibility conditions at spread parameter r >= 1.

    Condition A (both signs): m(r) * k > sum_j j * counts[j].
    Condition B (roots with mu(h_alpha) > k*d*r only): x >= t + d*r.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    _check_split(rs, mu, split)
    k = len(split)
    pre, witnesses = is_preadmissible(rs, mu, split)
    records = []
    if pre:
        for root in rs.positive_roots:
            pair = rs.pairing(mu, root)
            d = rs.d(root)
            for sign in _applicable_signs(pair):
                prof = root_profile(rs, split, root, sign)
                cond_a = prof.m(r) * k > prof.weighted_count()
                cond_b = None
                if sign == "-" and pair > k * d * r:
                    cond_b = prof.x >= prof.t + d * r
                records.append(ConditionRecord(prof, cond_a, cond_b))
    return AdmissibilityReport(tuple(mu), tuple(tuple(p) for p in split), r,
                               pre, witnesses, tuple(records))


def minimal_r(rs: RootSystem, mu, split, r_max: int | None = None):
    """Smallest r >= 1 making the split r-admissible, None if the split is
    not even pre-admissible (or r_max cuts the scan short).

    For r at least the largest profile value x the conditions always hold:
    m(r) = x makes condition A read x*k > k*x - sum(values) which is the
    positivity of the pairing, and the premise of condition B fails since
    mu(h_alpha) <= k*x <= k*d*r.  So the scan can stop at max(x).
    """
    pre, _ = is_preadmissible(rs, mu, split)
    if not pre:
        return None
    stop = 1
    for root in rs.positive_roots:
        pair = rs.pairing(mu, root)
        for sign in _applicable_signs(pair):
            stop = max(stop, root_profile(rs, split, root, sign).x)
    if r_max is not None:
        stop = min(stop, r_max)
    for r in range(1, stop + 1):
        if is_r_admissible(rs, mu, split, r).admissible:
            return r
    return None


# -- searching for splits ----------------------------------------------------

def _compositions(total: int, k: int):
    """Weak compositions of total into k parts, earlier parts greedy-first."""
    if k == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def enumerate_dominant_splits(rs: RootSystem, lam, k: int):
    """All splits of a dominant lam into k dominant parts, coordinatewise.

    Deterministic order: per node, compositions give earlier parts the
    larger share first; nodes vary with the first node outermost."""
    if not rs.is_dominant(lam):
        raise ValueError("enumerate_dominant_splits needs a dominant weight")
    if k < 1:
        raise ValueError("k must be >= 1")
    for combo in itertools.product(*[tuple(_compositions(c, k)) for c in lam]):
        yield tuple(tuple(comp[j] for comp in combo) for j in range(k))


def pull_back(rs: RootSystem, word, split):
    """Carry a split along the inverse of the Weyl word (partwise)."""
    inverse = tuple(reversed(word))
    return tuple(rs.weyl_apply(inverse, part) for part in split)


def find_1_admissible(rs: RootSystem, mu, k: int):
    """First 1-admissible split of mu into k parts, searching dominant
    splits of the dominant conjugate in enumeration order; None if the
    whole enumeration fails."""
    lam, word = finite_dominance(rs, mu)
    for split in enumerate_dominant_splits(rs, lam, k):
        cand = pull_back(rs, word, split)
        if is_r_admissible(rs, mu, cand, 1).admissible:
            return cand
    return None


def balanced_split(rs: RootSystem, mu, k: int) -> tuple[tuple[int, ...], ...]:
    """The box-filling split: conjugate dominant, give every part the
    coordinatewise quotient by k, then hand out the remainder one
    fundamental weight at a time round-robin (the pointer runs on across
    nodes), and pull back."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lam, word = finite_dominance(rs, mu)
    boxes = [[c // k for c in lam] for _ in range(k)]
    pointer = 0
    for node in range(rs.rank):
        for _ in range(lam[node] % k):
            boxes[pointer % k][node] += 1
            pointer += 1
    return pull_back(rs, word, tuple(tuple(b) for b in boxes))


# -- profile scans -------------------------------------------------------------

@dataclass(frozen=True)
class ScanRecord:
    lam: tuple[int, ...]
    k: int
    admissible_1: bool
    t_max: int
    escape: bool  # some profile has t = 2 and m(1) = 1


@dataclass(frozen=True)
class ScanReport:
    records: tuple[ScanRecord, ...]

    @property
    def t_bound(self) -> int:
        return max((rec.t_max for rec in self.records), default=0)

    @property
    def missing_escapes(self) -> tuple[ScanRecord, ...]:
        return tuple(r for r in self.records if not r.admissible_1 and not r.escape)


def profile_bound_scan(rs: RootSystem, coord_bound: int, k_bound: int) -> ScanReport:
    """Balanced-split profiles over all dominant weights with coordinates
    <= coord_bound and 1 <= k <= k_bound: records the largest spread t and
    whether non-1-admissible cases exhibit a profile with t = 2, m(1) = 1."""
    records = []
    for lam in itertools.product(range(coord_bound + 1), repeat=rs.rank):
        for k in range(1, k_bound + 1):
            split = balanced_split(rs, lam, k)
            profs = [root_profile(rs, split, root, sign)
                     for root in rs.positive_roots
                     for sign in _applicable_signs(rs.pairing(lam, root))]
            t_max = max(p.t for p in profs)
            escape = any(p.t == 2 and p.m(1) == 1 for p in profs)
            adm = is_r_admissible(rs, lam, split, 1).admissible
            records.append(ScanRecord(tuple(lam), k, adm, t_max, escape))
    return ScanReport(tuple(records))
