"""Pairwise sweep engine for the optimized axiom checkers.

Every binary axiom here is symmetric in (A, B), so exhaustive scans walk the
unordered pairs A <= B; that covers all 4^m ordered pairs and still yields the
lexicographically smallest witness.  Past the exhaustive limit a seeded sample
is used instead, always topped up with the structured pairs (A, ¬A), (A, ∅),
(A, Θ) and (A, A) for every A.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass


def derive_seed(*parts) -> int:
    """Stable 64-bit stream seed from a tuple of labels and ints."""
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class SweepPolicy:
    """How pairwise axiom sweeps are executed.

    Frames with at most ``exhaustive_limit`` atoms are always swept in full;
    larger ones draw ``samples`` seeded pairs plus the structured pairs.
    ``force_exhaustive`` overrides the limit.
    """

    exhaustive_limit: int = 8
    samples: int = 1_000_000
    seed: int = 0
    force_exhaustive: bool = False


DEFAULT_POLICY = SweepPolicy()


def pair_samples(m: int, policy: SweepPolicy | None) -> list[tuple[int, int]] | None:
    """Sampled (A, B) list for big frames, or None when the sweep is exhaustive."""
    policy = policy or DEFAULT_POLICY
    if policy.force_exhaustive or m <= policy.exhaustive_limit:
        return None
    size = 1 << m
    full = size - 1
    pairs = []
    for a in range(size):
        pairs.append((a, full ^ a))
        pairs.append((a, 0))
        pairs.append((a, full))
        pairs.append((a, a))
    rng = random.Random(derive_seed("pair-sweep", policy.seed, m))
    for _ in range(policy.samples):
        pairs.append((rng.randrange(size), rng.randrange(size)))
    return pairs


def first_union_hom_violation(t, size, pairs):
    """First (A, B) with t(A∪B) != t(A) ∪ t(B)."""
    if pairs is None:
        for a in range(size):
            ta = t[a]
            for b in range(a, size):
                if t[a | b] != ta | t[b]:
                    return a, b
        return None
    for a, b in pairs:
        if t[a | b] != t[a] | t[b]:
            return a, b
    return None


def first_inter_hom_violation(t, size, pairs):
    """First (A, B) with t(A∩B) != t(A) ∩ t(B)."""
    if pairs is None:
        for a in range(size):
            ta = t[a]
            for b in range(a, size):
                if t[a & b] != ta & t[b]:
                    return a, b
        return None
    for a, b in pairs:
        if t[a & b] != t[a] & t[b]:
            return a, b
    return None


def first_inter_bound_violation(t, size, pairs):
    """First (A, B) with t(A∩B) ⊄ t(A) ∩ t(B)."""
    if pairs is None:
        for a in range(size):
            ta = t[a]
            for b in range(a, size):
                if t[a & b] & ~(ta & t[b]):
                    return a, b
        return None
    for a, b in pairs:
        if t[a & b] & ~(t[a] & t[b]):
            return a, b
    return None


def first_union_bound_violation(t, size, pairs):
    """First (A, B) with t(A) ∪ t(B) ⊄ t(A∪B)."""
    if pairs is None:
        for a in range(size):
            ta = t[a]
            for b in range(a, size):
                if (ta | t[b]) & ~t[a | b]:
                    return a, b
        return None
    for a, b in pairs:
        if (t[a] | t[b]) & ~t[a | b]:
            return a, b
    return None


def first_overlap_violation(t, size, pairs):
    """First A != B whose images intersect."""
    if pairs is None:
        for a in range(size):
            ta = t[a]
            if not ta:
                continue
            for b in range(a + 1, size):
                if ta & t[b]:
                    return a, b
        return None
    for a, b in pairs:
        if a != b and t[a] & t[b]:
            return a, b
    return None


def first_mixed_union_violation(t, size, pairs):
    """First (A, B) with t(A∩B) ∪ t(A∪B) ⊄ t(A) ∪ t(B)."""
    if pairs is None:
        for a in range(size):
            ta = t[a]
            for b in range(a, size):
                if (t[a & b] | t[a | b]) & ~(ta | t[b]):
                    return a, b
        return None
    for a, b in pairs:
        if (t[a & b] | t[a | b]) & ~(t[a] | t[b]):
            return a, b
    return None


def first_mixed_inter_violation(t, size, pairs):
    """First (A, B) with t(A∩B) ∩ t(A∪B) ⊄ t(A) ∩ t(B)."""
    if pairs is None:
        for a in range(size):
            ta = t[a]
            for b in range(a, size):
                if t[a & b] & t[a | b] & ~(ta & t[b]):
                    return a, b
        return None
    for a, b in pairs:
        if t[a & b] & t[a | b] & ~(t[a] & t[b]):
            return a, b
    return None


def first_compat_violation(amb, inc, size, pairs):
    """First (A, B) with a(A) ∪ a(B) ⊄ i(A∪B) ∪ a(A∪B)."""
    if pairs is None:
        for a in range(size):
            ta = amb[a]
            for b in range(a, size):
                u = a | b
                if (ta | amb[b]) & ~(inc[u] | amb[u]):
                    return a, b
        return None
    for a, b in pairs:
        u = a | b
        if (amb[a] | amb[b]) & ~(inc[u] | amb[u]):
            return a, b
    return None
