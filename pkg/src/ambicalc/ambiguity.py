"""Qualitative ambiguity: the situations where a proposition is undetermined.

An ambiguity measure vanishes on ∅, is invariant under complement, and its
images at A∩B and A∪B are bounded by the images at A and B, union-wise and
intersection-wise.  The gap upper(A) − lower(A) of any interval structure is
one such measure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantFailure
from .frames import Frame, SituationSpace
from .interval import IntervalStructure, SetValuedMap
from .reports import AxiomReport, Witness, failed, passed
from .sweeps import (
    SweepPolicy,
    first_mixed_inter_violation,
    first_mixed_union_violation,
    pair_samples,
)


@dataclass(frozen=True)
class AmbiguityMap:
    map: SetValuedMap

    @property
    def frame(self) -> Frame:
        return self.map.frame

    @property
    def space(self) -> SituationSpace:
        return self.map.space


def check_ambiguity_axioms(m: SetValuedMap, policy: SweepPolicy | None = None) -> AxiomReport:
    """Axioms a1 (empty at ∅), a2 (complement symmetry), a3.1/a3.2 (the two
    mixed bounds), plus the derived a4 (empty at Θ)."""
    t = m.table
    size = len(t)
    fr = m.frame
    sp = m.space
    full = fr.full
    verdicts = []

    if t[0] == 0:
        verdicts.append(passed("a1"))
    else:
        verdicts.append(
            failed("a1", Witness(subset_a=0, detail=f"image of ∅ is {sp.format_subset(t[0])}"))
        )

    hit = None
    for a in range(size):
        if t[a] != t[full ^ a]:
            hit = a
            break
    if hit is None:
        verdicts.append(passed("a2"))
    else:
        detail = (
            f"A={fr.format_subset(hit)}: image {sp.format_subset(t[hit])} differs from "
            f"image of ¬A {sp.format_subset(t[full ^ hit])}"
        )
        verdicts.append(failed("a2", Witness(subset_a=hit, detail=detail)))

    pairs = pair_samples(fr.m, policy)
    pair_hit = first_mixed_union_violation(t, size, pairs)
    if pair_hit is None:
        verdicts.append(passed("a3.1"))
    else:
        a, b = pair_hit
        detail = (
            f"A={fr.format_subset(a)}, B={fr.format_subset(b)}: "
            f"a(A∩B)∪a(A∪B)={sp.format_subset(t[a & b] | t[a | b])} "
            f"⊄ a(A)∪a(B)={sp.format_subset(t[a] | t[b])}"
        )
        verdicts.append(failed("a3.1", Witness(subset_a=a, subset_b=b, detail=detail)))

    pair_hit = first_mixed_inter_violation(t, size, pairs)
    if pair_hit is None:
        verdicts.append(passed("a3.2"))
    else:
        a, b = pair_hit
        detail = (
            f"A={fr.format_subset(a)}, B={fr.format_subset(b)}: "
            f"a(A∩B)∩a(A∪B)={sp.format_subset(t[a & b] & t[a | b])} "
            f"⊄ a(A)∩a(B)={sp.format_subset(t[a] & t[b])}"
        )
        verdicts.append(failed("a3.2", Witness(subset_a=a, subset_b=b, detail=detail)))

    if t[full] == 0:
        verdicts.append(passed("a4"))
    else:
        verdicts.append(
            failed(
                "a4",
                Witness(subset_a=full, detail=f"image of Θ is {sp.format_subset(t[full])}"),
            )
        )
    return AxiomReport(tuple(verdicts))


def ambiguity_from_interval(s: IntervalStructure) -> AmbiguityMap:
    """Gap map upper(A) ∩ ¬lower(A); guaranteed to be an ambiguity measure."""
    table = tuple(u & ~lo for lo, u in zip(s.lower.table, s.upper.table))
    amb = AmbiguityMap(SetValuedMap(s.frame, s.space, table))
    report = check_ambiguity_axioms(amb.map)
    if not report.ok:
        raise InternalInvariantFailure(
            f"interval gap violates ambiguity axioms: {report.failed_axioms()}"
        )
    return amb
