"""Interval structures: dual lower/upper set-valued maps and their axioms.

A set-valued map sends every subset of the frame to a set of situations.  An
interval structure is a pair (lower, upper) tied together by the duality
lower(A) = ¬upper(¬A), with the upper map distributing over unions.  Such a
pair is exactly the envelope of a basic assignment: a disjoint, space-covering
family of cells indexed by subsets of the frame.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AssignmentAxiomViolation,
    DualityViolation,
    FrameMismatch,
    InternalInvariantFailure,
    MaskOutOfRange,
    UpperAxiomViolation,
)
from .frames import Frame, SituationSpace
from .reports import AxiomReport, Verdict, Witness, failed, merge, passed
from .sweeps import (
    SweepPolicy,
    first_inter_bound_violation,
    first_inter_hom_violation,
    first_overlap_violation,
    first_union_bound_violation,
    first_union_hom_violation,
    pair_samples,
)


@dataclass(frozen=True)
class SetValuedMap:
    """Dense table over all 2^m proposition masks; entries are situation masks."""

    frame: Frame
    space: SituationSpace
    table: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != 1 << self.frame.m:
            raise ValueError(
                f"table has {len(self.table)} entries, need {1 << self.frame.m}"
            )
        omega = self.space.full
        for mask, entry in enumerate(self.table):
            if not isinstance(entry, int) or entry < 0 or entry > omega:
                raise MaskOutOfRange(
                    f"entry for {self.frame.format_subset(mask)} is not a situation mask"
                )

    def __getitem__(self, mask: int) -> int:
        return self.table[mask]


@dataclass(frozen=True)
class IntervalStructure:
    """A validated (lower, upper) pair.  Build through make_interval_structure."""

    lower: SetValuedMap
    upper: SetValuedMap

    @property
    def frame(self) -> Frame:
        return self.lower.frame

    @property
    def space(self) -> SituationSpace:
        return self.lower.space


@dataclass(frozen=True)
class BasicAssignment:
    """Cells of situations indexed by subsets: disjoint and space-covering."""

    map: SetValuedMap

    @property
    def frame(self) -> Frame:
        return self.map.frame

    @property
    def space(self) -> SituationSpace:
        return self.map.space

    def focal_masks(self) -> tuple[int, ...]:
        """Subsets with a nonempty cell, ascending by mask."""
        return tuple(a for a, cell in enumerate(self.map.table) if cell)


def dual_map(m: SetValuedMap) -> SetValuedMap:
    """Complement-dual: result(A) = ¬m(¬A).  An involution."""
    full = m.frame.full
    omega = m.space.full
    table = tuple(omega ^ m.table[full ^ a] for a in range(len(m.table)))
    return SetValuedMap(m.frame, m.space, table)


def _pair_witness(m: SetValuedMap, axiom: str, pair, lhs: str, rhs: str) -> Verdict:
    a, b = pair
    fr = m.frame
    detail = f"A={fr.format_subset(a)}, B={fr.format_subset(b)}: {lhs} vs {rhs}"
    return failed(axiom, Witness(subset_a=a, subset_b=b, detail=detail))


def check_upper_axioms(m: SetValuedMap, policy: SweepPolicy | None = None) -> AxiomReport:
    """Empty fixpoint, full fixpoint, union distribution, and the derived
    intersection bound.  The bound must pass whenever the first three do."""
    t = m.table
    size = len(t)
    sp = m.space
    verdicts = []

    if t[0] == 0:
        verdicts.append(passed("f̄1"))
    else:
        verdicts.append(
            failed("f̄1", Witness(subset_a=0, detail=f"image of ∅ is {sp.format_subset(t[0])}"))
        )
    full = m.frame.full
    if t[full] == sp.full:
        verdicts.append(passed("f̄2"))
    else:
        verdicts.append(
            failed(
                "f̄2",
                Witness(subset_a=full, detail=f"image of Θ is {sp.format_subset(t[full])}"),
            )
        )

    pairs = pair_samples(m.frame.m, policy)
    hit = first_union_hom_violation(t, size, pairs)
    if hit is None:
        verdicts.append(passed("f̄3"))
    else:
        a, b = hit
        verdicts.append(
            _pair_witness(
                m,
                "f̄3",
                hit,
                f"image of A∪B is {sp.format_subset(t[a | b])}",
                f"union of images is {sp.format_subset(t[a] | t[b])}",
            )
        )
    hit = first_inter_bound_violation(t, size, pairs)
    if hit is None:
        verdicts.append(passed("f̄4"))
    else:
        a, b = hit
        verdicts.append(
            _pair_witness(
                m,
                "f̄4",
                hit,
                f"image of A∩B is {sp.format_subset(t[a & b])}",
                f"intersection of images is {sp.format_subset(t[a] & t[b])}",
            )
        )
    return AxiomReport(tuple(verdicts))


def check_lower_axioms(m: SetValuedMap, policy: SweepPolicy | None = None) -> AxiomReport:
    """Mirror of the upper axioms: intersection distribution with a derived
    union bound."""
    t = m.table
    size = len(t)
    sp = m.space
    verdicts = []

    if t[0] == 0:
        verdicts.append(passed("f1"))
    else:
        verdicts.append(
            failed("f1", Witness(subset_a=0, detail=f"image of ∅ is {sp.format_subset(t[0])}"))
        )
    full = m.frame.full
    if t[full] == sp.full:
        verdicts.append(passed("f2"))
    else:
        verdicts.append(
            failed(
                "f2",
                Witness(subset_a=full, detail=f"image of Θ is {sp.format_subset(t[full])}"),
            )
        )

    pairs = pair_samples(m.frame.m, policy)
    hit = first_inter_hom_violation(t, size, pairs)
    if hit is None:
        verdicts.append(passed("f3"))
    else:
        a, b = hit
        verdicts.append(
            _pair_witness(
                m,
                "f3",
                hit,
                f"image of A∩B is {sp.format_subset(t[a & b])}",
                f"intersection of images is {sp.format_subset(t[a] & t[b])}",
            )
        )
    hit = first_union_bound_violation(t, size, pairs)
    if hit is None:
        verdicts.append(passed("f4"))
    else:
        a, b = hit
        verdicts.append(
            _pair_witness(
                m,
                "f4",
                hit,
                f"union of images is {sp.format_subset(t[a] | t[b])}",
                f"image of A∪B is {sp.format_subset(t[a | b])}",
            )
        )
    return AxiomReport(tuple(verdicts))


def check_duality(lower: SetValuedMap, upper: SetValuedMap) -> AxiomReport:
    full = lower.frame.full
    omega = lower.space.full
    lt, ut = lower.table, upper.table
    for a in range(len(lt)):
        if lt[a] != omega ^ ut[full ^ a]:
            fr = lower.frame
            sp = lower.space
            detail = (
                f"A={fr.format_subset(a)}: lower image {sp.format_subset(lt[a])} "
                f"vs complement of upper ¬A image {sp.format_subset(omega ^ ut[full ^ a])}"
            )
            return AxiomReport((failed("duality", Witness(subset_a=a, detail=detail)),))
    return AxiomReport((passed("duality"),))


def _sandwich_verdict(lower: SetValuedMap, upper: SetValuedMap) -> Verdict:
    lt, ut = lower.table, upper.table
    for a in range(len(lt)):
        if lt[a] & ~ut[a]:
            sp = lower.space
            detail = (
                f"A={lower.frame.format_subset(a)}: lower {sp.format_subset(lt[a])} "
                f"⊄ upper {sp.format_subset(ut[a])}"
            )
            return failed("sandwich", Witness(subset_a=a, detail=detail))
    return passed("sandwich")


def _require_same_universes(x, y, what: str):
    if x.frame != y.frame:
        raise FrameMismatch(f"{what} built over different frames")
    if x.space != y.space:
        raise FrameMismatch(f"{what} built over different situation spaces")


def check_structure(
    lower: SetValuedMap, upper: SetValuedMap, policy: SweepPolicy | None = None
) -> AxiomReport:
    """Full axiom suite for a candidate (lower, upper) pair, without raising."""
    _require_same_universes(lower, upper, "lower/upper maps")
    return merge(
        check_upper_axioms(upper, policy),
        check_duality(lower, upper),
        check_lower_axioms(lower, policy),
        AxiomReport((_sandwich_verdict(lower, upper),)),
    )


def make_interval_structure(
    lower: SetValuedMap, upper: SetValuedMap, policy: SweepPolicy | None = None
) -> IntervalStructure:
    """Validate and wrap a (lower, upper) pair.

    The upper axioms and the duality are the defining conditions; the lower
    axioms and the sandwich are implied, so their failure after the first two
    pass means the engine itself is broken.
    """
    _require_same_universes(lower, upper, "lower/upper maps")
    up = check_upper_axioms(upper, policy)
    if not up.ok:
        first = next(v for v in up.verdicts if not v.ok)
        raise UpperAxiomViolation(f"{first.axiom} fails: {first.witness.detail}", report=up)
    du = check_duality(lower, upper)
    if not du.ok:
        raise DualityViolation(
            f"duality fails: {du.verdicts[0].witness.detail}", report=du
        )
    low = check_lower_axioms(lower, policy)
    sandwich = _sandwich_verdict(lower, upper)
    if not (low.ok and sandwich.ok):
        raise InternalInvariantFailure(
            "derived lower axioms fail although the defining axioms hold"
        )
    return IntervalStructure(lower, upper)


def check_assignment(m: SetValuedMap, policy: SweepPolicy | None = None) -> AxiomReport:
    """Basic-assignment axioms: empty cell at ∅, space coverage, disjointness."""
    t = m.table
    size = len(t)
    sp = m.space
    verdicts = []

    if t[0] == 0:
        verdicts.append(passed("j1"))
    else:
        verdicts.append(
            failed("j1", Witness(subset_a=0, detail=f"cell of ∅ is {sp.format_subset(t[0])}"))
        )

    covered = 0
    for cell in t:
        covered |= cell
    if covered == sp.full:
        verdicts.append(passed("j2"))
    else:
        # report the lowest uncovered situation
        uncovered = ~covered & sp.full
        w = (uncovered & -uncovered).bit_length() - 1
        verdicts.append(
            failed(
                "j2",
                Witness(situation=w, detail=f"situation {sp.names[w]} lies in no cell"),
            )
        )

    pairs = pair_samples(m.frame.m, policy)
    hit = first_overlap_violation(t, size, pairs)
    if hit is None:
        verdicts.append(passed("j3"))
    else:
        a, b = hit
        verdicts.append(
            _pair_witness(
                m,
                "j3",
                hit,
                f"cells overlap in {sp.format_subset(t[a] & t[b])}",
                "expected disjoint",
            )
        )
    return AxiomReport(tuple(verdicts))


def _cells_partition(t: tuple[int, ...], omega: int, n: int) -> bool:
    """Cheap equivalent of the assignment axioms: empty ∅-cell plus an exact
    partition (union is Ω and popcounts add up to n)."""
    if t[0]:
        return False
    union = 0
    weight = 0
    for cell in t:
        union |= cell
        weight += cell.bit_count()
    return union == omega and weight == n


def lower_table_from_cells(cells: tuple[int, ...]) -> tuple[int, ...]:
    """lower(A) = union of the cells of all subsets of A (submask iteration)."""
    size = len(cells)
    out = []
    for a in range(size):
        acc = cells[a]
        sub = a
        while sub:
            sub = (sub - 1) & a
            acc |= cells[sub]
            if sub == 0:
                break
        out.append(acc)
    return tuple(out)


def extract_assignment(s: IntervalStructure) -> BasicAssignment:
    """Recover the unique basic assignment of a structure.

    Each cell is the lower image minus the union of the lower images of all
    strict subsets; the strict union is accumulated by submask iteration.
    """
    lt = s.lower.table
    size = len(lt)
    cells = [lt[0]]
    for a in range(1, size):
        acc = 0
        sub = (a - 1) & a
        while True:
            acc |= lt[sub]
            if sub == 0:
                break
            sub = (sub - 1) & a
        cells.append(lt[a] & ~acc)
    cells_t = tuple(cells)

    if not _cells_partition(cells_t, s.space.full, s.space.n):
        raise InternalInvariantFailure("extracted cells do not partition the space")
    if lower_table_from_cells(cells_t) != lt:
        raise InternalInvariantFailure("extracted cells do not rebuild the lower map")
    return BasicAssignment(SetValuedMap(s.frame, s.space, cells_t))


def structure_from_assignment(
    j: BasicAssignment, policy: SweepPolicy | None = None
) -> IntervalStructure:
    """Build the interval structure whose cells are ``j``.

    The lower map unions cells over subsets, the upper map is its dual, and
    the direct overlap formula upper(A) = union of cells meeting A is checked
    against the dual on the side.
    """
    report = check_assignment(j.map, policy)
    if not report.ok:
        first = next(v for v in report.verdicts if not v.ok)
        raise AssignmentAxiomViolation(
            f"{first.axiom} fails: {first.witness.detail}", report=report
        )
    cells = j.map.table
    lower = SetValuedMap(j.frame, j.space, lower_table_from_cells(cells))
    upper = dual_map(lower)

    size = len(cells)
    m = j.frame.m
    if m <= 8:
        probe = range(size)
    else:
        # spot-check the overlap formula on structured subsets for big frames
        full = j.frame.full
        probe = sorted({0, full, *(1 << k for k in range(m)), *(full ^ (1 << k) for k in range(m))})
    for a in probe:
        direct = 0
        for b in range(size):
            if b & a:
                direct |= cells[b]
        if direct != upper.table[a]:
            raise InternalInvariantFailure(
                "overlap formula disagrees with the dual upper map at "
                f"{j.frame.format_subset(a)}"
            )
    return make_interval_structure(lower, upper, policy)
