"""Seeded generators, the end-to-end fuzz driver, and fault injection.

Every stream is derived from (master seed, role, trial index), so a report is
a pure function of its config: reruns and different thread counts produce the
same bytes.  The driver runs the whole pipeline per trial — assignment,
structure, gap, selected incidences, decompose/compose, the probability
bridge — and cross-checks each stage against the naive oracle.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import partial
from math import comb, exp

from .ambiguity import ambiguity_from_interval, check_ambiguity_axioms
from .errors import AmbicalcError, InternalInvariantFailure
from .frames import Frame, SituationSpace
from .incidence import PointMap, Selector, check_incidence_axioms, check_sandwich
from .incidence import compose_interval, decompose_interval, select_incidence
from .interval import (
    BasicAssignment,
    IntervalStructure,
    SetValuedMap,
    check_assignment,
    check_structure,
    extract_assignment,
    structure_from_assignment,
)
from .numeric import (
    ProbabilityAssignment,
    belief_from_structure,
    check_belief_identity,
    fishburn_report,
    mass_from_structure,
    structure_from_mass,
)
from .oracle import (
    oracle_ambiguity_table,
    oracle_extract_table,
    oracle_lower_table,
    oracle_upper_table,
    oracle_verify,
)
from .sweeps import derive_seed

STANDARD_PROPERTIES = (
    "assignment-roundtrip",
    "ambiguity-axioms",
    "incidence-selection",
    "decompose-compose",
    "belief-bridge",
    "alpha-axioms",
    "oracle-agreement",
)
FAULT_PROPERTIES = ("fault-detected", "oracle-agreement")

_SHRINK_BUDGET = 300


@dataclass(frozen=True)
class GenConfig:
    """Sizes and switches for the generators and the fuzz driver.

    ``m``/``n`` are exact sizes for the generators; the fuzz driver treats
    them as upper bounds and draws per-trial sizes from its own stream.
    """

    m: int
    n: int
    seed: int = 0
    trials: int = 1
    focal_bias: float | None = None
    zero_weights: bool = False
    fault_injection: bool = False
    seeded_selectors: int = 5

    def __post_init__(self):
        if not 1 <= self.m <= Frame.MAX_ATOMS:
            raise ValueError(f"atom count must be in 1..{Frame.MAX_ATOMS}")
        if not 1 <= self.n <= SituationSpace.DEFAULT_CAP:
            raise ValueError(f"situation count must be in 1..{SituationSpace.DEFAULT_CAP}")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.seeded_selectors < 0:
            raise ValueError("seeded selector count cannot be negative")


def universes_for(cfg: GenConfig) -> tuple[Frame, SituationSpace]:
    frame = Frame(tuple(f"x{k + 1}" for k in range(cfg.m)))
    space = SituationSpace(tuple(f"w{k + 1}" for k in range(cfg.n)))
    return frame, space


def _draw_focal(rng: random.Random, m: int, bias: float | None) -> int:
    if bias is None:
        return rng.randrange(1, 1 << m)
    # weight subset sizes by exp(bias * k); positive favors big focal elements
    weights = [comb(m, k) * exp(bias * k) for k in range(1, m + 1)]
    k = rng.choices(range(1, m + 1), weights=weights)[0]
    mask = 0
    for idx in rng.sample(range(m), k):
        mask |= 1 << idx
    return mask


def gen_assignment(cfg: GenConfig) -> BasicAssignment:
    """Drop each situation into the cell of a random nonempty subset."""
    frame, space = universes_for(cfg)
    rng = random.Random(derive_seed("assignment", cfg.seed))
    cells = [0] * (1 << cfg.m)
    for w in range(cfg.n):
        cells[_draw_focal(rng, cfg.m, cfg.focal_bias)] |= 1 << w
    j = BasicAssignment(SetValuedMap(frame, space, tuple(cells)))
    if cells[0] or sum(c.bit_count() for c in cells) != cfg.n:
        raise InternalInvariantFailure("generated cells do not partition the space")
    return j


def gen_pointmap(cfg: GenConfig) -> PointMap:
    rng = random.Random(derive_seed("pointmap", cfg.seed))
    return PointMap(tuple(rng.randrange(cfg.m) for _ in range(cfg.n)))


def _probability_for(space: SituationSpace, seed: int, zero_weights: bool) -> ProbabilityAssignment:
    rng = random.Random(derive_seed("probability", seed))
    lo = 0 if zero_weights else 1
    while True:
        weights = [rng.randint(lo, 1000) for _ in range(space.n)]
        if sum(weights) > 0:
            break
    return ProbabilityAssignment.from_integers(space, weights)


def gen_probability(cfg: GenConfig) -> ProbabilityAssignment:
    """Integer weights in [1, 1000] normalized exactly; the zero-inclusive
    mode also draws zeros but never an all-zero vector."""
    _, space = universes_for(cfg)
    return _probability_for(space, cfg.seed, cfg.zero_weights)


@dataclass(frozen=True)
class PropertyStat:
    name: str
    passes: int
    fails: int


@dataclass(frozen=True)
class FailureCase:
    trial: int
    seed: int
    failed: tuple[str, ...]
    note: str
    document: str


@dataclass(frozen=True)
class FuzzReport:
    seed: int
    trials: int
    max_atoms: int
    max_situations: int
    mode: str
    seeded_selectors: int
    stats: tuple[PropertyStat, ...]
    failures: tuple[FailureCase, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def stat(self, name: str) -> PropertyStat:
        for s in self.stats:
            if s.name == name:
                return s
        raise KeyError(name)

    def render(self) -> str:
        lines = [
            "fuzz report",
            f"seed: {self.seed}",
            f"trials: {self.trials}",
            f"max-atoms: {self.max_atoms}",
            f"max-situations: {self.max_situations}",
            f"mode: {self.mode}",
            f"seeded-selectors: {self.seeded_selectors}",
            "properties:",
        ]
        for s in self.stats:
            lines.append(f"  {s.name}: pass={s.passes} fail={s.fails}")
        if not self.failures:
            lines.append("failures: none")
        else:
            lines.append("failures:")
            for case in self.failures:
                lines.append(f"  trial={case.trial} seed={case.seed}")
                lines.append(f"    failed: {','.join(case.failed)}")
                if case.note:
                    lines.append(f"    note: {case.note}")
                lines.append(f"    shrunk: {case.document}")
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "max_atoms": self.max_atoms,
            "max_situations": self.max_situations,
            "mode": self.mode,
            "seeded_selectors": self.seeded_selectors,
            "properties": {s.name: {"pass": s.passes, "fail": s.fails} for s in self.stats},
            "failures": [
                {
                    "trial": c.trial,
                    "seed": c.seed,
                    "failed": list(c.failed),
                    "note": c.note,
                    "shrunk": c.document,
                }
                for c in self.failures
            ],
        }


def _trial_config(cfg: GenConfig, trial: int) -> GenConfig:
    sizes = random.Random(derive_seed("sizes", cfg.seed, trial))
    return replace(
        cfg,
        m=1 + sizes.randrange(cfg.m),
        n=1 + sizes.randrange(cfg.n),
        seed=derive_seed("trial", cfg.seed, trial),
        trials=1,
    )


def _evaluate_standard(cfg: GenConfig, sub: GenConfig, trial: int, j: BasicAssignment):
    outcomes: dict[str, bool | None] = dict.fromkeys(STANDARD_PROPERTIES, None)
    note = ""
    try:
        rep_j = check_assignment(j.map)
        s = structure_from_assignment(j)
        rep_s = check_structure(s.lower, s.upper)
        back = extract_assignment(s)
        outcomes["assignment-roundtrip"] = rep_j.ok and rep_s.ok and back == j

        agree = rep_j.agreement_key() == oracle_verify(j).agreement_key()
        agree = agree and rep_s.agreement_key() == oracle_verify(s).agreement_key()
        agree = agree and oracle_lower_table(j) == s.lower.table
        agree = agree and oracle_upper_table(j) == s.upper.table
        agree = agree and oracle_extract_table(s) == back.map.table

        amb = ambiguity_from_interval(s)
        rep_a = check_ambiguity_axioms(amb.map)
        outcomes["ambiguity-axioms"] = rep_a.ok
        agree = agree and rep_a.agreement_key() == oracle_verify(amb).agreement_key()
        agree = agree and oracle_ambiguity_table(s) == amb.map.table

        inc_min, amb_min = decompose_interval(s, Selector.min_index())
        rep_i = check_incidence_axioms(inc_min.map)
        sandwich = check_sandwich(s, inc_min)
        selection_ok = rep_i.ok and sandwich.ok
        agree = agree and rep_i.agreement_key() == oracle_verify(inc_min).agreement_key()
        for k in range(cfg.seeded_selectors):
            sel = Selector.seeded(derive_seed("selector-seed", cfg.seed, trial, k))
            inc_k = select_incidence(j, sel)
            selection_ok = (
                selection_ok
                and check_incidence_axioms(inc_k.map).ok
                and check_sandwich(s, inc_k).ok
            )
        outcomes["incidence-selection"] = selection_ok

        composed = compose_interval(inc_min, amb_min)
        identities = True
        omega = s.space.full
        it, at = inc_min.map.table, amb_min.map.table
        for a in range(len(it)):
            if s.upper.table[a] != it[a] | at[a] or s.lower.table[a] != it[a] & (omega ^ at[a]):
                identities = False
                break
        outcomes["decompose-compose"] = composed == s and identities and amb_min == amb

        prob = _probability_for(j.space, sub.seed, sub.zero_weights)
        beliefs = belief_from_structure(s, prob)
        mass = mass_from_structure(s, prob)
        identity = check_belief_identity(beliefs, mass)
        _, prob2, _, s2 = structure_from_mass(mass)
        beliefs2 = belief_from_structure(s2, prob2)
        outcomes["belief-bridge"] = (
            identity.ok and beliefs2.bel == beliefs.bel and beliefs2.pl == beliefs.pl
        )
        outcomes["alpha-axioms"] = fishburn_report(beliefs).ok
        outcomes["oracle-agreement"] = agree
    except AmbicalcError as exc:
        note = f"{type(exc).__name__}: {exc}"
        for key, value in outcomes.items():
            if value is None:
                outcomes[key] = False
    return outcomes, note


def _flip_bit(m: SetValuedMap, rng: random.Random) -> SetValuedMap:
    cell = rng.randrange(len(m.table))
    bit = 1 << rng.randrange(m.space.n)
    table = list(m.table)
    table[cell] ^= bit
    return SetValuedMap(m.frame, m.space, tuple(table))


def _evaluate_fault(instance) -> tuple[dict, str]:
    outcomes = dict.fromkeys(FAULT_PROPERTIES, False)
    if isinstance(instance, BasicAssignment):
        main = check_assignment(instance.map)
        second = oracle_verify(instance)
    else:
        main = check_structure(instance.lower, instance.upper)
        second = oracle_verify(instance)
    outcomes["fault-detected"] = not main.ok
    outcomes["oracle-agreement"] = main.agreement_key() == second.agreement_key()
    return outcomes, ""


def _drop_situation(m: SetValuedMap, w: int) -> SetValuedMap:
    names = m.space.names[:w] + m.space.names[w + 1 :]
    keep = (1 << w) - 1
    table = tuple(((e >> (w + 1)) << w) | (e & keep) for e in m.table)
    return SetValuedMap(m.frame, SituationSpace(names), table)


def _drop_atom(m: SetValuedMap, t: int) -> SetValuedMap:
    """Merge atom ``t`` into a neighbor, so nonempty subsets stay nonempty."""
    frame = Frame(m.frame.atoms[:t] + m.frame.atoms[t + 1 :])
    absorb = t - 1 if t > 0 else 1
    table = [0] * (1 << frame.m)
    for a in range(len(m.table)):
        projected = 0
        for k in range(m.frame.m):
            if a >> k & 1:
                kept = absorb if k == t else k
                projected |= 1 << (kept if kept < t else kept - 1)
        table[projected] |= m.table[a]
    return SetValuedMap(frame, m.space, tuple(table))


def _shrink_map(m: SetValuedMap, still_fails) -> SetValuedMap:
    """Greedy minimization: drop situations before atoms, highest index first."""
    budget = _SHRINK_BUDGET
    current = m
    changed = True
    while changed and budget > 0:
        changed = False
        if current.space.n > 1:
            for w in reversed(range(current.space.n)):
                candidate = _drop_situation(current, w)
                budget -= 1
                if still_fails(candidate):
                    current = candidate
                    changed = True
                    break
                if budget <= 0:
                    break
        if changed or budget <= 0:
            continue
        if current.frame.m > 1:
            for t in reversed(range(current.frame.m)):
                candidate = _drop_atom(current, t)
                budget -= 1
                if still_fails(candidate):
                    current = candidate
                    changed = True
                    break
                if budget <= 0:
                    break
    return current


def _assignment_doc(m: SetValuedMap) -> str:
    from .documents import document_for, render_document

    return render_document(document_for(BasicAssignment(m)), compact=True)


def _standard_trial(cfg: GenConfig, trial: int):
    sub = _trial_config(cfg, trial)
    j = gen_assignment(sub)
    outcomes, note = _evaluate_standard(cfg, sub, trial, j)
    failed = tuple(name for name in STANDARD_PROPERTIES if not outcomes[name])
    case = None
    if failed:

        def fails(candidate: SetValuedMap) -> bool:
            oc, _ = _evaluate_standard(cfg, sub, trial, BasicAssignment(candidate))
            return any(not v for v in oc.values())

        shrunk = _shrink_map(j.map, fails)
        case = FailureCase(trial, sub.seed, failed, note, _assignment_doc(shrunk))
    return outcomes, case


def _fault_trial(cfg: GenConfig, trial: int):
    sub = _trial_config(cfg, trial)
    rng = random.Random(derive_seed("fault", cfg.seed, trial))
    j = gen_assignment(sub)
    if trial % 2 == 0:
        instance = BasicAssignment(_flip_bit(j.map, rng))
    else:
        s = structure_from_assignment(j)
        if rng.randrange(2):
            instance = IntervalStructure(_flip_bit(s.lower, rng), s.upper)
        else:
            instance = IntervalStructure(s.lower, _flip_bit(s.upper, rng))
    outcomes, note = _evaluate_fault(instance)
    failed = tuple(name for name in FAULT_PROPERTIES if not outcomes[name])
    case = None
    if failed:
        if isinstance(instance, BasicAssignment):

            def fails(candidate: SetValuedMap) -> bool:
                oc, _ = _evaluate_fault(BasicAssignment(candidate))
                return any(not v for v in oc.values())

            shrunk = _shrink_map(instance.map, fails)
            doc = _assignment_doc(shrunk)
        else:
            from .documents import document_for, render_document

            doc = render_document(document_for(instance), compact=True)
        case = FailureCase(trial, sub.seed, failed, note, doc)
    return outcomes, case


def fuzz(cfg: GenConfig) -> FuzzReport:
    """Run the pipeline for every trial and tally per-property verdicts.

    Worker count comes from the AMBIG_THREADS environment variable; results
    are merged in trial order, so the report does not depend on it.
    """
    properties = FAULT_PROPERTIES if cfg.fault_injection else STANDARD_PROPERTIES
    runner = partial(_fault_trial if cfg.fault_injection else _standard_trial, cfg)
    workers = max(1, int(os.environ.get("AMBIG_THREADS", "1") or "1"))
    if workers == 1:
        results = [runner(t) for t in range(cfg.trials)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(runner, range(cfg.trials)))
    counts = {name: [0, 0] for name in properties}
    failures = []
    for outcomes, case in results:
        for name in properties:
            counts[name][0 if outcomes[name] else 1] += 1
        if case is not None:
            failures.append(case)
    stats = tuple(PropertyStat(name, counts[name][0], counts[name][1]) for name in properties)
    return FuzzReport(
        seed=cfg.seed,
        trials=cfg.trials,
        max_atoms=cfg.m,
        max_situations=cfg.n,
        mode="fault-injection" if cfg.fault_injection else "standard",
        seeded_selectors=cfg.seeded_selectors,
        stats=stats,
        failures=tuple(failures),
    )
