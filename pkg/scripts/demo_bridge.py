#!/usr/bin/env python3
"""Walk one small example end to end and print every intermediate object.

Two atoms, three situations, one situation per nonempty subset.  Shows the
assignment, the induced interval structure, the gap, a selected incidence
map, and the exact Bel/Pl/alpha table under the uniform probability.
"""

from ambicalc import (
    BasicAssignment,
    Frame,
    ProbabilityAssignment,
    Selector,
    SetValuedMap,
    SituationSpace,
    ambiguity_from_interval,
    belief_from_structure,
    decompose_interval,
    mass_from_structure,
    render_rational,
    structure_from_assignment,
)


def show_map(label, m):
    print(f"{label}:")
    for a in range(len(m.table)):
        print(f"  {m.frame.format_subset(a):8} -> {m.space.format_subset(m.table[a])}")


def main():
    frame = Frame(("x", "y"))
    space = SituationSpace(("w1", "w2", "w3"))
    j = BasicAssignment(SetValuedMap(frame, space, (0b000, 0b001, 0b010, 0b100)))
    show_map("basic assignment j", j.map)

    s = structure_from_assignment(j)
    show_map("lower map f", s.lower)
    show_map("upper map f̄", s.upper)

    amb = ambiguity_from_interval(s)
    show_map("ambiguity a = f̄ − f", amb.map)

    inc, _ = decompose_interval(s, Selector.min_index())
    print(f"min-index point map: {dict(zip(space.names, (frame.atoms[t] for t in inc.origin.targets)))}")
    show_map("incidence i", inc.map)

    p = ProbabilityAssignment.from_integers(space, [1, 1, 1])
    rep = belief_from_structure(s, p)
    print("uniform probability bridge:")
    for a in range(4):
        print(
            f"  {frame.format_subset(a):8} Bel={render_rational(rep.bel[a]):4}"
            f" Pl={render_rational(rep.pl[a]):4} alpha={render_rational(rep.alpha[a])}"
        )
    mass = mass_from_structure(s, p)
    print("mass function:")
    for mask, value in mass.masses:
        print(f"  {frame.format_subset(mask):8} {render_rational(value)}")


if __name__ == "__main__":
    main()
