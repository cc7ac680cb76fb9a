import pytest

from ambicalc import (
    AmbiguityMap,
    Frame,
    SetValuedMap,
    SituationSpace,
    ambiguity_from_interval,
    check_ambiguity_axioms,
    oracle_verify,
)


def test_fix1_gap(fix1):
    amb = ambiguity_from_interval(fix1["s"])
    assert amb.map.table == (0, 0b100, 0b100, 0)
    assert check_ambiguity_axioms(amb.map).ok


def test_vacuous_gap(fix3):
    amb = ambiguity_from_interval(fix3["s"])
    # total ambiguity everywhere except the trivial subsets
    assert amb.map.table == (0, 0b111, 0b111, 0)


def test_fix2_table_is_valid(fix2):
    rep = check_ambiguity_axioms(fix2["amb"].map)
    assert rep.ok
    assert [v.axiom for v in rep.verdicts] == ["a1", "a2", "a3.1", "a3.2", "a4"]


def test_empty_set_violation():
    fr = Frame(("x", "y"))
    sp = SituationSpace(("w",))
    rep = check_ambiguity_axioms(SetValuedMap(fr, sp, (1, 0, 0, 1)))
    assert not rep.find("a1").ok
    assert rep.find("a1").witness.subset_a == 0


def test_complement_symmetry_violation():
    fr = Frame(("x", "y"))
    sp = SituationSpace(("w1", "w2", "w3"))
    rep = check_ambiguity_axioms(SetValuedMap(fr, sp, (0, 4, 2, 0)))
    v = rep.find("a2")
    assert not v.ok
    assert v.witness.subset_a == 1  # first subset whose complement disagrees


def test_union_law_violation():
    fr = Frame(("x", "y", "z"))
    sp = SituationSpace(("w",))
    t = [0] * 8
    t[3] = t[4] = 1  # symmetric pair {x,y} / {z}
    m = SetValuedMap(fr, sp, tuple(t))
    rep = check_ambiguity_axioms(m)
    v = rep.find("a3.1")
    assert not v.ok
    assert v.witness.key() == (1, 2, None)
    # the naive checker lands on the same witness
    assert rep.agreement_key() == oracle_verify(AmbiguityMap(m)).agreement_key()


def test_intersection_law_violation():
    fr = Frame(("p", "q", "r", "s"))
    sp = SituationSpace(("w",))
    t = [0] * 16
    for mask in (2, 13, 7, 8, 6, 9):  # three complement pairs
        t[mask] = 1
    m = SetValuedMap(fr, sp, tuple(t))
    rep = check_ambiguity_axioms(m)
    assert rep.find("a1").ok and rep.find("a2").ok
    v = rep.find("a3.2")
    assert not v.ok
    assert v.witness.key() == (3, 6, None)
    assert rep.agreement_key() == oracle_verify(AmbiguityMap(m)).agreement_key()


def test_full_frame_violation_drags_symmetry_down():
    fr = Frame(("x",))
    sp = SituationSpace(("w",))
    rep = check_ambiguity_axioms(SetValuedMap(fr, sp, (0, 1)))
    assert not rep.find("a4").ok
    assert not rep.find("a2").ok  # a4 follows from a1 and a2


def test_gap_of_every_fixture_structure_is_a_measure(fix1, fix3):
    for fx in (fix1, fix3):
        amb = ambiguity_from_interval(fx["s"])
        assert check_ambiguity_axioms(amb.map).ok
        assert oracle_verify(amb).ok
