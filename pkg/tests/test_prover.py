import random
from math import gcd

import pytest

from hopfatlas.prover import (
    AXIOMS,
    Assumptions,
    CoradicalProfile,
    FREE_TRANSLATION,
    ProverError,
    _variable_system,
    apply_base_pack,
    apply_extended_pack,
    applicable_flags,
    enumerate_profiles,
    full_orbit,
    naive_assignment_oracle,
    prove,
    replay,
)

FLAGS = (full_orbit(2), FREE_TRANSLATION)
SEED = 0


def blocks_of(profiles, g):
    return {p.blocks for p in profiles if p.g == g}


def test_enumerate_8p_divisible_groups_empty():
    for p in (3, 5, 7, 11):
        assert enumerate_profiles(8 * p, Assumptions(), g=4 * p) == []
        assert enumerate_profiles(8 * p, Assumptions(), g=8 * p) == []


def test_enumerate_24_g2_matches_bruteforce_oracle():
    got = blocks_of(enumerate_profiles(24, Assumptions(), g=2), 2)
    # oracle: independent enumeration of multisets with sum m*d^2 <= 21 and 2 | m*d^2
    oracle = set()

    def rec(d, acc, left):
        if acc:
            oracle.add(tuple(acc))
        for dd in range(d, 5):
            m = 1
            while m * dd * dd <= left:
                if (m * dd * dd) % 2 == 0:
                    rec_blocks = acc + [(dd, m)]
                    oracle.add(tuple(rec_blocks))
                    rec(dd + 1, rec_blocks, left - m * dd * dd)
                m += 1

    rec(2, [], 21)
    # filter oracle for the per-class divisibility (2 | m d^2 per class)
    oracle = {b for b in oracle if all((m * d * d) % 2 == 0 for d, m in b)}
    assert got == oracle
    assert ((2, 1),) in got and ((3, 2),) in got and ((4, 1),) in got


def test_enumerate_cosemisimple_pointed_excluded():
    assert enumerate_profiles(12, Assumptions(), g=12) == []


def test_enumerate_pointed_profile_control():
    with_blocks = enumerate_profiles(12, Assumptions(nonpointed=False), g=6)
    assert () in blocks_of(with_blocks, 6)
    without = enumerate_profiles(12, Assumptions(), g=6)
    assert () not in blocks_of(without, 6)


def test_base_pack_8p_g_eq_p():
    for p in (3, 5, 7, 11):
        profiles = enumerate_profiles(8 * p, Assumptions(), g=p)
        assert profiles
        for prof in profiles:
            eliminated, steps, no_skew = apply_base_pack(prof, Assumptions())
            assert no_skew and eliminated
            assert any(s.rule == "R-bound" for s in steps)


def test_base_pack_remark_bound_60():
    prof = CoradicalProfile(24, 8, ((2, 2),))
    eliminated, steps, _ = apply_base_pack(prof, Assumptions())
    assert eliminated
    bound_step = [s for s in steps if s.rule == "R-bound"][0]
    assert "60" in bound_step.detail


def test_base_pack_2pq_g_eq_q():
    prof = CoradicalProfile(70, 7, ((2, 7),))
    eliminated, steps, _ = apply_base_pack(prof, Assumptions())
    assert eliminated


def test_extended_70_g5_cases():
    # {(2,10)}: dies without any flags
    prof = CoradicalProfile(70, 5, ((2, 10),))
    v = apply_extended_pack(prof, Assumptions(), ())
    assert v.eliminated
    # {(2,5)}: feasible without flags, dies with full-orbit(2)
    prof = CoradicalProfile(70, 5, ((2, 5),))
    v = apply_extended_pack(prof, Assumptions(), ())
    assert not v.eliminated
    v = apply_extended_pack(prof, Assumptions(), (full_orbit(2),))
    assert v.eliminated
    assert any(s.rule == "E-full-orbit" for s in v.steps)


def test_extended_42_g3_unique_survivor():
    report = prove(42, pack="extended", flags=FLAGS)
    survivors = [pv for pv in report.verdict_for(3).profiles if not pv.eliminated]
    assert len(survivors) == 1
    assert survivors[0].profile.blocks == ((3, 1),)
    assert survivors[0].assignment == {"y_GG": 3, "y_GD_3": 9, "y_DD_3_3": 9}


def test_full_orbit_only_hits_single_pack_classes():
    # the multiplicity-6 class at n=78 is two translation packs; the orbit
    # hypothesis must not apply, leaving the profile feasible
    prof = CoradicalProfile(78, 6, ((2, 6),))
    v = apply_extended_pack(prof, Assumptions(), FLAGS[:1] + FLAGS[1:])
    assert not v.eliminated
    assert v.assignment == {"y_GG": 12, "y_GD_2": 12, "y_DD_2_2": 12}
    # the single-pack class of the same g at n=66 dies
    prof66 = CoradicalProfile(66, 6, ((2, 3),))
    v66 = apply_extended_pack(prof66, Assumptions(), FLAGS)
    assert v66.eliminated


def test_flag_referencing_absent_class_errors():
    prof = CoradicalProfile(42, 3, ((3, 1),))
    with pytest.raises(ProverError):
        apply_extended_pack(prof, Assumptions(), (full_orbit(2),))
    assert applicable_flags(prof, (full_orbit(2), FREE_TRANSLATION)) == (FREE_TRANSLATION,)


def test_prove_56_example():
    rep = prove(56, pack="base")
    assert {7, 8, 28, 56} <= set(rep.eliminated_gs())


def test_prove_66_vs_78_flag_sensitivity():
    assert 6 in prove(66, pack="extended", flags=FLAGS).eliminated_gs()
    assert 6 not in prove(78, pack="extended", flags=FLAGS).eliminated_gs()
    # without the orbit flag, g=6 at 66 survives: the flag is doing the work
    assert 6 not in prove(66, pack="extended", flags=(FREE_TRANSLATION,)).eliminated_gs()


def test_monotonicity_flags_shrink_survivors():
    for n in (42, 66, 70, 78):
        base = set(prove(n, pack="extended").surviving_gs())
        for flags in ((FREE_TRANSLATION,), (full_orbit(2),), FLAGS):
            assert set(prove(n, pack="extended", flags=flags).surviving_gs()) <= base


def test_axiom_only_when_enabled():
    rep = prove(70, pack="base")
    assert not rep.verdict_for(35).used_axiom
    rep = prove(70, pack="base", axioms=("pq-half-dim",))
    v = rep.verdict_for(35)
    assert v.used_axiom and v.eliminated
    assert v.axiom_steps[0].rule == "A-pq-half-dim"
    assert "axiom" in v.axiom_steps[0].citation


def test_axiom_condition_is_narrow():
    fn = AXIOMS["pq-half-dim"][1]
    assert fn(70, 35, Assumptions()) is not None
    assert fn(70, 35, Assumptions(nonsemisimple=False)) is None
    assert fn(70, 14, Assumptions()) is None
    assert fn(60, 30, Assumptions()) is None  # 30 = 2*3*5 is not pq


def test_trace_replay_bit_for_bit():
    for n, pack, flags, axioms in (
        (24, "base", (), ()),
        (70, "extended", FLAGS, ("pq-half-dim",)),
        (42, "extended", FLAGS, ()),
    ):
        text = prove(n, pack=pack, flags=flags, axioms=axioms).serialize()
        ok, _ = replay(text)
        assert ok


def test_eliminated_traces_have_citations():
    rep = prove(66, pack="extended", flags=FLAGS)
    for v in rep.verdicts:
        if not v.eliminated:
            continue
        if v.axiom_steps:
            continue
        for pv in v.profiles:
            assert pv.eliminated
            assert pv.steps, (v.g, pv.profile)
            for s in pv.steps:
                assert s.citation


def test_search_matches_naive_oracle_random():
    rng = random.Random(SEED)
    from hopfatlas.prover import _first_solution

    checked = 0
    while checked < 25:
        nvars = rng.randrange(1, 4)
        variables = []
        for i in range(nvars):
            variables.append((f"v{i}", rng.choice((1, 2)), rng.randrange(1, 7),
                              rng.randrange(0, 8)))
        total = rng.randrange(0, 25)
        fast = _first_solution(variables, total)
        slow = naive_assignment_oracle(variables, total)
        assert (fast is None) == (slow is None), (variables, total)
        if fast is not None:
            assert sum(w * fast[nm] for nm, w, _, _ in variables) == total
        checked += 1


def test_parameter_validation():
    with pytest.raises(ProverError):
        prove(3)
    with pytest.raises(ProverError):
        prove(201)
    with pytest.raises(ProverError):
        prove(24, flags=("bogus",))
    with pytest.raises(ProverError):
        prove(24, axioms=("bogus",))
    with pytest.raises(ProverError):
        prove(24, pack="fancy")
