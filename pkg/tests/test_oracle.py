"""Brute-force oracles and the cross-verification report."""

import random

import pytest

from aggsem import TooLargeError, gl_reduct, parse_program
from aggsem.oracle import (
    brute_bounds,
    brute_sat_mr,
    brute_sat_triv,
    brute_sat_ult,
    brute_sat_ult_upper,
    minimal_model_check,
    random_aggregate_atom,
    random_program,
    verify_program,
)
from aggsem import sat3
from aggsem.ternary import all_consistent_pairs

from .conftest import interp, pair
from .test_eval2 import agg


# ---------------------------------------------------------------------------
# brute primitives
# ---------------------------------------------------------------------------


def test_brute_bounds_mixed_signs():
    bounds = brute_bounds(agg("sum", [(1, "p"), (-1, "q")], ">=", 0), pair(("p", "q"), (), ("p", "q")))
    assert (bounds.lb.value, bounds.ub.value) == (-1, 1)


def test_brute_bounds_empty_multiset():
    bounds = brute_bounds(agg("sum", [], ">", 0), pair(("p",), (), ("p",)))
    assert (bounds.lb.value, bounds.ub.value) == (0, 0)
    assert bounds.empty_certain


def test_brute_bounds_complementary():
    bounds = brute_bounds(agg("sum", [(1, "p"), (1, "~p")], "=", 1), pair(("p",), (), ("p",)))
    assert (bounds.lb.value, bounds.ub.value) == (1, 1)


def test_brute_sat_ult_universal_vs_existential():
    atom = agg("sum", [(1, "p"), (-1, "q")], ">=", 0)
    at = pair(("s", "p", "q"), (), ("s", "p", "q"))
    assert not brute_sat_ult(atom, at)
    assert brute_sat_ult_upper(atom, at)


def test_brute_sat_ult_exact_pair_matches_two_valued():
    atom = agg("card", [(1, "p")], ">=", 1)
    at = pair(("p", "q"), ("p",), ("p",))
    assert brute_sat_ult(atom, at)


def test_brute_sat_ult_fixed_true_condition():
    atom = agg("card", [(1, "p")], ">=", 1)
    assert brute_sat_ult(atom, pair(("p", "q"), ("p",), ("p", "q")))


def test_minimal_model_rejects_counterpart_reduct(nonconvex_loop_counterpart):
    i = interp(nonconvex_loop_counterpart.universe, ("p", "q", "s"))
    reduct = gl_reduct(nonconvex_loop_counterpart, i)
    # the empty set also models the reduct, so i is not minimal
    assert not minimal_model_check(reduct, i)


def test_minimal_model_accepts_fact():
    program = parse_program("p.")
    assert minimal_model_check(program, interp(("p",), "p"))


def test_minimal_model_empty_program():
    program = parse_program("#atoms p.")
    assert minimal_model_check(program, interp(("p",)))


def test_brute_caps():
    atoms = tuple(f"a{i}" for i in range(18))
    atom = agg("sum", [(1, a) for a in atoms], ">", 0)
    with pytest.raises(TooLargeError):
        brute_sat_ult(atom, pair(atoms, (), atoms))


# ---------------------------------------------------------------------------
# oracle agreement fuzz
# ---------------------------------------------------------------------------


def test_ult_agrees_with_unrestricted_brute():
    rng = random.Random(83)
    atoms = ("a", "b", "c", "d")
    pairs = all_consistent_pairs(atoms)
    for _ in range(150):
        atom = random_aggregate_atom(rng, atoms[: rng.randint(1, 4)])
        for p in rng.sample(pairs, 12):
            assert sat3("ult", atom, p) == brute_sat_ult(atom, p)


def test_mr_agrees_with_whole_lower_subsets():
    rng = random.Random(89)
    atoms = ("a", "b", "c")
    pairs = all_consistent_pairs(atoms)
    for _ in range(150):
        atom = random_aggregate_atom(rng, atoms)
        for p in pairs:
            assert sat3("mr", atom, p) == brute_sat_mr(atom, p)


def test_triv_agrees_with_definition_oracle():
    rng = random.Random(97)
    atoms = ("a", "b", "c")
    pairs = all_consistent_pairs(atoms)
    for _ in range(150):
        atom = random_aggregate_atom(rng, atoms)
        for p in pairs:
            assert sat3("triv", atom, p) == brute_sat_triv(atom, p)


def test_oracle_agreement_volume():
    """Ten thousand randomized (atom, pair) cases per semantics pairing."""
    from aggsem.bounds import bnd_truth
    from aggsem.oracle import brute_bnd_truth

    rng = random.Random(20240830)
    cases = 0
    while cases < 10_000:
        n = rng.choice((1, 2, 2, 2, 3))
        atoms = tuple(f"c{i}" for i in range(n))
        atom = random_aggregate_atom(rng, atoms, max_entries=4)
        for p in all_consistent_pairs(atoms):
            assert sat3("ult", atom, p) == brute_sat_ult(atom, p)
            assert sat3("triv", atom, p) == brute_sat_triv(atom, p)
            assert sat3("mr", atom, p) == brute_sat_mr(atom, p)
            assert bnd_truth(atom, p) == brute_bnd_truth(atom, p)
            cases += 1
    assert cases >= 10_000


# ---------------------------------------------------------------------------
# verify_program
# ---------------------------------------------------------------------------


def test_verify_three_rule_all_semantics(three_rule_sum):
    report = verify_program(
        three_rule_sum, ["triv", "gz", "ult", "lpst", "bnd", "mr", "flp", "ultimate"]
    )
    assert report.ok, report.mismatches[:3]
    assert all(
        [m.atoms for m in models] == [frozenset()]
        for models in report.stable_models.values()
    )


def test_verify_loop_program(nonconvex_loop):
    report = verify_program(nonconvex_loop, ["mr", "flp", "ult", "bnd"])
    assert report.ok, report.mismatches[:3]
    full = {"p", "q", "s"}
    assert [set(m.atoms) for m in report.stable_models["mr"]] == [full]
    assert [set(m.atoms) for m in report.stable_models["flp"]] == [full]
    assert report.stable_models["ult"] == []
    assert report.stable_models["bnd"] == []


def test_verify_tautology_pair(tautology_pair):
    report = verify_program(tautology_pair, ["ultimate", "ult"])
    assert report.ok
    assert [set(m.atoms) for m in report.stable_models["ultimate"]] == [{"p"}]
    assert report.stable_models["ult"] == []


def test_verify_samples_pairs_on_wide_universes(wide_aggregate):
    # above six atoms the pair scan switches to a seeded sample
    report = verify_program(wide_aggregate, ["bnd", "triv"], seed=5)
    assert report.ok
    assert report.checked > 800
    again = verify_program(wide_aggregate, ["bnd", "triv"], seed=5)
    assert again.checked == report.checked and again.mismatches == report.mismatches


def test_verify_random_programs_have_no_mismatches():
    rng = random.Random(101)
    for _ in range(25):
        program = random_program(rng, max_atoms=4, max_rules=4)
        report = verify_program(
            program, ["triv", "gz", "ult", "lpst", "bnd", "mr", "flp", "ultimate"]
        )
        assert report.ok, (str(program), report.mismatches[:3])


# ---------------------------------------------------------------------------
# generator determinism
# ---------------------------------------------------------------------------


def test_generator_is_seed_reproducible():
    assert random_program(random.Random(7)) == random_program(random.Random(7))
    a = random_aggregate_atom(random.Random(3), ("x", "y"))
    b = random_aggregate_atom(random.Random(3), ("x", "y"))
    assert a == b
