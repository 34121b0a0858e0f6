"""Fixpoint engines: least fixpoints of the lower operator, stable-model
checking and enumeration per semantics, Kripke-Kleene and well-founded
fixpoints, the three reduct constructions, and the brute-force most
precise approximator.

The lower operator of a relation maps (X, Y) to the heads of rules whose
body is certainly true; for the semantics with truth functions the upper
operator collects heads of possibly-true bodies.  Y is a stable model
when it is a supported model and the least fixpoint of X -> lower(X, Y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import CapabilityError, TooLargeError
from .eval2 import eval_aggregate, is_model, is_supported_model, literal_holds, sat2, tp
from .interp import Interpretation, InterpretationPair, enumerate_interval
from .syntax import (
    DisjunctiveBodyProgram,
    Literal,
    Program,
    Rule,
    combine_rules_per_head,
)
from .ternary import SemanticsId, sat3_body, sat3_upper_body

__all__ = [
    "ApproximatorStep",
    "WellFoundedResult",
    "lower_step",
    "upper_step",
    "approximator_step",
    "lfp_lower",
    "stable_check",
    "stable_enumerate",
    "gl_reduct",
    "gz_reduct",
    "flp_reduct",
    "kripke_kleene",
    "well_founded",
    "ultimate_operator_bruteforce",
]

DEFAULT_MAX_ATOMS = 20


@dataclass(frozen=True)
class ApproximatorStep:
    lower_next: Interpretation
    upper_next: Interpretation


@dataclass(frozen=True)
class WellFoundedResult:
    pair: InterpretationPair
    iterations: int


ProgramLike = Union[Program, DisjunctiveBodyProgram]


def _check_gl_applicable(sem: SemanticsId, program: Program) -> None:
    if sem is SemanticsId.GL and not program.is_aggregate_free:
        raise CapabilityError("gl handles aggregate-free programs only")


def lower_step(sem: SemanticsId | str, program: ProgramLike, pair: InterpretationPair) -> Interpretation:
    """Heads of rules whose body is certainly true in the pair."""
    sem = SemanticsId.from_tag(sem)
    if sem is SemanticsId.ULTIMATE:
        if not isinstance(program, DisjunctiveBodyProgram):
            raise CapabilityError(
                "the whole-program relation needs a one-rule-per-head program; "
                "apply combine_rules_per_head first"
            )
        fired = {
            head for head, bodies in program.entries if sat3_body(sem, bodies, pair)
        }
        return Interpretation(program.universe, frozenset(fired))
    assert isinstance(program, Program)
    _check_gl_applicable(sem, program)
    fired = {rule.head for rule in program.rules if sat3_body(sem, rule.body, pair)}
    return Interpretation(program.universe, frozenset(fired))


def upper_step(sem: SemanticsId | str, program: Program, pair: InterpretationPair) -> Interpretation:
    """Heads of rules whose body is possibly true (truth-function semantics)."""
    sem = SemanticsId.from_tag(sem)
    _check_gl_applicable(sem, program)
    fired = {rule.head for rule in program.rules if sat3_upper_body(sem, rule.body, pair)}
    return Interpretation(program.universe, frozenset(fired))


def approximator_step(
    sem: SemanticsId | str, program: Program, pair: InterpretationPair
) -> ApproximatorStep:
    return ApproximatorStep(lower_step(sem, program, pair), upper_step(sem, program, pair))


def lfp_lower(sem: SemanticsId | str, program: ProgramLike, y: Interpretation) -> Interpretation:
    """Least fixpoint of X -> lower(X, y), by Kleene iteration from bottom.

    The iteration stays inside [bottom, y] whenever y is a supported
    model; for other y the operator can escape its domain, which raises
    InconsistentPairError (such y are never stable anyway).
    """
    sem = SemanticsId.from_tag(sem)
    if not sem.monotone_lower_operator:
        raise CapabilityError(
            f"{sem.value} has no monotone lower operator; use its minimal-model check"
        )
    universe = program.universe
    current = Interpretation.empty(universe)
    for _ in range(len(universe) + 1):
        nxt = lower_step(sem, program, InterpretationPair(current, y))
        if nxt.atoms == current.atoms:
            return current
        current = nxt
    raise AssertionError("lower operator failed to reach a fixpoint in |universe|+1 steps")


def stable_check(sem: SemanticsId | str, program: Program, y: Interpretation) -> bool:
    """Is y a stable model (answer set) of the program under the relation?"""
    sem = SemanticsId.from_tag(sem)
    if sem is SemanticsId.FLP:
        return _flp_stable_check(program, y)
    if not is_supported_model(program, y):
        return False
    target: ProgramLike = (
        combine_rules_per_head(program) if sem is SemanticsId.ULTIMATE else program
    )
    return lfp_lower(sem, target, y).atoms == y.atoms


def _flp_stable_check(program: Program, y: Interpretation) -> bool:
    """y satisfies the program and no proper subset is closed under the
    double-satisfaction relation with y as upper bound (equivalently: no
    proper subset models the body-preserving reduct)."""
    if not is_model(program, y):
        return False
    members = [a for a in y.universe if a in y.atoms]
    pair_upper = y
    for mask in range((1 << len(members)) - 1):  # all proper subsets
        subset = y.with_atoms(a for bit, a in enumerate(members) if mask >> bit & 1)
        closed = all(
            rule.head in subset.atoms
            or not sat3_body(SemanticsId.FLP, rule.body, InterpretationPair(subset, pair_upper))
            for rule in program.rules
        )
        if closed:
            return False
    return True


def stable_enumerate(
    sem: SemanticsId | str, program: Program, max_atoms: int = DEFAULT_MAX_ATOMS
) -> list[Interpretation]:
    """All stable models, found by filtering candidate interpretations.

    Any stable model is a fixpoint of the immediate consequence operator,
    hence a subset of the head atoms; candidates outside that set are
    skipped.  Results are sorted lexicographically by atom names.
    """
    sem = SemanticsId.from_tag(sem)
    if len(program.universe) > max_atoms:
        raise TooLargeError(
            f"universe of {len(program.universe)} atoms exceeds bound {max_atoms}"
        )
    heads = [a for a in program.universe if a in set(program.heads)]
    models = []
    for mask in range(1 << len(heads)):
        candidate = Interpretation.of(
            program.universe, (a for bit, a in enumerate(heads) if mask >> bit & 1)
        )
        if stable_check(sem, program, candidate):
            models.append(candidate)
    return sorted(models, key=lambda m: m.sorted_atoms)


# ---------------------------------------------------------------------------
# Reducts
# ---------------------------------------------------------------------------


def gl_reduct(program: Program, i: Interpretation) -> Program:
    """Drop rules with a negative literal whose atom is in i; strip the
    remaining negative literals (aggregate-free programs only)."""
    if not program.is_aggregate_free:
        raise CapabilityError("the classical reduct is defined for aggregate-free programs")
    kept: list[Rule] = []
    for rule in program.rules:
        if any(isinstance(e, Literal) and e.negated and e.atom in i.atoms for e in rule.body):
            continue
        body = tuple(e for e in rule.body if not (isinstance(e, Literal) and e.negated))
        kept.append(Rule(rule.head, body))
    return Program(tuple(kept), program.universe)


def gz_reduct(program: Program, i: Interpretation) -> Program:
    """Two-phase aggregate reduct followed by the classical one: drop rules
    with an i-false aggregate, replace each remaining aggregate by the
    conjunction of its i-true conditions, then take the classical reduct."""
    kept: list[Rule] = []
    for rule in program.rules:
        body: list[Literal] = []
        dropped = False
        for element in rule.body:
            if isinstance(element, Literal):
                body.append(element)
            elif eval_aggregate(element, i):
                # in-place replacement by the set of its i-true conditions
                body.extend(c for c in element.conditions if literal_holds(c, i))
            else:
                dropped = True
                break
        if not dropped:
            kept.append(Rule(rule.head, tuple(body)))
    return gl_reduct(Program(tuple(kept), program.universe), i)


def flp_reduct(program: Program, i: Interpretation) -> Program:
    """Keep exactly the rules whose body is satisfied in i, unchanged."""
    kept = tuple(rule for rule in program.rules if sat2(rule.body, i))
    return Program(kept, program.universe)


# ---------------------------------------------------------------------------
# Kripke-Kleene and well-founded fixpoints
# ---------------------------------------------------------------------------


def _require_truth_function(sem: SemanticsId) -> None:
    if not sem.has_truth_function:
        raise CapabilityError(
            f"{sem.value} has no three-valued truth function, so its "
            "Kripke-Kleene and well-founded fixpoints are not defined here"
        )


def kripke_kleene(sem: SemanticsId | str, program: Program) -> InterpretationPair:
    """Least precise fixpoint of the approximator, iterated from (bottom, top)."""
    sem = SemanticsId.from_tag(sem)
    _require_truth_function(sem)
    _check_gl_applicable(sem, program)
    pair = InterpretationPair.least_precise(program.universe)
    for _ in range(2 * len(program.universe) + 2):
        step = approximator_step(sem, program, pair)
        nxt = InterpretationPair(step.lower_next, step.upper_next)
        if nxt == pair:
            return pair
        pair = nxt
    raise AssertionError("approximator failed to reach a fixpoint in 2|universe|+2 steps")


def well_founded(sem: SemanticsId | str, program: Program) -> WellFoundedResult:
    """Alternating least-fixpoint refinement of lower and upper bounds,
    started at the least precise pair and run until stationary."""
    sem = SemanticsId.from_tag(sem)
    _require_truth_function(sem)
    _check_gl_applicable(sem, program)
    universe = program.universe
    x = Interpretation.empty(universe)
    y = Interpretation.full(universe)
    limit = 2 * len(universe) + 2
    for iteration in range(1, limit + 1):
        x_next = lfp_lower(sem, program, y)
        y_next = _lfp_upper(sem, program, x)
        if not x_next.atoms <= y_next.atoms:
            raise AssertionError("well-founded refinement left the consistent pairs")
        if x_next == x and y_next == y:
            return WellFoundedResult(InterpretationPair(x, y), iteration)
        x, y = x_next, y_next
    raise AssertionError("well-founded refinement failed to converge in 2|universe|+2 rounds")


def _lfp_upper(sem: SemanticsId, program: Program, x: Interpretation) -> Interpretation:
    """Least fixpoint of Z -> upper(x, Z), iterated from bottom.

    The upper slot is seeded with x: atoms already certain are possible,
    which keeps every evaluated pair consistent and computes the same
    least fixpoint (the seed is contained in it).
    """
    universe = program.universe
    current = Interpretation.empty(universe)
    for _ in range(len(universe) + 1):
        nxt = upper_step(sem, program, InterpretationPair(x, current.union(x.atoms)))
        if nxt.atoms == current.atoms:
            return current
        current = nxt
    raise AssertionError("upper operator failed to reach a fixpoint in |universe|+1 steps")


def ultimate_operator_bruteforce(
    program: Program, pair: InterpretationPair, max_atoms: int = DEFAULT_MAX_ATOMS
) -> InterpretationPair:
    """Most precise approximator of the consequence operator, computed by
    intersecting and uniting its images over the whole interval."""
    pair.require_consistent()
    if len(pair.undefined_atoms()) > max_atoms:
        raise TooLargeError(
            f"{len(pair.undefined_atoms())} undefined atoms exceed bound {max_atoms}"
        )
    lower: frozenset[str] | None = None
    upper: frozenset[str] = frozenset()
    for z in enumerate_interval(pair.lower, pair.upper):
        image = tp(program, z).atoms
        lower = image if lower is None else lower & image
        upper |= image
    assert lower is not None
    universe = program.universe
    return InterpretationPair(
        Interpretation(universe, lower), Interpretation(universe, upper)
    )
