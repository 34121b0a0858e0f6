"""Independent brute-force implementations used by tests and the `verify`
command.  These deliberately re-derive their answers from first
principles (direct enumeration, reduct constructions) and do not share
code with the main-path implementations of the same quantities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .bounds import Bounds, bnd_truth, exact_bounds
from .errors import TooLargeError
from .eval2 import AggValue, is_model, tp
from .fixpoints import (
    flp_reduct,
    gl_reduct,
    gz_reduct,
    lower_step,
    stable_enumerate,
    ultimate_operator_bruteforce,
)
from .interp import Interpretation, InterpretationPair
from .syntax import (
    AggFunc,
    AggregateAtom,
    Comparison,
    Literal,
    Program,
    Rule,
    combine_rules_per_head,
)
from .ternary import SemanticsId, all_consistent_pairs, sat3
from .truth import TruthValue

__all__ = [
    "brute_bounds",
    "brute_sat_ult",
    "brute_sat_ult_upper",
    "brute_sat_triv",
    "brute_sat_mr",
    "brute_bnd_truth",
    "minimal_model_check",
    "reduct_stable_models",
    "alternating_reduct_wf",
    "VerificationReport",
    "verify_program",
    "random_aggregate_atom",
    "random_program",
]

MAX_BRUTE_CONDITIONS = 16


def _brute_value(atom: AggregateAtom, true_atoms: frozenset[str]) -> int | Fraction | None:
    """Aggregate value from scratch: no shared evaluation helpers."""
    weights = []
    for w, lit in atom.entries:
        holds = (lit.atom in true_atoms) != lit.negated
        if holds:
            weights.append(w)
    func = atom.func
    if func is AggFunc.SUM:
        return sum(weights)
    if func is AggFunc.CARD:
        return len(weights)
    if func is AggFunc.PROD:
        result = 1
        for w in weights:
            result *= w
        return result
    if not weights:
        return None
    if func is AggFunc.MIN:
        return min(weights)
    if func is AggFunc.MAX:
        return max(weights)
    return Fraction(sum(weights), len(weights))


def _brute_compare(value: int | Fraction | None, cmp: Comparison, bound: int) -> bool:
    if value is None:
        return False
    return {
        Comparison.LT: value < bound,
        Comparison.LE: value <= bound,
        Comparison.GT: value > bound,
        Comparison.GE: value >= bound,
        Comparison.EQ: value == bound,
        Comparison.NE: value != bound,
    }[cmp]


def _interval_traces(atom: AggregateAtom, pair: InterpretationPair) -> Iterable[frozenset[str]]:
    """Condition-atom traces of all interval members, by direct counting."""
    pair.require_consistent()
    fixed = frozenset(a for a in atom.condition_atoms if a in pair.lower.atoms)
    free = [
        a
        for a in atom.condition_atoms
        if a in pair.upper.atoms and a not in pair.lower.atoms
    ]
    if len(free) > MAX_BRUTE_CONDITIONS:
        raise TooLargeError(f"{len(free)} undefined condition atoms exceed the brute bound")
    for mask in range(1 << len(free)):
        yield fixed | {a for bit, a in enumerate(free) if mask >> bit & 1}


def brute_bounds(atom: AggregateAtom, pair: InterpretationPair) -> Bounds:
    """Exact value bounds by enumerating the whole interval."""
    lb = ub = None
    empty_possible = False
    empty_certain = True
    for trace in _interval_traces(atom, pair):
        nonempty = any((lit.atom in trace) != lit.negated for _, lit in atom.entries)
        if nonempty:
            empty_certain = False
        else:
            empty_possible = True
        value = _brute_value(atom, trace)
        if value is None:
            continue
        lb = value if lb is None else min(lb, value)
        ub = value if ub is None else max(ub, value)
    if lb is None:
        return Bounds(AggValue.UNDEFINED, AggValue.UNDEFINED, empty_possible, empty_certain)
    return Bounds(AggValue.of(lb), AggValue.of(ub), empty_possible, empty_certain)


def brute_sat_ult(atom: AggregateAtom, pair: InterpretationPair) -> bool:
    """Interval-universal satisfaction by unrestricted enumeration over all
    undefined atoms of the pair, not just the aggregate's conditions."""
    pair.require_consistent()
    free = pair.undefined_atoms()
    if len(free) > MAX_BRUTE_CONDITIONS:
        raise TooLargeError(f"{len(free)} undefined atoms exceed the brute bound")
    for mask in range(1 << len(free)):
        z = pair.lower.atoms | {a for bit, a in enumerate(free) if mask >> bit & 1}
        if not _brute_compare(_brute_value(atom, frozenset(z)), atom.cmp, atom.bound):
            return False
    return True


def brute_sat_ult_upper(atom: AggregateAtom, pair: InterpretationPair) -> bool:
    """Interval-existential satisfaction by unrestricted enumeration."""
    pair.require_consistent()
    free = pair.undefined_atoms()
    if len(free) > MAX_BRUTE_CONDITIONS:
        raise TooLargeError(f"{len(free)} undefined atoms exceed the brute bound")
    for mask in range(1 << len(free)):
        z = pair.lower.atoms | {a for bit, a in enumerate(free) if mask >> bit & 1}
        if _brute_compare(_brute_value(atom, frozenset(z)), atom.cmp, atom.bound):
            return True
    return False


def brute_sat_triv(atom: AggregateAtom, pair: InterpretationPair) -> bool:
    """Condition-stability satisfaction straight from its definition: the
    upper set satisfies the atom and the set of conditions true in the
    lower set equals the set true in the upper set."""
    pair.require_consistent()
    if not _brute_compare(_brute_value(atom, pair.upper.atoms), atom.cmp, atom.bound):
        return False
    conditions = {lit for _, lit in atom.entries}
    lower_true = {c for c in conditions if (c.atom in pair.lower.atoms) != c.negated}
    upper_true = {c for c in conditions if (c.atom in pair.upper.atoms) != c.negated}
    return lower_true == upper_true


def brute_sat_mr(atom: AggregateAtom, pair: InterpretationPair) -> bool:
    """Witness-subset satisfaction with subsets of the whole lower set."""
    pair.require_consistent()
    if not _brute_compare(_brute_value(atom, pair.upper.atoms), atom.cmp, atom.bound):
        return False
    members = tuple(pair.lower)
    if len(members) > MAX_BRUTE_CONDITIONS:
        raise TooLargeError(f"{len(members)} lower atoms exceed the brute bound")
    for mask in range(1 << len(members)):
        z = frozenset(a for bit, a in enumerate(members) if mask >> bit & 1)
        if _brute_compare(_brute_value(atom, z), atom.cmp, atom.bound):
            return True
    return False


def brute_bnd_truth(atom: AggregateAtom, pair: InterpretationPair) -> TruthValue:
    """Bound-based truth recomputed from brute-force bounds."""
    if atom.func in (AggFunc.MIN, AggFunc.MAX, AggFunc.AVG):
        if brute_sat_ult(atom, pair):
            return TruthValue.TRUE
        if not brute_sat_ult_upper(atom, pair):
            return TruthValue.FALSE
        return TruthValue.UNDEFINED
    bounds = brute_bounds(atom, pair)
    lb, ub, w = bounds.lb.value, bounds.ub.value, atom.bound
    table = {
        Comparison.EQ: (lb == w == ub, lb > w or ub < w),
        Comparison.NE: (lb > w or ub < w, lb == w == ub),
        Comparison.GE: (lb >= w, ub < w),
        Comparison.GT: (lb > w, ub <= w),
        Comparison.LE: (ub <= w, lb > w),
        Comparison.LT: (ub < w, lb >= w),
    }
    is_true, is_false = table[atom.cmp]
    if is_true:
        return TruthValue.TRUE
    if is_false:
        return TruthValue.FALSE
    return TruthValue.UNDEFINED


def minimal_model_check(program: Program, i: Interpretation) -> bool:
    """i is a model and no proper subset of i is a model."""
    members = tuple(i)
    if len(members) > 20:
        raise TooLargeError(f"{len(members)} atoms exceed the minimal-model bound")
    if not is_model(program, i):
        return False
    for mask in range((1 << len(members)) - 1):
        subset = i.with_atoms(a for bit, a in enumerate(members) if mask >> bit & 1)
        if is_model(program, subset):
            return False
    return True


def _lfp_tp(program: Program) -> Interpretation:
    """Least fixpoint of the consequence operator of a negation-free program."""
    current = Interpretation.empty(program.universe)
    while True:
        nxt = tp(program, current)
        merged = current.union(nxt.atoms)
        if merged.atoms == current.atoms:
            return current
        current = merged


def alternating_reduct_wf(program: Program) -> InterpretationPair:
    """Classical alternating-fixpoint well-founded computation for
    aggregate-free programs: alternate least models of reducts until both
    bounds are stationary."""
    x = Interpretation.empty(program.universe)
    y = Interpretation.full(program.universe)
    while True:
        x_next = _lfp_tp(gl_reduct(program, y))
        y_next = _lfp_tp(gl_reduct(program, x))
        if x_next == x and y_next == y:
            return InterpretationPair(x, y)
        x, y = x_next, y_next


def reduct_stable_models(sem: SemanticsId | str, program: Program) -> list[Interpretation]:
    """Stable models via the reduct constructions (gl, gz, flp only).

    Scans all interpretations over the universe, deliberately without the
    main path's head-set pruning, so the two routes stay independent.
    """
    sem = SemanticsId.from_tag(sem)
    candidates = _candidate_interpretations(program.universe)
    models = []
    for candidate in candidates:
        if sem is SemanticsId.GL:
            ok = _lfp_tp(gl_reduct(program, candidate)).atoms == candidate.atoms
        elif sem is SemanticsId.GZ:
            ok = _lfp_tp(gz_reduct(program, candidate)).atoms == candidate.atoms
        elif sem is SemanticsId.FLP:
            ok = minimal_model_check(flp_reduct(program, candidate), candidate)
        else:
            raise TooLargeError(f"no reduct construction for {sem.value}")
        if ok:
            models.append(candidate)
    return sorted(models, key=lambda m: m.sorted_atoms)


def _candidate_interpretations(universe: tuple[str, ...]) -> list[Interpretation]:
    if len(universe) > 16:
        raise TooLargeError(f"universe of {len(universe)} atoms exceeds the brute bound")
    return [
        Interpretation.of(universe, (a for bit, a in enumerate(universe) if mask >> bit & 1))
        for mask in range(1 << len(universe))
    ]


# ---------------------------------------------------------------------------
# Cross verification
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    checked: int = 0
    skipped: int = 0
    mismatches: list[tuple[str, str, str]] = field(default_factory=list)
    stable_models: dict[str, list[Interpretation]] = field(default_factory=dict)

    def record(self, ok: bool, descriptor: str, main: object, reference: object) -> None:
        self.checked += 1
        if not ok:
            self.mismatches.append((descriptor, str(main), str(reference)))

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _sample_pairs(
    program: Program, seed: int = 0, limit: int = 800
) -> list[InterpretationPair]:
    if len(program.universe) <= 6:
        return all_consistent_pairs(program.universe)
    rng = random.Random(seed)
    universe = program.universe
    pairs = [InterpretationPair.least_precise(universe)]
    for _ in range(limit - 1):
        upper = frozenset(a for a in universe if rng.random() < 0.6)
        lower = frozenset(a for a in upper if rng.random() < 0.5)
        pairs.append(InterpretationPair.of(universe, lower, upper))
    return pairs


def verify_program(
    program: Program, sems: Sequence[SemanticsId | str], seed: int = 0
) -> VerificationReport:
    """Cross-check main-path results against the brute-force oracles and
    reduct constructions, and report the stable models per semantics.

    Universes of at most six atoms are checked over every consistent
    pair; larger ones over a seeded sample of pairs.  Individual checks
    whose oracle exceeds its enumeration bound are counted as skipped.
    """
    report = VerificationReport()
    sems = [SemanticsId.from_tag(s) for s in sems]
    pairs = _sample_pairs(program, seed)
    aggregates = program.aggregate_atoms()

    def compare(descriptor, main_fn, reference_fn):
        try:
            main, reference = main_fn(), reference_fn()
        except TooLargeError:
            report.skipped += 1
            return
        report.record(main == reference, descriptor, main, reference)

    per_atom_oracles = {
        SemanticsId.ULT: lambda a, p: (lambda: sat3("ult", a, p), lambda: brute_sat_ult(a, p)),
        SemanticsId.LPST: lambda a, p: (lambda: sat3("lpst", a, p), lambda: brute_sat_ult(a, p)),
        SemanticsId.BND: lambda a, p: (lambda: bnd_truth(a, p), lambda: brute_bnd_truth(a, p)),
        SemanticsId.MR: lambda a, p: (lambda: sat3("mr", a, p), lambda: brute_sat_mr(a, p)),
        SemanticsId.TRIV: lambda a, p: (lambda: sat3("triv", a, p), lambda: brute_sat_triv(a, p)),
    }

    for atom in aggregates:
        for pair in pairs:
            compare(
                f"bounds of {atom} at {pair}",
                lambda a=atom, p=pair: exact_bounds(a, p),
                lambda a=atom, p=pair: brute_bounds(a, p),
            )

    for sem in sems:
        if sem in per_atom_oracles:
            for atom in aggregates:
                for pair in pairs:
                    main_fn, reference_fn = per_atom_oracles[sem](atom, pair)
                    compare(f"{sem.value}: {atom} at {pair}", main_fn, reference_fn)
        elif sem in (SemanticsId.GL, SemanticsId.GZ, SemanticsId.FLP):
            if sem is SemanticsId.GL and not program.is_aggregate_free:
                continue
            compare(
                f"stable models under {sem.value}: relation path vs reduct path",
                lambda s=sem: [str(m) for m in stable_enumerate(s, program)],
                lambda s=sem: [str(m) for m in reduct_stable_models(s, program)],
            )
        elif sem is SemanticsId.ULTIMATE:
            combined = combine_rules_per_head(program)
            for pair in pairs:
                compare(
                    f"most-precise lower operator at {pair}",
                    lambda p=pair: lower_step("ultimate", combined, p),
                    lambda p=pair: ultimate_operator_bruteforce(program, p).lower,
                )

    for sem in sems:
        if sem is SemanticsId.GL and not program.is_aggregate_free:
            continue
        report.stable_models[sem.value] = stable_enumerate(sem, program)
    return report


# ---------------------------------------------------------------------------
# Seeded random inputs (reproducible corpora for fuzz suites)
# ---------------------------------------------------------------------------

ALL_FUNCS = tuple(AggFunc)
ALL_CMPS = tuple(Comparison)


def random_aggregate_atom(
    rng: random.Random,
    atoms: Sequence[str],
    max_entries: int = 4,
    weight_range: tuple[int, int] = (-3, 3),
    funcs: Sequence[AggFunc] = ALL_FUNCS,
    cmps: Sequence[Comparison] = ALL_CMPS,
    negative_conditions: bool = True,
) -> AggregateAtom:
    entries = []
    for _ in range(rng.randint(1, max_entries)):
        atom = rng.choice(list(atoms))
        negated = negative_conditions and rng.random() < 0.35
        entries.append((rng.randint(*weight_range), Literal(atom, negated)))
    return AggregateAtom(
        func=rng.choice(list(funcs)),
        entries=tuple(entries),
        cmp=rng.choice(list(cmps)),
        bound=rng.randint(weight_range[0] - 1, -weight_range[0] * max_entries),
    )


def random_program(
    rng: random.Random,
    max_atoms: int = 6,
    max_rules: int = 8,
    max_body: int = 3,
    aggregate_probability: float = 0.5,
    funcs: Sequence[AggFunc] = ALL_FUNCS,
    cmps: Sequence[Comparison] = ALL_CMPS,
    negative_conditions: bool = True,
    negative_literals: bool = True,
) -> Program:
    atoms = [f"a{i}" for i in range(rng.randint(1, max_atoms))]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        head = rng.choice(atoms)
        body = []
        for _ in range(rng.randint(0, max_body)):
            if rng.random() < aggregate_probability:
                body.append(
                    random_aggregate_atom(
                        rng,
                        atoms,
                        max_entries=3,
                        funcs=funcs,
                        cmps=cmps,
                        negative_conditions=negative_conditions,
                    )
                )
            else:
                negated = negative_literals and rng.random() < 0.4
                body.append(Literal(rng.choice(atoms), negated))
        rules.append(Rule(head, tuple(body)))
    return Program(tuple(rules), tuple(atoms))
