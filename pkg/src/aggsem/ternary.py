"""The ternary satisfaction relations, their three-valued truth functions
where they exist, well-behavedness checking, precision comparison and
convexity analysis.

A ternary satisfaction relation marks body elements that are *certainly
true* in a consistent pair (lower, upper).  All relations here agree on
literals (positive: atom in lower; negative: atom not in upper) and
differ only on aggregate atoms:

  gl        literals only; aggregates are rejected
  triv      upper satisfies the atom and every condition literal has the
            same value in lower and upper (all condition atoms decided)
  gz        upper satisfies the atom and each upper-true condition is
            certainly true (reduct-style projection onto true conditions)
  ult       the atom holds at every interpretation in the interval
  lpst      same as ult by definition; kept as an independent textbook
            implementation that sweeps the whole interval unrestricted
  bnd       like ult, but sum/prod/card with = and != are decided from
            exact value bounds only (polynomial, may answer u)
  mr        upper satisfies the atom and some subset of lower does
  flp       both lower and upper satisfy the element
  ultimate  whole disjunctive bodies only: the disjunction holds at
            every interpretation in the interval (not truth-functional)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence, Union

from .bounds import bnd_truth, interval_truth
from .errors import CapabilityError, TooLargeError
from .eval2 import (
    aggregate_holds_everywhere,
    eval_aggregate,
    literal_holds,
    sat2_disjunction,
    sat2_element,
)
from .interp import Interpretation, InterpretationPair, enumerate_interval
from .syntax import (
    AggregateAtom,
    BodyElement,
    Literal,
    Program,
    combine_rules_per_head,
)
from .truth import TruthValue, conjunction, negate

__all__ = [
    "SemanticsId",
    "TruthValue",
    "sat3",
    "sat3_body",
    "sat3_upper",
    "sat3_upper_body",
    "truth3",
    "truth3_body",
    "WellBehavedReport",
    "WellBehavedCounterexample",
    "check_well_behaved",
    "PrecisionOrder",
    "PrecisionResult",
    "compare_precision",
    "is_convex",
    "all_consistent_pairs",
]

DisjunctiveBody = tuple[tuple[BodyElement, ...], ...]


class SemanticsId(Enum):
    GL = "gl"
    TRIV = "triv"
    GZ = "gz"
    ULT = "ult"
    LPST = "lpst"
    BND = "bnd"
    MR = "mr"
    FLP = "flp"
    ULTIMATE = "ultimate"

    def __str__(self) -> str:
        return self.value

    @staticmethod
    def from_tag(tag: "SemanticsId | str") -> "SemanticsId":
        if isinstance(tag, SemanticsId):
            return tag
        try:
            return SemanticsId(tag)
        except ValueError:
            valid = ", ".join(s.value for s in SemanticsId)
            raise CapabilityError(f"unknown semantics {tag!r} (expected one of: {valid})") from None

    @property
    def has_truth_function(self) -> bool:
        return self in (SemanticsId.GL, SemanticsId.TRIV, SemanticsId.ULT, SemanticsId.BND)

    @property
    def is_well_behaved_claimed(self) -> bool:
        return self not in (SemanticsId.MR, SemanticsId.FLP)

    @property
    def monotone_lower_operator(self) -> bool:
        return self is not SemanticsId.FLP


def _literal_sat3(lit: Literal, pair: InterpretationPair) -> bool:
    if lit.negated:
        return lit.atom not in pair.upper.atoms
    return lit.atom in pair.lower.atoms


def _literal_truth(lit: Literal, pair: InterpretationPair) -> TruthValue:
    if lit.atom in pair.lower.atoms:
        value = TruthValue.TRUE
    elif lit.atom not in pair.upper.atoms:
        value = TruthValue.FALSE
    else:
        value = TruthValue.UNDEFINED
    return negate(value) if lit.negated else value


def _conditions_decided(atom: AggregateAtom, pair: InterpretationPair) -> bool:
    return all(
        a in pair.lower.atoms or a not in pair.upper.atoms for a in atom.condition_atoms
    )


def _mr_witness_exists(atom: AggregateAtom, pair: InterpretationPair) -> bool:
    """Some subset of lower satisfies the atom.

    Only the trace on the atom's condition atoms matters, so the subsets
    of lower restricted to those atoms cover all cases.
    """
    base = [a for a in atom.condition_atoms if a in pair.lower.atoms]
    blank = pair.lower.with_atoms(())
    for mask in range(1 << len(base)):
        chosen = [a for bit, a in enumerate(base) if mask >> bit & 1]
        if eval_aggregate(atom, blank.with_atoms(chosen)):
            return True
    return False


def _lpst_aggregate(atom: AggregateAtom, pair: InterpretationPair) -> bool:
    # Deliberately sweeps the full unrestricted interval: an independent
    # realization of the same definition as ult's restricted sweep.
    return all(
        eval_aggregate(atom, z) for z in enumerate_interval(pair.lower, pair.upper)
    )


def sat3(sem: SemanticsId | str, element: BodyElement, pair: InterpretationPair) -> bool:
    """Certain-truth of one body element under the selected relation."""
    sem = SemanticsId.from_tag(sem)
    pair.require_consistent()
    if sem is SemanticsId.ULTIMATE:
        raise CapabilityError("the whole-program relation applies to bodies, not elements")

    if isinstance(element, Literal):
        if sem is SemanticsId.FLP:
            return literal_holds(element, pair.lower) and literal_holds(element, pair.upper)
        return _literal_sat3(element, pair)

    if sem is SemanticsId.GL:
        raise CapabilityError("gl is defined for aggregate-free programs only")
    if sem is SemanticsId.TRIV:
        return eval_aggregate(element, pair.upper) and _conditions_decided(element, pair)
    if sem is SemanticsId.GZ:
        if not eval_aggregate(element, pair.upper):
            return False
        return all(
            _literal_sat3(cond, pair)
            for cond in element.conditions
            if literal_holds(cond, pair.upper)
        )
    if sem is SemanticsId.ULT:
        return aggregate_holds_everywhere(element, pair)
    if sem is SemanticsId.LPST:
        return _lpst_aggregate(element, pair)
    if sem is SemanticsId.BND:
        return bnd_truth(element, pair) is TruthValue.TRUE
    if sem is SemanticsId.MR:
        return eval_aggregate(element, pair.upper) and _mr_witness_exists(element, pair)
    # flp
    return eval_aggregate(element, pair.lower) and eval_aggregate(element, pair.upper)


def _relevant_atoms(bodies: DisjunctiveBody) -> frozenset[str]:
    atoms: set[str] = set()
    for body in bodies:
        for element in body:
            if isinstance(element, Literal):
                atoms.add(element.atom)
            else:
                atoms.update(element.condition_atoms)
    return frozenset(atoms)


def sat3_body(
    sem: SemanticsId | str,
    body: Union[Sequence[BodyElement], DisjunctiveBody],
    pair: InterpretationPair,
) -> bool:
    """Certain-truth of a rule body (for `ultimate`: of the whole
    disjunction of one head's bodies, which must be passed as a tuple of
    bodies)."""
    sem = SemanticsId.from_tag(sem)
    if sem is SemanticsId.ULTIMATE:
        pair.require_consistent()
        bodies: DisjunctiveBody = tuple(tuple(b) for b in body)  # type: ignore[arg-type]
        restrict = _relevant_atoms(bodies)
        return all(
            sat2_disjunction(bodies, z)
            for z in enumerate_interval(pair.lower, pair.upper, restrict=restrict)
        )
    return all(sat3(sem, element, pair) for element in body)  # type: ignore[arg-type]


def truth3(sem: SemanticsId | str, element: BodyElement, pair: InterpretationPair) -> TruthValue:
    """Three-valued truth of one body element; only gl, triv, ult and bnd
    have truth functions."""
    sem = SemanticsId.from_tag(sem)
    pair.require_consistent()
    if not sem.has_truth_function:
        hint = " (use triv, which it coincides with)" if sem is SemanticsId.GZ else ""
        raise CapabilityError(f"{sem.value} has no three-valued truth function{hint}")

    if isinstance(element, Literal):
        return _literal_truth(element, pair)

    if sem is SemanticsId.GL:
        raise CapabilityError("gl is defined for aggregate-free programs only")
    if sem is SemanticsId.TRIV:
        if _conditions_decided(element, pair):
            return TruthValue.from_bool(eval_aggregate(element, pair.upper))
        return TruthValue.UNDEFINED
    if sem is SemanticsId.ULT:
        return interval_truth(element, pair)
    return bnd_truth(element, pair)


def truth3_body(
    sem: SemanticsId | str, body: Sequence[BodyElement], pair: InterpretationPair
) -> TruthValue:
    return conjunction(truth3(sem, element, pair) for element in body)


def sat3_upper(sem: SemanticsId | str, element: BodyElement, pair: InterpretationPair) -> bool:
    """Possible-truth (satisfiability) of one element: truth value t or u."""
    return truth3(sem, element, pair) is not TruthValue.FALSE


def sat3_upper_body(
    sem: SemanticsId | str, body: Sequence[BodyElement], pair: InterpretationPair
) -> bool:
    return truth3_body(sem, body, pair) is not TruthValue.FALSE


# ---------------------------------------------------------------------------
# Well-behavedness and precision
# ---------------------------------------------------------------------------

Formula = Union[BodyElement, DisjunctiveBody]


def _subset_key(universe: tuple[str, ...]) -> Callable[[frozenset[str]], tuple]:
    index = {a: i for i, a in enumerate(universe)}

    def key(s: frozenset[str]) -> tuple:
        return (len(s), tuple(sorted(index[a] for a in s)))

    return key


def _ordered_subsets(universe: tuple[str, ...]) -> list[frozenset[str]]:
    subsets = [frozenset()]
    for atom in universe:
        subsets += [s | {atom} for s in subsets]
    return sorted(subsets, key=_subset_key(universe))


def all_consistent_pairs(universe: Iterable[str]) -> list[InterpretationPair]:
    """Every consistent pair over the universe, in a fixed order."""
    universe = tuple(universe)
    key = _subset_key(universe)
    pairs = []
    for upper in _ordered_subsets(universe):
        up = Interpretation(universe, upper)
        for lower in sorted(
            (s for s in _ordered_subsets(universe) if s <= upper), key=key
        ):
            pairs.append(InterpretationPair(Interpretation(universe, lower), up))
    return pairs


def _formulas_of(
    sem: SemanticsId, source: Union[Program, Iterable[BodyElement]]
) -> tuple[tuple[str, ...], list[Formula]]:
    if isinstance(source, Program):
        universe = source.universe
        if sem is SemanticsId.ULTIMATE:
            combined = combine_rules_per_head(source)
            return universe, [bodies for _, bodies in combined.entries]
        return universe, list(source.body_elements())
    elements = list(source)
    seen: dict[str, None] = {}
    for element in elements:
        atoms = [element.atom] if isinstance(element, Literal) else element.condition_atoms
        for a in atoms:
            seen.setdefault(a)
    if sem is SemanticsId.ULTIMATE:
        return tuple(seen), [((element,),) for element in elements]
    return tuple(seen), elements


def _sat3_formula(sem: SemanticsId, formula: Formula, pair: InterpretationPair) -> bool:
    if sem is SemanticsId.ULTIMATE:
        return sat3_body(sem, formula, pair)  # type: ignore[arg-type]
    return sat3(sem, formula, pair)  # type: ignore[arg-type]


def _sat2_formula(sem: SemanticsId, formula: Formula, i: Interpretation) -> bool:
    if sem is SemanticsId.ULTIMATE:
        return sat2_disjunction(formula, i)  # type: ignore[arg-type]
    return sat2_element(formula, i)  # type: ignore[arg-type]


@dataclass(frozen=True)
class WellBehavedCounterexample:
    kind: str  # "exact" or "monotone"
    formula: Formula
    pair: InterpretationPair
    refined: InterpretationPair | None = None

    def __str__(self) -> str:
        if self.kind == "exact":
            return f"two-valued disagreement at {self.pair} on {_format_formula(self.formula)}"
        return (
            f"satisfied at {self.pair} but not at the refinement {self.refined} "
            f"on {_format_formula(self.formula)}"
        )


def _format_formula(formula: Formula) -> str:
    if isinstance(formula, tuple):
        return " | ".join(", ".join(str(e) for e in body) for body in formula)
    return str(formula)


@dataclass(frozen=True)
class WellBehavedReport:
    holds: bool
    counterexample: WellBehavedCounterexample | None = None


def check_well_behaved(
    sem: SemanticsId | str,
    source: Union[Program, Iterable[BodyElement]],
    max_universe: int = 8,
) -> WellBehavedReport:
    """Exhaustively test both well-behavedness conditions over all
    consistent pairs: agreement with two-valued satisfaction on exact
    pairs, and preservation of satisfaction under precision refinement.

    Refinement is checked one atom at a time; any refinement decomposes
    into such steps, so this is complete.  When a violation exists, a
    scan ordered from the least precise pair reconstructs a
    counterexample with the smallest refined upper set.
    """
    sem = SemanticsId.from_tag(sem)
    universe, formulas = _formulas_of(sem, source)
    if len(universe) > max_universe:
        raise TooLargeError(f"universe of {len(universe)} atoms exceeds bound {max_universe}")

    pairs = all_consistent_pairs(universe)
    cache: dict[tuple[int, InterpretationPair], bool] = {}

    def sat(fi: int, pair: InterpretationPair) -> bool:
        key = (fi, pair)
        if key not in cache:
            cache[key] = _sat3_formula(sem, formulas[fi], pair)
        return cache[key]

    for fi, formula in enumerate(formulas):
        for subset in _ordered_subsets(universe):
            exact = InterpretationPair.exact(Interpretation(universe, subset))
            if sat(fi, exact) != _sat2_formula(sem, formula, exact.lower):
                return WellBehavedReport(
                    False, WellBehavedCounterexample("exact", formula, exact)
                )

    violated = any(
        sat(fi, pair) and not sat(fi, refined)
        for fi in range(len(formulas))
        for pair in pairs
        for refined in _single_refinements(pair)
    )
    if not violated:
        return WellBehavedReport(True)

    for pair in sorted(pairs, key=lambda p: -len(p.upper.atoms - p.lower.atoms)):
        for fi, formula in enumerate(formulas):
            if not sat(fi, pair):
                continue
            for refined in pairs:
                if refined != pair and leq_precision_fast(pair, refined) and not sat(fi, refined):
                    return WellBehavedReport(
                        False,
                        WellBehavedCounterexample("monotone", formula, pair, refined),
                    )
    raise AssertionError("single-step violation had no two-pair witness")


def leq_precision_fast(a: InterpretationPair, b: InterpretationPair) -> bool:
    return a.lower.atoms <= b.lower.atoms and b.upper.atoms <= a.upper.atoms


def _single_refinements(pair: InterpretationPair) -> Iterable[InterpretationPair]:
    for atom in pair.undefined_atoms():
        yield InterpretationPair(pair.lower.union((atom,)), pair.upper)
        yield InterpretationPair(pair.lower, pair.upper.difference((atom,)))


class PrecisionOrder(Enum):
    EQUAL = "equal"
    FIRST_LESS_PRECISE = "first <=p second"
    SECOND_LESS_PRECISE = "second <=p first"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PrecisionResult:
    order: PrecisionOrder
    only_first: tuple[Formula, InterpretationPair] | None
    only_second: tuple[Formula, InterpretationPair] | None


def compare_precision(
    sem_a: SemanticsId | str,
    sem_b: SemanticsId | str,
    program: Program,
    max_universe: int = 8,
) -> PrecisionResult:
    """Compare two relations pointwise over all consistent pairs and all
    body elements of the program; a relation is less precise when its
    satisfactions are a subset of the other's."""
    sem_a, sem_b = SemanticsId.from_tag(sem_a), SemanticsId.from_tag(sem_b)
    for sem in (sem_a, sem_b):
        if sem is SemanticsId.ULTIMATE:
            raise CapabilityError("precision comparison covers element-wise relations only")
    if len(program.universe) > max_universe:
        raise TooLargeError(
            f"universe of {len(program.universe)} atoms exceeds bound {max_universe}"
        )
    only_a = only_b = None
    for element in program.body_elements():
        for pair in all_consistent_pairs(program.universe):
            a, b = sat3(sem_a, element, pair), sat3(sem_b, element, pair)
            if a and not b and only_a is None:
                only_a = (element, pair)
            if b and not a and only_b is None:
                only_b = (element, pair)
    if only_a is None and only_b is None:
        order = PrecisionOrder.EQUAL
    elif only_a is None:
        order = PrecisionOrder.FIRST_LESS_PRECISE
    elif only_b is None:
        order = PrecisionOrder.SECOND_LESS_PRECISE
    else:
        order = PrecisionOrder.INCOMPARABLE
    return PrecisionResult(order, only_a, only_b)


def is_convex(atom: AggregateAtom, max_condition_atoms: int = 16) -> bool:
    """No chain X <= Y <= Z over the condition atoms satisfies the atom at
    X and Z but not at Y (checked by subset/superset reachability)."""
    atoms = atom.condition_atoms
    n = len(atoms)
    if n > max_condition_atoms:
        raise TooLargeError(
            f"{n} condition atoms exceed the convexity bound {max_condition_atoms}"
        )
    blank = Interpretation.of(atoms)
    sat = [
        eval_aggregate(atom, blank.with_atoms(a for b, a in enumerate(atoms) if mask >> b & 1))
        for mask in range(1 << n)
    ]
    has_sat_subset = list(sat)
    for mask in range(1 << n):
        if not has_sat_subset[mask]:
            has_sat_subset[mask] = any(
                has_sat_subset[mask ^ (1 << b)] for b in range(n) if mask >> b & 1
            )
    has_sat_superset = list(sat)
    for mask in range((1 << n) - 1, -1, -1):
        if not has_sat_superset[mask]:
            has_sat_superset[mask] = any(
                has_sat_superset[mask | (1 << b)] for b in range(n) if not mask >> b & 1
            )
    return not any(
        not sat[mask] and has_sat_subset[mask] and has_sat_superset[mask]
        for mask in range(1 << n)
    )
