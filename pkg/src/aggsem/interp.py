"""Interpretations, pairs, the subset and precision orders, and interval
enumeration over the powerset lattice of a fixed finite atom universe.

Bottom is the empty set, top is the full universe.  A pair (lower, upper)
stands for the three-valued interpretation that makes lower true,
upper-minus-lower undefined and everything else false; it is consistent
when lower is contained in upper.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InconsistentPairError, UniverseMismatchError

__all__ = [
    "Interpretation",
    "InterpretationPair",
    "leq_subset",
    "leq_precision",
    "enumerate_interval",
    "interval_expansion_count",
    "reset_interval_expansions",
]

# Process-wide diagnostic: number of interval expansions performed.  Used by
# the complexity-trade-off checks; not synchronized across threads.
_interval_expansions = 0


def interval_expansion_count() -> int:
    return _interval_expansions


def reset_interval_expansions() -> None:
    global _interval_expansions
    _interval_expansions = 0


@dataclass(frozen=True)
class Interpretation:
    universe: tuple[str, ...]
    atoms: frozenset[str]

    def __post_init__(self) -> None:
        unknown = self.atoms - set(self.universe)
        if unknown:
            raise UniverseMismatchError(
                f"atoms outside the universe: {', '.join(sorted(unknown))}"
            )

    @staticmethod
    def of(universe: Iterable[str], atoms: Iterable[str] = ()) -> "Interpretation":
        return Interpretation(tuple(universe), frozenset(atoms))

    @staticmethod
    def empty(universe: Iterable[str]) -> "Interpretation":
        return Interpretation.of(universe)

    @staticmethod
    def full(universe: Iterable[str]) -> "Interpretation":
        universe = tuple(universe)
        return Interpretation(universe, frozenset(universe))

    def __contains__(self, atom: str) -> bool:
        return atom in self.atoms

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        """Iterate member atoms in universe order (deterministic)."""
        return (a for a in self.universe if a in self.atoms)

    def __str__(self) -> str:
        return "{" + ", ".join(self.sorted_atoms) + "}"

    @property
    def sorted_atoms(self) -> tuple[str, ...]:
        return tuple(sorted(self.atoms))

    def with_atoms(self, atoms: Iterable[str]) -> "Interpretation":
        return Interpretation(self.universe, frozenset(atoms))

    def union(self, atoms: Iterable[str]) -> "Interpretation":
        return Interpretation(self.universe, self.atoms | frozenset(atoms))

    def difference(self, atoms: Iterable[str]) -> "Interpretation":
        return Interpretation(self.universe, self.atoms - frozenset(atoms))

    def intersection(self, atoms: Iterable[str]) -> "Interpretation":
        return Interpretation(self.universe, self.atoms & frozenset(atoms))


def _require_same_universe(a: Interpretation, b: Interpretation) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError("interpretations are over different universes")


def leq_subset(a: Interpretation, b: Interpretation) -> bool:
    """Lattice order: a <= b iff a's atoms are a subset of b's."""
    _require_same_universe(a, b)
    return a.atoms <= b.atoms


@dataclass(frozen=True)
class InterpretationPair:
    lower: Interpretation
    upper: Interpretation

    def __post_init__(self) -> None:
        _require_same_universe(self.lower, self.upper)

    @staticmethod
    def of(
        universe: Iterable[str], lower: Iterable[str], upper: Iterable[str]
    ) -> "InterpretationPair":
        universe = tuple(universe)
        return InterpretationPair(
            Interpretation.of(universe, lower), Interpretation.of(universe, upper)
        )

    @staticmethod
    def least_precise(universe: Iterable[str]) -> "InterpretationPair":
        universe = tuple(universe)
        return InterpretationPair(Interpretation.empty(universe), Interpretation.full(universe))

    @staticmethod
    def exact(interpretation: Interpretation) -> "InterpretationPair":
        return InterpretationPair(interpretation, interpretation)

    @property
    def universe(self) -> tuple[str, ...]:
        return self.lower.universe

    @property
    def is_consistent(self) -> bool:
        return self.lower.atoms <= self.upper.atoms

    @property
    def is_exact(self) -> bool:
        return self.lower.atoms == self.upper.atoms

    def undefined_atoms(self) -> tuple[str, ...]:
        """Atoms with unknown truth value, in universe order."""
        free = self.upper.atoms - self.lower.atoms
        return tuple(a for a in self.universe if a in free)

    def require_consistent(self) -> None:
        if not self.is_consistent:
            raise InconsistentPairError(f"inconsistent pair ({self.lower}, {self.upper})")

    def __str__(self) -> str:
        return f"({self.lower}, {self.upper})"


def leq_precision(a: InterpretationPair, b: InterpretationPair) -> bool:
    """Precision order: b refines a iff a.lower <= b.lower and b.upper <= a.upper."""
    if a.universe != b.universe:
        raise UniverseMismatchError("pairs are over different universes")
    return a.lower.atoms <= b.lower.atoms and b.upper.atoms <= a.upper.atoms


def enumerate_interval(
    x: Interpretation,
    y: Interpretation,
    restrict: frozenset[str] | set[str] | None = None,
) -> Iterator[Interpretation]:
    """Yield every Z with x <= Z <= y, by binary counting over y minus x.

    Free atoms vary in universe order with the earliest atom as the least
    significant bit, so the output order is fixed.  When `restrict` is
    given, atoms outside it are frozen at their x-value and only the
    restricted free atoms vary; this keeps sweeps over value-irrelevant
    atoms out of aggregate evaluations.
    """
    global _interval_expansions
    _require_same_universe(x, y)
    if not x.atoms <= y.atoms:
        raise InconsistentPairError(f"{x} is not a subset of {y}")
    free = [a for a in x.universe if a in y.atoms and a not in x.atoms]
    if restrict is not None:
        free = [a for a in free if a in restrict]
    _interval_expansions += 1
    return _iter_interval(x, free)


def _iter_interval(x: Interpretation, free: list[str]) -> Iterator[Interpretation]:
    for mask in range(1 << len(free)):
        extra = [a for bit, a in enumerate(free) if mask >> bit & 1]
        yield x.union(extra) if extra else x
