"""Three-valued truth values with their truth and precision orders.

The truth order is F < U < T.  The precision order makes U the least
element and leaves T and F incomparable maximal elements: a value can
only gain information by moving away from U.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable


class TruthValue(Enum):
    TRUE = "t"
    UNDEFINED = "u"
    FALSE = "f"

    def __str__(self) -> str:
        return self.value

    @property
    def truth_rank(self) -> int:
        return {TruthValue.FALSE: 0, TruthValue.UNDEFINED: 1, TruthValue.TRUE: 2}[self]

    def leq_truth(self, other: "TruthValue") -> bool:
        return self.truth_rank <= other.truth_rank

    def leq_precision(self, other: "TruthValue") -> bool:
        """U is below everything; T and F are only below themselves."""
        return self is TruthValue.UNDEFINED or self is other

    @staticmethod
    def from_bool(value: bool) -> "TruthValue":
        return TruthValue.TRUE if value else TruthValue.FALSE


def negate(value: TruthValue) -> TruthValue:
    if value is TruthValue.TRUE:
        return TruthValue.FALSE
    if value is TruthValue.FALSE:
        return TruthValue.TRUE
    return TruthValue.UNDEFINED


def conjunction(values: Iterable[TruthValue]) -> TruthValue:
    """Strong-Kleene conjunction: F dominates, then U, else T."""
    result = TruthValue.TRUE
    for value in values:
        if value is TruthValue.FALSE:
            return TruthValue.FALSE
        if value is TruthValue.UNDEFINED:
            result = TruthValue.UNDEFINED
    return result

