"""Domain types for ruler wrapping.

A carpenter's ruler is a chain of rigid segments joined by hinges; hinge 0
is the left end, hinge ``n`` the right end, and only hinges ``1..n-1`` can
physically fold.  Wrapping folds a subset of the interior hinges, all in
the same rotational direction, so the chain coils into a short envelope.

A fold set is workable exactly when the part totals it cuts the ruler into
are non-decreasing left to right; the envelope length is then the last
part's total (restricted variant) or the larger of the last two totals
(unrestricted variant, where the final flap may tuck inside the coil).
``plan_from_folds`` is the single validator encoding that rule; every
algorithm and the brute-force oracle are checked against it.

All lengths are exact integers.  Totals must fit in unsigned 64-bit range,
which keeps every test bit-deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

MAX_TOTAL = 2**64 - 1


class RulerWrapError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RulerWrapError):
    """Input values violate a domain invariant."""


class EmptyInput(DomainError):
    """No segments were given."""


class NonPositiveValue(DomainError):
    """A segment length was zero or negative."""


class TotalOverflow(DomainError):
    """The total length does not fit in unsigned 64-bit range."""


class InfeasiblePlan(RulerWrapError):
    """A fold set whose part totals decrease where they may not."""


class TooLarge(RulerWrapError):
    """Instance too large for exhaustive enumeration."""


class Variant(enum.Enum):
    """Which rule the final flap must obey.

    RESTRICTED requires the distance from the last folded hinge to the
    ruler's end to be at least the distance between the last two folded
    hinges; UNRESTRICTED drops that requirement and lets the final flap be
    shorter than the coil around it.
    """

    RESTRICTED = "restricted"
    UNRESTRICTED = "unrestricted"


class Ruler:
    """An immutable ruler: a non-empty sequence of positive segment lengths."""

    __slots__ = ("lengths", "positions", "_array")

    def __init__(self, lengths: Iterable[int]):
        values = tuple(int(v) for v in lengths)
        if not values:
            raise EmptyInput("a ruler needs at least one segment")
        positions = [0] * (len(values) + 1)
        acc = 0
        for i, v in enumerate(values):
            if v <= 0:
                raise NonPositiveValue(f"segment {i + 1} has length {v}; lengths must be positive")
            acc += v
            positions[i + 1] = acc
        if acc > MAX_TOTAL:
            raise TotalOverflow(f"total length {acc} exceeds the unsigned 64-bit limit")
        self.lengths: tuple[int, ...] = values
        self.positions: tuple[int, ...] = tuple(positions)
        self._array = None  # lazily cached uint64 view for the compiled kernel

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> int:
        return self.positions[-1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ruler) and self.lengths == other.lengths

    def __hash__(self) -> int:
        return hash(self.lengths)

    def __repr__(self) -> str:
        if self.n <= 12:
            return f"Ruler({list(self.lengths)})"
        shown = ", ".join(str(v) for v in self.lengths[:8])
        return f"Ruler([{shown}, ...] n={self.n})"


def prefix_positions(ruler: Ruler) -> tuple[int, ...]:
    """Positions x_0..x_n of the hinges: x_0 = 0, x_i - x_{i-1} = lengths[i-1]."""
    return ruler.positions


@dataclass(frozen=True)
class ArcPair:
    """One hinge's state: its position ``x`` and wrapping length ``y``.

    Wrapping the prefix left of the hinge into length ``y`` and folding the
    hinge traces an arc of radius ``y`` with apex (x, y).  ``pred`` is the
    hinge chosen as the previous fold (None for hinge 0).
    """

    hinge: int
    x: int
    y: int
    pred: Optional[int] = None

    @property
    def end(self) -> int:
        return self.x + self.y


@dataclass(frozen=True)
class WrapPlan:
    """A validated wrapping: fold hinges, the part totals they cut, and the length."""

    variant: Variant
    folds: tuple[int, ...]
    part_totals: tuple[int, ...]
    length: int


@dataclass(frozen=True)
class WrapAnswer:
    """A minimized envelope length with its witness.

    ``last_fold`` is the hinge folded last (0 when the optimum uses no
    folds at all); ``plan`` carries the full fold set when the caller asked
    for one.
    """

    length: int
    last_fold: int
    plan: Optional[WrapPlan] = None


def plan_from_folds(ruler: Ruler, folds: Iterable[int], variant: Variant) -> WrapPlan:
    """Validate a fold set and return its plan, or raise InfeasiblePlan.

    ``folds`` must be strictly increasing interior hinges (1..n-1).  The
    part totals are the consecutive differences of {0, fold positions,
    total}; all but the last must be non-decreasing, and the restricted
    variant additionally requires the last total to continue the chain.
    """
    fold_list = tuple(int(f) for f in folds)
    n = ruler.n
    prev = 0
    for f in fold_list:
        if not 1 <= f <= n - 1:
            raise ValueError(f"fold {f} is not an interior hinge of a {n}-segment ruler")
        if f <= prev:
            raise ValueError("folds must be strictly increasing")
        prev = f
    pos = ruler.positions
    cuts = (0,) + tuple(pos[f] for f in fold_list) + (pos[-1],)
    totals = tuple(b - a for a, b in zip(cuts, cuts[1:]))

    checked = len(totals) if variant is Variant.RESTRICTED else len(totals) - 1
    for j in range(1, checked):
        if totals[j - 1] > totals[j]:
            raise InfeasiblePlan(
                f"part total {totals[j - 1]} is followed by smaller total {totals[j]}"
                f" (parts {j - 1} and {j})"
            )

    if len(totals) == 1:
        length = totals[0]
    elif variant is Variant.RESTRICTED:
        length = totals[-1]
    else:
        length = max(totals[-2], totals[-1])
    return WrapPlan(variant=variant, folds=fold_list, part_totals=totals, length=length)


def reconstruct_folds(pred: Sequence[int], last_fold: int) -> tuple[int, ...]:
    """Materialize the fold chain implied by a full predecessor array.

    ``pred[i]`` is the hinge chosen as the previous fold when hinge ``i``'s
    wrapping length was computed; following it from ``last_fold`` down to
    hinge 0 yields the folded hinges.  Pass hinge ``n`` as the anchor for
    wrappings whose final part runs to the ruler's end.  The ends (hinges 0
    and n) are not folds and are excluded from the result.
    """
    n = len(pred) - 1
    chain = []
    h = last_fold
    while h > 0:
        if h < n:
            chain.append(h)
        h = pred[h]
    chain.reverse()
    return tuple(chain)
