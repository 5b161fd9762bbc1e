"""Partition a positive sequence into the maximum number of parts with
non-decreasing totals.

This is the restricted wrap seen from the other side: the linear scan's
fold chain at the final hinge cuts the sequence into the most parts any
non-decreasing-totals partition can have, and the last part's total equals
the minimum restricted wrapping length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Ruler, Variant
from .wrap import wrap_linear


@dataclass(frozen=True)
class PartitionResult:
    """A maximal partition: cut indices, the parts, and their totals."""

    boundaries: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    totals: tuple[int, ...]
    count: int


def max_parts_partition(seq: Iterable[int]) -> PartitionResult:
    """Cut ``seq`` into the maximum number of substrings with non-decreasing sums.

    A cut index b means the split falls between seq[b-1] and seq[b].
    Raises EmptyInput or NonPositiveValue for invalid input.
    """
    ruler = seq if isinstance(seq, Ruler) else Ruler(seq)
    run = wrap_linear(ruler, Variant.RESTRICTED, want_plan=True)
    plan = run.answer.plan
    return _result_from_folds(ruler.lengths, plan.folds, plan.part_totals)


def _result_from_folds(
    values: Sequence[int], folds: tuple[int, ...], totals: tuple[int, ...]
) -> PartitionResult:
    cuts = (0,) + folds + (len(values),)
    parts = tuple(tuple(values[a:b]) for a, b in zip(cuts, cuts[1:]))
    return PartitionResult(boundaries=folds, parts=parts, totals=totals, count=len(parts))
