"""Constant-workspace streaming greedy: fold whenever possible.

The state is two running totals — the last closed part and the currently
open one — so the rule streams over its input in O(1) memory.  Against an
exact minimizer it is usually within a modest factor on random inputs, yet
``adversarial_family`` drives its ratio up proportionally to the square
root of the input size, so it is cheap but not safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Union

from .core import EmptyInput, NonPositiveValue, Ruler, Variant, WrapPlan, plan_from_folds
from .wrap import wrap_linear


@dataclass
class GreedyState:
    """Two totals and a close counter; everything the streaming rule keeps."""

    prev: int = 0
    cur: int = 0
    closes: int = 0

    def push(self, value: int) -> None:
        if value <= 0:
            raise NonPositiveValue(f"stream value {value} is not positive")
        self.cur += value
        if self.cur >= self.prev:
            self.prev = self.cur
            self.cur = 0
            self.closes += 1

    def finish(self, variant: Variant) -> "GreedyResult":
        """Settle the open flap and report (length, folds).

        A close on the very last value lands on the ruler's end, which is
        not a foldable hinge, so it is not counted.  In the restricted
        variant a short flap is merged into the last closed part, undoing
        that part's closing fold; the merge keeps the closed totals
        non-decreasing, so the result is always a valid plan.
        """
        if self.closes == 0:
            raise EmptyInput("greedy saw no values")
        flap = self.cur
        if flap == 0:
            return GreedyResult(self.prev, self.closes - 1)
        if variant is Variant.UNRESTRICTED:
            return GreedyResult(max(self.prev, flap), self.closes)
        if flap >= self.prev:
            return GreedyResult(flap, self.closes)
        return GreedyResult(self.prev + flap, self.closes - 1)


class GreedyResult(NamedTuple):
    length: int
    folds: int


def greedy_wrap(lengths: Iterable[int], variant: Variant = Variant.RESTRICTED) -> GreedyResult:
    """Run the greedy rule over a stream of positive values.

    The stream is consumed one value at a time and never retained.
    """
    state = GreedyState()
    for v in lengths:
        state.push(int(v))
    return state.finish(variant)


def greedy_plan(lengths: Iterable[int], variant: Variant = Variant.RESTRICTED) -> WrapPlan:
    """Non-streaming test mode: record the greedy's folds and validate them.

    Returns the plan the greedy's choices amount to; its length always
    equals ``greedy_wrap``'s and plan validation re-derives the fold count.
    """
    values = [int(v) for v in lengths]
    ruler = Ruler(values)
    state = GreedyState()
    closed_at = []
    for i, v in enumerate(values, start=1):
        state.push(v)
        if state.cur == 0:
            closed_at.append(i)
    result = state.finish(variant)
    folds = closed_at[: result.folds]
    plan = plan_from_folds(ruler, folds, variant)
    assert plan.length == result.length
    return plan


def adversarial_family(m: int) -> Ruler:
    """Block i contributes 2, 1 and then 2i copies of 3; m blocks in total.

    Every such ruler wraps into length 3 exactly (all parts can total 3),
    but the misaligned 2,1 prefixes make the greedy's closed totals climb,
    so its ratio grows without bound as m does.  n = 2m + m(m+1).
    """
    if m < 1:
        raise ValueError("need at least one block")
    values: list[int] = []
    for i in range(1, m + 1):
        values.append(2)
        values.append(1)
        values.extend([3] * (2 * i))
    return Ruler(values)


@dataclass(frozen=True)
class RatioReport:
    """Greedy-over-exact ratios for a batch of instances."""

    ratios: tuple[Fraction, ...]
    mean: Fraction
    max: Fraction


def ratio_experiment(
    instances: Iterable[Union[Ruler, Iterable[int]]],
    variant: Variant = Variant.RESTRICTED,
) -> RatioReport:
    """Exact ratios greedy/exact per instance, with mean and max.

    The exact side runs the linear minimizer; ratios are exact fractions,
    each at least 1.
    """
    ratios = []
    for inst in instances:
        ruler = inst if isinstance(inst, Ruler) else Ruler(inst)
        g = greedy_wrap(ruler.lengths, variant)
        exact = wrap_linear(ruler, variant, want_plan=False).answer.length
        ratios.append(Fraction(g.length, exact))
    if not ratios:
        raise EmptyInput("no instances given")
    return RatioReport(
        ratios=tuple(ratios),
        mean=sum(ratios, Fraction(0)) / len(ratios),
        max=max(ratios),
    )


def stream_blocks(ruler: Ruler) -> Iterator[int]:
    """Yield a ruler's lengths one at a time (handy for streaming tests)."""
    yield from ruler.lengths
