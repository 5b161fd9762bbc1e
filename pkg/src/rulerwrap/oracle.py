"""Exhaustive ground truth over all fold subsets, for verification at small n.

Every subset of the interior hinges is pushed through the plan validator;
whatever survives is the complete feasible set.  Exponential on purpose —
the cutoff refuses instances where 2^(n-1) stops being instant.
"""

from __future__ import annotations

from typing import Iterator

from .core import InfeasiblePlan, Ruler, TooLarge, Variant, WrapAnswer, WrapPlan, plan_from_folds

MAX_ORACLE_N = 20


def _check_size(ruler: Ruler) -> None:
    if ruler.n > MAX_ORACLE_N:
        raise TooLarge(
            f"oracle enumerates 2^(n-1) fold subsets; n={ruler.n} exceeds the cutoff {MAX_ORACLE_N}"
        )


def enumerate_feasible(ruler: Ruler, variant: Variant) -> Iterator[WrapPlan]:
    """Yield every accepted plan, in increasing order of the fold-indicator word.

    Bit h-1 of the word marks hinge h as folded, so the empty fold set
    comes first and enumeration order is reproducible.
    """
    _check_size(ruler)
    n = ruler.n
    for word in range(1 << (n - 1)):
        folds = [h for h in range(1, n) if word >> (h - 1) & 1]
        try:
            yield plan_from_folds(ruler, folds, variant)
        except InfeasiblePlan:
            continue


def oracle_min_length(ruler: Ruler, variant: Variant) -> WrapAnswer:
    """Minimum length over all feasible plans; first witness in enumeration order wins."""
    best: WrapPlan | None = None
    for plan in enumerate_feasible(ruler, variant):
        if best is None or plan.length < best.length:
            best = plan
    assert best is not None  # the empty fold set is always feasible
    last = best.folds[-1] if best.folds else 0
    return WrapAnswer(length=best.length, last_fold=last, plan=best)


def oracle_max_parts(ruler: Ruler) -> int:
    """Maximum number of parts over all restricted-feasible plans."""
    best = 0
    for plan in enumerate_feasible(ruler, Variant.RESTRICTED):
        if len(plan.part_totals) > best:
            best = len(plan.part_totals)
    return best
