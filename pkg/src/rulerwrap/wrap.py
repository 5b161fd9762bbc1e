"""The three exact wrap minimizers, sharing one answer contract.

``wrap_quadratic`` evaluates the defining recurrence directly and returns
every hinge's arc; ``wrap_nlogn`` maintains the surviving arcs in an array
that stays sorted both by position and by arc end, replacing the scan with
a binary search; ``wrap_linear`` exploits that hinge positions themselves
increase, so a head pointer can sweep forward instead of searching, giving
amortized O(1) per hinge.  All three produce identical answers and, when
asked, identical fold plans.

The wrapping length of hinge i is y_i = x_i - x_h where h is the latest
earlier hinge whose arc ends at or before x_i (x_h + y_h <= x_i).  The
restricted optimum is y_n.  The unrestricted optimum picks the last folded
hinge h to minimize max(y_h, x_n - x_h); the pruned algorithms evaluate
that over their survivors, which is safe because a pair is only dropped
when a better candidate is kept.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import backend
from .core import (
    ArcPair,
    Ruler,
    Variant,
    WrapAnswer,
    plan_from_folds,
    reconstruct_folds,
)


@dataclass(frozen=True)
class TraceStep:
    """Array contents after one hinge is processed.

    ``live`` pairs each surviving ArcPair with its array slot.  The discard
    fields record what this step removed: ``left_discards`` counts pairs
    the head pointer walked past, ``right_discards`` lists pairs popped
    from the tail because the new arc ends no later than theirs.
    """

    step: int
    live: tuple[tuple[int, ArcPair], ...]
    left_discards: int = 0
    right_discards: tuple[ArcPair, ...] = ()


@dataclass(frozen=True)
class LinearRunStats:
    """Work counters for one linear-scan run."""

    head_advances: int
    tail_discards: int
    max_occupancy: int


class LinearRun(NamedTuple):
    answer: WrapAnswer
    stats: LinearRunStats
    trace: Optional[tuple[TraceStep, ...]]


def wrap_quadratic(ruler: Ruler) -> list[ArcPair]:
    """Evaluate the wrapping-length recurrence for every hinge, keeping all pairs.

    For each hinge i >= 1, scan earlier hinges from the right for the first
    one whose arc ends at or before x_i; that hinge has the largest
    position among the eligible ones, which is what minimizes y_i.
    """
    pos = ruler.positions
    n = ruler.n
    pairs = [ArcPair(0, 0, 0, None)]
    ys = [0]
    for i in range(1, n + 1):
        x = pos[i]
        h = i - 1
        while pos[h] + ys[h] > x:
            h -= 1
        y = x - pos[h]
        ys.append(y)
        pairs.append(ArcPair(i, x, y, h))
    return pairs


def unrestricted_final_scan(pairs: Sequence[ArcPair], x_n: int) -> tuple[int, int]:
    """Pick the last-fold hinge minimizing max(wrapping length, distance to end).

    ``pairs`` must be non-empty and sorted by x.  Ties go to the largest
    position, so the result is deterministic.  Returns (hinge, length).
    """
    if not pairs:
        raise ValueError("no candidate pairs to scan")
    best_hinge = -1
    best = None
    for p in pairs:
        value = max(p.y, x_n - p.x)
        if best is None or value <= best:
            best = value
            best_hinge = p.hinge
    return best_hinge, best


def quadratic_answer(ruler: Ruler, variant: Variant = Variant.RESTRICTED) -> WrapAnswer:
    """Full answer (with plan) from the quadratic recurrence.

    The unrestricted side scans all n+1 hinges; the pruned algorithms scan
    only survivors, so this path doubles as an internal cross-check.
    """
    pairs = wrap_quadratic(ruler)
    pred = [0] + [p.pred for p in pairs[1:]]
    if variant is Variant.RESTRICTED:
        anchor = ruler.n
        length = pairs[-1].y
    else:
        anchor, length = unrestricted_final_scan(pairs, ruler.total)
    folds = reconstruct_folds(pred, anchor)
    plan = plan_from_folds(ruler, folds, variant)
    return WrapAnswer(length=length, last_fold=folds[-1] if folds else 0, plan=plan)


def wrap_nlogn(ruler: Ruler, variant: Variant = Variant.RESTRICTED, on_insert=None) -> WrapAnswer:
    """Binary-search variant over the doubly-sorted survivor array.

    The survivor array is sorted both by x and by x + y, so the rightmost
    pair ending at or before x_i is found by bisection on the ends; pairs
    whose arcs end at or after the new arc's end are popped from the tail
    before inserting.  Nothing is ever dropped on the left.  ``on_insert``,
    if given, is called after every insertion with (i, xs, ys) so tests can
    check the sortedness invariant.
    """
    pos = ruler.positions
    n = ruler.n
    xs = [0]
    ys = [0]
    hs = [0]
    ends = [0]
    pred = [0] * (n + 1)
    for i in range(1, n + 1):
        x = pos[i]
        j = bisect.bisect_right(ends, x) - 1
        y = x - xs[j]
        pred[i] = hs[j]
        end = x + y
        while ends[-1] >= end:
            xs.pop()
            ys.pop()
            hs.pop()
            ends.pop()
        xs.append(x)
        ys.append(y)
        hs.append(i)
        ends.append(end)
        if on_insert is not None:
            on_insert(i, tuple(xs), tuple(ys))

    if variant is Variant.RESTRICTED:
        anchor = n
        length = ys[-1]
    else:
        x_n = pos[-1]
        anchor, length = _survivor_scan(hs, xs, ys, x_n)
    folds = reconstruct_folds(pred, anchor)
    plan = plan_from_folds(ruler, folds, variant)
    return WrapAnswer(length=length, last_fold=folds[-1] if folds else 0, plan=plan)


def wrap_linear(
    ruler: Ruler,
    variant: Variant = Variant.RESTRICTED,
    *,
    trace: bool = False,
    want_plan: bool = True,
    force_backend: Optional[str] = None,
) -> LinearRun:
    """Amortized linear-time wrap via the head/tail slot array.

    With ``trace`` on, the run additionally records the array contents
    after every hinge (pure-Python path; meant for small inputs).  With
    ``want_plan`` off, the predecessor side array is not allocated and the
    answer carries no plan, which is the lean path for huge rulers.
    """
    if trace:
        res, steps = _scan_traced(ruler.lengths)
    else:
        res = backend.scan(
            _kernel_input(ruler),
            want_pred=want_plan,
            want_y=False,
            total_bound=ruler.total,
            force=force_backend,
        )
        steps = None
    stats = LinearRunStats(
        head_advances=res.head_advances,
        tail_discards=res.tail_discards,
        max_occupancy=res.max_occupancy,
    )
    answer = _answer_from_scan(ruler, res, variant, want_plan)
    return LinearRun(answer=answer, stats=stats, trace=steps)


def _kernel_input(ruler: Ruler):
    """Reuse one uint64 view of the lengths across repeated runs."""
    if ruler.total > backend.COMPILED_MAX_TOTAL:
        return ruler.lengths
    if ruler._array is None:
        ruler._array = np.asarray(ruler.lengths, dtype=np.uint64)
    return ruler._array


def _survivor_scan(hinges, xs, ys, x_n) -> tuple[int, int]:
    """min over survivors of max(y, x_n - x), ties to the largest x."""
    if isinstance(xs, np.ndarray):
        gap = np.uint64(x_n) - xs
        values = np.maximum(ys, gap)
        best = int(values.min())
        idx = int(np.nonzero(values == best)[0][-1])
        return int(hinges[idx]), best
    best_hinge = -1
    best = None
    for h, x, y in zip(hinges, xs, ys):
        value = max(y, x_n - x)
        if best is None or value <= best:
            best = value
            best_hinge = h
    return int(best_hinge), best


def _answer_from_scan(
    ruler: Ruler, res: backend.ScanResult, variant: Variant, want_plan: bool
) -> WrapAnswer:
    if variant is Variant.RESTRICTED:
        anchor = ruler.n
        length = res.y_n
        # the head pair is the one y_n was measured from: the last fold
        last_fold = int(res.live_hinges[0])
    else:
        anchor, length = _survivor_scan(res.live_hinges, res.live_x, res.live_y, res.x_n)
        last_fold = int(res.live_hinges[0]) if anchor == ruler.n else anchor
    plan = None
    if want_plan:
        folds = reconstruct_folds(res.pred, anchor)
        plan = plan_from_folds(ruler, folds, variant)
        last_fold = folds[-1] if folds else 0
    return WrapAnswer(length=length, last_fold=last_fold, plan=plan)


def _scan_traced(lengths: Sequence[int]):
    """Slot-array scan that records a TraceStep after every hinge."""
    n = len(lengths)
    px = [0] * (n + 1)
    py = [0] * (n + 1)
    ph = [0] * (n + 1)
    pred = [0] * (n + 1)
    slot_pairs: list[Optional[ArcPair]] = [None] * (n + 1)
    slot_pairs[0] = ArcPair(0, 0, 0, None)

    head = 0
    tail = 0
    advances = 0
    discards = 0
    max_occ = 1
    steps = [TraceStep(0, ((0, slot_pairs[0]),))]

    for i in range(1, n + 1):
        x = px[tail] + lengths[i - 1]
        stepped = 0
        while head != tail and px[head + 1] + py[head + 1] <= x:
            head += 1
            stepped += 1
        advances += stepped
        y = x - px[head]
        pred[i] = ph[head]
        dropped = []
        while px[tail] + py[tail] >= x + y:
            dropped.append(slot_pairs[tail])
            tail -= 1
            discards += 1
        tail += 1
        px[tail] = x
        py[tail] = y
        ph[tail] = i
        slot_pairs[tail] = ArcPair(i, x, y, pred[i])
        occ = tail - head + 1
        if occ > max_occ:
            max_occ = occ
        live = tuple((s, slot_pairs[s]) for s in range(head, tail + 1))
        steps.append(TraceStep(i, live, stepped, tuple(dropped)))

    res = backend.ScanResult(
        n=n,
        x_n=px[tail],
        y_n=py[tail],
        live_hinges=ph[head : tail + 1],
        live_x=px[head : tail + 1],
        live_y=py[head : tail + 1],
        head_advances=advances,
        tail_discards=discards,
        max_occupancy=max_occ,
        pred=pred,
        y_all=None,
        backend="traced",
    )
    return res, tuple(steps)


def format_trace(steps: Sequence[TraceStep]) -> str:
    """Render trace steps as one line per step, slots and pairs spelled out."""
    lines = []
    for st in steps:
        cells = " ".join(f"P[{slot}]=({p.x}, {p.y})" for slot, p in st.live)
        lines.append(f"step {st.step}: {cells}")
    return "\n".join(lines) + "\n"
