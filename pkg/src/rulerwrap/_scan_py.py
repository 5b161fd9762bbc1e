"""Pure-Python scan kernel: fallback twin of the compiled module.

Same slot-array algorithm, same comparison directions, same counters as
``_scan_cy``; Python integers make it exact for totals all the way up to
the unsigned 64-bit construction limit (the compiled kernel stops at 63
bits so its internal sums x + y cannot wrap).
"""

from __future__ import annotations

from typing import Sequence


def scan(lengths: Sequence[int], want_pred: bool, want_y: bool):
    """One left-to-right pass over the hinges, pruning dominated pairs.

    Returns the raw tuple (head, tail, px, py, ph, head_advances,
    tail_discards, max_occupancy, pred, y_all); slots head..tail of the
    px/py/ph arrays hold the surviving pairs.
    """
    n = len(lengths)
    px = [0] * (n + 1)
    py = [0] * (n + 1)
    ph = [0] * (n + 1)
    pred = [0] * (n + 1) if want_pred else None
    y_all = [0] * (n + 1) if want_y else None

    head = 0
    tail = 0
    advances = 0
    discards = 0
    max_occ = 1

    for i in range(1, n + 1):
        x = px[tail] + lengths[i - 1]
        while head != tail and px[head + 1] + py[head + 1] <= x:
            head += 1
            advances += 1
        y = x - px[head]
        if want_pred:
            pred[i] = ph[head]
        if want_y:
            y_all[i] = y
        # the head pair ends at or before x, so this never passes the head
        while px[tail] + py[tail] >= x + y:
            tail -= 1
            discards += 1
        tail += 1
        px[tail] = x
        py[tail] = y
        ph[tail] = i
        occ = tail - head + 1
        if occ > max_occ:
            max_occ = occ

    return head, tail, px, py, ph, advances, discards, max_occ, pred, y_all
