"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel works in unsigned 64-bit arithmetic and therefore only
accepts inputs whose total fits in 63 bits (its internal sums x + y need
the extra bit).  Larger totals, and environments without the extension,
take the pure-Python kernel, which uses exact big integers.

Set ``RULERWRAP_BACKEND=pure`` or ``=compiled`` to pin the choice; the
default ``auto`` prefers the compiled kernel whenever it applies.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _scan_py

try:
    from . import _scan_cy
except ImportError:  # extension not built; everything still works
    _scan_cy = None

COMPILED_MAX_TOTAL = 2**63 - 1

_FORCED = os.environ.get("RULERWRAP_BACKEND", "auto").lower()
if _FORCED not in ("auto", "pure", "compiled"):
    raise RuntimeError(f"RULERWRAP_BACKEND must be auto, pure or compiled, not {_FORCED!r}")
if _FORCED == "compiled" and _scan_cy is None:
    raise RuntimeError("RULERWRAP_BACKEND=compiled but the extension is not built")


def compiled_available() -> bool:
    return _scan_cy is not None


def active_backend() -> str:
    """Name of the kernel small-total inputs will take: 'compiled' or 'pure'."""
    if _FORCED == "pure" or _scan_cy is None:
        return "pure"
    return "compiled"


@dataclass(frozen=True)
class ScanResult:
    """Normalized output of one scan, independent of the kernel used.

    The live_* sequences are the surviving pairs in slot order (sorted both
    by x and by x + y); the first one is the pair the final hinge's
    wrapping length was measured from, the last is always (x_n, y_n).
    """

    n: int
    x_n: int
    y_n: int
    live_hinges: Sequence[int]
    live_x: Sequence[int]
    live_y: Sequence[int]
    head_advances: int
    tail_discards: int
    max_occupancy: int
    pred: Optional[Sequence[int]]
    y_all: Optional[Sequence[int]]
    backend: str


def scan(
    lengths,
    *,
    want_pred: bool = False,
    want_y: bool = False,
    total_bound: Optional[int] = None,
    force: Optional[str] = None,
) -> ScanResult:
    """Run the pair scan on ``lengths`` (a sequence of positive ints or a
    uint64 ndarray) and normalize the result.

    ``total_bound`` is any upper bound on the sum of the lengths; it only
    steers kernel choice, so a loose bound is fine.  ``force`` overrides
    selection for benchmarks and tests ('pure' or 'compiled').
    """
    n = len(lengths)
    if n == 0:
        raise ValueError("scan needs at least one length")

    if total_bound is None:
        if isinstance(lengths, np.ndarray):
            total_bound = int(lengths.max()) * n
        else:
            total_bound = sum(lengths)

    choice = force or _FORCED
    use_compiled = (
        choice != "pure"
        and _scan_cy is not None
        and total_bound <= COMPILED_MAX_TOTAL
    )
    if choice == "compiled" and not use_compiled:
        if _scan_cy is None:
            raise RuntimeError("compiled kernel requested but the extension is not built")
        raise ValueError("compiled kernel requested but the total may exceed 63 bits")

    if use_compiled:
        arr = np.ascontiguousarray(lengths, dtype=np.uint64)
        raw = _scan_cy.scan(arr, want_pred, want_y)
        name = "compiled"
    else:
        seq = lengths.tolist() if isinstance(lengths, np.ndarray) else lengths
        raw = _scan_py.scan(seq, want_pred, want_y)
        name = "pure"

    head, tail, px, py, ph, advances, discards, max_occ, pred, y_all = raw
    if name == "compiled":
        live_h = ph[head : tail + 1].copy()
        live_x = px[head : tail + 1].copy()
        live_y = py[head : tail + 1].copy()
    else:
        live_h = ph[head : tail + 1]
        live_x = px[head : tail + 1]
        live_y = py[head : tail + 1]

    return ScanResult(
        n=n,
        x_n=int(px[tail]),
        y_n=int(py[tail]),
        live_hinges=live_h,
        live_x=live_x,
        live_y=live_y,
        head_advances=advances,
        tail_discards=discards,
        max_occupancy=max_occ,
        pred=pred,
        y_all=y_all,
        backend=name,
    )
