# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled scan kernel: the hot loop behind the linear-time wrap.

Mirrors ``_scan_py.scan`` exactly.  Callers guarantee positive lengths and
a total of at most 2**63 - 1, so the sums x + y stay inside unsigned
64-bit range.
"""

import numpy as np

ctypedef unsigned long long u64
ctypedef long long i64


def scan(const u64[::1] lengths, bint want_pred, bint want_y):
    cdef Py_ssize_t n = lengths.shape[0]

    px_arr = np.zeros(n + 1, dtype=np.uint64)
    py_arr = np.zeros(n + 1, dtype=np.uint64)
    ph_arr = np.zeros(n + 1, dtype=np.int64)
    pred_arr = np.zeros(n + 1, dtype=np.int64) if want_pred else None
    y_arr = np.zeros(n + 1, dtype=np.uint64) if want_y else None

    cdef u64[::1] px = px_arr
    cdef u64[::1] py = py_arr
    cdef i64[::1] ph = ph_arr
    # dummy bindings keep the memoryviews typed when the outputs are off;
    # the guarded writes below never touch them in that case
    cdef i64[::1] pred = pred_arr if want_pred else ph_arr
    cdef u64[::1] y_all = y_arr if want_y else py_arr

    cdef Py_ssize_t head = 0, tail = 0, i, occ, max_occ = 1
    cdef u64 advances = 0, discards = 0
    cdef u64 x, y

    with nogil:
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
            while px[tail] + py[tail] >= x + y:
                tail -= 1
                discards += 1
            tail += 1
            px[tail] = x
            py[tail] = y
            ph[tail] = <i64> i
            occ = tail - head + 1
            if occ > max_occ:
                max_occ = occ

    return (head, tail, px_arr, py_arr, ph_arr,
            int(advances), int(discards), int(max_occ), pred_arr, y_arr)
