"""Gate kernel, numpy edition: the fallback when the compiled core is absent.

Must stay drop-in compatible with ``_kernels_cy``; the parity test suite
runs both against the same inputs.
"""

import numpy as np


def apply_2x2(amps, m00, m01, m10, m11, target, control_mask):
    """Apply a 2x2 matrix to the target-bit amplitude pairs, in place.

    Pairs (i0, i1) differ only in the target bit; a pair is touched only if
    every bit of ``control_mask`` is set in its index.
    """
    tbit = 1 << target
    half = amps.shape[0] >> 1
    g = np.arange(half, dtype=np.intp)
    i0 = ((g >> target) << (target + 1)) | (g & (tbit - 1))
    if control_mask:
        i0 = i0[(i0 & control_mask) == control_mask]
    i1 = i0 | tbit
    a0 = amps[i0]
    a1 = amps[i1]
    amps[i0] = m00 * a0 + m01 * a1
    amps[i1] = m10 * a0 + m11 * a1
