# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Gate kernel, compiled edition: the hot inner loop of the simulator."""


def apply_2x2(double complex[::1] amps,
              double complex m00, double complex m01,
              double complex m10, double complex m11,
              int target, unsigned long long control_mask):
    """Same contract as ``_kernels_py.apply_2x2``; see that module."""
    cdef unsigned long long tbit = 1ULL << target
    cdef unsigned long long half = (<unsigned long long> amps.shape[0]) >> 1
    cdef unsigned long long g, i0, i1
    cdef double complex a0, a1
    with nogil:
        for g in range(half):
            i0 = ((g >> target) << (target + 1)) | (g & (tbit - 1))
            if (i0 & control_mask) != control_mask:
                continue
            i1 = i0 | tbit
            a0 = amps[i0]
            a1 = amps[i1]
            amps[i0] = m00 * a0 + m01 * a1
            amps[i1] = m10 * a0 + m11 * a1
