# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 twin of the pure kernel in spherex.kernel.

Every arithmetic step is overflow-checked; work happens in a scratch buffer
that is only copied back on success, so an OverflowError leaves the
accumulator untouched and the caller can redo the call on the big-integer
path.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cdef extern from *:
    """
    #include <stdint.h>
    static int spx_mul(int64_t a, int64_t b, int64_t *r)
    { return __builtin_mul_overflow(a, b, r); }
    static int spx_add(int64_t a, int64_t b, int64_t *r)
    { return __builtin_add_overflow(a, b, r); }
    """
    int spx_mul(long long a, long long b, long long *r) nogil
    int spx_add(long long a, long long b, long long *r) nogil


def addmul_terms(long long[::1] nums, int n, int phi,
                 int[::1] row_off, int[::1] row_exps, long long[::1] row_coefs,
                 int[::1] ae, long long[::1] ac, int fa,
                 int[::1] be, long long[::1] bc, int fb,
                 long long scale):
    cdef Py_ssize_t i, j, k, size = nums.shape[0]
    cdef long long cai, c, t
    cdef long long eai, e
    cdef int start, stop
    cdef int bad = 0
    cdef long long *work = <long long *> malloc(size * sizeof(long long))
    if work == NULL:
        raise MemoryError()
    with nogil:
        memcpy(work, &nums[0], size * sizeof(long long))
        for i in range(ae.shape[0]):
            eai = <long long> ae[i] * fa
            if spx_mul(ac[i], scale, &cai):
                bad = 1
                break
            for j in range(be.shape[0]):
                e = (eai + <long long> be[j] * fb) % n
                if spx_mul(cai, bc[j], &c):
                    bad = 1
                    break
                if e < phi:
                    if spx_add(work[e], c, &t):
                        bad = 1
                        break
                    work[e] = t
                else:
                    start = row_off[e - phi]
                    stop = row_off[e - phi + 1]
                    for k in range(start, stop):
                        if spx_mul(row_coefs[k], c, &t):
                            bad = 1
                            break
                        if spx_add(work[row_exps[k]], t, &t):
                            bad = 1
                            break
                        work[row_exps[k]] = t
                    if bad:
                        break
            if bad:
                break
        if not bad:
            memcpy(&nums[0], work, size * sizeof(long long))
    free(work)
    if bad:
        raise OverflowError("int64 kernel overflow")


def scale_inplace(long long[::1] nums, long long factor):
    cdef Py_ssize_t i, size = nums.shape[0]
    cdef long long t
    cdef int bad = 0
    cdef long long *work = <long long *> malloc(size * sizeof(long long))
    if work == NULL:
        raise MemoryError()
    with nogil:
        for i in range(size):
            if spx_mul(nums[i], factor, &t):
                bad = 1
                break
            work[i] = t
        if not bad:
            memcpy(&nums[0], work, size * sizeof(long long))
    free(work)
    if bad:
        raise OverflowError("int64 kernel overflow")
