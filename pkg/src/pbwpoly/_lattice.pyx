# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled depth-first lattice-point enumeration for bounded H-polytopes.

Points are integer vectors ``x`` with ``0 <= x <= ub`` and ``A x <= b``,
produced in lexicographic order (coordinate 0 most significant).
"""
import numpy as np

from libc.stdlib cimport free, malloc


cdef inline long long _floordiv(long long p, long long q) nogil:
    # q > 0
    if p >= 0:
        return p // q
    return -((-p + q - 1) // q)


cdef class _Search:
    cdef Py_ssize_t nrows, ncols
    cdef long long[:, ::1] A
    cdef long long[::1] b
    cdef long long[::1] ub
    cdef long long *restmin      # nrows x ncols
    cdef long long *partial      # nrows
    cdef Py_ssize_t *rowptr      # ncols + 1
    cdef Py_ssize_t *rowidx
    cdef long long *lo
    cdef long long *hi
    cdef long long *x
    cdef bint feasible

    def __cinit__(self, long long[:, ::1] A, long long[::1] b, long long[::1] ub):
        cdef Py_ssize_t r, c, k, nnz = 0
        cdef long long acc, term
        self.nrows = A.shape[0]
        self.ncols = ub.shape[0]
        self.A = A
        self.b = b
        self.ub = ub
        self.feasible = True
        n = self.ncols if self.ncols > 0 else 1
        m = self.nrows if self.nrows > 0 else 1
        self.restmin = <long long *> malloc(m * n * sizeof(long long))
        self.partial = <long long *> malloc(m * sizeof(long long))
        self.rowptr = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
        self.lo = <long long *> malloc(n * sizeof(long long))
        self.hi = <long long *> malloc(n * sizeof(long long))
        self.x = <long long *> malloc(n * sizeof(long long))
        for r in range(self.nrows):
            self.partial[r] = 0
            acc = 0
            for c in range(self.ncols - 1, -1, -1):
                self.restmin[r * self.ncols + c] = acc
                term = A[r, c] * ub[c]
                if term < 0:
                    acc += term
            for c in range(self.ncols):
                if A[r, c] != 0:
                    break
            else:
                if b[r] < 0:
                    self.feasible = False
        for c in range(self.ncols):
            for r in range(self.nrows):
                if A[r, c] != 0:
                    nnz += 1
        self.rowidx = <Py_ssize_t *> malloc((nnz if nnz > 0 else 1) * sizeof(Py_ssize_t))
        k = 0
        for c in range(self.ncols):
            self.rowptr[c] = k
            for r in range(self.nrows):
                if A[r, c] != 0:
                    self.rowidx[k] = r
                    k += 1
        self.rowptr[self.ncols] = k

    def __dealloc__(self):
        free(self.restmin)
        free(self.partial)
        free(self.rowptr)
        free(self.rowidx)
        free(self.lo)
        free(self.hi)
        free(self.x)

    cdef inline void _bounds(self, Py_ssize_t d) nogil:
        cdef Py_ssize_t k, r
        cdef long long a, res, lo = 0, hi = self.ub[d], q
        for k in range(self.rowptr[d], self.rowptr[d + 1]):
            r = self.rowidx[k]
            a = self.A[r, d]
            res = self.b[r] - self.partial[r] - self.restmin[r * self.ncols + d]
            if a > 0:
                q = _floordiv(res, a)
                if q < hi:
                    hi = q
            else:
                q = -_floordiv(res, -a)
                if q > lo:
                    lo = q
        self.lo[d] = lo
        self.hi[d] = hi

    cdef inline void _shift(self, Py_ssize_t d, long long v) nogil:
        cdef Py_ssize_t k, r
        for k in range(self.rowptr[d], self.rowptr[d + 1]):
            r = self.rowidx[k]
            self.partial[r] += self.A[r, d] * v

    def run(self, bint count_only):
        cdef Py_ssize_t N = self.ncols, d, c
        cdef long long v, total = 0
        cdef Py_ssize_t cap = 1024, used = 0
        cdef long long[:, ::1] out
        if not self.feasible:
            return 0 if count_only else np.zeros((0, N), dtype=np.int64)
        if N == 0:
            return 1 if count_only else np.zeros((1, 0), dtype=np.int64)
        buf = None
        if not count_only:
            buf = np.empty((cap, N), dtype=np.int64)
            out = buf
        d = 0
        self._bounds(0)
        self.x[0] = self.lo[0] - 1
        while d >= 0:
            if self.x[d] >= self.lo[d]:
                self._shift(d, -self.x[d])
            self.x[d] += 1
            if self.x[d] > self.hi[d]:
                d -= 1
                continue
            if d == N - 1:
                if count_only:
                    total += self.hi[d] - self.x[d] + 1
                else:
                    for v in range(self.x[d], self.hi[d] + 1):
                        if used == cap:
                            cap *= 2
                            grown = np.empty((cap, N), dtype=np.int64)
                            grown[:used] = buf[:used]
                            buf = grown
                            out = buf
                        for c in range(N - 1):
                            out[used, c] = self.x[c]
                        out[used, N - 1] = v
                        used += 1
                self.x[d] = self.lo[d] - 1
                d -= 1
                continue
            self._shift(d, self.x[d])
            d += 1
            self._bounds(d)
            self.x[d] = self.lo[d] - 1
        if count_only:
            return total
        return buf[:used].copy()


def enumerate_points(A, b, ub):
    """Return all lattice points as an ``(count, N)`` int64 array."""
    return _Search(A, b, ub).run(False)


def count_points(A, b, ub):
    """Return the number of lattice points without materialising them."""
    return _Search(A, b, ub).run(True)
