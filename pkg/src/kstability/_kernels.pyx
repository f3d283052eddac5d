# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Each kernel checks a worst-case bit bound first and runs in native 64- or
128-bit arithmetic when the bound allows; otherwise it falls back to Python
ints.  Results are always exact Python ints.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport int64_t, uint64_t
from math import gcd

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline object _i128_to_py(i128 v):
    cdef bint neg = v < 0
    cdef u128 u = <u128>(-v if neg else v)
    cdef uint64_t lo = <uint64_t>u
    cdef uint64_t hi = <uint64_t>(u >> 64)
    cdef object r = (<object>hi << 64) | <object>lo
    return -r if neg else r


def _bits(x):
    return abs(x).bit_length()


def eval_homogeneous(list terms, object p, object r, object q, Py_ssize_t degree):
    cdef Py_ssize_t nt = len(terms), k, i, j
    cdef int cbits = 0, vbits
    cdef tuple t
    for t in terms:
        vbits = _bits(t[2])
        if vbits > cbits:
            cbits = vbits
    vbits = max(_bits(p), _bits(r), _bits(q))
    if cbits + degree * vbits + (nt.bit_length() + 1) <= 125 and vbits <= 62 and degree < 64:
        return _eval_i128(terms, p, r, q, degree)
    return _eval_obj(terms, p, r, q, degree)


cdef object _eval_i128(list terms, object p, object r, object q, Py_ssize_t degree):
    cdef i128 pp[64]
    cdef i128 rp[64]
    cdef i128 qp[64]
    cdef i128 acc = 0
    cdef int64_t pi = p, ri = r, qi = q
    cdef Py_ssize_t k, i, j
    cdef tuple t
    cdef i128 c
    pp[0] = 1
    rp[0] = 1
    qp[0] = 1
    for k in range(degree):
        pp[k + 1] = pp[k] * pi
        rp[k + 1] = rp[k] * ri
        qp[k + 1] = qp[k] * qi
    for t in terms:
        i = t[0]
        j = t[1]
        c = _py_to_i128(t[2])
        acc += c * pp[i] * rp[j] * qp[degree - i - j]
    return _i128_to_py(acc)


cdef inline i128 _py_to_i128(object x):
    cdef bint neg = x < 0
    if neg:
        x = -x
    cdef uint64_t lo = <uint64_t>(x & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t hi = <uint64_t>(x >> 64)
    cdef i128 v = ((<i128>hi) << 64) | (<i128>lo)
    return -v if neg else v


cdef object _eval_obj(list terms, object p, object r, object q, Py_ssize_t degree):
    cdef list pp = [1]
    cdef list rp = [1]
    cdef list qp = [1]
    cdef Py_ssize_t k, i, j
    cdef object acc = 0
    cdef tuple t
    for k in range(degree):
        pp.append(pp[k] * p)
        rp.append(rp[k] * r)
        qp.append(qp[k] * q)
    for t in terms:
        i = t[0]
        j = t[1]
        acc += t[2] * pp[i] * rp[j] * qp[degree - i - j]
    return acc


cdef class TransferMatrix:
    """Sparse integer matrix in CSR form with small weights."""

    cdef Py_ssize_t nrows, nnz
    cdef Py_ssize_t *row_ptr
    cdef Py_ssize_t *cols
    cdef int64_t *weights
    cdef int weight_bits
    cdef public list rows

    def __cinit__(self, list rows):
        cdef Py_ssize_t r, k = 0
        cdef int64_t s, best = 0
        self.rows = rows
        self.nrows = len(rows)
        self.nnz = sum(len(row) for row in rows)
        self.row_ptr = <Py_ssize_t *>malloc((self.nrows + 1) * sizeof(Py_ssize_t))
        self.cols = <Py_ssize_t *>malloc(max(self.nnz, 1) * sizeof(Py_ssize_t))
        self.weights = <int64_t *>malloc(max(self.nnz, 1) * sizeof(int64_t))
        if not self.row_ptr or not self.cols or not self.weights:
            raise MemoryError()
        for r in range(self.nrows):
            self.row_ptr[r] = k
            s = 0
            for col, w in rows[r]:
                self.cols[k] = col
                self.weights[k] = w
                s += abs(w)
                k += 1
            if s > best:
                best = s
        self.row_ptr[self.nrows] = k
        self.weight_bits = (<object>best).bit_length()

    def __dealloc__(self):
        free(self.row_ptr)
        free(self.cols)
        free(self.weights)


def prepare_transfer(list rows):
    return TransferMatrix(rows)


def transfer(object matrix, list h):
    cdef TransferMatrix m
    if not isinstance(matrix, TransferMatrix):
        matrix = TransferMatrix(matrix)
    m = matrix
    cdef int hbits = 0, b
    cdef object x
    for x in h:
        b = _bits(x)
        if b > hbits:
            hbits = b
    if hbits + m.weight_bits <= 62:
        return _transfer_i64(m, h)
    if hbits + m.weight_bits <= 125:
        return _transfer_i128(m, h)
    return _transfer_obj(m.rows, h)


cdef list _transfer_i64(TransferMatrix m, list h):
    cdef Py_ssize_t n = len(h), r, k
    cdef int64_t *hv = <int64_t *>malloc(max(n, 1) * sizeof(int64_t))
    cdef int64_t acc
    cdef list out = []
    if not hv:
        raise MemoryError()
    try:
        for k in range(n):
            hv[k] = h[k]
        for r in range(m.nrows):
            acc = 0
            for k in range(m.row_ptr[r], m.row_ptr[r + 1]):
                acc += m.weights[k] * hv[m.cols[k]]
            out.append(acc)
    finally:
        free(hv)
    return out


cdef list _transfer_i128(TransferMatrix m, list h):
    cdef Py_ssize_t n = len(h), r, k
    cdef i128 *hv = <i128 *>malloc(max(n, 1) * sizeof(i128))
    cdef i128 acc
    cdef list out = []
    if not hv:
        raise MemoryError()
    try:
        for k in range(n):
            hv[k] = _py_to_i128(h[k])
        for r in range(m.nrows):
            acc = 0
            for k in range(m.row_ptr[r], m.row_ptr[r + 1]):
                acc += <i128>m.weights[k] * hv[m.cols[k]]
            out.append(_i128_to_py(acc))
    finally:
        free(hv)
    return out


cdef list _transfer_obj(list rows, list h):
    cdef list out = []
    cdef list row
    cdef tuple cw
    cdef object acc
    for row in rows:
        acc = 0
        for cw in row:
            acc += cw[1] * h[<Py_ssize_t>cw[0]]
        out.append(acc)
    return out


def content_reduce(list h):
    cdef object g = 0
    cdef object x
    for x in h:
        g = gcd(g, x)
        if g == 1:
            return list(h), 1
    if g == 0:
        return list(h), 1
    return [x // g for x in h], g


def all_positive(list h):
    cdef object x
    for x in h:
        if x <= 0:
            return False
    return True
