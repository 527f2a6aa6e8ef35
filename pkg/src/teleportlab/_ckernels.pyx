# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twin of ``_pykernels``: cyclic Jacobi eigensolver and the
disentangler-search scoring kernel.

Same algorithms, same rotation order, same ordering and phase
conventions as the pure-Python module; only the inner loops are C.
"""

import numpy as np

from libc.math cimport fabs, sqrt, rint

BACKEND_NAME = "compiled"

cdef double OFF_TOL = 1e-14
cdef int MAX_SWEEPS = 100
cdef double PHASE_EPS = 1e-12


cdef int _jacobi(double complex* h, double complex* v, double* w,
                 Py_ssize_t n, bint want_v) noexcept nogil:
    """Cyclic Jacobi on the full Hermitian work matrix ``h`` (destroyed).

    Eigenvalues land in ``w`` (unsorted); accumulated rotations in ``v``
    (columns) when ``want_v``. Returns 0 on success, -1 on no convergence.
    """
    cdef Py_ssize_t p, q, i, sweep
    cdef double fro, target, skip, off, b, delta, tau, sign, t, c
    cdef double complex apq, s, sc, zp, zq

    if n == 1:
        w[0] = h[0].real
        return 0

    fro = 0.0
    for i in range(n * n):
        fro += h[i].real * h[i].real + h[i].imag * h[i].imag
    fro = sqrt(fro)
    target = OFF_TOL * (fro if fro > 1.0 else 1.0)
    skip = target / (4.0 * n * n)

    for sweep in range(MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = h[p * n + q]
                off += apq.real * apq.real + apq.imag * apq.imag
        off = sqrt(2.0 * off)
        if off <= target:
            for i in range(n):
                w[i] = h[i * n + i].real
            return 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = h[p * n + q]
                b = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if b <= skip:
                    continue
                delta = h[p * n + p].real - h[q * n + q].real
                tau = delta / (2.0 * b)
                sign = 1.0 if tau >= 0.0 else -1.0
                t = -sign / (fabs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = (t * c) * (apq / b)
                sc = s.conjugate()

                for i in range(n):
                    zp = h[i * n + p]
                    zq = h[i * n + q]
                    h[i * n + p] = c * zp - sc * zq
                    h[i * n + q] = s * zp + c * zq
                for i in range(n):
                    zp = h[p * n + i]
                    zq = h[q * n + i]
                    h[p * n + i] = c * zp - s * zq
                    h[q * n + i] = sc * zp + c * zq
                h[p * n + q] = 0.0
                h[q * n + p] = 0.0
                h[p * n + p] = h[p * n + p].real
                h[q * n + q] = h[q * n + q].real
                if want_v:
                    for i in range(n):
                        zp = v[i * n + p]
                        zq = v[i * n + q]
                        v[i * n + p] = c * zp - sc * zq
                        v[i * n + q] = s * zp + c * zq
    return -1


cdef void _hermitize(double complex* h, const double complex* a, Py_ssize_t n) noexcept nogil:
    """Build the working matrix from the upper triangle and real diagonal."""
    cdef Py_ssize_t i, j
    cdef double complex z
    for i in range(n):
        h[i * n + i] = a[i * n + i].real
        for j in range(i + 1, n):
            z = a[i * n + j]
            h[i * n + j] = z
            h[j * n + i] = z.conjugate()


cdef int _cmp_cols(const double complex* v, Py_ssize_t n,
                   Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    """Lexicographic compare of rounded (1e-9) component magnitudes."""
    cdef Py_ssize_t i
    cdef double ma, mb
    cdef double complex za, zb
    for i in range(n):
        za = v[i * n + a]
        zb = v[i * n + b]
        ma = rint(sqrt(za.real * za.real + za.imag * za.imag) * 1e9)
        mb = rint(sqrt(zb.real * zb.real + zb.imag * zb.imag) * 1e9)
        if ma != mb:
            return -1 if ma < mb else 1
    return 0


cdef void _sort_order(const double* w, const double complex* v,
                      Py_ssize_t* order, Py_ssize_t n, bint want_v) noexcept nogil:
    """Stable insertion sort: ascending eigenvalue, exact ties broken by
    descending rounded-magnitude lexicographic order of the columns."""
    cdef Py_ssize_t i, j, cur
    cdef bint less
    for i in range(n):
        order[i] = i
    for i in range(1, n):
        cur = order[i]
        j = i - 1
        while j >= 0:
            if w[cur] < w[order[j]]:
                less = True
            elif want_v and w[cur] == w[order[j]]:
                less = _cmp_cols(v, n, cur, order[j]) > 0
            else:
                less = False
            if not less:
                break
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = cur


cdef void _phase_fix(double complex* v, Py_ssize_t n) noexcept nogil:
    """Rescale each column so its first component above 1e-12 is real
    positive."""
    cdef Py_ssize_t i, j, k
    cdef double mag
    cdef double complex pivot, f
    for k in range(n):
        for i in range(n):
            pivot = v[i * n + k]
            mag = sqrt(pivot.real * pivot.real + pivot.imag * pivot.imag)
            if mag > PHASE_EPS:
                f = pivot.conjugate() / mag
                for j in range(n):
                    v[j * n + k] = v[j * n + k] * f
                break


def eigh(a):
    """Eigendecomposition of a Hermitian matrix (upper triangle is used).

    Returns ``(w, v)`` with eigenvalues ascending and orthonormal
    eigenvectors as columns, deterministically ordered and phased.
    """
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = arr.shape[0]
    if arr.ndim != 2 or arr.shape[1] != n:
        raise ValueError("eigh expects a square matrix")
    work = np.empty((n, n), dtype=np.complex128)
    vwork = np.eye(n, dtype=np.complex128)
    wwork = np.empty(n, dtype=np.float64)
    order = np.empty(n, dtype=np.intp)
    w_out = np.empty(n, dtype=np.float64)
    v_out = np.empty((n, n), dtype=np.complex128)

    cdef double complex[:, ::1] av = arr
    cdef double complex[:, ::1] hv = work
    cdef double complex[:, ::1] vv = vwork
    cdef double[::1] wv = wwork
    cdef Py_ssize_t[::1] ov = order
    cdef double[::1] wo = w_out
    cdef double complex[:, ::1] vo = v_out
    cdef Py_ssize_t i, j
    cdef int status

    with nogil:
        _hermitize(&hv[0, 0], &av[0, 0], n)
        status = _jacobi(&hv[0, 0], &vv[0, 0], &wv[0], n, True)
        if status == 0:
            _sort_order(&wv[0], &vv[0, 0], &ov[0], n, True)
            for j in range(n):
                wo[j] = wv[ov[j]]
                for i in range(n):
                    vo[i, j] = vv[i, ov[j]]
            _phase_fix(&vo[0, 0], n)
    if status != 0:
        raise ArithmeticError("Jacobi eigensolver did not converge")
    return w_out, v_out


def eigvalsh(a):
    """Ascending eigenvalues of a Hermitian matrix (upper triangle used)."""
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = arr.shape[0]
    if arr.ndim != 2 or arr.shape[1] != n:
        raise ValueError("eigvalsh expects a square matrix")
    work = np.empty((n, n), dtype=np.complex128)
    wwork = np.empty(n, dtype=np.float64)
    order = np.empty(n, dtype=np.intp)
    w_out = np.empty(n, dtype=np.float64)

    cdef double complex[:, ::1] av = arr
    cdef double complex[:, ::1] hv = work
    cdef double[::1] wv = wwork
    cdef Py_ssize_t[::1] ov = order
    cdef double[::1] wo = w_out
    cdef Py_ssize_t j
    cdef int status

    with nogil:
        _hermitize(&hv[0, 0], &av[0, 0], n)
        status = _jacobi(&hv[0, 0], NULL, &wv[0], n, False)
        if status == 0:
            _sort_order(&wv[0], NULL, &ov[0], n, False)
            for j in range(n):
                wo[j] = wv[ov[j]]
    if status != 0:
        raise ArithmeticError("Jacobi eigensolver did not converge")
    return w_out


cdef double _tdist2(double complex d00, double complex d01, double complex d11) noexcept nogil:
    """Trace distance from the entries of a 2x2 Hermitian difference."""
    cdef double mean = 0.5 * (d00.real + d11.real)
    cdef double half_gap = 0.5 * (d00.real - d11.real)
    cdef double off2 = d01.real * d01.real + d01.imag * d01.imag
    cdef double r = sqrt(half_gap * half_gap + off2)
    cdef double am = fabs(mean)
    return am if am > r else r


def output_scores(u, x, Py_ssize_t ancilla_dim, target_a, target_b):
    """Score one candidate disentangler output.

    Conjugates the embedded input ``x`` (two qubits + ancilla, ancilla
    last) by the unitary ``u``, traces out the ancilla, and returns
    ``(negativity, deviation_a, deviation_b)`` where the deviations are
    trace distances of the output marginals from the given targets.
    """
    u = np.ascontiguousarray(u, dtype=np.complex128)
    x = np.ascontiguousarray(x, dtype=np.complex128)
    cdef Py_ssize_t m = u.shape[0]
    if m != 4 * ancilla_dim or x.shape[0] != m or x.shape[1] != m:
        raise ValueError("output_scores expects a two-qubit system plus ancilla")
    t = np.matmul(u, x)
    ta = np.ascontiguousarray(target_a, dtype=np.complex128)
    tb = np.ascontiguousarray(target_b, dtype=np.complex128)

    cdef double complex[:, ::1] tv = t
    cdef double complex[:, ::1] uv = u
    cdef double complex[:, ::1] tav = ta
    cdef double complex[:, ::1] tbv = tb
    cdef double complex out[16]
    cdef double complex pt[16]
    cdef double complex acc, z
    cdef double wpt[4]
    cdef Py_ssize_t aa, bb, k, j, i0, i1, j0, j1
    cdef Py_ssize_t order[4]
    cdef double neg, dev_a, dev_b
    cdef double complex ma00, ma01, ma11, mb00, mb01, mb11

    with nogil:
        # out[a, b] = sum_k (U X U+)[a*dm + k, b*dm + k]
        for aa in range(4):
            for bb in range(4):
                acc = 0.0
                for k in range(ancilla_dim):
                    for j in range(m):
                        z = uv[bb * ancilla_dim + k, j]
                        acc = acc + tv[aa * ancilla_dim + k, j] * z.conjugate()
                out[aa * 4 + bb] = acc

        # partial transpose over the second qubit
        for i0 in range(2):
            for i1 in range(2):
                for j0 in range(2):
                    for j1 in range(2):
                        pt[(i0 * 2 + i1) * 4 + (j0 * 2 + j1)] = out[(i0 * 2 + j1) * 4 + (j0 * 2 + i1)]
        _jacobi(pt, NULL, wpt, 4, False)
        neg = 0.0
        for k in range(4):
            if wpt[k] < 0.0:
                neg -= wpt[k]

        # marginals: trace out the second / first qubit
        ma00 = out[0 * 4 + 0] + out[1 * 4 + 1]
        ma01 = out[0 * 4 + 2] + out[1 * 4 + 3]
        ma11 = out[2 * 4 + 2] + out[3 * 4 + 3]
        mb00 = out[0 * 4 + 0] + out[2 * 4 + 2]
        mb01 = out[0 * 4 + 1] + out[2 * 4 + 3]
        mb11 = out[1 * 4 + 1] + out[3 * 4 + 3]
        dev_a = _tdist2(ma00 - tav[0, 0], ma01 - tav[0, 1], ma11 - tav[1, 1])
        dev_b = _tdist2(mb00 - tbv[0, 0], mb01 - tbv[0, 1], mb11 - tbv[1, 1])
    return neg, dev_a, dev_b
