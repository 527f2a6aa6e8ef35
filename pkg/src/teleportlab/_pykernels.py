"""Pure-Python/numpy twin of the compiled kernel core.

Implements the three hot kernels shared with ``_ckernels``:

* ``eigh`` / ``eigvalsh`` -- cyclic Jacobi eigensolver for Hermitian
  matrices, deterministic ordering and phases,
* ``output_scores`` -- the inner evaluation of the disentangler search
  (conjugate by a unitary, trace out the ancilla, score negativity and
  marginal deviations).

Both backends follow the same rotation order and the same ordering and
phase conventions so that results agree to float rounding.
"""

import numpy as np

BACKEND_NAME = "python"

_OFF_TOL = 1e-14       # off-diagonal Frobenius target (relative above norm 1)
_MAX_SWEEPS = 100
_PHASE_EPS = 1e-12     # smallest component magnitude used to fix phases


def _hermitized(a):
    """Working copy built from the upper triangle and real diagonal."""
    a = np.asarray(a, dtype=np.complex128)
    up = np.triu(a, 1)
    return up + up.conj().T + np.diag(np.real(np.diag(a)))


def _jacobi(h, want_vectors):
    """Run cyclic Jacobi sweeps in place; returns (diag, vectors or None)."""
    n = h.shape[0]
    v = np.eye(n, dtype=np.complex128) if want_vectors else None
    if n == 1:
        return np.real(np.diag(h)).copy(), v

    fro = np.sqrt(np.sum(np.abs(h) ** 2))
    target = _OFF_TOL * max(1.0, fro)
    skip = target / (4.0 * n * n)
    iu = np.triu_indices(n, 1)

    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(2.0 * np.sum(np.abs(h[iu]) ** 2))
        if off <= target:
            return np.real(np.diag(h)).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = h[p, q]
                b = abs(apq)
                if b <= skip:
                    continue
                delta = h[p, p].real - h[q, q].real
                tau = delta / (2.0 * b)
                sign = 1.0 if tau >= 0.0 else -1.0
                t = -sign / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = (t * c) * (apq / b)
                sc = s.conjugate()

                cp = h[:, p].copy()
                cq = h[:, q].copy()
                h[:, p] = c * cp - sc * cq
                h[:, q] = s * cp + c * cq
                rp = h[p, :].copy()
                rq = h[q, :].copy()
                h[p, :] = c * rp - s * rq
                h[q, :] = sc * rp + c * rq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
                if want_vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - sc * vq
                    v[:, q] = s * vp + c * vq
    raise ArithmeticError("Jacobi eigensolver did not converge")


def order_and_phase(w, v):
    """Sort eigenpairs ascending and fix eigenvector phases, in place.

    Exact eigenvalue ties are broken by lexicographic comparison of the
    component magnitudes rounded to 1e-9; each eigenvector is rescaled so
    its first component above 1e-12 in magnitude is real positive.
    """
    n = w.shape[0]
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    i = 0
    while i < n - 1:
        j = i + 1
        while j < n and w[j] == w[i]:
            j += 1
        if j - i > 1:
            keys = {k: tuple(np.round(np.abs(v[:, k]), 9)) for k in range(i, j)}
            sub = sorted(range(i, j), key=keys.__getitem__, reverse=True)
            v[:, i:j] = v[:, sub]
        i = j
    for k in range(n):
        col = v[:, k]
        nz = np.flatnonzero(np.abs(col) > _PHASE_EPS)
        if nz.size:
            pivot = col[nz[0]]
            v[:, k] = col * (pivot.conjugate() / abs(pivot))
    return w, v


def eigh(a):
    """Eigendecomposition of a Hermitian matrix (upper triangle is used).

    Returns ``(w, v)`` with eigenvalues ascending and orthonormal
    eigenvectors as columns, deterministically ordered and phased.
    """
    h = _hermitized(a)
    w, v = _jacobi(h, want_vectors=True)
    return order_and_phase(w, v)


def eigvalsh(a):
    """Ascending eigenvalues of a Hermitian matrix (upper triangle used)."""
    h = _hermitized(a)
    w, _ = _jacobi(h, want_vectors=False)
    return np.sort(w, kind="stable")


def _tdist2(d):
    """Trace distance from a 2x2 Hermitian difference matrix."""
    mean = 0.5 * (d[0, 0].real + d[1, 1].real)
    half_gap = 0.5 * (d[0, 0].real - d[1, 1].real)
    r = np.sqrt(half_gap * half_gap + abs(d[0, 1]) ** 2)
    return max(abs(mean), r)


def output_scores(u, x, ancilla_dim, target_a, target_b):
    """Score one candidate disentangler output.

    Conjugates the embedded input ``x`` (two qubits + ancilla, ancilla
    last) by the unitary ``u``, traces out the ancilla, and returns
    ``(negativity, deviation_a, deviation_b)`` where the deviations are
    trace distances of the output marginals from the given targets.
    """
    u = np.asarray(u, dtype=np.complex128)
    x = np.asarray(x, dtype=np.complex128)
    m = u.shape[0]
    if m != 4 * ancilla_dim or x.shape != (m, m):
        raise ValueError("output_scores expects a two-qubit system plus ancilla")

    t = (u @ x).reshape(4, ancilla_dim, m)
    u4 = u.reshape(4, ancilla_dim, m)
    out = np.einsum("akj,bkj->ab", t, u4.conj())

    out4 = out.reshape(2, 2, 2, 2)
    pt = out4.transpose(0, 3, 2, 1).reshape(4, 4)
    ev = eigvalsh(pt)
    neg = float(-np.sum(ev[ev < 0.0]))

    marg_a = np.einsum("akbk->ab", out4)
    marg_b = np.einsum("kakb->ab", out4)
    dev_a = float(_tdist2(marg_a - np.asarray(target_a, dtype=np.complex128)))
    dev_b = float(_tdist2(marg_b - np.asarray(target_b, dtype=np.complex128)))
    return neg, dev_a, dev_b
