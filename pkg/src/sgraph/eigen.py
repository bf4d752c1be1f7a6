"""Dense symmetric eigensolver, self-contained.

Householder reduction to tridiagonal form followed by implicitly shifted
QL iteration; the principal eigenvector comes from inverse iteration with
a Rayleigh-quotient refinement.  Tuned for the small integer-entry
matrices this package produces (adjacency matrices with entries in
{-1, 0, 1}, n up to a few hundred), where plain Python floats beat any
vectorization overhead.
"""

from __future__ import annotations

import math
import random
import sys

from .errors import ConvergenceFailureError

_EPS = sys.float_info.epsilon
SWEEP_CAP = 64  # QL sweeps allowed per eigenvalue before giving up


def _as_rows(matrix) -> list[list[float]]:
    if hasattr(matrix, "tolist"):
        rows = matrix.tolist()
    else:
        rows = [list(row) for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return [[float(x) for x in row] for row in rows]


def _tridiagonalize(a: list[list[float]]) -> tuple[list[float], list[float]]:
    """Householder reduction of a symmetric matrix (destroyed in place).

    Returns (d, e): the diagonal and subdiagonal of the similar tridiagonal
    matrix, with e[0] unused.  Only the lower triangle of ``a`` is read.
    """
    n = len(a)
    e = [0.0] * n
    for i in range(n - 1, 0, -1):
        l = i - 1
        row = a[i]
        if l > 0:
            scale = 0.0
            for k in range(i):
                scale += abs(row[k])
            if scale == 0.0:
                e[i] = row[l]
                continue
            h = 0.0
            inv = 1.0 / scale
            for k in range(i):
                row[k] *= inv
                h += row[k] * row[k]
            f = row[l]
            g = -math.sqrt(h) if f >= 0.0 else math.sqrt(h)
            e[i] = scale * g
            h -= f * g
            row[l] = f - g
            f = 0.0
            for j in range(i):
                g = 0.0
                aj = a[j]
                for k in range(j + 1):
                    g += aj[k] * row[k]
                for k in range(j + 1, i):
                    g += a[k][j] * row[k]
                e[j] = g / h
                f += e[j] * row[j]
            hh = f / (h + h)
            for j in range(i):
                f = row[j]
                g = e[j] - hh * f
                e[j] = g
                aj = a[j]
                for k in range(j + 1):
                    aj[k] -= f * e[k] + g * row[k]
        else:
            e[i] = row[l]
    d = [a[i][i] for i in range(n)]
    return d, e


def _ql_eigenvalues(d: list[float], e: list[float]) -> list[float]:
    """Implicitly shifted QL on a tridiagonal (d, e); returns ascending values.

    ``e`` is re-indexed so e[i] couples d[i] and d[i+1].  Raises
    ConvergenceFailureError if any eigenvalue needs more than SWEEP_CAP
    sweeps, which does not happen for the tame matrices this package feeds
    it but guards against pathological input.
    """
    n = len(d)
    if n == 0:
        return []
    e = e[1:] + [0.0]
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > SWEEP_CAP:
                raise ConvergenceFailureError(
                    f"eigenvalue {l} not converged after {SWEEP_CAP} sweeps"
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    d.sort()
    return d


def symmetric_eigenvalues(matrix) -> list[float]:
    """All eigenvalues of a symmetric matrix, ascending."""
    a = _as_rows(matrix)
    d, e = _tridiagonalize(a)
    return _ql_eigenvalues(d, e)


def _lu_factor(b: list[list[float]]) -> list[int]:
    """Partial-pivot LU of b in place; near-zero pivots are nudged so the
    factorization survives the (deliberately) singular shifts used by
    inverse iteration.  Returns the pivot row order."""
    n = len(b)
    scale = max((abs(x) for row in b for x in row), default=0.0)
    tiny = _EPS * max(scale, 1.0)
    piv = list(range(n))
    for k in range(n):
        p = max(range(k, n), key=lambda r: abs(b[r][k]))
        if p != k:
            b[k], b[p] = b[p], b[k]
            piv[k], piv[p] = piv[p], piv[k]
        if abs(b[k][k]) < tiny:
            b[k][k] = tiny if b[k][k] >= 0.0 else -tiny
        inv = 1.0 / b[k][k]
        row_k = b[k]
        for r in range(k + 1, n):
            row_r = b[r]
            f = row_r[k] * inv
            row_r[k] = f
            if f != 0.0:
                for c in range(k + 1, n):
                    row_r[c] -= f * row_k[c]
    return piv


def _lu_solve(b: list[list[float]], piv: list[int], rhs: list[float]) -> list[float]:
    n = len(b)
    x = [rhs[piv[i]] for i in range(n)]
    for i in range(1, n):
        row = b[i]
        acc = x[i]
        for j in range(i):
            acc -= row[j] * x[j]
        x[i] = acc
    for i in range(n - 1, -1, -1):
        row = b[i]
        acc = x[i]
        for j in range(i + 1, n):
            acc -= row[j] * x[j]
        x[i] = acc / row[i]
    return x


def _mat_vec(a: list[list[float]], x: list[float]) -> list[float]:
    return [sum(r * v for r, v in zip(row, x)) for row in a]


def _norm(x: list[float]) -> float:
    return math.sqrt(sum(v * v for v in x))


def principal_eigenvector(matrix, lam: float) -> tuple[list[float], float]:
    """Unit eigenvector for eigenvalue ``lam``, and its residual norm.

    Inverse iteration on (A - lam I); after the first two solves the shift
    gets one Rayleigh-quotient refinement.  With lam accurate to machine
    precision this converges in two or three solves, also for multiple
    eigenvalues (any vector of the eigenspace is acceptable then).  A start
    vector can be exactly orthogonal to the target eigenspace (integer
    matrices make that non-exotic), so failed attempts restart from a
    different deterministic start.
    """
    a = _as_rows(matrix)
    n = len(a)
    if n == 0:
        return [], 0.0
    target = 1e-10 * (1.0 + abs(lam))
    best: tuple[float, list[float]] | None = None
    for attempt in range(4):
        if attempt == 0:
            x = [1.0 / math.sqrt(n)] * n
        else:
            rng = random.Random(0x5EED + attempt)
            x = [rng.uniform(-1.0, 1.0) for _ in range(n)]
            nx = _norm(x)
            x = [v / nx for v in x]
        shift = lam
        for _round in range(4):
            b = [row[:] for row in a]
            for i in range(n):
                b[i][i] -= shift
            piv = _lu_factor(b)
            for _ in range(2):
                y = _lu_solve(b, piv, x)
                ny = _norm(y)
                if ny == 0.0 or not math.isfinite(ny):
                    break
                x = [v / ny for v in y]
            ax = _mat_vec(a, x)
            residual = _norm([ax[i] - lam * x[i] for i in range(n)])
            if best is None or residual < best[0]:
                best = (residual, x[:])
            if residual <= target:
                return best[1], best[0]
            # Rayleigh refinement: re-center the shift on the current vector
            shift = sum(ax[i] * x[i] for i in range(n))
    residual, x = best
    return x, residual
