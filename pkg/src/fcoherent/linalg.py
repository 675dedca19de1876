"""Dense complex linear algebra shared by the group modules.

Matrices here are at most a few hundred rows, so everything is dense numpy.
"""
import numpy as np

# Pade [13/13] scaling-and-squaring (Higham 2005).  THETA_13 bounds the
# 1-norm of the scaled matrix; MAX_SQUARINGS caps the scaling budget, so
# inputs with 1-norm above THETA_13 * 2**MAX_SQUARINGS are rejected.
PADE_ORDER = 13
THETA_13 = 5.371920351148152
MAX_SQUARINGS = 40

_PADE13 = np.array([
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
])


def _check_square(A):
    A = np.asarray(A)
    if A.ndim < 2 or A.shape[-1] != A.shape[-2]:
        raise ValueError(f"expected square matrix (or stack), got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def mat_exp(A):
    """Matrix exponential by Pade-13 scaling and squaring.

    Accepts a single square matrix or a stack of shape ``(..., n, n)``.  A
    stack shares one squaring count (the largest needed by any member), so
    results do not depend on how a batch is split.

    Raises
    ------
    ValueError
        Non-square or non-finite input.
    OverflowError
        Norm beyond the scaling budget, or a non-finite result.
    """
    A = _check_square(A).astype(complex)
    n = A.shape[-1]
    norm = np.abs(A).sum(axis=-2).max() if A.size else 0.0
    squarings = 0
    if norm > THETA_13:
        squarings = int(np.ceil(np.log2(norm / THETA_13)))
    if squarings > MAX_SQUARINGS:
        raise OverflowError(
            f"1-norm {norm:.3e} exceeds scaling budget "
            f"{THETA_13 * 2.0 ** MAX_SQUARINGS:.3e}")
    A = A / 2.0 ** squarings

    b = _PADE13
    ident = np.broadcast_to(np.eye(n, dtype=complex), A.shape)
    A2 = A @ A
    A4 = A2 @ A2
    A6 = A4 @ A2
    U = A @ (A6 @ (b[13] * A6 + b[11] * A4 + b[9] * A2)
             + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * ident)
    V = (A6 @ (b[12] * A6 + b[10] * A4 + b[8] * A2)
         + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * ident)
    R = np.linalg.solve(V - U, V + U)
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(squarings):
            R = R @ R
    if not np.all(np.isfinite(R)):
        raise OverflowError("matrix exponential overflowed")
    return R


def project(A, d):
    """Top-left ``d x d`` block of ``A``."""
    A = np.asarray(A)
    if d < 1 or d > min(A.shape[-2:]):
        raise ValueError(f"block size {d} outside 1..{min(A.shape[-2:])}")
    return A[..., :d, :d]


def deviation_norm(A, B, d):
    """Max-entry absolute deviation between the leading ``d x d`` blocks."""
    A, B = np.asarray(A), np.asarray(B)
    if d > min(A.shape) or d > min(B.shape):
        raise ValueError(f"block size {d} exceeds matrix dimension")
    return float(np.abs(project(A, d) - project(B, d)).max())


def frobenius_deviation(A, B, d):
    A, B = np.asarray(A), np.asarray(B)
    if d > min(A.shape) or d > min(B.shape):
        raise ValueError(f"block size {d} exceeds matrix dimension")
    return float(np.linalg.norm(project(A, d) - project(B, d)))


def commutator(A, B):
    return A @ B - B @ A


def is_hermitian(A, tol=1e-12):
    A = np.asarray(A)
    return A.shape[0] == A.shape[1] and np.abs(A - A.conj().T).max() <= tol


def compensated_sum(parts):
    """Neumaier-compensated sum of a sequence of equally shaped arrays.

    The merge order is the sequence order, which keeps reductions
    reproducible regardless of how the parts were produced.
    """
    def split(x):
        x = np.asarray(x, dtype=complex)
        return np.stack([x.real, x.imag])

    parts = iter(parts)
    total = split(next(parts))
    comp = np.zeros_like(total)
    for p in parts:
        p = split(p)
        t = total + p
        big = np.abs(total) >= np.abs(p)
        comp += np.where(big, (total - t) + p, (p - t) + total)
        total = t
    total += comp
    return total[0] + 1j * total[1]
