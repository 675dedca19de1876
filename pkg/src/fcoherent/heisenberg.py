"""Truncated Heisenberg-Weyl representation on the Fock basis |0>..|N-1>."""
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from .linalg import mat_exp


@dataclass(frozen=True, eq=False)
class HWRep:
    n_trunc: int
    a: np.ndarray
    a_dag: np.ndarray


def ladder_ops(n_trunc):
    """Annihilation and creation matrices truncated to ``n_trunc`` levels.

    The commutator equals the identity except for its last diagonal entry,
    which is ``-(n_trunc - 1)``.
    """
    if n_trunc < 2:
        raise ValueError("n_trunc must be at least 2")
    a = np.diag(np.sqrt(np.arange(1, n_trunc)), 1).astype(complex)
    return HWRep(n_trunc, a, a.conj().T.copy())


def exp_interior(n_trunc, alpha):
    """Block on which the truncated exponential matches the exact D to 1e-10.

    Fitted against the Laguerre form for n_trunc in 32..256, |alpha| <= 6,
    with margin; may be zero or negative for large |alpha|.
    """
    return n_trunc - 12 - math.ceil(1.25 * math.sqrt(n_trunc) * abs(alpha))


def displacement_elements(alpha, rows, cols):
    """Exact matrix elements <m|D(alpha)|n> for m in ``rows``, n in ``cols``.

    ``alpha`` may be an array; the result then has shape
    ``alpha.shape + (len(rows), len(cols))``.  Uses the associated Laguerre
    form, which involves no Fock truncation.
    """
    alpha = np.asarray(alpha, dtype=complex)
    a = alpha[..., None, None]
    x = np.abs(a) ** 2
    m = np.asarray(rows)[:, None]
    n = np.asarray(cols)[None, :]
    lo, hi = np.minimum(m, n), np.maximum(m, n)
    d = hi - lo
    mag = np.exp(0.5 * (gammaln(lo + 1) - gammaln(hi + 1)) - 0.5 * x)
    phase = np.where(m >= n, a ** d, (-a.conj()) ** d)
    return mag * phase * eval_genlaguerre(lo, d, x)


def displacement(alpha, rep, method="closed-form"):
    """Matrix of D(alpha) = exp(alpha a^dag - alpha^* a) on ``rep``'s basis.

    ``method="exp"`` exponentiates the truncated generator and is only
    accurate on the block given by :func:`exp_interior`; it requires
    ``|alpha|^2 <= n_trunc / 4``.
    """
    alpha = complex(alpha)
    if method == "closed-form":
        idx = np.arange(rep.n_trunc)
        return displacement_elements(alpha, idx, idx)
    if method == "exp":
        if abs(alpha) ** 2 > rep.n_trunc / 4:
            raise ValueError(f"|alpha|^2 = {abs(alpha) ** 2:.3g} exceeds truncation "
                             f"budget n_trunc/4 = {rep.n_trunc / 4}")
        return mat_exp(alpha * rep.a_dag - alpha.conjugate() * rep.a)
    raise ValueError(f"unknown method {method!r}")


def coherent_state(alpha, n_trunc):
    """Coefficients alpha^n e^{-|alpha|^2/2} / sqrt(n!) of |alpha>."""
    alpha = complex(alpha)
    n = np.arange(n_trunc)
    mag = np.exp(-0.5 * abs(alpha) ** 2 - 0.5 * gammaln(n + 1))
    return mag * alpha ** n


def hw_compose(beta, alpha):
    """Split D^dag(beta) D(alpha) into (shift, phase) with D(shift) * phase."""
    beta, alpha = complex(beta), complex(alpha)
    exponent = (beta.conjugate() * alpha - beta * alpha.conjugate()) / 2
    return alpha - beta, complex(np.exp(1j * exponent.imag))
