"""Jacobi polynomials and the Jacobi integral identity."""
import math
from fractions import Fraction
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln


@dataclass(frozen=True)
class JacobiParams:
    n: int
    a: float
    b: float

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError("degree must be a nonnegative integer")
        if not (self.a > -1 and self.b > -1):
            raise ValueError("Jacobi parameters must exceed -1")


def jacobi_eval(p, x):
    """P_n^{(a,b)}(x) by the standard three-term recurrence in the degree."""
    n, a, b = p.n, p.a, p.b
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 0.5 * (a - b) + 0.5 * (a + b + 2) * x
    for k in range(2, n + 1):
        c = 2 * k + a + b
        a1 = 2 * k * (k + a + b) * (c - 2)
        a2 = (c - 1) * (a * a - b * b)
        a3 = (c - 2) * (c - 1) * c
        a4 = 2 * (k + a - 1) * (k + b - 1) * c
        prev, cur = cur, ((a2 + a3 * x) * cur - a4 * prev) / a1
    return cur


def jacobi_series(p, x):
    """Hypergeometric-sum definition, used as an oracle for the recurrence.

    P_n^{(a,b)}(x) = sum_k C(n+a, n-k) C(n+a+b+k, k) ((x-1)/2)^k

    The terms alternate and grow near x = -1, so the sum is carried out in
    exact rational arithmetic on the binary values of a, b and x and rounded
    once at the end.
    """
    n = p.n
    a, b = Fraction(p.a), Fraction(p.b)
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape)
    coef = []
    for k in range(n + 1):
        c = Fraction(1)
        for j in range(n - k):          # C(n+a, n-k) = prod_{j<n-k} (a+k+1+j)/(j+1)
            c *= (a + k + 1 + j) / (j + 1)
        for j in range(k):              # C(n+a+b+k, k) = prod_{j<k} (n+a+b+1+j)/(j+1)
            c *= (n + a + b + 1 + j) / (j + 1)
        coef.append(c)
    for idx, xv in np.ndenumerate(x):
        u = (Fraction(float(xv)) - 1) / 2
        total = Fraction(0)
        for c in reversed(coef):
            total = total * u + c
        out[idx] = float(total)
    return out if out.ndim else float(out)


def identity_prefactor(n, p):
    """(1/2) Gamma(n+1) Gamma(p+3/2) / (Gamma(p+1) Gamma(n+3/2)), via log-gamma."""
    return 0.5 * math.exp(math.lgamma(n + 1) + math.lgamma(p + 1.5)
                          - math.lgamma(p + 1) - math.lgamma(n + 1.5))


def jacobi_identity_lhs(n, p):
    """Left side of the squared-Jacobi integral identity (equal to 1).

    Evaluates prefactor * int_0^1 (1-x)^{-1/2} x^{p-n} [P_n^{(p-n,1/2)}(1-2x)]^2 dx.
    With x = 1 - t^2 the integrand becomes 2 (1-t^2)^{p-n} P_n(2t^2-1)^2,
    a polynomial of degree 2(p+n) in t, so Gauss-Legendre with p+n+1 nodes
    is exact.
    """
    if n < 0 or p < n:
        raise ValueError("need p >= n >= 0")
    t, w = np.polynomial.legendre.leggauss(p + n + 2)
    t, w = 0.5 * (t + 1), 0.5 * w
    poly = jacobi_eval(JacobiParams(n, p - n, 0.5), 2 * t * t - 1)
    integral = math.fsum(w * 2 * (1 - t * t) ** (p - n) * poly ** 2)
    return identity_prefactor(n, p) * integral
