import math

import numpy as np
import pytest


def taylor_exp(A, tol=1e-18, max_terms=2000):
    """exp(A) by plain Taylor summation until the terms stop mattering."""
    A = np.asarray(A, dtype=complex)
    term = np.eye(A.shape[0], dtype=complex)
    total = term.copy()
    for k in range(1, max_terms):
        term = term @ A / k
        total += term
        if np.abs(term).max() < tol * max(1.0, np.abs(total).max()):
            return total
    raise RuntimeError("Taylor series did not converge")


def coherent_coeffs(alpha, n):
    """alpha^k e^{-|alpha|^2/2} / sqrt(k!) computed term by term."""
    out = np.empty(n, dtype=complex)
    c = math.exp(-abs(alpha) ** 2 / 2)
    for k in range(n):
        out[k] = c
        c = c * alpha / math.sqrt(k + 1)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def _criterion_number(line):
    return int(line.split("criterion")[1].split(":")[0])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=_criterion_number):
            terminalreporter.write_line(line)
