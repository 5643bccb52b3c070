"""Finite-difference eigensolver for H = p^2 + x^2 (i x)^nu on the real
line, 0 <= nu < 2.

The potential uses the principal branch of (i x)^nu for real x,

    V(x) = x^2 |x|^nu exp(i (pi nu / 2) sign(x)),

the unique choice that is continuous on each half-line and PT-symmetric:
V(-x) = conj(V(x)).  The second-derivative is discretized with
second-order central differences on a Dirichlet box [-L, L], giving a
complex symmetric (not Hermitian) tridiagonal matrix.  The solver runs
the base grid and two dyadic refinements, pairs the surviving levels, and
reports Richardson-extrapolated eigenvalues (the h^2 error term of the
central-difference stencil is eliminated, which is what makes the
harmonic-oscillator levels accurate to ~1e-10 at the default grid).

Eigenvectors leaking more than 1% of their norm into the outer 10% of the
box are discarded as box artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import InvalidParams, NumericalFailure, OutOfRegime

#: Defaults chosen so the nu = 0 ground state is accurate to < 1e-8.
DEFAULT_L = 12.0
DEFAULT_N = 4000

_LEAK_FRACTION = 0.01
_EDGE_FRACTION = 0.05  # per side; outer 10% of the box in total
_CONVERGENCE_ABS = 1e-6


@dataclass(frozen=True)
class SpectralProblem:
    """Discretization of the boxed eigenproblem: exponent nu, box
    half-width L, and total grid size N (including both boundary points)."""

    nu: float
    L: float = DEFAULT_L
    N: int = DEFAULT_N

    def __post_init__(self):
        if not 0.0 <= self.nu < 2.0:
            raise OutOfRegime(
                f"nu = {self.nu} outside [0, 2); for nu >= 2 the eigenproblem "
                "requires boundary conditions on a complex contour"
            )
        if self.N < 3:
            raise InvalidParams("grid size N must be at least 3")
        if self.L <= 0:
            raise InvalidParams("box half-width L must be positive")


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: np.ndarray  # sorted ascending by real part
    max_imag: float
    converged: bool


def potential(x, nu: float):
    """x^2 (i x)^nu on the principal branch, vectorized over x."""
    if not 0.0 <= nu < 2.0:
        raise OutOfRegime(f"nu = {nu} outside [0, 2)")
    xa = np.asarray(x, dtype=float)
    out = (xa * xa) * np.abs(xa) ** nu * np.exp(1j * (np.pi * nu / 2.0) * np.sign(xa))
    return out if out.ndim else complex(out)


def discretize(p: SpectralProblem) -> np.ndarray:
    """(N-2) x (N-2) dense complex symmetric matrix of the boxed operator."""
    h = 2.0 * p.L / (p.N - 1)
    x = np.linspace(-p.L, p.L, p.N)[1:-1]
    n = p.N - 2
    M = np.zeros((n, n), dtype=complex)
    idx = np.arange(n)
    M[idx, idx] = 2.0 / h**2 + potential(x, p.nu)
    M[idx[:-1], idx[:-1] + 1] = -1.0 / h**2
    M[idx[:-1] + 1, idx[:-1]] = -1.0 / h**2
    return M


def _solve_grid(nu: float, L: float, N: int, k: int):
    """Lowest levels of one boxed grid, box artifacts filtered out.

    Returns (eigenvalues ascending by real part, grid spacing).
    """
    h = 2.0 * L / (N - 1)
    x = np.linspace(-L, L, N)[1:-1]
    n = N - 2
    want = min(k + 4, n - 2) if n > 4 else n
    if n <= max(200, 2 * want + 2):
        M = np.zeros((n, n), dtype=complex)
        idx = np.arange(n)
        M[idx, idx] = 2.0 / h**2 + potential(x, nu)
        M[idx[:-1], idx[:-1] + 1] = -1.0 / h**2
        M[idx[:-1] + 1, idx[:-1]] = -1.0 / h**2
        w, v = np.linalg.eig(M)
    else:
        A = sp.diags(
            [
                np.full(n - 1, -1.0 / h**2),
                2.0 / h**2 + potential(x, nu),
                np.full(n - 1, -1.0 / h**2),
            ],
            [-1, 0, 1],
            format="csc",
            dtype=complex,
        )
        try:
            # fixed start vector: ARPACK's default is random, which would
            # make repeated runs differ in the last few bits
            v0 = np.ones(n) / np.sqrt(n)
            w, v = spla.eigs(A, k=want, sigma=0.0, v0=v0)
        except spla.ArpackNoConvergence as exc:
            raise NumericalFailure(f"eigensolver failed to converge: {exc}") from exc
    order = np.argsort(w.real)
    w, v = w[order], v[:, order]
    edge = max(1, int(_EDGE_FRACTION * n))
    keep = []
    for i in range(len(w)):
        vec = v[:, i]
        leak = (
            np.linalg.norm(vec[:edge]) ** 2 + np.linalg.norm(vec[-edge:]) ** 2
        ) / np.linalg.norm(vec) ** 2
        if leak < _LEAK_FRACTION:
            keep.append(i)
    return w[keep][:k], h


def spectrum(p: SpectralProblem, k: int) -> SpectrumResult:
    """Lowest k levels by real part, Richardson-extrapolated.

    Three grids are solved (N, 2N, 4N at fixed L).  The reported levels
    extrapolate the (N, 2N) pair; ``converged`` is True when the (2N, 4N)
    extrapolation agrees with the reported one to better than 1e-6 in
    every real part.
    """
    if k < 1 or k > p.N - 2:
        raise InvalidParams(f"k must be in 1..{p.N - 2}")

    def richardson(nu, L, N):
        w1, h1 = _solve_grid(nu, L, N, k)
        w2, h2 = _solve_grid(nu, L, 2 * N, k)
        m = min(len(w1), len(w2))
        if m == 0:
            raise NumericalFailure("all levels rejected as box artifacts")
        rho = (h1 / h2) ** 2
        return (rho * w2[:m] - w1[:m]) / (rho - 1.0)

    levels = richardson(p.nu, p.L, p.N)
    refined = richardson(p.nu, p.L, 2 * p.N)
    m = min(len(levels), len(refined))
    converged = bool(
        m == len(levels)
        and np.all(np.abs(levels[:m].real - refined[:m].real) < _CONVERGENCE_ABS)
    )
    return SpectrumResult(
        eigenvalues=levels,
        max_imag=float(np.abs(levels.imag).max()),
        converged=converged,
    )


def verify_reality(p: SpectralProblem, k: int, tol: float = 1e-6) -> bool:
    """True iff the lowest k levels are real, positive, and separated."""
    res = spectrum(p, k)
    re = res.eigenvalues.real
    if res.max_imag >= tol:
        return False
    if re.min() <= 0.0:
        return False
    if len(re) > 1 and np.diff(re).min() <= tol:
        return False
    return True
