"""Unitary equivalence between the metric Hilbert space and the Euclidean
one, observable pull-backs, Heisenberg evolution, and the two competing
observable criteria.

A map U with U^dagger U = eta turns the metric inner product into the
Euclidean one; h = U H U^{-1} is then an ordinary Hermitian Hamiltonian
with the same spectrum.  U is unique only up to a Euclidean unitary on
the left, so two canonical choices are provided:

* :func:`build_equivalence` works for any valid (H, eta) pair and fixes
  the gauge through the eigenvectors of rho H rho^{-1} (first nonzero
  component real positive).
* :func:`build_equivalence_pt` needs the parity matrix as well and uses
  the PT-normalized eigenvectors of H, which reproduces the reference
  closed-form map of the two-level model.  Pull-backs computed in the two
  gauges differ by conjugation with a diagonal phase unitary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidInput,
    NotHermitianInput,
    PseudoHermiticityViolated,
)
from .linalg import (
    DEFAULT_TOL,
    as_square_matrix,
    eig,
    frobenius,
    hermitian_sqrt,
    is_self_adjoint_wrt,
    matrix_exponential,
)
from .metric import Metric, build_C, metric_from_CPT, pt_normalize
from .pt import AntilinearOp


@dataclass(frozen=True)
class EquivalencePair:
    """Equivalence map U (U^dagger U = eta) and Hermitian counterpart h."""

    U: np.ndarray
    h: np.ndarray
    eta: Metric


def _require_pseudo_hermitian(H: np.ndarray, eta: np.ndarray, tol: float):
    lhs = eta @ H
    resid = frobenius(lhs - H.conj().T @ eta)
    if resid > tol * max(frobenius(lhs), 1.0):
        raise PseudoHermiticityViolated(
            f"||eta H - H^dagger eta|| = {resid:.3e} exceeds tolerance"
        )


def build_equivalence(H, metric: Metric, tol: float = DEFAULT_TOL) -> EquivalencePair:
    """Canonical U = W rho with rho = sqrt(eta) and W the unitary
    diagonalizing rho H rho^{-1}, eigenvalues descending.

    The resulting h = U H U^{-1} is diagonal with real entries.
    Eigenvector phases in W: first component of magnitude above
    1e-12 of the maximum is made real positive.
    """
    Hm = as_square_matrix(H, "Hamiltonian")
    eta = metric.eta
    if Hm.shape != eta.shape:
        raise DimensionMismatch("Hamiltonian and metric dimensions differ")
    _require_pseudo_hermitian(Hm, eta, tol)
    rho = hermitian_sqrt(eta, tol)
    h0 = rho @ Hm @ np.linalg.inv(rho)
    h0 = 0.5 * (h0 + h0.conj().T)
    w, V = np.linalg.eigh(h0)
    order = np.argsort(-w)
    V = V[:, order]
    for k in range(V.shape[1]):
        col = V[:, k]
        j = int(np.nonzero(np.abs(col) > 1e-12 * np.abs(col).max())[0][0])
        phase = col[j] / abs(col[j])
        V[:, k] = col / phase
    U = V.conj().T @ rho
    h = U @ Hm @ np.linalg.inv(U)
    return EquivalencePair(U=U, h=h, eta=metric)


def build_equivalence_pt(H, P, tol: float = DEFAULT_TOL) -> EquivalencePair:
    """PT-gauge equivalence map built from PT-normalized eigenvectors.

    Rows of U are (eta phi_n)^dagger, where the phi_n are the
    PT-normalized eigenvectors (eta-orthonormal in the unbroken phase),
    and eta is the CPT metric constructed on the way.  U maps phi_n to the
    n-th standard basis vector, so h is diagonal with descending entries.
    """
    Hm = as_square_matrix(H, "Hamiltonian")
    es = eig(Hm, tol)
    vectors, _ = pt_normalize(es, P, tol)
    metric = metric_from_CPT(build_C(vectors), P, tol)
    U = np.array([(metric.eta @ phi).conj() for phi in vectors])
    h = U @ Hm @ np.linalg.inv(U)
    return EquivalencePair(U=U, h=h, eta=metric)


def pull_back_observable(pair: EquivalencePair, o, tol: float = DEFAULT_TOL) -> np.ndarray:
    """O = U^{-1} o U for Euclidean-Hermitian o; O is eta-self-adjoint."""
    om = as_square_matrix(o, "observable")
    if frobenius(om - om.conj().T) > tol * max(frobenius(om), 1.0):
        raise NotHermitianInput("observable is not Hermitian in the Euclidean sense")
    if om.shape != pair.U.shape:
        raise DimensionMismatch("observable and equivalence map dimensions differ")
    return np.linalg.inv(pair.U) @ om @ pair.U


def heisenberg_evolve(H, O, t: float) -> np.ndarray:
    """O_H(t) = e^{itH} O e^{-itH}; similarity keeps the spectrum of O."""
    Hm = as_square_matrix(H, "Hamiltonian")
    Om = as_square_matrix(O, "observable")
    if Hm.shape != Om.shape:
        raise DimensionMismatch("Hamiltonian and observable dimensions differ")
    fwd = matrix_exponential(1j * t * Hm)
    bwd = matrix_exponential(-1j * t * Hm)
    return fwd @ Om @ bwd


@dataclass(frozen=True)
class BenderCheck:
    """Result of the symmetric/CPT-invariant observable criterion."""

    symmetric: bool
    cpt_invariant: bool

    @property
    def passed(self) -> bool:
        return self.symmetric and self.cpt_invariant


def check_observable_bender(O, C, P, tol: float = DEFAULT_TOL) -> BenderCheck:
    """Standard-basis transpose symmetry plus commutation with the
    antilinear CPT map (O (CP) = (CP) O*).

    Both tests are basis-dependent by construction; the standard basis is
    used throughout, matching the convention of the criterion under test.
    """
    Om = as_square_matrix(O, "observable")
    Cm = as_square_matrix(C, "charge conjugation")
    Pm = as_square_matrix(P, "parity")
    if Om.shape != Cm.shape or Cm.shape != Pm.shape:
        raise DimensionMismatch("operator dimensions differ")
    scale = max(frobenius(Om), 1.0)
    symmetric = frobenius(Om - Om.T) <= tol * scale
    cpt = AntilinearOp(Cm @ Pm)
    resid = frobenius(Om @ cpt.matrix_part - cpt.matrix_part @ Om.conj())
    cpt_invariant = resid <= tol * max(frobenius(Om @ cpt.matrix_part), 1.0)
    return BenderCheck(symmetric=symmetric, cpt_invariant=cpt_invariant)


def check_observable_hermitian(O, metric: Metric, tol: float = DEFAULT_TOL) -> bool:
    """Observable criterion of this toolkit: self-adjointness w.r.t. eta."""
    return is_self_adjoint_wrt(O, metric.eta, tol)


@dataclass(frozen=True)
class ConsistencyRow:
    t: float
    symmetric: bool
    cpt_invariant: bool
    eta_hermitian: bool


def consistency_demo(H, C, P, metric: Metric, O, times, tol: float = DEFAULT_TOL):
    """Track both observable criteria along Heisenberg evolution.

    The input O must pass the symmetric/CPT-invariant check at t = 0.  For
    generic t that check fails while eta-Hermiticity survives, which is the
    dynamical-inconsistency demonstration; at special times where O_H(t)
    returns to +-O the symmetric/CPT-invariant check passes again.
    """
    check0 = check_observable_bender(O, C, P, tol)
    if not check0.passed:
        raise InvalidInput(
            "input observable must be symmetric and CPT-invariant at t = 0"
        )
    rows = []
    for t in times:
        Ot = heisenberg_evolve(H, O, float(t))
        bc = check_observable_bender(Ot, C, P, tol)
        rows.append(
            ConsistencyRow(
                t=float(t),
                symmetric=bc.symmetric,
                cpt_invariant=bc.cpt_invariant,
                eta_hermitian=check_observable_hermitian(Ot, metric, tol),
            )
        )
    return rows
