"""Dense complex linear algebra: Hermitian eigensolver, exact propagators, phase-aware comparison.

All exponentials go through the Hermitian eigendecomposition so the resulting
operators are unitary up to roundoff.
"""

from __future__ import annotations

import numpy as np

HERMITIAN_RTOL = 1e-12


class HermitianError(ValueError):
    """Raised when a matrix that must be Hermitian is not."""

    def __init__(self, asymmetry: float, scale: float):
        self.asymmetry = asymmetry
        self.scale = scale
        super().__init__(
            f"matrix is not Hermitian: max|H - H^dag| = {asymmetry:.3e} "
            f"exceeds {HERMITIAN_RTOL:g} * max|H| = {HERMITIAN_RTOL * scale:.3e}"
        )


def as_hermitian(H) -> np.ndarray:
    """Return H as a complex square array, symmetrized if asymmetric only at roundoff level."""
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {H.shape}")
    scale = float(np.max(np.abs(H)))
    asym = float(np.max(np.abs(H - H.conj().T)))
    if asym > HERMITIAN_RTOL * scale:
        raise HermitianError(asym, scale)
    if asym > 0.0:
        H = 0.5 * (H + H.conj().T)
    return H


def hermitian_eig(H) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, real) and unitary eigenvector matrix of a Hermitian matrix."""
    return np.linalg.eigh(as_hermitian(H))


def propagator(H, t: float) -> np.ndarray:
    """exp(-i H t) as a dense unitary matrix."""
    if t < 0:
        raise ValueError(f"duration must be non-negative, got {t}")
    evals, V = hermitian_eig(H)
    return (V * np.exp(-1j * evals * t)) @ V.conj().T


def evolve(H, t: float, psi) -> np.ndarray:
    """Apply exp(-i H t) to the state psi."""
    H = as_hermitian(H)
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (H.shape[0],):
        raise ValueError(f"state of shape {psi.shape} does not match Hamiltonian of dim {H.shape[0]}")
    if t < 0:
        raise ValueError(f"duration must be non-negative, got {t}")
    if t == 0:
        return psi.copy()
    evals, V = np.linalg.eigh(H)
    return V @ (np.exp(-1j * evals * t) * (V.conj().T @ psi))


def equal_up_to_global_phase(psi, phi, tol: float = 1e-9) -> tuple[bool, float]:
    """Compare two states modulo a global phase.

    Returns ``(equal, theta)`` where ``theta = arg(phi^dag psi)`` minimizes
    ``||psi - e^{i theta} phi||`` and ``equal`` says whether that minimum is within ``tol``.
    """
    psi = np.asarray(psi, dtype=complex)
    phi = np.asarray(phi, dtype=complex)
    if psi.shape != phi.shape:
        raise ValueError(f"dimension mismatch: {psi.shape} vs {phi.shape}")
    overlap = np.vdot(phi, psi)
    theta = float(np.angle(overlap)) if abs(overlap) > 0 else 0.0
    dist = float(np.linalg.norm(psi - np.exp(1j * theta) * phi))
    return dist <= tol, theta
