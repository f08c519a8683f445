"""Single-step SES Grover operators and the full search.

Each operator is one evolution under a fixed SES Hamiltonian. The analytic
global phases are applied so that the operator identities hold with equality,
not merely up to phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .densecx import evolve, hermitian_eig, propagator


def n_grover(n: int) -> int:
    """Iteration count floor(pi/4 * sqrt(n)), at least 1 for n >= 2."""
    if n < 1:
        raise ValueError(f"search size must be >= 1, got {n}")
    if n == 1:
        return 0
    return max(1, math.floor(math.pi / 4 * math.sqrt(n)))


@dataclass(frozen=True)
class GroverPlan:
    """Search size ``n``, 1-based ``marked`` index, coupling ``g`` and detuning ``delta_eps`` in rad/ns."""

    n: int
    marked: int
    g: float
    delta_eps: float
    iterations: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 1 <= self.marked <= self.n:
            raise ValueError(f"marked index {self.marked} outside 1..{self.n}")
        if not (self.g > 0 and math.isfinite(self.g)):
            raise ValueError(f"coupling scale g must be positive, got {self.g}")
        if not (self.delta_eps > 0 and math.isfinite(self.delta_eps)):
            raise ValueError(f"detuning delta_eps must be positive, got {self.delta_eps}")
        if self.iterations is None:
            object.__setattr__(self, "iterations", n_grover(self.n))
        elif self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")


def uniform_state(n: int) -> np.ndarray:
    return np.full(n, 1 / math.sqrt(n), dtype=complex)


def basis_state(n: int, m: int) -> np.ndarray:
    """|m) for a 1-based label m."""
    psi = np.zeros(n, dtype=complex)
    psi[m - 1] = 1.0
    return psi


def build_h_unif(n: int, g: float) -> np.ndarray:
    """g times the star matrix: 2 at (1,1), ones along the rest of the first row and column."""
    if n < 2:
        raise ValueError(f"uniform-state preparation needs n >= 2, got {n}")
    H = np.zeros((n, n), dtype=complex)
    H[0, :] = g
    H[:, 0] = g
    H[0, 0] = 2 * g
    return H


def unif_duration(n: int, g: float) -> float:
    return math.pi / (2 * g * math.sqrt(n))


def unif_phase(n: int) -> float:
    return math.pi / (2 * math.sqrt(n))


def prepare_uniform(n: int, g: float) -> tuple[np.ndarray, float, float]:
    """Return ``(state, t_unif, alpha_unif)`` with state = i e^{i alpha} exp(-i H_unif t)|1)."""
    t_unif = unif_duration(n, g)
    alpha = unif_phase(n)
    psi = evolve(build_h_unif(n, g), t_unif, basis_state(n, 1))
    return 1j * np.exp(1j * alpha) * psi, t_unif, alpha


def build_h_oracle(n: int, marked: int, delta_eps: float) -> np.ndarray:
    H = np.zeros((n, n), dtype=complex)
    H[marked - 1, marked - 1] = -delta_eps
    return H


def oracle_duration(delta_eps: float) -> float:
    return math.pi / delta_eps


def build_oracle(n: int, marked: int, delta_eps: float) -> tuple[np.ndarray, float, np.ndarray]:
    """Return ``(H_O, t_O, O)``; the 2pi rotation of the marked qubit flips its SES sign, no extra phase."""
    if not 1 <= marked <= n:
        raise ValueError(f"marked index {marked} outside 1..{n}")
    if delta_eps <= 0:
        raise ValueError(f"detuning must be positive, got {delta_eps}")
    H_O = build_h_oracle(n, marked, delta_eps)
    t_O = oracle_duration(delta_eps)
    return H_O, t_O, propagator(H_O, t_O)


def build_h_w(n: int, g: float) -> np.ndarray:
    return g * (np.ones((n, n), dtype=complex) - np.eye(n))


def w_duration(n: int, g: float) -> float:
    return math.pi / (n * g)


def w_phase(n: int) -> float:
    return (1 - n) * math.pi / n


def build_w(n: int, g: float) -> tuple[np.ndarray, float, float, np.ndarray]:
    """Return ``(H_W, t_W, alpha_W, W)`` with W = e^{-i alpha_W} exp(-i H_W t_W)."""
    if n < 2:
        raise ValueError(f"inversion operator needs n >= 2, got {n}")
    H_W = build_h_w(n, g)
    t_W = w_duration(n, g)
    alpha_W = w_phase(n)
    W = np.exp(-1j * alpha_W) * propagator(H_W, t_W)
    return H_W, t_W, alpha_W, W


def oracle_matrix(n: int, marked: int) -> np.ndarray:
    """Target reflection 1 - 2|m')(m'|."""
    O = np.eye(n, dtype=complex)
    O[marked - 1, marked - 1] = -1
    return O


def inversion_matrix(n: int) -> np.ndarray:
    """Target reflection 2|psi_unif)(psi_unif| - 1."""
    return np.full((n, n), 2 / n, dtype=complex) - np.eye(n)


def exact_success_probability(n: int, k: int) -> float:
    return math.sin((2 * k + 1) * math.asin(1 / math.sqrt(n))) ** 2


@dataclass
class GroverResult:
    plan: GroverPlan
    final_state: np.ndarray
    success_probability: float
    probabilities: list[float]
    t_unif: float
    t_O: float
    t_W: float
    alpha_unif: float
    alpha_W: float
    total_ns: float = field(init=False)

    def __post_init__(self):
        self.total_ns = self.t_unif + self.plan.iterations * (self.t_O + self.t_W)

    def to_dict(self, include_state: bool = False) -> dict:
        doc = {
            "n": self.plan.n,
            "marked": self.plan.marked,
            "iterations": self.plan.iterations,
            "success_probability": self.success_probability,
            "probabilities": list(self.probabilities),
            "durations_ns": {
                "t_unif": self.t_unif,
                "t_O": self.t_O,
                "t_W": self.t_W,
                "total": self.total_ns,
            },
            "phases_rad": {"alpha_unif": self.alpha_unif, "alpha_W": self.alpha_W},
        }
        if include_state:
            doc["final_state"] = {
                "re": self.final_state.real.tolist(),
                "im": self.final_state.imag.tolist(),
            }
        return doc


def run_grover(plan: GroverPlan) -> GroverResult:
    """Uniform preparation from |1), then ``plan.iterations`` rounds of oracle followed by W."""
    n = plan.n
    if n == 1:
        # single item: nothing to prepare or search
        psi = basis_state(1, 1)
        return GroverResult(plan, psi, 1.0, [], 0.0, oracle_duration(plan.delta_eps), 0.0, 0.0, 0.0)
    psi, t_unif, alpha_unif = prepare_uniform(n, plan.g)
    _, t_O, O = build_oracle(n, plan.marked, plan.delta_eps)
    _, t_W, alpha_W, W = build_w(n, plan.g)
    probs = []
    for _ in range(plan.iterations):
        psi = W @ (O @ psi)
        probs.append(float(abs(psi[plan.marked - 1]) ** 2))
    p_final = float(abs(psi[plan.marked - 1]) ** 2)
    return GroverResult(plan, psi, p_final, probs, t_unif, t_O, t_W, alpha_unif, alpha_W)


def paper_s_matrix(n: int) -> np.ndarray:
    """Unnormalized diagonalizing transformation of H_unif as displayed in closed form.

    Columns 1 and 2 are (1 -/+ sqrt(n), 1, ..., 1); column k >= 3 is e_k - e_2.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    r = math.sqrt(n)
    S = np.zeros((n, n))
    S[0, 0] = 1 - r
    S[0, 1] = 1 + r
    S[1:, 0] = 1
    S[1:, 1] = 1
    for k in range(2, n):
        S[1, k] = -1
        S[k, k] = 1
    return S


@dataclass
class SpectrumReport:
    n: int
    g: float
    eigenvalues: np.ndarray
    expected: np.ndarray
    eigenvalue_error: float
    s_offdiag_residual: float
    s_diagonal: np.ndarray
    tol: float

    @property
    def ok(self) -> bool:
        return self.eigenvalue_error <= self.tol * self.g and self.s_offdiag_residual <= self.tol * self.g

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "eigenvalues": self.eigenvalues.tolist(),
            "expected": self.expected.tolist(),
            "eigenvalue_error": self.eigenvalue_error,
            "s_offdiag_residual": self.s_offdiag_residual,
            "ok": self.ok,
        }


def verify_spectrum(n: int, g: float, tol: float = 1e-10) -> SpectrumReport:
    """Check the closed-form spectrum g(1 -/+ sqrt(n)), 0 x (n-2) and the closed-form S against H_unif."""
    H = build_h_unif(n, g)
    evals, _ = hermitian_eig(H)
    r = math.sqrt(n)
    expected = np.sort(np.concatenate([[g * (1 - r), g * (1 + r)], np.zeros(n - 2)]))
    err = float(np.max(np.abs(evals - expected)))
    S = paper_s_matrix(n)
    S = S / np.linalg.norm(S, axis=0)
    D = S.conj().T @ H @ S
    off = D - np.diag(np.diag(D))
    return SpectrumReport(n, g, evals, expected, err, float(np.max(np.abs(off))), np.diag(D).real, tol)
