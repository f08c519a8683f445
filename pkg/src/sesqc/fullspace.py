"""Brute-force 2^n-dimensional model: correctness oracle for the SES map and leakage laboratory.

Basis ordering is little-endian: basis index b = sum_i b_i 2^(i-1), so the
single-excitation state |m) sits at index 2^(m-1).
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .densecx import hermitian_eig
from .grover import GroverPlan
from .hwmodel import HardwareModel
from .schedule import (
    ControlSchedule,
    ControlSegment,
    compile_grover_schedule,
    execute_schedule_ses,
    initial_state,
)

MAX_QUBITS = 12

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
AXES = "xyz"


class CapacityError(ValueError):
    pass


def _check_capacity(n: int):
    if n > MAX_QUBITS:
        raise CapacityError(f"full-space construction is capped at {MAX_QUBITS} qubits, got {n}")


@dataclass(frozen=True)
class SesEmbedding:
    n: int
    indices: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        _check_capacity(self.n)
        object.__setattr__(self, "indices", 1 << np.arange(self.n))

    @property
    def dim(self) -> int:
        return 1 << self.n

    def embed(self, psi_ses) -> np.ndarray:
        psi = np.zeros(self.dim, dtype=complex)
        psi[self.indices] = psi_ses
        return psi

    def project(self, psi_full) -> np.ndarray:
        return np.asarray(psi_full)[self.indices]


def _single_action(op: np.ndarray, bits: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Image bit and amplitude of a one-column-one-entry 2x2 operator acting on bit values."""
    target = np.argmax(np.abs(op), axis=0)
    return target[bits], op[target[bits], bits]


def two_qubit_action(n: int, i: int, j: int, op_i: np.ndarray, op_j: np.ndarray):
    """op_i on qubit i times op_j on qubit j (1-based) as ``(rows, cols, amplitudes)``, one entry per column."""
    b = np.arange(1 << n)
    ti, ai = _single_action(op_i, (b >> (i - 1)) & 1)
    tj, aj = _single_action(op_j, (b >> (j - 1)) & 1)
    out = (b & ~(1 << (i - 1))) | (ti << (i - 1))
    out = (out & ~(1 << (j - 1))) | (tj << (j - 1))
    return out, b, ai * aj


def build_full_hamiltonian(model: HardwareModel) -> np.ndarray:
    """sum_i eps_i c_i^dag c_i + sum_{i<j} g_ij sum_{mu nu} J_{mu nu} sigma^mu_i sigma^nu_j."""
    n = model.n
    _check_capacity(n)
    dim = 1 << n
    b = np.arange(dim)
    occupation = (b[:, None] >> np.arange(n)) & 1
    H = np.diag((occupation @ model.epsilon).astype(complex))
    for i, j, gij in model.pairs():
        for mu in range(3):
            for nu in range(3):
                if model.J[mu, nu] != 0:
                    rows, cols, amps = two_qubit_action(n, i, j, PAULI[AXES[mu]], PAULI[AXES[nu]])
                    # each column appears once per term, so fancy-index accumulation is safe
                    H[rows, cols] += gij * model.J[mu, nu] * amps
    return H


def project_to_ses(H_full, emb: SesEmbedding) -> np.ndarray:
    H_full = np.asarray(H_full)
    if H_full.shape != (emb.dim, emb.dim):
        raise ValueError(f"full Hamiltonian of shape {H_full.shape} does not match n = {emb.n}")
    return H_full[np.ix_(emb.indices, emb.indices)].astype(complex)


def leakage(psi, emb: SesEmbedding) -> float:
    """Probability weight outside the single-excitation subspace."""
    p_in = float(np.sum(np.abs(emb.project(psi)) ** 2))
    return min(1.0, max(0.0, 1.0 - p_in))


def _segment_states(seg: ControlSegment, epsilon_base: float, psi: np.ndarray, samples: int):
    """States at ``samples`` equally spaced times within the segment, ending at its end (post_phase applied there)."""
    H = build_full_hamiltonian(seg.hardware_model(epsilon_base))
    evals, V = hermitian_eig(H)
    coeffs = V.conj().T @ psi
    out = []
    for k in range(1, samples + 1):
        t = seg.duration * k / samples
        out.append(V @ (np.exp(-1j * evals * t) * coeffs))
    out[-1] = np.exp(1j * seg.post_phase) * out[-1]
    return out


def evolve_full(schedule: ControlSchedule, psi0, samples_per_segment: int = 1, trajectory: bool = False):
    """Apply each segment's full-space propagator in order.

    With ``trajectory`` set, returns a list (one entry per segment) of the
    states sampled inside that segment; otherwise the final state.
    """
    _check_capacity(schedule.n)
    psi = np.asarray(psi0, dtype=complex)
    if psi.shape != (1 << schedule.n,):
        raise ValueError(f"full state must have {1 << schedule.n} amplitudes, got {psi.shape}")
    per_segment = []
    for seg in schedule.segments:
        states = _segment_states(seg, schedule.epsilon_base, psi, samples_per_segment)
        per_segment.append(states)
        psi = states[-1]
    return per_segment if trajectory else psi


@dataclass
class SweepPoint:
    ratio: float
    max_leakage: float
    final_fidelity: float
    segment_leakage: list[float]
    labels: list[str]


def oracle_only_schedule(plan: GroverPlan, epsilon_base: float) -> ControlSchedule:
    """The oracle segments of the compiled plan; the coupled segments have no finite duration at g = 0."""
    full = compile_grover_schedule(replace(plan, g=1.0), epsilon_base)
    return ControlSchedule(plan.n, epsilon_base, tuple(s for s in full.segments if s.label == "oracle"))


def sweep_point(plan: GroverPlan, epsilon_base: float, ratio: float, samples_per_segment: int = 16) -> SweepPoint:
    if ratio < 0:
        raise ValueError(f"coupling ratio must be non-negative, got {ratio}")
    if ratio == 0:
        schedule = oracle_only_schedule(plan, epsilon_base)
    else:
        schedule = compile_grover_schedule(replace(plan, g=ratio * epsilon_base), epsilon_base)
    emb = SesEmbedding(plan.n)
    psi_ses = execute_schedule_ses(schedule)
    traj = evolve_full(schedule, emb.embed(initial_state(plan.n)), samples_per_segment, trajectory=True)
    seg_leak = [max(leakage(s, emb) for s in states) for states in traj]
    final = traj[-1][-1] if traj else emb.embed(psi_ses)
    fidelity = float(abs(np.vdot(psi_ses, emb.project(final))) ** 2)
    return SweepPoint(
        ratio,
        max(seg_leak, default=0.0),
        fidelity,
        seg_leak,
        [s.label for s in schedule.segments],
    )


def leakage_sweep(plan: GroverPlan, epsilon_base: float, ratios, samples_per_segment: int = 16,
                  workers: int = 1) -> list[SweepPoint]:
    """Leakage and SES fidelity of the compiled Grover schedule for each coupling ratio g/epsilon_base.

    Each point compiles the plan with g = ratio * epsilon_base (detuning kept),
    runs it in the full space from |1) and records the largest leakage seen in
    each segment. Results follow the input order regardless of ``workers``.
    """
    _check_capacity(plan.n)
    ratios = [float(r) for r in ratios]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda r: sweep_point(plan, epsilon_base, r, samples_per_segment), ratios))
    return [sweep_point(plan, epsilon_base, r, samples_per_segment) for r in ratios]


def sweep_to_csv(points: list[SweepPoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ratio", "max_leakage", "final_fidelity"])
    for p in points:
        writer.writerow([repr(p.ratio), repr(p.max_leakage), repr(p.final_fidelity)])
    return buf.getvalue()


def sweep_to_json(points: list[SweepPoint], **kwargs) -> str:
    return json.dumps(
        [
            {
                "ratio": p.ratio,
                "max_leakage": p.max_leakage,
                "final_fidelity": p.final_fidelity,
                "segments": [{"label": lab, "leakage": leak} for lab, leak in zip(p.labels, p.segment_leakage)],
            }
            for p in points
        ],
        **kwargs,
    )
