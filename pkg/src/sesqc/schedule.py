"""Piecewise-constant control schedules: compilation of a Grover plan and SES execution.

A segment holds per-qubit detunings relative to a common qubit energy
``epsilon_base`` and pairwise couplings, all in rad/ns, plus an analytic
global phase applied after the segment. The SES picture drops epsilon_base
(it only contributes a global phase there); the full-space verifier adds it back.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import grover
from .densecx import evolve
from .hwmodel import HardwareModel, build_ses_hamiltonian
from .units import ghz_to_rad_ns, mhz_to_rad_ns, rad_ns_to_ghz, rad_ns_to_mhz

LABELS = ("prep", "oracle", "inversion")

# representative transmon/phase-qubit frequency, 5 GHz
DEFAULT_EPSILON_BASE = ghz_to_rad_ns(5.0)


class ScheduleFormatError(ValueError):
    """Malformed schedule document; ``location`` points at the offending field."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


@dataclass(frozen=True, eq=False)
class ControlSegment:
    label: str
    duration: float
    epsilon_offsets: np.ndarray
    couplings: np.ndarray
    post_phase: float = 0.0

    def __post_init__(self):
        offsets = np.array(self.epsilon_offsets, dtype=float).reshape(-1)
        n = offsets.size
        couplings = np.array(self.couplings, dtype=float)
        if couplings.shape != (n, n):
            raise ValueError(f"couplings must be {n}x{n}, got {couplings.shape}")
        couplings = np.triu(couplings, k=1)
        if not (math.isfinite(self.duration) and self.duration > 0):
            raise ValueError(f"segment duration must be positive, got {self.duration}")
        if not (np.all(np.isfinite(offsets)) and np.all(np.isfinite(couplings))):
            raise ValueError("non-finite detuning or coupling in segment")
        if not math.isfinite(self.post_phase):
            raise ValueError("non-finite post_phase")
        offsets.setflags(write=False)
        couplings.setflags(write=False)
        object.__setattr__(self, "epsilon_offsets", offsets)
        object.__setattr__(self, "couplings", couplings)
        object.__setattr__(self, "duration", float(self.duration))
        object.__setattr__(self, "post_phase", float(self.post_phase))

    @property
    def n(self) -> int:
        return self.epsilon_offsets.size

    def hardware_model(self, epsilon_base: float = 0.0) -> HardwareModel:
        """XX-coupled hardware model realizing this segment at absolute qubit energy epsilon_base."""
        return HardwareModel(epsilon_base + self.epsilon_offsets, self.couplings)

    def ses_hamiltonian(self) -> np.ndarray:
        return build_ses_hamiltonian(self.hardware_model())


@dataclass(frozen=True, eq=False)
class ControlSchedule:
    n: int
    epsilon_base: float
    segments: tuple[ControlSegment, ...] = ()

    def __post_init__(self):
        segs = tuple(self.segments)
        for k, seg in enumerate(segs):
            if seg.n != self.n:
                raise ValueError(f"segment {k} is for {seg.n} qubits, schedule has {self.n}")
        object.__setattr__(self, "segments", segs)

    @property
    def total_duration(self) -> float:
        return sum(seg.duration for seg in self.segments)


def _prep_segment(n: int, g: float) -> ControlSegment:
    offsets = np.zeros(n)
    offsets[0] = 2 * g
    couplings = np.zeros((n, n))
    couplings[0, 1:] = g
    # prefactor i = e^{i pi/2} together with e^{i alpha_unif}
    phase = grover.unif_phase(n) + math.pi / 2
    return ControlSegment("prep", grover.unif_duration(n, g), offsets, couplings, phase)


def _oracle_segment(n: int, marked: int, delta_eps: float) -> ControlSegment:
    offsets = np.zeros(n)
    offsets[marked - 1] = -delta_eps
    return ControlSegment("oracle", grover.oracle_duration(delta_eps), offsets, np.zeros((n, n)))


def _inversion_segment(n: int, g: float) -> ControlSegment:
    couplings = np.triu(np.full((n, n), g), k=1)
    # W = e^{-i alpha_W} exp(-i H_W t_W), so the phase applied afterwards is -alpha_W
    return ControlSegment("inversion", grover.w_duration(n, g), np.zeros(n), couplings, -grover.w_phase(n))


def compile_grover_schedule(plan: grover.GroverPlan, epsilon_base: float = DEFAULT_EPSILON_BASE) -> ControlSchedule:
    """Uniform-state preparation, then ``plan.iterations`` (oracle, inversion) pairs."""
    n = plan.n
    if n == 1:
        return ControlSchedule(1, epsilon_base, ())
    segments = [_prep_segment(n, plan.g)]
    oracle = _oracle_segment(n, plan.marked, plan.delta_eps)
    inversion = _inversion_segment(n, plan.g)
    for _ in range(plan.iterations):
        segments += [oracle, inversion]
    return ControlSchedule(n, epsilon_base, tuple(segments))


def initial_state(n: int) -> np.ndarray:
    return grover.basis_state(n, 1)


def execute_schedule_ses(schedule: ControlSchedule, psi0=None, trajectory: bool = False):
    """Run a schedule in the SES starting from |1) (or ``psi0``).

    Returns the final state, or the list of states after each segment (initial
    state first) when ``trajectory`` is set.
    """
    psi = initial_state(schedule.n) if psi0 is None else np.asarray(psi0, dtype=complex)
    states = [psi]
    for seg in schedule.segments:
        psi = evolve(seg.ses_hamiltonian(), seg.duration, psi)
        if seg.post_phase:
            psi = np.exp(1j * seg.post_phase) * psi
        states.append(psi)
    return states if trajectory else psi


# -- schedule document ---------------------------------------------------------


def export_schedule(schedule: ControlSchedule) -> dict:
    """Schedule document with frequencies as f = omega/2pi (GHz base, MHz controls) and ns durations."""
    segments = []
    for seg in schedule.segments:
        iu, ju = np.nonzero(seg.couplings)
        segments.append(
            {
                "label": seg.label,
                "duration_ns": seg.duration,
                "epsilon_offsets_MHz": [rad_ns_to_mhz(v) for v in seg.epsilon_offsets.tolist()],
                "couplings": [
                    [int(i) + 1, int(j) + 1, rad_ns_to_mhz(float(seg.couplings[i, j]))] for i, j in zip(iu, ju)
                ],
                "post_phase_rad": seg.post_phase,
            }
        )
    return {
        "n": schedule.n,
        "epsilon_base_GHz": rad_ns_to_ghz(schedule.epsilon_base),
        "segments": segments,
    }


def _number(value, where: str, positive: bool = False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScheduleFormatError(where, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ScheduleFormatError(where, "must be finite")
    if positive and value <= 0:
        raise ScheduleFormatError(where, f"must be > 0, got {value}")
    return value


def import_schedule(doc) -> ControlSchedule:
    """Parse and validate a schedule document (dict or JSON text)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ScheduleFormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from exc
    if not isinstance(doc, dict):
        raise ScheduleFormatError("$", "schedule document must be an object")
    for key in ("n", "epsilon_base_GHz", "segments"):
        if key not in doc:
            raise ScheduleFormatError("$", f"missing key {key!r}")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ScheduleFormatError("n", f"must be a positive integer, got {n!r}")
    base = ghz_to_rad_ns(_number(doc["epsilon_base_GHz"], "epsilon_base_GHz"))
    if not isinstance(doc["segments"], list):
        raise ScheduleFormatError("segments", "must be an array")

    segments = []
    for k, item in enumerate(doc["segments"]):
        where = f"segments[{k}]"
        if not isinstance(item, dict):
            raise ScheduleFormatError(where, "segment must be an object")
        for key in ("label", "duration_ns", "epsilon_offsets_MHz", "couplings", "post_phase_rad"):
            if key not in item:
                raise ScheduleFormatError(where, f"missing key {key!r}")
        label = item["label"]
        if label not in LABELS:
            raise ScheduleFormatError(f"{where}.label", f"must be one of {LABELS}, got {label!r}")
        duration = _number(item["duration_ns"], f"{where}.duration_ns", positive=True)
        offsets = item["epsilon_offsets_MHz"]
        if not isinstance(offsets, list) or len(offsets) != n:
            raise ScheduleFormatError(f"{where}.epsilon_offsets_MHz", f"must be an array of {n} numbers")
        offsets = [mhz_to_rad_ns(_number(v, f"{where}.epsilon_offsets_MHz[{m}]")) for m, v in enumerate(offsets)]
        couplings = np.zeros((n, n))
        if not isinstance(item["couplings"], list):
            raise ScheduleFormatError(f"{where}.couplings", "must be an array")
        for c, triple in enumerate(item["couplings"]):
            cwhere = f"{where}.couplings[{c}]"
            if not isinstance(triple, list) or len(triple) != 3:
                raise ScheduleFormatError(cwhere, "must be [i, j, MHz]")
            i, j, f = triple
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= n):
                raise ScheduleFormatError(cwhere, f"need integer labels 1 <= i < j <= {n}, got ({i!r}, {j!r})")
            couplings[i - 1, j - 1] = mhz_to_rad_ns(_number(f, f"{cwhere}[2]"))
        phase = _number(item["post_phase_rad"], f"{where}.post_phase_rad")
        segments.append(ControlSegment(label, duration, offsets, couplings, phase))
    return ControlSchedule(n, base, tuple(segments))
