"""Hardware model of a fully tunably-coupled qubit array and its exact SES matrix elements.

Conventions (the basis-convention note behind the model is not available, so
these are chosen to make a direct projection of the full Hamiltonian reproduce
the SES matrix elements, including the antisymmetric xy/yx term):

* sigma_z |0> = +|0>, so the ground state is the +1 eigenstate;
* c^dag c = (I - sigma_z) / 2 counts the excitation of a qubit;
* sigma_y |0> = i |1>, i.e. the usual sigma_y = [[0, -i], [i, 0]].
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .units import ghz_to_rad_ns, mhz_to_rad_ns, rad_ns_to_ghz, rad_ns_to_mhz


# |g_ij| above this fraction of the smallest qubit energy puts SES isolation at risk
ISOLATION_RATIO = 0.01


def xx_tensor() -> np.ndarray:
    J = np.zeros((3, 3))
    J[0, 0] = 1.0
    return J


@dataclass(frozen=True, eq=False)
class HardwareModel:
    """Qubit energies ``epsilon`` (rad/ns), couplings ``g`` and the coupling tensor ``J``.

    ``g`` is an n x n array of which only the strict upper triangle (i < j) is
    meaningful; anything on or below the diagonal is discarded.
    """

    epsilon: np.ndarray
    g: np.ndarray
    J: np.ndarray = field(default_factory=xx_tensor)

    def __post_init__(self):
        eps = np.array(self.epsilon, dtype=float).reshape(-1)
        n = eps.size
        if n < 1:
            raise ValueError("a hardware model needs at least one qubit")
        g = np.array(self.g, dtype=float)
        if g.shape != (n, n):
            raise ValueError(f"coupling array must be {n}x{n}, got {g.shape}")
        g = np.triu(g, k=1)
        J = np.array(self.J)
        if np.iscomplexobj(J):
            if np.any(J.imag != 0):
                raise ValueError("coupling tensor J must be real")
            J = J.real
        J = J.astype(float)
        if J.shape != (3, 3):
            raise ValueError(f"coupling tensor J must be 3x3, got {J.shape}")
        for name, arr in (("epsilon", eps), ("g", g), ("J", J)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"non-finite entries in {name}")
            arr.setflags(write=False)
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "J", J)

    @property
    def n(self) -> int:
        return self.epsilon.size

    def coupling(self, i: int, j: int) -> float:
        """g_ij for 1-based qubit labels, symmetric in (i, j); zero on the diagonal."""
        if i == j:
            return 0.0
        a, b = min(i, j), max(i, j)
        return float(self.g[a - 1, b - 1])

    def pairs(self):
        """Yield (i, j, g_ij) over 1-based pairs i < j with nonzero coupling."""
        for a, b in zip(*np.nonzero(self.g)):
            yield int(a) + 1, int(b) + 1, float(self.g[a, b])

    def shifted(self, c: float) -> HardwareModel:
        return HardwareModel(self.epsilon + c, self.g, self.J)

    @classmethod
    def from_couplings(cls, epsilon, couplings, J=None) -> HardwareModel:
        """Build from a list of ``(i, j, g_ij)`` triples with 1-based labels."""
        eps = np.asarray(epsilon, dtype=float)
        n = eps.size
        g = np.zeros((n, n))
        for i, j, value in couplings:
            i, j = int(i), int(j)
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ValueError(f"invalid coupling pair ({i}, {j}) for n = {n}")
            g[min(i, j) - 1, max(i, j) - 1] = value
        return cls(eps, g, xx_tensor() if J is None else J)

    # -- config document ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "epsilon": [rad_ns_to_ghz(e) for e in self.epsilon.tolist()],
            "g": [[i, j, rad_ns_to_mhz(v)] for i, j, v in self.pairs()],
            "J": self.J.tolist(),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> HardwareModel:
        try:
            n = int(doc["n"])
            eps = [ghz_to_rad_ns(float(f)) for f in doc["epsilon"]]
            couplings = [(i, j, mhz_to_rad_ns(float(f))) for i, j, f in doc.get("g", [])]
            J = doc.get("J")
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed hardware model document: {exc!r}") from exc
        if len(eps) != n:
            raise ValueError(f"epsilon has {len(eps)} entries but n = {n}")
        return cls.from_couplings(eps, couplings, J)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> HardwareModel:
        return cls.from_dict(json.loads(text))


def build_ses_hamiltonian(model: HardwareModel) -> np.ndarray:
    """Exact matrix elements (m|H|m') of the hardware model in the single-excitation subspace."""
    n = model.n
    g = model.g
    J = model.J
    jzz = J[2, 2]
    gsym = g + g.T
    H = np.zeros((n, n), dtype=complex)
    # sum_{k<m} g_km + sum_{k>m} g_mk is the row sum of the symmetrized couplings
    diag = model.epsilon - 2.0 * jzz * gsym.sum(axis=1) + jzz * g.sum()
    H[np.diag_indices(n)] = diag
    hop = J[0, 0] + J[1, 1] - 1j * (J[0, 1] - J[1, 0])
    iu = np.triu_indices(n, k=1)
    H[iu] = hop * g[iu]
    H[(iu[1], iu[0])] = np.conj(hop) * g[iu]
    return H


def validate(model: HardwareModel) -> list[str]:
    """Warnings for couplings that threaten isolation of the single-excitation subspace.

    Never raises for weak isolation; non-finite parameters are already rejected
    when the model is constructed.
    """
    warnings = []
    eps_min = float(np.min(model.epsilon))
    for i, j, gij in model.pairs():
        if eps_min <= 0.0:
            warnings.append(
                f"coupling ({i}, {j}) = {gij:.4g} rad/ns with min qubit energy {eps_min:.4g}: "
                "ratio g/epsilon undefined"
            )
        elif abs(gij) > ISOLATION_RATIO * eps_min:
            warnings.append(
                f"coupling ({i}, {j}): |g|/min(epsilon) = {abs(gij) / eps_min:.3g} "
                f"exceeds {ISOLATION_RATIO:g}"
            )
    return warnings

