"""Frequency conversions.

Internally every Hamiltonian entry is an angular frequency in rad/ns and every
time is in ns. Frequencies quoted as f = omega/2pi are converted here only.
"""

import math

TWO_PI = 2.0 * math.pi


def mhz_to_rad_ns(f_mhz: float) -> float:
    return TWO_PI * f_mhz * 1e-3


def rad_ns_to_mhz(omega: float) -> float:
    return omega / TWO_PI * 1e3


def ghz_to_rad_ns(f_ghz: float) -> float:
    return TWO_PI * f_ghz


def rad_ns_to_ghz(omega: float) -> float:
    return omega / TWO_PI
