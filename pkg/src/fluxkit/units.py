"""Unit conventions and conversions.

Internal canonical units are angular frequency in rad/µs and time in µs;
energies are stored as angular frequencies (E/ħ). User-facing interfaces
speak GHz, MHz, ns and mK.
"""

import numpy as np
from scipy import constants

TWO_PI = 2.0 * np.pi

# ħω/k_B for ω in rad/µs gives kelvin when multiplied by this (ħ/k_B in K·µs).
HBAR_OVER_KB_K_US = constants.hbar / constants.k * 1e6


def ghz_to_angular(f_ghz: float) -> float:
    """Frequency in GHz to angular frequency in rad/µs."""
    return TWO_PI * 1e3 * f_ghz


def mhz_to_angular(f_mhz: float) -> float:
    """Frequency in MHz to angular frequency in rad/µs."""
    return TWO_PI * f_mhz


def angular_to_ghz(omega: float) -> float:
    return omega / (TWO_PI * 1e3)


def angular_to_mhz(omega: float) -> float:
    return omega / TWO_PI


def angular_to_hz(omega: float) -> float:
    """rad/µs to Hz (for the microwave network layer)."""
    return omega * 1e6 / TWO_PI


def boltzmann_exponent(omega: float, temperature: float) -> float:
    """ħω/(k_B·T) for ω in rad/µs and T in kelvin."""
    if temperature <= 0.0:
        raise ZeroDivisionError("boltzmann_exponent requires T > 0")
    return HBAR_OVER_KB_K_US * omega / temperature


def temperature_from_ground_population(omega_ge: float, p_ground: float) -> float:
    """Effective two-level temperature (K) giving the requested ground-state
    occupation at splitting omega_ge (rad/µs)."""
    if not 0.5 < p_ground < 1.0:
        raise ValueError("ground population must lie in (0.5, 1) to invert")
    return HBAR_OVER_KB_K_US * omega_ge / np.log(p_ground / (1.0 - p_ground))
