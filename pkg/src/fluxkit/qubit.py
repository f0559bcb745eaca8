"""Fluxonium eigenproblem in the harmonic-oscillator basis.

The circuit Hamiltonian is

    H = 4 E_C n² + (E_L/2) φ² − E_J cos(φ + φ_ext),

with all energies given as angular frequencies (rad/µs) and the sweet spot
at φ_ext = π. The basis is the harmonic oscillator of the (E_C, E_L) pair;
cos/sin of the phase operator are evaluated exactly (within truncation) by
diagonalizing φ and applying the scalar function to its spectrum.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import eigh, LinAlgError

from .errors import ConfigurationError, NumericError, ParameterDomainError
from .units import HBAR_OVER_KB_K_US

DEFAULT_BASIS_SIZE = 60
DEFAULT_LEVELS = 6
MIN_BASIS_SIZE = 20

LEVEL_LABELS = ("g", "e", "f", "h")


def level_label(index: int) -> str:
    """Conventional level name: g, e, f, h, then numeric."""
    return LEVEL_LABELS[index] if index < len(LEVEL_LABELS) else f"l{index}"


@dataclass(frozen=True)
class DeviceParams:
    """Static device configuration.

    Parameters
    ----------
    e_j, e_c, e_l : float
        Josephson, charging and inductive energies as angular frequencies
        (rad/µs), i.e. E/ħ.
    phi_ext : float
        External flux phase in radians; π is the sweet spot.
    temperature : float
        Effective environment temperature in kelvin.
    gamma_r_anchor : float, optional
        Measured decay rate of the readout (e–f) transition in rad/µs.
        Calibrates the absolute scale of all filtered external rates.
    """

    e_j: float
    e_c: float
    e_l: float
    phi_ext: float
    temperature: float
    gamma_r_anchor: Optional[float] = None

    def __post_init__(self):
        for name in ("e_j", "e_c", "e_l"):
            if getattr(self, name) <= 0.0:
                raise ParameterDomainError(f"{name} must be strictly positive")
        if self.temperature < 0.0:
            raise ParameterDomainError("temperature must be >= 0")
        if self.gamma_r_anchor is not None and self.gamma_r_anchor <= 0.0:
            raise ParameterDomainError("gamma_r_anchor must be positive when set")

    @property
    def phi_osc(self) -> float:
        """Oscillator length of the (E_C, E_L) harmonic basis."""
        return (8.0 * self.e_c / self.e_l) ** 0.25


@dataclass(frozen=True)
class EigenSystem:
    """Truncated spectrum plus the matrix elements consumed downstream.

    energies are sorted ascending with the ground state at 0;
    charge_elements[i, j] = |⟨i|n|j⟩| and qp_elements[i, j] =
    |⟨i|sin((φ+φ_ext)/2)|j⟩| over the retained levels.
    """

    levels: int
    energies: np.ndarray
    charge_elements: np.ndarray
    qp_elements: np.ndarray
    basis_size: int
    params: DeviceParams = field(repr=False)


def _ladder(n: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, n)), 1)


def phase_operator(params: DeviceParams, basis_size: int) -> np.ndarray:
    a = _ladder(basis_size)
    return (a + a.T) * params.phi_osc / np.sqrt(2.0)


def charge_operator(params: DeviceParams, basis_size: int) -> np.ndarray:
    a = _ladder(basis_size)
    return 1j * (a.T - a) / (params.phi_osc * np.sqrt(2.0))


def _phase_function(params: DeviceParams, basis_size: int, fn) -> np.ndarray:
    """Apply a scalar function to the spectrum of the phase operator."""
    lam, vec = eigh(phase_operator(params, basis_size))
    return vec @ np.diag(fn(lam)) @ vec.T


def build_hamiltonian(params: DeviceParams, basis_size: int = DEFAULT_BASIS_SIZE) -> np.ndarray:
    """Fluxonium Hamiltonian matrix (rad/µs) in the oscillator basis.

    Raises
    ------
    ConfigurationError
        If basis_size is below the safe minimum of 20.
    """
    if basis_size < MIN_BASIS_SIZE:
        raise ConfigurationError(
            f"basis_size must be >= {MIN_BASIS_SIZE}, got {basis_size}"
        )
    plasma = np.sqrt(8.0 * params.e_c * params.e_l)
    h = np.diag((np.arange(basis_size) + 0.5) * plasma).astype(complex)
    cos_shifted = _phase_function(
        params, basis_size, lambda lam: np.cos(lam + params.phi_ext)
    )
    h -= params.e_j * cos_shifted
    return h


def diagonalize(h: np.ndarray, levels: int, params: DeviceParams) -> EigenSystem:
    """Diagonalize a fluxonium Hamiltonian and populate matrix elements.

    The truncation safety margin requires levels <= basis_size/3. Eigenvalues
    are returned ascending with the ground-state offset removed; matrix
    elements are magnitudes taken in the same eigenbasis.
    """
    basis_size = h.shape[0]
    if levels > basis_size // 3:
        raise ConfigurationError(
            f"levels={levels} exceeds basis_size/3 = {basis_size // 3}"
        )
    try:
        evals, evecs = eigh(h)
    except LinAlgError as exc:
        raise NumericError(f"eigensolver failed: {exc}") from exc
    energies = evals[:levels] - evals[0]

    n_op = charge_operator(params, basis_size)
    sin_half = _phase_function(
        params, basis_size, lambda lam: np.sin((lam + params.phi_ext) / 2.0)
    )
    kept = evecs[:, :levels]
    charge = np.abs(kept.conj().T @ n_op @ kept)
    qp = np.abs(kept.conj().T @ sin_half @ kept)
    return EigenSystem(
        levels=levels,
        energies=energies,
        charge_elements=charge,
        qp_elements=qp,
        basis_size=basis_size,
        params=params,
    )


def solve_eigensystem(
    params: DeviceParams,
    basis_size: int = DEFAULT_BASIS_SIZE,
    levels: int = DEFAULT_LEVELS,
) -> EigenSystem:
    """Build and diagonalize in one call."""
    return diagonalize(build_hamiltonian(params, basis_size), levels, params)


def transition_frequency(eig: EigenSystem, i: int, j: int) -> float:
    """Signed transition frequency ω_ij = ω_i − ω_j in rad/µs."""
    if not (0 <= i < eig.levels and 0 <= j < eig.levels):
        raise ParameterDomainError(
            f"level indices ({i}, {j}) out of range for {eig.levels} levels"
        )
    return float(eig.energies[i] - eig.energies[j])


def thermal_population(eig: EigenSystem, temperature: float) -> np.ndarray:
    """Boltzmann weights over the retained levels, normalized to 1.

    T = 0 returns the ground-state delta distribution (documented limit,
    not an error); negative temperatures are rejected.
    """
    if temperature < 0.0:
        raise ParameterDomainError("temperature must be >= 0")
    probs = np.zeros(eig.levels)
    if temperature == 0.0:
        probs[0] = 1.0
        return probs
    exponents = -HBAR_OVER_KB_K_US * eig.energies / temperature
    weights = np.exp(exponents - exponents.max())
    return weights / weights.sum()
