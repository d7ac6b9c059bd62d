"""One-sided amplitude decay on the memory qubit, and the reference initial states.

The channel acts on the B factor of a two-qubit state: the population of
the decaying (excited) basis level scales by c^2, coherences between the
two levels scale by c, and the lost population lands on the absorbing
level.  The amplitude c is signed; in the strong-coupling regime it
genuinely crosses zero.  By default the decaying level is |0>, the
convention under which the channel reproduces the evolved maximally
entangled matrix literally.
"""

from __future__ import annotations

import math

import numpy as np

from .linalg import IDENTITY_2, PAULI_X, PAULI_Y, PAULI_Z, tensor_product

_AMPLITUDE_SLACK = 1e-9  # |c| may exceed 1 by roundoff from the dynamics


def _kraus_pair(c: float, excited: int) -> tuple[np.ndarray, np.ndarray]:
    ground = 1 - excited
    k0 = np.zeros((2, 2), dtype=complex)
    k0[excited, excited] = c
    k0[ground, ground] = 1.0
    k1 = np.zeros((2, 2), dtype=complex)
    k1[ground, excited] = math.sqrt(1.0 - c * c)
    return k0, k1


def apply_memory_decay(rho: np.ndarray, c: float, excited: int = 0) -> np.ndarray:
    """Apply the decay channel with amplitude c to the B side of a 4x4 state.

    Kraus elements (on B): K0 = c |e><e| + |g><g|, K1 = sqrt(1-c^2) |g><e|,
    which preserve the trace identically.  c = 1 is the identity map and
    c = -1 a phase flip on the excited level.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 state, got shape {rho.shape}")
    if excited not in (0, 1):
        raise ValueError(f"excited level must be 0 or 1, got {excited!r}")
    c = float(c)
    if abs(c) > 1.0 + _AMPLITUDE_SLACK:
        raise ValueError(f"channel amplitude |{c}| > 1 would break positivity")
    c = min(max(c, -1.0), 1.0)
    k0, k1 = _kraus_pair(c, excited)
    big0 = tensor_product(IDENTITY_2, k0)
    big1 = tensor_product(IDENTITY_2, k1)
    return big0 @ rho @ big0.conj().T + big1 @ rho @ big1.conj().T


def max_entangled_initial() -> np.ndarray:
    """The maximally entangled pure state (|00> + |11>)/sqrt(2) as a 4x4 matrix."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[0, 3] = rho[3, 0] = rho[3, 3] = 0.5
    return rho


def _bell_kets() -> dict[str, np.ndarray]:
    s = 1.0 / math.sqrt(2.0)
    return {
        "phi+": np.array([s, 0, 0, s], dtype=complex),
        "phi-": np.array([s, 0, 0, -s], dtype=complex),
        "psi+": np.array([0, s, s, 0], dtype=complex),
        "psi-": np.array([0, s, -s, 0], dtype=complex),
    }


def bell_diagonal_r_vector(p: float) -> tuple[float, float, float]:
    """Correlation vector (r1, r2, r3) = (1-2p, -p, -p) of the Bell mixture below."""
    return (1.0 - 2.0 * p, -p, -p)


def bell_diagonal_initial(p: float) -> np.ndarray:
    """Bell mixture p |psi-><psi-| + (1-p)/2 (|psi+><psi+| + |phi+><phi+|).

    Built directly from the Bell projectors.  Marginals are maximally mixed
    for every p; the spectrum is {p, (1-p)/2, (1-p)/2, 0}.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    kets = _bell_kets()
    rho = p * np.outer(kets["psi-"], kets["psi-"].conj())
    for name in ("psi+", "phi+"):
        rho = rho + 0.5 * (1.0 - p) * np.outer(kets[name], kets[name].conj())
    return rho


def evolved_max_entangled(c: float) -> np.ndarray:
    """Closed-form evolved maximally entangled state at amplitude c.

    Equals apply_memory_decay(max_entangled_initial(), c) entrywise; kept as
    an explicit constructor so the channel can be cross-checked against it.
    """
    c = float(c)
    if abs(c) > 1.0 + _AMPLITUDE_SLACK:
        raise ValueError(f"amplitude |{c}| > 1 out of range")
    c = min(max(c, -1.0), 1.0)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 0.5 * c * c
    rho[1, 1] = 0.5 * (1.0 - c * c)
    rho[3, 3] = 0.5
    rho[0, 3] = rho[3, 0] = 0.5 * c
    return rho


def evolved_bell_diagonal_closed_form(p: float, c: float) -> np.ndarray:
    """Closed-form snapshot of the evolved Bell-diagonal state.  Known inconsistent.

    This tabulated matrix does not reduce to bell_diagonal_initial(p) at
    c = 1 (its corner coherences are doubled and its diagonal follows a
    different basis ordering), and it is not positive semidefinite for all
    parameters.  It exists solely as an audit target for discrepancy_report;
    the sweep pipeline always evolves states through apply_memory_decay.
    """
    p = float(p)
    c = float(c)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if abs(c) > 1.0:
        raise ValueError(f"amplitude |{c}| > 1 out of range")
    c2 = c * c
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 0.25 * (1.0 + p) * c2
    rho[1, 1] = 0.25 * (1.0 - p) + 0.25 * (1.0 + p) * (1.0 - c2)
    rho[2, 2] = 0.25 * (1.0 - p) * c2
    rho[3, 3] = 0.25 * (1.0 + p) + 0.25 * (1.0 - p) * (1.0 - c2)
    rho[0, 3] = rho[3, 0] = 0.5 * (1.0 - p) * abs(c)
    rho[1, 2] = rho[2, 1] = 0.5 * (1.0 - 3.0 * p) * c
    return rho


# Pauli-basis route kept exposed for tests: the Bell mixture equals
# (I@I + sum_i r_i sigma_i @ sigma_i) / 4 with r = bell_diagonal_r_vector(p).
def bell_diagonal_from_r(r: tuple[float, float, float]) -> np.ndarray:
    rho = tensor_product(IDENTITY_2, IDENTITY_2).astype(complex)
    for coeff, sigma in zip(r, (PAULI_X, PAULI_Y, PAULI_Z)):
        rho = rho + coeff * tensor_product(sigma, sigma)
    return rho / 4.0
