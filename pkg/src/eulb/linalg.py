"""Dense complex linear algebra for 2x2 and 4x4 Hermitian matrices.

States are plain ``numpy`` arrays.  Two-qubit matrices use the A-major
basis ordering |00>, |01>, |10>, |11> (flat index = 2a + b) throughout
the package.  All entropies are in bits (base-2 logarithms).
"""

from __future__ import annotations

import math

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
EIGENVALUE_FLOOR = -1e-10

# Jacobi eigensolver stopping rule for 4x4 Hermitian matrices.
_JACOBI_OFF_NORM_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 100

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of m from its conjugate transpose."""
    m = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(m - m.conj().T)))


def validate_density_matrix(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Check Hermiticity, unit trace, positivity and finiteness; return as complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape not in ((2, 2), (4, 4)):
        raise ValueError(f"{name} must be 2x2 or 4x4, got shape {rho.shape}")
    if not np.all(np.isfinite(rho.view(float))):
        raise ValueError(f"{name} contains non-finite entries")
    defect = hermiticity_defect(rho)
    if defect > HERMITICITY_TOL:
        raise ValueError(f"{name} is not Hermitian (defect {defect:.3e})")
    trace = rho.trace()
    if abs(trace - 1.0) > TRACE_TOL:
        raise ValueError(f"{name} trace deviates from 1 by {abs(trace - 1.0):.3e}")
    evals = eigenvalues_hermitian(rho)
    if evals[-1] < EIGENVALUE_FLOOR:
        raise ValueError(f"{name} has negative eigenvalue {evals[-1]:.3e}")
    return rho


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 operators (A factor first, giving the A-major basis).

    Inputs need not be density matrices; projectors and other Hermitian
    operators are accepted unchecked.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"tensor_product expects 2x2 factors, got {a.shape} and {b.shape}")
    out = np.empty((4, 4), dtype=complex)  # block form of np.kron, faster at this size
    out[0:2, 0:2] = a[0, 0] * b
    out[0:2, 2:4] = a[0, 1] * b
    out[2:4, 0:2] = a[1, 0] * b
    out[2:4, 2:4] = a[1, 1] * b
    return out


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduce a 4x4 two-qubit operator to the kept subsystem ('A' or 'B')."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"partial_trace expects a 4x4 matrix, got shape {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)  # indices [a, b, a', b']
    if keep == "A":
        return np.einsum("ijkj->ik", r)
    if keep == "B":
        return np.einsum("ijik->jk", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def _eigvals_2x2(m: np.ndarray) -> np.ndarray:
    a = m[0, 0].real
    d = m[1, 1].real
    mean = 0.5 * (a + d)
    radius = math.hypot(0.5 * (a - d), abs(m[0, 1]))
    return np.array([mean + radius, mean - radius])


def _eigvals_4x4_jacobi(m: np.ndarray) -> np.ndarray:
    # Cyclic Jacobi with complex plane rotations; plain-Python scalars keep
    # the 4x4 case fast enough for the sweep hot path.
    a = [[complex(m[i, j]) for j in range(4)] for i in range(4)]
    target = 0.5 * _JACOBI_OFF_NORM_TOL**2  # off-norm^2 = 2 * sum_{p<q} |a_pq|^2
    for _ in range(_JACOBI_MAX_SWEEPS):
        off2 = 0.0
        for p in range(3):
            for q in range(p + 1, 4):
                x = a[p][q]
                off2 += x.real * x.real + x.imag * x.imag
        if off2 <= target:
            return np.sort(np.array([a[i][i].real for i in range(4)]))[::-1]
        for p in range(3):
            for q in range(p + 1, 4):
                apq = a[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                tau = (a[q][q].real - a[p][p].real) / (2.0 * r)
                # small-magnitude root of t^2 - 2 tau t - 1 = 0
                if tau >= 0.0:
                    t = -1.0 / (tau + math.sqrt(tau * tau + 1.0))
                else:
                    t = 1.0 / (-tau + math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                se = (t * c) * (apq / r)  # s * e^{i phi}
                sec = se.conjugate()
                for i in range(4):
                    aip = a[i][p]
                    aiq = a[i][q]
                    a[i][p] = c * aip + sec * aiq
                    a[i][q] = c * aiq - se * aip
                for j in range(4):
                    apj = a[p][j]
                    aqj = a[q][j]
                    a[p][j] = c * apj + se * aqj
                    a[q][j] = c * aqj - sec * apj
                a[p][q] = 0j
                a[q][p] = 0j
    raise RuntimeError("Jacobi eigensolver did not converge in 100 sweeps")


def eigenvalues_hermitian(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a 2x2 or 4x4 Hermitian matrix, sorted descending.

    2x2 uses the closed quadratic formula; 4x4 uses cyclic Jacobi rotations
    (robust near the degenerate spectra this package produces).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape not in ((2, 2), (4, 4)):
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {m.shape}")
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    if m.shape == (2, 2):
        return _eigvals_2x2(m)
    return _eigvals_4x4_jacobi(m)


def entropy_from_eigenvalues(evals: np.ndarray) -> float:
    """-sum p log2 p with 0 log 0 = 0; eigenvalues in [-1e-10, 0) are clamped to 0."""
    s = 0.0
    for p in evals:
        p = float(p)
        if p < EIGENVALUE_FLOOR:
            raise ValueError(f"eigenvalue {p:.3e} below positivity floor {EIGENVALUE_FLOOR}")
        if p > 0.0:
            s -= p * math.log2(p)
    return max(s, 0.0)  # roundoff guard when an eigenvalue exceeds 1 by ~1 ulp


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits of a 2x2 or 4x4 density matrix."""
    return entropy_from_eigenvalues(eigenvalues_hermitian(rho))


def binary_entropy(x: float) -> float:
    """Binary entropy -x log2 x - (1-x) log2 (1-x) in bits, for x in [0, 1]."""
    x = float(x)
    if x < -1e-12 or x > 1.0 + 1e-12:
        raise ValueError(f"binary_entropy argument {x} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    s = 0.0
    if x > 0.0:
        s -= x * math.log2(x)
    if x < 1.0:
        s -= (1.0 - x) * math.log2(1.0 - x)
    return s
