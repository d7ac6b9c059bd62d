"""Memory-assisted entropic uncertainty: measured sum and its lower bounds.

For observables Q, R measured on qubit A of a two-qubit state rho_AB, with
qubit B kept as the memory, the quantities of interest are

    U_left        = S(Q|B) + S(R|B)                (post-measurement entropies)
    Berta bound   = log2(1/c) + S(A|B)             (c = max squared overlap)
    Adabi bound   = Berta + max(0, delta),
    delta         = I(A;B) - I(Q;B) - I(R;B)       (Holevo information gap)

Everything in the pipeline is computed from eigendecomposition-based
definitions.  The closed-form expressions for the two reference state
families (evolved maximally entangled and evolved Bell-diagonal at p=1/2)
are audit targets only: several of them are internally inconsistent, and
closed_form_report quantifies the mismatch instead of using them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .channel import apply_memory_decay, bell_diagonal_initial, max_entangled_initial
from .linalg import (
    IDENTITY_2,
    binary_entropy,
    eigenvalues_hermitian,
    partial_trace,
    tensor_product,
    von_neumann_entropy,
)

ZERO_PROBABILITY_TOL = 1e-12


@dataclass(eq=False)
class Observable:
    """A qubit observable given by its orthonormal eigenbasis (kets[i] = i-th ket)."""

    name: str
    kets: np.ndarray

    def __post_init__(self) -> None:
        kets = np.asarray(self.kets, dtype=complex)
        if kets.shape != (2, 2):
            raise ValueError(f"kets must be a 2x2 array of row vectors, got {kets.shape}")
        gram = kets.conj() @ kets.T
        if np.max(np.abs(gram - np.eye(2))) > 1e-12:
            raise ValueError(f"eigenbasis of {self.name!r} is not orthonormal")
        self.kets = kets

    def projectors(self) -> list[np.ndarray]:
        return [np.outer(k, k.conj()) for k in self.kets]

    def full_projectors(self) -> list[np.ndarray]:
        """The projectors lifted to the A factor of the two-qubit space, cached."""
        cached = getattr(self, "_full_projectors", None)
        if cached is None:
            cached = [tensor_product(proj, IDENTITY_2) for proj in self.projectors()]
            self._full_projectors = cached
        return cached


def pauli_x() -> Observable:
    s = 1.0 / math.sqrt(2.0)
    return Observable("sigma_x", np.array([[s, s], [s, -s]]))


def pauli_z() -> Observable:
    return Observable("sigma_z", np.eye(2))


def complementarity(q: Observable, r: Observable) -> float:
    """max_{i,j} |<q_i|r_j>|^2; equals 1/2 for mutually unbiased qubit bases."""
    overlaps = q.kets.conj() @ r.kets.T
    return float(np.max(np.abs(overlaps) ** 2))


def post_measurement_state(rho: np.ndarray, obs: Observable) -> np.ndarray:
    """Dephase rho in the measurement basis of A: sum_i (P_i x I) rho (P_i x I)."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros_like(rho)
    for m in obs.full_projectors():
        out += m @ rho @ m
    return out


@dataclass
class MeasurementResult:
    """Outcome probabilities and the memory states conditioned on each outcome."""

    probabilities: np.ndarray
    conditional_memory_states: list[np.ndarray]
    zero_probability: tuple[bool, bool]


def measure(rho: np.ndarray, obs: Observable) -> MeasurementResult:
    """Measure obs on A; zero-probability outcomes yield I/2 with a flag set."""
    rho = np.asarray(rho, dtype=complex)
    probs = []
    conds = []
    flags = []
    for m in obs.full_projectors():
        sub = m @ rho @ m
        p = max(float(sub.trace().real), 0.0)
        if p <= ZERO_PROBABILITY_TOL:
            probs.append(0.0)
            conds.append(IDENTITY_2 / 2.0)
            flags.append(True)
        else:
            probs.append(p)
            conds.append(partial_trace(sub, "B") / p)
            flags.append(False)
    return MeasurementResult(
        probabilities=np.array(probs),
        conditional_memory_states=conds,
        zero_probability=(flags[0], flags[1]),
    )


def _entropy_rescaled(evals: np.ndarray, p: float) -> float:
    # entropy of evals/p with clamping done before the division, so that
    # roundoff-negative eigenvalues of a tiny-probability branch cannot blow up
    s = 0.0
    for e in evals:
        if e > 0.0:
            q = float(e) / p
            s -= q * math.log2(q)
    return max(s, 0.0)


def holevo(rho: np.ndarray, obs: Observable) -> float:
    """Accessible information S(rho_B) - sum_i p_i S(rho_B|i) of the memory about obs.

    Zero-probability outcomes contribute 0 to the sum.
    """
    rho = np.asarray(rho, dtype=complex)
    result = von_neumann_entropy(partial_trace(rho, "B"))
    for m in obs.full_projectors():
        sub = m @ rho @ m
        p = float(sub.trace().real)
        if p <= ZERO_PROBABILITY_TOL:
            continue
        evals = eigenvalues_hermitian(partial_trace(sub, "B"))
        result -= p * _entropy_rescaled(evals, p)
    return result


def mutual_information(rho: np.ndarray) -> float:
    """I(A;B) = S(A) + S(B) - S(AB) in bits."""
    rho = np.asarray(rho, dtype=complex)
    return (
        von_neumann_entropy(partial_trace(rho, "A"))
        + von_neumann_entropy(partial_trace(rho, "B"))
        - von_neumann_entropy(rho)
    )


def conditional_entropy(rho: np.ndarray) -> float:
    """S(A|B) = S(AB) - S(B); negative for sufficiently entangled states."""
    rho = np.asarray(rho, dtype=complex)
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, "B"))


def uncertainty_left(rho: np.ndarray, q: Observable, r: Observable) -> float:
    """S(Q|B) + S(R|B), each term S(post-measurement state) - S(rho_B)."""
    rho = np.asarray(rho, dtype=complex)
    s_b = von_neumann_entropy(partial_trace(rho, "B"))
    s_q = von_neumann_entropy(post_measurement_state(rho, q))
    s_r = von_neumann_entropy(post_measurement_state(rho, r))
    return (s_q - s_b) + (s_r - s_b)


def berta_bound(rho: np.ndarray, q: Observable, r: Observable) -> float:
    """log2(1/c) + S(A|B)."""
    return math.log2(1.0 / complementarity(q, r)) + conditional_entropy(rho)


def adabi_bound(rho: np.ndarray, q: Observable, r: Observable) -> tuple[float, float]:
    """Tightened bound berta + max(0, delta); returns (bound, delta)."""
    delta = mutual_information(rho) - holevo(rho, q) - holevo(rho, r)
    return berta_bound(rho, q, r) + max(0.0, delta), delta


@dataclass(frozen=True)
class BoundsRecord:
    """Full information ledger for one time point of a sweep (all values in bits)."""

    t: float
    amplitude: float
    u_left: float
    berta: float
    adabi: float
    delta: float
    holevo_q: float
    holevo_r: float
    mutual_info: float
    cond_entropy: float


def bounds_record(
    rho: np.ndarray,
    q: Observable,
    r: Observable,
    t: float = 0.0,
    amplitude: float = 1.0,
) -> BoundsRecord:
    """Compute every BoundsRecord field, sharing the spectral decompositions.

    Equivalent to calling the individual operations; fused because sweeps
    evaluate this for thousands of time points.
    """
    rho = np.asarray(rho, dtype=complex)
    s_a = von_neumann_entropy(partial_trace(rho, "A"))
    s_b = von_neumann_entropy(partial_trace(rho, "B"))
    s_ab = von_neumann_entropy(rho)

    def measured(obs: Observable) -> tuple[float, float]:
        subs = [m @ rho @ m for m in obs.full_projectors()]
        s_post = von_neumann_entropy(subs[0] + subs[1])
        hol = s_b
        for sub in subs:
            p = float(sub.trace().real)
            if p <= ZERO_PROBABILITY_TOL:
                continue
            evals = eigenvalues_hermitian(partial_trace(sub, "B"))
            hol -= p * _entropy_rescaled(evals, p)
        return s_post, hol

    s_post_q, hol_q = measured(q)
    s_post_r, hol_r = measured(r)
    mi = s_a + s_b - s_ab
    ce = s_ab - s_b
    delta = mi - hol_q - hol_r
    berta = math.log2(1.0 / complementarity(q, r)) + ce
    return BoundsRecord(
        t=float(t),
        amplitude=float(amplitude),
        u_left=(s_post_q - s_b) + (s_post_r - s_b),
        berta=berta,
        adabi=berta + max(0.0, delta),
        delta=delta,
        holevo_q=hol_q,
        holevo_r=hol_r,
        mutual_info=mi,
        cond_entropy=ce,
    )


# ---------------------------------------------------------------------------
# Closed-form audit targets.
#
# The expressions below are the tabulated shortcut formulas for the two
# reference families, evaluated exactly as written.  The pipeline above
# never uses them; discrepancy_report compares them against the
# definition-based route and flags the ones that disagree.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormTerms:
    """Shorthand quantities appearing in the closed forms at amplitude c."""

    eta: float  # sqrt(1 - c^2 + c^4), in [sqrt(3)/2, 1] for |c| <= 1
    alpha_plus: float  # (2 + c^2) / 2
    alpha_minus: float  # (2 - c^2) / 2
    theta: float  # sqrt(1 - c^2 + c^4) / 4


def closed_form_terms(c: float) -> ClosedFormTerms:
    c2 = c * c
    eta = math.sqrt(1.0 - c2 + c2 * c2)
    return ClosedFormTerms(
        eta=eta,
        alpha_plus=0.5 * (2.0 + c2),
        alpha_minus=0.5 * (2.0 - c2),
        theta=0.25 * eta,
    )


def _wlog2(w: float, x: float) -> float:
    # w * log2(x) with the w -> 0+ limit (0) applied for w <= 0
    if w <= 0.0:
        return 0.0
    return w * math.log2(x)


def closed_form_max_ent_entropy_x(c: float) -> float:
    eta = closed_form_terms(c).eta
    return -_wlog2(0.5 * (1.0 - eta), 0.25 * (1.0 - eta)) - _wlog2(
        0.5 * (1.0 + eta), 0.25 * (1.0 + eta)
    )


def closed_form_max_ent_entropy_z(c: float) -> float:
    c2 = c * c
    return 0.5 - _wlog2(0.5 * c2, 0.5 * c2) - _wlog2(0.5 * (1.0 - c2), 0.5 * (1.0 - c2))


def closed_form_max_ent_lhs(c: float) -> float:
    """Tabulated measured-uncertainty sum for the maximally entangled family.

    Subtracts the memory entropy once instead of twice, so it exceeds the
    definition-based sum by exactly S_bin(c^2/2); retained as an audit target.
    """
    c2 = c * c
    eta = closed_form_terms(c).eta
    return (
        0.5
        - _wlog2(0.5 * (1.0 - eta), 0.25 * (1.0 - eta))
        - _wlog2(0.5 * (1.0 + eta), 0.25 * (1.0 + eta))
        - _wlog2(0.5 * c2, 0.5 * c2)
        - _wlog2(0.5 * (1.0 - c2), 0.5 * (1.0 - c2))
        - binary_entropy(0.5 * c2)
    )


def closed_form_max_ent_delta(c: float) -> float:
    c2 = c * c
    eta = closed_form_terms(c).eta
    return (
        -0.5
        - _wlog2(0.5 * (1.0 - eta), 0.25 * (1.0 - eta))
        - _wlog2(0.5 * (1.0 + eta), 0.25 * (1.0 + eta))
        - _wlog2(0.5 * c2, 0.5 * c2)
        - _wlog2(0.5 * (1.0 - c2), 0.5 * (1.0 - c2))
        - binary_entropy(0.5 * (1.0 - c2))
        - binary_entropy(0.5 * c2)
    )


def closed_form_max_ent_bound(c: float) -> float:
    """Tabulated tightened bound, using the same family's closed-form delta."""
    c2 = c * c
    return (
        1.0
        + binary_entropy(0.5 * (1.0 - c2))
        - binary_entropy(0.5 * c2)
        + max(0.0, closed_form_max_ent_delta(c))
    )


def closed_form_bell_entropy_x(c: float) -> float:
    c2 = c * c
    return -_wlog2(0.5 * c2, 0.25 * c2) - _wlog2(0.5 * (2.0 - c2), 0.25 * (2.0 - c2))


def closed_form_bell_entropy_z(c: float) -> float:
    c2 = c * c
    return (
        -_wlog2(c2 / 8.0, c2 / 8.0)
        - _wlog2(3.0 * c2 / 8.0, 3.0 * c2 / 8.0)
        - _wlog2((4.0 - 3.0 * c2) / 8.0, (4.0 - 3.0 * c2) / 8.0)
        - _wlog2((4.0 - c2) / 8.0, (4.0 - c2) / 8.0)
    )


def closed_form_bell_lhs(c: float) -> float:
    """Tabulated measured-uncertainty sum for the Bell-diagonal (p=1/2) family.

    Omits the (4 - 3c^2)/8 spectral term that its own post-measurement
    entropy contains; retained as an audit target.
    """
    c2 = c * c
    return (
        closed_form_bell_entropy_x(c)
        - _wlog2(c2 / 8.0, c2 / 8.0)
        - _wlog2(3.0 * c2 / 8.0, 3.0 * c2 / 8.0)
        - _wlog2((4.0 - c2) / 8.0, (4.0 - c2) / 8.0)
        - 2.0 * binary_entropy(0.5 * c2)
    )


def _bell_alpha_theta_sum(c: float) -> float:
    terms = closed_form_terms(c)
    total = 0.0
    for a in (terms.alpha_minus, terms.alpha_plus):
        for sign in (-1.0, 1.0):
            x = a + sign * terms.theta
            total += _wlog2(x, x)
    return total


def closed_form_bell_delta(c: float) -> float:
    """Tabulated information gap for the Bell-diagonal family.

    Its alpha +/- theta arguments exceed 1 at full amplitude, so they cannot
    be eigenvalue probabilities; retained as an audit target.
    """
    return (
        _bell_alpha_theta_sum(c)
        - binary_entropy(0.5 * c * c)
        + closed_form_bell_entropy_z(c)
        + closed_form_bell_entropy_x(c)
    )


def closed_form_bell_bound(c: float) -> float:
    """Tabulated tightened bound, using the same family's closed-form delta."""
    return (
        1.0
        - _bell_alpha_theta_sum(c)
        + max(0.0, closed_form_bell_delta(c))
        - binary_entropy(0.5 * c * c)
    )


@dataclass(frozen=True)
class FormulaComparison:
    name: str
    closed_form: float
    definition: float
    deviation: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "deviation", abs(self.closed_form - self.definition))


def closed_form_report(amplitude_c: float, p: float = 0.5) -> list[FormulaComparison]:
    """Evaluate every closed form and its definition-based counterpart at one amplitude.

    The maximally entangled rows are p-independent.  The Bell-diagonal
    closed forms assume the p = 1/2 preparation; the definition route uses
    the given p, so deviations for other p mix formula error with
    preparation mismatch.  Discrepancies are data, not errors.
    """
    c = float(amplitude_c)
    if abs(c) > 1.0:
        raise ValueError(f"amplitude |{c}| > 1 out of range")
    x, z = pauli_x(), pauli_z()
    rows: list[FormulaComparison] = []
    for prefix, initial in (("max_ent", max_entangled_initial()), ("bell", bell_diagonal_initial(p))):
        rho = apply_memory_decay(initial, c)
        rec = bounds_record(rho, x, z, amplitude=c)
        closed = {
            "max_ent": (
                closed_form_max_ent_entropy_x,
                closed_form_max_ent_entropy_z,
                closed_form_max_ent_lhs,
                closed_form_max_ent_bound,
                closed_form_max_ent_delta,
            ),
            "bell": (
                closed_form_bell_entropy_x,
                closed_form_bell_entropy_z,
                closed_form_bell_lhs,
                closed_form_bell_bound,
                closed_form_bell_delta,
            ),
        }[prefix]
        s_post_x = von_neumann_entropy(post_measurement_state(rho, x))
        s_post_z = von_neumann_entropy(post_measurement_state(rho, z))
        defs = (s_post_x, s_post_z, rec.u_left, rec.adabi, rec.delta)
        for fn, name, value in zip(
            closed,
            ("entropy_x", "entropy_z", "lhs", "bound", "delta"),
            defs,
        ):
            rows.append(FormulaComparison(f"{prefix}_{name}", fn(c), value))
    return rows
