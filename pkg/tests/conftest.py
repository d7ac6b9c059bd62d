from __future__ import annotations

import numpy as np
import pytest

from eulb.sweep import figure_preset, run_sweep


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20250810)


def random_density_matrix(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / rho.trace().real


def random_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture(scope="session")
def preset_sweeps():
    """All four preset sweeps, computed once for the whole session."""
    return {fig: run_sweep(figure_preset(fig)) for fig in (2, 3, 4, 5)}
