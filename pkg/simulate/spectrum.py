import math
from dataclasses import dataclass

import torch

from simulate.dense import DTYPE, apply_pauli, to_matrix

EIGEN_TOL = 1e-9
EIGEN_CHECK_TOL = 1e-9


@dataclass
class GroundSpace:
    energy: float
    dimension: int
    basis: torch.Tensor  # columns span the ground space

    def projector(self):
        return self.basis @ self.basis.conj().T

    def population(self, state):
        """<s|P|s> for the ground-space projector P."""
        amps = self.basis.conj().T @ state
        return float(torch.sum(amps.abs() ** 2).item())


def ground_space(h):
    """Lowest eigenvalue of h with its degenerate eigenspace."""
    evals, evecs = torch.linalg.eigh(to_matrix(h))
    width = float(evals[-1] - evals[0])
    tol = EIGEN_TOL * max(1.0, width)
    lowest = float(evals[0])
    mask = (evals - lowest).abs() <= tol
    dim = int(mask.sum().item())
    return GroundSpace(energy=lowest, dimension=dim, basis=evecs[:, :dim])


def expectation(state, p):
    return float(torch.vdot(state, apply_pauli(state, p)).real.item())


def stabilizer_eigencheck(state, code, atol=EIGEN_CHECK_TOL):
    """G|s> == |s> per generator."""
    return [torch.linalg.norm(apply_pauli(state, g) - state).item() < atol
            for g in code.generators]


def principal_angle(a, b):
    """Largest principal angle between the column spans of a and b."""
    qa, _ = torch.linalg.qr(a.to(DTYPE))
    qb, _ = torch.linalg.qr(b.to(DTYPE))
    if qa.shape[1] != qb.shape[1]:
        return float('inf')
    # sine of the largest angle
    residual = qb - qa @ (qa.conj().T @ qb)
    sin = min(1.0, float(torch.linalg.svdvals(residual).max().item()))
    return math.asin(sin)


def same_span(a, b, atol=1e-8):
    return principal_angle(a, b) < atol
