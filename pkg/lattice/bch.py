"""
Average Hamiltonian of the four-frame cycle.

U = (exp(-i tau A) exp(-i tau B) exp(-i tau B') exp(-i tau A'))^n. With
H_a = (A + B)/2, H_b = (A - B)/2, H_a' = (A' + B')/2, H_b' = (A' - B')/2 the
exponent is -i[2 n tau (H_a + H_a') + n tau^2 ((1/i)[H_b, H_a]
- (1/i)[H_b', H_a'] + w (1/i)[H_a, H_a'])] to third order, w = 2.
"""

import numpy as np
import scipy.linalg
import torch

from pauli import commutator
from simulate.dense import DTYPE, hs_norm_dense, to_matrix

CROSS_WEIGHT = 2.0


def bch_first_order(hA, hB, hBp, hAp, tau, n=1, cross_weight=CROSS_WEIGHT):
    """(effective, error_estimate), both over the whole n-cycle run."""
    assert n >= 1 and tau > 0
    ha, hb = (hA + hB) / 2, (hA - hB) / 2
    hap, hbp = (hAp + hBp) / 2, (hAp - hBp) / 2
    effective = (ha + hap) * (2 * n * tau)
    error = (commutator(hb, ha) - commutator(hbp, hap) +
             commutator(ha, hap) * cross_weight) * (n * tau ** 2)
    return effective.chop(), error.chop()


def cycle_unitary(frames, tau, n=1):
    """Dense U for frame Hamiltonians in A, B, B', A' order; A' acts first."""
    u = torch.eye(1 << frames[0].n_qubits, dtype=DTYPE)
    for h in frames:
        u = u @ torch.linalg.matrix_exp(-1j * tau * to_matrix(h))
    return torch.linalg.matrix_power(u, n)


def exact_effective(frames, tau, n=1):
    """i log U on the principal branch, as a dense matrix."""
    u = cycle_unitary(frames, tau, n).numpy()
    h = 1j * scipy.linalg.logm(u)
    return torch.from_numpy(np.asarray(h, dtype=np.complex128))


def oracle_deviation(frames, tau, n=1, cross_weight=CROSS_WEIGHT):
    """
    Norms over the whole run: exact minus ideal, and exact minus
    (ideal + error estimate).
    """
    effective, error = bch_first_order(*frames, tau=tau, n=n,
                                       cross_weight=cross_weight)
    exact = exact_effective(frames, tau, n)
    ideal = to_matrix(effective)
    return {
        'exact_minus_ideal': hs_norm_dense(exact - ideal),
        'exact_minus_second_order': hs_norm_dense(exact - ideal -
                                                  to_matrix(error)),
        'error_estimate': error.norm(),
    }


def deviation_vs_repetitions(frames, t0, ns):
    """Exact-minus-ideal norm at fixed total frame time t0 = n * tau."""
    return [oracle_deviation(frames, t0 / n, n)['exact_minus_ideal']
            for n in ns]


def deviation_vs_tau(frames, taus, n=1):
    return [oracle_deviation(frames, tau, n)['exact_minus_ideal']
            for tau in taus]
