"""Echo step removing the residual sum of Z_i from an extracted Hamiltonian."""

from dataclasses import dataclass
from fractions import Fraction

import torch

from compiler.sequence import Evolution
from pauli import AxisRotation, PauliSum, conjugate_sequence, render
from simulate.dense import DTYPE, ops_unitary, to_matrix

PI = Fraction(1)


@dataclass
class CleanupResult:
    steps: list
    effective: PauliSum  # first order, per unit time
    removed: PauliSum
    non_cancellable: PauliSum

    def as_dict(self):
        return {
            'steps': [str(s) if not isinstance(s, Evolution)
                      else 'evolve({})'.format(s.time) for s in self.steps],
            'effective': render(self.effective),
            'removed': render(self.removed),
            'non_cancellable': render(self.non_cancellable),
        }


def flip_pulses(n_qubits, axis='x', angle=PI):
    return [AxisRotation(q, axis, angle) for q in range(n_qubits)]


def _is_single_z(p):
    return p.weight == 1 and p.letter(p.support()[0]) == 'Z'


def z_echo_cleanup(h_eff, axis='x', tau=1.0):
    """
    exp(-i tau H), pi about axis on every qubit, exp(-i tau H), then -pi.
    The average keeps the part of H that commutes with the flips; removed
    terms other than single-qubit Z are reported as non-cancellable.
    """
    if axis != 'x':
        raise ValueError("only the x-axis echo is supported, got {!r}"
                         .format(axis))
    n = h_eff.n_qubits
    flipped = conjugate_sequence(h_eff, flip_pulses(n, axis))
    effective = ((h_eff + flipped) / 2).chop()
    removed = (h_eff - effective).chop()
    wanted = PauliSum.from_strings(n, [(p, c) for p, c in removed
                                       if not _is_single_z(p)])
    steps = [AxisRotation(q, axis, -PI) for q in range(n)] + \
        [Evolution(h_eff, tau)] + flip_pulses(n, axis) + [Evolution(h_eff, tau)]
    return CleanupResult(steps=steps, effective=effective, removed=removed,
                         non_cancellable=wanted)


def echo_unitary(h_eff, tau, axis='x'):
    """exp(-i tau H) R exp(-i tau H) R^dagger with R the pi flip."""
    n = h_eff.n_qubits
    r = ops_unitary(flip_pulses(n, axis), n)
    u = torch.linalg.matrix_exp(-1j * tau * to_matrix(h_eff)).to(DTYPE)
    return u @ r @ u @ r.conj().T
