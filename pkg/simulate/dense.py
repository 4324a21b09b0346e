"""
Dense oracle over 2**n amplitudes, n <= MAX_QUBITS.

Qubit 1 (index 0) is the most significant bit of a basis index, so |00010>
on five qubits is index 2. Everything is complex128.
"""

import math

import torch

from pauli.angles import radians
from pauli.ops import AxisRotation
from pauli.string import PauliString, commutes, popcount

DTYPE = torch.complex128
MAX_QUBITS = 10

PAULI = {
    'I': torch.tensor([[1, 0], [0, 1]], dtype=DTYPE),
    'X': torch.tensor([[0, 1], [1, 0]], dtype=DTYPE),
    'Y': torch.tensor([[0, -1j], [1j, 0]], dtype=DTYPE),
    'Z': torch.tensor([[1, 0], [0, -1]], dtype=DTYPE),
}


class OperatorSizeError(ValueError):
    pass


def _check_size(n_qubits):
    if n_qubits > MAX_QUBITS:
        raise OperatorSizeError("{} qubits exceeds the dense limit {}".format(
            n_qubits, MAX_QUBITS))


def zero_state(n_qubits):
    _check_size(n_qubits)
    state = torch.zeros(1 << n_qubits, dtype=DTYPE)
    state[0] = 1
    return state


def basis_state(bits):
    """bits: '0110100' with qubit 1 first."""
    _check_size(len(bits))
    state = torch.zeros(1 << len(bits), dtype=DTYPE)
    state[int(bits, 2)] = 1
    return state


def string_matrix(p):
    _check_size(p.n_qubits)
    m = torch.ones((1, 1), dtype=DTYPE)
    for q in range(p.n_qubits):
        m = torch.kron(m, PAULI[p.letter(q)])
    return (1j ** p.phase) * m


def to_matrix(h):
    _check_size(h.n_qubits)
    dim = 1 << h.n_qubits
    m = torch.zeros((dim, dim), dtype=DTYPE)
    for p, c in h:
        m += c * string_matrix(p)
    return m


def _index_masks(p):
    n = p.n_qubits
    x = sum(1 << (n - 1 - q) for q in range(n) if (p.x >> q) & 1)
    z = sum(1 << (n - 1 - q) for q in range(n) if (p.z >> q) & 1)
    return x, z


def apply_pauli(state, p):
    """P|s> without building a matrix: P|b> = i^(phase+#Y) (-1)^(b.z) |b^x>."""
    n = p.n_qubits
    xm, zm = _index_masks(p)
    idx = torch.arange(1 << n)
    masked = idx & zm
    parity = torch.zeros_like(idx)
    for k in range(n):
        parity ^= (masked >> k) & 1
    signs = (1 - 2 * parity).to(DTYPE)
    factor = 1j ** ((p.phase + popcount(p.x & p.z)) % 4)
    out = torch.empty_like(state)
    out[idx ^ xm] = factor * signs * state
    return out


def evolve_pauli_exp(state, p, theta):
    """exp(-i theta P)|s> = cos(theta)|s> - i sin(theta) P|s>."""
    assert p.phase == 0
    t = radians(theta)
    return math.cos(t) * state - 1j * math.sin(t) * apply_pauli(state, p)


def apply_op(state, op, n_qubits, delta=0.0):
    """Apply the unitary of an elementary op; delta adds to a rotation angle."""
    if isinstance(op, AxisRotation):
        p = PauliString.single(n_qubits, op.qubit, op.axis.upper())
        return evolve_pauli_exp(state, p, (radians(op.angle) + delta) / 2)
    for p, theta in op.evolutions(n_qubits):
        state = evolve_pauli_exp(state, p, theta)
    return state


def pauli_exp_matrix(p, theta):
    dim = 1 << p.n_qubits
    t = radians(theta)
    return (math.cos(t) * torch.eye(dim, dtype=DTYPE) -
            1j * math.sin(t) * string_matrix(p))


def ops_unitary(ops, n_qubits):
    """W such that conjugating by ops in order equals W h W^dagger."""
    _check_size(n_qubits)
    w = torch.eye(1 << n_qubits, dtype=DTYPE)
    for op in ops:
        for p, theta in op.evolutions(n_qubits):
            w = pauli_exp_matrix(p, theta) @ w
    return w


def dense_conjugate(h, ops):
    w = ops_unitary(ops, h.n_qubits)
    return w @ to_matrix(h) @ w.conj().T


def evolve_hamiltonian(state, h, t):
    """exp(-i t h)|s>; termwise when all terms commute, matrix_exp otherwise."""
    strings = list(h)
    if all(commutes(p, q) for p, _ in strings for q, _ in strings):
        for p, c in strings:
            state = evolve_pauli_exp(state, p, c * t)
        return state
    return torch.linalg.matrix_exp(-1j * t * to_matrix(h)) @ state


def hs_norm_dense(m):
    dim = m.shape[0]
    return math.sqrt((torch.trace(m.conj().T @ m).real / dim).item())


def same_up_to_phase(a, b, atol=1e-10):
    overlap = torch.vdot(a, b)
    return abs(abs(overlap.item()) - 1.0) < atol and \
        abs(torch.linalg.norm(a).item() - 1.0) < atol
