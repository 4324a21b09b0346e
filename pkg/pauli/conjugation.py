from pauli.angles import cos_sin_double
from pauli.errors import DimensionError, MalformedOpError
from pauli.paulisum import PauliSum, fold_phase
from pauli.string import commutes, multiply


def _same_size(a, b):
    if a.n_qubits != b.n_qubits:
        raise DimensionError("{} vs {} qubits".format(a.n_qubits, b.n_qubits))


def conjugate_evolution(h, p, theta):
    """exp(-i theta P) h exp(i theta P), term by term."""
    _same_size(h, p)
    if p.phase != 0:
        raise MalformedOpError("generator {} is not phase canonical".format(p))
    c, s = cos_sin_double(theta)
    pairs = []
    for q, coeff in h:
        if commutes(p, q):
            pairs.append((q, coeff))
            continue
        if c:
            pairs.append((q, c * coeff))
        if s:
            # i Q P is Hermitian for anticommuting Q, P
            iqp = multiply(q, p)
            pairs.append((iqp.with_phase(iqp.phase + 1), s * coeff))
    return PauliSum.from_strings(h.n_qubits, pairs)


def conjugate_elementary(h, op):
    for p, theta in op.evolutions(h.n_qubits):
        h = conjugate_evolution(h, p, theta)
    return h


def conjugate_sequence(h, ops):
    """Apply ops in order: the first op is the innermost conjugation."""
    for op in ops:
        h = conjugate_elementary(h, op)
    return h


def commutator(h1, h2):
    """(1/i)[h1, h2], Hermitian."""
    _same_size(h1, h2)
    pairs = []
    for p, a in h1:
        for q, b in h2:
            if commutes(p, q):
                continue
            pq = multiply(p, q)
            pairs.append((pq.with_phase(pq.phase - 1), 2 * a * b))
    return PauliSum.from_strings(h1.n_qubits, pairs)


def hs_norm(h):
    """[Tr(h^dagger h)/d]^(1/2); Pauli strings are orthonormal under Tr/d."""
    return h.norm()
