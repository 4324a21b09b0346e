from dataclasses import dataclass

from pauli.errors import DimensionError

LETTERS = {(0, 0): 'I', (1, 0): 'X', (1, 1): 'Y', (0, 1): 'Z'}
BITS = {v: k for k, v in LETTERS.items()}


def popcount(v):
    return bin(v).count('1')


@dataclass(frozen=True)
class PauliString:
    """
    n-qubit Pauli string in symplectic form.

    Bit q of x (z) is set when X (Z) acts on qubit q, qubits counted from 0.
    Both bits set means Y, so the operator is i**phase times the Hermitian
    tensor product of I/X/Y/Z. The phase convention is XZ = -iY.
    """
    n_qubits: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        assert self.n_qubits > 0
        limit = 1 << self.n_qubits
        assert 0 <= self.x < limit and 0 <= self.z < limit
        object.__setattr__(self, 'phase', self.phase % 4)

    @classmethod
    def identity(cls, n_qubits):
        return cls(n_qubits)

    @classmethod
    def from_letters(cls, n_qubits, letters, phase=0):
        """letters: mapping qubit -> 'X' | 'Y' | 'Z' | 'I'"""
        x = z = 0
        for q, letter in letters.items():
            if not 0 <= q < n_qubits:
                raise DimensionError(
                    "qubit {} outside a {}-qubit register".format(q, n_qubits))
            bx, bz = BITS[letter.upper()]
            x |= bx << q
            z |= bz << q
        return cls(n_qubits, x, z, phase)

    @classmethod
    def single(cls, n_qubits, qubit, letter):
        return cls.from_letters(n_qubits, {qubit: letter})

    @property
    def key(self):
        return self.x, self.z

    @property
    def is_identity(self):
        return self.x == 0 and self.z == 0

    @property
    def weight(self):
        return popcount(self.x | self.z)

    def letter(self, qubit):
        return LETTERS[((self.x >> qubit) & 1, (self.z >> qubit) & 1)]

    def support(self):
        mask = self.x | self.z
        return tuple(q for q in range(self.n_qubits) if (mask >> q) & 1)

    def letters(self):
        return {q: self.letter(q) for q in self.support()}

    def canonical(self):
        return PauliString(self.n_qubits, self.x, self.z)

    def with_phase(self, phase):
        return PauliString(self.n_qubits, self.x, self.z, phase)

    def __mul__(self, other):
        return multiply(self, other)

    def __str__(self):
        body = ''.join('{}{}'.format(self.letter(q), q + 1)
                       for q in self.support()) or 'I'
        return ['', 'i', '-', '-i'][self.phase] + body


def _same_size(p, q):
    if p.n_qubits != q.n_qubits:
        raise DimensionError("{} vs {} qubits".format(p.n_qubits, q.n_qubits))


def multiply(p, q):
    """Product pq with its exact phase."""
    _same_size(p, q)
    x, z = p.x ^ q.x, p.z ^ q.z
    # X^a Z^b form: Y = iXZ, and Z^b X^c = (-1)^(b.c) X^c Z^b
    phase = (p.phase + q.phase + popcount(p.x & p.z) + popcount(q.x & q.z) +
             2 * popcount(p.z & q.x) - popcount(x & z))
    return PauliString(p.n_qubits, x, z, phase)


def commutes(p, q):
    _same_size(p, q)
    return popcount((p.x & q.z) ^ (p.z & q.x)) % 2 == 0
