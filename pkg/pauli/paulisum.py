import math
from types import MappingProxyType

from pauli.errors import DimensionError, PhaseError
from pauli.string import PauliString


def fold_phase(p, coeff):
    """Return (canonical string, real coefficient) for coeff * p."""
    if p.phase == 0:
        return p.canonical(), coeff
    if p.phase == 2:
        return p.canonical(), -coeff
    raise PhaseError("imaginary phase on {} in a Hermitian sum".format(p))


class PauliSum(object):
    """
    Hermitian operator as real weights on phase-canonical Pauli strings.

    Terms are keyed by (x, z) masks; exact zeros are never stored. Instances
    are immutable, arithmetic returns new sums.
    """

    __slots__ = ('n_qubits', '_terms')

    def __init__(self, n_qubits, terms=None):
        assert n_qubits > 0
        self.n_qubits = n_qubits
        acc = {}
        for key, c in (terms or {}).items():
            acc[key] = acc.get(key, 0.0) + c
        self._terms = {k: float(c) for k, c in acc.items() if c != 0}

    @classmethod
    def from_strings(cls, n_qubits, pairs):
        """pairs: iterable of (PauliString, real coefficient)."""
        acc = {}
        for p, c in pairs:
            if p.n_qubits != n_qubits:
                raise DimensionError("{} vs {} qubits".format(
                    p.n_qubits, n_qubits))
            p, c = fold_phase(p, c)
            acc[p.key] = acc.get(p.key, 0.0) + c
        return cls(n_qubits, acc)

    @classmethod
    def zero(cls, n_qubits):
        return cls(n_qubits)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def strings(self):
        return [PauliString(self.n_qubits, x, z) for x, z in self._terms]

    def coefficient(self, p):
        return self._terms.get(p.key, 0.0)

    def is_zero(self):
        return not self._terms

    def support(self):
        mask = 0
        for x, z in self._terms:
            mask |= x | z
        return tuple(q for q in range(self.n_qubits) if (mask >> q) & 1)

    def __iter__(self):
        for (x, z), c in self._terms.items():
            yield PauliString(self.n_qubits, x, z), c

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if self.n_qubits != other.n_qubits:
            raise DimensionError("{} vs {} qubits".format(
                self.n_qubits, other.n_qubits))

    def __add__(self, other):
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0.0) + c
        return PauliSum(self.n_qubits, acc)

    def __neg__(self):
        return PauliSum(self.n_qubits, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return PauliSum(self.n_qubits,
                        {k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1.0 / scalar)

    def __eq__(self, other):
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n_qubits == other.n_qubits and self._terms == other._terms

    def __hash__(self):
        return hash((self.n_qubits, frozenset(self._terms.items())))

    def isclose(self, other, atol=1e-12):
        self._check(other)
        keys = set(self._terms) | set(other._terms)
        return all(
            abs(self._terms.get(k, 0.0) - other._terms.get(k, 0.0)) <= atol
            for k in keys)

    def chop(self, atol=1e-12):
        return PauliSum(
            self.n_qubits,
            {k: c for k, c in self._terms.items() if abs(c) > atol})

    def norm(self):
        return math.sqrt(sum(c * c for c in self._terms.values()))

    def __repr__(self):
        from pauli.text import render
        return 'PauliSum({})'.format(render(self))
