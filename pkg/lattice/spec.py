"""
Lattice of 1D arrays of physical qubits.

Array k (1-based) holds qubits i = 1..n_phys; qubit (k, i) is register index
(k - 1) * n_phys + (i - 1). Intra-array couplings join (k, i) and (k, i + 1),
inter-array couplings join (k, i) and (k + 1, i). Strengths are angular
frequencies.
"""

import math
from dataclasses import dataclass, field

from pauli import PauliString, PauliSum

KINDS = ('XY', 'Ising')


class UnsupportedGeometryError(ValueError):
    pass


class InvalidEdgeError(ValueError):
    pass


@dataclass(frozen=True)
class Term:
    """One lattice term; ``key`` is ('omega'|'intra'|'inter', k, i)."""
    key: tuple
    qubits: tuple
    strength: float


@dataclass(frozen=True, eq=False)
class LatticeSpec:
    n_logical: int
    n_phys: int
    coupling_kind: str = 'XY'
    intra_J: dict = field(default_factory=dict)
    inter_J: dict = field(default_factory=dict)
    omega: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n_logical < 1 or self.n_phys < 2:
            raise UnsupportedGeometryError(
                "need at least one array of two qubits, got {}x{}".format(
                    self.n_logical, self.n_phys))
        if self.coupling_kind not in KINDS:
            raise UnsupportedGeometryError("unknown coupling {!r}".format(
                self.coupling_kind))
        checks = ((self.intra_J, self.n_logical, self.n_phys - 1),
                  (self.inter_J, self.n_logical - 1, self.n_phys),
                  (self.omega, self.n_logical, self.n_phys))
        for table, k_max, i_max in checks:
            for (k, i), value in table.items():
                if not (1 <= k <= k_max and 1 <= i <= i_max):
                    raise UnsupportedGeometryError(
                        "coupling at ({}, {}) outside the lattice".format(k, i))
                if not math.isfinite(value):
                    raise UnsupportedGeometryError(
                        "non-finite strength at ({}, {})".format(k, i))

    @classmethod
    def uniform(cls, n_logical, n_phys, coupling_kind='XY', J=1.0, omega=1.0,
                inter_J=None):
        inter_J = J if inter_J is None else inter_J
        return cls(
            n_logical=n_logical,
            n_phys=n_phys,
            coupling_kind=coupling_kind,
            intra_J={(k, i): J for k in range(1, n_logical + 1)
                     for i in range(1, n_phys)},
            inter_J={(k, i): inter_J for k in range(1, n_logical)
                     for i in range(1, n_phys + 1)},
            omega={(k, i): omega for k in range(1, n_logical + 1)
                   for i in range(1, n_phys + 1)},
        )

    @property
    def n_qubits(self):
        return self.n_logical * self.n_phys

    def qubit(self, k, i):
        return (k - 1) * self.n_phys + (i - 1)

    def terms(self):
        out = []
        for (k, i), w in sorted(self.omega.items()):
            out.append(Term(('omega', k, i), (self.qubit(k, i),), w))
        for (k, i), j in sorted(self.intra_J.items()):
            out.append(Term(('intra', k, i),
                            (self.qubit(k, i), self.qubit(k, i + 1)), j))
        for (k, i), j in sorted(self.inter_J.items()):
            out.append(Term(('inter', k, i),
                            (self.qubit(k, i), self.qubit(k + 1, i)), j))
        return [t for t in out if t.strength != 0]

    def term_sum(self, term, weight=1.0):
        """The PauliSum of one term, scaled by weight."""
        n = self.n_qubits
        c = weight * term.strength
        if len(term.qubits) == 1:
            return PauliSum.from_strings(n, [(PauliString.single(
                n, term.qubits[0], 'X'), c)])
        a, b = term.qubits
        letters = ('X', 'Y') if self.coupling_kind == 'XY' else ('Z',)
        return PauliSum.from_strings(n, [
            (PauliString.from_letters(n, {a: l, b: l}), c) for l in letters])

    def max_coupling(self):
        values = list(self.intra_J.values()) + list(self.inter_J.values())
        return max((abs(v) for v in values), default=0.0)

    def max_omega(self):
        return max((abs(v) for v in self.omega.values()), default=0.0)


def build_lattice_hamiltonian(spec):
    total = PauliSum.zero(spec.n_qubits)
    for term in spec.terms():
        total = total + spec.term_sum(term)
    return total


def single_qubit_part(spec, k=None):
    """H0 of array k, or of the whole lattice."""
    total = PauliSum.zero(spec.n_qubits)
    for term in spec.terms():
        if term.key[0] == 'omega' and (k is None or term.key[1] == k):
            total = total + spec.term_sum(term)
    return total


def edge_part(spec, edge):
    """Intra-array coupling on qubits (e, e+1) summed over the arrays."""
    e = edge[0]
    total = PauliSum.zero(spec.n_qubits)
    for term in spec.terms():
        if term.key[0] == 'intra' and term.key[2] == e:
            total = total + spec.term_sum(term)
    return total


def read_config(path):
    """``key = value`` lines; '#' starts a comment."""
    out = {}
    with open(path) as f:
        for number, raw in enumerate(f, 1):
            raw = raw.split('#', 1)[0].strip()
            if not raw:
                continue
            key, sep, value = raw.partition('=')
            if not sep:
                raise UnsupportedGeometryError(
                    "{}:{}: expected key = value".format(path, number))
            out[key.strip().lower()] = value.strip()
    return out


def spec_from_config(config):
    return LatticeSpec.uniform(
        n_logical=int(config.get('n_logical', 1)),
        n_phys=int(config.get('n_phys', 5)),
        coupling_kind=config.get('coupling_kind', 'XY'),
        J=float(config.get('j', 1.0)),
        omega=float(config.get('omega', 1.0)),
        inter_J=float(config['inter_j']) if 'inter_j' in config else None,
    )
