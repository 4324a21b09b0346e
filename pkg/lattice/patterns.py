"""
Toggling-frame patterns.

A pattern is four frames A, B, B', A'. Each frame is the lattice Hamiltonian
seen through a set of pi-pulses: a term picks up -1 for every flipped qubit
it touches. Pulses go about z on XY lattices and about y on Ising lattices, so
the single-qubit X terms and both coupling types obey that parity rule.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from pauli import AxisRotation, PauliSum, conjugate_sequence
from lattice.spec import (InvalidEdgeError, UnsupportedGeometryError,
                          build_lattice_hamiltonian)

FRAMES = ('A', 'B', "B'", "A'")
PI = Fraction(1)
PULSE_AXIS = {'XY': 'z', 'Ising': 'y'}


@dataclass(frozen=True)
class Frame:
    name: str
    flips: frozenset  # register indices receiving a pi-pulse
    signs: dict = field(hash=False)  # term key -> +1 | -1


@dataclass(frozen=True)
class TogglingPattern:
    name: str
    frames: tuple
    pulse_axis: str

    def frame(self, name):
        for f in self.frames:
            if f.name == name:
                return f
        raise KeyError(name)

    def hamiltonians(self, spec):
        """Frame Hamiltonians in A, B, B', A' order."""
        return [frame_hamiltonian(spec, f) for f in self.frames]

    def ideal(self, spec):
        """First-order effective Hamiltonian per unit n*tau."""
        total = PauliSum.zero(spec.n_qubits)
        for h in self.hamiltonians(spec):
            total = total + h
        return total

    def surviving_terms(self):
        """Term keys whose four frame signs do not cancel."""
        keys = self.frames[0].signs
        return sorted(k for k in keys
                      if sum(f.signs[k] for f in self.frames) != 0)


def _frame(spec, name, flips):
    flips = frozenset(flips)
    signs = {}
    for term in spec.terms():
        s = 1
        for q in term.qubits:
            if q in flips:
                s = -s
        signs[term.key] = s
    return Frame(name, flips, signs)


def frame_hamiltonian(spec, frame):
    total = PauliSum.zero(spec.n_qubits)
    for term in spec.terms():
        total = total + spec.term_sum(term, frame.signs[term.key])
    return total


def frame_pulses(spec, frame, axis):
    return [AxisRotation(q, axis, PI) for q in sorted(frame.flips)]


def check_realizable(spec, pattern):
    """Names of frames whose stored signs the pi-pulses do not reproduce."""
    bare = build_lattice_hamiltonian(spec)
    bad = []
    for frame in pattern.frames:
        got = conjugate_sequence(bare, frame_pulses(spec, frame,
                                                    pattern.pulse_axis))
        if not got.isclose(frame_hamiltonian(spec, frame)):
            bad.append(frame.name)
    return bad


def _qubits(spec, offset_parity, index_rule):
    return [spec.qubit(k, i)
            for k in range(1, spec.n_logical + 1) if (k - 1) % 2 == offset_parity
            for i in range(1, spec.n_phys + 1) if index_rule(i)]


def pattern_select_H0(spec):
    """Frames whose average keeps 2 * sum of the single-qubit parts."""
    if spec.n_phys % 2 == 0:
        raise UnsupportedGeometryError(
            "H0 selection needs an odd number of qubits per array, got {}"
            .format(spec.n_phys))
    odd = lambda i: i % 2 == 1
    even = lambda i: i % 2 == 0
    flips = {
        'A': _qubits(spec, 0, odd),
        'B': _qubits(spec, 1, odd),
        "B'": _qubits(spec, 0, even),
        "A'": _qubits(spec, 1, even),
    }
    return TogglingPattern(
        name='H0',
        frames=tuple(_frame(spec, f, flips[f]) for f in FRAMES),
        pulse_axis=PULSE_AXIS[spec.coupling_kind])


def edge_flip_set(e, n_phys):
    """1-based indices flipped in frame B on even-offset arrays."""
    return {i for i in range(1, n_phys + 1)
            if (i <= e and i % 2 == e % 2) or (i > e and i % 2 != e % 2)}


def pattern_select_edge(spec, edge):
    """Frames whose average keeps 4 * the (e, e+1) coupling of every array."""
    e, f = edge
    if f != e + 1 or not 1 <= e < spec.n_phys:
        raise InvalidEdgeError("edge {} is not a neighbouring pair in 1..{}"
                               .format(edge, spec.n_phys))
    inside = edge_flip_set(e, spec.n_phys)
    outside = lambda i: i not in inside
    flips = {
        'A': [],
        'B': _qubits(spec, 0, inside.__contains__) + _qubits(spec, 1, outside),
        "B'": _qubits(spec, 0, outside) + _qubits(spec, 1, inside.__contains__),
        "A'": range(spec.n_qubits),
    }
    return TogglingPattern(
        name='edge({},{})'.format(e, f),
        frames=tuple(_frame(spec, name, flips[name]) for name in FRAMES),
        pulse_axis=PULSE_AXIS[spec.coupling_kind])


def select_pattern(spec, name, edge=None):
    if name == 'H0':
        return pattern_select_H0(spec)
    if name == 'edge':
        return pattern_select_edge(spec, edge or (2, 3))
    raise ValueError("unknown pattern {!r}".format(name))
