"""
Elementary pulse operations.

Conjugating by an operation means h -> U h U^dagger with U = exp(-i theta P)
for every Pauli evolution (P, theta) the operation expands to.
"""

from dataclasses import dataclass
from fractions import Fraction

from pauli.angles import as_angle, format_angle
from pauli.errors import MalformedOpError
from pauli.string import PauliString

AXES = ('x', 'y', 'z')
ROTATION_ANGLES = (Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1))
QUARTER = Fraction(1, 4)


def _check_qubit(q, n_qubits):
    if not 0 <= q < n_qubits:
        raise MalformedOpError("qubit {} outside a {}-qubit register".format(
            q + 1, n_qubits))


@dataclass(frozen=True)
class AxisRotation:
    """Rotation exp(-i angle sigma_axis / 2) on one qubit; angle in units of pi."""
    qubit: int
    axis: str
    angle: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'angle', as_angle(self.angle))
        if self.axis not in AXES:
            raise MalformedOpError("unknown axis {!r}".format(self.axis))
        if self.angle not in ROTATION_ANGLES:
            raise MalformedOpError("rotation angle {} not in +-pi/2, +-pi".format(
                format_angle(self.angle)))

    @property
    def qubits(self):
        return (self.qubit,)

    def inverse(self):
        return AxisRotation(self.qubit, self.axis, -self.angle)

    def evolutions(self, n_qubits):
        _check_qubit(self.qubit, n_qubits)
        p = PauliString.single(n_qubits, self.qubit, self.axis.upper())
        return ((p, self.angle / 2),)

    def __str__(self):
        return 'R{}({}){}'.format(self.axis, format_angle(self.angle),
                                  self.qubit + 1)


@dataclass(frozen=True)
class PauliEvolution:
    pauli: PauliString
    angle: object

    def __post_init__(self):
        object.__setattr__(self, 'angle', as_angle(self.angle))
        if self.pauli.phase != 0:
            raise MalformedOpError("evolution generator must have phase +1")

    @property
    def qubits(self):
        return self.pauli.support()

    def inverse(self):
        return PauliEvolution(self.pauli, -self.angle)

    def evolutions(self, n_qubits):
        if self.pauli.n_qubits != n_qubits:
            raise MalformedOpError("generator on {} qubits, register {}".format(
                self.pauli.n_qubits, n_qubits))
        return ((self.pauli, self.angle),)

    def __str__(self):
        return 'exp[-i {} {}]'.format(format_angle(self.angle), self.pauli)


@dataclass(frozen=True)
class _Edge:
    i: int
    j: int
    angle: object = QUARTER

    def __post_init__(self):
        object.__setattr__(self, 'angle', as_angle(self.angle))
        if self.i == self.j:
            raise MalformedOpError("edge needs two distinct qubits")

    @property
    def qubits(self):
        return (self.i, self.j)

    def inverse(self):
        return type(self)(self.i, self.j, -self.angle)

    def _pair(self, n_qubits, letter):
        _check_qubit(self.i, n_qubits)
        _check_qubit(self.j, n_qubits)
        return PauliString.from_letters(n_qubits, {self.i: letter,
                                                   self.j: letter})


@dataclass(frozen=True)
class XYEdge(_Edge):
    """exp(-i angle X_iX_j) exp(-i angle Y_iY_j); the factors commute."""

    def evolutions(self, n_qubits):
        return ((self._pair(n_qubits, 'X'), self.angle),
                (self._pair(n_qubits, 'Y'), self.angle))

    def __str__(self):
        return 'XY({},{})[{}]'.format(self.i + 1, self.j + 1,
                                      format_angle(self.angle))


@dataclass(frozen=True)
class IsingEdge(_Edge):

    def evolutions(self, n_qubits):
        return ((self._pair(n_qubits, 'Z'), self.angle),)

    def __str__(self):
        return 'ZZ({},{})[{}]'.format(self.i + 1, self.j + 1,
                                      format_angle(self.angle))

