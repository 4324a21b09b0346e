from pauli.errors import (DimensionError, MalformedOpError, PauliFormatError,
                          PhaseError)
from pauli.string import PauliString, commutes, multiply
from pauli.paulisum import PauliSum
from pauli.ops import AxisRotation, IsingEdge, PauliEvolution, XYEdge
from pauli.conjugation import (commutator, conjugate_elementary,
                               conjugate_evolution, conjugate_sequence,
                               hs_norm)
from pauli.text import parse_string, parse_sum, render, render_string
