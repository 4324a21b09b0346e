class DimensionError(ValueError):
    """Operands live on different numbers of qubits."""


class PhaseError(ValueError):
    """A string carries a phase that is not allowed where it is used."""


class MalformedOpError(ValueError):
    """An elementary operation is not well formed for the register."""


class PauliFormatError(ValueError):
    """Text could not be read as a Pauli string or Pauli sum."""
