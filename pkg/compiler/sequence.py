"""
Pulse schedules.

Steps are kept in conjugation order: the first step is the innermost
conjugation applied to h_ini. Durations are (a, b) pairs counting tau_op and
tau_rot units.
"""

from dataclasses import dataclass

from pauli import AxisRotation, conjugate_sequence

ROTATION_GROUP = 'rotation_group'
INTERACTION_BLOCK = 'interaction_block'
EXTRACTION_BLOCK = 'extraction_block'

BLOCK_DURATION = (2, 9)
GROUP_DURATION = (0, 2)


@dataclass(frozen=True)
class ScheduledStep:
    kind: str
    ops: tuple
    duration: tuple
    label: str = ''


@dataclass(frozen=True)
class Evolution:
    """Free evolution exp(-i time h) under the initial Hamiltonian."""
    hamiltonian: object
    time: float


@dataclass(frozen=True)
class Segment:
    name: str
    h_ini: object
    target: object
    steps: tuple

    def ops(self):
        return [op for step in self.steps for op in step.ops]

    def conjugated(self):
        return conjugate_sequence(self.h_ini, self.ops())

    def timeline(self, time=1.0):
        """Physical order: S^dagger, evolution, S."""
        ops = self.ops()
        return ([op.inverse() for op in reversed(ops)] +
                [Evolution(self.h_ini, time)] + ops)


class PulseSequence(object):
    def __init__(self, code, kind, n_qubits, segments, report=None):
        self.code = code
        self.kind = kind
        self.n_qubits = n_qubits
        self.segments = tuple(segments)
        self.report = report

    @property
    def steps(self):
        return [step for seg in self.segments for step in seg.steps]

    def target(self):
        total = self.segments[0].target
        for seg in self.segments[1:]:
            total = total + seg.target
        return total

    def check(self):
        """Names of segments whose conjugated h_ini misses their target."""
        return [seg.name for seg in self.segments
                if seg.conjugated() != seg.target]

    def timeline(self, time=1.0):
        out = []
        for seg in self.segments:
            out.extend(seg.timeline(time))
        return out

    def rotations(self):
        return [op for op in self.timeline() if isinstance(op, AxisRotation)]

    def __len__(self):
        return len(self.steps)
