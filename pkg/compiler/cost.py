"""
Generation time bookkeeping.

Every interaction block costs 2 tau_op + 9 tau_rot (two quarter turns
bracketed by the pulses that select the edge), every rotation group
2 tau_rot unless it runs alongside a block, and the prologue its stated
number of tau_rot.
"""

import math
from dataclasses import dataclass

from pauli import AxisRotation
from compiler.sequence import (BLOCK_DURATION, EXTRACTION_BLOCK,
                               GROUP_DURATION, INTERACTION_BLOCK)
from codes.library import read_table

PULSES_PER_BLOCK = 9


@dataclass(frozen=True)
class CostModel:
    tau_op_ns: float = 6.25
    tau_rot_ns: float = 1.0

    def __post_init__(self):
        assert self.tau_op_ns >= 0 and self.tau_rot_ns >= 0

    @classmethod
    def from_coupling(cls, j_hz=20e6, tau_rot_ns=1.0):
        """tau_op = pi/(4J) with J = 2 pi j_hz."""
        j = 2 * math.pi * j_hz
        return cls(tau_op_ns=math.pi / (4 * j) * 1e9, tau_rot_ns=tau_rot_ns)

    def evaluate(self, a, b):
        return a * self.tau_op_ns + b * self.tau_rot_ns


@dataclass(frozen=True)
class CostReport:
    n_op_units: int
    n_rot_units: int
    total_ns: float

    def as_dict(self):
        return {'op_units': self.n_op_units, 'rot_units': self.n_rot_units,
                'total_ns': self.total_ns}


def _report(a, b, model):
    return CostReport(a, b, model.evaluate(a, b))


def cost(seq, model=None):
    model = model or CostModel()
    a = sum(step.duration[0] for step in seq.steps)
    b = sum(step.duration[1] for step in seq.steps)
    return _report(a, b, model)


def chain_units(chain):
    """(a, b) of replaying a chain directly, prologue included."""
    a = BLOCK_DURATION[0] * chain.n_blocks
    b = (BLOCK_DURATION[1] * chain.n_blocks +
         GROUP_DURATION[1] * chain.n_rotation_groups + chain.prologue)
    return a, b


def baseline_rows(code_name, kind, fixtures=None):
    return [row for row in read_table('baseline.table', fixtures)
            if row[0] == code_name and row[1] == kind]


def baseline_cost(code_name, kind, model=None, fixtures=None):
    """Generator-by-generator cost summed from the stated accounting."""
    model = model or CostModel()
    rows = baseline_rows(code_name, kind, fixtures)
    if not rows:
        raise KeyError((code_name, kind))
    a = sum(int(row[3]) for row in rows)
    b = sum(int(row[4]) for row in rows)
    return _report(a, b, model)


def improvement(old, new):
    if old.total_ns == 0:
        return 0.0
    return 100.0 * (old.total_ns - new.total_ns) / old.total_ns


def pulse_census(seq):
    """
    Raw pulse counts. Rotations are counted in the physical timeline, so
    every rotation of the schedule appears twice; each interaction block
    adds its selection pulses and the prologue one pulse per tau_rot.
    N_P is the rotation count: the pulses the fidelity model perturbs.
    """
    blocks = sum(1 for step in seq.steps if step.kind == INTERACTION_BLOCK)
    prologue = sum(step.duration[1] for step in seq.steps
                   if step.kind == EXTRACTION_BLOCK)
    rotations = sum(1 for op in seq.timeline() if isinstance(op, AxisRotation))
    units = cost(seq)
    return {
        'n_interaction_uses': blocks,
        'n_single_rotations': rotations,
        'n_pulses_total': rotations + PULSES_PER_BLOCK * blocks + prologue,
        'N_P': rotations,
        'op_units': units.n_op_units,
        'rot_units': units.n_rot_units,
    }
