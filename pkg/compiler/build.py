from fractions import Fraction

from codes.chain import INTERACTION
from codes.verify import verify_chain
from compiler.alignment import align_single_qubit
from compiler.sequence import (BLOCK_DURATION, EXTRACTION_BLOCK,
                               GROUP_DURATION, INTERACTION_BLOCK,
                               ROTATION_GROUP, PulseSequence, ScheduledStep,
                               Segment)
from pauli import AxisRotation, conjugate_sequence, render


class UnverifiedChainError(ValueError):
    def __init__(self, message, report=None):
        super(UnverifiedChainError, self).__init__(message)
        self.report = report


def _reversed_steps(resolved_steps):
    steps = []
    for step in reversed(resolved_steps):
        ops = tuple(op.inverse() for op in reversed(step.ops))
        if step.kind == INTERACTION:
            steps.append(ScheduledStep(INTERACTION_BLOCK, ops, BLOCK_DURATION,
                                       label=step.annotation))
        else:
            duration = (0, 0) if step.merged else GROUP_DURATION
            steps.append(ScheduledStep(ROTATION_GROUP, ops, duration,
                                       label=step.annotation))
    return steps


def _companion_group(code, chain):
    """Global rotation taking the chain target onto the remaining generators."""
    rest = code.stabilizer_sum() - chain.target
    for angle in (Fraction(1, 2), Fraction(-1, 2)):
        ops = tuple(AxisRotation(q, chain.companion, angle)
                    for q in range(code.n))
        if conjugate_sequence(chain.target, ops) == rest:
            return ScheduledStep(ROTATION_GROUP, ops, GROUP_DURATION,
                                 label='companion'), rest
    raise UnverifiedChainError(
        "no {} rotation maps {} onto {}".format(chain.companion,
                                                render(chain.target),
                                                render(rest)))


def compile_code(code, kind, tolerate_mismatch=False):
    """
    Forward schedule from h_ini to the stabilizer sum.

    The chain is verified first; its resolved steps are inverted and
    reversed behind an extraction prologue and the per-qubit alignment that
    takes h_ini onto the replayed terminal. A chain with a mismatching line
    is refused unless ``tolerate_mismatch`` is set, in which case the
    replayed terminal (not the printed one) is used.
    """
    if kind not in code.chains:
        raise UnverifiedChainError("code {} has no {} chain".format(
            code.name, kind))
    chain = code.chains[kind]
    report = verify_chain(code, kind)
    if not report.ok and not tolerate_mismatch:
        bad = report.failing_lines()[0]
        raise UnverifiedChainError(
            "{} {} chain: line {} ({}) does not follow".format(
                code.name, kind, bad.line, bad.annotation), report)
    terminal = report.replayed_terminal
    h_ini = chain.h_ini if chain.h_ini is not None else terminal
    align = align_single_qubit(h_ini, terminal)
    if align is None:
        raise UnverifiedChainError(
            "no single-qubit rotation takes {} onto {}".format(
                render(h_ini), render(terminal)), report)

    steps = [ScheduledStep(EXTRACTION_BLOCK, (), (0, chain.prologue),
                           label='h_ini extraction')]
    if align:
        steps.append(ScheduledStep(ROTATION_GROUP, tuple(align),
                                   GROUP_DURATION, label='alignment'))
    steps.extend(_reversed_steps(report.steps))
    segments = [Segment(code.name + ':' + kind, h_ini, chain.target,
                        tuple(steps))]
    if chain.companion:
        group, rest = _companion_group(code, chain)
        segments.append(Segment(code.name + ':' + kind + ':companion', h_ini,
                                rest, tuple(steps) + (group,)))
    seq = PulseSequence(code.name, kind, code.n, segments, report)
    assert not seq.check(), "compiled schedule misses its target"
    return seq
