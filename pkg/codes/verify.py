"""
Replay of derivation chains.

The printed chains never state the rotation sense, so every transition is
replayed under all sign assignments of its ops (all positive first) and the
first assignment reproducing the printed line wins. A transition no
assignment reproduces is recorded as a mismatch together with the
assignment that leaves the fewest differing terms; the replay then carries
on from the printed line.
"""

from dataclasses import dataclass, field
from itertools import product

from pauli import conjugate_sequence, render, render_string

EXACT = 'exact'
RESOLVED = 'resolved'
MISMATCH = 'mismatch'


@dataclass
class LineResult:
    line: int
    annotation: str
    status: str
    ops: tuple
    diff: tuple = ()

    def as_dict(self):
        return {
            'line': self.line,
            'annotation': self.annotation,
            'status': self.status,
            'ops': [str(op) for op in self.ops],
            'diff': [{'term': t, 'expected': e, 'got': g}
                     for t, e, g in self.diff],
        }


@dataclass
class VerificationReport:
    code: str
    kind: str
    lines: list = field(default_factory=list)
    steps: tuple = ()
    printed_terminal: object = None
    replayed_terminal: object = None

    @property
    def ok(self):
        return all(r.status != MISMATCH for r in self.lines)

    @property
    def n_lines(self):
        return len(self.lines) + 1

    @property
    def n_matched(self):
        return 1 + sum(1 for r in self.lines if r.status != MISMATCH)

    def failing_lines(self):
        return [r for r in self.lines if r.status == MISMATCH]

    def as_dict(self):
        return {
            'code': self.code,
            'kind': self.kind,
            'ok': self.ok,
            'lines_total': self.n_lines,
            'lines_matched': self.n_matched,
            'printed_terminal': render(self.printed_terminal),
            'replayed_terminal': render(self.replayed_terminal),
            'lines': [r.as_dict() for r in self.lines],
        }


def term_diff(expected, got):
    """(term, expected coefficient, got coefficient) for every disagreement."""
    keys = sorted(set(expected.terms) | set(got.terms))
    out = []
    for key in keys:
        e, g = expected.terms.get(key, 0.0), got.terms.get(key, 0.0)
        if e != g:
            p = next(s for s in (expected.strings() + got.strings())
                     if s.key == key)
            out.append((render_string(p), e, g))
    return tuple(out)


def sign_assignments(ops):
    """Every +-1 choice per op, all positive first."""
    for signs in product((1, -1), repeat=len(ops)):
        yield [op if s == 1 else op.inverse() for op, s in zip(ops, signs)]


def resolve_transition(before, after, ops):
    """(status, signed ops, diff) for one printed transition."""
    best = None
    for k, signed in enumerate(sign_assignments(ops)):
        got = conjugate_sequence(before, signed)
        if got == after:
            return (EXACT if k == 0 else RESOLVED), signed, ()
        diff = term_diff(after, got)
        if best is None or len(diff) < len(best[1]):
            best = signed, diff
    return MISMATCH, best[0], best[1]


def _groups(steps):
    """Consecutive steps up to and including the next printed line."""
    group = []
    for step in steps:
        group.append(step)
        if step.expected is not None:
            yield group
            group = []
    assert not group, "chain ends on an unprinted step"


def verify_chain(code, kind):
    return replay_chain(code.chains[kind], code.name)


def replay_chain(chain, code_name=None):
    """
    Replay a chain line by line.

    The report holds one LineResult per printed transition (line numbers
    count the target as line 1), the chain steps with their resolved signs,
    and the terminal obtained by replaying the resolved ops from the target.
    """
    report = VerificationReport(code=code_name or chain.code, kind=chain.kind)
    before = chain.target
    resolved_steps = []
    for line, group in enumerate(_groups(chain.steps), 2):
        ops = [op for step in group for op in step.ops]
        status, signed, diff = resolve_transition(before, group[-1].expected,
                                                  ops)
        offset = 0
        for step in group:
            resolved_steps.append(
                step.resolved(signed[offset:offset + len(step.ops)]))
            offset += len(step.ops)
        report.lines.append(LineResult(line=line,
                                       annotation=group[-1].annotation,
                                       status=status, ops=tuple(signed),
                                       diff=diff))
        before = group[-1].expected
    report.steps = tuple(resolved_steps)
    report.printed_terminal = chain.terminal
    report.replayed_terminal = conjugate_sequence(
        chain.target, [op for step in resolved_steps for op in step.ops])
    return report
