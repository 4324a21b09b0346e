"""
Derivation chains and their plain-text fixture format.

A chain file has a header of ``key: value`` lines followed by one line per
step::

    target: X1Z2Z3X4 + X2Z3Z4X5
    (x<->z:2,3) ; X1X2X3X4 - ...
    XY(1,2)+XY(3,4) ; Y2Y3 + ...

Each step line is an annotation, a ``;`` and the sum the annotation leads to.
``(a<->b:q,...)`` exchanges the a and b axes on the listed qubits with a
pi/2 rotation about the third axis, ``XY(i,j)`` and ``ZZ(i,j)`` are quarter
turns under the two-body terms. A leading ``*`` marks a step whose
annotation is not printed where the chain comes from. A line carrying both a
rotation group and edges becomes two steps; the rotations run concurrently
with the interaction block and are flagged ``merged``.
"""

import os
import re
from dataclasses import dataclass, replace
from fractions import Fraction

from pauli import AxisRotation, IsingEdge, PauliFormatError, XYEdge, parse_sum
from pauli.ops import QUARTER

ROTATION = 'rotation'
INTERACTION = 'interaction'

# exchanged axes -> rotation axis
EXCHANGE_AXIS = {
    frozenset('xz'): 'y',
    frozenset('yz'): 'x',
    frozenset('xy'): 'z',
}
EDGE_TYPES = {'XY': XYEdge, 'ZZ': IsingEdge}
HALF = Fraction(1, 2)

_GROUP = re.compile(r'\(\s*([xyz])\s*(?:<->|↔)\s*([xyz])\s*:\s*([\d,\s]+)\)')
_EDGE = re.compile(r'(XY|ZZ)\(\s*(\d+)\s*,\s*(\d+)\s*\)')


class ChainFormatError(ValueError):
    pass


@dataclass(frozen=True)
class ChainStep:
    ops: tuple
    expected: object = None
    annotation: str = ''
    implied: bool = False
    merged: bool = False
    sign_choices: tuple = ()
    source_line: int = 0

    @property
    def kind(self):
        if all(isinstance(op, AxisRotation) for op in self.ops):
            return ROTATION
        return INTERACTION

    def resolved(self, ops):
        """Copy with signed ops; sign_choices keeps +1/-1 per op."""
        signs = tuple(1 if op.angle == base.angle else -1
                      for op, base in zip(ops, self.ops))
        return replace(self, ops=tuple(ops), sign_choices=signs)


@dataclass(frozen=True)
class DerivationChain:
    name: str
    code: str
    kind: str
    n_qubits: int
    target: object
    steps: tuple = ()
    h_ini: object = None
    prologue: int = 0
    companion: str = None
    generator: str = None

    @property
    def terminal(self):
        for step in reversed(self.steps):
            if step.expected is not None:
                return step.expected
        return self.target

    def lines(self):
        """Printed lines in order, the target first."""
        return [self.target] + [s.expected for s in self.steps
                                if s.expected is not None]

    @property
    def n_blocks(self):
        return sum(1 for s in self.steps if s.kind == INTERACTION)

    @property
    def n_rotation_groups(self):
        return sum(1 for s in self.steps if s.kind == ROTATION and not s.merged)

    def ops(self):
        return [op for step in self.steps for op in step.ops]


def parse_annotation(text, n_qubits):
    """Annotation -> list of op tuples, rotation group first."""
    groups, edges = [], []
    rest = text
    for a, b, qubits in _GROUP.findall(text):
        axis = EXCHANGE_AXIS.get(frozenset((a, b)))
        if axis is None:
            raise ChainFormatError("cannot exchange {} with {}".format(a, b))
        for q in qubits.split(','):
            groups.append(AxisRotation(_qubit(q, n_qubits), axis, HALF))
    rest = _GROUP.sub('', rest)
    for name, i, j in _EDGE.findall(rest):
        edges.append(EDGE_TYPES[name](_qubit(i, n_qubits), _qubit(j, n_qubits),
                                      QUARTER))
    rest = _EDGE.sub('', rest)
    if rest.replace('+', '').replace(',', '').strip():
        raise ChainFormatError("unreadable annotation {!r}".format(text))
    _check_disjoint(groups, text)
    _check_disjoint(edges, text)
    return [tuple(g) for g in (groups, edges) if g]


def _qubit(label, n_qubits):
    q = int(label) - 1
    if not 0 <= q < n_qubits:
        raise ChainFormatError("qubit {} outside {} qubits".format(
            q + 1, n_qubits))
    return q


def _check_disjoint(ops, text):
    seen = set()
    for op in ops:
        if seen & set(op.qubits):
            raise ChainFormatError("overlapping ops in {!r}".format(text))
        seen |= set(op.qubits)


def read_header(lines):
    header, body = {}, []
    for number, raw in lines:
        if body or ';' in raw:
            body.append((number, raw))
            continue
        key, sep, value = raw.partition(':')
        if not sep:
            raise ChainFormatError("line {}: expected 'key: value'".format(
                number))
        header[key.strip()] = value.strip()
    return header, body


def meaningful_lines(text):
    for number, raw in enumerate(text.splitlines(), 1):
        raw = raw.split('#', 1)[0].strip()
        if raw:
            yield number, raw


def parse_chain(text, name='', n_qubits=None):
    header, body = read_header(meaningful_lines(text))
    n = int(header.get('n', n_qubits or 0))
    if n <= 0:
        raise ChainFormatError("chain {!r} needs a qubit count".format(name))
    if 'target' not in header:
        raise ChainFormatError("chain {!r} has no target".format(name))
    try:
        target = parse_sum(header['target'], n)
        h_ini = parse_sum(header['h_ini'], n) if 'h_ini' in header else None
        steps = []
        for number, raw in body:
            steps.extend(_parse_step(number, raw, n))
    except PauliFormatError as e:
        raise ChainFormatError("chain {!r}: {}".format(name, e))
    return DerivationChain(
        name=name,
        code=header.get('code', ''),
        kind=header.get('kind', ''),
        n_qubits=n,
        target=target,
        steps=tuple(steps),
        h_ini=h_ini,
        prologue=int(header.get('prologue', 0)),
        companion=header.get('companion'),
        generator=header.get('generator'),
    )


def _parse_step(number, raw, n_qubits):
    annotation, _, expected = raw.partition(';')
    annotation = annotation.strip()
    implied = annotation.startswith('*')
    if implied:
        annotation = annotation[1:].strip()
    groups = parse_annotation(annotation, n_qubits)
    if not groups:
        raise ChainFormatError("line {}: empty annotation".format(number))
    expected = parse_sum(expected, n_qubits)
    stacked = len(groups) > 1
    steps = []
    for k, ops in enumerate(groups):
        last = k == len(groups) - 1
        steps.append(ChainStep(
            ops=ops,
            expected=expected if last else None,
            annotation=annotation,
            implied=implied,
            merged=stacked and not last,
            source_line=number,
        ))
    return steps


def load_chain(path, n_qubits=None):
    with open(path) as f:
        text = f.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_chain(text, name, n_qubits)


def reverse_ops(chain_or_steps):
    """Inverted ops in reverse order: terminal -> target."""
    steps = getattr(chain_or_steps, 'steps', chain_or_steps)
    return [op.inverse() for step in reversed(steps)
            for op in reversed(step.ops)]
