"""
Plain-text Pauli sums: "-Z1Z2X3 + Y2", "4*Z2Z3 - 0.5*X1".

Qubits are 1-based. With a block size, qubit labels carry the logical block
as a superscript, "X2^(3)" being qubit 2 of block 3.
"""

import re

from pauli.errors import PauliFormatError
from pauli.paulisum import PauliSum
from pauli.string import PauliString

_TERM = re.compile(r'([+-]?)(\d+(?:\.\d+)?(?:[eE][+-]?\d+)?\*?)?((?:[XYZ]\d+(?:\^\(\d+\))?)+|I)$')
_FACTOR = re.compile(r'([XYZ])(\d+)(?:\^\((\d+)\))?')


def _label(q, block_size):
    if not block_size:
        return str(q + 1)
    return '{}^({})'.format(q % block_size + 1, q // block_size + 1)


def _number(value):
    """Shortest text that reads back as the same float."""
    short = '{:g}'.format(value)
    return short if float(short) == value else repr(value)


def render_string(p, block_size=None):
    body = ''.join(p.letter(q) + _label(q, block_size) for q in p.support())
    return body or 'I'


def render(h, block_size=None):
    if h.is_zero():
        return '0'
    out = []
    for p, c in h:
        sign = '-' if c < 0 else '+'
        mag = abs(c)
        scale = '' if mag == 1 else _number(mag) + '*'
        out.append((sign, scale + render_string(p, block_size)))
    first_sign, first = out[0]
    text = ('-' if first_sign == '-' else '') + first
    for sign, body in out[1:]:
        text += ' {} {}'.format(sign, body)
    return text


def _split_terms(text):
    text = text.replace('−', '-').replace(' ', '')
    if not text:
        raise PauliFormatError("empty Pauli sum")
    # a sign right after an exponent marker belongs to the number
    return re.findall(r'[+-]?(?:[eE][+-]\d|[^+-])+', text)


def parse_string(text, n_qubits, block_size=None):
    letters = {}
    for letter, idx, block in _FACTOR.findall(text):
        q = int(idx) - 1
        if block:
            if not block_size:
                raise PauliFormatError("block label without block size")
            q += (int(block) - 1) * block_size
        if q in letters or not 0 <= q < n_qubits:
            raise PauliFormatError("bad qubit {} in {!r}".format(q + 1, text))
        letters[q] = letter
    return PauliString.from_letters(n_qubits, letters)


def parse_sum(text, n_qubits, block_size=None):
    if text.strip() == '0':
        return PauliSum.zero(n_qubits)
    pairs = []
    for term in _split_terms(text):
        m = _TERM.match(term)
        if m is None:
            raise PauliFormatError("cannot read term {!r}".format(term))
        sign, scale, body = m.groups()
        coeff = float(scale.rstrip('*')) if scale else 1.0
        if sign == '-':
            coeff = -coeff
        if body == 'I':
            p = PauliString.identity(n_qubits)
        else:
            p = parse_string(body, n_qubits, block_size)
        pairs.append((p, coeff))
    return PauliSum.from_strings(n_qubits, pairs)
