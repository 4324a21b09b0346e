"""
Measurement-free preparation of encoded states.

For a generator G that acts as X on a qubit a sitting in |0>, swapping that
X for Y gives G~ with exp(-i pi/4 G~)|s> = (1 + G)|s>/sqrt(2). Applying the
quarter turns one generator at a time therefore projects |0...0> into the
code space, provided no earlier factor has already moved qubit a. The sign
of each quarter turn is fixed numerically against (1 + G)|s>.
"""

import math
from fractions import Fraction
from itertools import combinations

import torch

from codes.library import load_code
from compiler.alignment import align_single_qubit
from pauli import (PauliEvolution, PauliString, PauliSum, XYEdge, commutes,
                   conjugate_sequence)
from simulate.dense import (DTYPE, apply_op, apply_pauli, basis_state,
                            evolve_hamiltonian, evolve_pauli_exp, to_matrix,
                            zero_state)

QUARTER = Fraction(1, 4)
MATCH_TOL = 1e-10


class EncodingError(ValueError):
    pass


class OrderingError(EncodingError):
    pass


def modified_generator(g, a):
    """X <-> Y on qubit a."""
    if g.letter(a) not in 'XY':
        raise EncodingError("{} acts as {} on qubit {}".format(
            g, g.letter(a), a + 1))
    return PauliString(g.n_qubits, g.x, g.z ^ (1 << a))


def modified_generators(code):
    """[(generator number, G~)] in the order the quarter turns act."""
    return [(j, modified_generator(code.generators[j - 1], code.modified[j]))
            for j in code.encode_order]


def check_ordering(code):
    moved = 0
    for j, gt in modified_generators(code):
        a = code.modified[j]
        if (moved >> a) & 1:
            raise OrderingError(
                "qubit {} of G{} was already moved by an earlier factor".format(
                    a + 1, j))
        moved |= gt.x


def encoder_ops(code):
    """Quarter-turn evolutions of M, first to act first."""
    check_ordering(code)
    state = zero_state(code.n)
    ops = []
    for j, gt in modified_generators(code):
        g = code.generators[j - 1]
        want = (state + apply_pauli(state, g)) / math.sqrt(2)
        for angle in (QUARTER, -QUARTER):
            got = evolve_pauli_exp(state, gt, angle)
            if torch.linalg.norm(got - want).item() < MATCH_TOL:
                break
        else:
            raise OrderingError("no quarter turn of G~{} acts as 1 + G{}"
                                .format(j, j))
        ops.append(PauliEvolution(gt, angle))
        state = got
    return ops


def _run(state, ops, n):
    for op in ops:
        state = apply_op(state, op, n)
    return state


def _unrun(state, ops, n):
    for op in reversed(ops):
        state = apply_op(state, op.inverse(), n)
    return state


def prepare_logical(code, c=0):
    """|c> of the code, unit norm."""
    if code.encoding == 'ghz':
        return prepare_nine_code(c, code)
    state = _run(zero_state(code.n), encoder_ops(code), code.n)
    if c:
        state = apply_pauli(state, code.logical_x)
    return state


def modified_one_state(code):
    """M^-1 X M |0...0>: the product state that M maps onto |1>."""
    ops = encoder_ops(code)
    state = _run(zero_state(code.n), ops, code.n)
    return _unrun(apply_pauli(state, code.logical_x), ops, code.n)


def encoder_linearity(code, trials=10, seed=0):
    """Largest |M(a|0> + b|1>') - (a|0_L> + b|1_L>)| over random (a, b)."""
    ops = encoder_ops(code)
    zero, one = zero_state(code.n), modified_one_state(code)
    zero_l, one_l = prepare_logical(code, 0), prepare_logical(code, 1)
    gen = torch.Generator().manual_seed(seed)
    worst = 0.0
    for _ in range(trials):
        ab = torch.randn(4, generator=gen, dtype=torch.float64).tolist()
        a, b = complex(ab[0], ab[1]), complex(ab[2], ab[3])
        norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        a, b = a / norm, b / norm
        got = _run(a * zero + b * one, ops, code.n)
        worst = max(worst, torch.linalg.norm(got - (a * zero_l + b * one_l))
                    .item())
    return worst


def combined_exponential(code):
    """exp(-i pi/4 sum s_j G~_j)|0...0> for mutually commuting factors."""
    ops = encoder_ops(code)
    strings = [op.pauli for op in ops]
    if not all(commutes(p, q) for p, q in combinations(strings, 2)):
        raise EncodingError("modified generators of {} do not commute".format(
            code.name))
    h = PauliSum.from_strings(code.n, [(op.pauli, float(4 * op.angle))
                                       for op in ops])
    u = torch.linalg.matrix_exp(-1j * math.pi / 4 * to_matrix(h))
    return u @ zero_state(code.n)


def gtilde_commutation_report(code):
    pairs = sorted(modified_generators(code), key=lambda t: t[0])
    return [{'pair': (j, k), 'commute': commutes(p, q)}
            for (j, p), (k, q) in combinations(pairs, 2)]


def nine_code_h0(code):
    """Sum of X Y X over the three-qubit blocks."""
    terms = [(PauliString.from_letters(code.n, {b[0]: 'X', b[1]: 'Y',
                                                b[2]: 'X'}), 1.0)
             for b in code.ghz_blocks]
    return PauliSum.from_strings(code.n, terms)


def ghz_product(code, c=0):
    sign = -1 if c else 1
    state = torch.ones(1, dtype=DTYPE)
    for block in code.ghz_blocks:
        width = len(block)
        ghz = (basis_state('0' * width) + sign * basis_state('1' * width)) \
            / math.sqrt(2)
        state = torch.kron(state, ghz)
    return state


def nine_code_sign(code, c=0):
    """Angle s with exp(-i s H0)|0...0> equal to the block GHZ product."""
    want = ghz_product(code, c)
    h0 = nine_code_h0(code)
    for angle in (QUARTER, -QUARTER):
        got = zero_state(code.n)
        for p, _ in h0:
            got = evolve_pauli_exp(got, p, angle)
        if torch.linalg.norm(got - want).item() < MATCH_TOL:
            return angle
    raise EncodingError("no quarter turn of H0 gives the GHZ product")


def prepare_nine_code(c, code=None):
    """exp(-i s H0)|0...0>; the bundled nine-qubit code by default."""
    if code is None:
        code = load_code('nine')
    # the block terms commute, so the exponential factorizes
    angle = nine_code_sign(code, c)
    state = zero_state(code.n)
    for p, _ in nine_code_h0(code):
        state = evolve_pauli_exp(state, p, angle)
    return state


def nine_generation_ops(code):
    """
    Ops taking sum_k X on each block's first qubit onto H0: XY edges along
    each block, then per-qubit alignment.
    """
    start = PauliSum.from_strings(code.n, [
        (PauliString.single(code.n, b[0], 'X'), 1.0) for b in code.ghz_blocks])
    edges = [XYEdge(b[0], b[1]) for b in code.ghz_blocks] + \
        [XYEdge(b[1], b[2]) for b in code.ghz_blocks]
    align = align_single_qubit(conjugate_sequence(start, edges),
                               nine_code_h0(code))
    if align is None:
        raise EncodingError("edge sequence does not reach H0")
    return start, edges + align


def generated_nine_state(code, c=0):
    """exp(-i s H0)|0...0> realised as W exp(-i s h) W^dagger."""
    start, ops = nine_generation_ops(code)
    angle = nine_code_sign(code, c)
    state = _unrun(zero_state(code.n), ops, code.n)
    state = evolve_hamiltonian(state, start, float(angle) * math.pi)
    return _run(state, ops, code.n)
