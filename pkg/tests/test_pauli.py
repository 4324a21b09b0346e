import math
from fractions import Fraction

import pytest
import torch

from pauli import (AxisRotation, DimensionError, IsingEdge, MalformedOpError,
                   PauliEvolution, PauliFormatError, PauliString, PauliSum,
                   PhaseError, XYEdge, commutator, commutes,
                   conjugate_elementary, conjugate_evolution,
                   conjugate_sequence, hs_norm, multiply,
                   parse_string, parse_sum, render)
from pauli.angles import as_angle, cos_sin_double, format_angle
from simulate.dense import (dense_conjugate, hs_norm_dense, ops_unitary,
                            string_matrix, to_matrix)

ORACLE_TOL = 1e-10
LETTERS = 'IXYZ'


def random_string(gen, n):
    picks = torch.randint(0, 4, (n,), generator=gen).tolist()
    return PauliString.from_letters(n, {q: LETTERS[k]
                                        for q, k in enumerate(picks)})


def random_sum(gen, n, terms=4):
    coeffs = torch.randn(terms, generator=gen, dtype=torch.float64).tolist()
    return PauliSum.from_strings(n, [(random_string(gen, n), c)
                                     for c in coeffs])


def random_op(gen, n):
    kind = int(torch.randint(0, 4, (1,), generator=gen))
    q = torch.randperm(n, generator=gen)[:2].tolist()
    if kind == 0:
        axis = 'xyz'[int(torch.randint(0, 3, (1,), generator=gen))]
        angle = [Fraction(1, 2), Fraction(-1, 2), Fraction(1)][
            int(torch.randint(0, 3, (1,), generator=gen))]
        return AxisRotation(q[0], axis, angle)
    if kind == 1:
        return XYEdge(q[0], q[1], Fraction(1, 4))
    if kind == 2:
        return IsingEdge(q[0], q[1], Fraction(-1, 4))
    p = random_string(gen, n)
    if p.is_identity:
        p = PauliString.single(n, q[0], 'X')
    return PauliEvolution(p, float(torch.rand(1, generator=gen)))


class TestPauliString:
    """Symplectic products and commutation."""

    def test_phase_convention(self):
        x = PauliString.single(1, 0, 'X')
        z = PauliString.single(1, 0, 'Z')
        y = PauliString.single(1, 0, 'Y')
        # XZ = -iY
        assert multiply(x, z) == y.with_phase(3)
        assert multiply(z, x) == y.with_phase(1)

    def test_product_matches_matrices(self, gen):
        for _ in range(100):
            n = int(torch.randint(1, 6, (1,), generator=gen))
            p, q = random_string(gen, n), random_string(gen, n)
            got = string_matrix(multiply(p, q))
            want = string_matrix(p) @ string_matrix(q)
            assert torch.allclose(got, want, atol=ORACLE_TOL)

    def test_commutes_matches_matrices(self, gen):
        for _ in range(100):
            n = int(torch.randint(1, 6, (1,), generator=gen))
            p, q = random_string(gen, n), random_string(gen, n)
            a, b = string_matrix(p), string_matrix(q)
            assert commutes(p, q) == torch.allclose(a @ b, b @ a)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            multiply(PauliString(2, 1), PauliString(3, 1))
        with pytest.raises(DimensionError):
            PauliString.from_letters(2, {2: 'X'})

    def test_letters(self):
        p = parse_string('X1Y3Z4', 4)
        assert p.letters() == {0: 'X', 2: 'Y', 3: 'Z'}
        assert p.weight == 3
        assert str(p) == 'X1Y3Z4'


class TestPauliSum:

    def test_combines_and_drops_zeros(self):
        h = parse_sum('Z1Z2 + Z1Z2 - 2*Z1Z2 + X1', 2)
        assert len(h) == 1
        assert h.coefficient(parse_string('X1', 2)) == 1.0

    def test_imaginary_phase_rejected(self):
        p = PauliString.single(1, 0, 'X').with_phase(1)
        with pytest.raises(PhaseError):
            PauliSum.from_strings(1, [(p, 1.0)])

    def test_arithmetic(self):
        a = parse_sum('X1 + Z2', 2)
        b = parse_sum('X1 - Z2', 2)
        assert a + b == parse_sum('2*X1', 2)
        assert a - b == parse_sum('2*Z2', 2)
        assert (a * 3) / 3 == a

    def test_render_parse(self):
        h = parse_sum('-Z1Z2X3 + 0.5*Y2', 3)
        assert parse_sum(render(h), 3) == h
        assert render(PauliSum.zero(2)) == '0'

    def test_round_trip_keeps_every_digit(self):
        h = PauliSum.from_strings(3, [
            (parse_string('X1', 3), 1e-05),
            (parse_string('Z2', 3), 0.123456789012),
            (parse_string('Y1Y3', 3), -2.5e-12),
            (parse_string('Z3', 3), 4.0)])
        text = render(h)
        assert '1e-05*X1' in text and '4*Z3' in text
        assert parse_sum(text, 3) == h

    def test_reads_exponents(self):
        h = parse_sum('2e-3*X1 - 1.5E+2*Z2 + 3e4Y1Y2', 2)
        assert h.coefficient(parse_string('X1', 2)) == 0.002
        assert h.coefficient(parse_string('Z2', 2)) == -150.0
        assert h.coefficient(parse_string('Y1Y2', 2)) == 30000.0

    def test_block_labels(self):
        h = parse_sum('X2^(3) + Z1^(1)', 15, block_size=5)
        assert set(h.support()) == {0, 11}
        with pytest.raises(PauliFormatError):
            parse_sum('X2^(3)', 15)

    def test_unreadable(self):
        with pytest.raises(PauliFormatError):
            parse_sum('X1 + W2', 2)


class TestOps:

    def test_rotation_angles(self):
        with pytest.raises(MalformedOpError):
            AxisRotation(0, 'x', Fraction(1, 4))
        with pytest.raises(MalformedOpError):
            AxisRotation(0, 'w', Fraction(1, 2))
        assert AxisRotation(0, 'y', Fraction(1, 2)).inverse().angle == \
            Fraction(-1, 2)

    def test_edge_needs_two_qubits(self):
        with pytest.raises(MalformedOpError):
            XYEdge(1, 1)

    def test_out_of_register(self):
        with pytest.raises(MalformedOpError):
            conjugate_sequence(parse_sum('X1', 2), [AxisRotation(3, 'x', 1)])

    def test_float_angles_snap(self):
        assert as_angle(math.pi / 4) == Fraction(1, 4)
        assert isinstance(as_angle(0.3), float)
        assert cos_sin_double(Fraction(1, 4)) == (0, 1)
        assert format_angle(Fraction(-1, 2)) == '-pi/2'


class TestConjugation:
    """Symbolic conjugation against dense unitaries."""

    def test_half_turn_exchanges_axes(self):
        h = parse_sum('X1', 1)
        got = conjugate_sequence(h, [AxisRotation(0, 'y', Fraction(1, 2))])
        assert set(got.terms) == set(parse_sum('Z1', 1).terms)
        assert abs(abs(got.coefficient(parse_string('Z1', 1))) - 1) < 1e-12

    def test_xy_edge_moves_x(self):
        h = parse_sum('X1', 2)
        got = conjugate_sequence(h, [XYEdge(0, 1)])
        assert got.strings()[0].letters() == {0: 'Y', 1: 'Z'} or \
            got.strings()[0].letters() == {0: 'Z', 1: 'Y'}

    @pytest.mark.parametrize('op, before, after', [
        (XYEdge(0, 1), 'X1', '-Z1Y2'),
        (XYEdge(0, 1), 'Y1', 'Z1X2'),
        (XYEdge(0, 1), 'Z1', 'Z2'),
        (IsingEdge(0, 1), 'X1', 'Y1Z2'),
        (IsingEdge(0, 1), 'Y1', '-X1Z2'),
        (IsingEdge(0, 1), 'Z1', 'Z1'),
        (PauliEvolution(parse_string('Z1Z2', 2), Fraction(1, 4)), 'X1',
         'Y1Z2'),
        (XYEdge(0, 1), 'X1X2', 'X1X2'),
        (IsingEdge(0, 1), 'Z1Z2', 'Z1Z2'),
    ])
    def test_quarter_turn_maps(self, op, before, after):
        got = conjugate_elementary(parse_sum(before, 2), op)
        assert got == parse_sum(after, 2)

    def test_generic_angle_maps(self):
        theta = 0.3
        c, s = math.cos(2 * theta), math.sin(2 * theta)
        ising, xy = IsingEdge(0, 1, theta), XYEdge(0, 1, theta)
        cases = [
            (ising, 'X1', [('X1', c), ('Y1Z2', s)]),
            (ising, 'Y1', [('Y1', c), ('X1Z2', -s)]),
            (xy, 'X1', [('X1', c), ('Z1Y2', -s)]),
            (xy, 'Y1', [('Y1', c), ('Z1X2', s)]),
            (xy, 'Z1', [('Z1', c * c), ('Z2', s * s),
                           ('X1Y2', c * s), ('Y1X2', -c * s)]),
        ]
        for op, before, terms in cases:
            want = PauliSum.from_strings(2, [(parse_string(t, 2), w)
                                             for t, w in terms])
            got = conjugate_elementary(parse_sum(before, 2), op)
            assert got.isclose(want, atol=1e-14)

    def test_exact_angles_invert_bit_exactly(self, gen):
        exact = [AxisRotation(1, 'x', Fraction(1, 2)),
                 AxisRotation(0, 'y', Fraction(-1, 2)),
                 AxisRotation(2, 'z', Fraction(1)),
                 XYEdge(0, 2), XYEdge(1, 3, Fraction(-1, 4)),
                 IsingEdge(2, 3), IsingEdge(0, 1, Fraction(1, 2))]
        for _ in range(50):
            h = random_sum(gen, 4)
            for op in exact:
                there = conjugate_elementary(h, op)
                assert conjugate_elementary(there, op.inverse()) == h

    def test_conjugation_keeps_norm(self, gen):
        for _ in range(100):
            h = random_sum(gen, 4, terms=6)
            ops = [random_op(gen, 4) for _ in range(4)]
            assert hs_norm(conjugate_sequence(h, ops)) == \
                pytest.approx(hs_norm(h), rel=1e-12)

    def test_random_against_dense(self, gen):
        for _ in range(300):
            n = int(torch.randint(2, 6, (1,), generator=gen))
            h = random_sum(gen, n)
            ops = [random_op(gen, n) for _ in range(3)]
            got = to_matrix(conjugate_sequence(h, ops))
            want = dense_conjugate(h, ops)
            assert hs_norm_dense(got - want) < ORACLE_TOL

    def test_inverse_undoes(self, gen):
        for _ in range(50):
            h = random_sum(gen, 4)
            ops = [random_op(gen, 4) for _ in range(4)]
            back = conjugate_sequence(conjugate_sequence(h, ops),
                                      [op.inverse() for op in reversed(ops)])
            assert back.isclose(h, atol=1e-10)

    def test_generator_phase_rejected(self):
        p = PauliString.single(1, 0, 'Z').with_phase(2)
        with pytest.raises(MalformedOpError):
            conjugate_evolution(parse_sum('X1', 1), p, Fraction(1, 4))

    def test_unitary_is_unitary(self, gen):
        ops = [random_op(gen, 3) for _ in range(5)]
        w = ops_unitary(ops, 3)
        assert torch.allclose(w @ w.conj().T, torch.eye(8, dtype=w.dtype),
                              atol=ORACLE_TOL)


class TestCommutatorNorm:

    def test_commutator_against_dense(self, gen):
        for _ in range(100):
            n = int(torch.randint(1, 5, (1,), generator=gen))
            a, b = random_sum(gen, n), random_sum(gen, n)
            ma, mb = to_matrix(a), to_matrix(b)
            want = (ma @ mb - mb @ ma) / 1j
            assert hs_norm_dense(to_matrix(commutator(a, b)) - want) < \
                ORACLE_TOL

    def test_norm_against_dense(self, gen):
        for _ in range(100):
            h = random_sum(gen, 4)
            assert abs(hs_norm(h) - hs_norm_dense(to_matrix(h))) < ORACLE_TOL
