import math

import pytest
import torch

from lattice.bch import (bch_first_order, cycle_unitary, deviation_vs_repetitions,
                         deviation_vs_tau, exact_effective, oracle_deviation)
from lattice.cleanup import z_echo_cleanup, echo_unitary
from lattice.patterns import (FRAMES, check_realizable, edge_flip_set,
                              pattern_select_edge, pattern_select_H0,
                              select_pattern)
from lattice.report import (estimate_norm, norm_scaling,
                            perturbation_norm_report)
from lattice.spec import (InvalidEdgeError, LatticeSpec,
                          UnsupportedGeometryError, build_lattice_hamiltonian,
                          edge_part, read_config, single_qubit_part,
                          spec_from_config)
from pauli import parse_sum, render
from simulate.dense import hs_norm_dense, to_matrix
from utilities.results_summary import loglog_slope


def count_kinds(spec):
    kinds = [t.key[0] for t in spec.terms()]
    return {k: kinds.count(k) for k in ('omega', 'intra', 'inter')}


class TestLatticeSpec:
    """Geometry and Hamiltonian terms."""

    def test_term_counts(self):
        spec = LatticeSpec.uniform(3, 5)
        assert count_kinds(spec) == {'omega': 15, 'intra': 12, 'inter': 10}
        assert spec.n_qubits == 15
        assert spec.qubit(2, 1) == 5

    def test_two_qubit_xy(self):
        spec = LatticeSpec.uniform(1, 2, J=0.5, omega=0.0)
        assert build_lattice_hamiltonian(spec) == \
            parse_sum('0.5*X1X2 + 0.5*Y1Y2', 2)

    def test_two_qubit_ising(self):
        spec = LatticeSpec.uniform(1, 2, 'Ising', J=1.0, omega=2.0)
        assert build_lattice_hamiltonian(spec) == \
            parse_sum('Z1Z2 + 2*X1 + 2*X2', 2)

    def test_parts(self):
        spec = LatticeSpec.uniform(2, 3)
        assert len(single_qubit_part(spec)) == 6
        assert len(single_qubit_part(spec, k=2)) == 3
        # (2, 3) coupling on both arrays, X X and Y Y each
        assert len(edge_part(spec, (2, 3))) == 4

    def test_zero_strengths_dropped(self):
        spec = LatticeSpec.uniform(2, 3, J=0.0)
        assert count_kinds(spec) == {'omega': 6, 'intra': 0, 'inter': 0}

    def test_bad_geometry(self):
        with pytest.raises(UnsupportedGeometryError):
            LatticeSpec.uniform(1, 1)
        with pytest.raises(UnsupportedGeometryError):
            LatticeSpec(1, 3, intra_J={(1, 3): 1.0})
        with pytest.raises(UnsupportedGeometryError):
            LatticeSpec(1, 3, omega={(1, 1): float('nan')})
        with pytest.raises(UnsupportedGeometryError):
            LatticeSpec.uniform(1, 3, 'Heisenberg')

    def test_config_file(self, tmp_path):
        path = tmp_path / 'lattice.cfg'
        path.write_text('# two arrays\nn_logical = 2\nn_phys = 3\n'
                        'coupling_kind = Ising\nJ = 0.5  # rad/s\n')
        spec = spec_from_config(read_config(str(path)))
        assert (spec.n_logical, spec.n_phys, spec.coupling_kind) == \
            (2, 3, 'Ising')
        assert spec.max_coupling() == 0.5
        assert spec.max_omega() == 1.0

    def test_config_syntax(self, tmp_path):
        path = tmp_path / 'broken.cfg'
        path.write_text('n_phys 5\n')
        with pytest.raises(UnsupportedGeometryError):
            read_config(str(path))


class TestPatterns:

    @pytest.mark.parametrize('kind', ['XY', 'Ising'])
    @pytest.mark.parametrize('shape', [(1, 5), (2, 3), (3, 5)])
    def test_h0_selection(self, kind, shape):
        spec = LatticeSpec.uniform(*shape, coupling_kind=kind)
        pattern = pattern_select_H0(spec)
        assert [f.name for f in pattern.frames] == list(FRAMES)
        assert check_realizable(spec, pattern) == []
        assert pattern.ideal(spec) == single_qubit_part(spec) * 2
        assert all(k[0] == 'omega' for k in pattern.surviving_terms())

    @pytest.mark.parametrize('kind', ['XY', 'Ising'])
    @pytest.mark.parametrize('edge', [(1, 2), (2, 3), (4, 5)])
    def test_edge_selection(self, kind, edge):
        spec = LatticeSpec.uniform(2, 5, coupling_kind=kind)
        pattern = pattern_select_edge(spec, edge)
        assert check_realizable(spec, pattern) == []
        assert pattern.ideal(spec) == edge_part(spec, edge) * 4
        assert pattern.pulse_axis == ('z' if kind == 'XY' else 'y')

    def test_flip_set(self):
        assert edge_flip_set(2, 5) == {2, 3, 5}
        assert edge_flip_set(1, 4) == {1, 2, 4}

    def test_even_array_rejected(self):
        with pytest.raises(UnsupportedGeometryError):
            pattern_select_H0(LatticeSpec.uniform(1, 4))

    @pytest.mark.parametrize('edge', [(2, 4), (0, 1), (5, 6)])
    def test_bad_edge(self, edge):
        with pytest.raises(InvalidEdgeError):
            pattern_select_edge(LatticeSpec.uniform(1, 5), edge)

    def test_select_by_name(self):
        spec = LatticeSpec.uniform(1, 5)
        assert select_pattern(spec, 'edge').name == 'edge(2,3)'
        assert select_pattern(spec, 'H0').name == 'H0'
        with pytest.raises(ValueError):
            select_pattern(spec, 'XX')


class TestBCH:
    """Second-order average Hamiltonian against the dense logarithm."""

    def test_no_coupling_is_exact(self):
        spec = LatticeSpec.uniform(1, 3, J=0.0)
        frames = pattern_select_H0(spec).hamiltonians(spec)
        effective, error = bch_first_order(*frames, tau=0.1, n=3)
        assert len(error) == 0
        assert effective.isclose(single_qubit_part(spec) * 0.6)
        dev = oracle_deviation(frames, 0.1, 3)
        assert dev['exact_minus_ideal'] < 1e-10

    def test_commuting_frames(self):
        h = parse_sum('Z1Z2 + 0.5*Z2', 2)
        frames = [h, h * -1, h, h * 2]
        effective, error = bch_first_order(*frames, tau=0.2)
        assert len(error) == 0
        assert hs_norm_dense(exact_effective(frames, 0.2) -
                             to_matrix(effective)) < 1e-10

    def test_cycle_is_unitary(self):
        spec = LatticeSpec.uniform(1, 3)
        u = cycle_unitary(pattern_select_H0(spec).hamiltonians(spec), 0.05, 2)
        eye = torch.eye(8, dtype=u.dtype)
        assert torch.allclose(u @ u.conj().T, eye, atol=1e-12)

    @pytest.mark.parametrize('select', ['H0', 'edge'])
    def test_second_order_residual(self, select):
        spec = LatticeSpec.uniform(1, 5)
        frames = select_pattern(spec, select).hamiltonians(spec)
        dev = oracle_deviation(frames, 0.002)
        assert dev['exact_minus_ideal'] == \
            pytest.approx(dev['error_estimate'], rel=0.05)
        assert dev['exact_minus_second_order'] < \
            0.05 * dev['exact_minus_ideal']

    def test_slope_versus_repetitions(self):
        spec = LatticeSpec.uniform(1, 5)
        frames = pattern_select_H0(spec).hamiltonians(spec)
        ns = [1, 2, 4, 8, 16]
        devs = deviation_vs_repetitions(frames, 0.01, ns)
        assert loglog_slope(ns, devs) == pytest.approx(-1.0, abs=0.1)

    def test_slope_versus_tau(self):
        spec = LatticeSpec.uniform(1, 5)
        frames = pattern_select_edge(spec, (2, 3)).hamiltonians(spec)
        taus = [0.00125, 0.0025, 0.005, 0.01]
        devs = deviation_vs_tau(frames, taus)
        assert loglog_slope(taus, devs) == pytest.approx(2.0, abs=0.1)


class TestCleanup:

    def test_removes_z(self):
        result = z_echo_cleanup(parse_sum('Z1 + X1', 1))
        assert result.effective == parse_sum('X1', 1)
        assert result.removed == parse_sum('Z1', 1)
        assert len(result.non_cancellable) == 0

    def test_only_z(self):
        result = z_echo_cleanup(parse_sum('Z1', 1))
        assert len(result.effective) == 0

    def test_keeps_xy_coupling(self):
        h = parse_sum('4*Z1 + 4*Z2 + 4*Z3 + 4*Z4 + X2X3 + Y2Y3', 4)
        result = z_echo_cleanup(h)
        assert result.effective == parse_sum('X2X3 + Y2Y3', 4)
        assert len(result.non_cancellable) == 0
        assert len(result.steps) == 2 * 4 + 2

    def test_reports_other_removals(self):
        result = z_echo_cleanup(parse_sum('X1Z2 + X1X2', 2))
        assert render(result.non_cancellable) == 'X1Z2'

    def test_echo_unitary(self):
        h = parse_sum('X1 + Z2 + 0.3*X1X3', 3)
        result = z_echo_cleanup(h, tau=0.4)
        want = torch.linalg.matrix_exp(-0.8j * to_matrix(result.effective))
        assert torch.allclose(echo_unitary(h, 0.4), want, atol=1e-10)

    def test_other_axes_refused(self):
        with pytest.raises(ValueError):
            z_echo_cleanup(parse_sum('Z1', 1), axis='y')

    def test_as_dict(self):
        d = z_echo_cleanup(parse_sum('Z1 + X1', 1), tau=0.5).as_dict()
        assert d['effective'] == 'X1'
        assert 'evolve(0.5)' in d['steps']


class TestReport:

    def test_edge_report(self):
        spec = LatticeSpec.uniform(1, 5)
        pattern = pattern_select_edge(spec, (2, 3))
        r = perturbation_norm_report(spec, pattern, 0.01)
        assert parse_sum(r['ideal'], 5).isclose(edge_part(spec, (2, 3)) * 4)
        assert r['unrealizable_frames'] == []
        assert r['estimate_norm'] == pytest.approx(10 * 0.01 * 5)
        # five surviving strings of weight 4 J Omega tau
        assert r['error_norm'] == pytest.approx(math.sqrt(80) * 0.01)
        assert r['ratio'] == pytest.approx(math.sqrt(80) / 50)
        assert r['exact']['exact_minus_ideal'] == \
            pytest.approx(r['error_norm'], rel=0.2)

    def test_h0_report(self):
        spec = LatticeSpec.uniform(1, 5, 'Ising')
        r = perturbation_norm_report(spec, pattern_select_H0(spec), 0.01, n=2)
        assert parse_sum(r['ideal'], 5).isclose(single_qubit_part(spec) * 2)
        assert r['estimate_norm'] == pytest.approx(20 * 0.01 * 5)
        # eight strings of weight 2 J Omega tau, one per edge end
        assert r['ratio'] == pytest.approx(math.sqrt(32) / 100)

    @pytest.mark.parametrize('kind', ['XY', 'Ising'])
    def test_closed_form_overestimates(self, kind):
        spec = LatticeSpec.uniform(1, 5, kind, J=0.5, omega=2.0)
        h0 = perturbation_norm_report(spec, pattern_select_H0(spec), 0.01,
                                      exact=False)
        edge = perturbation_norm_report(spec, pattern_select_edge(spec, (2, 3)),
                                        0.01, exact=False)
        assert h0['ratio'] == pytest.approx(0.0566, abs=5e-4)
        assert edge['ratio'] == pytest.approx(0.179, abs=1e-3)

    def test_error_scales_with_tau(self):
        spec = LatticeSpec.uniform(1, 5)
        pattern = pattern_select_H0(spec)
        a = perturbation_norm_report(spec, pattern, 0.01, exact=False)
        b = perturbation_norm_report(spec, pattern, 0.02, exact=False)
        assert a['exact'] is None
        assert b['error_norm'] == pytest.approx(2 * a['error_norm'])
        assert b['ratio'] == pytest.approx(a['ratio'])

    def test_large_lattice_skips_oracle(self):
        spec = LatticeSpec.uniform(3, 5)
        r = perturbation_norm_report(spec, pattern_select_H0(spec), 0.01)
        assert r['exact'] is None
        assert estimate_norm(spec, pattern_select_H0(spec), 0.01) == \
            pytest.approx(20 * 0.01 * 15)

    def test_norm_scaling(self):
        scaling = norm_scaling([2, 4, 8], n_phys=3)
        assert scaling['estimate_slope'] == pytest.approx(1.0)
        assert 0.3 < scaling['slope'] < 0.8
        assert all(e > 0 for e in scaling['error_norm'])

    def test_no_coupling_no_error(self):
        spec = LatticeSpec.uniform(2, 3, J=0.0)
        r = perturbation_norm_report(spec, pattern_select_H0(spec), 0.01)
        assert r['error_norm'] == 0
        assert r['ratio'] is None
