from pauli import render
from simulate.dense import MAX_QUBITS
from lattice.bch import CROSS_WEIGHT, bch_first_order, oracle_deviation
from lattice.patterns import check_realizable, pattern_select_H0
from lattice.spec import LatticeSpec
from utilities.results_summary import loglog_slope

# closed-form prefactors of c * tau * N * J * Omega
ESTIMATE_PREFACTOR = {'H0': 20.0}
EDGE_PREFACTOR = 10.0


def estimate_norm(spec, pattern, tau):
    c = ESTIMATE_PREFACTOR.get(pattern.name, EDGE_PREFACTOR)
    return c * tau * spec.n_qubits * spec.max_coupling() * spec.max_omega()


def perturbation_norm_report(spec, pattern, tau, n=1, exact=None,
                             cross_weight=CROSS_WEIGHT):
    """
    First-order effective Hamiltonian of a pattern with its leading error.
    Norms are per unit n * tau. The dense oracle runs when the lattice fits
    (exact=None) or when asked for.
    """
    frames = pattern.hamiltonians(spec)
    effective, error = bch_first_order(*frames, tau=tau, n=n,
                                       cross_weight=cross_weight)
    ideal = (effective / (n * tau)).chop()
    error_norm = error.norm() / (n * tau)
    estimate = estimate_norm(spec, pattern, tau)
    report = {
        'pattern': pattern.name,
        'lattice': '{}x{} {}'.format(spec.n_logical, spec.n_phys,
                                     spec.coupling_kind),
        'tau': tau,
        'n': n,
        'ideal': render(ideal),
        'error': render(error / (n * tau)),
        'error_norm': error_norm,
        'estimate_norm': estimate,
        'ratio': error_norm / estimate if estimate else None,
        'unrealizable_frames': check_realizable(spec, pattern),
        'exact': None,
    }
    if exact is None:
        exact = spec.n_qubits <= MAX_QUBITS
    if exact:
        dev = oracle_deviation(frames, tau, n, cross_weight)
        report['exact'] = {k: v / (n * tau) for k, v in dev.items()}
    return report


def norm_scaling(n_logicals, n_phys=5, coupling_kind='XY', tau=0.01, J=1.0,
                 omega=1.0, select=pattern_select_H0):
    """Symbolic error norm against the number of arrays."""
    norms, estimates = [], []
    for count in n_logicals:
        spec = LatticeSpec.uniform(count, n_phys, coupling_kind, J, omega)
        pattern = select(spec)
        frames = pattern.hamiltonians(spec)
        _, error = bch_first_order(*frames, tau=tau)
        norms.append(error.norm() / tau)
        estimates.append(estimate_norm(spec, pattern, tau))
    return {
        'n_logical': list(n_logicals),
        'error_norm': norms,
        'estimate_norm': estimates,
        'slope': loglog_slope(n_logicals, norms),
        'estimate_slope': loglog_slope(n_logicals, estimates),
    }
