from commands import CHECK_FAILED, SUCCESS
from lattice.bch import deviation_vs_repetitions, deviation_vs_tau
from lattice.cleanup import z_echo_cleanup
from lattice.patterns import select_pattern
from lattice.report import perturbation_norm_report
from lattice.spec import LatticeSpec
from simulate.dense import MAX_QUBITS
from utilities.results_summary import loglog_slope
from utilities.utils import finish

REPETITIONS = (1, 2, 4, 8, 16)
TAU_FACTORS = (1, 2, 4, 8)
COLUMNS = ('pattern', 'lattice', 'tau', 'n', 'error_norm', 'estimate_norm',
           'ratio')


def lattice_spec(args):
    return LatticeSpec.uniform(args.n_logical, args.n_phys,
                               args.coupling_kind, args.J, args.omega)


def scaling_study(spec, pattern, tau, n):
    frames = pattern.hamiltonians(spec)
    t0 = n * tau
    by_n = deviation_vs_repetitions(frames, t0, REPETITIONS)
    taus = [tau * f for f in TAU_FACTORS]
    by_tau = deviation_vs_tau(frames, taus, n)
    return {
        't0': t0,
        'repetitions': list(REPETITIONS),
        'deviation_vs_n': by_n,
        'slope_vs_n': loglog_slope(REPETITIONS, by_n),
        'tau': taus,
        'deviation_vs_tau': by_tau,
        'slope_vs_tau': loglog_slope(taus, by_tau),
    }


def _num(v):
    return 'n/a' if v is None else '{:.3f}'.format(v)


def _text(r):
    out = ['{} selection on {}, tau={:g}, n={}'.format(
        r['pattern'], r['lattice'], r['tau'], r['n']),
        '  effective: ' + r['ideal'],
        '  error norm {:.4e}, estimate {:.4e}, ratio {}'.format(
            r['error_norm'], r['estimate_norm'], _num(r['ratio']))]
    if r['exact'] is not None:
        out.append('  exact - ideal {:.4e}, exact - second order {:.4e}'.format(
            r['exact']['exact_minus_ideal'],
            r['exact']['exact_minus_second_order']))
    if r['unrealizable_frames']:
        out.append('  frames not reproduced by pulses: ' +
                   ', '.join(r['unrealizable_frames']))
    if 'scaling' in r:
        out.append('  slope vs n {}, slope vs tau {}'.format(
            _num(r['scaling']['slope_vs_n']),
            _num(r['scaling']['slope_vs_tau'])))
    if 'cleanup' in r:
        out.append('  after echo: ' + r['cleanup']['effective'])
    return '\n'.join(out)


def run(args):
    spec = lattice_spec(args)
    pattern = select_pattern(spec, args.pattern, args.edge)
    report = perturbation_norm_report(spec, pattern, args.tau, args.n,
                                      cross_weight=args.cross_weight)
    if args.scaling and spec.n_qubits <= MAX_QUBITS:
        report['scaling'] = scaling_study(spec, pattern, args.tau, args.n)
    if args.cleanup:
        report['cleanup'] = z_echo_cleanup(pattern.ideal(spec)).as_dict()
    finish(report, args, text=_text(report), records=[report],
           columns=COLUMNS)
    return CHECK_FAILED if report['unrealizable_frames'] else SUCCESS
