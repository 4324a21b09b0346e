from commands import SUCCESS
from commands.common import cost_model, selected_pairs
from compiler.build import compile_code
from simulate.fidelity import fidelity_monte_carlo
from utilities.results_summary import fidelity_sweep_summary
from utilities.utils import finish, make_bar

COLUMNS = ('code', 'kind', 'sigma', 'trials', 'seed', 'cycles',
           'distribution', 'mean_F', 'stderr', 'predicted_F', 'stated_F', 'N_P',
           'T')


def _text(runs):
    out = []
    for run_ in runs:
        for r in run_['results']:
            out.append('{} {} sigma={:g}: F = {:.6f} +- {:.1e}, '
                       'predicted {:.6f} (N_P={}, T={:g} ns)'.format(
                           r['code'], r['kind'], r['sigma'], r['mean_F'],
                           r['stderr'], r['predicted_F'], r['N_P'], r['T']))
        s = run_['summary']
        if s['slope'] is not None:
            out.append('  infidelity slope vs sigma {:.3f} (predicted {:.3f})'
                       .format(s['slope'], s['predicted_slope']))
    return '\n'.join(out)


def run(args):
    model = cost_model(args)
    runs, records = [], []
    for code, kind in selected_pairs(args):
        seq = compile_code(code, kind,
                           tolerate_mismatch=args.tolerate_mismatch)
        results = []
        for sigma in args.sigma:
            results.append(fidelity_monte_carlo(
                seq, code, sigma, args.trials, seed=args.seed,
                cycles=args.cycles, distribution=args.distribution,
                evolve_time=args.evolve_time, model=model,
                progress=make_bar(args, args.trials)))
        records.extend(results)
        runs.append({'code': code.name, 'kind': kind, 'results': results,
                     'summary': fidelity_sweep_summary(results)})
    finish({'runs': runs}, args, text=_text(runs), records=records,
           columns=COLUMNS)
    return SUCCESS
