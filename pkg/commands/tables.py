from commands import SUCCESS
from commands.common import cost_model
from compiler.tables import baseline_chain_checks, generation_tables
from utilities.utils import finish

COLUMNS = ('code', 'kind', 'old_op_units', 'old_rot_units', 'old_ns',
           'new_op_units', 'new_rot_units', 'new_ns', 'improvement',
           'published_improvement', 'chain_verified')
TITLES = {'XY': 'XY interaction', 'Ising': 'Ising interaction'}


def _text(rows, checks):
    out = []
    for kind in ('XY', 'Ising'):
        out.append('Generation time, {}'.format(TITLES[kind]))
        out.append('{:8s}{:>28s}{:>28s}{:>14s}'.format(
            'code', 'previous', 'this work', 'improvement'))
        for r in rows:
            if r['kind'] != kind:
                continue
            out.append('{:8s}{:>28s}{:>28s}{:>13.2f}%'.format(
                r['code'],
                '{}op+{}rot={:g}ns'.format(r['old_op_units'],
                                          r['old_rot_units'], r['old_ns']),
                '{}op+{}rot={:g}ns'.format(r['new_op_units'],
                                          r['new_rot_units'], r['new_ns']),
                r['improvement']))
            for flag in r['flags']:
                out.append('        note: ' + flag)
        out.append('')
    out.append('Generator-by-generator chains')
    for c in checks:
        out.append('  {} {} {}: {} units {}{}'.format(
            c['code'], c['kind'], c['generator'],
            'verified' if c['verified'] else 'UNVERIFIED',
            tuple(c['units']),
            '' if c['agrees'] else ' (stated {})'.format(tuple(c['stated']))))
    return '\n'.join(out)


def run(args):
    model = cost_model(args)
    rows = generation_tables(model, args.fixtures_dir)
    checks = baseline_chain_checks(args.fixtures_dir)
    report = {
        'tau_op_ns': model.tau_op_ns,
        'tau_rot_ns': model.tau_rot_ns,
        'rows': rows,
        'baseline_chains': checks,
    }
    finish(report, args, text=_text(rows, checks), records=rows,
           columns=COLUMNS)
    return SUCCESS
