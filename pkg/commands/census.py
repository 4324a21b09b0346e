from commands import SUCCESS
from commands.common import cost_model, selected_pairs
from compiler.build import compile_code
from compiler.cost import cost, pulse_census
from utilities.utils import finish

COLUMNS = ('code', 'kind', 'n_interaction_uses', 'n_single_rotations',
           'n_pulses_total', 'N_P', 'op_units', 'rot_units', 'total_ns')


def run(args):
    model = cost_model(args)
    rows = []
    for code, kind in selected_pairs(args):
        seq = compile_code(code, kind,
                           tolerate_mismatch=args.tolerate_mismatch)
        row = {'code': code.name, 'kind': kind}
        row.update(pulse_census(seq))
        row['total_ns'] = cost(seq, model).total_ns
        rows.append(row)
    text = '\n'.join('{code} {kind}: {n_interaction_uses} interaction uses, '
                     '{n_single_rotations} rotations, {n_pulses_total} pulses,'
                     ' {total_ns:g} ns'.format(**r) for r in rows)
    finish({'rows': rows}, args, text=text, records=rows, columns=COLUMNS)
    return SUCCESS
