from commands import CHECK_FAILED, SUCCESS
from commands.common import cost_model, selected_pairs
from compiler.build import compile_code
from compiler.cost import cost, pulse_census
from compiler.export import CSV_COLUMNS, csv_row, schedule_records
from pauli import render
from simulate.dense import MAX_QUBITS, dense_conjugate, hs_norm_dense, to_matrix
from utilities.utils import finish

DENSE_TOL = 1e-10


def dense_residuals(seq):
    """Per segment: |W h_ini W^dagger - target| from dense unitaries."""
    out = {}
    for seg in seq.segments:
        got = dense_conjugate(seg.h_ini, seg.ops())
        out[seg.name] = hs_norm_dense(got - to_matrix(seg.target))
    return out


def _text(entries):
    out = []
    for e in entries:
        out.append('{} {}: {op_units} tau_op + {rot_units} tau_rot = '
                   '{total_ns:g} ns'.format(e['code'], e['kind'], **e['cost']))
        for r in e['schedule']:
            out.append('  {:>3d} {:18s} {:>9.2f} ns  {}'.format(
                r['index'], r['kind'], r['start_ns'], r['label']))
    return '\n'.join(out)


def run(args):
    model = cost_model(args)
    entries, records, ok = [], [], True
    for code, kind in selected_pairs(args):
        seq = compile_code(code, kind,
                           tolerate_mismatch=args.tolerate_mismatch)
        schedule = schedule_records(seq, model)
        entry = {
            'code': code.name,
            'kind': kind,
            'chain_verified': seq.report.ok,
            'target': render(seq.target()),
            'segments': [{'name': s.name, 'h_ini': render(s.h_ini),
                          'target': render(s.target)} for s in seq.segments],
            'cost': cost(seq, model).as_dict(),
            'census': pulse_census(seq),
            'schedule': schedule,
        }
        if args.dense_check and code.n <= MAX_QUBITS:
            residuals = dense_residuals(seq)
            entry['dense_residual'] = residuals
            ok = ok and all(v < DENSE_TOL for v in residuals.values())
        entries.append(entry)
        records.extend(csv_row(r) for r in schedule)
    finish({'sequences': entries}, args, text=_text(entries),
           records=records, columns=CSV_COLUMNS)
    return SUCCESS if ok else CHECK_FAILED
