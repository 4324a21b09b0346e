"""
Schedule export.

JSON: one object per scheduled step, in conjugation order, segments one
after the other. CSV columns (stable): segment, index, kind, label, ops,
op_units, rot_units, start_op_units, start_rot_units, start_ns, duration_ns.
"""

import csv
import json

from pauli import AxisRotation, IsingEdge, XYEdge
from pauli.angles import format_angle
from compiler.cost import CostModel

CSV_COLUMNS = ('segment', 'index', 'kind', 'label', 'ops', 'op_units',
               'rot_units', 'start_op_units', 'start_rot_units', 'start_ns',
               'duration_ns')


def _expr(a, b):
    return '{}*tau_op + {}*tau_rot'.format(a, b)


def op_record(op):
    if isinstance(op, AxisRotation):
        return {'type': 'rotation', 'qubits': [op.qubit + 1], 'axis': op.axis,
                'angle': format_angle(op.angle)}
    edge = {XYEdge: 'XY', IsingEdge: 'ZZ'}[type(op)]
    return {'type': 'edge', 'qubits': [op.i + 1, op.j + 1], 'edge': edge,
            'angle': format_angle(op.angle)}


def schedule_records(seq, model=None):
    model = model or CostModel()
    records = []
    for seg in seq.segments:
        a0 = b0 = 0
        for index, step in enumerate(seg.steps):
            a, b = step.duration
            records.append({
                'segment': seg.name,
                'index': index,
                'kind': step.kind,
                'label': step.label,
                'ops': [op_record(op) for op in step.ops],
                'op_units': a,
                'rot_units': b,
                'start_op_units': a0,
                'start_rot_units': b0,
                't_start_expr': _expr(a0, b0),
                'duration_expr': _expr(a, b),
                'start_ns': model.evaluate(a0, b0),
                'duration_ns': model.evaluate(a, b),
            })
            a0, b0 = a0 + a, b0 + b
    return records


def dumps(records):
    return json.dumps(records, indent=1, sort_keys=True)


def ops_text(ops):
    return ' '.join('{}{}'.format(o.get('axis', o.get('edge')),
                                  ','.join(str(q) for q in o['qubits'])) +
                    '[{}]'.format(o['angle']) for o in ops)


def csv_row(r):
    row = {k: r[k] for k in CSV_COLUMNS}
    row['ops'] = ops_text(r['ops'])
    return row


def write_csv(records, outfile):
    writer = csv.DictWriter(outfile, fieldnames=CSV_COLUMNS,
                            lineterminator='\n')
    writer.writeheader()
    for r in records:
        writer.writerow(csv_row(r))
