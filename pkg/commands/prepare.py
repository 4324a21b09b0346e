import torch

from commands import CHECK_FAILED, SUCCESS
from commands.common import selected_codes
from simulate.encoding import prepare_logical
from simulate.spectrum import (expectation, ground_space, principal_angle,
                               stabilizer_eigencheck)
from utilities.utils import finish

SPAN_TOL = 1e-8
COLUMNS = ('code', 'logical', 'eigenvalues_ok', 'logical_z',
           'ground_energy', 'ground_dimension', 'principal_angle')


def prepare_report(code, c):
    state = prepare_logical(code, c)
    checks = stabilizer_eigencheck(state, code)
    ground = ground_space(code.hamiltonian())
    logical = torch.stack([prepare_logical(code, 0), prepare_logical(code, 1)],
                          dim=1)
    angle = principal_angle(ground.basis, logical)
    return {
        'code': code.name,
        'logical': c,
        'eigenvalues': [1 if ok else None for ok in checks],
        'eigenvalues_ok': all(checks),
        'logical_z': round(expectation(state, code.logical_z), 12),
        'ground_energy': round(ground.energy, 9),
        'ground_dimension': ground.dimension,
        'principal_angle': angle,
        'ok': all(checks) and angle < SPAN_TOL,
    }


def _text(rows):
    out = []
    for r in rows:
        out.append('{} |{}>: generators {}  Z_L = {:+g}'.format(
            r['code'], r['logical'],
            ' '.join('+1' if v == 1 else '??' for v in r['eigenvalues']),
            r['logical_z']))
        out.append('  ground energy {:g}, degeneracy {}, span angle {:.2e}'
                   .format(r['ground_energy'], r['ground_dimension'],
                           r['principal_angle']))
    return '\n'.join(out)


def run(args):
    rows = [prepare_report(code, args.logical) for code in selected_codes(args)]
    ok = all(r['ok'] for r in rows)
    finish({'ok': ok, 'states': rows}, args, text=_text(rows), records=rows,
           columns=COLUMNS)
    return SUCCESS if ok else CHECK_FAILED
