from codes.verify import verify_chain
from commands import CHECK_FAILED, SUCCESS
from commands.common import selected_pairs
from utilities.utils import finish

COLUMNS = ('code', 'kind', 'ok', 'lines_total', 'lines_matched')


def _text(reports):
    out = []
    for r in reports:
        out.append('{} {}: {}/{} lines matched{}'.format(
            r.code, r.kind, r.n_matched, r.n_lines,
            '' if r.ok else '  MISMATCH'))
        for line in r.failing_lines():
            out.append('  line {} [{}]'.format(line.line, line.annotation))
            for term, expected, got in line.diff:
                out.append('    {}: printed {:g}, replayed {:g}'.format(
                    term, expected, got))
    return '\n'.join(out)


def run(args):
    reports = [verify_chain(code, kind) for code, kind in selected_pairs(args)]
    ok = all(r.ok for r in reports)
    records = [r.as_dict() for r in reports]
    finish({'ok': ok, 'chains': records}, args, text=_text(reports),
           records=records, columns=COLUMNS)
    return SUCCESS if ok else CHECK_FAILED
