import argparse
import datetime
import glob
import math
import os
import platform
import shutil

from codes.library import FIXTURE_ENV, fixture_dir, known_code
from codes.spec import KINDS
from lattice.spec import read_config

COMMANDS = ['verify', 'tables', 'compile', 'prepare', 'extract', 'fidelity',
            'census']
FORMATS = ['json', 'csv', 'text']

# lattice keys readable from --lattice-config, with their defaults
LATTICE_DEFAULTS = {
    'n_logical': 1,
    'n_phys': 5,
    'coupling_kind': 'XY',
    'j': 1.0,
    'omega': 1.0,
    'tau': 0.01,
    'n': 1,
    'pattern': 'H0',
    'edge': (2, 3),
}


class UsageError(ValueError):
    pass


def prepare_dir(args):
    x = datetime.datetime.now()
    datetimestring = str(x.hour) +\
        str(x.minute) + str(x.second) + "_" +\
        str(x.day) + str(x.month) + str(x.year)
    args.hpstring = args.command.title() + args.code.title() + \
        args.kind.title() + "Jhz" + '{:g}'.format(args.j_hz) + \
        "Trot" + '{:g}'.format(args.tau_rot_ns) + "Seed" + str(args.seed)
    if args.command == 'fidelity':
        args.hpstring = args.hpstring + 'Tr' + str(args.trials)
    if args.command == 'extract':
        args.hpstring = args.hpstring + args.pattern.title() + \
            str(args.n_logical) + 'x' + str(args.n_phys)
    args.hpstring = args.host + args.hpstring
    curr_dir = os.getcwd()
    args.results_dir = '/debug' if args.debug else '/results'
    args.results_dir = curr_dir + args.results_dir + args.hpstring +\
        "_" + datetimestring
    if args.clean_start:
        result_dirs = glob.glob('*' + args.hpstring + '*')
        for r in result_dirs:
            try:
                shutil.rmtree(r, ignore_errors=True)
            except OSError as e:
                print("Error: %s - %s." % (e.filename, e.strerror))
    if not os.path.exists(args.results_dir):
        os.makedirs(args.results_dir)


def _edge(value):
    if isinstance(value, str):
        value = value.replace(',', ' ').split()
    e = tuple(int(v) for v in value)
    if len(e) != 2:
        raise UsageError("edge needs two qubit indices, got {!r}".format(value))
    return e


def merge_lattice_args(args):
    """Config file values, overridden by explicit flags, over defaults."""
    config = read_config(args.lattice_config) if args.lattice_config else {}
    for key, default in LATTICE_DEFAULTS.items():
        attr = key if key != 'j' else 'J'
        flag = getattr(args, attr, None)
        if flag is not None:
            value = flag
        elif key in config:
            value = config[key]
        else:
            value = default
        if key == 'edge':
            value = _edge(value)
        elif key in ('n_logical', 'n_phys', 'n'):
            value = int(value)
        elif key in ('j', 'omega', 'tau'):
            value = float(value)
        setattr(args, attr, value)


def filter_args(args):
    if args.j_hz <= 0 or args.tau_rot_ns < 0:
        raise UsageError("device constants must be positive")
    if args.tau_op_ns is None:
        # tau_op = pi / (4 J), J = 2 pi j_hz
        args.tau_op_ns = 1e9 / (8 * args.j_hz)
    elif args.tau_op_ns <= 0:
        raise UsageError("--tau-op-ns must be positive")
    if args.fixtures_dir is None and FIXTURE_ENV in os.environ:
        args.fixtures_dir = os.environ[FIXTURE_ENV]
    if args.code != 'all' and not known_code(args.code, args.fixtures_dir):
        raise UsageError("unknown code {!r}: not builtin and no {}.code in {}"
                         .format(args.code, args.code,
                                 fixture_dir(args.fixtures_dir)))
    if args.trials < 1 or any(s < 0 or not math.isfinite(s)
                              for s in args.sigma):
        raise UsageError("need trials >= 1 and finite sigma >= 0")
    if args.cycles < 1:
        raise UsageError("--cycles must be at least 1")
    merge_lattice_args(args)
    if args.tau <= 0 or args.n < 1:
        raise UsageError("lattice tau must be positive and n at least 1")
    if args.command == 'prepare' and args.logical not in (0, 1):
        raise UsageError("--logical is 0 or 1")


def prepare_args(args):
    filter_args(args)
    args.host = platform.uname()[1].replace('.', '')
    if args.storeresults:
        prepare_dir(args)


def add_common_args(parser):
    common_parser = parser.add_argument_group(title='common arguments')
    common_parser.add_argument('command',
                               help='what to run',
                               choices=COMMANDS)
    common_parser.add_argument('--code',
                               default='five',
                               help='builtin code, a .code name in the '
                               'fixtures directory, or all')
    common_parser.add_argument('--kind',
                               default='XY',
                               help='interaction kind',
                               choices=list(KINDS) + ['all'])
    common_parser.add_argument('--format',
                               default='json',
                               help='report format',
                               choices=FORMATS)
    common_parser.add_argument('--out',
                               default=None,
                               help='write the report here instead of stdout')
    common_parser.add_argument('--seed',
                               type=int,
                               default=0,
                               metavar='S',
                               help='random seed (default: 0)')
    common_parser.add_argument('--no-progressbar',
                               action='store_true',
                               default=False,
                               help='do not show progressbar')
    common_parser.add_argument('--storeresults',
                               action='store_true',
                               default=False,
                               help='enables storing the results')
    common_parser.add_argument('--debug',
                               action='store_true',
                               default=False,
                               help='store under debug instead of results')
    common_parser.add_argument('--clean-start',
                               action='store_true',
                               default=False,
                               help='remove earlier results of the same run')


def add_device_args(parser):
    device_parser = parser.add_argument_group(title='device arguments')
    device_parser.add_argument('--j-hz',
                               type=float,
                               default=20e6,
                               help='coupling J/(2 pi) in Hz')
    device_parser.add_argument('--tau-rot-ns',
                               type=float,
                               default=1.0,
                               help='single-qubit rotation time in ns')
    device_parser.add_argument('--tau-op-ns',
                               type=float,
                               default=None,
                               help='interaction block time, overrides --j-hz')


def add_code_args(parser):
    code_parser = parser.add_argument_group(title='code arguments')
    code_parser.add_argument('--fixtures-dir',
                             default=None,
                             help='chain and code fixtures; defaults to $' +
                             FIXTURE_ENV + ' or the bundled set')
    code_parser.add_argument('--tolerate-mismatch',
                             action='store_true',
                             default=False,
                             help='compile chains with unresolved lines')
    code_parser.add_argument('--logical',
                             type=int,
                             default=0,
                             help='logical basis state to prepare')
    code_parser.add_argument('--dense-check',
                             action='store_true',
                             default=False,
                             help='also check compiled schedules densely')


def add_lattice_args(parser):
    lattice_parser = parser.add_argument_group(title='lattice arguments')
    lattice_parser.add_argument('--lattice-config',
                                default=None,
                                help='key = value file with lattice settings')
    lattice_parser.add_argument('--n-logical', type=int, default=None)
    lattice_parser.add_argument('--n-phys', type=int, default=None)
    lattice_parser.add_argument('--coupling-kind',
                                default=None,
                                choices=list(KINDS))
    lattice_parser.add_argument('--J', type=float, default=None,
                                help='coupling strength')
    lattice_parser.add_argument('--omega', type=float, default=None,
                                help='single-qubit amplitude')
    lattice_parser.add_argument('--tau', type=float, default=None,
                                help='frame duration')
    lattice_parser.add_argument('--n', type=int, default=None,
                                help='frame-cycle repetitions')
    lattice_parser.add_argument('--pattern',
                                default=None,
                                choices=['H0', 'edge'])
    lattice_parser.add_argument('--edge', nargs=2, type=int, default=None)
    lattice_parser.add_argument('--cross-weight',
                                type=float,
                                default=2.0,
                                help='weight of the [H_a, H_a\'] term')
    lattice_parser.add_argument('--scaling',
                                action='store_true',
                                default=False,
                                help='also fit error slopes versus n and tau')
    lattice_parser.add_argument('--cleanup',
                                action='store_true',
                                default=False,
                                help='echo the effective Hamiltonian with '
                                'pi flips about x to drop single-qubit Z')


def add_fidelity_args(parser):
    fidelity_parser = parser.add_argument_group(title='fidelity arguments')
    fidelity_parser.add_argument('--sigma',
                                 nargs='+',
                                 type=float,
                                 default=[0.01],
                                 help='pulse angle error(s) in rad')
    fidelity_parser.add_argument('--trials', type=int, default=200)
    fidelity_parser.add_argument('--cycles', type=int, default=1)
    fidelity_parser.add_argument('--distribution',
                                 default='gaussian',
                                 choices=['gaussian', 'uniform'])
    fidelity_parser.add_argument('--evolve-time',
                                 type=float,
                                 default=1.0,
                                 help='evolution time under h_ini')


def build_parser():
    parser = argparse.ArgumentParser(
        description='Stabilizer Hamiltonian pulse sequences')
    add_common_args(parser)
    add_device_args(parser)
    add_code_args(parser)
    add_lattice_args(parser)
    add_fidelity_args(parser)
    return parser


def prepare_experiment(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        prepare_args(args)
    except ValueError as e:
        parser.error(str(e))
    return args
