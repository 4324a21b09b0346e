from codes.library import BUILTIN, code_by_name
from codes.spec import KINDS
from compiler.cost import CostModel


def cost_model(args):
    return CostModel(tau_op_ns=args.tau_op_ns, tau_rot_ns=args.tau_rot_ns)


def selected_codes(args):
    names = BUILTIN if args.code == 'all' else (args.code,)
    return [code_by_name(name, args.fixtures_dir) for name in names]


def selected_pairs(args):
    """(CodeSpec, kind) for every requested combination."""
    kinds = KINDS if args.kind == 'all' else (args.kind,)
    return [(code, kind) for code in selected_codes(args) for kind in kinds]
