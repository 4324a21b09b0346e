import os
from dataclasses import replace

from codes.chain import ChainFormatError, load_chain, meaningful_lines
from codes.spec import KINDS, parse_code

FIXTURE_ENV = 'STABGEN_FIXTURES'
BUILTIN = ('nine', 'five', 'steane')
DEFAULT_FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                'fixtures')


def fixture_dir(override=None):
    return override or os.environ.get(FIXTURE_ENV) or DEFAULT_FIXTURES


def chain_path(code_name, kind, fixtures=None):
    return os.path.join(fixture_dir(fixtures),
                        '{}_{}.chain'.format(code_name, kind.lower()))


def load_code(name, fixtures=None):
    """Code definition plus whichever of its XY/Ising chains exist."""
    path = os.path.join(fixture_dir(fixtures), name + '.code')
    if not os.path.exists(path):
        raise ChainFormatError("no code definition {!r} in {}".format(
            name, fixture_dir(fixtures)))
    with open(path) as f:
        code = parse_code(f.read(), name)
    chains = {}
    for kind in KINDS:
        cpath = chain_path(code.name, kind, fixtures)
        if os.path.exists(cpath):
            chains[kind] = load_chain(cpath, code.n)
    return replace(code, chains=chains)


def builtin_codes(fixtures=None):
    return [load_code(name, fixtures) for name in BUILTIN]


def known_code(name, fixtures=None):
    """Builtin, or a .code definition in the fixture directory."""
    return name in BUILTIN or os.path.exists(
        os.path.join(fixture_dir(fixtures), name + '.code'))


def code_by_name(name, fixtures=None):
    if known_code(name, fixtures):
        return load_code(name, fixtures)
    raise KeyError(name)


def old_method_chains(fixtures=None):
    """Generator-by-generator reductions, keyed by (code, kind, generator)."""
    out = {}
    directory = fixture_dir(fixtures)
    codes = {}
    for fname in sorted(os.listdir(directory)):
        if not (fname.startswith('old_') and fname.endswith('.chain')):
            continue
        code_name = fname[len('old_'):].split('_')[0]
        if code_name not in codes:
            codes[code_name] = load_code(code_name, fixtures)
        chain = load_chain(os.path.join(directory, fname),
                           codes[code_name].n)
        out[(chain.code, chain.kind, chain.generator)] = chain
    return out


def read_table(name, fixtures=None):
    """Whitespace separated rows of a fixture table, comments dropped."""
    path = os.path.join(fixture_dir(fixtures), name)
    with open(path) as f:
        return [raw.split() for _, raw in meaningful_lines(f.read())]
