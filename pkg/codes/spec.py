from dataclasses import dataclass, field
from itertools import combinations

from pauli import PauliSum, PauliFormatError, commutes, parse_string
from codes.chain import ChainFormatError, meaningful_lines

KINDS = ('XY', 'Ising')


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """
    Stabilizer code with the chains that generate its Hamiltonian.

    Generators and logical operators are phase-free PauliStrings. ``modified``
    maps a generator number (1-based) to the qubit whose X is swapped for Y
    when the code is encoded by quarter-turn exponentials; ``encode_order``
    lists the generator numbers in the order the exponentials act.
    """
    name: str
    n: int
    generators: tuple
    logical_x: object
    logical_z: object
    title: str = ''
    chains: dict = field(default_factory=dict)
    modified: dict = field(default_factory=dict)
    encode_order: tuple = ()
    encoding: str = 'projector'
    ghz_blocks: tuple = ()

    @property
    def k(self):
        return self.n - len(self.generators)

    @property
    def h_ini(self):
        """Initial Hamiltonian per coupling kind."""
        return {kind: chain.h_ini for kind, chain in self.chains.items()}

    def stabilizer_sum(self, indices=None):
        """Sum of the generators (all, or the 1-based numbers given)."""
        picked = self.generators if indices is None else \
            [self.generators[i - 1] for i in indices]
        return PauliSum.from_strings(self.n, [(g, 1.0) for g in picked])

    def hamiltonian(self):
        """-sum G_i; its ground space is the code space."""
        return -self.stabilizer_sum()

    def check(self):
        """Return the list of violated structural properties (empty if none)."""
        problems = []
        for a, b in combinations(range(len(self.generators)), 2):
            if not commutes(self.generators[a], self.generators[b]):
                problems.append('G{} and G{} anticommute'.format(a + 1, b + 1))
        if commutes(self.logical_x, self.logical_z):
            problems.append('logical X commutes with logical Z')
        for i, g in enumerate(self.generators, 1):
            for name, op in (('X', self.logical_x), ('Z', self.logical_z)):
                if not commutes(g, op):
                    problems.append('logical {} anticommutes with G{}'.format(
                        name, i))
        if not independent(self.generators):
            problems.append('generators are dependent')
        return problems


def independent(strings):
    """Rank of the symplectic (x|z) rows over GF(2) equals their count."""
    rows = [(p.z << p.n_qubits) | p.x for p in strings]
    rank = 0
    for bit in reversed(range(2 * strings[0].n_qubits if strings else 0)):
        pivot = next((r for r in rows if (r >> bit) & 1), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if (r >> bit) & 1 else r for r in rows]
        rank += 1
    return rank == len(strings)


def _pairs(value):
    out = {}
    for item in value.split(';'):
        j, _, q = item.partition(':')
        out[int(j)] = int(q) - 1
    return out


def parse_code(text, name=''):
    header = {}
    for number, raw in meaningful_lines(text):
        key, sep, value = raw.partition(':')
        if not sep:
            raise ChainFormatError("code {!r} line {}: expected 'key: value'"
                                   .format(name, number))
        header[key.strip()] = value.strip()
    try:
        n = int(header['n'])
        generators = tuple(parse_string(g.strip(), n)
                           for g in header['generators'].split(';'))
        logical_x = parse_string(header['logical_x'], n)
        logical_z = parse_string(header['logical_z'], n)
    except KeyError as e:
        raise ChainFormatError("code {!r} misses {}".format(name, e))
    except PauliFormatError as e:
        raise ChainFormatError("code {!r}: {}".format(name, e))
    blocks = tuple(tuple(int(q) - 1 for q in block.split(','))
                   for block in header['ghz_blocks'].split(';')) \
        if 'ghz_blocks' in header else ()
    return CodeSpec(
        name=header.get('name', name),
        title=header.get('title', ''),
        n=n,
        generators=generators,
        logical_x=logical_x,
        logical_z=logical_z,
        modified=_pairs(header['modified']) if 'modified' in header else {},
        encode_order=tuple(int(j) for j in header['encode_order'].split(';'))
        if 'encode_order' in header else (),
        encoding=header.get('encoding', 'projector'),
        ghz_blocks=blocks,
    )
