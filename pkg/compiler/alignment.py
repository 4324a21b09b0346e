"""Per-qubit rotations taking one signed Pauli sum onto another."""

from fractions import Fraction

from pauli import AxisRotation, PauliString, PauliSum, conjugate_elementary

OPTIONS = (None,) + tuple(
    AxisRotation(0, axis, angle)
    for angle in (Fraction(1, 2), Fraction(-1, 2), Fraction(1))
    for axis in ('x', 'y', 'z'))


def _letter_map(op):
    if op is None:
        return {'X': (1, 'X'), 'Y': (1, 'Y'), 'Z': (1, 'Z')}
    out = {}
    for letter in 'XYZ':
        h = PauliSum.from_strings(1, [(PauliString.single(1, 0, letter), 1.0)])
        (p, c), = list(conjugate_elementary(h, op))
        out[letter] = (int(c), p.letter(0))
    return out


MAPS = [_letter_map(op) for op in OPTIONS]


def _image(p, coeff, choice):
    letters, sign = {}, 1
    for q, letter in p.letters().items():
        s, new = MAPS[choice[q]][letter]
        letters[q] = new
        sign *= s
    return PauliString.from_letters(p.n_qubits, letters), sign * coeff


def _components(terms, n):
    parent = list(range(n))

    def root(q):
        while parent[q] != q:
            parent[q] = parent[parent[q]]
            q = parent[q]
        return q

    for p, _ in terms:
        support = p.support()
        for q in support[1:]:
            parent[root(q)] = root(support[0])
    groups = {}
    for q in range(n):
        groups.setdefault(root(q), []).append(q)
    return list(groups.values())


def align_single_qubit(h_from, h_to):
    """
    Rotation ops R (one per qubit at most) with conj(h_from, R) == h_to, or
    None. Identity is preferred on every qubit, then +-pi/2, then pi.
    """
    if h_from.n_qubits != h_to.n_qubits or len(h_from) != len(h_to):
        return None
    n = h_from.n_qubits
    terms = list(h_from)
    # a term is checked once its highest qubit is assigned
    ready = {q: [] for q in range(n)}
    for p, c in terms:
        support = p.support()
        ready[support[-1] if support else 0].append((p, c))
    choice = [0] * n

    def fits(q):
        for p, c in ready[q]:
            image, coeff = _image(p, c, choice)
            if h_to.coefficient(image) != coeff:
                return False
        return True

    def search(qubits, i):
        if i == len(qubits):
            return True
        q = qubits[i]
        for k in range(len(OPTIONS)):
            choice[q] = k
            if fits(q) and search(qubits, i + 1):
                return True
        choice[q] = 0
        return False

    for qubits in _components(terms, n):
        if not search(qubits, 0):
            return None
    return [AxisRotation(q, OPTIONS[k].axis, OPTIONS[k].angle)
            for q, k in enumerate(choice) if k]
