import math
import warnings

import numpy as np
import torch

from compiler.cost import CostModel, cost, pulse_census
from compiler.sequence import Evolution
from pauli import AxisRotation
from simulate.dense import apply_op, evolve_hamiltonian
from simulate.encoding import prepare_logical
from simulate.spectrum import ground_space

LARGE_SIGMA = 0.5
# a misrotation by delta leaks sin^2(delta/2) ~ delta^2/4 out of the code space
LEAKAGE_DIVISOR = 4.0
# constant of the closed form as usually quoted
STATED_DIVISOR = 8.0
DISTRIBUTIONS = ('gaussian', 'uniform')


def draw_deviations(gen, count, sigma, distribution='gaussian'):
    """Zero-mean deviations with standard deviation sigma."""
    if distribution == 'gaussian':
        return sigma * torch.randn(count, generator=gen, dtype=torch.float64)
    if distribution == 'uniform':
        u = torch.rand(count, generator=gen, dtype=torch.float64)
        return math.sqrt(3) * sigma * (2 * u - 1)
    raise ValueError("unknown distribution {!r}".format(distribution))


def run_timeline(state, timeline, n_qubits, deviations=None):
    """Evolve through a timeline; deviations feed the rotations in order."""
    k = 0
    for item in timeline:
        if isinstance(item, Evolution):
            state = evolve_hamiltonian(state, item.hamiltonian, item.time)
        elif isinstance(item, AxisRotation) and deviations is not None:
            state = apply_op(state, item, n_qubits, float(deviations[k]))
            k += 1
        else:
            state = apply_op(state, item, n_qubits)
    return state


def predicted_fidelity(n_pulses, sigma, cycles=1, divisor=LEAKAGE_DIVISOR):
    """1 - N_P sigma^2 t / (divisor T) at t = cycles * T."""
    return 1.0 - n_pulses * sigma ** 2 * cycles / divisor


def fidelity_monte_carlo(seq, code, sigma, trials, seed=0, cycles=1,
                         distribution='gaussian', evolve_time=1.0,
                         model=None, progress=None):
    """
    Ground-manifold population after ``cycles`` runs of the schedule with
    every rotation pulse off by an independent random angle. Interaction
    blocks are ideal, so N_P is the number of rotations in the timeline.
    Trial t draws from a generator seeded with seed + t.
    """
    assert trials > 0 and sigma >= 0
    notes = []
    if sigma >= LARGE_SIGMA:
        msg = "sigma {} rad is outside the small-error regime".format(sigma)
        warnings.warn(msg)
        notes.append(msg)
    timeline = seq.timeline(evolve_time)
    n_rot = sum(1 for item in timeline if isinstance(item, AxisRotation))
    ground = ground_space(code.hamiltonian())
    start = prepare_logical(code, 0)
    values = np.zeros(trials)
    for t in range(trials):
        gen = torch.Generator().manual_seed(seed + t)
        state = start
        for _ in range(cycles):
            delta = draw_deviations(gen, n_rot, sigma, distribution)
            state = run_timeline(state, timeline, code.n, delta)
        values[t] = ground.population(state)
        if progress is not None:
            progress.update(t, ' F {:.6f}'.format(values[:t + 1].mean()))
    n_p = pulse_census(seq)['N_P']
    period = cost(seq, model or CostModel()).total_ns
    return {
        'code': seq.code,
        'kind': seq.kind,
        'sigma': sigma,
        'trials': trials,
        'seed': seed,
        'cycles': cycles,
        'distribution': distribution,
        'mean_F': float(values.mean()),
        'stderr': float(values.std(ddof=1) / math.sqrt(trials))
        if trials > 1 else 0.0,
        'predicted_F': predicted_fidelity(n_p, sigma, cycles),
        'stated_F': predicted_fidelity(n_p, sigma, cycles, STATED_DIVISOR),
        'N_P': n_p,
        'T': period * cycles,
        'warnings': notes,
    }
