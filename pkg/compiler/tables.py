from codes.library import BUILTIN, builtin_codes, old_method_chains, read_table
from codes.spec import KINDS
from codes.verify import replay_chain
from compiler.build import compile_code
from compiler.cost import (CostModel, baseline_cost, baseline_rows,
                           chain_units, cost, improvement)
from pauli import render


def _number(text):
    return None if text == '-' else float(text)


def published_rows(fixtures=None):
    keys = ('old_op', 'old_rot', 'old_ns', 'new_op', 'new_rot', 'new_ns',
            'improvement', 'text_new_rot', 'text_old_ns')
    out = {}
    for row in read_table('published.table', fixtures):
        out[(row[0], row[1])] = dict(zip(keys, map(_number, row[2:])))
    return out


def _flags(row, pub):
    flags = []
    if pub is None:
        return flags
    if (pub['new_op'], pub['new_rot']) != (row['new_op_units'],
                                           row['new_rot_units']):
        flags.append('table lists {:g} tau_op + {:g} tau_rot, schedule gives '
                     '{} tau_op + {} tau_rot'.format(
                         pub['new_op'], pub['new_rot'], row['new_op_units'],
                         row['new_rot_units']))
    if pub['text_new_rot'] is not None:
        agrees = pub['text_new_rot'] == row['new_rot_units']
        flags.append('running text gives {:g} tau_rot ({})'.format(
            pub['text_new_rot'], 'agrees' if agrees else 'differs'))
    if (pub['old_op'], pub['old_rot']) != (row['old_op_units'],
                                           row['old_rot_units']):
        flags.append('table lists previous {:g} tau_op + {:g} tau_rot'.format(
            pub['old_op'], pub['old_rot']))
    if pub['text_old_ns'] is not None:
        flags.append('running text gives previous time {:g} ns'.format(
            pub['text_old_ns']))
    return flags


def generation_tables(model=None, fixtures=None):
    """One row per (code, kind): previous and new cost, improvement, flags."""
    model = model or CostModel()
    codes = {code.name: code for code in builtin_codes(fixtures)}
    published = published_rows(fixtures)
    rows = []
    for kind in KINDS:
        for name in BUILTIN:
            seq = compile_code(codes[name], kind, tolerate_mismatch=True)
            new = cost(seq, model)
            old = baseline_cost(name, kind, model, fixtures)
            row = {
                'code': name,
                'kind': kind,
                'old_op_units': old.n_op_units,
                'old_rot_units': old.n_rot_units,
                'old_ns': old.total_ns,
                'new_op_units': new.n_op_units,
                'new_rot_units': new.n_rot_units,
                'new_ns': new.total_ns,
                'improvement': round(improvement(old, new), 2),
                'chain_verified': seq.report.ok,
            }
            pub = published.get((name, kind))
            if pub is not None:
                row['published_improvement'] = pub['improvement']
            row['flags'] = _flags(row, pub)
            rows.append(row)
    return rows


def baseline_chain_checks(fixtures=None):
    """Replay the generator-by-generator chains and recount their cost."""
    chains = old_method_chains(fixtures)
    out = []
    for (code, kind, generator), chain in sorted(chains.items()):
        stated = next((int(r[3]), int(r[4]))
                      for r in baseline_rows(code, kind, fixtures)
                      if r[2] == generator)
        report = replay_chain(chain)
        units = chain_units(chain)
        out.append({
            'code': code,
            'kind': kind,
            'generator': generator,
            'verified': report.ok,
            'terminal': render(report.replayed_terminal),
            'units': list(units),
            'stated': list(stated),
            'agrees': report.ok and units == stated,
        })
    return out
