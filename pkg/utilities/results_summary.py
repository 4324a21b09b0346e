from operator import itemgetter

import numpy as np


def get_data(result_json, tag, wrt):
    """(r[wrt], r[tag]) pairs from records that carry both."""
    data = []
    for r in result_json:
        if tag in r and wrt in r:
            data.append((r[wrt], r[tag]))
    data.sort(key=itemgetter(0))
    return data


def loglog_slope(xs, ys):
    """Least-squares slope of log y against log x."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    keep = (xs > 0) & (ys > 0)
    if keep.sum() < 2:
        return None
    slope, _ = np.polyfit(np.log(xs[keep]), np.log(ys[keep]), 1)
    return float(slope)


def fidelity_sweep_summary(results):
    """Infidelity against sigma, measured and predicted, with fitted slopes."""
    for r in results:
        r['infidelity'] = 1.0 - r['mean_F']
        r['predicted_infidelity'] = 1.0 - r['predicted_F']
    measured = get_data(results, 'infidelity', 'sigma')
    predicted = get_data(results, 'predicted_infidelity', 'sigma')
    return {
        'sigma': [s for s, _ in measured],
        'infidelity': [v for _, v in measured],
        'predicted_infidelity': [v for _, v in predicted],
        'slope': loglog_slope(*zip(*measured)) if measured else None,
        'predicted_slope': loglog_slope(*zip(*predicted))
        if predicted else None,
    }

