"""Angles as exact multiples of pi (Fraction) or plain radians (float)."""

import math
from fractions import Fraction

SNAP_TOL = 1e-12


def as_angle(theta):
    """
    Fractions are read as multiples of pi and kept exact. Floats are radians;
    a float within SNAP_TOL of a multiple of pi/8 is snapped to a Fraction.
    """
    if isinstance(theta, Fraction):
        return theta
    eighths = theta * 8 / math.pi
    nearest = round(eighths)
    if abs(eighths - nearest) < SNAP_TOL:
        return Fraction(nearest, 8)
    return float(theta)


def is_exact(theta):
    return isinstance(theta, Fraction)


def radians(theta):
    theta = as_angle(theta)
    if is_exact(theta):
        return float(theta) * math.pi
    return theta


def cos_sin_double(theta):
    """(cos 2theta, sin 2theta), exact when 2theta is a multiple of pi/2."""
    theta = as_angle(theta)
    if is_exact(theta) and (4 * theta).denominator == 1:
        quarter = int(4 * theta) % 4
        return [(1, 0), (0, 1), (-1, 0), (0, -1)][quarter]
    return math.cos(2 * radians(theta)), math.sin(2 * radians(theta))


def format_angle(theta):
    theta = as_angle(theta)
    if not is_exact(theta):
        return '{:.12g}'.format(theta)
    if theta == 0:
        return '0'
    sign = '-' if theta < 0 else ''
    num, den = abs(theta.numerator), theta.denominator
    body = 'pi' if num == 1 else '{}pi'.format(num)
    return sign + (body if den == 1 else '{}/{}'.format(body, den))
