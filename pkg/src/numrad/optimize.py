"""Small one-dimensional search helpers shared by the optimizers."""
from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_max(f: Callable[[float], float], a: float, b: float, width: float = 1e-12):
    """Maximize a unimodal ``f`` on ``[a, b]`` by golden-section search.

    Returns ``(x, f(x))`` for the best point seen; the final bracket is no
    wider than ``width``.
    """
    if b < a:
        a, b = b, a
    h = b - a
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    fc, fd = f(c), f(d)
    best = max((fc, c), (fd, d), key=lambda t: t[0])
    while h > width:
        h *= INV_PHI
        if fc >= fd:
            b, d, fd = d, c, fc
            c = a + INV_PHI2 * h
            fc = f(c)
            if fc > best[0]:
                best = (fc, c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * h
            fd = f(d)
            if fd > best[0]:
                best = (fd, d)
    return best[1], best[0]


def golden_min(f: Callable[[float], float], a: float, b: float, width: float = 1e-12):
    x, fx = golden_max(lambda t: -f(t), a, b, width)
    return x, -fx
