"""
Bounded searches in M2(Z).

Idempotents of M2(Z) are 0, I and the matrices [[a,b],[c,1-a]] with a(1-a) = bc.
Units are enumerated row by row: a coprime first row (p, q) fixes the second row
up to adding multiples of (p, q). Both lists are ordered by the largest absolute entry.
"""
from functools import lru_cache
from math import ceil, floor, gcd

from sympy import divisors
from sympy.core.intfunc import igcdex

from ..smith.normal_form import smith_int


def _height(m) -> int:
    return max(abs(v) for row in m for v in row)


@lru_cache(maxsize=8)
def idempotent_candidates(bound: int) -> tuple:
    found = set()
    for a in range(-bound + 1, bound + 1):
        t = a * (1 - a)
        if t == 0:
            for x in range(-bound, bound + 1):
                found.add(((a, x), (0, 1 - a)))
                found.add(((a, 0), (x, 1 - a)))
            continue
        for b in divisors(abs(t)):
            if b > bound:
                break
            for sb in (b, -b):
                c = t // sb
                if abs(c) <= bound:
                    found.add(((a, sb), (c, 1 - a)))
    ordered = sorted(found, key=lambda m: (_height(m), m))
    return (((0, 0), (0, 0)), ((1, 0), (0, 1))) + tuple(ordered)


def _k_window(start: int, step: int, bound: int):
    """Range of k with |start + k*step| <= bound; None when empty, (None, None) when unconstrained."""
    if step == 0:
        return (None, None) if abs(start) <= bound else None
    lo, hi = (-bound - start) / step, (bound - start) / step
    if lo > hi:
        lo, hi = hi, lo
    lo, hi = ceil(lo), floor(hi)
    return (lo, hi) if lo <= hi else None


@lru_cache(maxsize=8)
def unit_candidates(bound: int) -> tuple:
    found = []
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            if gcd(p, q) != 1:
                continue
            x, y, _ = (int(t) for t in igcdex(p, q))
            for eps in (1, -1):
                # p*s - q*r = eps
                r0, s0 = -eps * y, eps * x
                wr, ws = _k_window(r0, p, bound), _k_window(s0, q, bound)
                if wr is None or ws is None:
                    continue
                # (p, q) is coprime, so at least one window is constrained
                windows = [w for w in (wr, ws) if w != (None, None)]
                lo, hi = max(w[0] for w in windows), min(w[1] for w in windows)
                for k in range(lo, hi + 1):
                    found.append(((p, q), (r0 + k * p, s0 + k * q)))
    return tuple(sorted(set(found), key=lambda m: (_height(m), m)))


def integer_inverse(m):
    """Inverse of a 2x2 integer matrix with determinant +-1, else None."""
    (a, b), (c, d) = m
    det = a * d - b * c
    if det not in (1, -1):
        return None
    return ((d * det, -b * det), (-c * det, a * det))


def is_unit_regular_int(m) -> bool:
    _, D, _ = smith_int(m)
    return D[0][0] in (0, 1) and D[1][1] in (0, 1)


def sub(x, y):
    return tuple(tuple(p - q for p, q in zip(rx, ry)) for rx, ry in zip(x, y))
