"""Exact real-root isolation for rational polynomials (Sturm sequences).

Used for the real place: locating the real roots of the degree-5
determinant polynomial, ordering them, and deciding signs of number field
elements under real embeddings.  Everything is interval arithmetic over Q;
no floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import DomainError, Poly, poly_gcd


def sturm_sequence(p: Poly):
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_changes(seq, x) -> int:
    signs = []
    for q in seq:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b]."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    sf = p // poly_gcd(p, p.derivative()) if poly_gcd(p, p.derivative()).degree > 0 else p
    seq = sturm_sequence(sf)
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lc = abs(p.lc)
    b = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + b / lc


def isolate_real_roots(p: Poly):
    """Disjoint rational intervals (a, b], one per distinct real root, sorted.

    The roots of multiple factors are merged; input need not be squarefree.
    """
    if p.is_zero():
        raise DomainError("zero polynomial")
    g = poly_gcd(p, p.derivative())
    sf = p // g if g.degree > 0 else p
    seq = sturm_sequence(sf)
    B = root_bound(sf)
    out = []

    def split(a, b, na, nb):
        count = na - nb
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        m = (a + b) / 2
        while sf(m) == 0:
            m = (a + m) / 2
        nm = _sign_changes(seq, m)
        split(a, m, na, nm)
        split(m, b, nm, nb)

    split(-B, B, _sign_changes(seq, -B), _sign_changes(seq, B))
    return sorted(out)


def refine(p: Poly, interval, width: Fraction):
    """Shrink an isolating interval of a root of p below the given width."""
    a, b = interval
    g = poly_gcd(p, p.derivative())
    sf = p // g if g.degree > 0 else p
    seq = sturm_sequence(sf)
    while b - a > width:
        m = (a + b) / 2
        if sf(m) == 0:
            # nudge the endpoint so the root stays interior-or-right
            eps = (b - a) / 4
            a, b = m - eps, m + eps
            if b - a <= width:
                break
            continue
        if _sign_changes(seq, a) - _sign_changes(seq, m) == 1:
            b = m
        else:
            a = m
    return a, b


def sign_at_root(modulus: Poly, interval, g: Poly) -> int:
    """Sign of g(theta) where theta is the root of `modulus` in `interval`.

    Returns -1, 0 or 1; exact.  `modulus` must be squarefree.
    """
    h = g % modulus
    if h.is_zero():
        return 0
    a, b = interval
    seq = sturm_sequence(modulus)
    hseq = sturm_sequence(h)
    while True:
        va, vb = h(a), h(b)
        if va != 0 and vb != 0 and (va > 0) == (vb > 0):
            if _sign_changes(hseq, a) - _sign_changes(hseq, b) == 0:
                return 1 if va > 0 else -1
        m = (a + b) / 2
        if modulus(m) == 0:
            # theta is exactly m, a rational root
            v = h(m)
            return 0 if v == 0 else (1 if v > 0 else -1)
        if _sign_changes(seq, a) - _sign_changes(seq, m) == 1:
            b = m
        else:
            a = m
