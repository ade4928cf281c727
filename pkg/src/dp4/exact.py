"""Exact rational arithmetic, univariate polynomials over Q, and factorization.

Rationals are plain ``fractions.Fraction`` objects (arbitrary precision,
always in lowest terms).  Polynomials are coefficient lists, lowest degree
first, wrapped in the immutable ``Poly`` class.  Everything downstream of
this module -- number fields, local symbols, pencils -- is built on these
two types, so nothing here is allowed to touch floating point.

Factorization over Q uses squarefree (Yun) decomposition followed by a
Zassenhaus round: factor modulo a good prime, Hensel lift, recombine.
Degrees in this project stay tiny (the determinant of a pencil is a
quintic; square testing in its residue fields needs degree <= 10), so
exhaustive recombination is fine.
"""

from __future__ import annotations

import math
import random as _random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

Rat = Fraction


def _to_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected an exact rational, got %r" % (x,))


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


class InternalCheckError(RuntimeError):
    """A cross-checked internal invariant failed; indicates a bug."""


class Poly:
    """Univariate polynomial over Q; coefficients lowest degree first.

    The zero polynomial is ``Poly([])``.  The coefficient tuple never has a
    trailing zero, so ``degree == len(coeffs) - 1`` for nonzero input.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def from_roots(roots) -> "Poly":
        p = Poly([1])
        for r in roots:
            p = p * Poly([-_to_rat(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "T" if i == 1 else "T^%d" % i
                terms.append(var if c == 1 else "%s*%s" % (c, var))
        return "Poly(" + " + ".join(reversed(terms)) + ")"

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _to_rat(other)
            return Poly([c * a for a in self.coeffs])
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([_to_rat(other)])

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d, lead = other.degree, other.lc
        while True:
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] / lead
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
        return Poly(q), Poly(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __call__(self, x):
        """Evaluate by Horner; x may be anything that multiplies Fractions."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift_arg(self, a) -> "Poly":
        """The polynomial p(T + a)."""
        out = Poly([])
        base = Poly([_to_rat(a), 1])
        for c in reversed(self.coeffs):
            out = out * base + Poly([c])
        return out

    def sort_key(self):
        return (self.degree, self.coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_gcdx(a: Poly, b: Poly):
    """Extended gcd: (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly([])
    t0, t1 = Poly([]), Poly([1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = 1 / r0.lc
    return r0 * c, s0 * c, t0 * c


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), made monic; the radical of p."""
    if p.is_zero():
        raise DomainError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return (p // g).monic()


def _res_core(a: Poly, b: Poly) -> Fraction:
    # invariant: deg a >= 1
    if b.degree == 0:
        return b.lc ** a.degree
    r = a % b
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (a.degree * b.degree) % 2 == 1 else 1
    return sign * b.lc ** (a.degree - r.degree) * _res_core(b, r)


def resultant(p: Poly, q: Poly) -> Fraction:
    """Resultant of p and q (Euclidean recursion with the classical signs)."""
    if p.is_zero() or q.is_zero():
        raise DomainError("resultant requires nonzero polynomials")
    if p.degree == 0:
        return p.lc ** q.degree
    return _res_core(p, q)


def resultant_sylvester(p: Poly, q: Poly) -> Fraction:
    """Resultant as a Sylvester determinant; independent of `resultant`."""
    m, n = p.degree, q.degree
    if m < 0 or n < 0:
        raise DomainError("resultant requires nonzero polynomials")
    if m == 0:
        return p.lc ** n
    if n == 0:
        return q.lc ** m
    size = m + n
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - i - n - 1))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col] != 0:
                fct = rows[r][col] * inv
                for c in range(col, size):
                    rows[r][c] -= fct * rows[col][c]
    return det


# ---------------------------------------------------------------------------
# integer utilities
# ---------------------------------------------------------------------------

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the integer sizes this project meets."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # this base set is proven correct for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        x = y = seed % n
        c = seed
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factor_int(n: int) -> dict:
    """Prime factorization of |n| as {prime: exponent}; the sign is dropped."""
    n = abs(n)
    if n == 0:
        raise DomainError("cannot factor 0")
    out: dict = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 49
    while p * p <= n and p < 100000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def squarefree_int(r) -> int:
    """Signed squarefree representative of the square class of r in Q*."""
    r = _to_rat(r)
    if r == 0:
        raise DomainError("0 has no square class")
    n = r.numerator * r.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factor_int(n).items():
        if e % 2 == 1:
            out *= p
    return sign * out


def rational_sqrt(r):
    """Exact square root of r if r is a square in Q, else None."""
    r = _to_rat(r)
    if r < 0:
        return None
    a, b = r.numerator, r.denominator
    sa, sb = math.isqrt(a), math.isqrt(b)
    if sa * sa == a and sb * sb == b:
        return Fraction(sa, sb)
    return None


def valuation(r, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    r = _to_rat(r)
    if r == 0:
        raise DomainError("valuation of 0")
    v = 0
    n = r.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = r.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def unit_part(r, p: int) -> Fraction:
    """r / p^v(r): the p-adic unit part of a nonzero rational."""
    return _to_rat(r) / Fraction(p) ** valuation(r, p)


# ---------------------------------------------------------------------------
# arithmetic in F_p[x]  (plain int lists, low degree first)
# ---------------------------------------------------------------------------


def _pnormal(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _pnormal(
        [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)], p
    )


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _pnormal(
        [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)], p
    )


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pnormal(out, p)


def _pdivmod(a, b, p):
    a = [c % p for c in a]
    db, lb = len(b) - 1, b[-1] % p
    inv = pow(lb, p - 2, p)
    q = [0] * max(0, len(a) - db)
    while True:
        while a and a[-1] % p == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        k = len(a) - 1 - db
        c = a[-1] * inv % p
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = (a[k + i] - c * y) % p
        a.pop()
    return _pnormal(q, p), _pnormal(a, p)


def _pgcd(a, b, p):
    a, b = _pnormal(a, p), _pnormal(b, p)
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _pgcdx(a, b, p):
    r0, r1 = _pnormal(a, p), _pnormal(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[-1], p - 2, p)
    return (
        [c * inv % p for c in r0],
        [c * inv % p for c in s0],
        [c * inv % p for c in t0],
    )


def _ppowmod(a, e, mod, p):
    out = [1]
    a = _pdivmod(a, mod, p)[1]
    while e:
        if e & 1:
            out = _pdivmod(_pmul(out, a, p), mod, p)[1]
        a = _pdivmod(_pmul(a, a, p), mod, p)[1]
        e >>= 1
    return out


def _factor_mod_p(f, p, rng):
    """Factor squarefree monic f over F_p into monic irreducibles."""
    # distinct-degree stage
    pieces = []
    x = [0, 1]
    h = x
    v = list(f)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, v, p)
        g = _pgcd(_psub(h, x, p), v, p)
        if len(g) - 1 > 0:
            pieces.append((g, d))
            v = _pdivmod(v, g, p)[0]
            h = _pdivmod(h, v, p)[1]
    if len(v) - 1 > 0:
        pieces.append((v, len(v) - 1))
    # equal-degree stage (Cantor-Zassenhaus; trace map for p = 2)
    out = []
    for g, d in pieces:
        stack = [g]
        while stack:
            u = stack.pop()
            if len(u) - 1 == d:
                out.append(u)
                continue
            while True:
                a = _pnormal([rng.randrange(p) for _ in range(len(u) - 1)], p)
                if not a:
                    continue
                if p == 2:
                    t = list(a)
                    acc = list(a)
                    for _ in range(d - 1):
                        t = _pdivmod(_pmul(t, t, 2), u, 2)[1]
                        acc = _padd(acc, t, 2)
                    w = _pgcd(acc, u, 2)
                else:
                    b = _ppowmod(a, (p ** d - 1) // 2, u, p)
                    w = _pgcd(_psub(b, [1], p), u, p)
                if 1 <= len(w) - 1 < len(u) - 1:
                    stack.append(w)
                    stack.append(_pdivmod(u, w, p)[0])
                    break
    return out


# ---------------------------------------------------------------------------
# Hensel lifting and Zassenhaus recombination
# ---------------------------------------------------------------------------


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _hensel_linear_step(f, g, h, s, t, p, k, pe):
    """One linear Hensel step for monic f = g*h, from mod p^k to mod p^(k+1).

    f, g, h are integer lists with f = g*h mod p^k, all monic; s*g + t*h = 1
    mod p with deg s < deg h, deg t < deg g.  Coefficients stay reduced mod pe.
    """
    pk = p ** k
    gh = _zmul(g, h)
    n = max(len(f), len(gh))
    e = [(((f[i] if i < len(f) else 0) - (gh[i] if i < len(gh) else 0)) % pe) // pk % p
         for i in range(n)]
    e = _pnormal(e, p)
    q, r = _pdivmod(_pmul(s, e, p), h, p)
    u = _padd(_pmul(t, e, p), _pmul(q, g, p), p)
    # the combination t*e + q*g has degree < deg g; r has degree < deg h
    g2 = [(g[i] + pk * (u[i] if i < len(u) else 0)) % pe for i in range(len(g))]
    h2 = [(h[i] + pk * (r[i] if i < len(r) else 0)) % pe for i in range(len(h))]
    g2[-1] = g[-1]
    h2[-1] = h[-1]
    return g2, h2


def _lift_split(f, parts, p, e_stop, pe):
    """Lift the coprime mod-p split of monic f to mod p^e_stop, recursively.

    `parts` is a list of monic mod-p factors whose product is f mod p.
    Returns the list of lifted integer factor lists (each monic, mod pe).
    """
    if len(parts) == 1:
        return [[c % pe for c in f]]
    mid = len(parts) // 2
    g = [1]
    for u in parts[:mid]:
        g = _pmul(g, u, p)
    h = [1]
    for u in parts[mid:]:
        h = _pmul(h, u, p)
    _one, s, t = _pgcdx(g, h, p)
    G, H = [c % pe for c in g], [c % pe for c in h]
    k = 1
    while p ** k < pe:
        G, H = _hensel_linear_step(f, G, H, s, t, p, k, pe)
        k += 1
    return _lift_split(G, parts[:mid], p, e_stop, pe) + _lift_split(H, parts[mid:], p, e_stop, pe)


def _balanced(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _content(ints):
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    return g or 1


def _zdivmod_exact(a, b):
    """Exact division of integer polynomials: (quotient, True) or (None, False)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * max(0, len(a) - db)
    while True:
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        if a[-1] % lb != 0:
            return None, False
        k = len(a) - 1 - db
        c = a[-1] // lb
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
        a.pop()
    if any(a):
        return None, False
    return q, True


def _next_prime(p):
    p += 1
    while not is_prime(p):
        p += 1
    return p


def _factor_squarefree_Z(F):
    """Factor a primitive squarefree integer polynomial with lc > 0, deg >= 1.

    Returns a list of primitive irreducible integer polynomials (lc > 0).
    """
    n = len(F) - 1
    if n == 1:
        return [F]
    norm2 = math.isqrt(sum(c * c for c in F)) + 1
    bound = abs(F[-1]) * (2 ** n) * norm2
    rng = _random.Random((n << 20) ^ (abs(F[0]) % 65521) ^ ((abs(F[-1]) % 65521) << 5))
    p = 2
    while True:
        p = _next_prime(p)
        if F[-1] % p == 0:
            continue
        Fp = _pnormal(F, p)
        if len(Fp) - 1 != n:
            continue
        dF = _pnormal([i * c for i, c in enumerate(F)][1:], p)
        if len(_pgcd(Fp, dF, p)) == 1:
            break
    lc_inv = pow(F[-1] % p, p - 2, p)
    monic_p = _pmul([lc_inv], Fp, p)
    mod_factors = _factor_mod_p(monic_p, p, rng)
    mod_factors.sort(key=lambda g: (len(g), tuple(g)))
    if len(mod_factors) == 1:
        return [F]
    pe = p
    e = 1
    while pe <= 2 * bound:
        pe *= p
        e += 1
    f_monic = [(c * pow(F[-1], -1, pe)) % pe for c in F]
    lifted = _lift_split(f_monic, mod_factors, p, e, pe)
    # recombination
    remaining = list(range(len(lifted)))
    out = []
    cur = list(F)
    size = 1
    while 2 * size <= len(remaining):
        hit = None
        for subset in combinations(remaining, size):
            prod = [cur[-1] % pe]
            for i in subset:
                prod = [c % pe for c in _zmul(prod, lifted[i])]
            cand = [_balanced(c, pe) for c in prod]
            cg = _content(cand)
            cand = [c // cg for c in cand]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            q, ok = _zdivmod_exact(cur, cand)
            if ok:
                out.append(cand)
                cur = q
                hit = subset
                break
        if hit is not None:
            remaining = [i for i in remaining if i not in hit]
        else:
            size += 1
    while cur and cur[-1] == 0:
        cur.pop()
    if len(cur) - 1 >= 1:
        cg = _content(cur)
        cur = [c // cg for c in cur]
        if cur[-1] < 0:
            cur = [-c for c in cur]
        out.append(cur)
    return out


@dataclass(frozen=True)
class Factorization:
    """unit * prod(poly^mult) equals the factored input; factors are monic."""

    unit: Fraction
    factors: tuple  # of (Poly, int), deterministically ordered

    def expand(self) -> Poly:
        p = Poly([self.unit])
        for g, m in self.factors:
            for _ in range(m):
                p = p * g
        return p


def _yun_squarefree(f: Poly):
    """Yun decomposition of monic f: list of (monic squarefree, multiplicity)."""
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
            b = b // g
            c = d // g
        else:
            c = d
        d = c - b.derivative()
        i += 1
    return out


def factor(p: Poly) -> Factorization:
    """Factor a nonzero polynomial over Q into monic irreducibles.

    Output ordering is deterministic (by degree, then lexicographically on
    the coefficient tuple), so downstream reports are byte-stable.
    """
    if p.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    unit = p.lc
    if p.degree == 0:
        return Factorization(unit, ())
    f = p.monic()
    factors = []
    for g, mult in _yun_squarefree(f):
        den = 1
        for c in g.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        G = [int(c * den) for c in g.coeffs]
        cg = _content(G)
        G = [c // cg for c in G]
        if G[-1] < 0:
            G = [-c for c in G]
        for Fi in _factor_squarefree_Z(G):
            factors.append((Poly(Fi).monic(), mult))
    factors.sort(key=lambda fm: fm[0].sort_key())
    result = Factorization(unit, tuple(factors))
    if result.expand() != p:
        raise InternalCheckError("factorization does not multiply back to the input")
    return result


def rational_roots(p: Poly):
    """Sorted list of the rational roots of p (each listed once)."""
    return sorted(
        Fraction(-g[0], g[1]) for g, _m in factor(p).factors if g.degree == 1
    )
