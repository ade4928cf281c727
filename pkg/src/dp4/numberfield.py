"""Arithmetic in the residue fields Q[T]/(g) of closed points (degree <= 5).

These fields carry the square classes attached to the singular members of a
pencil, so the two operations that matter are exact norms and exact square
testing.  Norms are resultants.  Square tests use a closed form in degree
<= 2 and a Trager-style norm/factor/certify loop in higher degree: every
positive answer is certified by an explicit square root, so the test can
never silently report a false positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    DomainError,
    InternalCheckError,
    Poly,
    Rat,
    factor,
    poly_gcdx,
    rational_sqrt,
    resultant,
    squarefree_int,
)
from .realroots import isolate_real_roots, sign_at_root


@dataclass(frozen=True)
class SquareClassQ:
    """An element of Q*/Q*^2: a signed squarefree integer representative."""

    representative: int

    def __post_init__(self):
        if self.representative == 0:
            raise DomainError("0 has no square class")
        if squarefree_int(self.representative) != self.representative:
            raise DomainError("representative must be squarefree")

    def __mul__(self, other: "SquareClassQ") -> "SquareClassQ":
        return SquareClassQ(squarefree_int(self.representative * other.representative))

    def is_trivial(self) -> bool:
        return self.representative == 1

    def __repr__(self):
        return "SquareClassQ(%d)" % self.representative


def square_class_of_rat(r) -> SquareClassQ:
    """The square class of a nonzero rational."""
    r = Fraction(r)
    if r == 0:
        raise DomainError("0 has no square class")
    return SquareClassQ(squarefree_int(r))


class NumberField:
    """Q[T]/(modulus) for a monic irreducible modulus of degree 1..5."""

    def __init__(self, modulus: Poly, check_irreducible: bool = True):
        modulus = modulus.monic()
        if modulus.degree < 1 or modulus.degree > 5:
            raise DomainError("supported field degrees are 1..5")
        if check_irreducible:
            fa = factor(modulus)
            if len(fa.factors) != 1 or fa.factors[0][1] != 1:
                raise DomainError("modulus is not irreducible over Q")
        self.modulus = modulus
        self.degree = modulus.degree
        self._real_intervals = None

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "NumberField(%r)" % (self.modulus,)

    def elem(self, value) -> "NFElem":
        """Coerce a rational, coefficient list, or Poly into this field."""
        if isinstance(value, NFElem):
            if value.field != self:
                raise DomainError("element of a different field")
            return value
        if isinstance(value, (int, Fraction, str)):
            coords = [Fraction(value)] + [Fraction(0)] * (self.degree - 1)
            return NFElem(self, tuple(coords))
        if isinstance(value, Poly):
            r = value % self.modulus
            coords = [r[i] for i in range(self.degree)]
            return NFElem(self, tuple(coords))
        coords = [Fraction(c) for c in value]
        if len(coords) != self.degree:
            raise DomainError("coordinate vector has the wrong length")
        return NFElem(self, tuple(coords))

    def zero(self) -> "NFElem":
        return self.elem(0)

    def one(self) -> "NFElem":
        return self.elem(1)

    def gen(self) -> "NFElem":
        """The image of T (a root of the modulus)."""
        if self.degree == 1:
            return self.elem(-self.modulus[0])
        return self.elem([0, 1] + [0] * (self.degree - 2))

    def real_root_intervals(self):
        """Isolating intervals for the real roots of the modulus, sorted."""
        if self._real_intervals is None:
            self._real_intervals = isolate_real_roots(self.modulus)
        return self._real_intervals

    # degree-2 helpers ------------------------------------------------------

    def quadratic_data(self):
        """(m, shift, scale): theta = shift + scale*sqrt(m), m squarefree.

        Only valid in degree 2.  The choice of sqrt branch is fixed once and
        is consistent across all elements of the field.
        """
        if self.degree != 2:
            raise DomainError("quadratic_data needs a degree 2 field")
        b, c = self.modulus[1], self.modulus[0]
        disc = b * b - 4 * c
        m = squarefree_int(disc)
        s2 = disc / m
        s = rational_sqrt(s2)
        if s is None:
            raise InternalCheckError("disc / its square class is not a square")
        return m, -b / 2, s / 2


class NFElem:
    """An element of a NumberField, stored on the power basis 1, T, .., T^(d-1)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)
        if len(self.coords) != field.degree:
            raise DomainError("coordinate vector has the wrong length")

    def lift(self) -> Poly:
        return Poly(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is not rational")
        return self.coords[0]

    def __eq__(self, other):
        return (
            isinstance(other, NFElem)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return "NFElem(%s)" % (self.lift(),)

    def _coerce(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            return other
        return self.field.elem(other)

    def __add__(self, other):
        other = self._coerce(other)
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NFElem(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem(self.field, tuple(Fraction(other) * a for a in self.coords))
        other = self._coerce(other)
        return self.field.elem(self.lift() * other.lift())

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        if self.is_zero():
            raise DomainError("division by zero in a number field")
        g, s, _t = poly_gcdx(self.lift(), self.field.modulus)
        if g.degree != 0:
            raise InternalCheckError("modulus not coprime to a nonzero element")
        return self.field.elem(s * (1 / g[0]))

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def conjugate(self) -> "NFElem":
        """The nontrivial conjugate; degree 2 only."""
        f = self.field
        if f.degree != 2:
            raise DomainError("conjugate needs a degree 2 field")
        a, b = self.coords
        # theta + theta' = -modulus[1]
        return f.elem([a - b * f.modulus[1], -b])

    def quad_parts(self):
        """(u, v, m) with self = u + v*sqrt(m), m the field's squarefree disc."""
        m, shift, scale = self.field.quadratic_data()
        a, b = self.coords
        return a + b * shift, b * scale, m

    def real_signs(self):
        """Signs of the element under each real embedding, in root order."""
        lifted = self.lift()
        return [
            sign_at_root(self.field.modulus, iv, lifted)
            for iv in self.field.real_root_intervals()
        ]


def norm(e: NFElem) -> Fraction:
    """Field norm down to Q.  Multiplicative; norm(r) = r^d for rational r."""
    if e.is_zero():
        raise DomainError("norm of 0 is excluded (square-class arithmetic)")
    return resultant(e.field.modulus, e.lift())


def trace(e: NFElem) -> Fraction:
    """Field trace down to Q."""
    f = e.field
    tot = Fraction(0)
    for i in range(f.degree):
        basis = [Fraction(0)] * f.degree
        basis[i] = Fraction(1)
        prod = e * f.elem(basis)
        tot += prod.coords[i]
    return tot


# ---------------------------------------------------------------------------
# square testing
# ---------------------------------------------------------------------------


def _is_square_quadratic(e: NFElem) -> bool:
    u, v, m = e.quad_parts()
    if v == 0:
        if rational_sqrt(u) is not None:
            return True
        return rational_sqrt(u / m) is not None
    n = u * u - v * v * m
    r = rational_sqrt(n)
    if r is None:
        return False
    # (x + y*sqrt(m))^2 = e  =>  x^2 = (u +- r)/2
    for rr in (r, -r):
        x2 = (u + rr) / 2
        x = rational_sqrt(x2)
        if x is None or x == 0:
            continue
        y = v / (2 * x)
        if x * x + y * y * m == u and 2 * x * y == v:
            return True
    return False


class _KPoly:
    """Thin polynomial layer over a NumberField, for gcds in square testing."""

    def __init__(self, field, coeffs):
        self.field = field
        cs = [field.elem(c) if not isinstance(c, NFElem) else c for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def divmod(self, other):
        q = [self.field.zero() for _ in range(max(0, self.degree() - other.degree() + 1))]
        r = list(self.coeffs)
        d = other.degree()
        inv = other.coeffs[-1].inverse()
        while True:
            while r and r[-1].is_zero():
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] * inv
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] = r[k + i] - c * b
        return _KPoly(self.field, q), _KPoly(self.field, r)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        inv = a.coeffs[-1].inverse()
        return _KPoly(self.field, [c * inv for c in a.coeffs])


def _lagrange_interpolate(points):
    """Poly through (x_i, y_i) pairs, exact."""
    total = Poly([])
    xs = [x for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        num = Poly([1])
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if i == j:
                continue
            num = num * Poly([-xj, 1])
            den *= xi - xj
        total = total + num * (yi / den)
    return total


def _is_square_trager(e: NFElem) -> bool:
    f = e.field.modulus
    d = f.degree
    lam = 0
    attempts = 0
    while True:
        attempts += 1
        if attempts > 40:
            raise InternalCheckError("square test failed to find a separating shift")
        lam = -lam if lam > 0 else -lam + 1
        # P(x) = Res_T(f(T), (x - lam*T)^2 - e(T)) by evaluation/interpolation
        pts = []
        xval = Fraction(-d - 1)
        while len(pts) < 2 * d + 1:
            xval += 1
            g = Poly([xval, -lam]) * Poly([xval, -lam]) - e.lift()
            if g.is_zero():
                continue
            pts.append((xval, resultant(f, g)))
        P = _lagrange_interpolate(pts)
        if P.degree != 2 * d:
            continue
        from .exact import poly_gcd

        if poly_gcd(P, P.derivative()).degree > 0:
            continue
        K = e.field
        theta = K.gen()
        # (x - lam*theta)^2 - e  =  x^2 - 2 lam theta x + lam^2 theta^2 - e
        quad = _KPoly(K, [theta * theta * (lam * lam) - e, theta * (-2 * lam), K.one()])
        for h, _m in factor(P).factors:
            hk = _KPoly(K, [K.elem(c) for c in h.coeffs])
            g = hk.gcd(quad)
            if g.degree() == 1:
                rho = g.coeffs[0] * g.coeffs[1].inverse() * (-1)
                y = rho - theta * lam
                if y * y == e:
                    return True
        return False


def is_square(e: NFElem) -> bool:
    """Exact test for membership in the square group of the field."""
    if e.is_zero():
        raise DomainError("0 is excluded from square-class arithmetic")
    d = e.field.degree
    if d == 1:
        return rational_sqrt(e.coords[0]) is not None
    # cheap necessary conditions first: the norm of a square is a square,
    # and a square is nonnegative under every real embedding
    if squarefree_int(norm(e)) != 1:
        return False
    for s in e.real_signs():
        if s < 0:
            return False
    if d == 2:
        return _is_square_quadratic(e)
    return _is_square_trager(e)


def sqrt_in_field(e: NFElem):
    """A square root of e in the field if one exists, else None (degree <= 2)."""
    if e.is_zero():
        return e
    f = e.field
    if f.degree == 1:
        r = rational_sqrt(e.coords[0])
        return None if r is None else f.elem(r)
    if f.degree != 2:
        raise DomainError("sqrt_in_field is implemented for degree <= 2")
    u, v, m = e.quad_parts()
    _m, shift, scale = f.quadratic_data()
    if v == 0:
        r = rational_sqrt(u)
        if r is not None:
            return f.elem(r)
        r = rational_sqrt(u / m)
        if r is not None:
            # sqrt = r*sqrt(m) = r*(theta - shift)/scale
            return f.elem([-r * shift / scale, r / scale])
        return None
    n = u * u - v * v * m
    r = rational_sqrt(n)
    if r is None:
        return None
    for rr in (r, -r):
        x = rational_sqrt((u + rr) / 2)
        if x is None or x == 0:
            continue
        y = v / (2 * x)
        # sqrt = x + y*sqrt(m); convert back to the power basis
        cand = f.elem([x - (y / scale) * shift, y / scale])
        if cand * cand == e:
            return cand
    return None


def rational_square_class_rep(e: NFElem):
    """For quadratic e with square norm class: squarefree eps with eps*e a square.

    Returns None when the norm of e is not a rational square class.  For a
    degree 1 field this is just the square class of e itself.
    """
    if e.is_zero():
        raise DomainError("0 has no square class")
    if e.field.degree == 1:
        return squarefree_int(e.coords[0])
    if e.field.degree != 2:
        raise DomainError("rational representatives only exist in degree <= 2")
    if squarefree_int(norm(e)) != 1:
        return None
    u, v, m = e.quad_parts()
    if v == 0:
        return squarefree_int(u)
    r = rational_sqrt(u * u - v * v * m)
    for rr in (r, -r):
        x = (u + rr) / v
        if x != 0:
            eps = squarefree_int(2 * x / v)
            check = e * eps
            if _is_square_quadratic(check):
                return eps
    raise InternalCheckError("no rational representative found despite square norm")
