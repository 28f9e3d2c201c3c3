"""Dense univariate polynomials over a finite field.

A polynomial ``c_0 + c_1 x + ... + c_d x^d`` is stored as the tuple
``(c_0, ..., c_d)`` with ``c_d`` nonzero; the zero polynomial is ``()``.
Coefficients belong to a field object (``BaseField`` or ``FieldTower``)
exposing ``zero``, ``one``, ``order``, ``add``, ``sub``, ``neg``, ``mul``,
``inv`` and ``index``.

Besides the ring operations this module holds the cyclotomic factorization
of ``x^n - 1`` (roots grouped by q-classes), the CRT solver and the
conjugate polynomial ``g_alpha``.
"""

import functools
from dataclasses import dataclass

from .cosets import q_class_partition
from .errors import (
    GcdOfZeros,
    InternalDescentFailure,
    MixedFields,
    NonCoprimeModuli,
    ZeroElement,
)
from .ntheory import multiplicative_order, prime_factors, split_p_power


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = list(coeffs)
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def monomial(cls, field, d, c=None):
        return cls(field, [field.zero] * d + [field.one if c is None else c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _check(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise MixedFields("polynomials over different coefficient fields")
        return other

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [F.zero] * (len(a) + len(b) - 1)
        add, mul, zero = F.add, F.mul, F.zero
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                if y != zero:
                    out[i + j] = add(out[i + j], mul(x, y))
        return Poly(F, out)

    def scale(self, c):
        F = self.field
        return Poly(F, [F.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        d = other.degree
        b = other.coeffs
        inv_lead = F.inv(b[-1])
        if len(r) <= d:
            return Poly(F), self
        quo = [F.zero] * (len(r) - d)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c == F.zero:
                continue
            c = F.mul(c, inv_lead)
            quo[k - d] = c
            for j in range(d + 1):
                if b[j] != F.zero:
                    r[k - d + j] = F.sub(r[k - d + j], F.mul(c, b[j]))
        return Poly(F, quo), Poly(F, r[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        out = Poly.constant(self.field, self.field.one)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __call__(self, x):
        """Evaluate at ``x`` by Horner's rule (``x`` in the coefficient field)."""
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def map_coeffs(self, field, fn):
        return Poly(field, [fn(c) for c in self.coeffs])

    def sort_key(self):
        # degree first, then the higher coefficients dominate
        return (self.degree, tuple(self.field.index(c) for c in reversed(self.coeffs)))


def gcd(f, g):
    """Monic gcd by Euclid's algorithm, normalising every remainder to be monic."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise GcdOfZeros("gcd(0, 0) is undefined")
    a, b = f.monic(), g.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


def xgcd(f, g):
    """Return ``(d, u, v)`` with ``u*f + v*g == d`` and ``d`` the monic gcd."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise GcdOfZeros("gcd(0, 0) is undefined")
    F = f.field
    one, zero = Poly.constant(F, F.one), Poly(F)
    r0, r1 = f, g
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    c = F.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def powmod(f, e, mod):
    out = Poly.constant(f.field, f.field.one) % mod
    base = f % mod
    while e:
        if e & 1:
            out = (out * base) % mod
        base = (base * base) % mod
        e >>= 1
    return out


def is_irreducible(f):
    """Rabin's test: ``x^(r^d) = x mod f`` and ``gcd(x^(r^(d/l)) - x, f) = 1``
    for every prime ``l | d``, where ``r`` is the size of the coefficient field."""
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    F = f.field
    x = Poly.monomial(F, 1)
    frob = [x]
    for _ in range(d):
        frob.append(powmod(frob[-1], F.order, f))
    if frob[d] != x % f:
        return False
    for ell in prime_factors(d):
        if gcd(frob[d // ell] - x, f).degree > 0:
            return False
    return True


def monic_polys(field, d):
    """Monic polynomials of degree ``d`` in increasing ``sort_key`` order."""
    r = field.order
    for idx in range(r ** d):
        coeffs = []
        for _ in range(d):
            idx, c = divmod(idx, r)
            coeffs.append(field.element(c))
        yield Poly(field, coeffs + [field.one])


def smallest_irreducible(field, d):
    for f in monic_polys(field, d):
        if d > 1 and f.coeffs[0] == field.zero:
            continue
        if is_irreducible(f):
            return f
    raise AssertionError("irreducible polynomials exist in every degree")


def xn_minus_1(field, n):
    return Poly(field, [field.neg(field.one)] + [field.zero] * (n - 1) + [field.one])


def crt_solve(moduli, residues):
    """The unique ``f`` with ``deg f < sum(deg m_i)`` and ``f = r_i (mod m_i)``."""
    if len(moduli) != len(residues) or not moduli:
        raise ValueError("need one residue per modulus")
    F = moduli[0].field
    for i, a in enumerate(moduli):
        for b in moduli[i + 1:]:
            if gcd(a, b).degree > 0:
                raise NonCoprimeModuli("CRT moduli must be pairwise coprime")
    total = Poly.constant(F, F.one)
    for m in moduli:
        total = total * m
    out = Poly(F)
    for m, r in zip(moduli, residues):
        cof = total // m
        _, u, _ = xgcd(cof, m)
        # cof * u == 1 (mod m)
        out = out + r * u % m * cof
    return out % total


def g_alpha(tower, alpha):
    """``sum_i alpha^(q^i) x^(n-1-i)`` as a polynomial over F_Q."""
    if alpha == tower.zero:
        raise ZeroElement("g_alpha needs a nonzero element")
    n = tower.n
    conj = tower.conjugates(alpha)
    return Poly(tower, [conj[n - 1 - j] for j in range(n)])


@dataclass(frozen=True)
class FactorizationXn1:
    """``x^n - 1 = (p_1 ... p_s)^multiplicity`` over F_q.

    ``factors[i]`` has the roots ``zeta^a`` for ``a`` in
    ``partition.classes[i]``, where ``zeta`` is a primitive ``n1``-th root of
    unity in ``aux`` (``n = p^t n1``).
    """

    n: int
    n1: int
    multiplicity: int
    partition: object
    factors: tuple
    aux: object
    zeta: object

    @property
    def s(self):
        return len(self.factors)

    @property
    def degrees(self):
        return tuple(f.degree for f in self.factors)

    def to_json(self):
        F = self.factors[0].field
        return [
            {
                "coeffs": [F.encode(c) for c in f.coeffs],
                "degree": f.degree,
                "multiplicity": self.multiplicity,
                "class_representative": rep,
            }
            for f, rep in zip(self.factors, self.partition.representatives)
        ]


def find_root_of_unity(aux, order):
    """First element in enumeration order whose ``(|aux|-1)/order`` power has exact order ``order``."""
    N = aux.order - 1
    if N % order:
        raise ValueError(f"{order} does not divide {N}")
    fs = prime_factors(order)
    for idx in range(1, aux.order):
        z = aux.pow(aux.element(idx), N // order)
        if all(aux.pow(z, order // r) != aux.one for r in fs):
            return z
    raise AssertionError("the multiplicative group is cyclic")


def descend(tower_big, c, exc=InternalDescentFailure):
    """Coerce an element of F_{q^w} that should lie in F_q down to F_q."""
    if tower_big.frobenius(c, 1) != c or any(x != tower_big.base.zero for x in c[1:]):
        raise exc(f"{c} is not in the base field")
    return c[0]


@functools.lru_cache(maxsize=None)
def factor_xn_minus_1(tower):
    base = tower.base
    q = base.order
    t, n1 = split_p_power(tower.n, base.p)
    part = q_class_partition(n1, q)
    w = multiplicative_order(q, n1)
    aux = tower.auxiliary(w)
    zeta = find_root_of_unity(aux, n1)
    X = Poly.monomial(aux, 1)
    factors = []
    for cls in part.classes:
        f = Poly.constant(aux, aux.one)
        for a in cls:
            f = f * (X - Poly.constant(aux, aux.pow(zeta, a)))
        factors.append(Poly(base, [descend(aux, c) for c in f.coeffs]))
    return FactorizationXn1(
        n=tower.n,
        n1=n1,
        multiplicity=base.p ** t,
        partition=part,
        factors=tuple(factors),
        aux=aux,
        zeta=zeta,
    )
