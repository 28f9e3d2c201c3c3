"""q-polynomials ``sum a_i x^(q^i)`` with coefficients in F_q.

Only the q-degree ``i`` is ever stored; the ordinary degree ``q^i`` is never
materialised.  Composition is the q-twisted convolution, and ``phi`` maps
``sum a_i x^i`` to ``sum a_i x^(q^i)``.
"""

import functools
import itertools

from .errors import NoAnnihilator, ZeroDivisor, ZeroElement
from .poly_ring import Poly, factor_xn_minus_1, xn_minus_1


class LinearizedPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == field.zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @property
    def q_degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinearizedPoly({list(self.coeffs)})"

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return LinearizedPoly(F, out)

    def __neg__(self):
        return LinearizedPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def to_json(self):
        return {"q_coeffs": [self.field.encode(c) for c in self.coeffs]}


def phi(f):
    """The ring isomorphism F_q[x] -> q-polynomials, ``x^i -> x^(q^i)``."""
    return LinearizedPoly(f.field, f.coeffs)


def phi_inverse(L):
    return Poly(L.field, L.coeffs)


def compose(L, K):
    """``L(K(x))``: the coefficient of ``x^(q^(i+j))`` collects ``a_i * b_j^(q^i)``."""
    F = L.field
    if not L or not K:
        return LinearizedPoly(F)
    out = [F.zero] * (len(L.coeffs) + len(K.coeffs) - 1)
    for i, a in enumerate(L.coeffs):
        if a == F.zero:
            continue
        for j, b in enumerate(K.coeffs):
            # the twist b^(q^i) is the identity on F_q
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return LinearizedPoly(F, out)


def evaluate(L, alpha, tower):
    """``sum a_i alpha^(q^i)`` in F_Q."""
    return evaluate_on_conjugates(L, tower.conjugates(alpha), tower)


def evaluate_on_conjugates(L, conj, tower):
    n = tower.n
    acc = tower.zero
    for i, a in enumerate(L.coeffs):
        if a:
            acc = tower.add(acc, tower.scalar_mul(a, conj[i % n]))
    return acc


def divides(L, M):
    """``L || M`` in the composition ring."""
    if not L:
        raise ZeroDivisor("divisibility by the zero q-polynomial")
    return (phi_inverse(M) % phi_inverse(L)).is_zero()


@functools.lru_cache(maxsize=None)
def divisor_lattice(tower):
    """Monic divisors of ``x^n - 1`` as ``(m, exponents)``, sorted by degree then coefficients."""
    fac = factor_xn_minus_1(tower)
    base = tower.base
    one = Poly.constant(base, base.one)
    powers = []
    for p in fac.factors:
        row = [one]
        for _ in range(fac.multiplicity):
            row.append(row[-1] * p)
        powers.append(row)
    out = []
    for exps in itertools.product(range(fac.multiplicity + 1), repeat=fac.s):
        m = one
        for p_row, e in zip(powers, exps):
            m = m * p_row[e]
        out.append((m, exps))
    out.sort(key=lambda t: t[0].sort_key())
    assert out[-1][0] == xn_minus_1(base, tower.n)
    return tuple(out)


def minimal_q_poly(alpha, tower, conj=None):
    """Return ``(m_alpha, M_alpha)``: the first monic divisor ``m`` of ``x^n - 1``
    with ``phi(m)(alpha) = 0``, checked minimal by removing each irreducible factor."""
    if alpha == tower.zero:
        raise ZeroElement("minimal q-polynomial of zero")
    if conj is None:
        conj = tower.conjugates(alpha)
    fac = factor_xn_minus_1(tower)
    for m, exps in divisor_lattice(tower):
        M = phi(m)
        if evaluate_on_conjugates(M, conj, tower) != tower.zero:
            continue
        for p, e in zip(fac.factors, exps):
            if e and evaluate_on_conjugates(phi(m // p), conj, tower) == tower.zero:
                raise NoAnnihilator("first annihilating divisor is not minimal")
        return m, M
    raise NoAnnihilator("x^(q^n) - x must annihilate every element")
