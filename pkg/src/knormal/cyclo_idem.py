"""Orthogonal idempotents of F_q[x]/(x^n - 1) and Gauss periods valued in F_q.

Two independent constructions of the idempotents are provided: solving the
CRT congruences against the factorization of ``x^n - 1``, and inverting the
matrix of class sums evaluated at one root per q-class.  Both return the
system in the canonical class order (class ``{0}`` first).
"""

import functools
from dataclasses import dataclass
from typing import Optional

from .cosets import QClassPartition, q_class_partition
from .errors import NNotPrime, OrderMismatch, PDividesN, SingularM, ZeroElement
from .field_core import determinant, solve
from .linearized import phi
from .ntheory import is_prime, multiplicative_order, primitive_roots
from .poly_ring import Poly, crt_solve, descend, factor_xn_minus_1

__all__ = [
    "QClassPartition",
    "q_class_partition",
    "class_sum_polys",
    "IdempotentSystem",
    "idempotents_crt",
    "idempotents_matrix",
    "GaussPeriodData",
    "gauss_periods",
    "QuadraticData",
    "quadratic_data",
    "circulant_is_orthogonal",
    "period_correlation",
]


def class_sum_polys(partition, field):
    """``eps_i(x) = sum_{a in A_i} x^a`` for every class ``A_i``."""
    out = []
    for cls in partition.classes:
        coeffs = [field.zero] * partition.n
        for a in cls:
            coeffs[a] = field.one
        out.append(Poly(field, coeffs))
    return out


@dataclass(frozen=True)
class IdempotentSystem:
    e: tuple
    E: tuple
    method: str
    matrix: Optional[tuple] = None
    det: Optional[int] = None

    @property
    def s(self):
        return len(self.e)

    def to_json(self):
        F = self.e[0].field
        out = {
            "method": self.method,
            "idempotents": [
                {"e_coeffs": [F.encode(c) for c in e.coeffs], "E_q_coeffs": E.to_json()["q_coeffs"]}
                for e, E in zip(self.e, self.E)
            ],
        }
        if self.matrix is not None:
            out["matrix"] = [[F.encode(c) for c in row] for row in self.matrix]
            out["det"] = F.encode(self.det)
        return out


def _require_coprime(tower):
    if tower.n % tower.p == 0:
        raise PDividesN(f"p = {tower.p} divides n = {tower.n}")


@functools.lru_cache(maxsize=None)
def idempotents_crt(tower):
    _require_coprime(tower)
    fac = factor_xn_minus_1(tower)
    base = tower.base
    one, zero = Poly.constant(base, base.one), Poly(base)
    es = []
    for i in range(fac.s):
        es.append(crt_solve(list(fac.factors), [one if j == i else zero for j in range(fac.s)]))
    return IdempotentSystem(tuple(es), tuple(phi(e) for e in es), "crt")


@functools.lru_cache(maxsize=None)
def idempotents_matrix(tower):
    _require_coprime(tower)
    fac = factor_xn_minus_1(tower)
    aux, zeta, part = fac.aux, fac.zeta, fac.partition
    n, base = tower.n, tower.base
    reps = part.representatives
    M = [
        [_sum_powers(aux, zeta, [a * b for a in cls]) for b in reps]
        for cls in part.classes
    ]
    det = determinant(aux, M)
    if det == aux.zero:
        raise SingularM("class-sum matrix is singular")
    eps = class_sum_polys(part, base)
    rhs = [[aux.embed(eps_i.coeff(k)) for k in range(n)] for eps_i in eps]
    X = solve(aux, M, rhs)
    if X is None:
        raise SingularM("class-sum matrix is singular")
    es = tuple(Poly(base, [descend(aux, c) for c in row]) for row in X)
    matrix = tuple(tuple(descend(aux, c) for c in row) for row in M)
    return IdempotentSystem(es, tuple(phi(e) for e in es), "matrix", matrix, descend(aux, det))


def _sum_powers(aux, zeta, exps):
    acc = aux.zero
    for a in exps:
        acc = aux.add(acc, aux.pow(zeta, a))
    return acc


@dataclass(frozen=True)
class GaussPeriodData:
    """Gauss periods of order ``e`` over Z_n (n prime), valued in F_q.

    ``cosets[lam] = g^lam <q>``; ``periods[lam] = sum_{a in cosets[lam]} zeta^a``.
    For ``e == 2`` the quadratic data ``B`` (non-residues), ``C`` (residues)
    and, for odd q, ``n_star = (-1/n) n`` are filled in.
    """

    n: int
    f: int
    e: int
    g: int
    cosets: tuple
    periods: tuple
    c: int
    zeta: tuple
    coset_to_factor: tuple
    B: Optional[int] = None
    C: Optional[int] = None
    n_star: Optional[int] = None

    def to_json(self, base):
        enc = base.encode
        return {
            "e": self.e,
            "f": self.f,
            "g": self.g,
            "cosets": [list(c) for c in self.cosets],
            "periods": [enc(x) for x in self.periods],
            "c": self.c,
            "zeta": [enc(x) for x in self.zeta],
            "B": None if self.B is None else enc(self.B),
            "C": None if self.C is None else enc(self.C),
            "n_star": None if self.n_star is None else enc(self.n_star),
        }


def _gauss_preconditions(tower):
    n, p = tower.n, tower.p
    if not is_prime(n):
        raise NNotPrime(f"n = {n} is not prime")
    if n == p:
        raise PDividesN(f"n = p = {n}")


@functools.lru_cache(maxsize=None)
def gauss_periods(tower):
    _gauss_preconditions(tower)
    n, q, base = tower.n, tower.q, tower.base
    f = multiplicative_order(q, n)
    e = (n - 1) // f
    roots = primitive_roots(n)
    # prefer a generator with g^e = q, so that <q> = <g^e> is literally indexed
    g = next((r for r in roots if pow(r, e, n) == q % n), roots[0])
    C0 = sorted({pow(q, i, n) for i in range(f)})
    cosets = tuple(tuple(sorted(pow(g, lam, n) * a % n for a in C0)) for lam in range(e))
    fac = factor_xn_minus_1(tower)
    aux, zeta = fac.aux, fac.zeta
    periods = tuple(descend(aux, _sum_powers(aux, zeta, C)) for C in cosets)
    c = 0 if f % 2 == 0 else e // 2
    coset_to_factor = tuple(fac.partition.class_index(C[0]) for C in cosets)
    B = C = n_star = None
    if e == 2:
        C, B = periods
        if base.p != 2:
            legendre_minus_one = 1 if n % 4 == 1 else -1
            n_star = base.from_int(legendre_minus_one * n)
    return GaussPeriodData(n, f, e, g, cosets, periods, c, zeta, coset_to_factor, B, C, n_star)


@dataclass(frozen=True)
class QuadraticData:
    B: int
    C: int
    n_star: Optional[int]
    sqrt_n_star: int
    delta: tuple
    epsilon: tuple
    residues: tuple
    nonresidues: tuple


def quadratic_data(tower, alpha):
    """B, C, n*, ``delta = sum (r/n) alpha^(q^r)`` and ``epsilon = sum_{r in D} alpha^(q^r)``.

    ``sqrt_n_star`` is the F_q-valued quadratic Gauss sum ``B - C``.
    """
    if alpha == tower.zero:
        raise ZeroElement("quadratic data of zero")
    gp = gauss_periods(tower)
    if gp.e != 2:
        raise OrderMismatch(f"order of q mod n is {gp.f}, not (n-1)/2")
    D, Dp = gp.cosets
    conj = tower.conjugates(alpha)
    sum_D, sum_Dp = tower.zero, tower.zero
    for r in D:
        sum_D = tower.add(sum_D, conj[r])
    for r in Dp:
        sum_Dp = tower.add(sum_Dp, conj[r])
    base = tower.base
    return QuadraticData(
        B=gp.B,
        C=gp.C,
        n_star=gp.n_star,
        sqrt_n_star=base.sub(gp.B, gp.C),
        delta=tower.sub(sum_D, sum_Dp),
        epsilon=sum_D,
        residues=D,
        nonresidues=Dp,
    )


def circulant_is_orthogonal(periods, base):
    """Whether the circulant ``(periods[i + j])`` times its transpose is the identity."""
    e = len(periods)
    for i in range(e):
        for j in range(e):
            acc = base.zero
            for k in range(e):
                acc = base.add(acc, base.mul(periods[(i + k) % e], periods[(j + k) % e]))
            if acc != (base.one if i == j else base.zero):
                return False
    return True


def period_correlation(gp, base, j):
    """``sum_lam eps_lam eps_{lam + j}``."""
    acc = base.zero
    for lam in range(gp.e):
        acc = base.add(acc, base.mul(gp.periods[lam], gp.periods[(lam + j) % gp.e]))
    return acc
