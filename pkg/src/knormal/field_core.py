"""Arithmetic in the tower F_p < F_q = F_{p^m} < F_Q = F_{q^n}.

Elements of F_q are integers ``0 <= v < q`` whose base-``p`` digits are the
coefficients (ascending) of a polynomial in the generator ``u`` of F_q.
Elements of F_Q are ``n``-tuples of F_q elements, the ascending coefficients
of a polynomial in the generator ``z`` of F_Q over F_q.  Because the tower
is kept relative to F_q, the q-power Frobenius is F_q-linear on coordinates
and the base field is the set of tuples ``(c, 0, ..., 0)``.
"""

import functools
import re

from .errors import (
    CoercionFailure,
    DegreeMismatch,
    DivisionByZero,
    DNotDividingN,
    NonPrimeP,
    ParseError,
    ReducibleModulus,
    ZeroElement,
)
from .ntheory import is_prime, prime_factors
from .poly_ring import Poly, is_irreducible, smallest_irreducible, xgcd

# log/antilog tables are built for extensions up to this size
LOG_TABLE_LIMIT = 1 << 14


class BaseField:
    """F_q = F_p[u]/(modulus) with full addition and multiplication tables."""

    def __init__(self, p, m=1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeP(f"p = {p} is not prime")
        if m < 1:
            raise DegreeMismatch("m must be at least 1")
        self.p, self.m = p, m
        self.q = self.order = p ** m
        self.zero, self.one = 0, 1
        if modulus is None:
            modulus = (0, 1) if m == 1 else smallest_irreducible(prime_field(p), m).coeffs
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise DegreeMismatch(f"F_q modulus must be monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise ParseError(f"F_q modulus coefficients must lie in [0, {p})")
        if m > 1 and not is_irreducible(Poly(prime_field(p), modulus)):
            raise ReducibleModulus(f"{list(modulus)} is reducible over F_{p}")
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        digits = [self.to_coeffs(v) for v in range(q)]
        weights = [p ** i for i in range(m)]
        self._add = [
            [sum(((x + y) % p) * w for x, y, w in zip(digits[a], digits[b], weights)) for b in range(q)]
            for a in range(q)
        ]
        self._neg = [sum(((-x) % p) * w for x, w in zip(digits[a], weights)) for a in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        red = self.modulus
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * m - 1)
                for i, x in enumerate(digits[a]):
                    for j, y in enumerate(digits[b]):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for k in range(2 * m - 2, m - 1, -1):
                    c = prod[k]
                    if c:
                        for j in range(m):
                            prod[k - m + j] = (prod[k - m + j] - c * red[j]) % p
                v = sum(c * w for c, w in zip(prod[:m], weights))
                self._mul[a][b] = self._mul[b][a] = v
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)

    def __eq__(self, other):
        return isinstance(other, BaseField) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"BaseField(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def to_coeffs(self, v):
        out = []
        for _ in range(self.m):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.m or any(not 0 <= c < self.p for c in coeffs):
            raise ParseError(f"not an element of F_{self.q}: {coeffs}")
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def from_int(self, k):
        """Image of the integer ``k`` in F_q."""
        return k % self.p

    def element(self, idx):
        return idx

    def index(self, a):
        return a

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self._mul[out][a]
            a = self._mul[a][a]
            e >>= 1
        return out

    @functools.cached_property
    def primitive_element(self):
        fs = prime_factors(self.q - 1)
        for g in range(1, self.q):
            if all(self.pow(g, (self.q - 1) // r) != 1 for r in fs):
                return g
        raise AssertionError("unreachable")

    def encode(self, a):
        return a if self.m == 1 else list(self.to_coeffs(a))

    def decode(self, obj):
        if self.m == 1:
            if isinstance(obj, list) and len(obj) == 1:
                obj = obj[0]
            if not isinstance(obj, int) or not 0 <= obj < self.p:
                raise ParseError(f"not an element of F_{self.p}: {obj!r}")
            return obj
        if not isinstance(obj, (list, tuple)):
            raise ParseError(f"F_{self.q} elements are written as [b0,...,b{self.m - 1}]")
        return self.from_coeffs(obj)


@functools.lru_cache(maxsize=None)
def prime_field(p):
    return BaseField(p, 1)


class FieldTower:
    """F_Q = F_q[z]/(modulus) for a monic irreducible ``modulus`` of degree ``n``."""

    def __init__(self, base, n, modulus=None):
        if n < 1:
            raise DegreeMismatch("n must be at least 1")
        self.base, self.n = base, n
        self.p, self.m, self.q = base.p, base.m, base.q
        self.Q = self.order = base.q ** n
        if modulus is None:
            modulus = smallest_irreducible(base, n).coeffs
        modulus = tuple(modulus)
        if len(modulus) != n + 1 or modulus[-1] != base.one:
            raise DegreeMismatch(f"F_Q modulus must be monic of degree {n}")
        mod_poly = Poly(base, modulus)
        if not is_irreducible(mod_poly):
            raise ReducibleModulus(f"{list(modulus)} is reducible over F_{base.q}")
        self.modulus = modulus
        self._mod_poly = mod_poly
        self._negmod = tuple(base.neg(c) for c in modulus[:n])
        self.zero = (base.zero,) * n
        self.one = (base.one,) + (base.zero,) * (n - 1)
        self._exp = self._log = None
        if self.Q <= LOG_TABLE_LIMIT:
            self._build_log_tables()
        self._frob_rows = self._build_frobenius_rows()

    # -- construction helpers -------------------------------------------
    def _build_log_tables(self):
        N = self.Q - 1
        g = self._find_primitive(self._mul_plain)
        exp, log = [self.one] * N, {}
        x = self.one
        for k in range(N):
            exp[k] = x
            log[x] = k
            x = self._mul_plain(x, g)
        self._exp, self._log = exp, log
        self._primitive = g

    def _find_primitive(self, mul):
        N = self.Q - 1
        fs = prime_factors(N)
        for idx in range(1, self.Q):
            g = self.element(idx)
            if all(self._pow_plain(g, N // r, mul) != self.one for r in fs):
                return g
        raise AssertionError("unreachable")

    def _build_frobenius_rows(self):
        # rows[i][j] = (z^j)^(q^i)
        n, B = self.n, self.base
        basis = [tuple(B.one if k == j else B.zero for k in range(n)) for j in range(n)]
        if n == 1:
            return [basis]
        zq = self._pow_plain(basis[1], self.q, self._mul_plain)
        first = [self.one]
        for _ in range(1, n):
            first.append(self._mul_plain(first[-1], zq))
        rows = [basis, first]
        for _ in range(2, n):
            rows.append([self._apply_rows(first, v) for v in rows[-1]])
        return rows[:n]

    def _apply_rows(self, rows, a):
        B = self.base
        add, mul = B._add, B._mul
        out = [0] * self.n
        for c, row in zip(a, rows):
            if c:
                mrow = mul[c]
                for k, y in enumerate(row):
                    if y:
                        out[k] = add[out[k]][mrow[y]]
        return tuple(out)

    # -- identity / enumeration ----------------------------------------
    def __eq__(self, other):
        return isinstance(other, FieldTower) and (self.base, self.n, self.modulus) == (
            other.base,
            other.n,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.base, self.n, self.modulus))

    def __repr__(self):
        return f"FieldTower(p={self.p}, m={self.m}, n={self.n}, modulus_Q={[self.base.encode(c) for c in self.modulus]})"

    @property
    def modulus_q(self):
        return self.base.modulus

    @property
    def modulus_Q(self):
        return self.modulus

    def element(self, idx):
        q = self.q
        out = []
        for _ in range(self.n):
            idx, c = divmod(idx, q)
            out.append(c)
        return tuple(out)

    def index(self, a):
        v = 0
        for c in reversed(a):
            v = v * self.q + c
        return v

    def elements(self):
        for idx in range(self.Q):
            yield self.element(idx)

    def nonzero_elements(self):
        for idx in range(1, self.Q):
            yield self.element(idx)

    def random_element(self, rng, nonzero=True):
        while True:
            a = tuple(rng.randrange(self.q) for _ in range(self.n))
            if a != self.zero or not nonzero:
                return a

    def embed(self, c):
        return (c,) + (self.base.zero,) * (self.n - 1)

    def in_base(self, a):
        return all(x == 0 for x in a[1:])

    def coerce(self, a):
        if not self.in_base(a):
            raise CoercionFailure(f"{a} does not lie in F_{self.q}")
        return a[0]

    def from_int(self, k):
        return self.embed(self.base.from_int(k))

    # -- arithmetic ------------------------------------------------------
    def add(self, a, b):
        add = self.base._add
        return tuple(add[x][y] for x, y in zip(a, b))

    def sub(self, a, b):
        add, neg = self.base._add, self.base._neg
        return tuple(add[x][neg[y]] for x, y in zip(a, b))

    def neg(self, a):
        neg = self.base._neg
        return tuple(neg[x] for x in a)

    def scalar_mul(self, c, a):
        row = self.base._mul[c]
        return tuple(row[x] for x in a)

    def _mul_plain(self, a, b):
        n = self.n
        add, mul = self.base._add, self.base._mul
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = add[prod[i + j]][row[y]]
        negmod = self._negmod
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                row = mul[c]
                base = k - n
                for j, mj in enumerate(negmod):
                    if mj:
                        prod[base + j] = add[prod[base + j]][row[mj]]
        return tuple(prod[:n])

    def mul(self, a, b):
        if self._log is None:
            return self._mul_plain(a, b)
        if a == self.zero or b == self.zero:
            return self.zero
        return self._exp[(self._log[a] + self._log[b]) % (self.Q - 1)]

    def _pow_plain(self, a, e, mul):
        out = self.one
        while e:
            if e & 1:
                out = mul(out, a)
            a = mul(a, a)
            e >>= 1
        return out

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero("inverse of zero")
        if self._log is not None:
            return self._exp[-self._log[a] % (self.Q - 1)]
        d, u, _ = xgcd(Poly(self.base, a), self._mod_poly)
        coeffs = list(u.coeffs) + [self.base.zero] * (self.n - len(u.coeffs))
        return tuple(coeffs)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if self._log is not None:
            if a == self.zero:
                return self.one if e == 0 else self.zero
            return self._exp[self._log[a] * e % (self.Q - 1)]
        return self._pow_plain(a, e, self._mul_plain)

    @property
    def primitive_element(self):
        if self._log is not None:
            return self._primitive
        return _primitive_of(self)

    # -- Frobenius and traces ------------------------------------------
    def frobenius(self, a, i=1):
        """``a^(q^i)``; ``i`` is taken modulo ``n``."""
        i %= self.n
        if i == 0:
            return a
        if self._log is not None:
            if a == self.zero:
                return a
            return self._exp[self._log[a] * pow(self.q, i, self.Q - 1) % (self.Q - 1)]
        return self._apply_rows(self._frob_rows[i], a)

    def conjugates(self, a):
        """``[a, a^q, ..., a^(q^(n-1))]``."""
        out = [a]
        for _ in range(1, self.n):
            out.append(self.frobenius(out[-1], 1))
        return out

    def trace(self, a):
        acc = self.zero
        for c in self.conjugates(a):
            acc = self.add(acc, c)
        return self.coerce(acc)

    def trace_to_subfield(self, a, d):
        """``sum_{l < n/d} a^(q^(d l))``, an element of F_Q fixed by the q^d-Frobenius."""
        if d < 1 or self.n % d:
            raise DNotDividingN(f"d = {d} does not divide n = {self.n}")
        acc = self.zero
        for ell in range(self.n // d):
            acc = self.add(acc, self.frobenius(a, d * ell))
        if self.frobenius(acc, d) != acc:
            raise CoercionFailure("subfield trace is not fixed by the q^d-Frobenius")
        return acc

    def conjugate_span_rank(self, a):
        if a == self.zero:
            raise ZeroElement("conjugate span of zero")
        return rank(self.base, self.conjugates(a))

    def is_fixed(self, a, d):
        return self.frobenius(a, d) == a

    # -- related fields --------------------------------------------------
    def auxiliary(self, w):
        """The extension F_{q^w} of the same base field, with its default modulus."""
        return _auxiliary(self.base, w)

    # -- text encoding ---------------------------------------------------
    def encode(self, a):
        return [self.base.encode(c) for c in a]

    def decode(self, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != self.n:
            raise ParseError(f"an element of F_Q needs exactly {self.n} coordinates")
        return tuple(self.base.decode(c) for c in obj)


@functools.lru_cache(maxsize=None)
def _primitive_of(tower):
    return tower._find_primitive(tower._mul_plain)


@functools.lru_cache(maxsize=None)
def _auxiliary(base, w):
    return FieldTower(base, w)


@functools.lru_cache(maxsize=None)
def _build_tower(p, m, n, modulus_q, modulus_Q):
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeP(f"p = {p} is not prime")
    if m < 1 or n < 1:
        raise DegreeMismatch("extension degrees must be at least 1")
    base = BaseField(p, m, modulus_q)
    if modulus_Q is not None:
        modulus_Q = tuple(base.decode(_tuple_to_list(c)) for c in modulus_Q)
    return FieldTower(base, n, modulus_Q)


def _tuple_to_list(c):
    return list(c) if isinstance(c, tuple) else c


def _freeze(seq):
    if seq is None:
        return None
    return tuple(tuple(c) if isinstance(c, list) else c for c in seq)


def build_tower(p, m, n, modulus_q=None, modulus_Q=None):
    """Validated tower F_p < F_{p^m} < F_{p^(mn)}.

    Omitted moduli default to the smallest monic irreducible polynomial of the
    required degree, where polynomials are ordered by the integer
    ``sum c_i r^i`` of their coefficient indices (``r`` the coefficient field
    size).  ``modulus_Q`` coefficients are written like F_q elements: ints
    when ``m == 1``, lists of ``m`` ints otherwise.
    """
    return _build_tower(p, m, n, _freeze(modulus_q), _freeze(modulus_Q))


def field_arithmetic(tower, a, b, op):
    """Dispatcher over ``add``, ``mul``, ``inv`` (ignores ``b``) and ``pow`` (``b`` an int)."""
    if op == "add":
        return tower.add(a, b)
    if op == "mul":
        return tower.mul(a, b)
    if op == "inv":
        return tower.inv(a)
    if op == "pow":
        return tower.pow(a, b)
    raise ValueError(f"unknown operation {op!r}")


# -- linear algebra over any field object ---------------------------------


def row_reduce(field, rows):
    """Reduced row echelon form; returns ``(rref_rows, pivot_columns)``."""
    A = [list(r) for r in rows]
    if not A:
        return [], []
    zero = field.zero
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != zero), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != zero:
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(field, rows):
    return len(row_reduce(field, rows)[1])


def determinant(field, M):
    A = [list(r) for r in M]
    size = len(A)
    det = field.one
    for c in range(size):
        piv = next((i for i in range(c, size) if A[i][c] != field.zero), None)
        if piv is None:
            return field.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = field.neg(det)
        det = field.mul(det, A[c][c])
        inv = field.inv(A[c][c])
        for i in range(c + 1, size):
            if A[i][c] != field.zero:
                f = field.mul(A[i][c], inv)
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], A[c])]
    return det


def solve(field, M, B):
    """Solve ``M X = B`` for square nonsingular ``M``; ``B`` is a list of rows.

    Returns the rows of ``X``, or ``None`` when ``M`` is singular.
    """
    size = len(M)
    aug = [list(M[i]) + list(B[i]) for i in range(size)]
    red, pivots = row_reduce(field, aug)
    if pivots[:size] != list(range(size)):
        return None
    return [row[size:] for row in red[:size]]


# -- text format ------------------------------------------------------------

_BRACKETS = re.compile(r"\[([^\[\]]*)\]")


def parse_coeff_list(base, text):
    """Parse ``"c0,c1,..."``; each ``c`` is an int (m = 1) or ``[b0,...]`` (m > 1)."""
    text = text.strip()
    try:
        if base.m == 1:
            items = [int(t) for t in text.split(",") if t.strip() != ""]
        else:
            groups = _BRACKETS.findall(text)
            if _BRACKETS.sub("", text).replace(",", "").strip():
                raise ParseError(f"cannot parse {text!r}")
            items = [[int(t) for t in g.split(",") if t.strip() != ""] for g in groups]
    except ValueError as exc:
        raise ParseError(f"cannot parse {text!r}") from exc
    return [base.decode(c) for c in items]


def format_coeff_list(base, coeffs):
    if base.m == 1:
        return ",".join(str(c) for c in coeffs)
    return ",".join("[" + ",".join(str(b) for b in base.to_coeffs(c)) + "]" for c in coeffs)


def parse_element(tower, text):
    """Parse an F_Q element; ``g^k`` denotes a power of the primitive element."""
    text = text.strip()
    if text.startswith("g^"):
        try:
            k = int(text[2:])
        except ValueError as exc:
            raise ParseError(f"cannot parse {text!r}") from exc
        return tower.pow(tower.primitive_element, k)
    coeffs = parse_coeff_list(tower.base, text)
    if len(coeffs) != tower.n:
        raise ParseError(f"expected {tower.n} coordinates, got {len(coeffs)}")
    return tuple(coeffs)


def format_element(tower, a):
    return format_coeff_list(tower.base, a)
