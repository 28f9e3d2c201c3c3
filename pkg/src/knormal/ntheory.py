"""Small integer helpers: primality, factoring, multiplicative order."""

from math import gcd


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    """Distinct prime divisors of ``n >= 1`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a, n):
    """Least ``k >= 1`` with ``a**k == 1 (mod n)``; requires ``gcd(a, n) == 1``."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def split_p_power(n, p):
    """Write ``n = p**t * n1`` with ``p`` not dividing ``n1``; return ``(t, n1)``."""
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    return t, n


def primitive_roots(n):
    """Generators of the unit group mod a prime ``n``, in increasing order."""
    if n == 2:
        return [1]
    fs = prime_factors(n - 1)
    return [g for g in range(2, n) if all(pow(g, (n - 1) // r, n) != 1 for r in fs)]
