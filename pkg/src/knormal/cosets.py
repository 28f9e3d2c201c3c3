"""Partition of Z_n into q-classes (cyclotomic cosets)."""

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime


@dataclass(frozen=True)
class QClassPartition:
    """Orbits of ``Z_n`` under multiplication by ``q``.

    ``classes[0]`` is always ``(0,)``; the remaining classes are ordered by
    their smallest member, which is also the class representative.  Each
    class is stored sorted.
    """

    n: int
    q: int
    classes: tuple

    @property
    def s(self):
        return len(self.classes)

    @property
    def representatives(self):
        return tuple(c[0] for c in self.classes)

    @property
    def sizes(self):
        return tuple(len(c) for c in self.classes)

    def orbit(self, a):
        """Members of the class of ``a`` in orbit order a, aq, aq^2, ..."""
        out, x = [a % self.n], a * self.q % self.n
        while x != out[0]:
            out.append(x)
            x = x * self.q % self.n
        return tuple(out)

    def class_index(self, a):
        a %= self.n
        for i, c in enumerate(self.classes):
            if a in c:
                return i
        raise KeyError(a)

    def to_json(self):
        return [list(c) for c in self.classes]


def q_class_partition(n, q):
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd(n={n}, q={q}) != 1")
    seen = set()
    classes = []
    for a in range(n):
        if a in seen:
            continue
        orbit = {a}
        x = a * q % n
        while x != a:
            orbit.add(x)
            x = x * q % n
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return QClassPartition(n, q, tuple(classes))
