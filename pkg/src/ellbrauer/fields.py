"""Exact arithmetic in finite fields F_{p^k}, with a fixed defining polynomial
per (p, k) so that every downstream computation is bit-for-bit reproducible.

Elements are coefficient tuples (c0, c1, ..., c_{k-1}) over Z/p with respect
to the shipped defining polynomial; degree-1 fields are plain Z/p wrapped in
1-tuples.  All values are immutable and safe to share.
"""

from __future__ import annotations

import random
from functools import lru_cache


class UnsupportedFieldError(ValueError):
    pass


# Defining polynomial for F_{p^k}, k >= 2, as monic coefficient tuples
# (c0, c1, ..., c_{k-1}, 1), low degree first.  Each entry is the
# lexicographically least monic irreducible of its degree, ordering
# polynomials by the integer sum(c_i * p^i); tests re-derive this.
# In particular F_4 = F_2[x]/(x^2+x+1), so the residue of x is a primitive
# cube root of unity.
POLY_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
}

MAX_DEGREE = 16


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Fq:
    """The finite field F_{p^k}.

    Elements are tuples of length k with entries in range(p).  Methods take
    and return such tuples; the class itself carries no element state.
    """

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus  # monic, length k+1, low degree first
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        # reduction table: x^(k+j) mod f for j = 0..k-2, as length-k tuples
        self._red = []
        cur = tuple((-c) % p for c in modulus[:k])  # x^k mod f
        for _ in range(max(k - 1, 0)):
            self._red.append(cur)
            shifted = (0,) + cur[: k - 1]
            top = cur[k - 1]
            cur = tuple((shifted[i] + top * self._red[0][i]) % p for i in range(k))

    def __repr__(self):
        return f"Fq({self.p}, {self.k})"

    def __eq__(self, other):
        return (
            isinstance(other, Fq)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- element construction ------------------------------------------------

    def scalar(self, n):
        """Image of the integer n under Z -> F_q."""
        return (n % self.p,) + (0,) * (self.k - 1)

    def gen(self):
        """The residue class of x (zero in a degree-1 field)."""
        if self.k == 1:
            return self.zero
        return (0, 1) + (0,) * (self.k - 2)

    def from_index(self, n):
        """The n-th element in the canonical enumeration (base-p digits)."""
        digits = []
        for _ in range(self.k):
            digits.append(n % self.p)
            n //= self.p
        return tuple(digits)

    def index(self, a):
        return sum(c * self.p ** i for i, c in enumerate(a))

    def elements(self):
        return [self.from_index(n) for n in range(self.q)]

    def random_element(self, rng):
        return self.from_index(rng.randrange(self.q))

    def random_nonzero(self, rng):
        return self.from_index(rng.randrange(1, self.q))

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [c % p for c in prod[:k]]
        for j in range(k - 1):
            c = prod[k + j] % p
            if c:
                red = self._red[j]
                for i in range(k):
                    out[i] = (out[i] + c * red[i]) % p
        return tuple(out)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return (pow(a[0], -1, self.p),)
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero

    def frobenius(self, a):
        return self.pow(a, self.p)

    def to_str(self, a):
        """Canonical printing, coefficients low degree first."""
        if self.k == 1:
            return str(a[0])
        return "(" + ",".join(str(c) for c in a) + ")"


@lru_cache(maxsize=None)
def field_create(p, k):
    """Return F_{p^k} with the shipped defining polynomial.

    Degree-1 fields exist for every prime p; higher degrees only for the
    (p, k) pairs in POLY_TABLE.
    """
    if not isinstance(p, int) or not isinstance(k, int):
        raise UnsupportedFieldError("p and k must be integers")
    if not _is_prime(p):
        raise UnsupportedFieldError(f"unsupported field: p={p} is not prime")
    if not 1 <= k <= MAX_DEGREE:
        raise UnsupportedFieldError(f"unsupported field: degree {k} out of range")
    if k == 1:
        return Fq(p, 1, (0, 1))
    if (p, k) not in POLY_TABLE:
        raise UnsupportedFieldError(f"unsupported field: no shipped polynomial for ({p}, {k})")
    return Fq(p, k, POLY_TABLE[(p, k)])


def primitive_cube_root(field):
    """A fixed primitive 3rd root of unity in the field, or None.

    Deterministic choice: the least element in the canonical enumeration with
    x != 1 and x^3 = 1.  Returns None when 3 does not divide q - 1; raises in
    characteristic 3, where no such root can exist.
    """
    if field.p == 3:
        raise UnsupportedFieldError("no primitive cube root in characteristic 3")
    if (field.q - 1) % 3 != 0:
        return None
    for n in range(field.q):
        a = field.from_index(n)
        if a != field.one and field.pow(a, 3) == field.one:
            return a
    return None


# -- dense polynomial arithmetic over a field ---------------------------------
# Polynomials are lists/tuples of field elements, low degree first; the zero
# polynomial is the empty tuple.


def poly_trim(field, a):
    a = list(a)
    while a and field.is_zero(a[-1]):
        a.pop()
    return tuple(a)


def poly_add(field, a, b):
    n = max(len(a), len(b))
    a = list(a) + [field.zero] * (n - len(a))
    b = list(b) + [field.zero] * (n - len(b))
    return poly_trim(field, [field.add(x, y) for x, y in zip(a, b)])


def poly_sub(field, a, b):
    n = max(len(a), len(b))
    a = list(a) + [field.zero] * (n - len(a))
    b = list(b) + [field.zero] * (n - len(b))
    return poly_trim(field, [field.sub(x, y) for x, y in zip(a, b)])


def poly_scale(field, c, a):
    return poly_trim(field, [field.mul(c, x) for x in a])


def poly_mul(field, a, b):
    if not a or not b:
        return ()
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not field.is_zero(ai):
            for j, bj in enumerate(b):
                out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return poly_trim(field, out)


def poly_divmod(field, a, b):
    b = poly_trim(field, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(poly_trim(field, a))
    binv = field.inv(b[-1])
    quo = [field.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = field.mul(a[-1], binv)
        d = len(a) - len(b)
        quo[d] = c
        for j in range(len(b)):
            a[d + j] = field.sub(a[d + j], field.mul(c, b[j]))
        while a and field.is_zero(a[-1]):
            a.pop()
    return poly_trim(field, quo), poly_trim(field, a)


def poly_eval(field, a, x):
    acc = field.zero
    for c in reversed(a):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_compose_fraction(field, a, num, den):
    """Evaluate the polynomial a at the formal fraction num/den.

    Returns (N, D) with a(num/den) = N / D and D = den^deg(a); exact, no
    cancellation performed.
    """
    a = poly_trim(field, a)
    if not a:
        return (), (field.one,)
    deg = len(a) - 1
    num_pows = [(field.one,)]
    den_pows = [(field.one,)]
    for _ in range(deg):
        num_pows.append(poly_mul(field, num_pows[-1], num))
        den_pows.append(poly_mul(field, den_pows[-1], den))
    out = ()
    for i, c in enumerate(a):
        term = poly_scale(field, c, poly_mul(field, num_pows[i], den_pows[deg - i]))
        out = poly_add(field, out, term)
    return out, den_pows[deg]


def random_seeded(seed):
    """Project-wide RNG constructor so seeds mean the same thing everywhere."""
    return random.Random(seed)
