"""Exact arithmetic in F_p and extension fields F_{p^d}.

Extension fields are polynomial quotient rings F_p[X]/(m(X)) with a
deterministically chosen monic irreducible modulus, so serialized elements
are reproducible across runs.  Elements are immutable coefficient vectors
(little-endian) over the prime field.  No fast arithmetic: schoolbook
multiplication is plenty at desk scale.
"""

from __future__ import annotations

import functools
import itertools

from .errors import DegreeTooLarge, DivisionByZero, NotADivisor, NotPrime

MAX_DEGREE = 64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 2^31 inputs we allow."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


# ---------------------------------------------------------------------------
# Integer-coefficient polynomial helpers used only for modulus selection.
# ---------------------------------------------------------------------------

def _ipoly_mulmod(a, b, mod, p):
    d = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k] % p
        if c:
            for i in range(d):
                prod[k - d + i] -= c * mod[i]
        prod[k] = 0
    return [x % p for x in prod[:d]]


def _ipoly_powmod(a, e, mod, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _ipoly_mulmod(result, base, mod, p)
        base = _ipoly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _ipoly_gcd(a, b, p):
    a = [x % p for x in a]
    b = [x % p for x in b]
    while any(b):
        while b and b[-1] % p == 0:
            b.pop()
        if not b:
            break
        inv = pow(b[-1], -1, p)
        bb = [x * inv % p for x in b]
        # a mod bb
        a = [x % p for x in a]
        while len(a) >= len(bb) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(bb):
                break
            c = a[-1]
            shift = len(a) - len(bb)
            for i, bi in enumerate(bb):
                a[shift + i] = (a[shift + i] - c * bi) % p
        a, b = bb, a
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(mod, p):
    """mod: monic integer coefficient list of degree d over F_p."""
    d = len(mod) - 1
    x = [0, 1]
    for i in range(1, d // 2 + 1):
        xpi = _ipoly_powmod(x, p ** i, mod, p)
        diff = list(xpi) + [0] * (2 - len(xpi))
        diff[1] = (diff[1] - 1) % p
        g = _ipoly_gcd(diff, mod, p)
        if len(g) != 1:
            return False
    return True


def _lowest_irreducible(p, d):
    """Smallest monic irreducible of degree d, ordering the non-leading
    coefficient vector (c_0, ..., c_{d-1}) as a base-p integer."""
    for code in itertools.count():
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        if c:
            raise NotPrime(f"no irreducible of degree {d} found over F_{p}")
        mod = coeffs + [1]
        if mod[0] == 0:
            continue  # divisible by X
        if _is_irreducible(mod, p):
            return tuple(mod)


# ---------------------------------------------------------------------------
# Fields and elements.
# ---------------------------------------------------------------------------

class ExtField:
    """The field F_{p^d} as F_p[X]/(modulus)."""

    __slots__ = ("p", "degree", "modulus", "order", "_red", "_one", "_zero")

    def __init__(self, p, degree, modulus):
        self.p = p
        self.degree = degree
        self.modulus = modulus  # monic, length degree + 1, int coefficients
        self.order = p ** degree
        # x^k mod modulus for k in [degree, 2*degree - 2]
        red = []
        if degree >= 1:
            cur = [(-modulus[i]) % p for i in range(degree)]
            red.append(tuple(cur))
            for _ in range(degree - 2):
                nxt = [0] + cur[:-1]
                c = cur[-1]
                if c:
                    for i in range(degree):
                        nxt[i] = (nxt[i] - c * modulus[i]) % p
                cur = [v % p for v in nxt]
                red.append(tuple(cur))
        self._red = red
        self._zero = FieldElement(self, (0,) * degree)
        one = [0] * degree
        one[0] = 1 % p
        self._one = FieldElement(self, tuple(one))

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_int(self, n):
        coeffs = [0] * self.degree
        coeffs[0] = n % self.p
        return FieldElement(self, tuple(coeffs))

    def element(self, coeffs):
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector too long")
        coeffs += [0] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def gen(self):
        """The class of X (equals 0 in the degree-1 field)."""
        coeffs = [0] * self.degree
        if self.degree > 1:
            coeffs[1] = 1
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        """All field elements, ordered by base-p integer encoding."""
        for code in range(self.order):
            coeffs = []
            c = code
            for _ in range(self.degree):
                coeffs.append(c % self.p)
                c //= self.p
            yield FieldElement(self, tuple(coeffs))

    def from_code(self, code):
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(code % self.p)
            code //= self.p
        return FieldElement(self, tuple(coeffs))

    def random_element(self, rng):
        return FieldElement(
            self, tuple(rng.randrange(self.p) for _ in range(self.degree))
        )

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"ExtField(p={self.p}, degree={self.degree})"


@functools.lru_cache(maxsize=None)
def ext_field_create(p: int, d: int) -> ExtField:
    """Field of order p^d with the deterministic lowest irreducible modulus."""
    if not is_prime(p) or p == 2:
        if p == 2:
            raise NotPrime("characteristic 2 is not supported")
        raise NotPrime(f"{p} is not prime")
    if d < 1 or d > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {d} outside [1, {MAX_DEGREE}]")
    if d == 1:
        modulus = (0, 1)
    else:
        modulus = _lowest_irreducible(p, d)
    return ExtField(p, d, modulus)


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        p = self.field.p
        return FieldElement(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        p = self.field.p
        return FieldElement(
            self.field,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        f = self.field
        p = f.p
        d = f.degree
        a = self.coeffs
        b = other.coeffs
        if d == 1:
            return FieldElement(f, (a[0] * b[0] % p,))
        prod = [0] * (2 * d - 1)
        for i in range(d):
            ai = a[i]
            if ai:
                for j in range(d):
                    prod[i + j] += ai * b[j]
        red = f._red
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                row = red[k - d]
                for i in range(d):
                    prod[i] += c * row[i]
        return FieldElement(f, tuple(v % p for v in prod[:d]))

    def scale(self, n: int):
        p = self.field.p
        n %= p
        return FieldElement(self.field, tuple(a * n % p for a in self.coeffs))

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def code(self):
        """Base-p integer encoding (used for canonical ordering)."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def __repr__(self):
        return f"Fe{list(self.coeffs)}"


def field_inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def field_sqrt(x: FieldElement):
    """Tonelli-Shanks in F_{p^d}; returns the canonical root (smaller of the
    two under the base-p integer encoding) or None for non-squares."""
    f = x.field
    q = f.order
    if x.is_zero():
        return x
    if x ** ((q - 1) // 2) != f.one():
        return None
    if q % 4 == 3:
        y = x ** ((q + 1) // 4)
    else:
        # general Tonelli-Shanks
        m = q - 1
        s = 0
        while m % 2 == 0:
            m //= 2
            s += 1
        # deterministic non-residue search
        z = None
        for cand in f.elements():
            if cand.is_zero():
                continue
            if cand ** ((q - 1) // 2) != f.one():
                z = cand
                break
        c = z ** m
        y = x ** ((m + 1) // 2)
        t = x ** m
        e = s
        while t != f.one():
            # find least i with t^(2^i) = 1
            i = 0
            tt = t
            while tt != f.one():
                tt = tt * tt
                i += 1
            b = c
            for _ in range(e - i - 1):
                b = b * b
            y = y * b
            c = b * b
            t = t * c
            e = i
    neg = -y
    return y if y.code() <= neg.code() else neg


def frobenius_power(x: FieldElement, m: int) -> FieldElement:
    """x ** (p^m) in its own field."""
    if m == 0:
        return x
    return x ** (x.field.p ** m)


def is_in_subfield(x: FieldElement, m: int) -> bool:
    """True iff x lies in the subfield F_{p^m} of its parent F_{p^N}."""
    n = x.field.degree
    if n % m != 0:
        raise NotADivisor(f"{m} does not divide ambient degree {n}")
    return frobenius_power(x, m) == x


def relative_trace(x: FieldElement, m: int) -> FieldElement:
    """Trace from F_{p^N} down to F_{p^m}; a uniform surjection onto the
    subfield when x is uniform."""
    n = x.field.degree
    if n % m != 0:
        raise NotADivisor(f"{m} does not divide ambient degree {n}")
    acc = x
    cur = x
    for _ in range(n // m - 1):
        cur = frobenius_power(cur, m)
        acc = acc + cur
    return acc
