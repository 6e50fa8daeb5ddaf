"""Arithmetic over binary polynomials stored as integer bitmasks.

Bit i of the mask holds the coefficient of x^i, so x^4+x+1 is 0b10011
(hex 0x13).  A plain Python int is the whole representation; every
operation here is a pure function on immutable values, safe to share
between threads.
"""

from __future__ import annotations

import warnings

__all__ = [
    "Gf2Poly",
    "mul",
    "pow_x_mod",
    "is_irreducible",
    "exponent",
    "is_primitive",
    "enumerate_irreducible",
    "euler_phi",
]


class Gf2Poly:
    """A polynomial over GF(2), identified by its coefficient bitmask.

    Parameters
    ----------
    mask : int
        Coefficient bit-vector, bit i = coefficient of x^i.

    Notes
    -----
    Equality and hashing are coefficient-wise.  The zero polynomial has
    ``degree`` None.
    """

    __slots__ = ("mask",)

    def __init__(self, mask: int):
        if not isinstance(mask, int) or mask < 0:
            raise ValueError("mask must be a nonnegative integer")
        self.mask = mask

    @property
    def degree(self):
        """Index of the highest set bit, or None for the zero polynomial."""
        return self.mask.bit_length() - 1 if self.mask else None

    @classmethod
    def parse(cls, text: str) -> "Gf2Poly":
        """Parse a hex mask ("0x13") or a human form ("x^4+x+1").

        Whitespace is ignored anywhere in the string.
        """
        s = "".join(text.split()).lower()
        if not s:
            raise ValueError("empty polynomial string")
        if s.startswith("0x"):
            return cls(int(s, 16))
        if s == "0":
            return cls(0)
        mask = 0
        for term in s.split("+"):
            if term == "1":
                mask ^= 1
            elif term == "x":
                mask ^= 2
            elif term.startswith("x^") and term[2:].isdigit():
                mask ^= 1 << int(term[2:])
            else:
                raise ValueError(f"cannot parse polynomial term {term!r}")
        return cls(mask)

    def __eq__(self, other):
        return isinstance(other, Gf2Poly) and self.mask == other.mask

    def __hash__(self):
        return hash(("Gf2Poly", self.mask))

    def __bool__(self):
        return bool(self.mask)

    def __str__(self):
        if not self.mask:
            return "0"
        terms = []
        for i in range(self.mask.bit_length() - 1, -1, -1):
            if (self.mask >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)

    def __repr__(self):
        return f"Gf2Poly(0x{self.mask:x})"


def mul(f: Gf2Poly, g: Gf2Poly) -> Gf2Poly:
    """Carry-less product of two polynomials over GF(2)."""
    a, b, out = f.mask, g.mask, 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return Gf2Poly(out)


def _mod(a: int, m: int) -> int:
    # Schoolbook remainder of mask a modulo mask m (m nonzero).
    dm = m.bit_length()
    da = a.bit_length()
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length()
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    # Product of residues a, b modulo m; both inputs already reduced.
    out = 0
    top = m.bit_length()
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a.bit_length() == top:
            a ^= m
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _prime_factors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divisors(n: int) -> list:
    fac = {}
    x, d = n, 2
    while d * d <= x:
        while x % d == 0:
            fac[d] = fac.get(d, 0) + 1
            x //= d
        d += 1
    if x > 1:
        fac[x] = fac.get(x, 0) + 1
    divs = [1]
    for p, a in fac.items():
        divs = [q * p**i for q in divs for i in range(a + 1)]
    return sorted(divs)


def pow_x_mod(e: int, f: Gf2Poly) -> Gf2Poly:
    """x^e reduced modulo f, by square and multiply.

    Runs in O(log e) modular reductions.
    """
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    m = f.mask
    if m == 0 or m.bit_length() < 2:
        raise ValueError("modulus must have degree at least 1")
    result, base = 1, _mod(2, m)
    while e:
        if e & 1:
            result = _mulmod(result, base, m)
        base = _mulmod(base, base, m)
        e >>= 1
    return Gf2Poly(result)


def is_irreducible(f: Gf2Poly) -> bool:
    """True iff f has no nontrivial factor over GF(2).

    Uses the distinct-degree criterion: x^(2^n) = x (mod f) together with
    gcd(x^(2^(n/p)) + x, f) = 1 for every prime p dividing n = deg f.
    """
    if f.mask == 0 or f.degree == 0:
        raise ValueError("irreducibility is undefined for constant polynomials")
    n = f.degree
    if n == 1:
        return True
    m = f.mask
    powers = {}
    r = 2  # x, already reduced since deg f >= 2
    for j in range(1, n + 1):
        r = _mulmod(r, r, m)
        powers[j] = r
    if powers[n] != 2:
        return False
    for p in _prime_factors(n):
        if _gcd(powers[n // p] ^ 2, m) != 1:
            return False
    return True


def exponent(f: Gf2Poly) -> int:
    """Smallest k >= 1 with x^k = 1 modulo f.

    For irreducible f the order divides 2^deg(f) - 1 and the divisors are
    tested in ascending order.  Any other f with nonzero constant term is
    accepted too; its order is found by an incremental scan, and is below
    2^deg(f) because x is a unit modulo f.
    """
    if f.mask == 0 or f.degree == 0:
        raise ValueError("exponent is undefined for constant polynomials")
    if not (f.mask & 1):
        raise ValueError("no exponent exists: the constant term of f is zero")
    n = f.degree
    if is_irreducible(f):
        for d in _divisors((1 << n) - 1):
            if pow_x_mod(d, f).mask == 1:
                return d
        raise RuntimeError("order of x must divide 2^deg-1 for irreducible f")
    m = f.mask
    r, k, cap = _mod(2, m), 1, 1 << n
    while r != 1:
        r = _mulmod(r, 2, m)
        k += 1
        if k > cap:
            raise RuntimeError("order scan exceeded the 2^deg bound")
    return k


def is_primitive(f: Gf2Poly) -> bool:
    """True iff f is irreducible and exponent(f) = 2^deg(f) - 1.

    Returns False (never raises) for reducible or constant input.
    """
    if f.mask == 0 or f.degree == 0:
        return False
    if not is_irreducible(f):
        return False
    if not (f.mask & 1):
        return False  # f = x has no exponent
    return exponent(f) == (1 << f.degree) - 1


def enumerate_irreducible(n: int, e: int | None = None) -> list:
    """All irreducible polynomials of degree n, in ascending mask order.

    When e is given, the list is filtered to polynomials of exponent e.
    If e does not divide 2^n - 1 no such polynomial exists: the result is
    empty and a warning explains why.
    """
    if not 1 <= n <= 24:
        raise ValueError("degree must be between 1 and 24")
    if e is not None:
        if e < 1:
            raise ValueError("exponent filter must be positive")
        if ((1 << n) - 1) % e:
            warnings.warn(
                f"exponent {e} does not divide 2^{n}-1; "
                f"no degree-{n} irreducible polynomial has it",
                stacklevel=2,
            )
            return []
    out = []
    for mask in range(1 << n, 1 << (n + 1)):
        if n >= 2 and not (mask & 1):
            continue  # divisible by x
        if n >= 2 and mask.bit_count() % 2 == 0:
            continue  # has root 1, divisible by x+1
        f = Gf2Poly(mask)
        if not is_irreducible(f):
            continue
        if e is not None:
            if not (mask & 1):
                continue  # f = x has no exponent
            if exponent(f) != e:
                continue
        out.append(f)
    return out


def euler_phi(k: int) -> int:
    """Euler totient of k, by trial-division factorization."""
    if k <= 0:
        raise ValueError("euler_phi needs a positive integer")
    out, x, d = k, k, 2
    while d * d <= x:
        if x % d == 0:
            out -= out // d
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out -= out // x
    return out
