"""Periodic sequences of linear feedback shift registers.

A register with characteristic polynomial f(x) = x^n + sum c_i x^{n-i}
runs the recursion a_k = sum_{i=1}^n c_i a_{k-i}.  Its state holds n
consecutive sequence bits with the oldest in bit 0, so stepping shifts
the state right and feeds the tap parity into bit n-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import Gf2Poly, exponent, is_irreducible, is_primitive

__all__ = [
    "CyclicSequence",
    "SequenceFamily",
    "PerfectFactor",
    "ZERO_SEQUENCE",
    "generate_cycles",
    "m_sequence",
    "verify_zero_factor",
    "verify_perfect_factor",
    "shift",
    "add_seq",
    "shift_and_add_check",
    "d_morphism",
    "d_inverse",
    "d_inverse_bits",
    "weight_parity",
    "debruijn_sequence",
    "debruijn_from_primitive",
]


def _minimal_period(bits: tuple) -> int:
    n = len(bits)
    for d in range(1, n + 1):
        if n % d:
            continue
        if bits[:d] * (n // d) == bits:
            return d
    return n


def _least_rotation(s: tuple) -> int:
    # Booth's algorithm: index of the lexicographically least rotation.
    d = s + s
    n = len(s)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = d[j]
        i = f[j - k - 1]
        while i != -1 and sj != d[k + i + 1]:
            if sj < d[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != d[k + i + 1]:
            if sj < d[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


class CyclicSequence:
    """One periodic binary sequence, stored at its minimal period.

    The constructor reduces the supplied bits to their minimal period but
    keeps the supplied phase (bits[0] stays first).  Equality and hashing
    identify rotations of each other; ``canonical()`` returns the
    lexicographically least rotation.
    """

    __slots__ = ("bits", "_canon")

    def __init__(self, bits):
        bits = tuple(int(b) for b in bits)
        if not bits:
            raise ValueError("a cyclic sequence needs at least one bit")
        if any(b >> 1 for b in bits):
            raise ValueError("bits must be 0 or 1")
        self.bits = bits[: _minimal_period(bits)]
        self._canon = None

    @property
    def canonical_bits(self) -> tuple:
        if self._canon is None:
            k = _least_rotation(self.bits)
            self._canon = self.bits[k:] + self.bits[:k]
        return self._canon

    def canonical(self) -> "CyclicSequence":
        """This sequence rotated to its lexicographically least phase."""
        return CyclicSequence(self.canonical_bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self):
        return len(self.bits)

    def __eq__(self, other):
        return (
            isinstance(other, CyclicSequence)
            and len(self.bits) == len(other.bits)
            and self.canonical_bits == other.canonical_bits
        )

    def __hash__(self):
        return hash(("CyclicSequence", self.canonical_bits))

    def __str__(self):
        return "[" + "".join(map(str, self.bits)) + "]"

    def __repr__(self):
        return f"CyclicSequence({''.join(map(str, self.bits))!r})"


ZERO_SEQUENCE = CyclicSequence([0])


@dataclass(frozen=True)
class SequenceFamily:
    """A set of cyclic sequences produced by one register.

    ``exponent`` is the common minimal period when all members share one,
    else None (possible for reducible characteristic polynomials).
    """

    order: int
    members: tuple
    exponent: int | None

    def __str__(self):
        return "\n".join(str(s) for s in self.members)


@dataclass(frozen=True)
class PerfectFactor:
    """2^(n-k) vertex-disjoint cycles of length 2^k covering all n-tuples.

    ``zero_state`` holds one rotation offset per cycle marking the chosen
    zero state; constructions store cycles canonically with offset 0.
    """

    order: int
    subdegree: int
    cycles: tuple
    zero_state: tuple

    def __str__(self):
        return "\n".join(str(s) for s in self.cycles)


def generate_cycles(f: Gf2Poly) -> SequenceFamily:
    """Partition the 2^n - 1 nonzero register states of f into cycles.

    Members are returned in canonical phase, sorted.  For irreducible f
    every cycle has length exponent(f).
    """
    n = f.degree
    if f.mask == 0 or n == 0:
        raise ValueError("need a characteristic polynomial of degree >= 1")
    if n > 24:
        raise ValueError("degree capped at 24")
    if not (f.mask & 1):
        raise ValueError("singular register: constant term of f is zero")
    taps = f.mask & ((1 << n) - 1)
    size = 1 << n
    seen = bytearray(size)
    cycles = []
    for start in range(1, size):
        if seen[start]:
            continue
        state, bits = start, []
        while not seen[state]:
            seen[state] = 1
            bits.append(state & 1)
            state = (state >> 1) | (((state & taps).bit_count() & 1) << (n - 1))
        cycles.append(CyclicSequence(bits).canonical())
    cycles.sort(key=lambda c: c.bits)
    lengths = {len(c) for c in cycles}
    return SequenceFamily(
        order=n,
        members=tuple(cycles),
        exponent=lengths.pop() if len(lengths) == 1 else None,
    )


def m_sequence(f: Gf2Poly) -> CyclicSequence:
    """The single cycle of a primitive polynomial, in canonical phase."""
    if f.mask == 0 or f.degree == 0:
        raise ValueError("not primitive: constant polynomial")
    if not is_irreducible(f):
        raise ValueError(f"not primitive: {f} is reducible")
    if not (f.mask & 1):
        raise ValueError("not primitive: x has no exponent")
    e, full = exponent(f), (1 << f.degree) - 1
    if e != full:
        raise ValueError(f"not primitive: exponent of {f} is {e}, not {full}")
    return generate_cycles(f).members[0]


def _window_keys(seq: CyclicSequence, n: int):
    ext = seq.bits * (n // len(seq.bits) + 2)
    for p in range(len(seq.bits)):
        w = 0
        for j in range(n):
            w = (w << 1) | ext[p + j]
        yield w


def verify_zero_factor(fam: SequenceFamily) -> bool:
    """True iff the n-windows across members are exactly the nonzero n-tuples."""
    n = fam.order
    seen = set()
    for s in fam.members:
        for w in _window_keys(s, n):
            if w == 0 or w in seen:
                return False
            seen.add(w)
    return len(seen) == (1 << n) - 1


def verify_perfect_factor(pf: PerfectFactor) -> bool:
    """True iff pf really is a PF(n,k): cycle census plus full window coverage."""
    n, k = pf.order, pf.subdegree
    if len(pf.cycles) != 1 << (n - k):
        return False
    if any(len(c) != 1 << k for c in pf.cycles):
        return False
    seen = set()
    for c in pf.cycles:
        for w in _window_keys(c, n):
            if w in seen:
                return False
            seen.add(w)
    return len(seen) == 1 << n


def shift(s: CyclicSequence, i: int) -> CyclicSequence:
    """E^i applied to s: position p of the result is s_{p+i}."""
    L = len(s.bits)
    i %= L
    return CyclicSequence(s.bits[i:] + s.bits[:i])


def add_seq(s: CyclicSequence, u: CyclicSequence) -> CyclicSequence:
    """Position-wise XOR, re-minimized; the zero result is [0].

    Lengths must be equal, or one period must divide the other (the
    shorter sequence is expanded to the common length).
    """
    a, b = s.bits, u.bits
    if len(a) % len(b) == 0:
        b = b * (len(a) // len(b))
    elif len(b) % len(a) == 0:
        a = a * (len(b) // len(a))
    else:
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return CyclicSequence(x ^ y for x, y in zip(a, b))


def shift_and_add_check(s: CyclicSequence) -> bool:
    """True iff s + E^i s is a rotation of s for every i in 1..len-1."""
    text = "".join(map(str, s.bits))
    L = len(text)
    doubled = text + text
    base = int(text, 2)
    for i in range(1, L):
        rotated = int(doubled[i : i + L], 2)
        if format(base ^ rotated, f"0{L}b") not in doubled:
            return False
    return True


def d_morphism(s: CyclicSequence) -> CyclicSequence:
    """The derivative D: position i of the result is s_i + s_{i+1}."""
    b = s.bits
    L = len(b)
    return CyclicSequence(b[i] ^ b[(i + 1) % L] for i in range(L))


def d_inverse_bits(bits, choice: int) -> tuple:
    """Length-preserving D-preimage of an even-weight bit vector.

    Entry 0 is ``choice`` and entry i+1 is entry i plus bits[i]; even
    weight makes the prefix sums consistent around the wrap.
    """
    bits = tuple(int(b) for b in bits)
    if sum(bits) % 2:
        raise ValueError("no length-preserving D-preimage: weight is odd")
    out = [int(choice)]
    for b in bits[:-1]:
        out.append(out[-1] ^ b)
    return tuple(out)


def d_inverse(s: CyclicSequence, choice: int) -> CyclicSequence:
    """A D-preimage of s selected by ``choice``.

    Even weight: the period-len(s) preimage whose first bit is choice (the
    two choices are complements).  Odd weight: the period-2*len(s) preimage
    (prefix sums wrap with a complement).  D(d_inverse(s, b)) = s always.
    """
    b = s.bits
    L = len(b)
    if sum(b) % 2 == 0:
        return CyclicSequence(d_inverse_bits(b, choice))
    out = [int(choice)]
    for i in range(2 * L - 1):
        out.append(out[-1] ^ b[i % L])
    return CyclicSequence(out)


def weight_parity(s: CyclicSequence) -> str:
    """Parity of the number of ones in one period: "even" or "odd"."""
    return "odd" if s.weight % 2 else "even"


def debruijn_sequence(n: int) -> CyclicSequence:
    """Span-n de Bruijn sequence by the greedy prefer-one rule, canonical phase."""
    if not 1 <= n <= 20:
        raise ValueError("span must be between 1 and 20")
    mask = (1 << n) - 1
    seen = bytearray(1 << n)
    state, bits = 0, []
    for _ in range(1 << n):
        seen[state] = 1
        nxt = ((state << 1) | 1) & mask
        if seen[nxt]:
            nxt = (state << 1) & mask
            bits.append(0)
        else:
            bits.append(1)
        state = nxt
    if state != 0 or not all(seen):
        raise RuntimeError("prefer-one walk failed to close")
    return CyclicSequence(bits).canonical()


def debruijn_from_primitive(f: Gf2Poly) -> CyclicSequence:
    """From an M-sequence to a de Bruijn sequence by extending the zero run.

    The canonical M-sequence starts with its run of deg(f)-1 zeros, so one
    prepended zero completes the run to length deg(f).
    """
    return CyclicSequence((0,) + m_sequence(f).bits)
