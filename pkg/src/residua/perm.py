"""Permutations of {1..n}, stored internally as 0-based image tuples.

Products act on the right: ``(a * b)`` applies ``a`` first, then ``b``.
Cycle notation is 1-indexed, as in ``(1 2 3)(4 5)``.
"""

import math
import re

from .errors import InputError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation(tuple):
    """A bijection of {0..n-1} given by its image table."""

    __slots__ = ()

    def __new__(cls, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation: {images!r}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree):
        return cls._raw(range(degree))

    @classmethod
    def from_images(cls, images):
        """Build from a 1-indexed image table."""
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, cycles, degree=None):
        """Parse ``"(1 2 3)(4 5)"`` or a list of 1-indexed cycles."""
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        top = max((max(c) for c in cycles if c), default=0)
        if degree is None:
            degree = top
        if top > degree:
            raise InputError(f"cycle point {top} exceeds degree {degree}")
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if x < 1:
                    raise InputError(f"cycle points are 1-indexed, got {x}")
                if x in seen:
                    raise InputError(f"point {x} occurs in more than one cycle")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls._raw(img)

    @property
    def degree(self):
        return len(self)

    @property
    def images(self):
        """1-indexed image table."""
        return tuple(i + 1 for i in self)

    def __mul__(self, other):
        return Permutation._raw(map(other.__getitem__, self))

    def __invert__(self):
        return self.inverse()

    def inverse(self):
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._raw(inv)

    def __pow__(self, e):
        return Permutation._raw(power(self, e))

    def __call__(self, point):
        return self[point]

    def is_identity(self):
        return is_identity(self)

    def cycles(self):
        """Nontrivial cycles, 1-indexed, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def support(self):
        return [i for i, j in enumerate(self) if i != j]

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation.from_cycles({format_cycles(self)!r}, {len(self)})"


def parse_cycles(text):
    """Parse cycle notation into a list of 1-indexed integer tuples."""
    s = text.strip()
    if not s:
        raise InputError("empty permutation")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise InputError(f"unexpected text {s[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            cyc = tuple(int(x) for x in body)
        except ValueError:
            raise InputError(f"non-integer point in cycle ({m.group(1)})") from None
        if len(set(cyc)) != len(cyc):
            raise InputError(f"repeated point in cycle ({m.group(1)})")
        if cyc:
            cycles.append(cyc)
    if s[pos:].strip():
        raise InputError(f"unexpected text {s[pos:]!r} in {text!r}")
    return cycles


def format_cycles(p):
    cyc = Permutation.cycles(p)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


# Raw tuple helpers used on hot paths (no validation, no wrapping).

def mul(a, b):
    return tuple(map(b.__getitem__, a))


def inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def power(a, e):
    n = len(a)
    if e < 0:
        a, e = inv(a), -e
    result = tuple(range(n))
    base = tuple(a)
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def comm(a, b):
    """The commutator a^-1 b^-1 a b."""
    return mul(mul(inv(a), inv(b)), mul(a, b))


def conj(a, g):
    """a^g = g^-1 a g."""
    return mul(mul(inv(g), a), g)


_IDENTITIES = {}


def identity_tuple(n):
    e = _IDENTITIES.get(n)
    if e is None:
        e = _IDENTITIES[n] = tuple(range(n))
    return e


def is_identity(a):
    if not isinstance(a, tuple):
        a = tuple(a)
    return a == identity_tuple(len(a))


def element_order(a):
    n = len(a)
    seen = [False] * n
    o = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        o = math.lcm(o, length)
    return o
