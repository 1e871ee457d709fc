"""Dense linear algebra over the prime field F_p (row-vector convention).

Matrices are numpy integer arrays with entries in 0..p-1.  Products switch to
Python integers (object dtype) when int64 accumulation could overflow.
"""

import numpy as np

_INT64_SAFE = 2**62


def asmat(a, p):
    return np.asarray(a, dtype=np.int64) % p


def matmul(a, b, p):
    k = a.shape[-1]
    if (p - 1) * (p - 1) * max(k, 1) < _INT64_SAFE:
        return (a @ b) % p
    return np.asarray((a.astype(object) @ b.astype(object)) % p, dtype=np.int64)


def identity(d):
    return np.eye(d, dtype=np.int64)


def rref(a, p):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = asmat(a, p).copy()
    if a.ndim == 1:
        a = a.reshape(1, -1)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a, p):
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Basis (as rows) of {x : a @ x = 0} for column vectors x."""
    a = asmat(a, p)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return identity(cols)
    r, piv = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, c in enumerate(piv):
            out[k, c] = (-r[i, f]) % p
    return out


def left_nullspace(a, p):
    """Basis (as rows) of {v : v @ a = 0}."""
    return nullspace(asmat(a, p).T, p)


def inverse(a, p):
    d = a.shape[0]
    aug = np.concatenate([asmat(a, p), identity(d)], axis=1)
    r, piv = rref(aug, p)
    if piv[:d] != list(range(d)) or len(piv) < d:
        raise ValueError("matrix is singular")
    return r[:d, d:]


def is_invertible(a, p):
    return rank(a, p) == a.shape[0]


def projective_points(basis, p):
    """One nonzero vector from each line of the row space of `basis`."""
    k = basis.shape[0]
    for lead in range(k):
        # coefficient vectors whose first nonzero entry is a 1 at position `lead`
        rest = k - lead - 1
        for idx in range(p**rest):
            coeff = np.zeros(k, dtype=np.int64)
            coeff[lead] = 1
            x = idx
            for j in range(rest):
                coeff[lead + 1 + j] = x % p
                x //= p
            yield matmul(coeff.reshape(1, -1), basis, p)[0]


class Echelon:
    """Incrementally maintained semi-echelon basis, for spinning and rank checks."""

    def __init__(self, dim, p):
        self.dim = dim
        self.p = p
        self.rows = []
        self.pivots = []

    def reduce(self, v):
        v = np.array(v, dtype=np.int64) % self.p
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def add(self, v):
        """Reduce v; if nonzero, insert it and return the reduced vector, else None."""
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return None
        c = int(nz[0])
        v = (v * pow(int(v[c]), -1, self.p)) % self.p
        self.rows.append(v)
        self.pivots.append(c)
        return v

    def __len__(self):
        return len(self.rows)

    def matrix(self):
        if not self.rows:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)
