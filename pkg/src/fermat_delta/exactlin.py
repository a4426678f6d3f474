"""Exact linear algebra over Z and Z/m.

Matrices are plain lists of rows of Python ints. Vectors are rows and maps
act on the right (``v -> v M``), so a submodule is the row span of its
generator matrix.

Internally, lattices are kept as sparse echelon bases (``{column: value}``
rows keyed by pivot column) because the wedge-square generator matrices
are large but very sparse.
"""

from __future__ import annotations

from bisect import insort
from functools import cached_property
from math import gcd


class NonFieldModulusError(ValueError):
    """A pivot had no inverse modulo the requested modulus."""


def xgcd(a, b):
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b)`` and ``g >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


# -- dense helpers ---------------------------------------------------------

def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(k):
    out = zeros(k, k)
    for i in range(k):
        out[i][i] = 1
    return out


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_mul(A, B, modulus=None):
    if A and len(A[0]) != len(B):
        raise ValueError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x?")
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * cols
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] += a * b
        if modulus:
            acc = [x % modulus for x in acc]
        out.append(acc)
    return out


def vec_mat(v, M, modulus=None):
    """Row vector times matrix."""
    if len(v) != len(M):
        raise ValueError(f"vector of length {len(v)} against {len(M)} rows")
    cols = len(M[0]) if M else 0
    acc = [0] * cols
    for k, a in enumerate(v):
        if a:
            for j, b in enumerate(M[k]):
                if b:
                    acc[j] += a * b
    if modulus:
        acc = [x % modulus for x in acc]
    return acc


def reduce_mod(M, modulus):
    return [[x % modulus for x in row] for row in M]


def _to_sparse(v):
    return {j: x for j, x in enumerate(v) if x}


def _to_dense(row, ncols):
    out = [0] * ncols
    for j, x in row.items():
        out[j] = x
    return out


# -- lattices over Z -------------------------------------------------------

class _IntEchelon:
    """Row echelon basis of a Z-lattice, maintained incrementally.

    ``rows[c]`` is the basis row whose leading column is ``c``; its leading
    entry is positive. Adding a vector combines it with existing pivots by
    extended-gcd row operations, so the basis always spans exactly the
    lattice of everything added so far.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}
        self.pivots = []

    def _leading(self, row):
        return min(row) if row else None

    def add(self, vec):
        v = dict(vec)
        while v:
            c = min(v)
            piv = self.rows.get(c)
            if piv is None:
                if v[c] < 0:
                    v = {j: -x for j, x in v.items()}
                self.rows[c] = v
                insort(self.pivots, c)
                return True
            a, b = piv[c], v[c]
            if b % a == 0:
                _axpy(v, -(b // a), piv)
            else:
                x, y, g = xgcd(a, b)
                new_piv = {}
                _axpy(new_piv, x, piv)
                _axpy(new_piv, y, v)
                rest = {}
                _axpy(rest, -(b // g), piv)
                _axpy(rest, a // g, v)
                self.rows[c] = new_piv
                v = rest
        return False

    def reduce(self, vec):
        """Reduce ``vec`` against the basis; return the remainder (sparse)."""
        v = dict(vec)
        for c in self.pivots:
            x = v.get(c)
            if not x:
                continue
            piv = self.rows[c]
            q = x // piv[c]
            if q:
                _axpy(v, -q, piv)
        return v

    def contains(self, vec):
        v = dict(vec)
        while v:
            c = min(v)
            piv = self.rows.get(c)
            if piv is None or v[c] % piv[c]:
                return False
            _axpy(v, -(v[c] // piv[c]), piv)
        return True

    def hermite_rows(self):
        """Fully reduced rows: entries above each pivot lie in [0, pivot)."""
        out = {}
        for c in reversed(self.pivots):
            row = dict(self.rows[c])
            for c2 in self.pivots:
                if c2 <= c or c2 not in row:
                    continue
                lower = out[c2]
                q = row[c2] // lower[c2]
                if q:
                    _axpy(row, -q, lower)
            out[c] = row
        return [out[c] for c in self.pivots]


def _axpy(target, scale, source, modulus=None):
    """``target += scale * source`` on sparse rows, dropping zeros."""
    if not scale:
        return
    for j, x in source.items():
        y = target.get(j, 0) + scale * x
        if modulus:
            y %= modulus
        if y:
            target[j] = y
        else:
            target.pop(j, None)


# -- vector spaces over Z/p -----------------------------------------------

class _ModEchelon:
    """Reduced echelon basis over Z/m with monic pivots.

    Only prime moduli are guaranteed to work; a composite modulus raises
    :class:`NonFieldModulusError` as soon as a pivot is not a unit.
    """

    def __init__(self, ncols, modulus):
        self.ncols = ncols
        self.m = modulus
        self.rows = {}
        self.pivots = []

    def _inverse(self, a):
        if gcd(a, self.m) != 1:
            raise NonFieldModulusError(
                f"non-field modulus: pivot {a} is not invertible mod {self.m}")
        return pow(a, -1, self.m)

    def reduce(self, vec):
        m = self.m
        v = {j: x % m for j, x in vec.items() if x % m}
        for c in self.pivots:
            x = v.get(c)
            if x:
                _axpy(v, -x, self.rows[c], m)
        return v

    def add(self, vec):
        v = self.reduce(vec)
        if not v:
            return False
        c = min(v)
        inv = self._inverse(v[c])
        v = {j: (x * inv) % self.m for j, x in v.items()}
        # keep the basis fully reduced
        for c2, row in self.rows.items():
            x = row.get(c)
            if x:
                _axpy(row, -x, v, self.m)
        self.rows[c] = v
        insort(self.pivots, c)
        return True

    def contains(self, vec):
        return not self.reduce(vec)


# -- public API ------------------------------------------------------------

def _echelon(ncols, modulus):
    return _IntEchelon(ncols) if modulus is None else _ModEchelon(ncols, modulus)


def _ncols(rows, ncols):
    if ncols is not None:
        return ncols
    if not rows:
        raise ValueError("ncols is required for an empty matrix")
    return len(rows[0])


def hermite_normal_form(M, ncols=None):
    """Row-style Hermite normal form of an integer matrix.

    Returns ``(H, rank)``. ``H`` has the same shape as ``M``: the nonzero
    rows come first in echelon order with positive pivots and the entries
    above each pivot reduced into ``[0, pivot)``; zero rows pad the bottom.
    """
    ncols = _ncols(M, ncols)
    ech = _IntEchelon(ncols)
    for row in M:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        ech.add(_to_sparse(row))
    H = [_to_dense(r, ncols) for r in ech.hermite_rows()]
    rank = len(H)
    H.extend([0] * ncols for _ in range(len(M) - rank))
    return H, rank


def rank(M, modulus=None, ncols=None):
    """Rank over Q (``modulus=None``) or over Z/p."""
    ncols = _ncols(M, ncols)
    ech = _echelon(ncols, modulus)
    for row in M:
        ech.add(_to_sparse(row))
    return len(ech.pivots)


class Submodule:
    """Row span of a generator matrix, over Z or over Z/m.

    Generators may be given dense (lists) or sparse (``{column: value}``).
    The echelon basis is computed lazily on first use.
    """

    def __init__(self, ambient, generators=(), modulus=None):
        self.ambient = ambient
        self.modulus = modulus
        self.generators = [g if isinstance(g, dict) else _to_sparse(g)
                           for g in generators]
        for g in self.generators:
            if g and max(g) >= ambient:
                raise ValueError(
                    f"generator outside ambient rank {ambient}")

    @cached_property
    def _ech(self):
        ech = _echelon(self.ambient, self.modulus)
        for g in self.generators:
            ech.add(g)
        return ech

    @property
    def rank(self):
        return len(self._ech.pivots)

    @property
    def hnf(self):
        """Echelon basis as dense rows (the HNF over Z, RREF over Z/p)."""
        ech = self._ech
        rows = ech.hermite_rows() if self.modulus is None else [
            ech.rows[c] for c in ech.pivots]
        return [_to_dense(r, self.ambient) for r in rows]

    def basis(self):
        return self.hnf

    def reduce(self, v):
        """Remainder of ``v`` after reduction against the echelon basis."""
        v = v if isinstance(v, dict) else _to_sparse(self._check(v))
        return _to_dense(self._ech.reduce(v), self.ambient)

    def _check(self, v):
        if len(v) != self.ambient:
            raise ValueError(
                f"dimension mismatch: vector of length {len(v)}, "
                f"ambient rank {self.ambient}")
        return v

    def __contains__(self, v):
        if isinstance(v, dict):
            if v and max(v) >= self.ambient:
                raise ValueError("dimension mismatch")
            return self._ech.contains(v)
        return self._ech.contains(_to_sparse(self._check(v)))

    def __repr__(self):
        ring = "Z" if self.modulus is None else f"Z/{self.modulus}"
        return f"<Submodule of rank {self.rank} in {ring}^{self.ambient}>"


def membership(S, v, modulus=None):
    """True iff ``v`` lies in the span of ``S``.

    ``modulus`` overrides the ring of ``S`` (the generators are reduced).
    """
    if modulus is not None and modulus != S.modulus:
        S = Submodule(S.ambient, S.generators, modulus)
    return v in S


def kernel(M, modulus=None, ncols=None):
    """Left kernel ``{v : v M = 0}`` as a :class:`Submodule`.

    Over Z the returned generators are a basis of the (saturated) kernel
    lattice, read off from the HNF of ``[M | I]``. Over Z/p they are a basis
    of the null space.
    """
    nrows = len(M)
    ncols = _ncols(M, ncols) if M else (ncols or 0)
    ech = _echelon(ncols + nrows, modulus)
    for i, row in enumerate(M):
        aug = _to_sparse(row)
        aug[ncols + i] = 1
        ech.add(aug)
    gens = []
    for c in ech.pivots:
        if c >= ncols:
            row = ech.rows[c]
            gens.append([row.get(ncols + i, 0) for i in range(nrows)])
    return Submodule(nrows, gens, modulus)


def unimodular_complement(G, ambient):
    """Integer projection killing the saturated row span of ``G``.

    Returns ``(P, rank)`` where ``P`` is an ``ambient x (ambient - rank)``
    matrix such that ``v -> v P`` is surjective onto ``Z^(ambient-rank)``
    and its kernel is the saturation of the row span of ``G``. The columns
    of ``P`` are a basis of the right kernel of ``G`` that extends to a
    unimodular matrix.
    """
    # right kernel of G == left kernel of G^T
    GT = transpose(G) if G else [[] for _ in range(ambient)]
    K = kernel(GT, ncols=len(G))
    cols = K.hnf
    return transpose(cols) if cols else [[] for _ in range(ambient)], ambient - len(cols)


def inverse_mod(A, p):
    """Inverse of a square matrix over Z/p; ValueError if singular."""
    k = len(A)
    ech = _ModEchelon(2 * k, p)
    for i, row in enumerate(A):
        if len(row) != k:
            raise ValueError("matrix is not square")
        aug = _to_sparse([x % p for x in row])
        aug[k + i] = 1
        ech.add(aug)
    if ech.pivots[:k] != list(range(k)):
        raise ValueError("matrix is singular mod %d" % p)
    return [[ech.rows[c].get(k + j, 0) for j in range(k)] for c in range(k)]


def content(v):
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
