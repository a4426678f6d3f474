"""The exterior square of H_1(U) and its kernel onto the exterior square of H_1(X).

Basis wedges ``E_{i1,j1} ^ E_{i2,j2}`` are stored with the smaller label
first under lexicographic order on ``(i, j)``. For ``i1 < i2`` this is the
usual ``i1 <= i2`` index set; for ``i1 == i2`` it additionally fixes
``j1 < j2``, so every wedge has exactly one stored form.

Vectors on the exterior square of a rank-``k`` lattice use the flat order
of pairs ``(a, b)``, ``0 <= a < b < k``, lexicographically.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .exactlin import Submodule
from .homology import basis_pairs, gamma_rows, h1u_rank, pair_index


# -- flat pair indexing ----------------------------------------------------

def pair_position(a, b, k):
    """Position of the pair ``a < b`` among all pairs of ``range(k)``."""
    return a * k - a * (a + 1) // 2 + (b - a - 1)


@lru_cache(maxsize=None)
def position_pairs(k):
    return tuple((a, b) for a in range(k) for b in range(a + 1, k))


def wedge_vectors(u, v, modulus=None):
    """Sparse ``{position: coeff}`` of ``u ^ v`` for vectors of equal length."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    k = len(u)
    su = [(a, x) for a, x in enumerate(u) if x]
    sv = [(b, y) for b, y in enumerate(v) if y]
    out = {}
    for a, x in su:
        for b, y in sv:
            if a == b:
                continue
            if a < b:
                pos, c = pair_position(a, b, k), x * y
            else:
                pos, c = pair_position(b, a, k), -x * y
            out[pos] = out.get(pos, 0) + c
    return _clean(out, modulus)


def _clean(d, modulus=None):
    if modulus:
        return {p: c % modulus for p, c in d.items() if c % modulus}
    return {p: c for p, c in d.items() if c}


def apply_to_wedge(M, w, k, modulus=None):
    """Image of a flat sparse wedge ``w`` under ``a ^ b -> aM ^ bM``.

    ``M`` is ``k x k'`` (it may be rectangular, e.g. a projection).
    """
    pairs = position_pairs(k)
    out = {}
    for pos, c in w.items():
        a, b = pairs[pos]
        for p2, c2 in wedge_vectors(M[a], M[b]).items():
            out[p2] = out.get(p2, 0) + c * c2
    return _clean(out, modulus)


def induced_wedge_matrix(M, modulus=None):
    """Matrix of ``v ^ w -> vM ^ wM`` on the flat pair basis.

    A ``k x k'`` matrix induces a ``C(k,2) x C(k',2)`` matrix. Row
    convention: row ``(a, b)`` holds the coordinates of ``M[a] ^ M[b]``.
    """
    k = len(M)
    if k and any(len(r) != len(M[0]) for r in M):
        raise ValueError("ragged matrix")
    k2 = len(M[0]) if k else 0
    size = comb(k2, 2)
    out = []
    for a, b in position_pairs(k):
        row = [0] * size
        for pos, c in wedge_vectors(M[a], M[b], modulus).items():
            row[pos] = c
        out.append(row)
    return out


def check_square(M, n):
    d = h1u_rank(n)
    if len(M) != d or any(len(r) != d for r in M):
        raise ValueError(f"expected a {d}x{d} matrix on H_1(U) for n={n}")


# -- labelled wedges on H_1(U) ---------------------------------------------

def index_set(n):
    """Canonical basis labels ``(i1, j1, i2, j2)`` of the exterior square."""
    if n < 3:
        raise ValueError("n must be at least 3")
    labels = basis_pairs(n)
    return [(*labels[a], *labels[b]) for a, b in position_pairs(len(labels))]


def canonical_term(i1, j1, i2, j2, c):
    """Canonical form of ``c * E_{i1,j1} ^ E_{i2,j2}``, or ``None`` if zero."""
    if (i1, j1) == (i2, j2) or c == 0:
        return None
    if (i1, j1) > (i2, j2):
        return (i2, j2, i1, j1), -c
    return (i1, j1, i2, j2), c


class WedgeElt:
    """Sparse element of H_1(U) ^ H_1(U) keyed by canonical labels."""

    __slots__ = ("n", "terms", "modulus")

    def __init__(self, n, terms=None, modulus=None):
        self.n = n
        self.modulus = modulus
        acc = {}
        for (i1, j1, i2, j2), c in (terms or {}).items():
            for x in (i1, j1, i2, j2):
                if not 1 <= x <= n - 1:
                    raise IndexError(f"index {x} out of range for n={n}")
            t = canonical_term(i1, j1, i2, j2, c)
            if t:
                acc[t[0]] = acc.get(t[0], 0) + t[1]
        if modulus:
            acc = {k: v % modulus for k, v in acc.items()}
        self.terms = {k: v for k, v in sorted(acc.items()) if v}

    @classmethod
    def from_flat(cls, n, flat, modulus=None):
        labels = basis_pairs(n)
        pairs = position_pairs(len(labels))
        terms = {}
        for pos, c in flat.items():
            a, b = pairs[pos]
            terms[(*labels[a], *labels[b])] = c
        return cls(n, terms, modulus)

    @classmethod
    def from_vector(cls, n, vec, modulus=None):
        return cls.from_flat(n, {p: c for p, c in enumerate(vec) if c}, modulus)

    def flat(self):
        """Sparse ``{position: coeff}`` in the flat pair order."""
        d = h1u_rank(self.n)
        n = self.n
        return {pair_position(pair_index(i1, j1, n), pair_index(i2, j2, n), d): c
                for (i1, j1, i2, j2), c in self.terms.items()}

    def to_vector(self):
        vec = [0] * comb(h1u_rank(self.n), 2)
        for pos, c in self.flat().items():
            vec[pos] = c
        return vec

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return self.modulus or other.modulus

    def __add__(self, other):
        m = self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return WedgeElt(self.n, terms, m)

    def __neg__(self):
        return WedgeElt(self.n, {k: -c for k, c in self.terms.items()},
                        self.modulus)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return WedgeElt(self.n, {t: k * c for t, c in self.terms.items()},
                        self.modulus)

    def __eq__(self, other):
        if not isinstance(other, WedgeElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def is_zero(self):
        return not self.terms

    def reduce(self, modulus):
        return WedgeElt(self.n, self.terms, modulus)

    def apply(self, M):
        """Image under the map induced by ``M`` acting on H_1(U)."""
        check_square(M, self.n)
        flat = apply_to_wedge(M, self.flat(), h1u_rank(self.n), self.modulus)
        return WedgeElt.from_flat(self.n, flat, self.modulus)

    def __repr__(self):
        return f"WedgeElt(n={self.n}, {format_wedge(self) or '0'})"


def wedge_of_classes(x, y):
    """``x ^ y`` for two classes in H_1(U), expanded bilinearly."""
    if x.n != y.n:
        raise ValueError(f"degree mismatch: {x.n} vs {y.n}")
    m = x.modulus or y.modulus
    return WedgeElt.from_flat(x.n, wedge_vectors(x.coords, y.coords, m), m)


def basis_wedge(i1, j1, i2, j2, n, c=1):
    return WedgeElt(n, {(i1, j1, i2, j2): c})


def format_wedge(w, style="text"):
    """Render a wedge as a signed sum of basis wedges in canonical order.

    ``style="latex"`` gives ``E_{1,1} \\wedge E_{2,2}``; ``"text"`` gives
    ``E11^E22`` with comma-separated indices once any index exceeds 9.
    """
    wide = any(x > 9 for k in w.terms for x in k)
    parts = []
    for (i1, j1, i2, j2), c in w.terms.items():
        if style == "latex":
            term = f"E_{{{i1},{j1}}} \\wedge E_{{{i2},{j2}}}"
        elif wide:
            term = f"E{i1},{j1}^E{i2},{j2}"
        else:
            term = f"E{i1}{j1}^E{i2}{j2}"
        mag = abs(c)
        body = term if mag == 1 else f"{mag}*{term}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def kernel_generators(n, modulus=None):
    """Flat sparse generators ``s ^ E_{i,j}`` of S ^ H_1(U)."""
    d = h1u_rank(n)
    gens = []
    for s in gamma_rows(n):
        for b in range(d):
            e = [0] * d
            e[b] = 1
            g = wedge_vectors(s, e, modulus)
            if g:
                gens.append(g)
    return gens


@lru_cache(maxsize=None)
def _wedge_kernel(n, modulus):
    return Submodule(comb(h1u_rank(n), 2), kernel_generators(n, modulus), modulus)


def wedge_kernel(n, modulus=None):
    """S ^ H_1(U), the kernel of the map onto H_1(X) ^ H_1(X)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return _wedge_kernel(n, modulus)


def expected_kernel_rank(n):
    # (n-1)/2 * (2n^2 - 5n + 2), always an integer
    return (n - 1) * (2 * n * n - 5 * n + 2) // 2
