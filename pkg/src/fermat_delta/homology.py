"""H_1(U) as the augmentation ideal, its E-basis, and the quotient H_1(X).

H_1(U, Y) is identified with the group ring (the path ``beta`` maps to 1),
and H_1(U) with the augmentation ideal. The classes

    E_{i,j} = (1 - eps0**i) (1 - eps1**j),   1 <= i, j <= n-1,

form a Z-basis of H_1(U). Coordinates in this basis are ordered
lexicographically in ``(i, j)``; every matrix in this package uses that
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exactlin import Submodule, unimodular_complement, vec_mat
from .groupring import (GroupRingElt, gamma, in_augmentation_ideal)

GENERATORS = ("eps0", "eps1", "tau")


class NotInH1UError(ValueError):
    """A group ring element outside the augmentation ideal."""


def basis_pairs(n):
    """The E-basis labels ``(i, j)``, 1 <= i, j <= n-1, in lexicographic order."""
    return [(i, j) for i in range(1, n) for j in range(1, n)]


def pair_index(i, j, n):
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise IndexError(f"E_{{{i},{j}}} is not a basis element for n={n}")
    return (i - 1) * (n - 1) + (j - 1)


def h1u_rank(n):
    return (n - 1) ** 2


def E_class(i, j, n, modulus=None):
    """Group ring coordinates of ``[E_{i,j}]``; zero when ``i*j == 0 mod n``."""
    one = GroupRingElt.one(n, modulus)
    a = one - GroupRingElt.monomial(i, 0, n, modulus=modulus)
    b = one - GroupRingElt.monomial(0, j, n, modulus=modulus)
    return a * b


@dataclass(frozen=True)
class H1UClass:
    """An element of H_1(U), as coordinates in the E-basis."""

    n: int
    coords: tuple
    modulus: int | None = None

    def __post_init__(self):
        if len(self.coords) != h1u_rank(self.n):
            raise ValueError(
                f"expected {h1u_rank(self.n)} coordinates for n={self.n}, "
                f"got {len(self.coords)}")
        coords = tuple(self.coords)
        if self.modulus:
            coords = tuple(x % self.modulus for x in coords)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def basis(cls, i, j, n, modulus=None):
        v = [0] * h1u_rank(n)
        v[pair_index(i, j, n)] = 1
        return cls(n, tuple(v), modulus)

    @classmethod
    def zero(cls, n, modulus=None):
        return cls(n, (0,) * h1u_rank(n), modulus)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return self.modulus or other.modulus

    def __add__(self, other):
        m = self._check(other)
        return H1UClass(self.n, tuple(a + b for a, b in
                                      zip(self.coords, other.coords)), m)

    def __sub__(self, other):
        m = self._check(other)
        return H1UClass(self.n, tuple(a - b for a, b in
                                      zip(self.coords, other.coords)), m)

    def __neg__(self):
        return H1UClass(self.n, tuple(-a for a in self.coords), self.modulus)

    def __rmul__(self, k):
        return H1UClass(self.n, tuple(k * a for a in self.coords), self.modulus)

    def to_group_ring(self):
        n = self.n
        out = GroupRingElt.zero(n, self.modulus)
        for (i, j), c in zip(basis_pairs(n), self.coords):
            if c:
                out = out + E_class(i, j, n, self.modulus) * c
        return out

    def terms(self):
        return [(pair, c) for pair, c in zip(basis_pairs(self.n), self.coords)
                if c]


def to_E_coordinates(x):
    """Coordinates of an augmentation-ideal element in the E-basis.

    ``[e_{i,j}]`` with ``i, j >= 1`` occurs only in ``E_{i,j}``, so the
    coordinate of ``E_{i,j}`` is the coefficient of ``eps0**i eps1**j``.
    The remaining coefficients are then forced by the zero row and column
    sums, which is exactly the augmentation condition.
    """
    if not in_augmentation_ideal(x):
        raise NotInH1UError("not in H_1(U): row or column sums are nonzero")
    n = x.n
    return H1UClass(n, tuple(x.coeffs[i][j] for i, j in basis_pairs(n)),
                    x.modulus)


def act_generator(g, x):
    """Apply ``eps0``, ``eps1`` (multiplication) or ``tau`` (swap) to ``x``."""
    a = x.to_group_ring()
    n = x.n
    if g == "eps0":
        a = GroupRingElt.monomial(1, 0, n, modulus=x.modulus) * a
    elif g == "eps1":
        a = GroupRingElt.monomial(0, 1, n, modulus=x.modulus) * a
    elif g == "tau":
        a = a.transpose()
    else:
        raise ValueError(f"unknown generator {g!r}; expected one of {GENERATORS}")
    return to_E_coordinates(a)


@lru_cache(maxsize=None)
def _generator_matrix(g, n):
    return tuple(tuple(act_generator(g, H1UClass.basis(i, j, n)).coords)
                 for i, j in basis_pairs(n))


def generator_matrix(g, n, modulus=None):
    """Matrix of ``g`` on H_1(U); row k is the image of the k-th basis vector."""
    M = [list(r) for r in _generator_matrix(g, n)]
    if modulus:
        M = [[x % modulus for x in r] for r in M]
    return M


def multiplication_matrix(a, modulus=None):
    """Matrix on H_1(U) of multiplication by the group ring element ``a``."""
    n = a.n
    rows = []
    for i, j in basis_pairs(n):
        img = to_E_coordinates(a * E_class(i, j, n))
        rows.append([x % modulus if modulus else x for x in img.coords])
    return rows


def gamma_rows(n):
    """E-coordinates of ``gamma_i * beta`` for 1 <= i <= n-1."""
    return [list(to_E_coordinates(gamma(i, n)).coords) for i in range(1, n)]


@dataclass
class QuotientStructure:
    """H_1(X) = H_1(U) / Stab(eps0*eps1).

    ``projection`` is a ``(n-1)^2 x (n-1)(n-2)`` integer matrix whose kernel
    is exactly the relation module and which maps onto Z^((n-1)(n-2)).
    """

    n: int
    relations: Submodule
    projection: list = field(repr=False)

    @property
    def ambient_rank(self):
        return h1u_rank(self.n)

    @property
    def relation_rank(self):
        return self.relations.rank

    @property
    def quotient_rank(self):
        return len(self.projection[0]) if self.projection else 0

    @property
    def genus(self):
        return self.quotient_rank // 2

    def project(self, v):
        coords = v.coords if isinstance(v, H1UClass) else v
        return vec_mat(list(coords), self.projection)


@lru_cache(maxsize=None)
def _h1x_structure(n):
    G = gamma_rows(n)
    d = h1u_rank(n)
    S = Submodule(d, G)
    P, _ = unimodular_complement(G, d)
    return QuotientStructure(n, S, P)


def h1x_structure(n):
    if n < 3:
        raise ValueError("n must be at least 3")
    return _h1x_structure(n)
