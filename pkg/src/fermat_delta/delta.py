"""The classifying element Delta in H_1(U) ^ H_1(U) and its image rho."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactlin import content, membership
from .homology import GENERATORS, generator_matrix, h1u_rank, h1x_structure
from .wedge import (WedgeElt, apply_to_wedge, index_set, position_pairs,
                    wedge_kernel)
from .words import degree2_image, peel_reduction, s_star_word

METHODS = ("formula", "word", "peel")


def _check_index(i1, j1, i2, j2, n):
    for x in (i1, j1, i2, j2):
        if not 1 <= x <= n - 1:
            raise IndexError(f"index {x} outside 1..{n - 1}")
    if i1 > i2 or (i1, j1) == (i2, j2):
        raise IndexError(f"({i1},{j1},{i2},{j2}) is not in the index set")


def epsilon_coeff(i1, j1, i2, j2, n):
    """Coefficient of ``E_{i1,j1} ^ E_{i2,j2}`` in Delta.

    Residues mod n-1 are taken in ``0..n-2``; ``0`` here plays the role of
    ``n-1`` in the ``1..n-1`` convention, which only changes the
    representative, not the congruence.
    """
    _check_index(i1, j1, i2, j2, n)
    m = n - 1
    di = (i2 - i1) % m
    if di == 0:
        return 0
    dj = (j2 - j1) % m
    if dj == di:
        return 1
    if (dj + 1) % m == di:
        return -1
    return 0


@lru_cache(maxsize=None)
def _delta_formula(n):
    terms = {}
    for i1, j1, i2, j2 in index_set(n):
        c = epsilon_coeff(i1, j1, i2, j2, n)
        if c:
            terms[(i1, j1, i2, j2)] = c
    return WedgeElt(n, terms)


def delta_formula(n, modulus=None):
    """Delta from the closed-form coefficients."""
    if n < 3:
        raise ValueError("n must be at least 3")
    d = _delta_formula(n)
    return d.reduce(modulus) if modulus else d


def delta(n, method="formula", modulus=None):
    if method == "formula":
        out = delta_formula(n)
    elif method == "word":
        out = degree2_image(s_star_word(n))
    elif method == "peel":
        out = peel_reduction(s_star_word(n))
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return out.reduce(modulus) if modulus else out


def expected_term_count(n):
    return (n - 1) ** 2 * (n - 2)


@dataclass
class Rho:
    """Image of Delta in H_1(X) ^ H_1(X).

    ``coords`` are integer coordinates on the flat pair basis of the
    quotient lattice Z^((n-1)(n-2)) chosen by the homology module's
    projection; ``content`` is their gcd and does not depend on that choice.
    """

    n: int
    coords: dict
    dimension: int
    is_nonzero: bool
    content: int

    def to_vector(self):
        vec = [0] * self.dimension
        for p, c in self.coords.items():
            vec[p] = c
        return vec


def project_wedge(w):
    """Image of a wedge on H_1(U) in the exterior square of H_1(X)."""
    Q = h1x_structure(w.n)
    return apply_to_wedge(Q.projection, w.flat(), h1u_rank(w.n), w.modulus)


def rho(n):
    Q = h1x_structure(n)
    coords = project_wedge(delta_formula(n))
    dim = len(position_pairs(Q.quotient_rank))
    return Rho(n, coords, dim, bool(coords), content(coords.values()))


def act_on_delta(g, n, modulus=None):
    return delta_formula(n, modulus).apply(generator_matrix(g, n, modulus))


def verify_invariance(n, modulus=None):
    """Check ``g(Delta) - Delta`` lies in S ^ H_1(U) for g in eps0, eps1, tau.

    Membership is decided by echelon reduction against the kernel
    generators.
    """
    K = wedge_kernel(n, modulus)
    D = delta_formula(n, modulus)
    report = {}
    for g in GENERATORS:
        diff = act_on_delta(g, n, modulus) - D
        report[g] = membership(K, diff.flat())
    return report
