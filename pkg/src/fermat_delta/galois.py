"""Induced actions on the second graded quotient, from external matrix data.

The action matrices themselves are never derived here. They are read
from an action file::

    {
      "p": 5,
      "basis": "E_lex_1..n-1",
      "generators": [{"name": "tau0", "matrix": [[...], ...]}, ...]
    }

Each matrix is ``(p-1)^2 x (p-1)^2``, acts on row vectors of H_1(U; Z/p)
in the lexicographic E-basis by right multiplication, and may hold
arbitrary integers (they are reduced mod p).

The pipeline for each generator is: H_1(U; Z/p) -> H_1(X; Z/p) (quotient
by the relation module), then its exterior square, then the quotient of
that by the line through rho. That last space is [pi]_2/[pi]_3 (x) Z/p.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from pathlib import Path

from .delta import rho
from .exactlin import (Submodule, identity, inverse_mod, mat_mul, rank,
                       vec_mat)
from .homology import gamma_rows, h1u_rank, h1x_structure
from .wedge import induced_wedge_matrix

BASIS_TAG = "E_lex_1..n-1"


class ActionError(ValueError):
    pass


class ActionSchemaError(ActionError):
    pass


class NonInvertibleError(ActionError):
    pass


class RelationNotPreservedError(ActionError):
    pass


class ExternalDataRequired(FileNotFoundError):
    pass


class InconsistentRhoError(ArithmeticError):
    """rho is not mapped into its own line, so the quotient action is undefined."""


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass
class ActionSpec:
    p: int
    generators: list  # [(name, matrix mod p)]

    @property
    def n(self):
        return self.p

    @property
    def names(self):
        return [name for name, _ in self.generators]


def load_action(doc):
    """Validate a parsed action document and return an :class:`ActionSpec`."""
    if not isinstance(doc, dict):
        raise ActionSchemaError("schema violation: top level must be an object")
    for key in ("p", "basis", "generators"):
        if key not in doc:
            raise ActionSchemaError(f"schema violation: missing field {key!r}")
    p = doc["p"]
    if isinstance(p, bool) or not isinstance(p, int):
        raise ActionSchemaError("schema violation: 'p' must be an integer")
    if p < 3 or not _is_prime(p):
        raise ActionSchemaError(f"schema violation: p={p} is not an odd prime")
    if doc["basis"] != BASIS_TAG:
        raise ActionSchemaError(
            f"schema violation: basis must be {BASIS_TAG!r}, got {doc['basis']!r}")
    gens = doc["generators"]
    if not isinstance(gens, list):
        raise ActionSchemaError("schema violation: 'generators' must be an array")

    d = h1u_rank(p)
    relations = Submodule(d, gamma_rows(p), modulus=p)
    out = []
    seen = set()
    for k, g in enumerate(gens):
        if not isinstance(g, dict) or "name" not in g or "matrix" not in g:
            raise ActionSchemaError(
                f"schema violation: generator {k} needs 'name' and 'matrix'")
        name, M = str(g["name"]), g["matrix"]
        if name in seen:
            raise ActionSchemaError(f"schema violation: duplicate generator {name!r}")
        seen.add(name)
        if (not isinstance(M, list) or len(M) != d
                or any(not isinstance(r, list) or len(r) != d for r in M)):
            raise ActionSchemaError(
                f"size error: generator {name!r} must be a {d}x{d} matrix for p={p}")
        if any(isinstance(x, bool) or not isinstance(x, int) for r in M for x in r):
            raise ActionSchemaError(
                f"schema violation: generator {name!r} has non-integer entries")
        M = [[x % p for x in r] for r in M]
        try:
            inverse_mod(M, p)
        except ValueError:
            raise NonInvertibleError(
                f"non-invertible matrix: generator {name!r} is singular mod {p}") from None
        for i, s in enumerate(gamma_rows(p), start=1):
            if vec_mat(s, M, p) not in relations:
                raise RelationNotPreservedError(
                    f"relation not preserved: generator {name!r} maps "
                    f"gamma_{i} outside Stab(eps0*eps1) mod {p}")
        out.append((name, M))
    return ActionSpec(p, out)


def read_action_file(path):
    path = Path(path)
    if not path.is_file():
        raise ExternalDataRequired(
            f"external data required: action file {str(path)!r} not found")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ActionSchemaError(f"schema violation: not valid JSON ({exc})") from None
    return load_action(doc)


@dataclass
class _Context:
    p: int
    projection: list   # H_1(U) -> H_1(X), d x c, mod p
    lift: list         # H_1(X) -> H_1(U), c x d, lift @ projection = I
    rho: list          # rho on the flat pair basis of H_1(X)^2, mod p
    pivot: int         # coordinate of rho used to split off its line

    @property
    def quotient_dim(self):
        return len(self.rho) - 1


@lru_cache(maxsize=None)
def _context(p):
    Q = h1x_structure(p)
    P = [[x % p for x in r] for r in Q.projection]
    c = Q.quotient_rank
    # pick c rows of P forming an invertible block; its inverse gives a section
    rows = []
    for k in range(len(P)):
        if rank([P[i] for i in rows + [k]], modulus=p) > len(rows):
            rows.append(k)
            if len(rows) == c:
                break
    B_inv = inverse_mod([P[i] for i in rows], p)
    lift = [[0] * len(P) for _ in range(c)]
    for a in range(c):
        for b, i in enumerate(rows):
            lift[a][i] = B_inv[a][b]
    r = [x % p for x in rho(p).to_vector()]
    pivot = next((k for k, x in enumerate(r) if x), None)
    if pivot is None:
        raise InconsistentRhoError(f"rho vanishes mod {p}")
    return _Context(p, P, lift, r, pivot)


def h1x_action(M, p):
    """Matrix on H_1(X; Z/p) induced by a relation-preserving ``M``."""
    ctx = _context(p)
    return mat_mul(mat_mul(ctx.lift, M, p), ctx.projection, p)


def wedge_action(M, p):
    """Matrix on H_1(X; Z/p) ^ H_1(X; Z/p)."""
    return induced_wedge_matrix(h1x_action(M, p), p)


def _quotient_by_rho(v, ctx):
    p, k = ctx.p, ctx.pivot
    t = v[k] * pow(ctx.rho[k], -1, p) % p
    w = [(x - t * r) % p for x, r in zip(v, ctx.rho)]
    return w[:k] + w[k + 1:]


def rho_image(M, p):
    """``rho`` pushed through the induced wedge action of ``M``."""
    ctx = _context(p)
    return vec_mat(ctx.rho, wedge_action(M, p), p)


def graded2_matrix(M, p):
    """Matrix of ``M`` on [pi]_2/[pi]_3 (x) Z/p, of size C(2g, 2) - 1."""
    ctx = _context(p)
    N = wedge_action(M, p)
    if any(_quotient_by_rho(vec_mat(ctx.rho, N, p), ctx)):
        raise InconsistentRhoError(
            "rho is not mapped into its own line; quotient action undefined")
    out = []
    for j in range(len(N)):
        if j != ctx.pivot:
            out.append(_quotient_by_rho(N[j], ctx))
    return out


def graded2_action(spec):
    return [graded2_matrix(M, spec.p) for _, M in spec.generators]


def ambient_dimension(p):
    return comb((p - 1) * (p - 2), 2) - 1


def invariant_dimension(spec):
    """Dimension of the common fixed space on [pi]_2/[pi]_3 (x) Z/p."""
    p = spec.p
    D = ambient_dimension(p)
    mats = graded2_action(spec)
    if not mats:
        return D
    # v (G - I) = 0 for every G  <=>  v [G_1 - I | G_2 - I | ...] = 0
    stacked = []
    for i in range(D):
        row = []
        for G in mats:
            row.extend((G[i][j] - (i == j)) % p for j in range(D))
        stacked.append(row)
    return D - rank(stacked, modulus=p)


def check_annihilator(spec):
    """Whether the product of (M_i - I) over the generators kills H_1(X; Z/p)."""
    p = spec.p
    c = (p - 1) * (p - 2)
    I = identity(c)
    prod = identity(c)
    for _, M in spec.generators:
        A = h1x_action(M, p)
        diff = [[(A[i][j] - I[i][j]) % p for j in range(c)] for i in range(c)]
        prod = mat_mul(prod, diff, p)
    return not any(any(r) for r in prod)


def rho_invariance(spec):
    """Per generator: whether rho is fixed in H_1(X; Z/p) ^ H_1(X; Z/p)."""
    ctx = _context(spec.p)
    return {name: rho_image(M, spec.p) == ctx.rho for name, M in spec.generators}
