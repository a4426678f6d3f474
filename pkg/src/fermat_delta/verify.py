"""Per-degree structural checks: ranks, relations, Delta agreement, invariance."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .delta import (delta, delta_formula, expected_term_count, rho,
                    verify_invariance)
from .exactlin import Submodule, kernel, rank
from .groupring import GroupRingElt, gamma
from .homology import E_class, basis_pairs, gamma_rows, h1x_structure
from .wedge import expected_kernel_rank, wedge_kernel


@dataclass
class Check:
    name: str
    value: object
    expected: object
    passed: bool

    def as_dict(self):
        return {"name": self.name, "value": self.value,
                "expected": self.expected, "passed": self.passed}


def _check(name, value, expected):
    return Check(name, value, expected, value == expected)


def h1u_lattice_matches(n):
    """The E-classes span exactly the lattice of grids with zero row/column sums."""
    grids = [sum(E_class(i, j, n).coeffs, []) for i, j in basis_pairs(n)]
    # grid -> (row sums, column sums)
    sums = [[0] * (2 * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            sums[i * n + j][i] = 1
            sums[i * n + j][n + j] = 1
    ideal = kernel(sums)
    span = Submodule(n * n, grids)
    return (span.rank == ideal.rank
            and all(g in span for g in ideal.generators)
            and all(g in ideal for g in span.generators)), span.rank


def gamma_sum_is_zero(n):
    total = GroupRingElt.zero(n)
    for i in range(n):
        total = total + gamma(i, n)
    return total.is_zero()


def verify_n(n, modulus=None):
    """Run every check for degree ``n``; ``modulus`` switches ranks to Z/m."""
    m = modulus
    checks = []
    lattice_ok, h1u = h1u_lattice_matches(n)
    checks.append(_check("rank H1(U)", h1u, (n - 1) ** 2))
    checks.append(_check("E-basis spans augmentation ideal", lattice_ok, True))
    checks.append(_check("rank Stab", rank(gamma_rows(n), modulus=m), n - 1))
    Q = h1x_structure(n)
    checks.append(_check("rank H1(X)", Q.quotient_rank, (n - 1) * (n - 2)))
    checks.append(_check("sum gamma_i = 0", gamma_sum_is_zero(n), True))
    checks.append(_check("rank kernel", wedge_kernel(n, m).rank,
                         expected_kernel_rank(n)))
    checks.append(_check("rank kernel = C(d,2) - C(c,2)",
                         expected_kernel_rank(n),
                         comb((n - 1) ** 2, 2) - comb((n - 1) * (n - 2), 2)))
    ref = delta_formula(n, m)
    checks.append(_check("Delta terms", len(delta_formula(n)),
                         expected_term_count(n)))
    for method in ("word", "peel"):
        checks.append(_check(f"Delta formula = {method}",
                             delta(n, method, m) == ref, True))
    r = rho(n)
    nonzero = (any(c % m for c in r.coords.values()) if m else r.is_nonzero)
    checks.append(_check("rho != 0", nonzero, True))
    for g, ok in verify_invariance(n, m).items():
        checks.append(_check(f"invariance {g}", ok, True))
    return checks
