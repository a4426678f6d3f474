"""The group ring Z[mu_n x mu_n] and its augmentation ideal."""

from __future__ import annotations


class GroupRingElt:
    """Element of Z[mu_n x mu_n] (or (Z/m)[mu_n x mu_n]).

    ``coeffs[i][j]`` is the coefficient of ``eps0**i * eps1**j``; exponents
    always live in ``range(n)``.
    """

    __slots__ = ("n", "coeffs", "modulus")

    def __init__(self, n, coeffs=None, modulus=None):
        if n < 1:
            raise ValueError("degree must be positive")
        self.n = n
        self.modulus = modulus
        if coeffs is None:
            coeffs = [[0] * n for _ in range(n)]
        else:
            if len(coeffs) != n or any(len(r) != n for r in coeffs):
                raise ValueError(f"coefficient grid must be {n}x{n}")
            coeffs = [list(r) for r in coeffs]
        if modulus:
            coeffs = [[x % modulus for x in r] for r in coeffs]
        self.coeffs = coeffs

    @classmethod
    def zero(cls, n, modulus=None):
        return cls(n, modulus=modulus)

    @classmethod
    def monomial(cls, i, j, n, coeff=1, modulus=None):
        """``coeff * eps0**i * eps1**j``; negative exponents are allowed."""
        out = cls(n, modulus=modulus)
        out.coeffs[i % n][j % n] = coeff % modulus if modulus else coeff
        return out

    @classmethod
    def one(cls, n, modulus=None):
        return cls.monomial(0, 0, n, modulus=modulus)

    def _same_ring(self, other):
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return self.modulus or other.modulus

    def __add__(self, other):
        m = self._same_ring(other)
        if m is NotImplemented:
            return m
        grid = [[a + b for a, b in zip(r, s)]
                for r, s in zip(self.coeffs, other.coeffs)]
        return GroupRingElt(self.n, grid, m)

    def __neg__(self):
        return GroupRingElt(self.n, [[-a for a in r] for r in self.coeffs],
                            self.modulus)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElt(self.n, [[other * a for a in r]
                                         for r in self.coeffs], self.modulus)
        m = self._same_ring(other)
        if m is NotImplemented:
            return m
        n = self.n
        out = [[0] * n for _ in range(n)]
        terms = [(i, j, b) for i, r in enumerate(other.coeffs)
                 for j, b in enumerate(r) if b]
        for i1, r in enumerate(self.coeffs):
            for j1, a in enumerate(r):
                if not a:
                    continue
                for i2, j2, b in terms:
                    out[(i1 + i2) % n][(j1 + j2) % n] += a * b
        return GroupRingElt(n, out, m)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = GroupRingElt.one(self.n, self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self.coeffs))))

    def is_zero(self):
        return not any(any(r) for r in self.coeffs)

    def transpose(self):
        """Swap the roles of eps0 and eps1."""
        return GroupRingElt(self.n, [list(c) for c in zip(*self.coeffs)],
                            self.modulus)

    def terms(self):
        """Nonzero ``((i, j), coeff)`` pairs in lexicographic order."""
        return [((i, j), a) for i, r in enumerate(self.coeffs)
                for j, a in enumerate(r) if a]

    def __repr__(self):
        if self.is_zero():
            return f"GroupRingElt(n={self.n}, 0)"
        parts = " + ".join(f"{a}*e0^{i}e1^{j}" for (i, j), a in self.terms())
        return f"GroupRingElt(n={self.n}, {parts})"


def eps0(n, modulus=None):
    return GroupRingElt.monomial(1, 0, n, modulus=modulus)


def eps1(n, modulus=None):
    return GroupRingElt.monomial(0, 1, n, modulus=modulus)


def in_augmentation_ideal(a):
    """Membership in <(eps0 - 1)(eps1 - 1)>: all row and column sums vanish."""
    m = a.modulus
    rows = [sum(r) for r in a.coeffs]
    cols = [sum(c) for c in zip(*a.coeffs)]
    if m:
        return all(s % m == 0 for s in rows + cols)
    return not any(rows) and not any(cols)


def norm_diagonal(n, modulus=None):
    """``1 + eps0*eps1 + ... + (eps0*eps1)**(n-1)``."""
    out = GroupRingElt(n, modulus=modulus)
    for k in range(n):
        out.coeffs[k][k] = 1
    return out


def gamma(i, n, modulus=None):
    """Relation element ``eps0**(-i) * (1 - eps1) * norm_diagonal(n)``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    one = GroupRingElt.one(n, modulus)
    return (GroupRingElt.monomial(-i, 0, n, modulus=modulus)
            * (one - eps1(n, modulus)) * norm_diagonal(n, modulus))
