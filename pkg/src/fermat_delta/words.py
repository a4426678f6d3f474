"""Loop words in the e- and E-generators, and their degree-2 images.

A word whose per-generator exponent sums vanish lies in the commutator
subgroup, and its class modulo the third lower-central term is an element
of H_1(U) ^ H_1(U). Two evaluators are provided: the degree-2 Magnus count
(:func:`degree2_image`) and a block-peeling reduction that conjugates out
one ``E_{i,j}^-1 ... E_{i,j}`` block at a time (:func:`peel_reduction`).
The second only understands words with the block structure of the star
loop; it exists to cross-check the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import H1UClass, pair_index
from .wedge import WedgeElt, wedge_of_classes


class NotInCommutatorError(ValueError):
    pass


class NonLieError(ArithmeticError):
    """The degree-2 pair counts were not antisymmetric."""


class StructureMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class SignedWord:
    """A word ``g_1^{s_1} g_2^{s_2} ...`` in the e- or E-alphabet.

    ``letters`` holds ``((i, j), sign)`` pairs with ``sign`` in {+1, -1}.
    e-generators take ``i, j`` in ``range(n)``; E-generators in ``1..n-1``.
    """

    alphabet: str
    n: int
    letters: tuple = ()

    def __post_init__(self):
        if self.alphabet not in ("e", "E"):
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        lo = 0 if self.alphabet == "e" else 1
        letters = tuple(((int(i), int(j)), int(s)) for (i, j), s in self.letters)
        for (i, j), s in letters:
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")
            if not (lo <= i <= self.n - 1 and lo <= j <= self.n - 1):
                raise ValueError(
                    f"{self.alphabet}_{{{i},{j}}} is not a generator for n={self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __add__(self, other):
        if (self.alphabet, self.n) != (other.alphabet, other.n):
            raise ValueError("cannot concatenate words over different alphabets")
        return SignedWord(self.alphabet, self.n, self.letters + other.letters)

    def inverse(self):
        return SignedWord(self.alphabet, self.n,
                          tuple((g, -s) for g, s in reversed(self.letters)))

    def rotate(self, k):
        if not self.letters:
            return self
        k %= len(self.letters)
        return SignedWord(self.alphabet, self.n,
                          self.letters[k:] + self.letters[:k])

    def exponent_sums(self):
        sums = {}
        for g, s in self.letters:
            sums[g] = sums.get(g, 0) + s
        return sums

    def free_reduce(self):
        out = []
        for g, s in self.letters:
            if out and out[-1] == (g, -s):
                out.pop()
            else:
                out.append((g, s))
        return SignedWord(self.alphabet, self.n, tuple(out))

    def to_E(self):
        """Substitute ``E_{i,j}`` for ``e_{i,j}``, dropping trivial ones (ij = 0)."""
        if self.alphabet == "E":
            return self
        return SignedWord("E", self.n, tuple(
            ((i, j), s) for (i, j), s in self.letters if i and j))

    def abelianization(self):
        """Image in H_1(U) (E-words only)."""
        self._require_E()
        v = [0] * (self.n - 1) ** 2
        for (i, j), s in self.letters:
            v[pair_index(i, j, self.n)] += s
        return H1UClass(self.n, tuple(v))

    def _require_E(self):
        if self.alphabet != "E":
            raise ValueError("this operation needs a word in the E-generators")

    def __str__(self):
        if not self.letters:
            return "1"
        sep = "," if self.n > 10 else ""
        return " ".join(f"{self.alphabet}{i}{sep}{j}" + ("" if s > 0 else "^-1")
                        for (i, j), s in self.letters)


def star_word(ell, n):
    """The lift of the ``ell``-th star loop as a word of ``2n`` e-paths.

    Alternates ``e_{k-ell, k}`` and ``e_{k-ell, k+1}^-1`` for k = 0..n-1,
    indices mod n.
    """
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must lie in 0..{n - 1}")
    letters = []
    for k in range(n):
        i = (k - ell) % n
        letters.append(((i, k % n), 1))
        letters.append(((i, (k + 1) % n), -1))
    return SignedWord("e", n, tuple(letters))


def s_star_word(n):
    """Concatenated star lifts rewritten in the E-generators."""
    if n < 3:
        raise ValueError("n must be at least 3")
    full = SignedWord("e", n)
    for ell in range(n):
        full = full + star_word(ell, n)
    return full.to_E()


def _check_commutator(w):
    w._require_E()
    bad = {g: s for g, s in w.exponent_sums().items() if s}
    if bad:
        g, s = min(bad.items())
        raise NotInCommutatorError(
            f"not in commutator subgroup: E_{{{g[0]},{g[1]}}} has exponent sum {s}")


def degree2_image(w):
    """Class of ``w`` in H_1(U) ^ H_1(U), from ordered pair counts.

    ``M[a][b]`` sums ``sign_s * sign_t`` over letter positions ``s < t``
    carrying ``a`` then ``b``. For a word with zero exponent sums ``M`` is
    antisymmetric and the image is the sum over ``a < b`` of
    ``M[a][b] * (a ^ b)``; ``x y x^-1 y^-1`` gives ``x ^ y``.
    """
    _check_commutator(w)
    n = w.n
    prefix = {}
    M = {}
    for b, s in w.letters:
        for a, c in prefix.items():
            if c and a != b:
                M[(a, b)] = M.get((a, b), 0) + c * s
        prefix[b] = prefix.get(b, 0) + s
    terms = {}
    for (a, b), c in M.items():
        if c + M.get((b, a), 0):
            raise NonLieError(
                f"non-Lie degree-2 part: M[{a}][{b}]={c}, M[{b}][{a}]={M.get((b, a), 0)}")
        if a < b and c:
            terms[(*a, *b)] = c
    return WedgeElt(n, terms)


def peel_reduction(w):
    """Evaluate a star-shaped word by peeling conjugation blocks level by level.

    At the lowest remaining first index ``i`` the cyclic word must split as
    ``(E_{i,j}^-1 f_j E_{i,j})`` blocks with no level-``i`` letters inside
    the ``f_j``. Each block contributes ``E_{i,j} ^ (-[f_j])`` and the
    reduction repeats on ``f_1 f_2 ...``.
    """
    _check_commutator(w)
    n = w.n
    letters = list(w.letters)
    total = WedgeElt(n)
    while letters:
        level = min(g[0] for g, _ in letters)
        start = next((k for k, (g, s) in enumerate(letters)
                      if g[0] == level and s == -1), None)
        if start is None:
            raise StructureMismatchError(
                f"structure mismatch: no inverse letter on level {level}")
        cyc = letters[start:] + letters[:start]
        inner = []
        pos = 0
        while pos < len(cyc):
            g, s = cyc[pos]
            if g[0] != level or s != -1:
                raise StructureMismatchError(
                    f"structure mismatch: expected a level-{level} inverse at "
                    f"position {pos}, found E{g}^{s}")
            k = pos + 1
            while k < len(cyc) and cyc[k][0][0] != level:
                k += 1
            if k == len(cyc) or cyc[k] != (g, 1):
                raise StructureMismatchError(
                    f"structure mismatch: block opened by E{g}^-1 is not closed by E{g}")
            f = SignedWord("E", n, tuple(cyc[pos + 1:k]))
            total = total - wedge_of_classes(H1UClass.basis(*g, n), f.abelianization())
            inner.extend(f.letters)
            pos = k + 1
        letters = inner
    return total


def commutator(x, y, n):
    """The word ``x y x^-1 y^-1`` for E-labels ``x`` and ``y``."""
    return SignedWord("E", n, ((x, 1), (y, 1), (x, -1), (y, -1)))
