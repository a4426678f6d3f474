"""Acceptance criteria, one test per criterion.

Each test records a one-line verdict; ``conftest.py`` prints them at the end
of the run. Time limits are wall-clock, measured with caches cleared first.

Criterion 7 needs the p = 5 action matrices from an external source. Point
``FERMAT_ACTION_FILE`` at the JSON file, or drop it at
``tests/data/galois_p5.json``. Without it only the structural part runs.
"""

import importlib
import os
import random
import time
from math import comb
from pathlib import Path

import pytest

from fermat_delta import galois, homology, wedge
from fermat_delta.cli import main
from fermat_delta.delta import delta_formula, rho, verify_invariance
from fermat_delta.exactlin import rank
from fermat_delta.homology import basis_pairs, gamma_rows, h1x_structure
from fermat_delta.verify import gamma_sum_is_zero, h1u_lattice_matches
from fermat_delta.wedge import format_wedge, wedge_kernel
from fermat_delta.words import (SignedWord, degree2_image, peel_reduction,
                                s_star_word)

from golden import DELTA_LATEX, parse_wedge

LIMIT_GOLDEN = 1.0       # per n
LIMIT_CROSS = 30.0
LIMIT_RANKS = 60.0
LIMIT_INVARIANCE = 60.0
LIMIT_RHO = 60.0
FUZZ_VARIANTS = 100
P5_AMBIENT = 65
P5_INVARIANT = 34

RESULTS = {}
# the package re-exports a function named delta, shadowing the submodule
delta_mod = importlib.import_module("fermat_delta.delta")


def record(num, ok, detail, partial=False):
    RESULTS[num] = ("FAIL" if not ok else "PARTIAL" if partial else "PASS", detail)


def cold():
    for f in (delta_mod._delta_formula, homology._h1x_structure,
              homology._generator_matrix, wedge._wedge_kernel,
              wedge.position_pairs, galois._context):
        f.cache_clear()


def timed(fn):
    cold()
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_golden_delta():
    times, ok = {}, True
    for n, count in ((3, 4), (4, 18), (5, 48)):
        d, times[n] = timed(lambda: delta_formula(n))
        ref = parse_wedge(DELTA_LATEX[n], n)
        ok &= (d == ref and len(d) == count
               and format_wedge(d, "latex") == format_wedge(ref, "latex")
               and times[n] < LIMIT_GOLDEN)
    worst = max(times.values())
    record(1, ok, f"golden Delta n=3,4,5 (4/18/48 terms), slowest {worst:.3f}s < {LIMIT_GOLDEN}s")
    assert ok


def test_criterion_2_cross_oracle():
    def run():
        bad = []
        for n in range(3, 13):
            d = delta_formula(n)
            w = s_star_word(n)
            if not (degree2_image(w) == d == peel_reduction(w)):
                bad.append(n)
        return bad
    bad, t = timed(run)
    ok = not bad and t < LIMIT_CROSS
    record(2, ok, f"formula = word = peel for n=3..12 in {t:.2f}s < {LIMIT_CROSS}s"
           + (f"; mismatches at {bad}" if bad else ""))
    assert ok


def test_criterion_3_ranks():
    def run():
        bad = []
        for n in range(3, 9):
            Q = h1x_structure(n)
            facts = [
                Q.ambient_rank == (n - 1) ** 2,
                h1u_lattice_matches(n),
                Q.quotient_rank == (n - 1) * (n - 2),
                rank(gamma_rows(n)) == n - 1,
                wedge_kernel(n).rank == (n - 1) * (2 * n * n - 5 * n + 2) // 2,
                gamma_sum_is_zero(n),
            ]
            if not all(facts):
                bad.append(n)
        return bad
    bad, t = timed(run)
    ok = not bad and t < LIMIT_RANKS
    record(3, ok, f"rank suite n=3..8 in {t:.2f}s < {LIMIT_RANKS}s"
           + (f"; failures at {bad}" if bad else ""))
    assert ok


def test_criterion_4_invariance():
    def run():
        return [n for n in range(3, 11) if not all(verify_invariance(n).values())]
    bad, t = timed(run)
    ok = not bad and t < LIMIT_INVARIANCE
    record(4, ok, f"eps0, eps1, tau invariance modulo kernel for n=3..10 in {t:.2f}s"
           f" < {LIMIT_INVARIANCE}s" + (f"; failures at {bad}" if bad else ""))
    assert ok


def test_criterion_5_rho_nonzero():
    def run():
        return [n for n in range(3, 11) if not rho(n).is_nonzero]
    bad, t = timed(run)
    ok = not bad and t < LIMIT_RHO
    record(5, ok, f"rho != 0 for n=3..10 in {t:.2f}s < {LIMIT_RHO}s"
           + (f"; zero at {bad}" if bad else ""))
    assert ok


def _fuzz(w, rng):
    v = w.rotate(rng.randrange(len(w)))
    letters = list(v.letters)
    for _ in range(rng.randint(1, 4)):
        g = rng.choice(basis_pairs(w.n))
        s = rng.choice((1, -1))
        k = rng.randrange(len(letters) + 1)
        letters[k:k] = [(g, s), (g, -s)]
    return SignedWord("E", w.n, tuple(letters))


def test_criterion_6_word_structure():
    ok = True
    for n in (3, 4, 5):
        w = s_star_word(n)
        for sign in (1, -1):
            ok &= sorted(g for g, s in w.letters if s == sign) == basis_pairs(n)
        ref = degree2_image(w)
        rng = random.Random(n)
        ok &= all(degree2_image(_fuzz(w, rng)) == ref for _ in range(FUZZ_VARIANTS))
    record(6, ok, f"each E-generator once per sign; {FUZZ_VARIANTS} rotated and "
           "padded variants per n=3,4,5 keep the degree-2 image")
    assert ok


def _action_file():
    env = os.environ.get("FERMAT_ACTION_FILE")
    if env:
        return Path(env)
    return Path(__file__).parent / "data" / "galois_p5.json"


def test_criterion_7_galois(capsys):
    structural = galois.ambient_dimension(5) == comb(12, 2) - 1 == P5_AMBIENT
    # the CLI must refuse cleanly without data
    code = main(["galois"])
    msg = capsys.readouterr().err
    refuses = code == 2 and "external data required" in msg
    path = _action_file()
    if not path.is_file():
        record(7, structural and refuses,
               f"ambient dim {galois.ambient_dimension(5)} = C(12,2)-1; "
               "invariant dim, annihilator, rho fixed: skipped, external data required",
               partial=True)
        assert structural and refuses
        pytest.skip(f"external data required: no action file at {path}")
    spec = galois.read_action_file(path)
    inv = galois.invariant_dimension(spec)
    ann = galois.check_annihilator(spec)
    rho_ok = galois.rho_invariance(spec)
    ok = structural and spec.p == 5 and inv == P5_INVARIANT and ann and all(rho_ok.values())
    record(7, ok, f"p=5 from {path.name}: ambient {P5_AMBIENT}, invariant {inv} "
           f"(want {P5_INVARIANT}), annihilator {ann}, rho fixed {rho_ok}")
    assert ok


def test_criterion_8_rests_on_1_to_7():
    # nothing new to compute: the non-reproducible content is covered by 1-7
    missing = [k for k in range(1, 8) if k not in RESULTS]
    if missing:
        pytest.skip(f"criteria {missing} were not run in this session")
    failed = [k for k in range(1, 8) if RESULTS[k][0] == "FAIL"]
    partial = [k for k in range(1, 8) if RESULTS[k][0] == "PARTIAL"]
    ok = not failed
    detail = "substitute acceptance rests on criteria 1-7: "
    detail += f"failed {failed}" if failed else "none failed"
    if partial:
        detail += f", {partial} partial"
    record(8, ok, detail, partial=bool(partial))
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
