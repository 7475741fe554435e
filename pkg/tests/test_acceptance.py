"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines.  Criterion 8 asserts positive definiteness over its whole stated
(theta, mu) grid; the part of that grid with nonreal q is not attainable
for this form (see the indefiniteness witness in test_form.py), so that
single test reports FAIL while documenting exactly which grid points
violate positivity.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from qtgl3 import unitarity, verify
from qtgl3.form import (
    enumerate_words,
    make_word,
    shift_word,
    word_level,
    word_str,
    words_to_polys_rank,
)
from qtgl3.gl3 import GlElement, omega
from qtgl3.scalars import MU, ONE, ScalarPoly

ZERO = ScalarPoly.zero()
THETAS = [Fraction(0), Fraction(1, 3), Fraction(1, 7), Fraction(89, 233)]
LEVELS_3 = [(k, l) for k in range(4) for l in range(4 - k)]
LEVELS_2 = [(k, l) for k in range(3) for l in range(3 - k)]


def _report(num, ok, desc):
    print(f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {desc}")
    return ok


@pytest.fixture(scope="module")
def words3(engine):
    return [w for lv in LEVELS_3 for w in enumerate_words(lv, window=1)]


@pytest.fixture(scope="module")
def grams(engine):
    return {lv: engine.gram(lv, window=1) for lv in LEVELS_3}


def act_element(engine, x, cv):
    out = {}
    for sym, c in x.terms.items():
        if sym[0] == "E":
            _, i, j, m, n = sym
            part = engine.act(i, j, (m, n), cv)
        elif sym[0] == "ds":
            part = engine.act_d(1, cv)
        elif sym[0] == "dt":
            part = engine.act_d(2, cv)
        else:
            continue
        for w, cc in part.items():
            s = out.get(w, ZERO) + c * cc
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def test_criterion_1_homomorphism_suite():
    t0 = time.time()
    rep = verify.homomorphism_suite(samples=200, seed=0)
    elapsed = time.time() - t0
    ok = rep.ok and rep.checks >= 200 and elapsed < 120
    _report(1, ok, f"homomorphism: {rep.checks} exact checks in {elapsed:.1f}s")
    assert rep.ok, rep.failures[:1]
    assert elapsed < 120


def test_criterion_2_lie_axioms_and_omega():
    rep = verify.lie_axiom_suite(samples=200, seed=2)
    ok = rep.ok and rep.checks >= 200
    _report(2, ok, f"antisymmetry/Jacobi/omega: {rep.checks} exact checks")
    assert rep.ok, rep.failures[:1]


def test_criterion_3_contravariance(engine):
    words2 = [w for lv in LEVELS_2 for w in enumerate_words(lv, window=0)]
    args = [(m, n) for m in (-1, 0, 1) for n in (-1, 0, 1)]
    checks = 0
    for u, v in itertools.product(words2, repeat=2):
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                for mono in args:
                    g = GlElement.matrix(i, j, mono)
                    lhs = engine.form(act_element(engine, g, {u: ONE}), {v: ONE})
                    rhs = engine.form({u: ONE}, act_element(engine, omega(g), {v: ONE}))
                    assert lhs == rhs, (word_str(u), word_str(v), i, j, mono)
                    checks += 1
        for which in (1, 2):
            lhs = engine.form(engine.act_d(which, {u: ONE}), {v: ONE})
            rhs = engine.form({u: ONE}, engine.act_d(which, {v: ONE}))
            assert lhs == rhs
            checks += 1
    rng = random.Random(3)
    words_l3 = [w for lv in LEVELS_3 if sum(lv) == 3
                for w in enumerate_words(lv, window=1)]
    for _ in range(100):
        u, v = rng.choice(words_l3), rng.choice(words_l3)
        i, j = rng.randint(1, 3), rng.randint(1, 3)
        mono = (rng.randint(-1, 1), rng.randint(-1, 1))
        g = GlElement.matrix(i, j, mono)
        lhs = engine.form(act_element(engine, g, {u: ONE}), {v: ONE})
        rhs = engine.form({u: ONE}, act_element(engine, omega(g), {v: ONE}))
        assert lhs == rhs, (word_str(u), word_str(v), i, j, mono)
        checks += 1
    _report(3, True, f"contravariance: {checks} exact checks")


def test_criterion_4_oracle_equivalence(engine, words3):
    t0 = time.time()
    mismatches = []
    for u, v in itertools.product(words3, repeat=2):
        if engine.form_words(u, v) != engine.form_combinatorial(u, v):
            mismatches.append((word_str(u), word_str(v)))
    elapsed = time.time() - t0
    ok = not mismatches and elapsed < 300
    _report(4, ok,
            f"recursive == combinatorial on {len(words3) ** 2} ordered pairs "
            f"in {elapsed:.0f}s")
    assert not mismatches, mismatches[:3]
    assert elapsed < 300


def test_criterion_5_derived_values(engine):
    vac = make_word([], [])
    pairs = [
        (vac, ONE),
        (make_word([(0, 0)], []), MU),
        (make_word([], [(0, 0)]), MU),
        (make_word([(0, 0)], [(0, 0)]), MU * MU + MU),
    ]
    for w, want in pairs:
        assert engine.form_words(w, w) == want
        assert engine.form_combinatorial(w, w) == want
    _report(5, True, "(1,1)=1, level-(1,0)/(0,1) give mu, level-(1,1) gives mu^2+mu, "
                     "confirmed by both evaluators")


def test_criterion_6_level_orthogonality(engine, words3):
    bad = []
    for u, v in itertools.product(words3, repeat=2):
        if word_level(u) != word_level(v) and engine.form_words(u, v) != ZERO:
            bad.append((word_str(u), word_str(v)))
    _report(6, not bad, "mixed-level pairs evaluate to exact zero")
    assert not bad, bad[:3]


def test_criterion_7_leading_term(engine, grams):
    bad = []
    for lv, g in grams.items():
        n = sum(lv)
        if n == 0:
            continue
        for i, w in enumerate(g.basis):
            entry = g.entries[i][i]
            if entry.mu_degree() != n:
                bad.append((word_str(w), "degree", entry.mu_degree()))
                continue
            lead = entry.leading_mu_part()
            for theta in (Fraction(1, 7), Fraction(89, 233)):
                z = lead.evaluate(theta, 1.0)
                if not (abs(z.imag) < 1e-12 and z.real > 1e-9):
                    bad.append((word_str(w), str(theta), z))
    _report(7, not bad,
            "every diagonal entry has mu-degree k+l with positive leading value")
    assert not bad, bad[:3]


def test_criterion_8_unitarity_criterion(engine, grams):
    violations = []
    for lv, g in grams.items():
        dim = len(g.basis)
        tol = 1e-9 * dim
        for theta in THETAS:
            for mu in (0.25, 1.0, 5.0):
                eig = unitarity.min_eigenvalue(unitarity.specialize(g, theta, mu))
                if not eig > tol:
                    violations.append((lv, str(theta), mu, round(eig, 6)))
    must_fail_ok = True
    g10 = grams[(1, 0)]
    for mu in (0.0, -1.0):
        eig = unitarity.min_eigenvalue(unitarity.specialize(g10, Fraction(1, 7), mu))
        must_fail_ok &= not eig > 1e-9 * len(g10.basis)
    g11 = grams[(1, 1)]
    eig = unitarity.min_eigenvalue(unitarity.specialize(g11, Fraction(1, 7), -0.5))
    must_fail_ok &= not eig > 1e-9 * len(g11.basis)

    ok = not violations and must_fail_ok
    _report(8, ok,
            "positive definiteness over the stated (theta, mu) grid"
            + ("" if ok else
               f"; {len(violations)} grid points are NOT positive definite "
                 f"(all with theta != 0 at mu <= 1), e.g. {violations[:3]}; "
                 "the truncated form is provably indefinite for nonreal q at "
                 "small mu; see the exact witness "
                 "(z,z) = 4mu^2 - 8mu*sin(2*pi*theta) in test_form.py"))
    assert must_fail_ok, "expected non-definiteness at mu <= 0 did not occur"
    assert not violations, (
        f"{len(violations)} (level, theta, mu) grid points not positive definite; "
        f"first: {violations[:5]}. This part of the stated grid is mathematically "
        "unattainable: the form itself is indefinite for q != 1 at small mu "
        "(exact witness: (z,z) = 4mu^2 + 4i(q - q^-1)mu at level (1,1), "
        "verified by both evaluators and by hand)."
    )


def test_criterion_9_shift_invariance(engine):
    checks = 0
    for lv in LEVELS_2:
        basis = enumerate_words(lv, window=1)
        for i, u in enumerate(basis):
            for v in basis[i:]:
                base = engine.form_words(u, v)
                for (a, b) in ((1, 0), (0, 1), (2, -1)):
                    assert engine.form_words(
                        shift_word(a, b, u), shift_word(a, b, v)
                    ) == base
                    checks += 1
    _report(9, True, f"T-shift invariance: {checks} exact checks")


def test_criterion_10_basis_rank(engine):
    bad = []
    for lv in LEVELS_2:
        words = enumerate_words(lv, window=1)
        rank = words_to_polys_rank(words)
        if rank != len(words):
            bad.append((lv, rank, len(words)))
    _report(10, not bad, "word images under the default realization have full rank")
    assert not bad, bad
