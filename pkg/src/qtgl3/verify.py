"""Seeded verification suites for the bracket relations and the representation.

Each suite runs a fixed exhaustive core plus seeded random samples and
reports exact-equality failures as rendered counterexamples.  All checks
are exact: any failure is an implementation bug, never a tolerance issue.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import fock
from .fock import FockPoly, FreeFieldConfig, k1_point, km1_point
from .gl3 import GlElement, bracket, jacobi_residual, omega
from .scalars import ScalarPoly, q_pow


@dataclass
class SuiteReport:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, condition, message):
        self.checks += 1
        if not condition:
            self.failures.append(message() if callable(message) else message)

    def to_json(self):
        return {"name": self.name, "checks": self.checks,
                "failures": self.failures[:20], "ok": self.ok}


# -- samplers -----------------------------------------------------------

def _rand_mono(rng, erange=2):
    return (rng.randint(-erange, erange), rng.randint(-erange, erange))


def rand_matrix_symbol(rng, erange=2):
    i = rng.randint(1, 3)
    j = rng.randint(1, 3)
    m, n = _rand_mono(rng, erange)
    return GlElement.matrix(i, j, (m, n))


def rand_generator(rng, erange=2, specials=True):
    """A basis symbol; occasionally one of d_s, d_t, c_s, c_t."""
    if specials and rng.random() < 0.15:
        return rng.choice(
            [GlElement.d_s(), GlElement.d_t(), GlElement.c_s(), GlElement.c_t()]
        )
    return rand_matrix_symbol(rng, erange)


def _rand_coeff(rng):
    re = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
    im = Fraction(rng.randint(-2, 2)) if rng.random() < 0.4 else Fraction(0)
    return ScalarPoly.gaussian(re, im)


def rand_element(rng, nterms=2, erange=2):
    """Random element: a few symbols with small Gaussian-rational coefficients."""
    x = GlElement.zero()
    for _ in range(rng.randint(1, nterms)):
        c = _rand_coeff(rng)
        if not c:
            c = ScalarPoly.one()
        x = x + rand_generator(rng, erange).scale(c)
    return x


def rand_poly(rng, max_degree=3, comp_window=1, nterms=2):
    """Random module polynomial over index points with components in the window."""
    out = FockPoly.one() if rng.random() < 0.3 else FockPoly.zero()
    for _ in range(rng.randint(1, nterms)):
        v = FockPoly.one(_rand_coeff(rng) + ScalarPoly.one())
        for _ in range(rng.randint(1, max_degree)):
            m = rng.randint(-comp_window, comp_window)
            n = rng.randint(-comp_window, comp_window)
            pt = k1_point(m, n) if rng.random() < 0.5 else km1_point(m, n)
            v = v * FockPoly.variable(pt)
        out = out + v
    return out


def rand_config(rng, comp_window=2):
    """Random SL2 parameters (a*d = 1, c free) over a window of index points."""
    entries = {}
    for m in range(-comp_window, comp_window + 1):
        for n in range(-comp_window, comp_window + 1):
            for pt in (k1_point(m, n), km1_point(m, n)):
                a = Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2]))
                c = Fraction(rng.randint(-2, 2), rng.choice([1, 2]))
                entries[pt] = (
                    ScalarPoly.from_rational(a),
                    ScalarPoly.from_rational(c),
                    ScalarPoly.from_rational(1 / a),
                )
    return FreeFieldConfig(entries)


# -- suites -------------------------------------------------------------

def _pi(x, v, cfg, corrupt=False):
    """pi with an optional deliberate phase corruption on the e12 family."""
    out = FockPoly.zero()
    for sym, c in x.terms.items():
        if sym[0] == "E":
            _, i, j, m, n = sym
            w = fock.apply_generator(i, j, m, n, v, cfg)
            if corrupt and (i, j) == (1, 2):
                w = w.scale(q_pow(1))
            out = out + w.scale(c)
        elif sym[0] == "ds":
            out = out + fock.apply_D(1, v, cfg).scale(c)
        elif sym[0] == "dt":
            out = out + fock.apply_D(2, v, cfg).scale(c)
    return out


def _check_pair(report, x, y, v, cfg, corrupt):
    lhs = _pi(bracket(x, y), v, cfg, corrupt)
    rhs = _pi(x, _pi(y, v, cfg, corrupt), cfg, corrupt) - _pi(
        y, _pi(x, v, cfg, corrupt), cfg, corrupt
    )
    report.record(
        lhs == rhs,
        lambda: f"pi([x,y])v != [pi(x),pi(y)]v\n  x = {x}\n  y = {y}\n"
                f"  v = {v}\n  diff = {lhs - rhs}",
    )


def homomorphism_suite(samples=200, seed=0, cfg=None, corrupt=False,
                       name="homomorphism"):
    """pi([x,y])v = [pi(x), pi(y)]v, exhaustive core plus seeded samples."""
    cfg = cfg or fock.DEFAULT_CONFIG
    rng = random.Random(seed)
    report = SuiteReport(name)
    core_v = (
        FockPoly.one()
        + FockPoly.variable((1, 1))
        + FockPoly.variable((2, 2)) * FockPoly.variable((-1, -1))
    )
    for i in range(1, 4):
        for j in range(1, 4):
            for k in range(1, 4):
                for l in range(1, 4):
                    x = GlElement.matrix(i, j, (1, 0))
                    y = GlElement.matrix(k, l, (0, 1))
                    _check_pair(report, x, y, core_v, cfg, corrupt)
                    # exponent pattern that triggers the central terms
                    x2 = GlElement.matrix(i, j, (1, 1))
                    y2 = GlElement.matrix(k, l, (-1, -1))
                    _check_pair(report, x2, y2, core_v, cfg, corrupt)
    for _ in range(samples):
        x = rand_generator(rng)
        y = rand_generator(rng)
        v = rand_poly(rng)
        _check_pair(report, x, y, v, cfg, corrupt)
    return report


def lie_axiom_suite(samples=200, seed=0):
    """Antisymmetry, Jacobi, and the omega anti-involution, all exact."""
    rng = random.Random(seed)
    report = SuiteReport("lie_axioms")
    report.record(
        jacobi_residual(
            GlElement.matrix(1, 2, (1, 0)),
            GlElement.matrix(2, 3, (0, 1)),
            GlElement.matrix(3, 1, (-1, -1)),
        ).is_zero(),
        "jacobi residual nonzero on the fixed witness triple",
    )
    for _ in range(samples):
        x = rand_element(rng)
        y = rand_element(rng)
        z = rand_element(rng)
        report.record(
            (bracket(x, y) + bracket(y, x)).is_zero(),
            lambda x=x, y=y: f"antisymmetry failed\n  x = {x}\n  y = {y}",
        )
        report.record(
            jacobi_residual(x, y, z).is_zero(),
            lambda x=x, y=y, z=z: f"jacobi failed\n  x = {x}\n  y = {y}\n  z = {z}",
        )
        report.record(
            omega(omega(x)) == x,
            lambda x=x: f"omega not involutive on {x}",
        )
        report.record(
            omega(bracket(x, y)) == bracket(omega(y), omega(x)),
            lambda x=x, y=y: f"omega([x,y]) != [omega(y),omega(x)]\n  x = {x}\n  y = {y}",
        )
    return report


def weyl_suite(samples=60, seed=0, cfg=None):
    """[P_X, Q_Y] = delta_XY and all other P/Q pairs commute."""
    cfg = cfg or fock.DEFAULT_CONFIG
    rng = random.Random(seed)
    report = SuiteReport("weyl_relations")
    for _ in range(samples):
        pts = []
        for _ in range(2):
            m, n = rng.randint(-1, 1), rng.randint(-1, 1)
            pts.append(k1_point(m, n) if rng.random() < 0.5 else km1_point(m, n))
        x_pt, y_pt = pts
        v = rand_poly(rng)
        pq = fock.apply_P(x_pt, fock.apply_Q(y_pt, v, cfg), cfg)
        qp = fock.apply_Q(y_pt, fock.apply_P(x_pt, v, cfg), cfg)
        expect = v if x_pt == y_pt else FockPoly.zero()
        report.record(
            pq - qp == expect,
            lambda a=x_pt, b=y_pt: f"[P_{a}, Q_{b}] wrong",
        )
        pp = fock.apply_P(x_pt, fock.apply_P(y_pt, v, cfg), cfg)
        pp2 = fock.apply_P(y_pt, fock.apply_P(x_pt, v, cfg), cfg)
        report.record(pp == pp2, lambda a=x_pt, b=y_pt: f"[P_{a}, P_{b}] != 0")
        qq = fock.apply_Q(x_pt, fock.apply_Q(y_pt, v, cfg), cfg)
        qq2 = fock.apply_Q(y_pt, fock.apply_Q(x_pt, v, cfg), cfg)
        report.record(qq == qq2, lambda a=x_pt, b=y_pt: f"[Q_{a}, Q_{b}] != 0")
    return report


def derivation_suite(samples=60, seed=0, cfg=None):
    """[D1, D2] = 0 and [D_i, e_ij(m, n)] = (m or n) e_ij(m, n) on samples."""
    cfg = cfg or fock.DEFAULT_CONFIG
    rng = random.Random(seed)
    report = SuiteReport("degree_operators")
    for _ in range(samples):
        v = rand_poly(rng)
        d12 = fock.apply_D(1, fock.apply_D(2, v, cfg), cfg)
        d21 = fock.apply_D(2, fock.apply_D(1, v, cfg), cfg)
        report.record(d12 == d21, "[D1, D2] != 0")
        i, j = rng.randint(1, 3), rng.randint(1, 3)
        m, n = _rand_mono(rng)
        ev = fock.apply_generator(i, j, m, n, v, cfg)
        for which, w in ((1, m), (2, n)):
            lhs = fock.apply_D(which, ev, cfg) - fock.apply_generator(
                i, j, m, n, fock.apply_D(which, v, cfg), cfg
            )
            report.record(
                lhs == ev.scale(ScalarPoly.from_rational(w)),
                lambda i=i, j=j, m=m, n=n, which=which:
                    f"[D{which}, e{i}{j}({m},{n})] not the weight multiple",
            )
    return report


def run_all(samples=200, seed=0, corrupt=False):
    """The full bracket-verification battery used by the CLI."""
    rng = random.Random(seed ^ 0x5EED)
    reports = [
        homomorphism_suite(samples=samples, seed=seed, corrupt=corrupt),
        homomorphism_suite(
            samples=max(10, samples // 5),
            seed=seed + 1,
            cfg=rand_config(rng),
            corrupt=corrupt,
            name="homomorphism_random_config",
        ),
        lie_axiom_suite(samples=samples, seed=seed + 2),
        weyl_suite(samples=max(20, samples // 3), seed=seed + 3),
        derivation_suite(samples=max(20, samples // 3), seed=seed + 4),
    ]
    return reports
