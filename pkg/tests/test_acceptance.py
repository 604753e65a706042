"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Every tolerance is exact (integer equality) unless a runtime limit is stated.
"""

import random
import time
from contextlib import contextmanager

from conftest import (
    oracle_buchberger_criterion,
    oracle_membership_soundness,
    oracle_staircase_count,
    random_nonzero_polynomial,
)
from lebetti import linalg
from lebetti.bounds import (
    OneDimComponent,
    chain_complex_constraints,
    main_theorem_bounds,
    monodromy_image_window,
    one_dim_relations,
)
from lebetti.corpus import load_entries
from lebetti.fields import GF, QQ
from lebetti.groebner import (
    IdealBasis,
    grevlex,
    ideals_equal,
    local_multiplicity,
    local_order,
    saturation,
)
from lebetti.lenumbers import LeInput, le_cascade
from lebetti.perv import sandwich_trials
from lebetti.poly import Polynomial, Ring, parse


@contextmanager
def criterion(number: int, description: str):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} [FAIL] {description}")
        raise
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {number} [PASS] {description} ({elapsed:.2f}s)")


V4 = ("u", "v", "x", "y")
R4 = Ring(V4)


def _ideal(texts, ring):
    return IdealBasis.compute([parse(t, ring) for t in texts], grevlex(), ring=ring)


def _assert_cycle(cycle, expected_pairs, ring):
    assert len(cycle.components) == len(expected_pairs), cycle.render()
    remaining = list(cycle.components)
    for texts, mult in expected_pairs:
        want = _ideal(texts, ring)
        hit = next(
            (
                i
                for i, (K, m) in enumerate(remaining)
                if m == mult and ideals_equal(K, want)
            ),
            None,
        )
        assert hit is not None, f"missing {mult}*V({texts}) in {cycle.render()}"
        remaining.pop(hit)


def test_criterion_1_flagship_cascade():
    with criterion(1, "flagship cascade reproduces the printed cycles exactly"):
        start = time.monotonic()
        f = parse("y^2+x^5+u*x^4+v^2*x^2", R4)
        result = le_cascade(LeInput(f, V4))
        assert result.lambdas == (4, 6, 1)
        _assert_cycle(result.gamma[3], [(["y"], 1)], R4)
        _assert_cycle(result.gamma[2], [(["5*x^3+4*u*x^2+2*v^2", "y"], 1)], R4)
        _assert_cycle(result.le[2], [(["x", "y"], 1)], R4)
        _assert_cycle(result.gamma[1], [(["5*x+4*u", "v", "y"], 1)], R4)
        _assert_cycle(result.le[1], [(["x", "v", "y"], 6)], R4)
        _assert_cycle(result.le[0], [(["u", "v", "x", "y"], 4)], R4)
        assert time.monotonic() - start < 10.0


def test_criterion_2_flagship_image_window():
    with criterion(2, "betti 0 back-solves the image dimension to exactly 4"):
        window = monodromy_image_window(4, 0)
        assert (window.lower, window.upper) == (4, 4)


def test_criterion_3_isolated_oracle_suite():
    with criterion(3, "Brieskorn/Morse lambda0 equals the staircase Milnor number"):
        start = time.monotonic()
        pairs = [(2, 3), (2, 5), (3, 3), (3, 4), (4, 4), (5, 5)]
        assert len(pairs) >= 6
        ring = Ring(("x", "y"))
        for a, b in pairs:
            # independent oracle: direct staircase enumeration of the
            # leading-term ideal (x^(a-1), y^(b-1))
            lead = [(a - 1, 0), (0, b - 1)]
            expected = oracle_staircase_count(lead, (a - 1, b - 1))
            assert expected == (a - 1) * (b - 1)
            f = parse(f"x^{a}+y^{b}", ring)
            result = le_cascade(LeInput(f, ("x", "y")))
            assert result.lambdas == (expected,)
        morse = parse("x^2+y^2+z^2", ("x", "y", "z"))
        assert le_cascade(LeInput(morse, ("x", "y", "z"))).lambdas == (1,)
        assert time.monotonic() - start < 5.0


def test_criterion_4_one_dimensional_suite():
    with criterion(4, "y^2 cascade, chain constraints, one-dim relations"):
        ring = Ring(("x", "y"))
        result = le_cascade(LeInput(parse("y^2", ring), ("x", "y")))
        assert result.lambdas == (0, 1)
        chain = chain_complex_constraints([0, 1], [0, 1])
        assert all(v.ok() for v in chain)
        component = OneDimComponent(1, 1, linalg.identity(1, QQ))
        verdicts = one_dim_relations(0, 1, [component], betti_nm1=1, betti_n=0)
        assert all(v.status != "fail" for v in verdicts)


def test_criterion_5_sandwich_property_suite():
    with criterion(5, "1000 self-dual quadruple trials over QQ and GF(5)"):
        start = time.monotonic()
        for field in (QQ, GF(5)):
            report = sandwich_trials(1000, 7, field)
            assert report.trials == 1000
            assert report.all_passed(), report.failures[:3]
        assert time.monotonic() - start < 10.0


def test_criterion_6_bound_consistency_exhaustion():
    with criterion(6, "window consistency for all 0 <= imdim <= lambda0 <= 30"):
        for lambda0 in range(31):
            for imdim in range(lambda0 + 1):
                betti_window = main_theorem_bounds(lambda0, imdim)
                for betti in range(betti_window.lower, betti_window.upper + 1):
                    assert monodromy_image_window(lambda0, betti).contains(imdim)
                degenerate = (betti_window.lower, betti_window.upper) == (0, 0)
                assert degenerate == (imdim == lambda0)


def test_criterion_7_algebraic_engine_properties():
    with criterion(7, "basis re-verification, saturation idempotence, staircases"):
        # Buchberger criterion + membership soundness on every corpus basis
        for entry in load_entries():
            ring = entry.ring()
            f = parse(entry.f_text, ring)
            cascade = le_cascade(
                LeInput(f, entry.coords), coord_change_seed=entry.coord_change_seed
            )
            partials = [
                p for p in (f.partial(v) for v in ring.variables) if not p.is_zero()
            ]
            bases = [IdealBasis.compute(partials, grevlex(), ring=ring)]
            for cycles in (cascade.gamma, cascade.le):
                for cyc in cycles.values():
                    bases.extend(K for K, _ in cyc.components)
            for basis in bases:
                if basis.is_zero_ideal():
                    continue
                assert oracle_buchberger_criterion(basis.basis)
                assert oracle_membership_soundness(basis.gens, basis.basis)

        # saturation idempotence on 200 random small ideals
        rng = random.Random("acceptance-sat-idem")
        rings = [Ring(("x", "y")), Ring(("x", "y"), GF(5))]
        for trial in range(200):
            ring = rings[trial % 2]
            gens = [
                random_nonzero_polynomial(rng, ring, max_degree=2, max_terms=3)
                for _ in range(2)
            ]
            hyp = [random_nonzero_polynomial(rng, ring, max_degree=1, max_terms=2)]
            ideal = IdealBasis.compute(gens, grevlex(), ring=ring)
            locus = IdealBasis.compute(hyp, grevlex(), ring=ring)
            once = saturation(ideal, locus)
            assert ideals_equal(saturation(once, locus), once)

        # local multiplicity vs direct staircase enumeration, 200 random
        rng = random.Random("acceptance-staircase")
        for _ in range(200):
            nvars = rng.randint(1, 3)
            ring = Ring(tuple("xyz"[:nvars]))
            exps = [
                tuple(rng.randint(0, 4) for _ in range(nvars))
                for _ in range(rng.randint(1, 4))
            ]
            for i in range(nvars):
                exps.append(
                    tuple(rng.randint(1, 5) if j == i else 0 for j in range(nvars))
                )
            gens = [Polynomial(ring, {e: QQ.one}) for e in exps if any(e)]
            ideal = IdealBasis.compute(gens, local_order(), ring=ring)
            bounds = []
            for i in range(nvars):
                pure = [e[i] for e in ideal.leading_exponents() if sum(e) == e[i]]
                bounds.append(min(pure))
            assert local_multiplicity(ideal) == oracle_staircase_count(
                ideal.leading_exponents(), bounds
            )
