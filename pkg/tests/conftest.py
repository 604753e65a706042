"""Shared test helpers: seeded random algebra generators and an independent
reduction oracle used to re-verify completed bases.

The oracle code deliberately re-implements leading terms, S-polynomials, and
division from scratch on top of plain Polynomial arithmetic, so it shares no
code path with the basis engine it checks.
"""

from __future__ import annotations

import random
from fractions import Fraction

from lebetti.fields import GF, QQ
from lebetti.poly import Polynomial, Ring

MAX_ORACLE_STEPS = 50_000


# -- independent order / reduction oracle -----------------------------------


def oracle_grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def oracle_lead(p):
    exp = max(p.terms, key=oracle_grevlex_key)
    return exp, p.terms[exp]


def oracle_reduce(p, basis):
    """Plain multivariate division remainder for the global grevlex order."""
    ring = p.ring
    remainder = ring.zero()
    work = p
    steps = 0
    while not work.is_zero():
        steps += 1
        assert steps < MAX_ORACLE_STEPS, "oracle reduction ran away"
        exp, coeff = oracle_lead(work)
        for g in basis:
            gexp, gc = oracle_lead(g)
            if all(a <= b for a, b in zip(gexp, exp)):
                shift = tuple(b - a for a, b in zip(gexp, exp))
                factor = ring.field.div(coeff, gc)
                work = work - g.mul_term(shift, factor)
                break
        else:
            lead = Polynomial(ring, {exp: coeff})
            remainder = remainder + lead
            work = work - lead
    return remainder


def oracle_spoly(f, g):
    ring = f.ring
    ef, cf = oracle_lead(f)
    eg, cg = oracle_lead(g)
    m = tuple(max(a, b) for a, b in zip(ef, eg))
    sf = f.mul_term(tuple(x - y for x, y in zip(m, ef)), ring.field.inv(cf))
    sg = g.mul_term(tuple(x - y for x, y in zip(m, eg)), ring.field.inv(cg))
    return sf - sg


def oracle_buchberger_criterion(basis) -> bool:
    """Every S-polynomial of the basis reduces to zero against the basis."""
    basis = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not oracle_reduce(oracle_spoly(basis[i], basis[j]), basis).is_zero():
                return False
    return True


def oracle_membership_soundness(gens, basis) -> bool:
    return all(oracle_reduce(g, basis).is_zero() for g in gens if not g.is_zero())


def oracle_staircase_count(lead_exps, bounds):
    """Direct enumeration of lattice points under a monomial staircase."""
    from itertools import product

    count = 0
    for point in product(*[range(b) for b in bounds]):
        if not any(all(a <= b for a, b in zip(e, point)) for e in lead_exps):
            count += 1
    return count


# -- seeded random generators -------------------------------------------------


def random_polynomial(rng: random.Random, ring: Ring, max_degree=3, max_terms=4,
                      coeff_box=5, allow_zero=True) -> Polynomial:
    field = ring.field
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        exp = []
        remaining = max_degree
        for _ in range(ring.nvars):
            e = rng.randint(0, remaining)
            exp.append(e)
            remaining -= e
        rng.shuffle(exp)
        if field.char:
            coeff = field.from_int(rng.randrange(field.char))
        else:
            num = rng.randint(-coeff_box, coeff_box)
            den = rng.randint(1, 3)
            coeff = Fraction(num, den)
        terms[tuple(exp)] = field.add(terms.get(tuple(exp), field.zero), coeff)
    return Polynomial(ring, terms)


def random_nonzero_polynomial(rng, ring, **kwargs) -> Polynomial:
    for _ in range(50):
        p = random_polynomial(rng, ring, allow_zero=False, **kwargs)
        if not p.is_zero():
            return p
    raise AssertionError("could not draw a nonzero polynomial")


RINGS = {
    "QQ2": Ring(("x", "y"), QQ),
    "QQ3": Ring(("x", "y", "z"), QQ),
    "F5_2": Ring(("x", "y"), GF(5)),
    "F7_3": Ring(("x", "y", "z"), GF(7)),
}
