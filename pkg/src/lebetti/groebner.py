"""Groebner bases for global orders, standard bases for local orders.

Supports membership, Krull dimension (global and at the origin), local
intersection multiplicity via standard-monomial counts, ideal intersection,
ideal quotient, and saturation.  Everything is exact; rings at the origin are
handled with the negative graded reverse lexicographic order and Mora's weak
normal form, so the only localization available is at the origin -- which is
the only one the Le-number pipeline needs.

Determinism: pair selection uses the normal strategy (lcm rank in the order,
then insertion indices), generators are processed in the given order, and
completed global bases are fully interreduced, so equal inputs give
bit-identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Budget, LebettiError, NonGenericityError
from .poly import Polynomial, Ring

_STAIRCASE_CELL_LIMIT = 10**7
_SATURATION_ROUNDS = 100


class _Infinite:
    """Sentinel returned by local_multiplicity for non-isolated loci."""

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _Infinite()


# -- monomial orders ------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """kind: 'grevlex' (global), 'ds' (local negative grevlex), or 'elim'
    (internal block order eliminating the first `block` variables).

    perm lists variable positions from most to least significant; None means
    the declared order.
    """

    kind: str
    perm: tuple[int, ...] | None = None
    block: int = 0

    @property
    def is_global(self) -> bool:
        return self.kind in ("grevlex", "elim")

    def _permute(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        if self.perm is None:
            return exp
        return tuple(exp[i] for i in self.perm)

    def key(self, exp: tuple[int, ...]):
        if self.kind == "elim":
            head, tail = exp[: self.block], exp[self.block :]
            return (_grevlex(head), _grevlex(tail))
        pe = self._permute(exp)
        if self.kind == "grevlex":
            return _grevlex(pe)
        if self.kind == "ds":
            total, tail = _grevlex(pe)
            return (-total, tail)
        raise LebettiError(f"unknown order kind {self.kind!r}")


def _grevlex(exp: tuple[int, ...]):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def grevlex(perm: tuple[int, ...] | None = None) -> MonomialOrder:
    return MonomialOrder("grevlex", perm)


def local_order(perm: tuple[int, ...] | None = None) -> MonomialOrder:
    return MonomialOrder("ds", perm)


def _elim_first() -> MonomialOrder:
    return MonomialOrder("elim", None, 1)


# -- term utilities --------------------------------------------------------


def _lead(p: Polynomial, order: MonomialOrder):
    """(exponent, coefficient) of the order-leading term; p must be nonzero."""
    exp = max(p.terms, key=order.key)
    return exp, p.terms[exp]


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, lc = _lead(p, order)
    return p.scale(p.ring.field.inv(lc))


def _ecart(p: Polynomial, order: MonomialOrder) -> int:
    lexp, _ = _lead(p, order)
    return p.total_degree() - sum(lexp)


def _spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    field = f.ring.field
    ef, cf = _lead(f, order)
    eg, cg = _lead(g, order)
    m = _lcm(ef, eg)
    return f.mul_term(_sub_exp(m, ef), field.inv(cf)) - g.mul_term(
        _sub_exp(m, eg), field.inv(cg)
    )


# -- reduction -------------------------------------------------------------


def reduce_global(p: Polynomial, basis, order: MonomialOrder, budget: Budget) -> Polynomial:
    """Canonical normal form for a global order (reduces tails as well)."""
    ring = p.ring
    remainder = ring.zero()
    work = p
    leads = [(_lead(g, order)[0], g) for g in basis]
    while not work.is_zero():
        exp, coeff = _lead(work, order)
        for lexp, g in leads:
            if _divides(lexp, exp):
                budget.spend()
                lc = g.terms[lexp]
                work = work - g.mul_term(_sub_exp(exp, lexp), ring.field.div(coeff, lc))
                break
        else:
            lead = Polynomial(ring, {exp: coeff})
            remainder = remainder + lead
            work = work - lead
    return remainder


def mora_nf(p: Polynomial, basis, order: MonomialOrder, budget: Budget) -> Polynomial:
    """Mora's weak normal form for local orders: u*p = sum a_i g_i + h with a
    local unit u.  h == 0 iff p lies in the localized ideal."""
    ring = p.ring
    field = ring.field
    pool = [(g, _lead(g, order)[0], _ecart(g, order), i) for i, g in enumerate(basis)]
    h = p
    while not h.is_zero():
        hexp, hc = _lead(h, order)
        divisors = [entry for entry in pool if _divides(entry[1], hexp)]
        if not divisors:
            return h
        g, gexp, geca, _ = min(divisors, key=lambda entry: (entry[2], entry[3]))
        if geca > h.total_degree() - sum(hexp):
            pool.append((h, hexp, h.total_degree() - sum(hexp), len(pool)))
        budget.spend()
        h = h - g.mul_term(_sub_exp(hexp, gexp), field.div(hc, g.terms[gexp]))
    return h


# -- basis completion -------------------------------------------------------


def _complete(gens, order: MonomialOrder, budget: Budget):
    """Run Buchberger (global) or Mora (local) pair completion."""
    G: list[Polynomial] = []
    for g in gens:
        if not g.is_zero():
            G.append(_monic(g, order))
    if not G:
        return []
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_rank(pair):
        i, j = pair
        m = _lcm(_lead(G[i], order)[0], _lead(G[j], order)[0])
        return (order.key(m), i, j)

    reducer = reduce_global if order.is_global else mora_nf
    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.remove((i, j))
        ei = _lead(G[i], order)[0]
        ej = _lead(G[j], order)[0]
        if order.is_global and _lcm(ei, ej) == tuple(a + b for a, b in zip(ei, ej)):
            continue  # coprime leading monomials
        budget.spend()
        s = _spoly(G[i], G[j], order)
        if s.is_zero():
            continue
        r = reducer(s, G, order, budget)
        if not r.is_zero():
            G.append(_monic(r, order))
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))
    return G


def _minimalize(G, order: MonomialOrder):
    """Drop elements whose leading monomial is divisible by another's."""
    ranked = sorted(G, key=lambda g: order.key(_lead(g, order)[0]))
    kept: list[Polynomial] = []
    for g in ranked:
        gexp = _lead(g, order)[0]
        if not any(_divides(_lead(h, order)[0], gexp) for h in kept):
            kept.append(g)
    return kept


def _interreduce(G, order: MonomialOrder, budget: Budget):
    """Tail-reduce a minimal global basis to the unique reduced basis."""
    current = list(G)
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            others = current[:i] + current[i + 1 :]
            if not others:
                continue
            r = reduce_global(current[i], others, order, budget)
            if r.is_zero():
                raise LebettiError("minimal basis element reduced to zero")
            r = _monic(r, order)
            if r != current[i]:
                current[i] = r
                changed = True
    return sorted(current, key=lambda g: order.key(_lead(g, order)[0]))


# -- the ideal object --------------------------------------------------------


@dataclass(frozen=True)
class IdealBasis:
    """Generators plus a completed basis for one monomial order.

    For global orders `basis` is the reduced Groebner basis (canonical).  For
    local orders it is a minimal monic standard basis; local bases are never
    tail-reduced (tail reduction need not terminate in a local ring), so they
    are canonical only in their leading terms.
    """

    ring: Ring
    order: MonomialOrder
    gens: tuple[Polynomial, ...]
    basis: tuple[Polynomial, ...]
    complete: bool = True

    @classmethod
    def compute(cls, gens, order: MonomialOrder | None = None, budget: Budget | None = None,
                ring: Ring | None = None) -> "IdealBasis":
        gens = tuple(gens)
        live = [g for g in gens if not g.is_zero()]
        if ring is None:
            if not live:
                raise LebettiError("cannot infer the ring of a zero ideal; pass ring=")
            ring = live[0].ring
        for g in live:
            if g.ring != ring:
                raise LebettiError("generators live in different rings")
        if order is None:
            order = grevlex()
        budget = budget or Budget()
        completed = _complete(live, order, budget)
        minimal = _minimalize(completed, order)
        if order.is_global and minimal:
            minimal = _interreduce(minimal, order, budget)
        return cls(ring, order, gens, tuple(minimal))

    # -- predicates --

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def is_unit(self) -> bool:
        """Unit ideal; for a local order this means the unit ideal of the
        localization at the origin."""
        return any(sum(_lead(g, self.order)[0]) == 0 for g in self.basis)

    def normal_form(self, p: Polynomial, budget: Budget | None = None) -> Polynomial:
        budget = budget or Budget()
        if not self.basis:
            return p
        if self.order.is_global:
            return reduce_global(p, self.basis, self.order, budget)
        return mora_nf(p, self.basis, self.order, budget)

    def contains(self, p: Polynomial, budget: Budget | None = None) -> bool:
        return self.normal_form(p, budget).is_zero()

    def leading_exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_lead(g, self.order)[0] for g in self.basis)

    def canonical_key(self):
        """Hashable form identifying the ideal (global reduced bases only)."""
        if not self.order.is_global:
            raise LebettiError("canonical keys need a global order")
        return tuple(sorted(g.primitive().render() for g in self.basis))

    def render_gens(self) -> tuple[str, ...]:
        return tuple(g.primitive().render() for g in self.basis)

    def __repr__(self) -> str:  # pragma: no cover
        inside = ", ".join(self.render_gens()) or "0"
        return f"Ideal({inside})"


def ideals_equal(I: IdealBasis, J: IdealBasis) -> bool:
    if I.ring != J.ring:
        raise LebettiError("ideals live in different rings")
    if I.order == J.order and I.order.is_global:
        return I.canonical_key() == J.canonical_key()
    return all(J.contains(g) for g in I.basis) and all(I.contains(g) for g in J.basis)


# -- staircase combinatorics --------------------------------------------------


def standard_monomial_count(lead_exps, nvars: int):
    """Number of monomials outside the staircase of a leading-term ideal, or
    INFINITE when some variable has no pure power among the leading terms."""
    if any(sum(e) == 0 for e in lead_exps):
        return 0
    if not lead_exps:
        return INFINITE if nvars > 0 else 1
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in lead_exps if sum(e) == e[i]]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    cells = 1
    for b in bounds:
        cells *= b
    if cells > _STAIRCASE_CELL_LIMIT:
        raise LebettiError("staircase enumeration box too large")
    count = 0
    stack = [(0, ())]
    while stack:
        i, prefix = stack.pop()
        if i == nvars:
            if not any(_divides(e, prefix) for e in lead_exps):
                count += 1
            continue
        for v in range(bounds[i]):
            stack.append((i + 1, prefix + (v,)))
    return count


def _independent_set_dimension(lead_exps, nvars: int) -> int:
    """Max size of a variable set S with no leading monomial supported in S;
    -1 for the unit ideal.  This is the Krull dimension of the quotient by
    the leading-term ideal."""
    if any(sum(e) == 0 for e in lead_exps):
        return -1
    supports = [frozenset(i for i, v in enumerate(e) if v) for e in lead_exps]
    best = -1
    for mask in range(1 << nvars):
        S = frozenset(i for i in range(nvars) if mask >> i & 1)
        if any(sup <= S for sup in supports):
            continue
        best = max(best, len(S))
    return best


def dimension(I: IdealBasis) -> int:
    """Krull dimension of the affine zero set (global order required)."""
    if not I.order.is_global:
        raise LebettiError("dimension needs a global order")
    return _independent_set_dimension(I.leading_exponents(), I.ring.nvars)


def local_dimension(I: IdealBasis) -> int:
    """Dimension of the zero-set germ at the origin (local order required)."""
    if I.order.is_global:
        raise LebettiError("local_dimension needs a local order")
    return _independent_set_dimension(I.leading_exponents(), I.ring.nvars)


def local_multiplicity(I: IdealBasis):
    """Vector-space dimension of the local ring at the origin modulo I: the
    count of standard monomials of the local leading-term ideal, or INFINITE.
    Returns 0 when the origin is not in V(I)."""
    if I.order.is_global:
        raise LebettiError("local_multiplicity needs a local order")
    return standard_monomial_count(I.leading_exponents(), I.ring.nvars)


# -- elimination, intersection, quotient, saturation ---------------------------


_ELIM_VAR = "@t"


def _lift_ring(ring: Ring) -> Ring:
    return Ring((_ELIM_VAR,) + ring.variables, ring.field)


def _lift(p: Polynomial, tring: Ring, tdeg: int) -> Polynomial:
    return Polynomial(tring, {(tdeg,) + e: c for e, c in p.terms.items()})


def _t_free(p: Polynomial) -> bool:
    return all(e[0] == 0 for e in p.terms)


def _drop(p: Polynomial, ring: Ring) -> Polynomial:
    return Polynomial(ring, {e[1:]: c for e, c in p.terms.items()})


def intersection(I: IdealBasis, J: IdealBasis, budget: Budget | None = None) -> IdealBasis:
    """I cap J via elimination of a tag variable from t*I + (1-t)*J."""
    ring = I.ring
    if J.ring != ring:
        raise LebettiError("ideals live in different rings")
    budget = budget or Budget()
    tring = _lift_ring(ring)
    gens = [_lift(g, tring, 1) for g in I.basis]
    for g in J.basis:
        gens.append(_lift(g, tring, 0) - _lift(g, tring, 1))
    completed = _complete(gens, _elim_first(), budget)
    kept = [_drop(p, ring) for p in _minimalize(completed, _elim_first()) if _t_free(p)]
    return IdealBasis.compute(kept, grevlex(), budget, ring=ring)


def exact_divide(g: Polynomial, q: Polynomial) -> Polynomial | None:
    """Return g/q when q divides g exactly, else None."""
    if q.is_zero():
        return None
    order = grevlex()
    field = g.ring.field
    qexp, qc = _lead(q, order)
    quotient = g.ring.zero()
    work = g
    while not work.is_zero():
        wexp, wc = _lead(work, order)
        if not _divides(qexp, wexp):
            return None
        step = Polynomial(g.ring, {_sub_exp(wexp, qexp): field.div(wc, qc)})
        quotient = quotient + step
        work = work - q * step
    return quotient


def quotient_by_poly(I: IdealBasis, q: Polynomial, budget: Budget | None = None) -> IdealBasis:
    """The ideal quotient I : (q)."""
    budget = budget or Budget()
    ring = I.ring
    if q.is_zero():
        return IdealBasis.compute([ring.one()], grevlex(), budget, ring=ring)
    if q.is_constant():
        return I
    if I.is_zero_ideal():
        return IdealBasis.compute([], grevlex(), budget, ring=ring)
    Q = IdealBasis.compute([q], grevlex(), budget, ring=ring)
    meet = intersection(I, Q, budget)
    out = []
    for g in meet.basis:
        h = exact_divide(g, q)
        if h is None:
            raise LebettiError("intersection element not divisible in quotient")
        out.append(h)
    return IdealBasis.compute(out, grevlex(), budget, ring=ring)


def quotient(I: IdealBasis, J: IdealBasis, budget: Budget | None = None) -> IdealBasis:
    """The ideal quotient I : J."""
    budget = budget or Budget()
    result: IdealBasis | None = None
    for q in J.basis:
        part = quotient_by_poly(I, q, budget)
        result = part if result is None else intersection(result, part, budget)
    if result is None:  # J is the zero ideal
        return IdealBasis.compute([I.ring.one()], grevlex(), budget, ring=I.ring)
    return result


def saturation(I: IdealBasis, J: IdealBasis, budget: Budget | None = None) -> IdealBasis:
    """I : J^infinity by iterated quotient until stabilization."""
    budget = budget or Budget()
    current = I
    for _ in range(_SATURATION_ROUNDS):
        nxt = quotient(current, J, budget)
        if ideals_equal(nxt, current):
            return current
        current = nxt
    raise NonGenericityError("saturation did not stabilize")


def ideal_sum(I: IdealBasis, polys, budget: Budget | None = None,
              order: MonomialOrder | None = None) -> IdealBasis:
    """The ideal generated by I together with extra polynomials."""
    return IdealBasis.compute(
        list(I.basis) + [p for p in polys],
        order or I.order,
        budget,
        ring=I.ring,
    )


def zero_ideal(ring: Ring, order: MonomialOrder | None = None) -> IdealBasis:
    return IdealBasis.compute([], order or grevlex(), ring=ring)


def maximal_ideal(ring: Ring, order: MonomialOrder | None = None,
                  budget: Budget | None = None) -> IdealBasis:
    gens = [ring.variable(v) for v in ring.variables]
    return IdealBasis.compute(gens, order or grevlex(), budget, ring=ring)
