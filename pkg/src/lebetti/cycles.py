"""Analytic-cycle arithmetic: formal integer combinations of components.

A component is an ideal (global reduced Groebner basis) with a positive
multiplicity.  Intersecting a cycle with a hypersurface splits the section
into single-locus pieces by iterated saturation against candidate loci
(coordinate hyperplanes, monomial-content-stripped generators, and caller
hints), then recovers each piece's multiplicity by quotient peeling against
its reduced ideal -- or, for point clusters at the origin, by the local
multiplicity.  This matches the classical polar/Le cascade bookkeeping in
the generically-reduced complete-intersection regime; inputs escaping that
regime are reported through the diagnostics list rather than silently
mis-counted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Budget, LebettiError, NonGenericityError
from .groebner import (
    INFINITE,
    IdealBasis,
    dimension,
    grevlex,
    ideal_sum,
    ideals_equal,
    local_multiplicity,
    local_order,
    maximal_ideal,
    quotient,
    saturation,
    standard_monomial_count,
)
from .poly import Polynomial, Ring

_PEEL_CAP = 10**4
_SPLIT_CAP = 200


@dataclass(frozen=True)
class Cycle:
    """Formal sum of (component ideal, multiplicity) pairs over one ring."""

    ring: Ring
    components: tuple[tuple[IdealBasis, int], ...]

    @classmethod
    def empty(cls, ring: Ring) -> "Cycle":
        return cls(ring, ())

    @classmethod
    def ambient(cls, ring: Ring, budget: Budget | None = None) -> "Cycle":
        whole = IdealBasis.compute([], grevlex(), budget, ring=ring)
        return cls(ring, ((whole, 1),))

    def is_empty(self) -> bool:
        return not self.components

    def dimensions(self) -> set[int]:
        return {dimension(K) for K, _ in self.components}

    def __add__(self, other: "Cycle") -> "Cycle":
        if self.ring != other.ring:
            raise LebettiError("cycles live in different rings")
        return _merge(self.ring, list(self.components) + list(other.components))

    def scale(self, m: int) -> "Cycle":
        if m < 0:
            raise LebettiError("cycle multiplicities must stay nonnegative")
        if m == 0:
            return Cycle.empty(self.ring)
        return Cycle(self.ring, tuple((K, m * c) for K, c in self.components))

    def render(self) -> str:
        if not self.components:
            return "0"
        parts = []
        for K, m in self.components:
            inside = ", ".join(K.render_gens()) or "0"
            parts.append(f"V({inside})" if m == 1 else f"{m}*V({inside})")
        return " + ".join(parts)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Cycle({self.render()})"


def _merge(ring: Ring, pairs) -> Cycle:
    by_key: dict = {}
    for K, m in pairs:
        if m == 0:
            continue
        key = K.canonical_key()
        if key in by_key:
            old_K, old_m = by_key[key]
            by_key[key] = (old_K, old_m + m)
        else:
            by_key[key] = (K, m)
    ordered = [by_key[k] for k in sorted(by_key)]
    return Cycle(ring, tuple(ordered))


# -- hypersurface factor extraction -----------------------------------------


def hypersurface_factors(g: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split g into (factor, exponent) pairs: one pair per variable in the
    monomial content, plus the content-free remainder when nonconstant."""
    ring = g.ring
    factors: list[tuple[Polynomial, int]] = []
    content = g.monomial_content()
    for i, name in enumerate(ring.variables):
        if content[i] > 0:
            factors.append((ring.variable(name), content[i]))
    stripped = g.strip_monomial_content()
    if not stripped.is_constant():
        factors.append((stripped, 1))
    return factors


def _candidates(B: IdealBasis, hints) -> list[Polynomial]:
    ring = B.ring
    seen: set[str] = set()
    out: list[Polynomial] = []
    for name in ring.variables:
        p = ring.variable(name)
        seen.add(p.render())
        out.append(p)
    for h in list(B.basis) + list(hints):
        stripped = h.strip_monomial_content()
        if stripped.is_constant():
            continue
        key = stripped.primitive().render()
        if key not in seen:
            seen.add(key)
            out.append(stripped)
    return out


def _principal(ring: Ring, q: Polynomial, budget: Budget) -> IdealBasis:
    return IdealBasis.compute([q], grevlex(), budget, ring=ring)


# -- atomization --------------------------------------------------------------


def atomize(A: IdealBasis, hints=(), budget: Budget | None = None,
            diagnostics: list[str] | None = None) -> list[tuple[IdealBasis, int]]:
    """Decompose a (pure-dimensional, regime-compliant) ideal into components
    with multiplicities.  Unresolvable pieces are kept whole with multiplicity
    one and a diagnostic; their contribution to any zero-dimensional slice
    degree is still exact by conservation of intersection numbers."""
    budget = budget or Budget()
    diagnostics = diagnostics if diagnostics is not None else []
    if A.is_unit():
        return []
    queue = [A]
    atoms: list[IdealBasis] = []
    rounds = 0
    while queue:
        rounds += 1
        if rounds > _SPLIT_CAP:
            raise NonGenericityError("component splitting did not terminate")
        B = queue.pop(0)
        if B.is_unit():
            continue
        for q in _candidates(B, hints):
            outside = saturation(B, _principal(B.ring, q, budget), budget)
            if outside.is_unit() or ideals_equal(outside, B):
                continue
            inside = saturation(B, outside, budget)
            queue.append(outside)
            queue.append(inside)
            break
        else:
            atoms.append(B)
    resolved: list[tuple[IdealBasis, int]] = []
    for atom in atoms:
        resolved.extend(_resolve_atom(atom, hints, budget, diagnostics))
    return resolved


def _resolve_atom(B: IdealBasis, hints, budget: Budget,
                  diagnostics: list[str]) -> list[tuple[IdealBasis, int]]:
    ring = B.ring
    d = dimension(B)
    if d < 0:
        return []
    if d == 0:
        total = standard_monomial_count(B.leading_exponents(), ring.nvars)
        local = local_multiplicity(IdealBasis.compute(B.basis, local_order(), budget, ring=ring))
        if local is INFINITE or total is INFINITE:
            raise LebettiError("zero-dimensional atom with infinite staircase")
        origin = maximal_ideal(ring, grevlex(), budget)
        if local == 0:
            diagnostics.append(f"opaque off-origin point cluster kept whole: {B!r}")
            return [(B, 1)]
        if local == total:
            return [(origin, local)]
        off = saturation(B, origin, budget)
        diagnostics.append(f"point cluster split origin/off-origin, off part opaque: {off!r}")
        return [(origin, local), (off, 1)]
    witnesses = [
        q
        for q in _candidates(B, hints)
        if saturation(B, _principal(ring, q, budget), budget).is_unit()
    ]
    if not witnesses:
        diagnostics.append(f"no reduced model found, atom kept whole: {B!r}")
        return [(B, 1)]
    R = IdealBasis.compute(witnesses, grevlex(), budget, ring=ring)
    if not saturation(R, B, budget).is_unit():
        diagnostics.append(f"reduced model mismatch, atom kept whole: {B!r}")
        return [(B, 1)]
    if ideals_equal(R, B):
        return [(B, 1)]
    mult = 0
    current = B
    while not current.is_unit():
        current = quotient(current, R, budget)
        mult += 1
        if mult > _PEEL_CAP:
            diagnostics.append(f"multiplicity peeling exceeded cap, atom kept whole: {B!r}")
            return [(B, 1)]
    return [(R, mult)]


# -- the three cycle operations ------------------------------------------------


def intersect_hypersurface(C: Cycle, g: Polynomial, hints=(),
                           budget: Budget | None = None,
                           diagnostics: list[str] | None = None) -> Cycle:
    """Intersection cycle of C with V(g), computed componentwise."""
    budget = budget or Budget()
    diagnostics = diagnostics if diagnostics is not None else []
    if C.is_empty():
        return C
    if g.ring != C.ring:
        raise LebettiError("hypersurface lives in a different ring")
    if g.is_zero():
        raise NonGenericityError("the zero polynomial vanishes on every component")
    dims = C.dimensions()
    if len(dims) != 1:
        raise NonGenericityError(f"cycle is not pure-dimensional: dims {sorted(dims)}")
    d = dims.pop()
    factors = hypersurface_factors(g)
    pieces: list[tuple[IdealBasis, int]] = []
    for K, mK in C.components:
        if K.contains(g, budget):
            raise NonGenericityError(
                f"hypersurface {g.primitive().render()!r} vanishes on component {K!r}"
            )
        for q, eq in factors:
            section = ideal_sum(K, [q], budget, grevlex())
            for R, e in atomize(section, tuple(hints) + (g,), budget, diagnostics):
                if dimension(R) != d - 1:
                    diagnostics.append(
                        f"intersection piece has dimension {dimension(R)}, expected {d - 1}: {R!r}"
                    )
                pieces.append((R, mK * eq * e))
    return _merge(C.ring, pieces)


def split_by_locus(C: Cycle, S: IdealBasis,
                   budget: Budget | None = None) -> tuple[Cycle, Cycle]:
    """Partition C into (inside, outside) of V(S): a component K lies inside
    exactly when Sat(K, S) is the unit ideal."""
    budget = budget or Budget()
    if S.is_unit():
        return Cycle.empty(C.ring), C
    inside: list[tuple[IdealBasis, int]] = []
    outside: list[tuple[IdealBasis, int]] = []
    for K, m in C.components:
        if saturation(K, S, budget).is_unit():
            inside.append((K, m))
        else:
            outside.append((K, m))
    return _merge(C.ring, inside), _merge(C.ring, outside)


def local_degree(C: Cycle, slice_vars, budget: Budget | None = None) -> int:
    """Intersection degree of C with the coordinate slice at the origin:
    sum over components of multiplicity times local multiplicity."""
    budget = budget or Budget()
    ring = C.ring
    total = 0
    slices = [ring.variable(v) for v in slice_vars]
    for K, m in C.components:
        loc = IdealBasis.compute(
            list(K.basis) + slices, local_order(), budget, ring=ring
        )
        mult = local_multiplicity(loc)
        if mult is INFINITE:
            raise NonGenericityError(
                f"slice by {tuple(slice_vars)} is not zero-dimensional on {K!r}"
            )
        total += m * mult
    return total
