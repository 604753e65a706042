"""The iterated polar/Le-cycle cascade at the origin.

Starting from the ambient space, intersect with one partial derivative per
step (in the declared coordinate order), split off the part inside the
critical locus as the Le cycle of that dimension, keep the rest as the next
polar cycle, and read each Le number off a coordinate slice at the origin.
Genericity of the coordinates is not decidable here; the necessary proxy
checks (polar dimension drops, slices zero-dimensional at the origin,
partials not vanishing on polar components) are enforced and reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cycles import Cycle, intersect_hypersurface, local_degree, split_by_locus
from .errors import Budget, LebettiError, NonGenericityError
from .groebner import (
    INFINITE,
    IdealBasis,
    dimension,
    grevlex,
    local_dimension,
    local_multiplicity,
    local_order,
)
from .poly import Polynomial


@dataclass(frozen=True)
class LeInput:
    """A polynomial germ with an ordered coordinate system for the cascade."""

    f: Polynomial
    coords: tuple[str, ...]

    def __post_init__(self):
        ring = self.f.ring
        if sorted(self.coords) != sorted(ring.variables):
            raise LebettiError(
                f"coords {self.coords} are not a permutation of {ring.variables}"
            )
        if self.f.is_zero():
            raise LebettiError("f is identically zero")
        if not self.f.ring.field.is_zero(self.f.constant_term()):
            raise LebettiError("f does not vanish at the origin")


@dataclass
class LeResult:
    """Polar and Le cycles, Le numbers, and genericity diagnostics."""

    input: LeInput
    sigma_dim: int
    lambdas: tuple[int, ...]
    gamma: dict[int, Cycle]
    le: dict[int, Cycle]
    proxies: dict[str, bool]
    diagnostics: list[str] = field(default_factory=list)
    coordinate_change: tuple[tuple[int, ...], ...] | None = None
    budget_used: int = 0

    @property
    def lambda0(self) -> int:
        return self.lambdas[0] if self.lambdas else 0


def critical_locus(f: Polynomial, budget: Budget | None = None):
    """Jacobian ideal basis plus the dimension of the critical germ at 0.

    Returns (global basis, local dimension); the local dimension is -1 when
    the origin is not a critical point.
    """
    budget = budget or Budget()
    ring = f.ring
    if f.is_zero() or f.is_constant():
        raise LebettiError("f is constant")
    partials = [f.partial(v) for v in ring.variables]
    live = [p for p in partials if not p.is_zero()]
    if not live:
        raise NonGenericityError("all partial derivatives vanish identically")
    jac = IdealBasis.compute(live, grevlex(), budget, ring=ring)
    jac_local = IdealBasis.compute(live, local_order(), budget, ring=ring)
    return jac, local_dimension(jac_local)


def milnor_number_isolated(f: Polynomial, budget: Budget | None = None) -> int:
    """Milnor number of an isolated critical point at the origin: the local
    multiplicity of the Jacobian ideal."""
    budget = budget or Budget()
    ring = f.ring
    _, dim0 = critical_locus(f, budget)
    if dim0 != 0:
        raise NonGenericityError(
            f"critical locus has dimension {dim0} at the origin, expected 0"
        )
    live = [p for p in (f.partial(v) for v in ring.variables) if not p.is_zero()]
    mult = local_multiplicity(IdealBasis.compute(live, local_order(), budget, ring=ring))
    if mult is INFINITE:
        raise NonGenericityError("Jacobian ideal is not zero-dimensional at the origin")
    return mult


def random_coordinate_change(ring, seed: int):
    """Seeded unimodular integer change of coordinates: substitution mapping
    and its matrix (rows give the image of each old variable)."""
    rng = random.Random(seed)
    n = ring.nvars
    lower = [[1 if i == j else (rng.randint(-2, 2) if i > j else 0) for j in range(n)]
             for i in range(n)]
    upper = [[1 if i == j else (rng.randint(-2, 2) if i < j else 0) for j in range(n)]
             for i in range(n)]
    matrix = [
        [sum(lower[i][k] * upper[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    mapping = {}
    for i, name in enumerate(ring.variables):
        image = ring.zero()
        for j, other in enumerate(ring.variables):
            if matrix[i][j]:
                image = image + ring.variable(other).scale(
                    ring.field.from_int(matrix[i][j])
                )
        mapping[name] = image
    return mapping, tuple(tuple(row) for row in matrix)


def le_cascade(inp: LeInput, budget: Budget | None = None,
               coord_change_seed: int | None = None) -> LeResult:
    """Run the full cascade and return every intermediate cycle.

    Raises NonGenericityError when a proxy check fails: a partial derivative
    vanishing on a nonempty polar cycle, a polar cycle of the wrong dimension,
    a slice that is not zero-dimensional at the origin, or a nonzero Le number
    above the critical dimension.
    """
    budget = budget or Budget()
    diagnostics: list[str] = []
    f = inp.f
    ring = f.ring
    matrix = None
    if coord_change_seed is not None:
        mapping, matrix = random_coordinate_change(ring, coord_change_seed)
        f = f.compose(mapping)
        diagnostics.append(f"applied coordinate change with seed {coord_change_seed}")

    jac, sigma_dim = critical_locus(f, budget)
    hints = tuple(p for p in (f.partial(v) for v in ring.variables) if not p.is_zero())
    n = ring.nvars - 1

    gamma: dict[int, Cycle] = {n + 1: Cycle.ambient(ring, budget)}
    le: dict[int, Cycle] = {}
    lambdas = [0] * (n + 1)
    gamma_dims_ok = True

    for k in range(n, -1, -1):
        g = f.partial(inp.coords[k])
        current = gamma[k + 1]
        if current.is_empty():
            gamma[k] = Cycle.empty(ring)
            le[k] = Cycle.empty(ring)
        else:
            if g.is_zero():
                raise NonGenericityError(
                    f"partial derivative in {inp.coords[k]} vanishes identically "
                    "on a nonempty polar cycle"
                )
            raw = intersect_hypersurface(current, g, hints, budget, diagnostics)
            inside, outside = split_by_locus(raw, jac, budget)
            gamma[k] = outside
            le[k] = inside
        for K, _ in gamma[k].components:
            if dimension(K) != k:
                gamma_dims_ok = False
                raise NonGenericityError(
                    f"polar cycle at step {k} has a component of dimension "
                    f"{dimension(K)}: {K!r}"
                )
        for K, _ in le[k].components:
            if dimension(K) != k:
                diagnostics.append(
                    f"Le cycle at step {k} has a component of dimension {dimension(K)}"
                )
        lambdas[k] = local_degree(le[k], inp.coords[:k], budget)

    for k in range(sigma_dim + 1, n + 1):
        if lambdas[k] != 0:
            raise NonGenericityError(
                f"nonzero Le number {lambdas[k]} in dimension {k} above the "
                f"critical dimension {sigma_dim}"
            )

    reported = tuple(lambdas[: sigma_dim + 1]) if sigma_dim >= 0 else ()
    if sigma_dim < 0:
        diagnostics.append("origin is not a critical point; all Le numbers vanish")

    proxies = {
        "gamma_dimensions": gamma_dims_ok,
        "slices_zero_dimensional": True,  # a failure raises before this point
        "partials_nonvanishing_on_polar": True,
        "vanishing_above_critical_dimension": True,
    }
    return LeResult(
        input=inp,
        sigma_dim=sigma_dim,
        lambdas=reported,
        gamma=gamma,
        le=le,
        proxies=proxies,
        diagnostics=diagnostics,
        coordinate_change=matrix,
        budget_used=budget.used,
    )
