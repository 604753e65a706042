"""Finite-dimensional model of nearby/vanishing-cycle mechanics at an
isolated support point.

A quadruple holds two vector spaces Psi (dim a) and Phi (dim b) with maps
can: Psi -> Phi and var: Phi -> Psi.  The monodromy T on Psi is determined by
var o can = id - T and is never stored independently.  The self-dual
constructor draws a random can and nondegenerate pairings and sets var to the
adjoint of can, which forces dim coker(can) = dim ker(var) -- the hypothesis
under which the sandwich inequality

    (b - r) / 2  <=  dim coker(can)  <=  b - r,      r = dim im(var o can),

holds.  This model is honest only at an isolated support point: at the sheaf
level, images of maps of perverse sheaves do not commute with stalks in
general, and no claim is made beyond the finite-dimensional shadow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DualityHypothesisError, LebettiError
from .fields import QQ

_PAIRING_RETRIES = 200
_ENTRY_BOX = 3


@dataclass(frozen=True)
class MonodromyQuadruple:
    """(Psi, Phi, can, var) over an exact field; can is b x a, var is a x b."""

    field: object
    dim_psi: int
    dim_phi: int
    can: linalg.Matrix
    var: linalg.Matrix

    def __post_init__(self):
        if not linalg.shape_ok(self.can, self.dim_phi, self.dim_psi):
            raise LebettiError("can must be a (dim_phi x dim_psi) matrix")
        if not linalg.shape_ok(self.var, self.dim_psi, self.dim_phi):
            raise LebettiError("var must be a (dim_psi x dim_phi) matrix")

    def var_can(self) -> linalg.Matrix:
        """The composite var o can on Psi; literally the map id - T."""
        return linalg.matmul(self.var, self.can, self.field)

    def monodromy(self) -> linalg.Matrix:
        """T = id - var o can, derived lazily."""
        return linalg.sub(
            linalg.identity(self.dim_psi, self.field), self.var_can(), self.field
        )


@dataclass(frozen=True)
class SelfDualWitness:
    """Nondegenerate pairings on Psi and Phi making var the adjoint of can."""

    pairing_psi: linalg.Matrix
    pairing_phi: linalg.Matrix


@dataclass(frozen=True)
class RankData:
    dim_psi: int
    dim_phi: int
    rank_can: int
    ker_can: int
    coker_can: int
    rank_var: int
    ker_var: int
    coker_var: int
    im_var_can: int  # equals dim im(id - T) by definition of T


def rank_data(Q: MonodromyQuadruple) -> RankData:
    """Exact kernel/image/cokernel dimensions of can, var, and var o can."""
    f = Q.field
    rc = linalg.rank(Q.can, f)
    rv = linalg.rank(Q.var, f)
    rvc = linalg.rank(Q.var_can(), f)
    return RankData(
        dim_psi=Q.dim_psi,
        dim_phi=Q.dim_phi,
        rank_can=rc,
        ker_can=Q.dim_psi - rc,
        coker_can=Q.dim_phi - rc,
        rank_var=rv,
        ker_var=Q.dim_phi - rv,
        coker_var=Q.dim_psi - rv,
        im_var_can=rvc,
    )


def sandwich_bound(Q: MonodromyQuadruple) -> tuple[Fraction, int, int]:
    """(exact lower bound, upper bound, dim coker can) for a quadruple with
    dim coker(can) = dim ker(var); the inequality lower <= coker <= upper is
    asserted before returning."""
    data = rank_data(Q)
    if data.coker_can != data.ker_var:
        raise DualityHypothesisError(
            f"dim coker(can) = {data.coker_can} != dim ker(var) = {data.ker_var}"
        )
    b = data.dim_phi
    r = data.im_var_can
    lower = Fraction(b - r, 2)
    upper = b - r
    coker = data.coker_can
    if not (lower <= coker <= upper):
        raise LebettiError(
            f"sandwich inequality violated: {lower} <= {coker} <= {upper}"
        )
    return lower, upper, coker


def betti_from_quadruple(Q: MonodromyQuadruple,
                         witness: SelfDualWitness | None) -> int:
    """dim coker(can), the modeled top reduced betti number; requires a
    verified self-duality witness."""
    if witness is None:
        raise DualityHypothesisError("missing self-duality witness")
    if not verify_witness(Q, witness):
        raise DualityHypothesisError("witness fails the adjunction identity")
    data = rank_data(Q)
    return data.coker_can


def verify_witness(Q: MonodromyQuadruple, witness: SelfDualWitness) -> bool:
    """Check nondegeneracy of both pairings and can^T G_phi == G_psi var."""
    f = Q.field
    if linalg.invert(witness.pairing_psi, f) is None:
        return False
    if linalg.invert(witness.pairing_phi, f) is None:
        return False
    lhs = linalg.matmul(linalg.transpose(Q.can), witness.pairing_phi, f)
    rhs = linalg.matmul(witness.pairing_psi, Q.var, f)
    lhs_entries = [v for row in lhs for v in row]
    rhs_entries = [v for row in rhs for v in row]
    if not lhs_entries and not rhs_entries:  # both empty maps
        return True
    return lhs == rhs


def _random_matrix(rng: random.Random, rows: int, cols: int, field) -> linalg.Matrix:
    if field.char:
        return tuple(
            tuple(field.from_int(rng.randrange(field.char)) for _ in range(cols))
            for _ in range(rows)
        )
    return tuple(
        tuple(field.from_int(rng.randint(-_ENTRY_BOX, _ENTRY_BOX)) for _ in range(cols))
        for _ in range(rows)
    )


def self_dual(seed: int, dims: tuple[int, int], field=QQ):
    """Deterministic random self-dual quadruple: (quadruple, witness)."""
    a, b = dims
    if a < 0 or b < 0:
        raise LebettiError("dimensions must be nonnegative")
    rng = random.Random(f"self_dual:{seed}:{a}:{b}:{field.name}")
    g_psi = _nondegenerate(rng, a, field)
    g_phi = _nondegenerate(rng, b, field)
    can = _random_matrix(rng, b, a, field)
    g_psi_inv = linalg.invert(g_psi, field)
    var = linalg.matmul(
        linalg.matmul(g_psi_inv, linalg.transpose(can), field), g_phi, field
    )
    quadruple = MonodromyQuadruple(field, a, b, can, var)
    witness = SelfDualWitness(g_psi, g_phi)
    return quadruple, witness


def _nondegenerate(rng: random.Random, n: int, field) -> linalg.Matrix:
    for _ in range(_PAIRING_RETRIES):
        candidate = _random_matrix(rng, n, n, field)
        if linalg.invert(candidate, field) is not None:
            return candidate
    raise LebettiError(f"could not draw a nondegenerate {n}x{n} pairing")


@dataclass
class TrialReport:
    trials: int
    failures: list[str]

    @property
    def passed(self) -> int:
        return self.trials - len(self.failures)

    def all_passed(self) -> bool:
        return not self.failures


def sandwich_trials(trials: int, seed: int, field=QQ, max_dim: int = 6) -> TrialReport:
    """Run seeded self-dual quadruple trials; each must satisfy the duality
    dimension identity and the sandwich inequality."""
    rng = random.Random(f"trials:{seed}:{field.name}")
    failures: list[str] = []
    for t in range(trials):
        dims = (rng.randint(0, max_dim), rng.randint(0, max_dim))
        quadruple, witness = self_dual(rng.randrange(2**30), dims, field)
        try:
            data = rank_data(quadruple)
            if data.coker_can != data.ker_var:
                raise DualityHypothesisError("coker/ker dimension mismatch")
            sandwich_bound(quadruple)
            if not verify_witness(quadruple, witness):
                raise DualityHypothesisError("witness verification failed")
        except LebettiError as exc:
            failures.append(f"trial {t} dims {dims}: {exc}")
    return TrialReport(trials, failures)
