"""Arithmetic checkers tying Le numbers to Milnor-fiber betti numbers.

The top betti number is sandwiched by the zero-dimensional Le number and the
dimension of the image of id - T on the nearby-cycle space:

    (lambda0 - imdim) / 2  <=  b_n  <=  lambda0 - imdim,

equivalently  lambda0 - 2 b_n <= imdim <= lambda0 - b_n.  The image dimension
is NOT computable from f by this library; it is an input channel (corpus
annotation or back-solved from a known betti number) and every report labels
it "supplied".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from . import linalg
from .errors import LebettiError
from .fields import QQ

PASS = "pass"
FAIL = "fail"
NOT_EVALUATED = "not evaluated"


@dataclass(frozen=True)
class Verdict:
    name: str
    status: str
    detail: str = ""

    def ok(self) -> bool:
        return self.status != FAIL


@dataclass(frozen=True)
class Window:
    """An inclusive integer window; exact_lower keeps the unrounded bound."""

    lower: int
    upper: int
    exact_lower: Fraction

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def is_point(self) -> bool:
        return self.lower == self.upper


def main_theorem_bounds(lambda0: int, imdim: int) -> Window:
    """Window for the top betti number given lambda0 and dim im(id - T)."""
    if lambda0 < 0:
        raise LebettiError("lambda0 must be nonnegative")
    if not 0 <= imdim <= lambda0:
        raise LebettiError(f"imdim {imdim} outside [0, {lambda0}]")
    exact = Fraction(lambda0 - imdim, 2)
    return Window(ceil(exact), lambda0 - imdim, exact)


def monodromy_image_window(lambda0: int, betti_n: int) -> Window:
    """Window for dim im(id - T) given lambda0 and the top betti number."""
    if lambda0 < 0:
        raise LebettiError("lambda0 must be nonnegative")
    if not 0 <= betti_n <= lambda0:
        raise LebettiError(f"betti {betti_n} outside [0, {lambda0}]")
    lower = max(0, lambda0 - 2 * betti_n)
    return Window(lower, lambda0 - betti_n, Fraction(lower))


@dataclass(frozen=True)
class OneDimComponent:
    """One component of a 1-dimensional critical locus: its multiplicity,
    generic transverse Milnor number, and (optionally) the internal vertical
    monodromy on the transversal vanishing cohomology."""

    mult: int
    transverse_milnor: int
    internal_monodromy: linalg.Matrix | None = None

    def validate(self, coeff_field) -> None:
        if self.mult < 1:
            raise LebettiError("component multiplicity must be >= 1")
        if self.transverse_milnor < 0:
            raise LebettiError("transverse Milnor number must be >= 0")
        h = self.internal_monodromy
        if h is not None:
            size = self.transverse_milnor
            if linalg.shape(h) != (size, size):
                raise LebettiError("internal monodromy has the wrong size")
            if size and linalg.invert(h, coeff_field) is None:
                raise LebettiError("internal monodromy must be invertible")


def one_dim_relations(lambda0: int, lambda1: int, components,
                      betti_nm1: int | None = None, betti_n: int | None = None,
                      coeff_field=QQ) -> list[Verdict]:
    """Checks for a 1-dimensional critical locus: the transversal sum formula
    for lambda1, the Siersma kernel bound, and the betti difference identity.
    Missing inputs downgrade a check to 'not evaluated'."""
    components = list(components)
    if not components:
        raise LebettiError("no components supplied")
    for comp in components:
        comp.validate(coeff_field)
    verdicts: list[Verdict] = []

    weighted = sum(c.mult * c.transverse_milnor for c in components)
    verdicts.append(
        Verdict(
            "lambda1_transversal_sum",
            PASS if weighted == lambda1 else FAIL,
            f"sum mult*transverse_milnor = {weighted}, lambda1 = {lambda1}",
        )
    )

    if all(c.internal_monodromy is not None for c in components):
        kernel_total = 0
        for c in components:
            h = c.internal_monodromy
            size = c.transverse_milnor
            id_minus_h = linalg.sub(linalg.identity(size, coeff_field), h, coeff_field)
            kernel_total += linalg.kernel_dim(id_minus_h, coeff_field)
        if betti_nm1 is None:
            verdicts.append(
                Verdict(
                    "siersma_kernel_bound",
                    NOT_EVALUATED,
                    f"kernel bound is {kernel_total}; no betti_{{n-1}} supplied",
                )
            )
        else:
            verdicts.append(
                Verdict(
                    "siersma_kernel_bound",
                    PASS if betti_nm1 <= kernel_total else FAIL,
                    f"betti_{{n-1}} = {betti_nm1} vs sum dim ker(id - h) = {kernel_total}",
                )
            )
    else:
        verdicts.append(
            Verdict("siersma_kernel_bound", NOT_EVALUATED, "internal monodromy missing")
        )

    if betti_nm1 is not None:
        verdicts.append(
            Verdict(
                "betti_nm1_le_lambda1",
                PASS if betti_nm1 <= lambda1 else FAIL,
                f"{betti_nm1} <= {lambda1}",
            )
        )
    if betti_n is not None:
        verdicts.append(
            Verdict(
                "betti_n_le_lambda0",
                PASS if betti_n <= lambda0 else FAIL,
                f"{betti_n} <= {lambda0}",
            )
        )
    if betti_nm1 is not None and betti_n is not None:
        lhs = betti_n - betti_nm1
        rhs = lambda0 - lambda1
        verdicts.append(
            Verdict(
                "betti_difference_identity",
                PASS if lhs == rhs else FAIL,
                f"betti_n - betti_{{n-1}} = {lhs}, lambda0 - lambda1 = {rhs}",
            )
        )
    else:
        verdicts.append(
            Verdict("betti_difference_identity", NOT_EVALUATED, "betti numbers missing")
        )
    return verdicts


def chain_complex_constraints(lambdas, bettis) -> list[Verdict]:
    """For aligned lists (lambda_k)_k and (betti_{n-k})_k: each betti is
    bounded by the matching Le number and the alternating sums agree."""
    lambdas = list(lambdas)
    bettis = list(bettis)
    if len(lambdas) != len(bettis):
        raise LebettiError("lambda and betti lists are not aligned")
    verdicts: list[Verdict] = []
    ok = True
    for k, (lam, bet) in enumerate(zip(lambdas, bettis)):
        if bet > lam:
            ok = False
            verdicts.append(
                Verdict(f"betti_le_lambda_{k}", FAIL, f"betti {bet} > lambda^{k} = {lam}")
            )
    if ok:
        verdicts.append(Verdict("betti_le_lambda", PASS, "all positions bounded"))
    alt_lam = sum((-1) ** k * lam for k, lam in enumerate(lambdas))
    alt_bet = sum((-1) ** k * bet for k, bet in enumerate(bettis))
    verdicts.append(
        Verdict(
            "alternating_sum_identity",
            PASS if alt_lam == alt_bet else FAIL,
            f"sum (-1)^k lambda^k = {alt_lam}, sum (-1)^k betti = {alt_bet}",
        )
    )
    return verdicts


@dataclass
class BoundReport:
    """Aggregated verdicts for one singularity's numeric data."""

    lambdas: tuple[int, ...]
    n: int
    imdim: int | None = None
    imdim_source: str = "supplied"
    betti_window: Window | None = None
    imdim_window: Window | None = None
    verdicts: list[Verdict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def all_ok(self) -> bool:
        return all(v.ok() for v in self.verdicts)


def build_report(lambdas, n: int, imdim: int | None = None,
                 bettis=None, one_dim=None, coeff_field=QQ) -> BoundReport:
    """Cross-check every relation whose inputs are present.

    bettis, when given, lists (betti_n, betti_{n-1}, ..., betti_{n-s}) aligned
    with lambdas = (lambda^0, ..., lambda^s).  imdim is always treated as
    supplied data, never computed.
    """
    lambdas = tuple(lambdas)
    report = BoundReport(lambdas=lambdas, n=n, imdim=imdim)
    if not lambdas:
        report.notes.append("no Le numbers: nothing to check")
        return report
    lambda0 = lambdas[0]
    betti_n = bettis[0] if bettis else None

    if imdim is not None:
        report.betti_window = main_theorem_bounds(lambda0, imdim)
        report.notes.append("imdim is supplied, not computed")
        if betti_n is not None:
            inside = report.betti_window.contains(betti_n)
            report.verdicts.append(
                Verdict(
                    "betti_in_main_theorem_window",
                    PASS if inside else FAIL,
                    f"betti_n = {betti_n} vs window "
                    f"[{report.betti_window.lower}, {report.betti_window.upper}]",
                )
            )
    if betti_n is not None:
        report.imdim_window = monodromy_image_window(lambda0, betti_n)
        if imdim is not None:
            inside = report.imdim_window.contains(imdim)
            report.verdicts.append(
                Verdict(
                    "imdim_in_image_window",
                    PASS if inside else FAIL,
                    f"imdim = {imdim} vs window "
                    f"[{report.imdim_window.lower}, {report.imdim_window.upper}]",
                )
            )
    if bettis is not None:
        report.verdicts.extend(chain_complex_constraints(lambdas, bettis))
    if one_dim is not None:
        if len(lambdas) < 2:
            raise LebettiError("one-dimensional data needs lambda^1")
        betti_nm1 = bettis[1] if bettis and len(bettis) > 1 else None
        report.verdicts.extend(
            one_dim_relations(
                lambda0, lambdas[1], one_dim, betti_nm1, betti_n, coeff_field
            )
        )
    return report
