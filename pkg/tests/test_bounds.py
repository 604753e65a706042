"""Betti / monodromy-image windows and the one-dimensional relations."""

import pytest
from fractions import Fraction

from lebetti import linalg
from lebetti.bounds import (
    FAIL,
    NOT_EVALUATED,
    PASS,
    OneDimComponent,
    build_report,
    chain_complex_constraints,
    main_theorem_bounds,
    monodromy_image_window,
    one_dim_relations,
)
from lebetti.errors import LebettiError
from lebetti.fields import QQ


def statuses(verdicts):
    return {v.name: v.status for v in verdicts}


class TestMainTheoremBounds:
    def test_flagship_forced_zero(self):
        w = main_theorem_bounds(4, 4)
        assert (w.lower, w.upper) == (0, 0)
        assert w.is_point()

    def test_trivial(self):
        w = main_theorem_bounds(0, 0)
        assert (w.lower, w.upper) == (0, 0)

    def test_trivial_monodromy_case(self):
        w = main_theorem_bounds(5, 0)
        assert w.exact_lower == Fraction(5, 2)
        assert (w.lower, w.upper) == (3, 5)

    def test_inconsistent_rejected(self):
        with pytest.raises(LebettiError):
            main_theorem_bounds(3, 4)
        with pytest.raises(LebettiError):
            main_theorem_bounds(3, -1)


class TestImageWindow:
    def test_flagship(self):
        w = monodromy_image_window(4, 0)
        assert (w.lower, w.upper) == (4, 4)

    def test_zero(self):
        w = monodromy_image_window(0, 0)
        assert (w.lower, w.upper) == (0, 0)

    def test_direct_arithmetic(self):
        w = monodromy_image_window(6, 2)
        assert (w.lower, w.upper) == (2, 4)

    def test_clamped_at_zero(self):
        w = monodromy_image_window(2, 2)
        assert (w.lower, w.upper) == (0, 0)

    def test_betti_above_lambda_rejected(self):
        with pytest.raises(LebettiError):
            monodromy_image_window(2, 3)


class TestMutualConsistency:
    def test_exhaustive_to_thirty(self):
        for lambda0 in range(31):
            for imdim in range(lambda0 + 1):
                betti_window = main_theorem_bounds(lambda0, imdim)
                for betti in range(betti_window.lower, betti_window.upper + 1):
                    image_window = monodromy_image_window(lambda0, betti)
                    assert image_window.contains(imdim)
                # a point window iff lambda0 - imdim <= 1; degenerate to {0}
                # exactly when imdim == lambda0
                assert betti_window.is_point() == (lambda0 - imdim <= 1)
                assert ((betti_window.lower, betti_window.upper) == (0, 0)) == (
                    imdim == lambda0
                )

    def test_outside_window_inconsistent(self):
        # betti outside the window never back-solves to contain imdim
        for lambda0 in range(12):
            for imdim in range(lambda0 + 1):
                w = main_theorem_bounds(lambda0, imdim)
                for betti in range(lambda0 + 1):
                    if w.contains(betti):
                        continue
                    assert not monodromy_image_window(lambda0, betti).contains(imdim)


class TestOneDimRelations:
    def test_double_line_pattern(self):
        comp = OneDimComponent(1, 1, linalg.identity(1, QQ))
        verdicts = statuses(
            one_dim_relations(0, 1, [comp], betti_nm1=1, betti_n=0)
        )
        assert verdicts["lambda1_transversal_sum"] == PASS
        assert verdicts["siersma_kernel_bound"] == PASS
        assert verdicts["betti_difference_identity"] == PASS

    def test_no_unit_eigenvalue_forces_zero(self):
        h = linalg.from_rows([[-1]], QQ)
        comp = OneDimComponent(1, 1, h)
        ok = statuses(one_dim_relations(2, 1, [comp], betti_nm1=0, betti_n=1))
        assert ok["siersma_kernel_bound"] == PASS
        # betti_{n-1} = 1 would violate the kernel bound
        bad = statuses(one_dim_relations(2, 1, [comp], betti_nm1=1, betti_n=2))
        assert bad["siersma_kernel_bound"] == FAIL

    def test_wrong_lambda1_fails(self):
        comp = OneDimComponent(2, 3)
        verdicts = statuses(one_dim_relations(5, 99, [comp]))
        assert verdicts["lambda1_transversal_sum"] == FAIL

    def test_missing_inputs_not_evaluated(self):
        comp = OneDimComponent(1, 1)
        verdicts = statuses(one_dim_relations(0, 1, [comp]))
        assert verdicts["siersma_kernel_bound"] == NOT_EVALUATED
        assert verdicts["betti_difference_identity"] == NOT_EVALUATED

    def test_validation(self):
        with pytest.raises(LebettiError):
            one_dim_relations(0, 0, [])
        with pytest.raises(LebettiError):
            OneDimComponent(0, 1).validate(QQ)
        with pytest.raises(LebettiError):
            OneDimComponent(1, 2, linalg.identity(1, QQ)).validate(QQ)
        with pytest.raises(LebettiError):
            OneDimComponent(1, 1, linalg.zeros(1, 1, QQ)).validate(QQ)


class TestChainComplex:
    def test_flagship(self):
        verdicts = statuses(chain_complex_constraints([4, 6, 1], [0, 1, 0]))
        assert verdicts["betti_le_lambda"] == PASS
        assert verdicts["alternating_sum_identity"] == PASS

    def test_all_zero(self):
        verdicts = statuses(chain_complex_constraints([0], [0]))
        assert all(s == PASS for s in verdicts.values())

    def test_double_line(self):
        verdicts = statuses(chain_complex_constraints([0, 1], [0, 1]))
        assert all(s == PASS for s in verdicts.values())

    def test_violations_flagged(self):
        verdicts = statuses(chain_complex_constraints([1, 0], [2, 0]))
        assert verdicts["betti_le_lambda_0"] == FAIL
        verdicts = statuses(chain_complex_constraints([2, 1], [0, 0]))
        assert verdicts["alternating_sum_identity"] == FAIL

    def test_misaligned_rejected(self):
        with pytest.raises(LebettiError):
            chain_complex_constraints([1, 2], [0])


class TestBuildReport:
    def test_flagship_report(self):
        report = build_report((4, 6, 1), n=3, imdim=4, bettis=(0, 1, 0))
        assert report.all_ok()
        assert (report.betti_window.lower, report.betti_window.upper) == (0, 0)
        assert (report.imdim_window.lower, report.imdim_window.upper) == (4, 4)
        assert "imdim is supplied, not computed" in report.notes

    def test_isolated_report(self):
        report = build_report((9,), n=1, imdim=0, bettis=(9,))
        assert report.all_ok()

    def test_inconsistent_report_fails(self):
        report = build_report((4,), n=1, imdim=4, bettis=(2,))
        assert not report.all_ok()
