# External imports
import cmath
from fractions import Fraction

import pytest
import numpy as np
from sympy import Matrix

# Module to test
from ..forms import (BinaryFormModP, irreducible_forms, w_value,
                     w_pointed_value, w_monic_value, forms_array)
from ..transform import (CharacterSum, fourier_full, fourier_reports,
                         double_transform_check)
from ..lattices import lattice_Lp, lambda_delta_split
from ..poisson import twisted_poisson_check
from ...config import Config
from ...discriminants import SplittingType, splitting_type_mod_p
from ...polynomials import IntPoly
from ...utils import ShapeError, ResourceError, DomainError


def sigma(text):
    return SplittingType.parse(text)


def all_forms(p, n):
    return [BinaryFormModP.from_index(p, n, i) for i in range(p ** (n + 1))]


class TestForms(object):

    def test_form_arithmetic(self):
        x, y = BinaryFormModP(3, [0, 1]), BinaryFormModP(3, [1, 0])
        assert (x * y).coeffs == (0, 1, 0)
        assert y.divides(x * y)
        assert not y.divides(x * x)
        assert BinaryFormModP.from_index(3, 2, 5).flat_index == 5

    def test_irreducible_counts(self):
        assert len(irreducible_forms(3, 1)) == 4
        assert len(irreducible_forms(3, 1, exclude_y=True)) == 3
        # (p^2 - p) / 2 monic irreducible quadratics
        assert len(irreducible_forms(5, 2)) == 10

    def test_w_examples(self):
        assert w_value(3, sigma("1^2"), [0, 0, 1]) == 1
        assert w_value(3, sigma("2"), [1, 0, 1]) == 1
        assert w_value(3, sigma("1^2"), [0, 0, 0]) == 4

    def test_w_at_zero(self):
        for text in ["1", "1,1", "1^2", "2", "1^3"]:
            assert w_value(5, sigma(text), [0, 0, 0, 0]) >= 1

    def test_w_on_own_type(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            F = rng.integers(0, 5, size=4).tolist()
            if not any(F):
                continue
            own = splitting_type_mod_p(IntPoly(F), 5, degree=3)
            assert w_value(5, own, F) >= 1

    def test_pointed(self):
        s = sigma("*1^2,1")
        assert w_pointed_value(5, s, [0, 0, 0, 1]) == 0
        assert w_pointed_value(5, s, [0, 1, 0, 0]) == 1
        assert w_pointed_value(5, s, [0, 0, 0, 0]) == 5
        with pytest.raises(ShapeError):
            w_pointed_value(5, sigma("1^2,1"), [0, 0, 0, 0])

    def test_degree_check(self):
        with pytest.raises(ShapeError):
            w_value(3, sigma("1,1,1"), [0, 0, 1])

    def test_table_matches_pointwise(self):
        weights = forms_array(3, sigma("1,1"), 2)
        for F in all_forms(3, 2):
            assert weights[F.flat_index] == w_value(3, sigma("1,1"), F)
        weights = forms_array(3, sigma("*1,1"), 2)
        for F in all_forms(3, 2):
            assert weights[F.flat_index] == w_pointed_value(3, sigma("*1,1"), F)

    def test_monic_table_matches_pointwise(self):
        weights = forms_array(3, sigma("1,1"), 3, pointed=False, monic=True)
        for index in range(27):
            low = [(index // 3 ** i) % 3 for i in range(3)]
            assert weights[index] == w_monic_value(3, sigma("1,1"), low + [1])

    def test_budget(self):
        with pytest.raises(ResourceError):
            forms_array(7, sigma("1"), 8, transform_budget=1000)


class TestCharacterSum(object):

    def test_rational(self):
        value = CharacterSum.from_counts(3, [4, 1, 1], 9)
        assert value.is_rational
        assert value == Fraction(1, 3)

    def test_zeta(self):
        zeta = CharacterSum.from_counts(3, [0, 1, 0])
        assert not zeta.is_rational
        assert abs(complex(zeta) - cmath.exp(2j * cmath.pi / 3)) < 1e-12


class TestTransform(object):

    def test_aut(self):
        assert sigma("1,1").aut_count() == 2

    def test_linear(self):
        t = fourier_full(5, sigma("1"))
        assert t.zero_value == Fraction(6, 5)
        report = t.report()
        assert report.zero_constant == pytest.approx(1.0)
        assert report.off_constant == pytest.approx(1.0)

    def test_two_lines(self):
        report = fourier_full(3, sigma("1,1")).report()
        assert report.zero_value == Fraction(2, 3)
        assert report.main_term == Fraction(1, 2)
        assert report.envelope_constant <= 4

    def test_double_root(self):
        report = fourier_full(5, sigma("1^2")).report()
        assert report.zero_value == Fraction(6, 25)
        assert report.zero_constant == pytest.approx(1.0)
        assert report.envelope_constant <= 4

    def test_pointed_support(self):
        t = fourier_full(5, sigma("*1^2,1"), n=3)
        report = t.report()
        assert t.zero_value == Fraction(1, 25)
        assert report.zero_constant == 0
        assert report.off_constant == pytest.approx(1.0)
        # constant on the annihilator of the support
        assert abs(t[[0, 0, 2, 4]] - complex(t.zero_value)) < 1e-12

    def test_monic_middle_case(self):
        report = fourier_full(3, sigma("1,1"), monic=True).report()
        assert report.off_exponent == 0.5
        assert report.zero_value == Fraction(1, 3)
        assert report.envelope_constant <= 4

    def test_exact_matches_float(self):
        t = fourier_full(3, sigma("1,2"), n=3)
        for g in ([0, 0, 0, 0], [1, 0, 2, 0], [2, 2, 1, 1]):
            assert abs(complex(t.exact(g)) - t[g]) < 1e-9
        assert t.exact([0, 0, 0, 0]).is_rational

    def test_double_transform(self):
        t = fourier_full(5, sigma("1,1"))
        assert double_transform_check(t.weights, 5, t.dim) < 1e-8

    def test_reports(self):
        jobs = [(3, sigma("1"), 2, False, False),
                (3, sigma("*1"), 2, True, False)]
        reports = fourier_reports(jobs, Config(workers=1))
        assert [r.pointed for r in reports] == [False, True]
        assert reports[1].zero_value == Fraction(1, 3)


class TestLattices(object):

    def test_case_a(self):
        lattice = lattice_Lp(3, "a", 0, 2)
        assert lattice.index == 1
        assert lattice.mask().all()

    def test_case_b(self):
        lattice = lattice_Lp(3, "b", 1, 2)
        assert lattice.index == 3
        assert lattice.contains([1, 1, 0])
        assert not lattice.contains([1, 0, 0])
        assert lattice.mask().sum() == 9

    def test_case_c(self):
        lattice = lattice_Lp(5, "c", 2, 3)
        assert lattice.index == 25
        # (u + 2)^2
        assert lattice.contains([4, 4, 1, 0])
        assert abs(Matrix(lattice.basis).det()) == 25

    def test_dual_basis(self):
        lattice = lattice_Lp(5, "c", 2, 3)
        for i, row in enumerate(lattice.basis):
            for j, dual in enumerate(lattice.dual_basis):
                dot = sum(a * b for a, b in zip(row, dual))
                assert dot == (1 if i == j else 0)

    def test_bad_multiplicity(self):
        with pytest.raises(ShapeError):
            lattice_Lp(3, "b", 0, 2)


class TestDeltaSplit(object):

    def test_pure_lattice(self):
        split = lambda_delta_split(3, sigma("*1^2@2"))
        assert split.a_p == 1
        assert split.lattice.index == 9
        assert split.delta_max < 1e-12

    @pytest.mark.parametrize("p, text", [
        (3, "1,1"),
        (5, "*1,1@-2"),
        (3, "*1^2,1@2"),
    ])
    def test_bounds(self, p, text):
        split = lambda_delta_split(p, sigma(text))
        assert split.a_p <= 1
        assert split.a_hat <= Fraction(1, p ** (2 * split.k_p))
        assert np.isfinite(split.delta_constant)

    def test_transport_keeps_mass(self):
        split = lambda_delta_split(5, sigma("*1,1@-2"))
        assert split.psi_zero == fourier_full(5, sigma("*1,1"), n=2).zero_value

    def test_marked_without_case(self):
        with pytest.raises(ShapeError):
            lambda_delta_split(3, sigma("*1,1"))


class TestPoisson(object):

    def test_classical(self):
        check = twisted_poisson_check(np.eye(2, dtype=int), 1, np.ones((1, 1)))
        assert check.residual <= 1e-9

    def test_twist_in_one_dimension(self):
        check = twisted_poisson_check([[2]], 3, [0.0, 1.0, 0.0], width=3.0)
        assert check.residual <= 1e-9
        assert abs(check.lhs) > 0.1

    def test_index_four(self):
        rng = np.random.default_rng(11)
        psi = rng.random((5, 5))
        check = twisted_poisson_check([[2, 1], [0, 2]], 5, psi, width=2.0)
        assert check.index == 4
        assert check.residual <= 1e-9

    def test_lattice_descriptor(self):
        lattice = lattice_Lp(3, "b", 1, 1)
        psi = np.arange(4.0).reshape(2, 2)
        check = twisted_poisson_check(lattice, 2, psi, width=1.5)
        assert check.residual <= 1e-9

    def test_not_coprime(self):
        with pytest.raises(DomainError):
            twisted_poisson_check([[2]], 4, [1.0] * 4)
