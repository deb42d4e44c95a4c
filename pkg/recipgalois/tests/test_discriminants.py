# External imports
import itertools

import pytest
from sympy import symbols

# Module to test
from ..discriminants import (disc_f_via_g, SplittingType, INFINITY,
                             splitting_types, splitting_type_mod_p,
                             index_valuation_check, count_pointed_high_index,
                             radical_and_square_multiple, double_disc_R,
                             fzn_R_factored, fzn_R_identity_check,
                             p_reasons_derivative_check)
from ..polynomials import IntPoly, SymPair, discriminant
from ..utils import ShapeError, DomainError


@pytest.fixture
def small_gs():
    """All g of degree exactly n <= 3 with coefficients in [-2, 2]."""
    out = []
    for n in (1, 2, 3):
        for b in itertools.product(range(-2, 3), repeat=n + 1):
            if b[-1] != 0:
                out.append(IntPoly(b))
    return out


class TestDiscFViaG(object):

    def test_examples(self):
        assert disc_f_via_g(SymPair.from_g(IntPoly([-2, 0, 1]))) == 256
        assert discriminant(IntPoly([1, 0, 0, 0, 1])) == 256
        assert disc_f_via_g(SymPair.from_g(IntPoly([0, 1]))) == -4
        assert disc_f_via_g(SymPair.from_g(IntPoly([1, -2, 1]))) == 0

    def test_identity(self, small_gs):
        for g in small_gs:
            pair = SymPair.from_g(g)
            assert disc_f_via_g(pair) == discriminant(pair.f)

    def test_degenerate(self):
        with pytest.raises(ShapeError):
            disc_f_via_g(SymPair.from_g(IntPoly([1, 2]), n=2))


class TestSplittingType(object):

    def test_parse(self):
        sigma = SplittingType.parse("1^2,1")
        assert sigma == SplittingType([(1, 1), (1, 2)])
        assert sigma.degree == 3
        assert sigma.index == 1
        assert str(sigma) == "1,1^2"

    def test_aut(self):
        assert SplittingType.parse("1,1").aut_count() == 2
        assert SplittingType.parse("2").aut_count() == 2
        assert SplittingType.parse("1^2").aut_count() == 1
        assert SplittingType.parse("2,1,1").aut_count() == 4
        assert SplittingType.parse("2,2").aut_count() == 8

    def test_marked(self):
        sigma = SplittingType.parse("*1^2,1@2")
        assert sigma.marked == 2
        assert sigma.case == "b"
        assert sigma.j == 1
        assert sigma.aut_prime_count() == 1
        assert sigma.aut_count_j() == 1
        assert sigma.without_marked() == SplittingType.parse("1")
        assert str(sigma) == "*1^2,1@2"

    def test_marked_errors(self):
        with pytest.raises(ShapeError):
            SplittingType([(2, 1)], marked=1)
        with pytest.raises(ShapeError):
            SplittingType([(1, 1)], annotation="plus2")
        with pytest.raises(ShapeError):
            SplittingType.parse("1,1").aut_prime_count()

    def test_enumeration(self):
        assert len(splitting_types(2)) == 4
        assert len(splitting_types(2, max_index=0)) == 3
        assert len(splitting_types(3)) == 9
        for sigma in splitting_types(4, max_index=2):
            assert sigma.index <= 2


class TestSplittingTypeModP(object):

    def test_examples(self):
        sigma = splitting_type_mod_p(IntPoly([0, 0, 1, 1]), 5)
        assert sigma == SplittingType.parse("1^2,1")
        assert sigma.index == 1
        sigma = splitting_type_mod_p(IntPoly([1, 0, 1]), 3)
        assert sigma == SplittingType.parse("2")
        assert splitting_type_mod_p(IntPoly([7, 0, 7]), 7) is INFINITY

    def test_root_at_infinity(self):
        # 5x + 1 as a quadratic form mod 5 is y^2 times a unit
        sigma = splitting_type_mod_p(IntPoly([1, 5, 5]), 5, degree=2)
        assert sigma == SplittingType.parse("1^2")

    def test_degree_matches(self, small_gs):
        for g in small_gs:
            for p in (3, 5, 7):
                if g.leading % p == 0:
                    continue
                sigma = splitting_type_mod_p(g, p)
                assert sigma.degree == g.degree

    def test_not_prime(self):
        with pytest.raises(DomainError):
            splitting_type_mod_p(IntPoly([1, 1]), 9)


class TestIndexValuation(object):

    def test_examples(self):
        rep = index_valuation_check(IntPoly([-5, 0, 1]), 5)
        assert rep.holds and rep.index == 1 and rep.valuation == 1
        rep = index_valuation_check(IntPoly([1, 0, 1]), 7)
        assert rep.holds and rep.index == 0 and rep.valuation == 0
        g = IntPoly([-1, 1]) * IntPoly([-8, 1]) * IntPoly([3, 1])
        rep = index_valuation_check(g, 7)
        assert rep.holds and rep.index == 1 and rep.valuation == 2

    def test_skip(self):
        assert index_valuation_check(IntPoly([1, 1, 1]), 2).status == "skip"
        assert index_valuation_check(IntPoly([1, -2, 1]), 5).status == "skip"
        assert index_valuation_check(IntPoly([7, 7, 7]), 7).status == "skip"

    def test_box(self, small_gs):
        for g in small_gs:
            for p in (5, 7):
                rep = index_valuation_check(g, p)
                assert rep.holds is not False

    def test_pointed_count(self):
        assert count_pointed_high_index(3, 3, 0) == 27
        assert count_pointed_high_index(3, 3, 1) == 15
        assert count_pointed_high_index(3, 3, 3) == 1


class TestSieveParams(object):

    def test_examples(self):
        par = radical_and_square_multiple(12)
        assert (par.C, par.D_prime) == (6, 6)
        par = radical_and_square_multiple(1)
        assert (par.C, par.D_prime) == (1, 1)
        par = radical_and_square_multiple(8)
        assert (par.C, par.D_prime) == (2, 4)

    def test_beyond_trial_division(self):
        D = 1000003 * 1000033
        par = radical_and_square_multiple(D, trial_bound=100)
        assert par.C == D
        assert par.D_prime == D
        par = radical_and_square_multiple(1000003 ** 3, trial_bound=100)
        assert par.C == 1000003
        assert par.D_prime == 1000003 ** 2

    def test_square_multiple(self):
        for D in range(1, 200):
            par = radical_and_square_multiple(D)
            assert (par.D_prime ** 2) % D == 0

    def test_bad_input(self):
        with pytest.raises(DomainError):
            radical_and_square_multiple(0)


class TestDoubleDiscriminant(object):

    def test_identity(self):
        for n in (2, 3, 4):
            for b in itertools.product(range(-2, 3), repeat=n):
                assert fzn_R_identity_check(b, n)

    def test_nonzero(self):
        assert double_disc_R((1, 0, 1), 3) != 0
        assert double_disc_R((1, 1), 2) == fzn_R_factored((1, 1), 2)

    def test_vanishing(self):
        # g(2) = g(-2) when g has only even powers
        assert double_disc_R((0, 1), 2) == 0
        # b_n = 0
        assert double_disc_R((1, 0), 2) == 0

    def test_shape(self):
        with pytest.raises(ShapeError):
            double_disc_R((1,), 1)
        with pytest.raises(ShapeError):
            double_disc_R((1, 1, 1), 2)


class TestPReasons(object):

    def test_examples(self):
        x1, x2 = symbols("x1 x2")
        assert p_reasons_derivative_check(x1 ** 2, (0,), 3)
        assert p_reasons_derivative_check(x1 * x2, (3, 3), 3,
                                          variables=(x1, x2))
        assert p_reasons_derivative_check(x1, (9,), 3)

    def test_black_box(self):
        h = lambda a, b: a * b * b
        dh = lambda a, b: 2 * a * b
        assert p_reasons_derivative_check(h, (0, 0), 5, derivative=dh)

    def test_bad_prime(self):
        x1 = symbols("x1")
        with pytest.raises(DomainError):
            p_reasons_derivative_check(x1, (0,), 2)
