# External imports
import itertools
from fractions import Fraction

import pytest
import numpy as np

# Module to test
from ..wreath import (WreathElement, multiply, embed_2n, embed_3n, compose,
                      all_elements, random_element, perm_sign, group_order)
from ..subspaces import Subspace, invariant_subspaces, label
from ..cohomology import cocycle_space, is_cocycle
from ..subgroups import (overgroup_census, named_subgroup, conjugate,
                         cycle_type_distribution, closure, PREDICATES)
from ...utils import ShapeError, ResourceError


@pytest.fixture(scope="module")
def census4():
    return overgroup_census(4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def _summary(census):
    return [(d.tag, d.order) for d in census]


class TestWreathElement(object):

    def test_identity(self):
        e = WreathElement.identity(3)
        x = WreathElement((1, 0, 1), (2, 0, 1))
        assert e * x == x
        assert x * e == x

    def test_flip_order_two(self):
        a = WreathElement((1, 0), (0, 1))
        assert (a * a).is_identity()

    def test_law(self):
        a = WreathElement((1, 0), (1, 0))
        assert a * a == WreathElement((1, 1), (0, 1))

    def test_mismatch(self):
        with pytest.raises(ShapeError):
            multiply(WreathElement.identity(2), WreathElement.identity(3))
        with pytest.raises(ShapeError):
            WreathElement((0, 0), (0, 0))

    def test_axioms(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 7))
            a, b, c = (random_element(n, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert (a * a.inverse()).is_identity()
            assert (a.inverse() * a).is_identity()

    def test_order(self):
        assert group_order(3) == 48
        assert len(list(all_elements(3))) == 48


class TestEmbeddings(object):

    def test_identity(self):
        assert embed_2n(WreathElement.identity(3)) == tuple(range(6))
        assert embed_3n(WreathElement.identity(3)) == tuple(range(9))

    def test_single_flip(self):
        image = embed_2n(WreathElement((1, 0, 0), (0, 1, 2)))
        assert image == (1, 0, 2, 3, 4, 5)
        assert perm_sign(image) == -1

    def test_pair_swap(self):
        image = embed_3n(WreathElement((0, 0), (1, 0)))
        assert image == (2, 3, 0, 1, 5, 4)
        assert perm_sign(image) == -1

    def test_sign_laws(self):
        for n in (1, 2, 3, 4):
            for e in all_elements(n):
                assert perm_sign(embed_2n(e)) == (-1) ** e.weight
                assert perm_sign(embed_3n(e)) == (-1) ** e.weight * e.sign

    def test_homomorphism(self):
        for n in (1, 2, 3):
            elements = list(all_elements(n))
            images = set()
            for a in elements:
                images.add(embed_2n(a))
                for b in elements[::5]:
                    assert embed_2n(a * b) == compose(embed_2n(a), embed_2n(b))
                    assert embed_3n(a * b) == compose(embed_3n(a), embed_3n(b))
            assert len(images) == len(elements)


class TestSubspaces(object):

    def test_counts(self):
        assert len(invariant_subspaces(1)) == 2
        assert len(invariant_subspaces(2)) == 3
        for n in (3, 4, 5, 6):
            assert len(invariant_subspaces(n)) == 4

    def test_n3_dimensions(self):
        assert [s.dim for s in invariant_subspaces(3)] == [0, 1, 2, 3]
        assert [label(s) for s in invariant_subspaces(3)] == \
            ["0", "1", "1perp", "X"]

    def test_n2(self):
        spaces = invariant_subspaces(2)
        assert spaces[1].elements() == [0, 3]
        assert Subspace.ones(2) == Subspace.ones_perp(2)

    def test_even_containment(self):
        assert Subspace.ones(4).issubset(Subspace.ones_perp(4))
        assert not Subspace.ones(5).issubset(Subspace.ones_perp(5))

    def test_invariance(self):
        for s in invariant_subspaces(5):
            assert s.is_invariant()

    def test_reduce(self):
        K = Subspace(4, [0b0011, 0b0110])
        assert K.reduce(0b0101) == 0
        assert K.reduce(0b1000) == K.reduce(0b1011)


class TestCohomology(object):

    def test_sign_quotient(self):
        for n in (2, 3, 4, 5):
            assert cocycle_space(n, "X_mod_1perp") == (2, 2)

    def test_mod_ones(self):
        assert cocycle_space(3, "X_mod_1") == (4, 1)
        assert cocycle_space(5, "X_mod_1")[1] == 1

    def test_full_module(self):
        assert cocycle_space(3, "X") == (8, 2)
        assert cocycle_space(5, "X")[1] == 2

    def test_limits(self):
        with pytest.raises(ResourceError):
            cocycle_space(6, "X")
        with pytest.raises(ShapeError):
            cocycle_space(3, "Y")

    def test_is_cocycle(self):
        perms = list(itertools.permutations(range(3)))
        twisted = dict((p, 0b111 if perm_sign(p) == -1 else 0) for p in perms)
        assert is_cocycle(twisted, 3)
        constant = dict((p, 0b001) for p in perms)
        assert not is_cocycle(constant, 3)


class TestSubgroups(object):

    def test_n2(self):
        assert _summary(overgroup_census(2)) == [
            ("FULL", 8), ("G1", 4), ("G2", 4), ("SN_PLAIN", 2)]

    def test_n3(self):
        assert _summary(overgroup_census(3)) == [
            ("FULL", 48), ("G1", 24), ("G2", 24), ("G3", 12),
            ("SN_PLAIN", 6), ("SN_TWISTED", 6)]

    def test_n4(self, census4):
        assert _summary(census4) == [
            ("FULL", 384), ("G1", 192), ("G2", 192), ("G3", 48),
            ("EXC_2S4", 48), ("SN_PLAIN", 24), ("SN_TWISTED", 24)]

    def test_exceptional_inside_g2(self, census4):
        exc = [d for d in census4 if d.tag == "EXC_2S4"][0]
        assert all(PREDICATES["G2"](e) for e in exc.elements)
        assert not all(PREDICATES["G1"](e) for e in exc.elements)

    def test_too_large(self):
        with pytest.raises(ResourceError):
            overgroup_census(5)

    def test_named_orders(self):
        assert named_subgroup("G1", 3).order == 24
        assert named_subgroup("G2", 3).order == 24
        assert named_subgroup("G3", 5).order == 240
        assert named_subgroup("SN_TWISTED", 3).order == 6

    def test_named_generators(self):
        desc = named_subgroup("G2", 4)
        assert closure(desc.generators, 4) == desc.elements

    def test_g1_g3_intersection(self):
        for n in (3, 5):
            meet = named_subgroup("G1", n).elements & named_subgroup("G3", n).elements
            assert all(e.weight == 0 for e in meet)
            assert len(meet) == named_subgroup("SN_PLAIN", n).order
        assert named_subgroup("G3", 4).issubset(named_subgroup("G1", 4))

    def test_conjugate(self):
        plain = named_subgroup("SN_PLAIN", 3)
        y = WreathElement((1, 0, 0), (0, 1, 2))
        other = conjugate(plain, y)
        assert other.order == plain.order
        assert other.elements != plain.elements

    def test_unknown_tag(self):
        with pytest.raises(ShapeError):
            named_subgroup("G7", 3)
        with pytest.raises(ShapeError):
            named_subgroup("EXC_2S4", 3)


class TestCycleTypes(object):

    def test_full_identity(self):
        dist = cycle_type_distribution(named_subgroup("FULL", 2))
        assert dist[(1, 1, 1, 1)] == Fraction(1, 8)
        assert sum(dist.values()) == 1

    def test_g3(self):
        dist = cycle_type_distribution(named_subgroup("G3", 3))
        assert dist[(2, 2, 2)] == Fraction(1, 3)
        assert dist[(6,)] == Fraction(1, 6)
        assert sum(dist.values()) == 1

    def test_g1_even(self):
        for e in named_subgroup("G1", 2).elements:
            assert perm_sign(embed_2n(e)) == 1
