import math
import random

import pytest

from qzeta.characters import build_group, conductor, enumerate_characters
from qzeta.errors import DomainError


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class TestBuildGroup:
    def test_trivial_modulus(self):
        g = build_group(1)
        assert g.total_order == 1
        assert g.generators == ()

    def test_mod_five_is_cyclic_of_order_four(self):
        g = build_group(5)
        assert g.total_order == 4
        assert len(g.generators) == 1
        gen, order = g.generators[0]
        assert order == 4
        # exhaustive check that gen really has order 4 mod 5
        powers = {pow(gen, k, 5) for k in range(1, 5)}
        assert powers == {1, 2, 3, 4}

    def test_mod_eight_splits_into_two_involutions(self):
        g = build_group(8)
        assert [order for _, order in g.generators] == [2, 2]
        assert g.generators[0][0] == 7  # -1 mod 8
        assert g.generators[1][0] == 5
        # {±5^k} covers the units mod 8
        covered = set()
        for e1 in range(2):
            for e2 in range(2):
                covered.add(pow(7, e1, 8) * pow(5, e2, 8) % 8)
        assert covered == {1, 3, 5, 7}

    def test_generator_orders_multiply_to_phi(self):
        for f in range(1, 80):
            g = build_group(f)
            prod = math.prod(order for _, order in g.generators) if g.generators else 1
            assert prod == g.total_order == euler_phi(f)

    def test_invalid_modulus(self):
        with pytest.raises(DomainError):
            build_group(0)


class TestEnumerate:
    def test_modulus_one_has_constant_character(self):
        chars = enumerate_characters(1)
        assert len(chars) == 1
        chi = chars[0]
        assert chi(0) == 1  # gcd(0,1) = 1
        assert chi(17) == 1

    def test_mod_four(self):
        chars = enumerate_characters(4)
        assert len(chars) == 2
        assert chars[0].is_principal
        assert abs(chars[1](3) + 1) <= 1e-12

    def test_mod_five_has_order_four_character(self):
        chars = enumerate_characters(5)
        assert len(chars) == 4
        quartic = [c for c in chars if c.order == 4]
        assert len(quartic) == 2
        for c in quartic:
            assert abs(c(2) - 1j) <= 1e-12 or abs(c(2) + 1j) <= 1e-12

    def test_principal_comes_first(self):
        for f in (3, 8, 12, 35):
            chars = enumerate_characters(f)
            assert chars[0].is_principal
            assert not any(c.is_principal for c in chars[1:])


class TestConductor:
    def test_principal_mod_six(self):
        chi = enumerate_characters(6)[0]
        assert conductor(chi) == (1, False, True)

    def test_nonprincipal_mod_four_is_primitive(self):
        chi = enumerate_characters(4)[1]
        assert conductor(chi) == (4, True, False)

    def test_mod_eight_character_induced_from_mod_four(self):
        chars = enumerate_characters(8)
        chi4 = enumerate_characters(4)[1]
        induced = [
            c
            for c in chars
            if not c.is_principal
            and all(abs(c(n) - chi4(n)) <= 1e-12 for n in range(8) if math.gcd(n, 8) == 1)
        ]
        assert len(induced) == 1
        f0, primitive, principal = conductor(induced[0])
        assert (f0, primitive, principal) == (4, False, False)


class TestValueTable:
    def test_zero_off_units(self):
        for f in (4, 6, 12):
            for chi in enumerate_characters(f):
                for n in range(f):
                    if math.gcd(n, f) != 1:
                        assert chi(n) == 0
                    else:
                        assert abs(abs(chi(n)) - 1) <= 1e-12

    def test_chi_of_one_is_one(self):
        for f in (2, 3, 9, 16, 21):
            for chi in enumerate_characters(f):
                assert abs(chi(1) - 1) <= 1e-12

    def test_periodicity_including_negatives(self):
        chi = enumerate_characters(7)[3]
        for n in range(-21, 21):
            assert chi(n) == chi(n + 7)

    def test_orthogonality_and_multiplicativity_small_moduli(self):
        rng = random.Random(11)
        for f in range(1, 61):
            chars = enumerate_characters(f)
            assert len(chars) == euler_phi(f)
            units = [n for n in range(f) if math.gcd(n, f) == 1]
            for chi in chars:
                if not chi.is_principal:
                    assert abs(sum(chi.values)) <= 1e-13
                for _ in range(30):
                    m, n = rng.choice(units), rng.choice(units)
                    assert abs(chi(m * n) - chi(m) * chi(n)) <= 1e-13
