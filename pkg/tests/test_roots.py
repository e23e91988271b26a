import pytest

from cubetag import (
    UnityRootSet,
    alpha_ratio_form,
    cube_roots_of_unity_composite,
    cube_roots_of_unity_prime,
    square_roots_of_unity_composite,
)
from oracles import kth_roots_of_unity, sieve


class TestCubeRootsPrime:
    @pytest.mark.parametrize(
        "p,expected",
        [
            (31, (1, 5, 25)),
            (7, (1, 2, 4)),
            (11, (1,)),
            (13, (1, 3, 9)),  # frozen from brute force over x**3 mod 13
            (3, (1,)),
        ],
    )
    def test_known_sets(self, p, expected):
        assert cube_roots_of_unity_prime(p).roots == expected

    def test_non_prime_rejected(self):
        with pytest.raises(ValueError):
            cube_roots_of_unity_prime(77)
        with pytest.raises(ValueError):
            cube_roots_of_unity_prime(2)

    def test_matches_enumeration_below_2000(self):
        for p in sieve(2000):
            if p == 2:
                continue
            assert cube_roots_of_unity_prime(p).roots == kth_roots_of_unity(p, 3)

    def test_sum_identity_modulo_primes(self):
        # 1 + a + a*a = 0 mod p for every nontrivial root; prime moduli only
        for p in sieve(2000):
            if p % 3 != 1:
                continue
            roots = cube_roots_of_unity_prime(p).roots
            assert len(roots) == 3
            for a in roots[1:]:
                assert (1 + a + a * a) % p == 0

    def test_sum_identity_fails_modulo_composites(self):
        # the same identity is NOT valid mod 77 even though 23 cubes to 1
        assert (1 + 23 + 23 * 23) % 77 != 0


class TestAlphaRatioForm:
    def test_known_values(self):
        assert alpha_ratio_form(31) == 5
        assert alpha_ratio_form(7) == 2

    def test_result_is_nontrivial_cube_root(self):
        for p in sieve(10_000):
            if p % 3 == 1 and p % 4 == 3:
                u = alpha_ratio_form(p)
                assert u != 1
                assert u in cube_roots_of_unity_prime(p).roots

    def test_preconditions(self):
        with pytest.raises(ValueError):
            alpha_ratio_form(11)  # 2 mod 3
        with pytest.raises(ValueError):
            alpha_ratio_form(13)  # 1 mod 4
        with pytest.raises(ValueError):
            alpha_ratio_form(15)  # not prime


class TestCubeRootsComposite:
    @pytest.mark.parametrize(
        "p,q,expected",
        [
            (7, 11, (1, 23, 67)),
            (7, 13, (1, 9, 16, 22, 29, 53, 74, 79, 81)),
            (5, 11, (1,)),
        ],
    )
    def test_known_sets(self, p, q, expected):
        assert cube_roots_of_unity_composite(p, q).roots == expected

    def test_equal_factors_rejected(self):
        with pytest.raises(ValueError):
            cube_roots_of_unity_composite(7, 7)

    def test_matches_enumeration_up_to_10000(self):
        primes = [p for p in sieve(3400) if p > 2]
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                n = p * q
                if n > 10_000:
                    break
                assert cube_roots_of_unity_composite(p, q).roots == kth_roots_of_unity(n, 3)

    def test_squaring_permutes_root_set(self):
        for p, q in [(7, 11), (7, 13), (19, 37)]:
            root_set = cube_roots_of_unity_composite(p, q)
            n = root_set.modulus
            assert {u * u % n for u in root_set} == set(root_set.roots)

    def test_nontrivial_roots_are_mutual_squares(self):
        # the square of each nontrivial root is the other one, never itself
        for p, q in [(7, 11), (3, 7), (5, 13), (3, 31)]:
            root_set = cube_roots_of_unity_composite(p, q)
            assert len(root_set) == 3
            n = root_set.modulus
            _, a, b = root_set.roots
            assert a * a % n == b
            assert b * b % n == a


class TestSquareRootsComposite:
    @pytest.mark.parametrize(
        "p,q,expected",
        [
            (7, 11, (1, 34, 43, 76)),  # frozen from brute force over x**2 mod 77
            (3, 5, (1, 4, 11, 14)),  # frozen from brute force over x**2 mod 15
        ],
    )
    def test_known_sets(self, p, q, expected):
        assert square_roots_of_unity_composite(p, q).roots == expected

    def test_matches_enumeration(self):
        for p, q in [(3, 5), (7, 11), (13, 17), (41, 43)]:
            n = p * q
            assert square_roots_of_unity_composite(p, q).roots == kth_roots_of_unity(n, 2)

    def test_contains_one_and_minus_one(self):
        for p, q in [(3, 5), (7, 11), (29, 31)]:
            root_set = square_roots_of_unity_composite(p, q)
            n = p * q
            assert 1 in root_set.roots and n - 1 in root_set.roots
            assert len(root_set) == 4

    def test_equal_factors_rejected(self):
        with pytest.raises(ValueError):
            square_roots_of_unity_composite(11, 11)


class TestUnityRootSetValidation:
    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            UnityRootSet(31, 3, (1, 25, 5))

    def test_missing_one_rejected(self):
        with pytest.raises(ValueError):
            UnityRootSet(31, 3, (5, 25))

    def test_non_root_rejected(self):
        with pytest.raises(ValueError):
            UnityRootSet(31, 3, (1, 2, 25))

    def test_bad_order_rejected(self):
        with pytest.raises(ValueError):
            UnityRootSet(31, 5, (1,))

    def test_smallest_nontrivial(self):
        assert cube_roots_of_unity_composite(7, 11).smallest_nontrivial == 23
        assert cube_roots_of_unity_prime(11).smallest_nontrivial is None
