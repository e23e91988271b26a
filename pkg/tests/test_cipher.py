import math

import pytest

from cubetag import (
    InvalidCiphertextError,
    InvalidMessageError,
    KeyFileError,
    KeyMode,
    NonResidueError,
    PrivateKeyRequiredError,
    TagRangeError,
    TaggedCiphertext,
    companion_table,
    cube_root_by_crt,
    cube_root_by_exponent,
    decrypt,
    decrypt_candidates,
    decrypt_square,
    encrypt,
    encrypt_square,
    generate_key,
    key_from_factors,
    parse_ciphertext,
    serialize_ciphertext,
)
from oracles import kth_root_preimages

# Rows of the full message-to-output mapping for the 31-modulus example key,
# companions sorted ascending, rows ordered by smallest member.
TABLE_31 = [
    ((1, 5, 25), 1),
    ((2, 10, 19), 8),
    ((3, 13, 15), 27),
    ((4, 7, 20), 2),
    ((6, 26, 30), 30),
    ((8, 9, 14), 16),
    ((11, 24, 27), 29),
    ((12, 21, 29), 23),
    ((16, 18, 28), 4),
    ((17, 22, 23), 15),
]


class TestEncrypt:
    def test_prime_example(self, key31):
        ct = encrypt(7, key31)
        assert (ct.c, ct.tag) == (2, 2)

    def test_composite_example(self, key77):
        ct = encrypt(12, key77)
        assert (ct.c, ct.tag) == (34, 1)

    def test_nine_root_example(self, key91):
        ct = encrypt(24, key91)
        assert (ct.c, ct.tag) == (83, 2)

    def test_rank_one_message(self, key31):
        # companions of 3 are {3, 13, 15}; 3 is the smallest
        ct = encrypt(3, key31)
        assert (ct.c, ct.tag) == (27, 1)

    def test_out_of_range_rejected(self, key77):
        with pytest.raises(InvalidMessageError):
            encrypt(0, key77)
        with pytest.raises(InvalidMessageError):
            encrypt(77, key77)

    def test_shared_factor_rejected_and_reported(self, key77):
        with pytest.raises(InvalidMessageError) as info:
            encrypt(21, key77)
        assert info.value.factor == 7

    def test_needs_private_key(self, key77):
        with pytest.raises(PrivateKeyRequiredError):
            encrypt(12, key77.public())


class TestCubeRootByExponent:
    def test_prime_example(self, key31):
        assert cube_root_by_exponent(2, key31) == 4

    def test_composite_example(self, key77):
        assert cube_root_by_exponent(34, key77) == 34

    def test_identity(self, key31, key77):
        assert cube_root_by_exponent(1, key31) == 1
        assert cube_root_by_exponent(1, key77) == 1

    def test_nine_root_mode_unsupported(self, key91):
        with pytest.raises(ValueError):
            cube_root_by_exponent(83, key91)

    def test_non_residue_rejected(self, key31):
        residues = {pow(m, 3, 31) for m in range(1, 31)}
        assert 3 not in residues
        with pytest.raises(NonResidueError):
            cube_root_by_exponent(3, key31)

    def test_sound_for_every_residue(self, key77):
        for m in range(1, 77):
            if math.gcd(m, 77) != 1:
                continue
            c = pow(m, 3, 77)
            root = cube_root_by_exponent(c, key77)
            assert pow(root, 3, 77) == c


class TestCubeRootByCrt:
    def test_nine_root_example(self, key91):
        root = cube_root_by_crt(83, key91)
        assert root in (20, 24, 33, 34, 47, 59, 73, 76, 89)

    def test_unity(self, key91):
        assert cube_root_by_crt(1, key91) in key91.unity_roots.roots

    def test_three_root_composite(self, key77):
        root = cube_root_by_crt(34, key77)
        assert root in (12, 34, 45)

    def test_search_path_when_nine_divides_factor_totient(self):
        key = key_from_factors(KeyMode.CUBIC9_COMPOSITE, 19, 5)
        for m in (2, 17, 41):
            c = pow(m, 3, 95)
            root = cube_root_by_crt(c, key)
            assert pow(root, 3, 95) == c

    def test_search_refused_for_large_factor(self):
        # 9 | p-1 with p beyond the desk-scale search bound: no exponent
        # branch exists mod p and exhaustive search is refused
        key = key_from_factors(KeyMode.CUBIC9_COMPOSITE, 1000099, 5)
        c = pow(2, 3, key.n)
        with pytest.raises(ValueError):
            cube_root_by_crt(c, key)

    def test_needs_private_key(self, key91):
        with pytest.raises(PrivateKeyRequiredError):
            cube_root_by_crt(83, key91.public())


class TestDecrypt:
    def test_paper_round_trips(self, key31, key77, key91):
        assert decrypt(TaggedCiphertext(2, 2, key31.mode), key31) == 7
        assert decrypt(TaggedCiphertext(34, 1, key77.mode), key77) == 12
        assert decrypt(TaggedCiphertext(83, 2, key91.mode), key91) == 24

    def test_tag_out_of_range(self, key77):
        with pytest.raises(TagRangeError):
            decrypt(TaggedCiphertext(34, 4, key77.mode), key77)
        with pytest.raises(TagRangeError):
            decrypt(TaggedCiphertext(34, 0, key77.mode), key77)

    def test_non_coprime_ciphertext_rejected(self, key77):
        # 7**3 mod 77 = 35 shares the factor 7; candidate set degenerates
        with pytest.raises(InvalidCiphertextError):
            decrypt_candidates(pow(7, 3, 77), key77)

    def test_candidates_match_brute_force(self, key31, key77, key91):
        for key in (key31, key77, key91):
            preimages = kth_root_preimages(key.n, 3)
            for m in range(1, key.n):
                if math.gcd(m, key.n) != 1:
                    continue
                ct = encrypt(m, key)
                candidates = decrypt_candidates(ct.c, key)
                assert candidates == preimages[ct.c]
                assert candidates[ct.tag - 1] == m

    def test_round_trip_exhaustive(self, key31, key77, key91):
        for key in (key31, key77, key91):
            for m in range(1, key.n):
                if math.gcd(m, key.n) == 1:
                    assert decrypt(encrypt(m, key), key) == m

    def test_tags_cover_exactly_the_root_count(self, key31, key77, key91, key77_square):
        for key, count in ((key31, 3), (key77, 3), (key91, 9), (key77_square, 4)):
            tags = {
                encrypt(m, key).tag
                for m in range(1, key.n)
                if math.gcd(m, key.n) == 1
            }
            assert tags == set(range(1, count + 1))


class TestSquareMode:
    def test_derived_example(self, key77_square):
        ct = encrypt_square(12, key77_square)
        assert (ct.c, ct.tag) == (67, 1)
        assert decrypt_candidates(67, key77_square) == [12, 23, 54, 65]

    def test_round_trip_all_coprime(self, key77_square):
        tags = set()
        for m in range(1, 77):
            if math.gcd(m, 77) != 1:
                continue
            ct = encrypt_square(m, key77_square)
            tags.add(ct.tag)
            assert decrypt_square(ct, key77_square) == m
        assert tags == {1, 2, 3, 4}

    def test_candidates_match_brute_force(self, key77_square):
        preimages = kth_root_preimages(77, 2)
        for m in range(1, 77):
            if math.gcd(m, 77) != 1:
                continue
            ct = encrypt_square(m, key77_square)
            assert decrypt_candidates(ct.c, key77_square) == preimages[ct.c]

    def test_mode_guards(self, key77, key77_square):
        with pytest.raises(ValueError):
            encrypt_square(12, key77)
        with pytest.raises(ValueError):
            decrypt_square(TaggedCiphertext(67, 1, key77_square.mode), key77)


class TestCompanionTable:
    def test_reproduces_known_mapping(self, key31):
        rows = [(tuple(companions), c) for companions, c in companion_table(key31)]
        assert rows == TABLE_31

    def test_composite_row_count(self, key77):
        rows = list(companion_table(key77))
        assert len(rows) == 20
        assert all(len(companions) == 3 for companions, _ in rows)

    def test_square_mode_rows(self, key77_square):
        rows = list(companion_table(key77_square))
        assert len(rows) == 15
        assert all(len(companions) == 4 for companions, _ in rows)

    def test_large_modulus_refused(self):
        key = generate_key(KeyMode.CUBIC3_COMPOSITE, bits=48, seed=0)
        assert key.n > 1_000_000
        with pytest.raises(ValueError):
            next(companion_table(key))


class TestCiphertextFiles:
    def test_round_trip(self, key91):
        ct = encrypt(24, key91)
        text = serialize_ciphertext(ct)
        assert text == "c=83\ntag=2\n"
        assert parse_ciphertext(text, key91.mode) == ct

    def test_malformed_rejected(self, key91):
        for bad in ("", "c=83\n", "c=83\ntag=2\nextra=1\n", "tag=2\nc=83\n", "c=83\ntag=x\n"):
            with pytest.raises(KeyFileError):
                parse_ciphertext(bad, key91.mode)
