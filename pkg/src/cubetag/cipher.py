"""Rank-tagged encryption by cubing or squaring modulo n.

Cubing (or squaring) maps several messages to one ciphertext; the preimages
of c = m**k differ from m exactly by a k-th root of unity. The sender
therefore publishes, next to c, the 1-based rank of m inside the ascending
sorted companion set {m*u mod n : u a root of 1}. The receiver recovers any
one root of c, rebuilds the same companion set from it, and picks the
tagged element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    InvalidCiphertextError,
    InvalidMessageError,
    KeyFileError,
    NonResidueError,
    PrivateKeyRequiredError,
    TagRangeError,
)
from .keys import KeyMaterial, KeyMode
from .modular import crt_combine, mod_inverse, sqrt_mod_prime

_SEARCH_FACTOR_LIMIT = 1_000_000


@dataclass(frozen=True)
class TaggedCiphertext:
    c: int
    tag: int
    mode: KeyMode


def _companions(value: int, key: KeyMaterial) -> list[int]:
    n = key.n
    return sorted(value * u % n for u in key.roots)


def encrypt(m: int, key: KeyMaterial) -> TaggedCiphertext:
    """Encrypt m as (m**k mod n, rank of m among its companions).

    m must lie in [1, n) and be coprime to n; a shared factor is rejected
    because transmitting its cube would hand an eavesdropper a factor of n.
    """
    n = key.n
    if not 1 <= m < n:
        raise InvalidMessageError(f"message must be in [1, {n}), got {m}")
    g = math.gcd(m, n)
    if g != 1:
        raise InvalidMessageError(
            f"message {m} shares a factor with the modulus",
            factor=g if g < n else None,
        )
    companions = _companions(m, key)
    tag = companions.index(m) + 1
    return TaggedCiphertext(c=pow(m, key.mode.exponent, n), tag=tag, mode=key.mode)


def cube_root_by_exponent(c: int, key: KeyMaterial) -> int:
    """One cube root of c via a single modular exponentiation.

    Only possible when 9 does not divide phi(n): the exponent is
    (phi+3)/9 for phi = 6 mod 9 and (2*phi+3)/9 for phi = 3 mod 9.
    """
    if key.mode not in (KeyMode.CUBIC3_PRIME, KeyMode.CUBIC3_COMPOSITE):
        raise ValueError(
            f"exponent inversion is impossible in {key.mode.value} (9 divides phi)"
        )
    phi, n = key.phi, key.n
    if phi is None:
        raise PrivateKeyRequiredError("private key required to invert")
    root = pow(c, _inverse_cube_exponent(phi), n)
    if pow(root, 3, n) != c % n:
        raise NonResidueError(f"{c} is not a cubic residue mod {n}")
    return root


def _inverse_cube_exponent(phi: int) -> int:
    rem = phi % 9
    if rem == 6:
        return (phi + 3) // 9
    if rem == 3:
        return (2 * phi + 3) // 9
    raise ValueError(f"phi = {phi} is not 3 or 6 mod 9")


def cube_root_by_crt(c: int, key: KeyMaterial) -> int:
    """One cube root of c mod n = p*q, solving per factor and combining.

    Per factor: unique root when gcd(3, p-1) = 1, exponent branch when
    3 | p-1 but 9 does not divide it, and a desk-scale exhaustive search when
    9 | p-1 (no exponent inverse exists there).
    """
    if not key.mode.is_composite:
        raise ValueError("CRT root needs a two-factor modulus")
    if key.p is None or key.q is None:
        raise PrivateKeyRequiredError("private factors required for the CRT root")
    root_p = _cube_root_mod_prime(c % key.p, key.p)
    root_q = _cube_root_mod_prime(c % key.q, key.q)
    root = crt_combine(root_p, root_q, key.p, key.q)
    if pow(root, 3, key.n) != c % key.n:
        raise NonResidueError(f"{c} is not a cubic residue mod {key.n}")
    return root


def _cube_root_mod_prime(c: int, p: int) -> int:
    t = p - 1
    if t % 3 != 0:
        # Cubing is a bijection mod p; invert the exponent.
        return pow(c, mod_inverse(3, t), p)
    if t % 9 != 0:
        root = pow(c, _inverse_cube_exponent(t), p)
    else:
        if p > _SEARCH_FACTOR_LIMIT:
            raise ValueError(
                f"factor {p} too large for exhaustive cube-root search (9 | p-1)"
            )
        root = next((x for x in range(p) if pow(x, 3, p) == c), None)
        if root is None:
            raise NonResidueError(f"{c} is not a cubic residue mod {p}")
    if pow(root, 3, p) != c:
        raise NonResidueError(f"{c} is not a cubic residue mod {p}")
    return root


def _square_root_composite(c: int, key: KeyMaterial) -> int:
    if key.p is None or key.q is None:
        raise PrivateKeyRequiredError("private factors required to take square roots")
    root_p = sqrt_mod_prime(c % key.p, key.p)
    root_q = sqrt_mod_prime(c % key.q, key.q)
    return crt_combine(root_p, root_q, key.p, key.q)


def decrypt_candidates(c: int, key: KeyMaterial) -> list[int]:
    """The full ascending preimage set of c: every x with x**k = c mod n.

    Raises InvalidCiphertextError when the set degenerates (fewer distinct
    elements than unity roots), which happens exactly when gcd(c, n) != 1.
    """
    if key.mode is KeyMode.SQUARE_COMPOSITE:
        root = _square_root_composite(c, key)
    elif key.mode is KeyMode.CUBIC9_COMPOSITE:
        root = cube_root_by_crt(c, key)
    else:
        root = cube_root_by_exponent(c, key)
    candidates = _companions(root, key)
    if len(set(candidates)) != len(key.roots):
        raise InvalidCiphertextError(
            f"degenerate candidate set for c = {c} (not coprime to the modulus)"
        )
    return candidates


def decrypt(ct: TaggedCiphertext, key: KeyMaterial) -> int:
    """Invert a tagged ciphertext: recover one root, list its companions in
    ascending order, return the tag-th one."""
    expected = len(key.roots)
    if not 1 <= ct.tag <= expected:
        raise TagRangeError(f"tag {ct.tag} outside [1, {expected}]")
    return decrypt_candidates(ct.c, key)[ct.tag - 1]


def encrypt_square(m: int, key: KeyMaterial) -> TaggedCiphertext:
    """Squaring-transformation variant; the tag fits in 2 bits (4 roots)."""
    _require_square_mode(key)
    return encrypt(m, key)


def decrypt_square(ct: TaggedCiphertext, key: KeyMaterial) -> int:
    _require_square_mode(key)
    return decrypt(ct, key)


def _require_square_mode(key: KeyMaterial) -> None:
    if key.mode is not KeyMode.SQUARE_COMPOSITE:
        raise ValueError(f"square-mode operation on a {key.mode.value} key")


def serialize_ciphertext(ct: TaggedCiphertext) -> str:
    return f"c={ct.c}\ntag={ct.tag}\n"


def parse_ciphertext(text: str, mode: KeyMode) -> TaggedCiphertext:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 2:
        raise KeyFileError(f"ciphertext file must have 2 lines, got {len(lines)}")
    values = []
    for idx, name in enumerate(("c", "tag")):
        prefix = name + "="
        if not lines[idx].startswith(prefix) or not lines[idx][len(prefix):].isdigit():
            raise KeyFileError(
                f"expected {name}=<decimal>, got {lines[idx]!r}", line=idx + 1
            )
        values.append(int(lines[idx][len(prefix):]))
    return TaggedCiphertext(c=values[0], tag=values[1], mode=mode)


def companion_table(key: KeyMaterial, limit: int = _SEARCH_FACTOR_LIMIT):
    """Yield (companions, c) rows covering every message coprime to n,
    ordered by each companion set's smallest member.

    Refuses moduli above `limit`; the sweep is exhaustive by design.
    """
    n = key.n
    if n > limit:
        raise ValueError(f"modulus {n} too large for an exhaustive table (limit {limit})")
    k = key.mode.exponent
    seen = bytearray(n)
    for m in range(1, n):
        if seen[m] or math.gcd(m, n) != 1:
            continue
        companions = _companions(m, key)
        for value in companions:
            seen[value] = 1
        yield companions, pow(m, k, n)
