"""Arbitrary-precision modular arithmetic primitives.

Everything operates on plain Python ints (the language's native bignum) and
returns canonical residues in ``[0, modulus)``. All functions are pure and
safe for concurrent use.
"""

from __future__ import annotations

import math
import random

from .errors import NonResidueError, NotInvertibleError

# Deterministic Miller-Rabin witnesses: the first 13 primes decide primality
# for every n below this bound (Sorenson & Webster).
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
)


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}")


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return base**exponent mod modulus, reduced into [0, modulus)."""
    _require_nonnegative(base=base, exponent=exponent)
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    return pow(base, exponent, modulus)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b).

    x and y may be negative; g is always non-negative.
    """
    _require_nonnegative(a=a, b=b)
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inverse(a: int, modulus: int) -> int:
    """Return b in [1, modulus) with a*b = 1 mod modulus.

    Raises NotInvertibleError when gcd(a, modulus) != 1; the exception carries
    the gcd because for a composite modulus that value is a factor.
    """
    _require_nonnegative(a=a)
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    a %= modulus
    if a == 0:
        raise NotInvertibleError(a, modulus, modulus)
    g, x, _ = ext_gcd(a, modulus)
    if g != 1:
        raise NotInvertibleError(a, modulus, g)
    return x % modulus


def crt_combine(residue_p: int, residue_q: int, p: int, q: int) -> int:
    """Combine residues mod p and mod q into the unique value mod p*q.

    Computed as r_p*q*(q^-1 mod p) + r_q*p*(p^-1 mod q), reduced mod p*q.
    """
    _require_nonnegative(residue_p=residue_p, residue_q=residue_q)
    if p < 2 or q < 2:
        raise ValueError("crt moduli must be >= 2")
    if math.gcd(p, q) != 1:
        raise ValueError(f"crt moduli must be coprime, gcd({p}, {q}) != 1")
    q_inv_mod_p = mod_inverse(q, p)
    p_inv_mod_q = mod_inverse(p, q)
    return (residue_p * q * q_inv_mod_p + residue_q * p * p_inv_mod_q) % (p * q)


def is_quadratic_residue(b: int, p: int) -> bool:
    """Euler's criterion: true iff b is a nonzero square mod odd prime p."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime, got {p}")
    b %= p
    if b == 0:
        raise ValueError("0 is neither a residue nor a non-residue here")
    return pow(b, (p - 1) // 2, p) == 1


def sqrt_mod_prime(b: int, p: int) -> int:
    """Return the smaller square root r of b mod odd prime p (r and p-r both work).

    Uses the (p+1)/4 exponent when p = 3 mod 4, Tonelli-Shanks otherwise.
    Raises NonResidueError when b has no square root.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime, got {p}")
    b %= p
    if b == 0:
        return 0
    if p % 4 == 3:
        r = pow(b, (p + 1) // 4, p)
        if r * r % p != b:
            raise NonResidueError(f"{b} has no square root mod {p}")
        return min(r, p - r)
    if not is_quadratic_residue(b, p):
        raise NonResidueError(f"{b} has no square root mod {p}")
    r = _tonelli_shanks(b, p)
    return min(r, p - r)


def _tonelli_shanks(b: int, p: int) -> int:
    # p odd prime, p = 1 mod 4, b a known quadratic residue.
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    z = 2
    while is_quadratic_residue(z, p):
        z += 1
    c = pow(z, d, p)
    x = pow(b, (d + 1) // 2, p)
    t = pow(b, d, p)
    m = s
    while t != 1:
        t2i = t
        i = 0
        for i in range(1, m):
            t2i = t2i * t2i % p
            if t2i == 1:
                break
        g = pow(c, 1 << (m - i - 1), p)
        x = x * g % p
        c = g * g % p
        t = t * c % p
        m = i
    return x


def is_probable_prime(n: int, rounds: int = 40, rng: random.Random | None = None) -> bool:
    """Miller-Rabin primality test with small-prime trial division first.

    Deterministic (fixed witness set) for n below ~3.3e24; above that bound
    ``rounds`` random witnesses are drawn from ``rng`` (a fresh system RNG by
    default), giving a false-positive rate below 4**-rounds.
    """
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n == sp:
            return True
        if n % sp == 0:
            return False
    # n is odd and larger than every trial-division prime here.
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_BOUND:
        witnesses = _MR_DETERMINISTIC_BASES
    else:
        if rounds < 1:
            raise ValueError(f"rounds must be >= 1, got {rounds}")
        if rng is None:
            rng = random.Random()
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(rounds))
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
