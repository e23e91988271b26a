"""Roots of unity modulo primes and two-factor composites.

The cipher's companion sets are built from the k-th roots of 1 (k = 2 or 3).
Root sets are always returned in ascending order, which is the shared
canonical ordering the rank tags rely on; the set sizes that occur here are
1 or 3 modulo a prime and 1, 3, 4 or 9 modulo p*q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modular import crt_combine, is_probable_prime, mod_inverse, sqrt_mod_prime


@dataclass(frozen=True)
class UnityRootSet:
    """Ascending, duplicate-free k-th roots of 1 for a fixed modulus."""

    modulus: int
    order: int
    roots: tuple[int, ...]

    def __post_init__(self):
        if self.order not in (2, 3):
            raise ValueError(f"unsupported root order {self.order}")
        if list(self.roots) != sorted(set(self.roots)) or 1 not in self.roots:
            raise ValueError("roots must be ascending, unique, and contain 1")
        for u in self.roots:
            if pow(u, self.order, self.modulus) != 1:
                raise ValueError(f"{u} is not an order-{self.order} root of 1 mod {self.modulus}")

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def nontrivial(self) -> tuple[int, ...]:
        return self.roots[1:]

    @property
    def smallest_nontrivial(self) -> int | None:
        """Agreed multiplier for 3-root protocols: the smallest root above 1."""
        return self.roots[1] if len(self.roots) > 1 else None


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_probable_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def cube_roots_of_unity_prime(p: int) -> UnityRootSet:
    """All solutions of x**3 = 1 mod an odd prime p.

    For p = 2 mod 3 (and p = 3) cubing is a bijection and {1} is returned.
    For p = 1 mod 3 the two extra roots solve x**2 + x + 1 = 0, i.e.
    (-1 +/- sqrt(p-3)) / 2; sqrt(p-3) always exists for such p.
    """
    _require_odd_prime(p)
    if p % 3 != 1:
        return UnityRootSet(p, 3, (1,))
    s = sqrt_mod_prime(p - 3, p)
    half = mod_inverse(2, p)
    a1 = (s - 1) * half % p
    a2 = (-1 - s) * half % p
    return UnityRootSet(p, 3, tuple(sorted({1, a1, a2})))


def alpha_ratio_form(p: int) -> int:
    """Nontrivial cube root of 1 as the ratio (-1 + s) / (-1 - s) mod p.

    Here s is the raw (p+1)/4-exponent square root of p-3, so p must be
    1 mod 3 (a root exists) and 3 mod 4 (the exponent shortcut applies).
    """
    _require_odd_prime(p)
    if p % 3 != 1:
        raise ValueError(f"{p} = 2 mod 3 has only the trivial cube root of 1")
    if p % 4 != 3:
        raise ValueError(f"exponent shortcut needs p = 3 mod 4, got {p}")
    s = pow(p - 3, (p + 1) // 4, p)
    u = (s - 1) * mod_inverse((-1 - s) % p, p) % p
    if pow(u, 3, p) != 1:
        raise ArithmeticError(f"ratio form failed for {p}")
    return u


def cube_roots_of_unity_composite(p: int, q: int) -> UnityRootSet:
    """Cube roots of 1 mod p*q: per-prime sets combined over all CRT pairs.

    The set size is the product of the per-prime sizes: 1, 3, or 9.
    """
    _require_odd_prime(p)
    _require_odd_prime(q)
    if p == q:
        raise ValueError("factors must be distinct")
    roots_p = cube_roots_of_unity_prime(p).roots
    roots_q = cube_roots_of_unity_prime(q).roots
    combined = sorted(
        crt_combine(rp, rq, p, q) for rp in roots_p for rq in roots_q
    )
    return UnityRootSet(p * q, 3, tuple(combined))


def square_roots_of_unity_composite(p: int, q: int) -> UnityRootSet:
    """The four solutions of x**2 = 1 mod p*q for distinct odd primes p, q."""
    _require_odd_prime(p)
    _require_odd_prime(q)
    if p == q:
        raise ValueError("factors must be distinct")
    combined = sorted(
        crt_combine(rp, rq, p, q) for rp in (1, p - 1) for rq in (1, q - 1)
    )
    return UnityRootSet(p * q, 2, tuple(combined))
