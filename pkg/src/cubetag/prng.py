"""Pseudorandom generation by iterated cubing modulo n.

The state evolves as s -> s**3 mod n with n = p*q and phi(n) divisible by 9,
so every state has nine cube-root preimages and inverting a step is as hard
as the nine-root decryption problem. Output digits are the state reduced to
a caller-chosen radix (2 for bits).

Small moduli cycle quickly (mod 91 the state enters the (8, 57) cycle); that
is fine for testing and inherent to desk-scale parameters. Seeds equal to a
root of unity are permitted but produce constant streams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .keys import KeyMaterial, KeyMode


@dataclass(frozen=True)
class PrngState:
    n: int
    s: int
    index: int = 0


def prng_init(key: KeyMaterial, seed: int) -> PrngState:
    """Start a generator at seed s0; requires a CUBIC9 key (9 | phi) and
    gcd(s0, n) = 1 with 1 < s0 < n."""
    if key.mode is not KeyMode.CUBIC9_COMPOSITE:
        raise ValueError(f"generator needs a CUBIC9 key (9 | phi), got {key.mode.value}")
    if key.phi is None or key.phi % 9 != 0:
        raise ValueError("generator needs the private key with 9 | phi")
    n = key.n
    if not 1 < seed < n:
        raise ValueError(f"seed must be in (1, {n}), got {seed}")
    if math.gcd(seed, n) != 1:
        raise ValueError(f"seed {seed} shares a factor with the modulus")
    return PrngState(n=n, s=seed, index=0)


def prng_next(state: PrngState) -> tuple[PrngState, int]:
    """Advance one step; returns the new state and its value s' = s**3 mod n."""
    s = pow(state.s, 3, state.n)
    return PrngState(n=state.n, s=s, index=state.index + 1), s


def prng_emit(state: PrngState, radix: int) -> tuple[PrngState, int]:
    """Advance one step and emit the new state reduced mod radix."""
    if not 2 <= radix < state.n:
        raise ValueError(f"radix must be in [2, {state.n}), got {radix}")
    state, value = prng_next(state)
    return state, value % radix


def digit_stream(key: KeyMaterial, seed: int, radix: int, count: int) -> list[int]:
    """First `count` output digits for (key, seed, radix); the seed itself is
    never emitted."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    state = prng_init(key, seed)
    digits = []
    for _ in range(count):
        state, digit = prng_emit(state, radix)
        digits.append(digit)
    return digits


def pack_bits_hex(bits: list[int]) -> str:
    """Pack a bit list MSB-first into lowercase hex, zero-padding the tail
    nibble."""
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bit stream must contain only 0 and 1")
    out = []
    for i in range(0, len(bits), 4):
        nibble = bits[i:i + 4] + [0] * (4 - len(bits[i:i + 4]))
        out.append(format(nibble[0] * 8 + nibble[1] * 4 + nibble[2] * 2 + nibble[3], "x"))
    return "".join(out)
