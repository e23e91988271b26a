"""Probability events over the nine cube roots of unity.

When phi(n) is divisible by 9 there are nine cube roots of 1 and they can be
arranged into four triples {1, x, x*x} (each non-1 root paired with its
square). A sender picks one triple, tags the message within the 3-element
companion set that triple generates, and the receiver gambles on which
triple was used: a 1-in-4 event.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cipher import cube_root_by_crt
from .errors import InvalidMessageError
from .keys import KeyMaterial, KeyMode
from .roots import UnityRootSet


@dataclass(frozen=True)
class RootGrouping:
    """Four triples {1, x, x**2 mod n} covering a 9-element unity root set.

    Triples are ordered by their smallest non-1 element; 1 appears in every
    triple, each other root in exactly one.
    """

    modulus: int
    groups: tuple[tuple[int, int, int], ...]


def partition_nine_roots(roots: UnityRootSet) -> RootGrouping:
    """Pair each non-1 root with its square, giving four {1, x, x**2} triples."""
    if len(roots) != 9:
        raise ValueError(f"expected 9 roots, got {len(roots)}")
    n = roots.modulus
    groups = []
    remaining = set(roots.nontrivial())
    while remaining:
        x = min(remaining)
        square = x * x % n
        remaining.discard(x)
        remaining.discard(square)
        groups.append((1, x, square))
    groups.sort(key=lambda triple: triple[1])
    return RootGrouping(modulus=n, groups=tuple(groups))


def partition_nine_roots_disjoint(roots: UnityRootSet) -> tuple[tuple[int, int, int], ...]:
    """Documented variant: three disjoint triples by ascending order.

    Not used by the game protocol; the canonical grouping is the
    squares-pairing one from partition_nine_roots.
    """
    if len(roots) != 9:
        raise ValueError(f"expected 9 roots, got {len(roots)}")
    ordered = roots.roots
    return tuple(ordered[i:i + 3] for i in range(0, 9, 3))


def group_count(k: int) -> int:
    """Number of {1, x, x**2, ...} groups for odd exponent k: always k + 1."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and >= 3, got {k}")
    return k + 1


@dataclass(frozen=True)
class GameRound:
    """Transcript of one pick-a-group round.

    The sender's triple generates a 3-element companion set; `coset` says
    which of the three cosets of her triple (ordered by smallest element)
    holds the message among the nine cube roots of the ciphertext, and `tag`
    is the message's rank inside that coset. The receiver rebuilds the nine
    roots, splits them by HIS triple, and reads coset/tag off his split.
    The round succeeds when the group choices match; a lucky mismatch can
    still reproduce the message but counts as a failure.
    """

    c: int
    coset: int
    tag: int
    alice_choice: int
    bob_choice: int
    recovered: int
    success: bool


def _cosets(nine_roots: list[int], triple: tuple[int, int, int], n: int) -> list[list[int]]:
    """Split the 9 cube roots of some value into the 3 cosets of a triple,
    ordered by smallest element."""
    remaining = set(nine_roots)
    cosets = []
    while remaining:
        rep = min(remaining)
        coset = sorted(rep * u % n for u in triple)
        remaining.difference_update(coset)
        cosets.append(coset)
    return cosets


def play_round(
    key: KeyMaterial, m: int, alice_choice: int, bob_choice: int
) -> GameRound:
    """Run one round: Alice encrypts and tags with her triple, Bob decodes
    with his; success iff the triple choices match (probability 1/4 under
    uniform independent choices)."""
    if key.mode is not KeyMode.CUBIC9_COMPOSITE:
        raise ValueError(f"the game needs a CUBIC9 key, got {key.mode.value}")
    grouping = partition_nine_roots(key.roots)
    if not (1 <= alice_choice <= 4 and 1 <= bob_choice <= 4):
        raise ValueError("group choices must be in [1, 4]")
    n = key.n
    if not 1 <= m < n or math.gcd(m, n) != 1:
        raise InvalidMessageError(f"message must be in [1, {n}) and coprime to the modulus")

    # Sender side: all nine cube roots of c are m's multiples by the roots
    # of unity; locate m's coset under her triple and its rank inside.
    nine = sorted(m * u % n for u in key.roots)
    alice_cosets = _cosets(nine, grouping.groups[alice_choice - 1], n)
    coset_index = next(i for i, cs in enumerate(alice_cosets) if m in cs) + 1
    tag = alice_cosets[coset_index - 1].index(m) + 1
    c = pow(m, 3, n)

    # Receiver side, self-contained: rebuild the nine roots from c alone.
    root = cube_root_by_crt(c, key)
    bob_nine = sorted(root * u % n for u in key.roots)
    bob_cosets = _cosets(bob_nine, grouping.groups[bob_choice - 1], n)
    recovered = bob_cosets[coset_index - 1][tag - 1]

    return GameRound(
        c=c,
        coset=coset_index,
        tag=tag,
        alice_choice=alice_choice,
        bob_choice=bob_choice,
        recovered=recovered,
        success=alice_choice == bob_choice,
    )
