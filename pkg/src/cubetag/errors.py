"""Exception types shared across the package.

Plain ``ValueError`` is used for generic domain errors (bad modulus, even
group order, out-of-range radix and the like); the classes below exist where
callers need to distinguish the failure, e.g. a failed inversion modulo a
composite reveals a factor.
"""


class CubeTagError(Exception):
    """Base class for all package-specific errors."""


class NotInvertibleError(CubeTagError):
    """gcd(a, modulus) != 1, so no modular inverse exists.

    ``gcd`` carries the common divisor; modulo a composite this is a factor.
    """

    def __init__(self, a: int, modulus: int, gcd: int):
        super().__init__(f"{a} is not invertible mod {modulus} (gcd {gcd})")
        self.a = a
        self.modulus = modulus
        self.gcd = gcd


class NonResidueError(CubeTagError):
    """The value has no k-th root for the requested modulus."""


class InvalidMessageError(CubeTagError):
    """Message rejected at encryption time (out of range or gcd(m, n) != 1)."""

    def __init__(self, message: str, factor: int | None = None):
        if factor is not None:
            message += f" (shared factor {factor} would leak)"
        super().__init__(message)
        self.factor = factor


class InvalidCiphertextError(CubeTagError):
    """Ciphertext cannot be decrypted (degenerate candidate set)."""


class TagRangeError(InvalidCiphertextError):
    """Rank tag outside [1, root count]."""


class KeyGenerationError(CubeTagError):
    """Key constraints could not be satisfied."""


class KeyFileError(CubeTagError):
    """Malformed key or ciphertext file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PrivateKeyRequiredError(CubeTagError):
    """Operation needs the private key section but got a public-only key."""
