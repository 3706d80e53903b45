"""Scheme-agnostic ciphertext type and additively homomorphic operations.

Both cryptosystems in this package (Paillier for t-bit values, DGK for the
comparison sub-protocol bits) expose the same additive structure: multiply
ciphertexts to add plaintexts, exponentiate to scale. Public keys provide a
`scheme` tag plus plaintext/ciphertext moduli, which is all these helpers
need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from .arith import powmod
from .errors import RangeError, SchemeMismatchError


class HomomorphicPublicKey(Protocol):
    scheme: str
    plaintext_modulus: int
    ciphertext_modulus: int


@dataclass(frozen=True)
class Ciphertext:
    """An encrypted integer: a residue plus the scheme it belongs to."""

    value: int
    scheme: str


def check_ciphertext(pk: HomomorphicPublicKey, c: Ciphertext) -> None:
    if c.scheme != pk.scheme:
        raise SchemeMismatchError(
            f"expected a {pk.scheme} ciphertext, got {c.scheme}"
        )
    if not 0 < c.value < pk.ciphertext_modulus:
        raise SchemeMismatchError(
            "ciphertext residue outside the key's ciphertext space"
        )


def hom_add(pk: HomomorphicPublicKey, c1: Ciphertext, c2: Ciphertext) -> Ciphertext:
    """Ciphertext of the sum of the two underlying plaintexts."""
    check_ciphertext(pk, c1)
    check_ciphertext(pk, c2)
    return Ciphertext(c1.value * c2.value % pk.ciphertext_modulus, pk.scheme)


def hom_scalar_mul(pk: HomomorphicPublicKey, c: Ciphertext, k: int) -> Ciphertext:
    """Ciphertext of k times the underlying plaintext, k >= 0."""
    check_ciphertext(pk, c)
    if k < 0:
        raise RangeError("scalar must be non-negative; encode negatives mod m")
    k %= pk.plaintext_modulus
    return Ciphertext(powmod(c.value, k, pk.ciphertext_modulus), pk.scheme)


def encode_signed(pk: HomomorphicPublicKey, v: int) -> int:
    """Map a signed integer onto [0, m) using the m/2 midpoint convention."""
    m = pk.plaintext_modulus
    if abs(v) >= m // 2:
        raise RangeError(f"|{v}| exceeds half the plaintext modulus")
    return v % m


def decode_signed(pk: HomomorphicPublicKey, value: int) -> int:
    """Inverse of encode_signed on (-m/2, m/2)."""
    m = pk.plaintext_modulus
    if not 0 <= value < m:
        raise RangeError("encoded value outside the plaintext space")
    return value - m if value > m // 2 else value
