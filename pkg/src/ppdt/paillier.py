"""Paillier cryptosystem: probabilistic, additively homomorphic.

Used for everything sized in t bits: encrypted feature values, negated
thresholds, blinded comparison values, and leaf class ids. Decryption uses
the usual CRT split for speed.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .arith import invert, lcm, powmod, random_below, random_prime
from .errors import ParameterError, RangeError
from .he import Ciphertext, check_ciphertext
from .params import ALLOWED_KEY_BITS

SCHEME = "paillier"


@dataclass(frozen=True)
class PaillierPublicKey:
    n: int
    g: int
    scheme: str = field(default=SCHEME, init=False)

    @property
    def nsquare(self) -> int:
        return self.n * self.n

    @property
    def plaintext_modulus(self) -> int:
        return self.n

    @property
    def ciphertext_modulus(self) -> int:
        return self.nsquare


class PaillierPrivateKey:
    """Holds the factorization of n and the CRT decryption precomputations."""

    def __init__(self, p: int, q: int, public: PaillierPublicKey):
        if p * q != public.n:
            raise ParameterError("private factors do not match the modulus")
        self.p = p
        self.q = q
        self.public = public
        self.lam = lcm(p - 1, q - 1)
        psq, qsq = p * p, q * q
        self.hp = invert(_l_function(powmod(public.g, p - 1, psq), p), p)
        self.hq = invert(_l_function(powmod(public.g, q - 1, qsq), q), q)
        self.q_inv_p = invert(q, p)


@dataclass(frozen=True)
class PaillierKeypair:
    public: PaillierPublicKey
    private: PaillierPrivateKey


def _l_function(x: int, n: int) -> int:
    return (x - 1) // n


def keygen(bits: int) -> PaillierKeypair:
    """Fresh keypair with an exactly `bits`-bit modulus."""
    if bits not in ALLOWED_KEY_BITS:
        raise ParameterError(f"key size must be one of {ALLOWED_KEY_BITS}")
    while True:
        p = random_prime(bits // 2)
        q = random_prime(bits - bits // 2)
        if p == q:
            continue
        n = p * q
        if n.bit_length() == bits:
            break
    public = PaillierPublicKey(n=n, g=n + 1)
    return PaillierKeypair(public=public, private=PaillierPrivateKey(p, q, public))


def encrypt(pk: PaillierPublicKey, m: int) -> Ciphertext:
    """Probabilistic encryption of m in [0, n)."""
    if not 0 <= m < pk.n:
        raise RangeError(f"plaintext {m} outside [0, n)")
    r = random_below(pk.n - 1) + 1
    # g = n+1, so g^m = 1 + m*n (mod n^2); only the blinding needs a powmod.
    c = (1 + m * pk.n) % pk.nsquare * powmod(r, pk.n, pk.nsquare) % pk.nsquare
    return Ciphertext(c, SCHEME)


def decrypt(sk: PaillierPrivateKey, c: Ciphertext) -> int:
    check_ciphertext(sk.public, c)
    p, q = sk.p, sk.q
    m_p = _l_function(powmod(c.value, p - 1, p * p), p) * sk.hp % p
    m_q = _l_function(powmod(c.value, q - 1, q * q), q) * sk.hq % q
    # CRT combine.
    diff = (m_p - m_q) * sk.q_inv_p % p
    return (m_q + diff * q) % sk.public.n


def rerandomize(pk: PaillierPublicKey, c: Ciphertext) -> Ciphertext:
    """Fresh randomness, same plaintext; the output is unlinkable to c."""
    check_ciphertext(pk, c)
    r = random_below(pk.n - 1) + 1
    return Ciphertext(c.value * powmod(r, pk.n, pk.nsquare) % pk.nsquare, SCHEME)


def fingerprint(pk: PaillierPublicKey) -> str:
    """Stable hex digest binding encrypted artifacts to one client key."""
    h = hashlib.sha256()
    for part in (pk.n, pk.g):
        raw = part.to_bytes((part.bit_length() + 7) // 8, "big")
        h.update(len(raw).to_bytes(4, "big"))
        h.update(raw)
    return h.hexdigest()
