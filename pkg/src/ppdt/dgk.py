"""DGK cryptosystem: small plaintext space, fast zero-check.

Carries the bit-level traffic of the comparison sub-protocol. The receiver
only ever needs to know whether a plaintext is zero, which one exponentiation
answers; full decryption (test support) runs baby-step giant-step over the
plaintext prime u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import invert, is_prime, powmod, random_prime
from .errors import ParameterError, RangeError
from .he import Ciphertext, check_ciphertext
from .params import ProtocolParams
import secrets

SCHEME = "dgk"


@dataclass(frozen=True)
class DGKPublicKey:
    n: int
    g: int
    h: int
    u: int
    v_bits: int
    scheme: str = field(default=SCHEME, init=False)

    @property
    def plaintext_modulus(self) -> int:
        return self.u

    @property
    def ciphertext_modulus(self) -> int:
        return self.n


class DGKPrivateKey:
    def __init__(self, p: int, q: int, v_p: int, v_q: int, public: DGKPublicKey):
        self.p = p
        self.q = q
        self.v_p = v_p
        self.v_q = v_q
        self.public = public
        self._bsgs: tuple[dict[int, int], int, int] | None = None


@dataclass(frozen=True)
class DGKKeypair:
    public: DGKPublicKey
    private: DGKPrivateKey


def _prime_with_order_factors(u: int, v: int, half_bits: int) -> int:
    """Prime p = 2*u*v*r + 1 of `half_bits` bits, r prime."""
    base = 2 * u * v
    r_bits = half_bits - base.bit_length() + 1
    if r_bits < 16:
        raise ParameterError("dgk modulus too small for u and v_bits")
    while True:
        r = random_prime(r_bits)
        p = base * r + 1
        if p.bit_length() == half_bits and is_prime(p):
            return p


def _element_of_order(p: int, order: int, factors: tuple[int, ...]) -> int:
    """Random element of exact multiplicative order `order` mod prime p."""
    cofactor = (p - 1) // order
    while True:
        x = secrets.randbelow(p - 2) + 2
        candidate = powmod(x, cofactor, p)
        if candidate == 1:
            continue
        if all(powmod(candidate, order // f, p) != 1 for f in factors):
            return candidate


def _crt_pair(a_p: int, a_q: int, p: int, q: int) -> int:
    diff = (a_p - a_q) * invert(q, p) % p
    return (a_q + diff * q) % (p * q)


def keygen(params: ProtocolParams) -> DGKKeypair:
    """Keypair for plaintext space Z_u with order primes of v_bits bits.

    g has order u*v_p*v_q mod n, h has order v_p*v_q, so raising a
    ciphertext to v_p*v_q kills both the randomness and any information
    other than whether the plaintext is divisible by u.
    """
    u, v_bits, n_bits = params.dgk_u, params.dgk_v_bits, params.dgk_bits
    half = n_bits // 2
    while True:
        v_p = random_prime(v_bits)
        v_q = random_prime(v_bits)
        if v_p == v_q:
            continue
        p = _prime_with_order_factors(u, v_p, half)
        q = _prime_with_order_factors(u, v_q, n_bits - half)
        if p == q:
            continue
        # Keep the order factors confined to their own prime.
        if (q - 1) % v_p == 0 or (p - 1) % v_q == 0:
            continue
        n = p * q
        if n.bit_length() == n_bits:
            break
    g_p = _element_of_order(p, u * v_p, (u, v_p))
    g_q = _element_of_order(q, u * v_q, (u, v_q))
    h_p = _element_of_order(p, v_p, (v_p,))
    h_q = _element_of_order(q, v_q, (v_q,))
    public = DGKPublicKey(
        n=n,
        g=_crt_pair(g_p, g_q, p, q),
        h=_crt_pair(h_p, h_q, p, q),
        u=u,
        v_bits=v_bits,
    )
    return DGKKeypair(public=public, private=DGKPrivateKey(p, q, v_p, v_q, public))


def encrypt(pk: DGKPublicKey, m: int) -> Ciphertext:
    """Encryption of m in [0, u): g^m * h^r mod n."""
    if not 0 <= m < pk.u:
        raise RangeError(f"plaintext {m} outside [0, u)")
    r = secrets.randbits(5 * pk.v_bits // 2) | 1
    c = powmod(pk.g, m, pk.n) * powmod(pk.h, r, pk.n) % pk.n
    return Ciphertext(c, SCHEME)


def is_zero(sk: DGKPrivateKey, c: Ciphertext) -> bool:
    """True iff the underlying plaintext is 0; no full decryption."""
    check_ciphertext(sk.public, c)
    return powmod(c.value, sk.v_p * sk.v_q, sk.p) == 1


def decrypt(sk: DGKPrivateKey, c: Ciphertext) -> int:
    """Full decryption; test support only, the protocol never needs it."""
    check_ciphertext(sk.public, c)
    target = powmod(c.value, sk.v_p, sk.p)
    table, step, step_inv = _bsgs_tables(sk)
    gamma = target
    for i in range(step + 1):
        j = table.get(gamma)
        if j is not None:
            m = i * step + j
            if m < sk.public.u:
                return m
        gamma = gamma * step_inv % sk.p
    raise RangeError("ciphertext does not decrypt within [0, u)")


def _bsgs_tables(sk: DGKPrivateKey) -> tuple[dict[int, int], int, int]:
    if sk._bsgs is None:
        base = powmod(sk.public.g, sk.v_p, sk.p)
        step = math.isqrt(sk.public.u) + 1
        table = {}
        acc = 1
        for j in range(step):
            table.setdefault(acc, j)
            acc = acc * base % sk.p
        step_inv = invert(powmod(base, step, sk.p), sk.p)
        sk._bsgs = (table, step, step_inv)
    return sk._bsgs
