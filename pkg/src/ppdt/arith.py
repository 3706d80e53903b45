"""Number-theory helpers on top of gmpy2.

All randomness comes from the OS CSPRNG (`secrets`); gmpy2 supplies fast
modular exponentiation, inversion, and primality testing.
"""

from __future__ import annotations

import secrets

import gmpy2


def powmod(base: int, exp: int, mod: int) -> int:
    return int(gmpy2.powmod(base, exp, mod))


def invert(value: int, mod: int) -> int:
    return int(gmpy2.invert(value, mod))


def is_prime(n: int) -> bool:
    return bool(gmpy2.is_prime(n, 40))


def random_prime(bits: int) -> int:
    """Uniformly-started prime with exactly `bits` bits."""
    if bits < 8:
        raise ValueError("prime size too small")
    while True:
        candidate = secrets.randbits(bits - 1) | (1 << (bits - 1)) | 1
        p = int(gmpy2.next_prime(candidate))
        if p.bit_length() == bits:
            return p


def random_below(bound: int) -> int:
    return secrets.randbelow(bound)


def random_range(lo: int, hi: int) -> int:
    """Uniform integer in [lo, hi)."""
    return lo + secrets.randbelow(hi - lo)


def lcm(a: int, b: int) -> int:
    return int(gmpy2.lcm(a, b))
