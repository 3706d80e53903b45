"""Two-party encrypted comparison sessions.

A level-site holding ⟦x⟧ and ⟦-T⟧ under the client's Paillier key learns a
single bit:

    numeric mode:   beta = 1{T <= x}
    equality mode:  beta = 1{T == x}

while the client learns nothing. The site blinds the difference with a
(t+kappa)-bit mask, the client returns the low bits of the blinded value
under DGK, and the site builds a masked sequence whose zero/non-zero pattern
carries a share of the answer. A final blinded exchange recombines the two
shares on the site only.

Every step performs a fixed number of homomorphic operations and transmits
fixed-size messages regardless of the compared values: t+1 bit ciphertexts
up, t+2 masked items down, one zero-check per item. The session objects
count their own work so tests can assert the counts have zero variance.

Sessions are transport-agnostic: they consume and produce ciphertext lists
and integers; framing lives in the wire module. A message applied out of
phase aborts the session permanently.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

from . import dgk, paillier
from .errors import ProtocolError, ProtocolPhaseError
from .he import Ciphertext, encode_signed, hom_add, hom_scalar_mul
from .params import ProtocolParams

Mode = Literal["numeric", "equality"]

_sysrand = secrets.SystemRandom()


@dataclass
class SiteTelemetry:
    """Work counters for one site-side session."""

    bits_received: int = 0
    items_sent: int = 0
    hom_ops: int = 0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.bits_received, self.items_sent, self.hom_ops)


@dataclass
class ClientTelemetry:
    """Work counters for one client-side session."""

    bits_sent: int = 0
    zero_checks: int = 0
    decryptions: int = 0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.bits_sent, self.zero_checks, self.decryptions)


def _bits_lsb_first(value: int, width: int) -> list[int]:
    return [(value >> i) & 1 for i in range(width)]


class SiteComparisonSession:
    """Level-site half of one comparison.

    Call order: begin -> on_bit_vector -> reveal_share -> finish.
    """

    def __init__(
        self,
        mode: Mode,
        params: ProtocolParams,
        paillier_pk: paillier.PaillierPublicKey,
        dgk_pk: dgk.DGKPublicKey,
        *,
        mu: Optional[int] = None,
        sigma: Optional[int] = None,
        r_prime: Optional[int] = None,
    ):
        if mode not in ("numeric", "equality"):
            raise ProtocolError(f"unknown comparison mode {mode!r}")
        self.mode = mode
        self.params = params
        self.paillier_pk = paillier_pk
        self.dgk_pk = dgk_pk
        lo, hi = params.mask_range()
        self.mu = mu if mu is not None else lo + secrets.randbelow(hi - lo)
        if not lo <= self.mu < hi:
            raise ProtocolError("mask outside its sampling range")
        self.sigma = sigma if sigma is not None else secrets.randbits(1)
        self.r_prime = (
            r_prime if r_prime is not None else secrets.randbits(params.tau)
        )
        self.telemetry = SiteTelemetry()
        self._phase = "new"
        self._v: Optional[int] = None

    # -- helpers that keep the operation count honest ----------------------

    def _dgk_enc(self, m: int) -> Ciphertext:
        self.telemetry.hom_ops += 1
        return dgk.encrypt(self.dgk_pk, m % self.params.dgk_u)

    def _dgk_add(self, c1: Ciphertext, c2: Ciphertext) -> Ciphertext:
        self.telemetry.hom_ops += 1
        return hom_add(self.dgk_pk, c1, c2)

    def _dgk_mul(self, c: Ciphertext, k: int) -> Ciphertext:
        self.telemetry.hom_ops += 1
        return hom_scalar_mul(self.dgk_pk, c, k % self.params.dgk_u)

    def _expect(self, phase: str) -> None:
        if self._phase != phase:
            prior = self._phase
            self._phase = "aborted"
            raise ProtocolPhaseError(
                f"site session in phase {prior!r}, message for {phase!r}"
            )

    # -- protocol steps ----------------------------------------------------

    def begin(self, enc_x: Ciphertext, enc_neg_t: Ciphertext) -> Ciphertext:
        """Blind the difference and emit ⟦M⟧ for the client.

        Numeric mode folds a 2^t offset into the additive constant so the
        sign of x - T surfaces as bit t of the unmasked value.
        """
        self._expect("new")
        offset = (1 << self.params.t) if self.mode == "numeric" else 0
        blind = encode_signed(self.paillier_pk, offset + self.mu)
        self.telemetry.hom_ops += 3
        enc_m = hom_add(
            self.paillier_pk,
            hom_add(self.paillier_pk, enc_x, enc_neg_t),
            paillier.encrypt(self.paillier_pk, blind),
        )
        self._phase = "await_bits"
        return enc_m

    def on_bit_vector(self, bits: Sequence[Ciphertext]) -> list[Ciphertext]:
        """Consume the client's t+1 DGK bits, emit the t+2 masked items.

        Each per-bit item encodes s*(a_i - b_i) + 1 + 3*(higher-bit
        differences) with s = +1 when sigma = 0 and s = -1 when sigma = 1,
        so a zero appears iff (sigma = 0 and a < b) or (sigma = 1 and
        b <= a). The two trailing items complete the fixed length: offsets
        {1, 2} over the full difference sum never vanish, while sigma = 1
        replaces one with the equality slot (offset 0).
        """
        self._expect("await_bits")
        t, u = self.params.t, self.params.dgk_u
        if len(bits) != t + 1:
            self._phase = "aborted"
            raise ProtocolError(f"bit vector must have {t + 1} entries")
        self.telemetry.bits_received = len(bits)
        if self.mode == "numeric":
            items = self._numeric_items(bits)
        else:
            items = self._equality_items(bits)
        _sysrand.shuffle(items)  # Fisher-Yates over CSPRNG output
        self.telemetry.items_sent = len(items)
        self._phase = "await_share"
        return items

    def _xor_bits(self, bits: Sequence[Ciphertext], mask_bits: Sequence[int]) -> list[Ciphertext]:
        # a ^ b == b + (1-2b)*a, linear in the encrypted bit.
        return [
            self._dgk_add(self._dgk_mul(a, 1 - 2 * b), self._dgk_enc(b))
            for a, b in zip(bits, mask_bits)
        ]

    def _numeric_items(self, bits: Sequence[Ciphertext]) -> list[Ciphertext]:
        t, u = self.params.t, self.params.dgk_u
        b_bits = _bits_lsb_first(self.mu, t)  # bit index t of `bits` unused
        diffs = self._xor_bits(bits[:t], b_bits)
        # suffix[i] = sum of diffs above position i; total = sum of all.
        suffix: list[Ciphertext] = [None] * t  # type: ignore[list-item]
        acc = self._dgk_enc(0)
        for i in range(t - 1, -1, -1):
            suffix[i] = acc
            acc = self._dgk_add(acc, diffs[i])
        sign = 1 if self.sigma == 0 else -1
        items = []
        for i in range(t):
            term = self._dgk_add(
                self._dgk_mul(bits[i], sign),
                self._dgk_enc(1 - sign * b_bits[i]),
            )
            term = self._dgk_add(term, self._dgk_mul(suffix[i], 3))
            items.append(self._dgk_mul(term, self._nonzero_scalar()))
        extra_offsets = (1, 2) if self.sigma == 0 else (0, 1)
        for k in extra_offsets:
            term = self._dgk_add(acc, self._dgk_enc(k))
            items.append(self._dgk_mul(term, self._nonzero_scalar()))
        return items

    def _equality_items(self, bits: Sequence[Ciphertext]) -> list[Ciphertext]:
        t = self.params.t
        b_bits = _bits_lsb_first(self.mu, t + 1)
        diffs = self._xor_bits(bits, b_bits)
        total = self._dgk_enc(0)
        for d in diffs:
            total = self._dgk_add(total, d)
        if self.sigma == 0:
            offsets = list(range(0, t + 2))
        else:
            offsets = [-k for k in range(1, t + 2)] + [t + 2]
        items = []
        for off in offsets:
            term = self._dgk_add(total, self._dgk_enc(off))
            items.append(self._dgk_mul(term, self._nonzero_scalar()))
        return items

    def _nonzero_scalar(self) -> int:
        return 1 + secrets.randbelow(self.params.dgk_u - 1)

    def reveal_share(self) -> int:
        """Blind the site share with r' and emit v; the client sees only
        a uniform tau-bit value."""
        self._expect("await_share")
        h_site = self._site_share()
        self._v = (h_site + self.r_prime) % (1 << self.params.tau)
        self._phase = "await_reply"
        return self._v

    def finish(self, w: int) -> int:
        """Recombine the shares: beta = lsb(w) ^ lsb(v) ^ h_site."""
        self._expect("await_reply")
        if not 0 <= w < (1 << self.params.tau):
            self._phase = "aborted"
            raise ProtocolError("share reply outside tau-bit range")
        assert self._v is not None
        beta = (w & 1) ^ (self._v & 1) ^ self._site_share()
        self._phase = "done"
        return beta

    def _site_share(self) -> int:
        if self.mode == "numeric":
            return ((self.mu >> self.params.t) & 1) ^ self.sigma
        return self.sigma


class ClientComparisonSession:
    """Client half of one comparison; never learns the outcome."""

    def __init__(
        self,
        mode: Mode,
        params: ProtocolParams,
        paillier_sk: paillier.PaillierPrivateKey,
        dgk_keys: dgk.DGKKeypair,
    ):
        if mode not in ("numeric", "equality"):
            raise ProtocolError(f"unknown comparison mode {mode!r}")
        self.mode = mode
        self.params = params
        self.paillier_sk = paillier_sk
        self.dgk_keys = dgk_keys
        self.telemetry = ClientTelemetry()
        self._phase = "await_blinded"
        self._parity = 0
        self._delta: Optional[int] = None

    def _expect(self, phase: str) -> None:
        if self._phase != phase:
            prior = self._phase
            self._phase = "aborted"
            raise ProtocolPhaseError(
                f"client session in phase {prior!r}, message for {phase!r}"
            )

    def on_blinded_value(self, enc_m: Ciphertext) -> list[Ciphertext]:
        """Decrypt ⟦M⟧ and emit the t+1 low bits of M under DGK.

        Both modes transmit exactly t+1 bits; numeric mode additionally
        retains bit t of M as the carry parity folded into the final share.
        """
        self._expect("await_blinded")
        t = self.params.t
        m = paillier.decrypt(self.paillier_sk, enc_m)
        self.telemetry.decryptions += 1
        a = m % (1 << (t + 1))
        self._parity = (m >> t) & 1
        bits = [
            dgk.encrypt(self.dgk_keys.public, bit)
            for bit in _bits_lsb_first(a, t + 1)
        ]
        self.telemetry.bits_sent = len(bits)
        self._phase = "await_sequence"
        return bits

    def on_masked_sequence(self, items: Sequence[Ciphertext]) -> None:
        """Zero-check every item (no early exit) and record the share."""
        self._expect("await_sequence")
        t = self.params.t
        if len(items) != t + 2:
            self._phase = "aborted"
            raise ProtocolError(f"masked sequence must have {t + 2} entries")
        found = 0
        for item in items:
            found |= int(dgk.is_zero(self.dgk_keys.private, item))
            self.telemetry.zero_checks += 1
        self._delta = found
        self._phase = "await_share_v"

    def on_share_v(self, v: int) -> int:
        """Fold the client share into the lsb of the blinded value."""
        self._expect("await_share_v")
        if not 0 <= v < (1 << self.params.tau):
            self._phase = "aborted"
            raise ProtocolError("share value outside tau-bit range")
        assert self._delta is not None
        h_client = self._delta
        if self.mode == "numeric":
            h_client ^= self._parity
        self._phase = "done"
        return v ^ h_client

    @property
    def delta(self) -> Optional[int]:
        """The client's raw zero-scan share (test visibility)."""
        return self._delta
