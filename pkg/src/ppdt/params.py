"""Protocol parameters shared by client, server, and level-sites."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .errors import ParameterError

ALLOWED_KEY_BITS = (512, 1024, 2048, 3072)  # 512 permitted for tests only

# Smallest prime >= 2^16; the DGK plaintext space must comfortably exceed
# the masked comparison values, which are bounded by 3*(t+2).
DEFAULT_DGK_U = 65537


@dataclass(frozen=True)
class ProtocolParams:
    """Sizes that every party must agree on before a query can run.

    t:        bit length of attribute values and thresholds
    kappa:    statistical security parameter for the additive masks
    tau:      bit length of the share blinder used in the final exchange
    dgk_u:    DGK plaintext-space prime
    dgk_v_bits: bit length of the secret DGK order primes
    """

    t: int = 32
    kappa: int = 40
    tau: int = 32
    paillier_bits: int = 2048
    dgk_bits: int = 2048
    dgk_u: int = DEFAULT_DGK_U
    dgk_v_bits: int = 160

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ParameterError("t must be at least 2")
        if self.kappa < 8:
            raise ParameterError("kappa must be at least 8")
        if self.tau < 8:
            raise ParameterError("tau must be at least 8")
        if self.paillier_bits not in ALLOWED_KEY_BITS:
            raise ParameterError(
                f"paillier_bits must be one of {ALLOWED_KEY_BITS}"
            )
        if self.dgk_bits not in ALLOWED_KEY_BITS:
            raise ParameterError(f"dgk_bits must be one of {ALLOWED_KEY_BITS}")
        if not is_prime(self.dgk_u):
            raise ParameterError("dgk_u must be prime")
        # Masked comparison values never alias zero mod u.
        if self.dgk_u <= 3 * (self.t + 2):
            raise ParameterError("dgk_u must exceed 3*(t+2)")
        # Blinded differences must not wrap around the Paillier modulus.
        if self.t + self.kappa + 2 >= self.paillier_bits - 1:
            raise ParameterError(
                "2^(t+kappa+2) must stay below the Paillier modulus"
            )
        if self.dgk_v_bits < 32:
            raise ParameterError("dgk_v_bits must be at least 32")

    def mask_range(self) -> tuple[int, int]:
        """Sampling range [lo, hi) for the per-level mask.

        The mask is a (t+kappa)-bit value kept at or above 2^t so the
        blinded difference stays non-negative in both comparison modes.
        """
        return (1 << self.t, 1 << (self.t + self.kappa))
