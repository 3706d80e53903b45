"""Exception hierarchy shared by every layer.

The CLI maps each class to a distinct non-zero exit code; see cli.EXIT_CODES.
"""


class PPDTError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(PPDTError):
    """Invalid protocol parameters, key sizes, or configuration."""


class RangeError(PPDTError, ValueError):
    """A plaintext or encoded value is outside its permitted range."""


class SchemeMismatchError(PPDTError, TypeError):
    """Ciphertext scheme tag does not match the key used for an operation."""


class EncodingError(PPDTError):
    """A raw feature value cannot be encoded against the schema."""


class FileFormatError(PPDTError):
    """A key, tree, slice, or dataset file cannot be parsed."""


class ProtocolError(PPDTError):
    """A protocol exchange violated its contract (bad lengths, bad fields)."""


class ProtocolPhaseError(ProtocolError):
    """A message arrived out of phase; the session is aborted."""


class EndpointError(PPDTError):
    """A peer endpoint is unreachable or answered at the transport level."""


class FrameError(PPDTError):
    """Base class for wire-frame decoding failures (connection-fatal)."""


class FrameLengthError(FrameError):
    """Frame length field disagrees with the available bytes."""


class FrameVersionError(FrameError):
    """Unknown frame version byte."""


class FrameTypeError(FrameError):
    """Unknown message type byte."""


class PayloadError(FrameError):
    """Frame payload is malformed for its declared message type."""
