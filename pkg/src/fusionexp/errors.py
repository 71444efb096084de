"""Exception types shared across the library."""


class FusionExpError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(FusionExpError):
    """A modulus that must be prime is not."""


class NotIrreducible(FusionExpError):
    """The modulus polynomial factors over the coefficient field."""


class BadDegree(FusionExpError):
    """A coefficient vector has the wrong length or an invalid degree."""


class ParamsMismatch(FusionExpError):
    """Operands belong to different parameter sets."""


class ZeroInverse(FusionExpError):
    """Multiplicative inverse of zero requested."""


class IdentityBase(FusionExpError):
    """The group identity cannot serve as an exponentiation base."""


class SearchExhausted(FusionExpError):
    """A bounded parameter search ran out of candidates."""


class CapExceeded(FusionExpError):
    """Instance too large for an exhaustive-scan solver."""


class NotFound(FusionExpError):
    """An exhaustive scan finished without a match."""


class OracleInconsistent(FusionExpError):
    """An oracle answer violates a structural guarantee of the reduction."""


class BadThreshold(FusionExpError):
    """Secret-sharing threshold or share count out of range."""


class VerifyFailed(FusionExpError):
    """A share failed its commitment check."""

    def __init__(self, share_index: int):
        super().__init__(f"share {share_index} failed verification")
        self.share_index = share_index
