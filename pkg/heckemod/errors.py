"""
Exception hierarchy shared by every heckemod subpackage.

Argument validation still raises plain ``ValueError``; the classes here
mark failures of a computation or of a mathematical claim.
"""


class HeckeModError(Exception):
    """Base class of all heckemod errors."""


class PrecisionError(HeckeModError, ValueError):
    """A q-expansion is too short for the requested operation."""


class InexactDivision(HeckeModError, ArithmeticError):
    """
    Polynomial division over F_ell left a nonzero remainder.

    Parameters
    ----------
    remainder: FpPoly
               The nonzero remainder of the attempted division
    """

    def __init__(self, remainder, message=None):
        self.remainder = remainder
        if message is None:
            message = "inexact division, remainder {0}".format(remainder)
        super().__init__(message)


class FalsificationError(HeckeModError):
    """
    A mathematical claim checked by the library failed.

    Parameters
    ----------
    claim:   str
             Short name of the claim, e.g. ``"lemma1"``, ``"splitting"``,
             ``"period"``, ``"trace-integrality"``
    details: dict
             Whatever identifies the failing instance (p, k, ell, ...)
    """

    def __init__(self, claim, message, **details):
        self.claim = claim
        self.details = details
        super().__init__("{0}: {1}".format(claim, message))
