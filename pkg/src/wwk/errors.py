"""Exception hierarchy.

Input problems (bad shapes, unnormalized states, malformed files) derive from
:class:`InputError`; failures of a physical construction on otherwise valid
input derive from :class:`DomainError`. The CLI maps them to exit codes 2 and 3.
"""


class WWKError(Exception):
    """Base class for all package errors."""


class InputError(WWKError, ValueError):
    pass


class DimensionMismatch(InputError):
    pass


class NotHermitian(InputError):
    pass


class RankDeficient(InputError):
    pass


class DomainError(WWKError):
    pass


class OverlapTooClose(DomainError):
    """|<chi_a|chi_b>| is (numerically) one: the detector recorded nothing."""


class DegenerateProjection(DomainError):
    """The detector state conditioned on a screen hit has zero norm."""


class UndefinedAtPhase(DomainError):
    """Conditional knowledge requested where the detection probability vanishes."""
