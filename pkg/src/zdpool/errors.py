"""Domain exceptions raised by the library.

All of these derive from :class:`DomainError`, which itself is a
``ValueError``: callers that do not care about the distinction can catch
the built-in type, while the CLI maps any :class:`DomainError` to exit
code 1 and everything else to a traceback.
"""


class DomainError(ValueError):
    """A request that is well-formed but mathematically impossible."""


class ParameterError(DomainError):
    """Game or mechanism parameters violate a validity constraint."""


class DegenerateSpreadError(DomainError):
    """The mutual-cooperation and mutual-defection payoffs coincide.

    Every equalizer formula divides by the spread between the two, so no
    pinning strategy exists when it is zero.
    """


class UndefinedPayoffError(DomainError):
    """The pinned payoff is 0/0 at this strategy corner."""


class InfeasibleTargetError(DomainError):
    """No valid probability vector can pin the requested payoff."""
