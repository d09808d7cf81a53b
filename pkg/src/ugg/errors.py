"""Exception types shared across the package."""


class UggError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(UggError, IndexError):
    """A vertex or node index lies outside its valid range."""


class EqualIndices(UggError, ValueError):
    """Two indices that must differ are equal."""


class InvalidSize(UggError, ValueError):
    """A size parameter is not a positive integer in its allowed range."""


class IntervalTooSmall(UggError, ValueError):
    """An interval has fewer vertices than the operation requires."""


class DegenerateEdge(UggError, ValueError):
    """An edge joins a vertex to itself."""


class SizeTooLarge(UggError, ValueError):
    """An input exceeds a documented size cap."""


class InvalidS(UggError, ValueError):
    """The split parameter s is outside [1, |V(T)|]."""


class PreconditionViolated(UggError, ValueError):
    """A checked structural precondition does not hold; the message names it."""


class DomainMismatch(UggError, ValueError):
    """A mapping's domain or image differs from the expected vertex set."""


class SizeMismatch(UggError, ValueError):
    """Two objects that must have equal sizes do not."""


class InternalInvariantBroken(UggError, RuntimeError):
    """The implementation detected a state its own invariants forbid."""


class NotACaterpillar(UggError, ValueError):
    """The input tree is not a caterpillar."""


class NotTwoChord(UggError, ValueError):
    """The input graph is not a cycle with exactly two chords."""


class NoRealizingPair(UggError, RuntimeError):
    """No pair of star centers realizes the required circular distance."""


class NoSpanningCycle(UggError, ValueError):
    """The host graph does not contain the spanning cycle 0,1,...,n-1."""


class MalformedInput(UggError, ValueError):
    """A text file does not conform to its documented format."""
