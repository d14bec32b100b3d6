"""Exception types shared across the package.

Every failure mode that callers are expected to handle gets its own class, so
tests and the command line tool can distinguish a usage mistake (bad word, bad
index) from an internal inconsistency.
"""


class QBorelError(Exception):
    """Base class for all package errors."""


class DivisionByZero(QBorelError, ZeroDivisionError):
    """Division by the zero rational function."""


class InvalidCartan(QBorelError):
    """Input matrix is not a valid finite-type Cartan matrix."""


class NotInPositiveCone(QBorelError):
    """Vector has a negative coordinate where none is allowed."""


class NotReduced(QBorelError):
    """Word in the simple reflections is not reduced."""


class NotOrthogonal(QBorelError):
    """Roots were required to be pairwise orthogonal but are not."""


class NotInWw(QBorelError):
    """Group element does not belong to the expected interval."""


class InvalidPair(QBorelError):
    """Pair of indices violates a precondition (for instance i == j)."""


class BadIndex(QBorelError):
    """Index out of range for the object at hand."""


class HeightOverflow(QBorelError):
    """Computation left the configured graded height window."""


class NotInSubalgebra(QBorelError):
    """Element does not lie in the subalgebra it was expanded over."""


class InvalidTriple(QBorelError):
    """Classification data (w, character, lattice) is inconsistent."""


class InvalidChain(QBorelError):
    """Reflection sequence does not drop the length by one at each step."""


class InternalContradiction(QBorelError):
    """A case that is provably impossible was reached; indicates a bug."""


class NoNonorthogonalPair(QBorelError):
    """All reflections in the sequence commute; nothing to normalize."""
