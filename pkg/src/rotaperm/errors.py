"""Exception hierarchy shared across the package.

Every error that a caller can act on has its own type; all of them
derive from RotapermError so CLI code can map them to exit codes in
one place.
"""


class RotapermError(Exception):
    """Base class for all package-specific errors."""


# --- field construction / solving ---

class ReducibleModulus(RotapermError):
    """Supplied (or table) modulus failed the trial-division irreducibility check."""


class UnsupportedDegree(RotapermError):
    """No default modulus shipped for this extension degree."""


class OddDegreeRequired(RotapermError):
    """Operation needs 3 to be invertible mod 2^m - 1, i.e. odd m."""


class NoSolution(RotapermError):
    """Half-trace requested for an element with trace 1."""


# --- symbolic layer ---

class PolyParseError(RotapermError):
    """Polynomial text does not match the grammar; carries the offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(RotapermError):
    """Variable outside the fixed ring universe."""


class VariableMismatch(RotapermError):
    """Binary operation on polynomials over different variable tuples."""


class MissingAssignment(RotapermError):
    """evaluate() called without a value for some occurring variable."""


class DegenerateInput(RotapermError):
    """Resultant requested in a variable absent from both polynomials."""


class DegreeOverflow(RotapermError):
    """Per-variable exponent would exceed the supported bound (< 64)."""


# --- families / verification / inversion ---

class UnknownName(RotapermError):
    """Family name outside the shipped table."""


class DomainTooLarge(RotapermError):
    """Exhaustive scan rejected: domain above the documented cap."""


class EvenDegree(RotapermError):
    """Search requested for an even extension degree."""


class NotAPermutation(RotapermError):
    """Inverse table requested for a non-bijective family."""


class FormulaInconsistent(RotapermError):
    """A closed-form preimage failed re-evaluation against the forward map."""


class NoPreimage(RotapermError):
    """Defensive: no resolvent root survived filtering (impossible for a permutation)."""


class MultiplePreimages(RotapermError):
    """Defensive: several resolvent roots survived filtering (impossible for a permutation)."""
