"""Domain errors shared across the package.

Everything derives from DomainError so callers (notably the CLI) can
distinguish bad input from a genuine bug.
"""


class DomainError(ValueError):
    """Base class for all input/domain violations raised by rsinv."""


class InvalidPermutation(DomainError):
    """The value sequence is not a rearrangement of 1..n."""


class NotInvolution(DomainError):
    """The permutation is not equal to its own inverse."""


class NotLayered(DomainError):
    """The permutation is not a concatenation of increasing-range decreasing blocks."""


class PatternTooLarge(DomainError):
    """The pattern length exceeds the brute-force containment cap."""


class InvalidTableau(DomainError):
    """The row data does not form a standard Young tableau."""


class DuplicateEntry(DomainError):
    """Row insertion was asked to insert an entry already present."""


class ShapeMismatch(DomainError):
    """The two tableaux of a pair do not have the same shape."""


class InstanceTooLarge(DomainError):
    """The instance exceeds a brute-force enumeration cap."""


class NotGfkTight(DomainError):
    """The permutation is not GFK-tight."""


class Not321Avoiding(DomainError):
    """The permutation contains a decreasing subsequence of length three."""


class Not123Avoiding(DomainError):
    """The permutation contains an increasing subsequence of length three."""


class TooManyRows(DomainError):
    """The tableau has more than two rows."""


class ShortcutInapplicable(DomainError):
    """The reversal shortcut requires both p and its reverse to be involutions."""
