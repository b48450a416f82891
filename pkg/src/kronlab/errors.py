"""Exception types shared across the package."""


class KronlabError(Exception):
    """Base class for all kronlab errors."""


class PartitionSyntaxError(KronlabError, ValueError):
    """A partition or skew-shape string does not match the text grammar."""


class SizeMismatch(KronlabError, ValueError):
    """Operands index symmetric groups of different degrees."""


class NotAdjustable(KronlabError, ValueError):
    """The node is not removable/addable for the given partition."""


class NodeOutsideDiagram(KronlabError, ValueError):
    """The node does not lie inside the Young diagram."""


class NotContained(KronlabError, ValueError):
    """The inner partition is not contained in the outer one."""


class CacheCorrupt(KronlabError, ValueError):
    """A character-table cache file is unreadable or fails validation."""


class NonIntegralResult(KronlabError, ArithmeticError):
    """An inner product of integer class functions failed exact division."""


class TrivialCharacter(KronlabError, ValueError):
    """A degree-one character was passed where the operation excludes it."""


class OutOfRange(KronlabError, ValueError):
    """Requested degree exceeds the configured sweep bound."""


class CrossCheckFailed(KronlabError, AssertionError):
    """Two independent computation paths disagreed; indicates a bug."""
