"""Exception types shared across the package."""


class TreematchError(Exception):
    """Base class for all treematch errors."""


class NotATree(TreematchError):
    """Edge list does not describe a tree (cycle, disconnection, bad edge)."""


class BadFamilyParams(TreematchError):
    """Parameters outside a tree family's domain."""


class SpecParseError(TreematchError):
    """Unparseable family or weight-family text."""


class OrderTooLarge(TreematchError):
    """Requested order exceeds the enumeration cap."""


class OrderTooSmall(TreematchError):
    """Operation undefined below a minimum order."""


class TooLargeForOracle(TreematchError):
    """Brute-force enumeration refused to avoid exponential blowup."""


class TooLargeForSymbolic(TreematchError):
    """Symbolic index construction refused for very large trees."""


class ParityMismatch(TreematchError):
    """Order and avoided-vertex count have incompatible parity."""


class InfeasibleParity(TreematchError):
    """No feasible leaf distribution exists for these chain parameters."""


class MixedKinds(TreematchError):
    """Symbolic indices of different kinds cannot be compared."""


class NonPositiveParameter(TreematchError):
    """Weight-family parameter outside its admissible range."""


class OddOrder(TreematchError):
    """Operation defined for even orders only."""
