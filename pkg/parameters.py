"""
Parameters Module - Quantum characteristic, charge and the error hierarchy

This module holds the two numbers every other module is parameterised by:
the order e of q (an integer e >= 3, or INFINITY when q is not a root of
unity) and the normalised charge f that fixes the eigenvalues of T_0. It
also defines the exceptions raised throughout the package.

Key features:
1. Params, an immutable (e, f) pair validated on construction
2. normalize_params, which folds an eigenvalue exponent f0 into 0 <= f <= e/2
3. The renormalised frame (e, e - f) used when the components are swapped
4. parse_order / format_order for the command-line spelling of e ("inf")
5. HeckeTypeBError, OutOfScopeError and ConsistencyError

The cases q = +1 and q = -1 (e = 1 or e = 2) are rejected everywhere with
an OutOfScopeError.
"""
import math
from dataclasses import dataclass
from typing import Union

INFINITY = math.inf

Order = Union[int, float]

_INFINITY_SPELLINGS = ("inf", "infinity", "∞")


class HeckeTypeBError(ValueError):
    """Base class for every domain error (bad literal, bad parameters, violated precondition)."""


class OutOfScopeError(HeckeTypeBError):
    """Raised for inputs outside the range where a computation is defined."""


class ConsistencyError(RuntimeError):
    """Raised when an internal cross-check fails. Seeing one means a bug."""


def is_infinite(e):
    """Return True when e is the INFINITY sentinel."""
    return isinstance(e, float) and math.isinf(e) and e > 0


def format_order(e):
    """
    Format an order for display.

    Args:
        e (int or float): An integer order or INFINITY

    Returns:
        str: "inf" for INFINITY, otherwise the decimal integer
    """
    return "inf" if is_infinite(e) else str(e)


def parse_order(text):
    """
    Parse the command-line spelling of e.

    Args:
        text (str): "inf", "infinity", "∞" or a decimal integer

    Returns:
        int or float: The integer order, or INFINITY

    Raises:
        HeckeTypeBError: If the text is neither an integer nor a spelling of infinity.

    Examples:
        >>> parse_order("7")
        7
        >>> parse_order("inf") == INFINITY
        True
    """
    cleaned = str(text).strip().lower()
    if cleaned in _INFINITY_SPELLINGS:
        return INFINITY
    try:
        return int(cleaned)
    except ValueError:
        raise HeckeTypeBError(f"invalid order of q: {text!r} (expected an integer or 'inf')")


def validate_order(e):
    """Reject orders that are not integers >= 3 or INFINITY; e = 1 and e = 2 are out of scope."""
    if is_infinite(e):
        return
    if not isinstance(e, int) or isinstance(e, bool):
        raise HeckeTypeBError(f"the order of q must be an integer or inf, got {e!r}")
    if e in (1, 2):
        raise OutOfScopeError("out of scope: q = ±1 (e = 1 or e = 2) is not handled")
    if e < 1:
        raise HeckeTypeBError(f"the order of q must be positive, got {e}")


@dataclass(frozen=True)
class Params:
    """
    The pair (e, f) describing H_{q,Q}(B_n) after renormalising T_0.

    Attributes:
        e (int or float): Order of q, an integer >= 3 or INFINITY.
        f (int): Charge, 0 <= f <= e/2 for finite e and any f >= 0 otherwise.
        swapped (bool): True for the frame obtained by renormalising T_0 as
            q^f T_0, where the charge becomes e - f and so lies in [e/2, e].
    """
    e: Order
    f: int
    swapped: bool = False

    def __post_init__(self):
        validate_order(self.e)
        if not isinstance(self.f, int) or isinstance(self.f, bool) or self.f < 0:
            raise HeckeTypeBError(f"the charge f must be a non-negative integer, got {self.f!r}")
        if self.is_finite:
            if self.swapped and not (self.e <= 2 * self.f <= 2 * self.e):
                raise HeckeTypeBError(f"swapped frame needs e/2 <= f <= e, got e={self.e}, f={self.f}")
            if not self.swapped and 2 * self.f > self.e:
                raise HeckeTypeBError(f"charge must satisfy 0 <= f <= e/2, got e={self.e}, f={self.f}")
        elif self.swapped:
            raise HeckeTypeBError("the swapped frame only exists for finite e")

    @property
    def is_finite(self):
        return not is_infinite(self.e)

    @property
    def finite_type_bound(self):
        """min(e, 2f + 4): H(B_n) has finite representation type exactly when n is below it."""
        return min(self.e, 2 * self.f + 4)

    def residues(self):
        """All residues 0, ..., e-1 (finite e only)."""
        if not self.is_finite:
            raise HeckeTypeBError("residues can only be listed for finite e")
        return list(range(self.e))

    def residue(self, content):
        """Reduce a content modulo e; contents are their own residues when e is infinite."""
        return content % self.e if self.is_finite else content

    def renormalized(self):
        """
        The frame obtained by renormalising T_0 as q^f T_0.

        The components of every bipartition are swapped in this frame and
        every residue moves by e - f. Applying it twice returns self.
        """
        if not self.is_finite:
            raise HeckeTypeBError("renormalisation needs a finite e")
        return Params(self.e, self.e - self.f, swapped=not self.swapped)

    def __str__(self):
        text = f"e={format_order(self.e)}, f={self.f}"
        return text + " (swapped)" if self.swapped else text


def normalize_params(e, f0):
    """
    Renormalise the eigenvalue exponent of T_0 into a charge 0 <= f <= e/2.

    With T_0 satisfying (T_0 - 1)(T_0 - q^f0) = 0, replacing f0 by e - f0
    gives an isomorphic algebra, so only min(f0, e - f0) matters.

    Args:
        e (int or float): Order of q, an integer >= 3 or INFINITY
        f0 (int): Exponent with 0 <= f0 < e (any f0 >= 0 when e is infinite)

    Returns:
        Params: The normalised parameters

    Raises:
        OutOfScopeError: If e is 1 or 2.
        HeckeTypeBError: If e or f0 is out of range.

    Examples:
        >>> normalize_params(10, 7).f
        3
        >>> normalize_params(10, 4).f
        4
    """
    validate_order(e)
    if not isinstance(f0, int) or isinstance(f0, bool) or f0 < 0:
        raise HeckeTypeBError(f"f0 must be a non-negative integer, got {f0!r}")
    if is_infinite(e):
        return Params(INFINITY, f0)
    if f0 >= e:
        raise HeckeTypeBError(f"f0 must satisfy 0 <= f0 < e, got f0={f0}, e={e}")
    return Params(e, min(f0, e - f0))
