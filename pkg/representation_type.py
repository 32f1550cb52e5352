"""
Representation Type Module - Finite or infinite representation type

This module answers the question "is H(B_n) of finite representation
type?" with closed-form predicates:

1. Type B with a charge f: finite exactly when n < min(e, 2f + 4)
2. Type B with a generic second parameter: finite exactly when n < 2e
3. Type A (the Hecke algebra of the symmetric group): finite exactly when n < 2e
4. The one-parameter specialisation, where finite type coincides with q
   being a simple root of the Poincare polynomial:
   - e even (f = e/2 - 1): finite exactly when e/2 <= n < e
   - e odd (generic second parameter): finite exactly when e <= n < 2e

No module theory is consulted here; decomposition.py provides the
matching structure on the finite side.
"""
from parameters import (
    ConsistencyError,
    HeckeTypeBError,
    OutOfScopeError,
    format_order,
    is_infinite,
    normalize_params,
    validate_order,
)

FINITE = "FINITE"
INFINITE = "INFINITE"
GENERIC = "GENERIC"


def _check_n(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise HeckeTypeBError(f"n must be a positive integer, got {n!r}")


def rep_type_b(n, e, f0=GENERIC):
    """
    Representation type of H_{q,Q}(B_n).

    Args:
        n (int): Rank, n >= 1
        e (int or float): Order of q, an integer >= 3 or INFINITY
        f0 (int or str): GENERIC when Q is not -q^f for any f, otherwise the
            eigenvalue exponent f0 (normalised to min(f0, e - f0))

    Returns:
        str: FINITE or INFINITE

    Raises:
        OutOfScopeError: If e is 1 or 2.
        HeckeTypeBError: If n, e or f0 is out of range.

    Examples:
        >>> rep_type_b(4, 5, 1)
        'FINITE'
        >>> rep_type_b(4, 4, 2)
        'INFINITE'
        >>> rep_type_b(6, 5)
        'FINITE'
    """
    _check_n(n)
    validate_order(e)
    if f0 == GENERIC:
        if is_infinite(e):
            return FINITE
        return FINITE if n < 2 * e else INFINITE
    params = normalize_params(e, f0)
    return FINITE if n < params.finite_type_bound else INFINITE


def rep_type_a(n, e):
    """
    Representation type of H_q(A_{n-1}), the Hecke algebra of the symmetric group.

    Raises:
        OutOfScopeError: If e = 1 (q = 1).

    Examples:
        >>> rep_type_a(3, 2)
        'FINITE'
        >>> rep_type_a(4, 2)
        'INFINITE'
    """
    _check_n(n)
    if is_infinite(e):
        return FINITE
    if not isinstance(e, int) or isinstance(e, bool) or e < 1:
        raise HeckeTypeBError(f"the order of q must be a positive integer or inf, got {e!r}")
    if e == 1:
        raise OutOfScopeError("out of scope: q = 1 (e = 1) is not handled")
    return FINITE if n < 2 * e else INFINITE


def _poincare_multiplicity(n, order):
    """
    Multiplicity of a primitive order-th root of unity as a root of the
    Poincare polynomial prod_{i=1}^{n} (x^(2i) - 1)/(x - 1) of type B_n.
    """
    return sum(1 for i in range(1, n + 1) if (2 * i) % order == 0)


def _side(multiplicity):
    if multiplicity == 0:
        return "semisimple"
    return "finite" if multiplicity == 1 else "infinite"


def _narrative(e, n, order, multiplicity, low, high):
    if multiplicity == 0:
        return (f"e={e}, n={n}: q is not a root of the Poincare polynomial "
                f"(n < {low}), the algebra is semisimple")
    if multiplicity == 1:
        return (f"e={e}, n={n}: q is a simple root of the Poincare polynomial "
                f"(factor x^{order} - 1), finite type since {low} <= {n} < {high}")
    return (f"e={e}, n={n}: q is a root of multiplicity {multiplicity} of the Poincare "
            f"polynomial, infinite type since {n} >= {high}")


def uno_conjecture_witness(e, n):
    """
    Check the one-parameter case e even, f = e/2 - 1.

    Finite type for a non-semisimple algebra should hold exactly when q is
    a simple root of the Poincare polynomial, that is when e/2 <= n < e.

    Args:
        e (int): Even order of q, e >= 4
        n (int): Rank, n >= 1

    Returns:
        dict: e, n, f, window (low, high), in_window, side ("semisimple",
            "finite" or "infinite"), root_multiplicity, rep_type, narrative

    Raises:
        HeckeTypeBError: If e is odd or infinite.
        ConsistencyError: If the Poincare count disagrees with rep_type_b.

    Examples:
        >>> uno_conjecture_witness(6, 4)["in_window"]
        True
        >>> uno_conjecture_witness(6, 2)["side"]
        'semisimple'
    """
    _check_n(n)
    validate_order(e)
    if is_infinite(e) or e % 2:
        raise HeckeTypeBError(f"the one-parameter charge f = e/2 - 1 needs an even e, got e={format_order(e)}")
    f = e // 2 - 1
    low, high = e // 2, e
    multiplicity = _poincare_multiplicity(n, e)
    rep_type = rep_type_b(n, e, f)
    side = _side(multiplicity)
    if (side == "infinite") != (rep_type == INFINITE):
        raise ConsistencyError(f"Poincare root count and representation type disagree at e={e}, n={n}")
    return {
        "e": e,
        "n": n,
        "f": f,
        "window": (low, high),
        "in_window": low <= n < high,
        "side": side,
        "root_multiplicity": multiplicity,
        "rep_type": rep_type,
        "narrative": _narrative(e, n, e, multiplicity, low, high),
    }


def one_parameter_window(e, n):
    """
    The one-parameter specialisation for either parity of e.

    Even e uses f = e/2 - 1 (see uno_conjecture_witness). Odd e falls under
    the generic case, and q is then a root of x^(2e) - 1, so the finite
    non-semisimple window is e <= n < 2e.

    Returns:
        dict: Same keys as uno_conjecture_witness; f is None for odd e
    """
    _check_n(n)
    validate_order(e)
    if is_infinite(e):
        raise HeckeTypeBError("the one-parameter window needs a finite e")
    if e % 2 == 0:
        return uno_conjecture_witness(e, n)
    low, high = e, 2 * e
    multiplicity = _poincare_multiplicity(n, 2 * e)
    rep_type = rep_type_b(n, e)
    side = _side(multiplicity)
    if (side == "infinite") != (rep_type == INFINITE):
        raise ConsistencyError(f"Poincare root count and representation type disagree at e={e}, n={n}")
    return {
        "e": e,
        "n": n,
        "f": None,
        "window": (low, high),
        "in_window": low <= n < high,
        "side": side,
        "root_multiplicity": multiplicity,
        "rep_type": rep_type,
        "narrative": _narrative(e, n, 2 * e, multiplicity, low, high),
    }
