"""
Fock Space Module - Laurent polynomials and the F_i / E_i action on bipartitions

The Fock space is the free Z[v, v^-1]-module with basis the bipartitions.
This module implements it exactly:

1. LaurentPoly, sparse integer Laurent polynomials in v
2. Balanced quantum integers [m] = (v^m - v^-m)/(v - v^-1) and exact division
3. FockVector, finite formal sums of bipartitions of one size
4. F_i and E_i with the v-exponents N^l_i and N^r_i, and divided powers F_i^(m)
5. Products of divided powers applied to the empty bipartition
6. Recognising a canonical basis element mu + sum d_{lambda mu}(v) lambda with
   d_{lambda mu}(v) in vZ[v], and specialising it at v = 1

Words such as "F0,F1,F4,F0" are written like operators: the rightmost letter
acts first.
"""
import re
from fractions import Fraction

from bipartitions import (
    EMPTY,
    arrow_targets,
    dominance_key,
    remove_node,
    removable_nodes,
    strictly_dominates,
)
from parameters import HeckeTypeBError


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a remainder."""


class LaurentPoly:
    """
    An integer Laurent polynomial in v, stored as {exponent: coefficient}.

    Zero coefficients are never stored, so equality is structural. Instances
    are treated as immutable.
    """
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            if coefficient:
                cleaned[int(exponent)] = int(coefficient)
        self.terms = cleaned

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def lowest_exponent(self):
        return min(self.terms) if self.terms else None

    @property
    def highest_exponent(self):
        return max(self.terms) if self.terms else None

    @property
    def constant_term(self):
        return self.terms.get(0, 0)

    def evaluate(self, v=1):
        """Value at an integer v; v = 1 gives the sum of the coefficients."""
        if v == 1:
            return sum(self.terms.values())
        total = sum(c * Fraction(v) ** k for k, c in self.terms.items())
        return int(total) if total.denominator == 1 else total

    def as_pairs(self):
        """[[exponent, coefficient], ...] sorted by exponent."""
        return [[k, self.terms[k]] for k in sorted(self.terms)]

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self.terms.items()))!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exponent in sorted(self.terms, reverse=True):
            coefficient = self.terms[exponent]
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = "v" if exponent == 1 else f"v^{exponent}"
                body = power if abs(coefficient) == 1 else f"{abs(coefficient)}{power}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)


def quantum_integer(m):
    """
    The balanced quantum integer [m] = v^(m-1) + v^(m-3) + ... + v^(1-m).

    Example:
        >>> str(quantum_integer(3))
        'v^2 + 1 + v^-2'
    """
    if m < 0:
        raise HeckeTypeBError(f"quantum integers need m >= 0, got {m}")
    return LaurentPoly({m - 1 - 2 * k: 1 for k in range(m)})


def quantum_factorial(m):
    """[m]! = [1][2]...[m]."""
    result = ONE
    for j in range(1, m + 1):
        result = result * quantum_integer(j)
    return result


def exact_divide(p, q):
    """
    Divide p by q in Z[v, v^-1], insisting on a zero remainder.

    Args:
        p (LaurentPoly): Dividend
        q (LaurentPoly): Non-zero divisor

    Returns:
        LaurentPoly: The quotient

    Raises:
        ZeroDivisionError: If q is zero.
        InexactDivisionError: If q does not divide p.
    """
    if not q:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not p:
        return LaurentPoly()
    lead_exponent = q.highest_exponent
    lead_coefficient = q.terms[lead_exponent]
    floor = p.lowest_exponent - q.lowest_exponent
    quotient = {}
    remainder = p
    while remainder:
        shift = remainder.highest_exponent - lead_exponent
        coefficient, leftover = divmod(remainder.terms[remainder.highest_exponent], lead_coefficient)
        if shift < floor or leftover:
            raise InexactDivisionError(f"{q} does not divide {p}")
        quotient[shift] = coefficient
        remainder = remainder - LaurentPoly.monomial(shift, coefficient) * q
    return LaurentPoly(quotient)


class FockVector:
    """
    A finite sum of bipartitions with LaurentPoly coefficients.

    All bipartitions in one vector have the same size.
    """
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        size = None
        for b, coefficient in (terms or {}).items():
            if isinstance(coefficient, int):
                coefficient = LaurentPoly.constant(coefficient)
            if not coefficient:
                continue
            if size is None:
                size = b.size
            elif b.size != size:
                raise HeckeTypeBError("a Fock vector cannot mix bipartitions of different sizes")
            cleaned[b] = coefficient
        self.terms = cleaned

    @classmethod
    def basis(cls, b):
        """The basis vector b."""
        return cls({b: ONE})

    @property
    def size(self):
        """Common size of the support, or None for the zero vector."""
        for b in self.terms:
            return b.size
        return None

    def coefficient(self, b):
        return self.terms.get(b, LaurentPoly())

    def support(self):
        """Support ordered by increasing dominance (a linear extension), so a leader comes first."""
        return sorted(self.terms, key=dominance_key)

    def items(self):
        return [(b, self.terms[b]) for b in self.support()]

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        terms = dict(self.terms)
        for b, coefficient in other.terms.items():
            terms[b] = terms.get(b, LaurentPoly()) + coefficient
        return FockVector(terms)

    def __neg__(self):
        return FockVector({b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return FockVector({b: scalar * c for b, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"FockVector({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for b, coefficient in self.items():
            if coefficient == ONE:
                pieces.append(b.display())
            elif len(coefficient.terms) == 1 and coefficient.constant_term == 0:
                pieces.append(f"{coefficient} {b.display()}")
            else:
                pieces.append(f"({coefficient}) {b.display()}")
        return " + ".join(pieces)


def _n_left(lam, mu, params, i):
    """N^l_i(lam, mu) = #{lam -i-> alpha : mu ⊳ alpha} - #{beta -i-> mu : beta ⊳ lam}."""
    below = sum(1 for alpha in arrow_targets(lam, params, i) if strictly_dominates(mu, alpha))
    above = sum(
        1 for node in removable_nodes(mu, params, i)
        if strictly_dominates(remove_node(mu, node), lam)
    )
    return below - above


def _n_right(nu, lam, params, i):
    """N^r_i(nu, lam) = #{nu -i-> alpha : alpha ⊳ lam} - #{beta -i-> lam : nu ⊳ beta}."""
    above = sum(1 for alpha in arrow_targets(nu, params, i) if strictly_dominates(alpha, lam))
    below = sum(
        1 for node in removable_nodes(lam, params, i)
        if strictly_dominates(nu, remove_node(lam, node))
    )
    return above - below


def apply_f(u, i, params):
    """
    F_i u, extended linearly from F_i lam = sum over lam -i-> mu of v^(N^l_i(lam, mu)) mu.

    Example:
        With e = 5, f = 0, F_0 of the empty bipartition is v ((1),(0)) + ((0),(1)).
    """
    terms = {}
    for lam, coefficient in u.terms.items():
        for mu in arrow_targets(lam, params, i):
            term = LaurentPoly.monomial(_n_left(lam, mu, params, i)) * coefficient
            terms[mu] = terms.get(mu, LaurentPoly()) + term
    return FockVector(terms)


def apply_e(u, i, params):
    """E_i u, extended linearly from E_i lam = sum over nu -i-> lam of v^(-N^r_i(nu, lam)) nu."""
    terms = {}
    for lam, coefficient in u.terms.items():
        for node in removable_nodes(lam, params, i):
            nu = remove_node(lam, node)
            term = LaurentPoly.monomial(-_n_right(nu, lam, params, i)) * coefficient
            terms[nu] = terms.get(nu, LaurentPoly()) + term
    return FockVector(terms)


def apply_f_divided(u, i, m, params):
    """
    The divided power F_i^(m) u = F_i^m u / [m]!.

    Raises:
        HeckeTypeBError: If m < 1.
        InexactDivisionError: If some coefficient of F_i^m u is not divisible by [m]!.
    """
    if m < 1:
        raise HeckeTypeBError(f"divided powers need m >= 1, got {m}")
    result = u
    for _ in range(m):
        result = apply_f(result, i, params)
    if m == 1:
        return result
    factorial = quantum_factorial(m)
    return FockVector({b: exact_divide(c, factorial) for b, c in result.terms.items()})


_LETTER = re.compile(r"^F(-?\d+)(?:\^(\d+))?$")


def parse_word(text, params):
    """
    Parse a word such as "F0,F1,F4,F0" or "F0^2,F1" into [(residue, multiplicity), ...].

    Letters stay in written order. F-1 is accepted (it is F_{e-1} for finite e).

    Raises:
        HeckeTypeBError: If a letter is malformed or has multiplicity 0.
    """
    word = []
    for token in str(text).replace(" ", "").split(","):
        if not token:
            continue
        match = _LETTER.match(token)
        if not match:
            raise HeckeTypeBError(f"malformed word letter {token!r} (expected F<i> or F<i>^<m>)")
        multiplicity = int(match.group(2)) if match.group(2) else 1
        if multiplicity < 1:
            raise HeckeTypeBError(f"divided power exponent must be positive in {token!r}")
        word.append((params.residue(int(match.group(1))), multiplicity))
    return word


def format_word(word):
    """Inverse of parse_word."""
    return ",".join(f"F{i}" if m == 1 else f"F{i}^{m}" for i, m in word)


def f_product(word, params, start=None):
    """
    F_{i_1}^(m_1) ... F_{i_l}^(m_l) applied to start (the empty bipartition by default).

    Args:
        word (list): (residue, multiplicity) letters in written order
        params (Params): Parameters fixing the residues
        start (FockVector, optional): Vector to act on

    Returns:
        FockVector: The product
    """
    u = start if start is not None else FockVector.basis(EMPTY)
    for i, m in reversed(word):
        u = apply_f_divided(u, i, m, params)
    return u


def leading_terms(u, labels):
    """u restricted to the given bipartitions, to compare with a partially written expansion."""
    wanted = set(labels)
    return FockVector({b: c for b, c in u.terms.items() if b in wanted})


class CanonicalCandidate:
    """
    A vector mu + sum d_{lambda mu}(v) lambda with every d_{lambda mu}(v) in vZ[v]
    and every lambda strictly dominating mu.
    """

    def __init__(self, leader, tail):
        self.leader = leader
        self.tail = dict(tail)

    def as_vector(self):
        terms = dict(self.tail)
        terms[self.leader] = ONE
        return FockVector(terms)

    def __repr__(self):
        return f"CanonicalCandidate(leader={self.leader.display()}, tail={len(self.tail)} terms)"


def as_canonical_candidate(u):
    """
    Recognise u as a canonical basis element, or return None.

    The leader is the only term whose coefficient has a non-zero constant
    term; that coefficient must be exactly 1. Every other coefficient must
    lie in vZ[v] and sit on a strict dominator of the leader.
    """
    leaders = [b for b, c in u.terms.items() if c.constant_term != 0]
    if len(leaders) != 1:
        return None
    leader = leaders[0]
    if u.terms[leader] != ONE:
        return None
    tail = {}
    for b, coefficient in u.terms.items():
        if b == leader:
            continue
        if coefficient.lowest_exponent < 1 or not strictly_dominates(b, leader):
            return None
        tail[b] = coefficient
    return CanonicalCandidate(leader, tail)


def decomp_column(candidate):
    """Decomposition numbers d_{lambda mu} = d_{lambda mu}(1) of a candidate, leader included."""
    column = {candidate.leader: 1}
    for b, coefficient in candidate.tail.items():
        column[b] = coefficient.evaluate(1)
    return column
