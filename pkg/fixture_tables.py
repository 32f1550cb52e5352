"""
Fixture Tables Module - Named bipartition families, F-words and printed tables

This module records, as data, the explicit computations that accompany the
classification of representation type:

1. The complete member list of the block with residues {0, ..., e-1} at
   n = e, in terms of the families lambda_k, mu_k and lambda_{k,l}
2. The F-words whose products give the canonical basis elements of that
   block, with the printed expansions they must reproduce
3. The two infinite-type blocks at n = 2f + 4 (charge zero and positive
   charge), their members, words and leading terms
4. The printed decomposition tables, stored exactly as printed, with 0 for
   omitted entries

Nothing here is computed from the Fock space; decomposition.fixture_matrices
regenerates every table and compares it with these values.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from bipartitions import Bipartition, dominance_key
from fock_space import FockVector, LaurentPoly
from jantzen import block_of
from parameters import ConsistencyError, HeckeTypeBError, OutOfScopeError

S4_CASE1 = "S4_CASE1"
S4_F0 = "S4_F0"
S5_CASE1 = "S5_CASE1"
S5_CASE2 = "S5_CASE2"

FIXTURE_TAGS = (S4_CASE1, S4_F0, S5_CASE1, S5_CASE2)

# Rows S^lambda, columns D^mu.
S4_CASE1_PRINTED = (
    (1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (1, 1, 1, 1, 0),
    (1, 0, 0, 1, 1),
)

# Printed transposed: rows D^lambda_1, D^lambda_2; columns S^lambda_1 ... S^lambda_6.
S5_CASE1_PRINTED_TRANSPOSE = (
    (1, 1, 0, 0, 1, 1),
    (0, 1, 1, 1, 1, 0),
)

S5_CASE2_PRINTED = (
    (1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (0, 1, 1, 0, 0),
    (0, 1, 0, 1, 0),
    (1, 1, 1, 1, 1),
)


def rising(a, b, params):
    """F_a F_{a+1} ... F_b in written order; empty when a > b."""
    return [(params.residue(i), 1) for i in range(a, b + 1)]


def falling(a, b, params):
    """F_a F_{a-1} ... F_b in written order; empty when a < b."""
    return [(params.residue(i), 1) for i in range(a, b - 1, -1)]


def letter(i, params, m=1):
    return [(params.residue(i), m)]


def _hook(arm, legs):
    return (arm,) + (1,) * legs if arm > 0 else ()


def _need_finite(params):
    if not params.is_finite:
        raise OutOfScopeError(f"the n = e block needs a finite e, got {params}")


def lambda_k(k, params):
    """lambda_k = ((0),(k,1^(e-k))) for 1 <= k <= e."""
    _need_finite(params)
    if not 1 <= k <= params.e:
        raise HeckeTypeBError(f"lambda_k needs 1 <= k <= e, got k={k}")
    return Bipartition((), _hook(k, params.e - k))


def mu_k(k, params):
    """mu_k = ((k,1^(e-k)),(0)) for 1 <= k <= e."""
    _need_finite(params)
    if not 1 <= k <= params.e:
        raise HeckeTypeBError(f"mu_k needs 1 <= k <= e, got k={k}")
    return Bipartition(_hook(k, params.e - k), ())


def lambda_kl(k, l, params):
    """lambda_{k,l} = ((f-l,1^(e-f-k)),(k,1^l)) for 1 <= k <= e-f and 0 <= l < f."""
    _need_finite(params)
    e, f = params.e, params.f
    if not (1 <= k <= e - f and 0 <= l < f):
        raise HeckeTypeBError(f"lambda_(k,l) needs 1 <= k <= e-f and 0 <= l < f, got k={k}, l={l}")
    return Bipartition(_hook(f - l, e - f - k), _hook(k, l))


def n_equals_e_block(params):
    """
    Name every member of the block with residues {0, ..., e-1} at n = e.

    The families lambda_k and mu_k (1 <= k <= e) and lambda_{k,l}
    (1 <= k <= e-f, 0 <= l < f) are pairwise distinct and exhaust the block.

    Args:
        params (Params): Parameters with finite e

    Returns:
        dict: name ("lambda_3", "mu_1", "lambda_2,0") -> Bipartition

    Raises:
        OutOfScopeError: If e is infinite.
        ConsistencyError: If the names repeat a bipartition or miss a member
            of the enumerated block.
    """
    _need_finite(params)
    e, f = params.e, params.f
    named = {}
    for k in range(1, e + 1):
        named[f"lambda_{k}"] = lambda_k(k, params)
    for k in range(1, e + 1):
        named[f"mu_{k}"] = mu_k(k, params)
    for k in range(1, e - f + 1):
        for l in range(f):
            named[f"lambda_{k},{l}"] = lambda_kl(k, l, params)
    values = set(named.values())
    if len(values) != len(named):
        raise ConsistencyError(f"named members of the n = e block repeat for {params}")
    block = block_of(lambda_k(1, params), params)
    if values != set(block.members):
        raise ConsistencyError(
            f"named members ({len(values)}) differ from the enumerated block ({block.size}) for {params}"
        )
    return named


@dataclass
class WordFixture:
    """
    A printed F-word and what its product must give.

    Attributes:
        name (str): Name of the leading bipartition.
        leader (Bipartition): The bipartition the product is expected to lead with.
        word (list): (residue, multiplicity) letters in written order.
        expected (FockVector): The printed expansion.
        complete (bool): False when the printed expansion ends in "+ ..." and
            lists only the terms it names.
        bracket (FockVector, optional): The printed value of the word with
            its first letter removed.
        column (dict): Decomposition numbers at v = 1, leader included.
    """
    name: str
    leader: Bipartition
    word: List[Tuple[int, int]]
    expected: Optional[FockVector] = None
    complete: bool = True
    bracket: Optional[FockVector] = None
    column: Dict[Bipartition, int] = field(default_factory=dict)


def _vector(*terms):
    """Sum of v^exponent * b over (b, exponent) pairs."""
    total = {}
    for b, exponent in terms:
        total[b] = total.get(b, LaurentPoly()) + LaurentPoly.monomial(exponent)
    return FockVector(total)


def _unit_column(*members):
    return {b: 1 for b in members}


def _lambda_k_word(k, params):
    e, f = params.e, params.f
    if f == 0:
        word = rising(k, e - 1, params) + falling(k - 1, 1, params) + letter(0, params)
        expected = _vector(
            (lambda_k(k, params), 0), (lambda_k(k + 1, params), 1),
            (mu_k(k, params), 1), (mu_k(k + 1, params), 2),
        )
    elif k < e - f:
        word = rising(f + k, e - 1, params) + letter(0, params) + falling(f + k - 1, f + 1, params) + rising(1, f, params)
        expected = _vector(
            (lambda_k(k, params), 0), (lambda_k(k + 1, params), 1),
            (lambda_kl(k + 1, f - 1, params), 1), (lambda_kl(k, f - 1, params), 2),
        )
    elif k == e - f:
        word = rising(f + k, e - 1, params) + letter(0, params) + falling(f + k - 1, f + 1, params) + rising(1, f, params)
        expected = _vector(
            (lambda_k(k, params), 0), (lambda_k(k + 1, params), 1),
            (lambda_kl(e - f, f - 1, params), 2),
        )
    else:
        word = (
            rising(k - e + f, f - 1, params) + falling(k - e + f - 1, 0, params)
            + falling(e - 1, f + 1, params) + letter(f, params)
        )
        expected = _vector(
            (lambda_k(k, params), 0), (lambda_k(k + 1, params), 1),
            (lambda_kl(e - f, e - k, params), 1), (lambda_kl(e - f, e - k - 1, params), 2),
        )
    column = {b: c.evaluate(1) for b, c in expected.terms.items()}
    return WordFixture(f"lambda_{k}", lambda_k(k, params), word, expected, True, None, column)


def _lambda_kl_word(k, l, params):
    e, f = params.e, params.f
    leader = lambda_kl(k, l, params)
    name = f"lambda_{k},{l}"
    if l == 0:
        word = falling(f + k - 1, f, params) + rising(f + k, e - 1, params) + falling(f - 1, 0, params)
        if k == 1:
            expected = _vector((leader, 0), (mu_k(f, params), 1), (mu_k(f + 1, params), 2))
        else:
            expected = _vector(
                (leader, 0), (lambda_kl(k - 1, 0, params), 1),
                (mu_k(f + k - 1, params), 1), (mu_k(f + k, params), 2),
            )
        column = {b: c.evaluate(1) for b, c in expected.terms.items()}
        return WordFixture(name, leader, word, expected, True, None, column)
    if k == 1:
        word = rising(f - l, f - 1, params) + letter(f, params) + rising(f + 1, e - 1, params) + falling(f - l - 1, 0, params)
        bracket = _vector(
            (Bipartition(_hook(f - l, e - f - 1), _hook(1, l - 1)), 0),
            (Bipartition(_hook(f - l, e - f + l - 1), ()), 1),
        )
        column = _unit_column(leader, lambda_kl(1, l - 1, params), mu_k(f - l, params), mu_k(f - l + 1, params))
    else:
        word = rising(f - l, f - 1, params) + falling(f + k - 1, f, params) + rising(f + k, e - 1, params) + falling(f - l - 1, 0, params)
        bracket = _vector(
            (Bipartition(_hook(f - l, e - f - k), _hook(k, l - 1)), 0),
            (Bipartition(_hook(f - l, e - f - k + 1), _hook(k - 1, l - 1)), 1),
        )
        column = _unit_column(
            leader, lambda_kl(k, l - 1, params), lambda_kl(k - 1, l, params), lambda_kl(k - 1, l - 1, params)
        )
    return WordFixture(name, leader, word, None, True, bracket, column)


def four_section_words(params):
    """
    The F-words for every Kleshchev member of the n = e block.

    For f > 0 these are the printed words for lambda_k (1 <= k < e) and
    lambda_{k,l}. For f = 0 the word F_k...F_{e-1}F_{k-1}...F_1F_0 gives
    lambda_k + v lambda_{k+1} + v mu_k + v^2 mu_{k+1}.

    Returns:
        list: WordFixture values, lambda_k first
    """
    _need_finite(params)
    e, f = params.e, params.f
    fixtures = [_lambda_k_word(k, params) for k in range(1, e)]
    for k in range(1, e - f + 1):
        for l in range(f):
            fixtures.append(_lambda_kl_word(k, l, params))
    return fixtures


def n_equals_e_kleshchev(params):
    """The Kleshchev members of the n = e block: lambda_k for k < e and every lambda_{k,l}."""
    _need_finite(params)
    e, f = params.e, params.f
    members = [lambda_k(k, params) for k in range(1, e)]
    members += [lambda_kl(k, l, params) for k in range(1, e - f + 1) for l in range(f)]
    return members


def s5_case1_members(params):
    """lambda_1 ... lambda_6 of the block with residues {-1, 0, 0, 1} at f = 0."""
    return [
        Bipartition((), (2, 2)),
        Bipartition((1,), (2, 1)),
        Bipartition((1, 1), (2,)),
        Bipartition((2,), (1, 1)),
        Bipartition((2, 1), (1,)),
        Bipartition((2, 2), ()),
    ]


def s5_case1_words(params):
    lam = s5_case1_members(params)
    first = WordFixture(
        "lambda_1", lam[0],
        letter(0, params) + letter(1, params) + letter(-1, params) + letter(0, params),
        _vector((lam[0], 0), (lam[1], 1), (lam[4], 1), (lam[5], 2)),
    )
    second = WordFixture(
        "lambda_2", lam[1],
        letter(1, params) + letter(-1, params) + letter(0, params, 2),
        _vector((lam[1], 0), (lam[3], 1), (lam[2], 1), (lam[4], 2)),
    )
    for fixture in (first, second):
        fixture.column = {b: c.evaluate(1) for b, c in fixture.expected.terms.items()}
    return [first, second]


def s5_case2_members(params):
    """lambda_1 ... lambda_5 of the block with residues {-1, 0, 0, 1, 1, ..., f, f, f+1}."""
    f = params.f
    return [
        Bipartition((), (2,) * (f + 2)),
        Bipartition((1,), (2,) * (f + 1) + (1,)),
        Bipartition((1, 1), (2,) * (f + 1)),
        Bipartition((2,), (2,) * f + (1, 1)),
        Bipartition((2, 1), (2,) * f + (1,)),
    ]


def s5_case2_words(params):
    """
    Words for lambda_1 ... lambda_4. Only the lambda_2 expansion is printed
    in full; the others list their leader and the terms that follow it.
    """
    f = params.f
    lam = s5_case2_members(params)
    fixtures = [
        WordFixture(
            "lambda_1", lam[0],
            rising(0, f + 1, params) + letter(-1, params) + rising(0, f, params),
            _vector((lam[0], 0), (lam[1], 1), (lam[4], 1)), complete=False,
        ),
        WordFixture(
            "lambda_2", lam[1],
            rising(1, f + 1, params) + letter(-1, params) + letter(0, params, 2) + rising(1, f, params),
            _vector((lam[1], 0), (lam[3], 1), (lam[2], 1), (lam[4], 2)),
        ),
        WordFixture(
            "lambda_3", lam[2],
            rising(1, f + 1, params) + rising(0, f, params) + letter(-1, params) + letter(0, params),
            _vector((lam[2], 0), (lam[4], 1)), complete=False,
        ),
        WordFixture(
            "lambda_4", lam[3],
            letter(-1, params) + rising(2, f + 1, params) + letter(0, params) + letter(1, params, 2)
            + rising(2, f, params) + letter(0, params),
            _vector((lam[3], 0), (lam[4], 1)), complete=False,
        ),
    ]
    for fixture in fixtures:
        fixture.column = {b: c.evaluate(1) for b, c in fixture.expected.terms.items()}
    return fixtures


@dataclass
class FixtureTable:
    """
    A printed decomposition table and the words that regenerate its columns.

    Attributes:
        tag (str): One of FIXTURE_TAGS.
        rows (list): Specht labels in printed order.
        cols (list): Simple labels in printed order.
        names (dict): Bipartition -> printed name, for messages and ledgers.
        printed (tuple): Entries as printed, row by row.
        words (dict): Column label -> WordFixture; a missing label means the
            column is fixed by unitriangularity.
        kleshchev (list): Members the accompanying text declares Kleshchev.
    """
    tag: str
    rows: List[Bipartition]
    cols: List[Bipartition]
    names: Dict[Bipartition, str]
    printed: Tuple[Tuple[int, ...], ...]
    words: Dict[Bipartition, WordFixture]
    kleshchev: List[Bipartition]


def _check_range(tag, params):
    e, f = params.e, params.f
    if tag == S4_CASE1:
        ok = params.is_finite and e >= 5 and f >= 2
        need = "finite e >= 5 and f >= 2"
    elif tag == S4_F0:
        ok = params.is_finite and f == 0
        need = "finite e and f = 0"
    elif tag == S5_CASE1:
        ok = f == 0 and e >= 5
        need = "f = 0 and e >= 5"
    elif tag == S5_CASE2:
        ok = f >= 1 and e > 2 * f + 4
        need = "f >= 1 and e > 2f + 4"
    else:
        raise HeckeTypeBError(f"unknown fixture tag {tag!r} (expected one of {', '.join(FIXTURE_TAGS)})")
    if not ok:
        raise OutOfScopeError(f"fixture {tag} needs {need}, got {params}")


def fixture_table(tag, params):
    """
    The printed table for a fixture tag at the given parameters.

    Raises:
        HeckeTypeBError: For an unknown tag.
        OutOfScopeError: If the parameters lie outside the range of the table.
    """
    _check_range(tag, params)
    if tag == S4_CASE1:
        f = params.f
        named = {
            "lambda_1": lambda_k(1, params),
            "lambda_2": lambda_k(2, params),
            "lambda_3,f-1": lambda_kl(3, f - 1, params),
            "lambda_2,f-1": lambda_kl(2, f - 1, params),
            "lambda_1,f-1": lambda_kl(1, f - 1, params),
        }
        words = {fixture.leader: fixture for fixture in four_section_words(params)}
        rows = [named[name] for name in ("lambda_1", "lambda_2", "lambda_2,f-1", "lambda_1,f-1")]
        cols = [named[name] for name in ("lambda_1", "lambda_2", "lambda_3,f-1", "lambda_2,f-1", "lambda_1,f-1")]
        return FixtureTable(
            tag, rows, cols, {b: name for name, b in named.items()}, S4_CASE1_PRINTED,
            {b: words[b] for b in cols}, n_equals_e_kleshchev(params),
        )
    if tag == S4_F0:
        named = n_equals_e_block(params)
        rows = sorted(named.values(), key=dominance_key)
        cols = [lambda_k(k, params) for k in range(1, params.e)]
        printed = tuple(
            tuple(
                1 if row in (lambda_k(k, params), lambda_k(k + 1, params), mu_k(k, params), mu_k(k + 1, params)) else 0
                for k in range(1, params.e)
            )
            for row in rows
        )
        words = {fixture.leader: fixture for fixture in four_section_words(params)}
        return FixtureTable(
            tag, rows, cols, {b: name for name, b in named.items()}, printed, words,
            n_equals_e_kleshchev(params),
        )
    if tag == S5_CASE1:
        members = s5_case1_members(params)
        printed = tuple(zip(*S5_CASE1_PRINTED_TRANSPOSE))
        words = {fixture.leader: fixture for fixture in s5_case1_words(params)}
        return FixtureTable(
            tag, members, members[:2], {b: f"lambda_{i}" for i, b in enumerate(members, start=1)},
            printed, words, members[:2],
        )
    members = s5_case2_members(params)
    words = {fixture.leader: fixture for fixture in s5_case2_words(params)}
    return FixtureTable(
        tag, members, members, {b: f"lambda_{i}" for i, b in enumerate(members, start=1)},
        S5_CASE2_PRINTED, words, members,
    )
