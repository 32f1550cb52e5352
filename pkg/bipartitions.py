"""
Bipartitions Module - Partitions, bipartitions, nodes and their combinatorics

This module provides the objects that index everything else in the package:
Specht modules, simple modules and Fock-space basis vectors are all labelled
by bipartitions. It handles:

1. Partition and Bipartition values with a canonical (zero-free) form
2. Nodes, contents and residues, c(x) = j - i + (k-1)f
3. The dominance order and a linear extension of it
4. Addable and removable nodes, i-arrows lambda -> mu
5. Rim hooks with their leg lengths and foot nodes
6. Enumeration of all bipartitions of n
7. The literal syntax used on the command line, e.g. "4,2,1|2,2,1"

Nodes are ordered by the "below" relation: every row of the first component
comes before every row of the second, and rows run top to bottom.
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Optional, Tuple

from parameters import HeckeTypeBError, OutOfScopeError

MAX_ENUMERATION_SIZE = 30

Partition = Tuple[int, ...]


def as_partition(parts):
    """
    Validate a sequence of parts and return it in canonical form.

    Trailing zeros are allowed and stripped, so (2, 1, 0) and (2, 1) are the
    same partition and "0" spells the empty one.

    Args:
        parts (iterable of int): Weakly decreasing non-negative integers

    Returns:
        tuple: The parts without zeros

    Raises:
        HeckeTypeBError: If a part is negative, not an integer, or the
            sequence increases somewhere.
    """
    parts = tuple(parts)
    for part in parts:
        if not isinstance(part, int) or isinstance(part, bool) or part < 0:
            raise HeckeTypeBError(f"partition parts must be non-negative integers, got {parts!r}")
    for left, right in zip(parts, parts[1:]):
        if left < right:
            raise HeckeTypeBError(f"partition parts must be weakly decreasing, got {parts!r}")
    return tuple(part for part in parts if part > 0)


def conjugate(parts):
    """The conjugate partition (column lengths)."""
    if not parts:
        return ()
    return tuple(sum(1 for part in parts if part >= col) for col in range(1, parts[0] + 1))


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n in decreasing lexicographic order."""
    if n == 0:
        return ((),)
    result = []

    def extend(remaining, largest, prefix):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            extend(remaining - part, part, prefix)
            prefix.pop()

    extend(n, n, [])
    return tuple(result)


class Node(NamedTuple):
    """A node (row, col, comp) of a bipartition diagram; rows and columns start at 1."""
    row: int
    col: int
    comp: int

    def below_key(self):
        """Sort key realising "y is below x": component first, then row."""
        return (self.comp, self.row)


@dataclass(frozen=True)
class Bipartition:
    """
    An ordered pair of partitions (lambda^(1), lambda^(2)).

    Both components are stored as zero-free tuples, so equality and hashing
    are structural.
    """
    first: Partition = ()
    second: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "first", as_partition(self.first))
        object.__setattr__(self, "second", as_partition(self.second))

    @property
    def size(self):
        return sum(self.first) + sum(self.second)

    def component(self, k):
        """Component k (1 or 2)."""
        if k == 1:
            return self.first
        if k == 2:
            return self.second
        raise HeckeTypeBError(f"component must be 1 or 2, got {k!r}")

    def with_component(self, k, parts):
        if k == 1:
            return Bipartition(parts, self.second)
        return Bipartition(self.first, parts)

    def swapped(self):
        """(lambda^(2), lambda^(1))."""
        return Bipartition(self.second, self.first)

    def contains(self, node):
        parts = self.component(node.comp)
        return 1 <= node.row <= len(parts) and 1 <= node.col <= parts[node.row - 1]

    def nodes(self):
        """Every node of the diagram, ordered by the below relation and then by column."""
        return [
            Node(row, col, comp)
            for comp in (1, 2)
            for row, part in enumerate(self.component(comp), start=1)
            for col in range(1, part + 1)
        ]

    def display(self):
        """Display form used in text output, e.g. ((0),(2,2))."""
        def show(parts):
            return "(" + ",".join(str(part) for part in parts) + ")" if parts else "(0)"
        return f"({show(self.first)},{show(self.second)})"

    def __str__(self):
        return format_bipartition(self)


EMPTY = Bipartition()


def parse_bipartition(text):
    """
    Parse a bipartition literal.

    The two components are comma-separated parts joined by "|"; an empty
    component is the empty string (or "0").

    Args:
        text (str): Literal such as "4,2,1|2,2,1", "|2,2" or "|"

    Returns:
        Bipartition: The parsed bipartition

    Raises:
        HeckeTypeBError: If the literal is malformed.

    Examples:
        >>> parse_bipartition("|2,2")
        Bipartition(first=(), second=(2, 2))
    """
    pieces = str(text).strip().split("|")
    if len(pieces) != 2:
        raise HeckeTypeBError(f"bipartition literal needs exactly one '|': {text!r}")
    components = []
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            components.append(())
            continue
        try:
            parts = [int(token) for token in piece.split(",")]
        except ValueError:
            raise HeckeTypeBError(f"malformed bipartition literal: {text!r}")
        components.append(as_partition(parts))
    return Bipartition(components[0], components[1])


def format_bipartition(b):
    """Inverse of parse_bipartition: ((4,2,1),(2,2,1)) becomes "4,2,1|2,2,1"."""
    return ",".join(map(str, b.first)) + "|" + ",".join(map(str, b.second))


def content(node, params):
    """
    Content c(x) = j - i + (k-1)f of a node x = (i, j, k).

    Args:
        node (Node): The node
        params (Params): Supplies the charge f

    Returns:
        int: The content

    Example:
        >>> content(Node(3, 1, 1), Params(5, 2))
        -2
    """
    return node.col - node.row + (node.comp - 1) * params.f


def residue(node, params):
    """res(x) = c(x) mod e; the content itself when e is infinite."""
    return params.residue(content(node, params))


def residue_multiset(b, params):
    """
    The multiset of residues of the nodes of b.

    Returns:
        tuple: Sorted (residue, multiplicity) pairs, the canonical block label
    """
    counts = Counter(residue(node, params) for node in b.nodes())
    return tuple(sorted(counts.items()))


def content_multiset(b, params):
    """Same as residue_multiset but without reducing modulo e."""
    counts = Counter(content(node, params) for node in b.nodes())
    return tuple(sorted(counts.items()))


def format_residues(multiset):
    """Render a residue multiset as {0,0,1,4}."""
    values = [str(r) for r, mult in multiset for _ in range(mult)]
    return "{" + ",".join(values) + "}"


class Dominance(Enum):
    STRICTLY_DOMINATES = "strictly dominates"
    EQUAL = "equal"
    STRICTLY_DOMINATED = "strictly dominated"
    INCOMPARABLE = "incomparable"


def _partial_sums(b, length1, length2):
    sums = []
    running = 0
    for i in range(length1):
        running += b.first[i] if i < len(b.first) else 0
        sums.append(running)
    running = sum(b.first)
    for j in range(length2):
        running += b.second[j] if j < len(b.second) else 0
        sums.append(running)
    return sums


def dominance(a, b):
    """
    Compare two bipartitions of the same size in the dominance order.

    a dominates b when every partial sum of a^(1) is at least the matching
    partial sum of b^(1), and |a^(1)| plus every partial sum of a^(2) is at
    least the matching quantity for b.

    Args:
        a (Bipartition): First bipartition
        b (Bipartition): Second bipartition, |b| = |a|

    Returns:
        Dominance: How a relates to b

    Raises:
        HeckeTypeBError: If the sizes differ.
    """
    if a.size != b.size:
        raise HeckeTypeBError(f"dominance needs equal sizes, got {a.size} and {b.size}")
    if a == b:
        return Dominance.EQUAL
    length1 = max(len(a.first), len(b.first))
    length2 = max(len(a.second), len(b.second))
    sums_a = _partial_sums(a, length1, length2)
    sums_b = _partial_sums(b, length1, length2)
    a_above = all(x >= y for x, y in zip(sums_a, sums_b))
    b_above = all(y >= x for x, y in zip(sums_a, sums_b))
    if a_above:
        return Dominance.STRICTLY_DOMINATES
    if b_above:
        return Dominance.STRICTLY_DOMINATED
    return Dominance.INCOMPARABLE


def dominates(a, b):
    """a ⊵ b."""
    return dominance(a, b) in (Dominance.STRICTLY_DOMINATES, Dominance.EQUAL)


def strictly_dominates(a, b):
    """a ⊳ b."""
    return dominance(a, b) is Dominance.STRICTLY_DOMINATES


def dominance_key(b):
    """
    Sort key refining dominance: if a ⊳ b then dominance_key(a) > dominance_key(b).

    The key compares |lambda^(1)| first, then the parts of lambda^(1)
    lexicographically, then the parts of lambda^(2).
    """
    return (sum(b.first), b.first, b.second)


def _addable_in(parts):
    rows = []
    for row in range(1, len(parts) + 2):
        above = parts[row - 2] if row >= 2 else None
        current = parts[row - 1] if row <= len(parts) else 0
        if above is None or above > current:
            rows.append((row, current + 1))
    return rows


def _removable_in(parts):
    return [
        (row, part)
        for row, part in enumerate(parts, start=1)
        if row == len(parts) or part > parts[row]
    ]


def addable_nodes(b, params, r=None):
    """
    Addable nodes of b, ordered top to bottom by the below relation.

    Args:
        b (Bipartition): The bipartition
        params (Params): Parameters fixing the residues
        r (int, optional): Only return nodes of this residue

    Returns:
        list: Addable Node values
    """
    found = [
        Node(row, col, comp)
        for comp in (1, 2)
        for row, col in _addable_in(b.component(comp))
    ]
    if r is not None:
        found = [node for node in found if residue(node, params) == r]
    return found


def removable_nodes(b, params, r=None):
    """Removable nodes of b, ordered top to bottom; see addable_nodes."""
    found = [
        Node(row, col, comp)
        for comp in (1, 2)
        for row, col in _removable_in(b.component(comp))
    ]
    if r is not None:
        found = [node for node in found if residue(node, params) == r]
    return found


def add_node(b, node):
    """The bipartition with diagram [b] ∪ {node}; node must be addable."""
    parts = list(b.component(node.comp))
    if node.row == len(parts) + 1 and node.col == 1:
        parts.append(1)
    elif node.row <= len(parts) and parts[node.row - 1] + 1 == node.col:
        parts[node.row - 1] += 1
    else:
        raise HeckeTypeBError(f"node {tuple(node)} is not addable to {b}")
    return b.with_component(node.comp, as_partition(parts))


def remove_node(b, node):
    """The bipartition with diagram [b] minus {node}; node must be removable."""
    parts = list(b.component(node.comp))
    if not (1 <= node.row <= len(parts) and parts[node.row - 1] == node.col):
        raise HeckeTypeBError(f"node {tuple(node)} is not removable from {b}")
    parts[node.row - 1] -= 1
    return b.with_component(node.comp, as_partition(parts))


def arrow_targets(b, params, i):
    """Every mu with b -i-> mu, in the order of the addable i-nodes."""
    return [add_node(b, node) for node in addable_nodes(b, params, i)]


@dataclass(frozen=True)
class RimHook:
    """
    The rim hook r_x of a node x.

    Attributes:
        corner (Node): The node x = (i, j, k) the hook belongs to.
        cells (tuple): Cells of the border strip, from row i down to row lambda'_j.
        leg_length (int): Number of rows met by the strip, minus one.
        foot (Node): The lowest (and leftmost) cell, (lambda'_j, j, k).
        remainder (Bipartition): The bipartition left once the strip is removed.
    """
    corner: Node
    cells: Tuple[Node, ...]
    leg_length: int
    foot: Node
    remainder: Bipartition

    @property
    def size(self):
        return len(self.cells)


def rim_hook_at(b, x):
    """
    The rim hook of b whose corner is the node x.

    The strip runs along the border of the component containing x from
    (i, lambda_i) to (lambda'_j, j) and has one cell per node of the hook
    of x.

    Args:
        b (Bipartition): The bipartition
        x (Node): A node of b

    Returns:
        RimHook: The strip, its leg length, its foot and the remainder

    Raises:
        HeckeTypeBError: If x is not a node of b.
    """
    if not b.contains(x):
        raise HeckeTypeBError(f"node {tuple(x)} is not in the diagram of {b}")
    parts = b.component(x.comp)
    bottom = conjugate(parts)[x.col - 1]
    cells = []
    for row in range(x.row, bottom + 1):
        below = parts[row] if row < len(parts) else 0
        for col in range(max(x.col, below), parts[row - 1] + 1):
            cells.append(Node(row, col, x.comp))
    remaining = list(parts)
    for row in range(x.row, bottom):
        remaining[row - 1] = parts[row] - 1
    remaining[bottom - 1] = x.col - 1
    return RimHook(
        corner=x,
        cells=tuple(cells),
        leg_length=bottom - x.row,
        foot=Node(bottom, x.col, x.comp),
        remainder=b.with_component(x.comp, as_partition(remaining)),
    )


def rim_hooks(b):
    """Every rim hook of b, one per node."""
    return [rim_hook_at(b, node) for node in b.nodes()]


def enumerate_bipartitions(n, max_size: Optional[int] = None):
    """
    All bipartitions of n, each once, strict dominators first.

    The order is decreasing dominance_key, a linear extension of dominance,
    so matrices indexed by this list come out triangular without resorting.

    Args:
        n (int): The size
        max_size (int, optional): Enumeration bound, MAX_ENUMERATION_SIZE by default

    Returns:
        list: Every Bipartition of n

    Raises:
        OutOfScopeError: If n is negative or above the bound.

    Example:
        >>> len(enumerate_bipartitions(4))
        20
    """
    bound = MAX_ENUMERATION_SIZE if max_size is None else max_size
    if n < 0 or n > bound:
        raise OutOfScopeError(f"enumeration needs 0 <= n <= {bound}, got n={n}")
    found = [
        Bipartition(first, second)
        for size1 in range(n + 1)
        for first in partitions_of(size1)
        for second in partitions_of(n - size1)
    ]
    return sorted(found, key=dominance_key, reverse=True)
