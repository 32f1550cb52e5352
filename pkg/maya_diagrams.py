"""
Maya Diagrams Module - Path sequences of partitions and bipartitions

Walking along the border of a Young diagram from bottom-left to top-right
and writing 0 for a vertical edge and 1 for a horizontal edge gives a doubly
infinite 0/1 sequence, the path sequence (or Maya diagram). A bar sits
between positions 0 and 1, so that position c carries the edge at content c.

This module provides:
1. PathSeq, stored as a finite window of bits plus its start position
2. Conversion partition <-> path sequence and the content counts c_k
3. Rim hooks as (1 ... 0) pairs, with the leg length read off as the
   number of 0s strictly inside the pair
4. BiPathSeq, the two-row sequence of a bipartition with the second row
   shifted f places right, and the column symbols A=(0,1), B=(1,0),
   C=(0,0), D=(1,1)
5. RegionCounts for the left/middle/right regions and the identities they
   satisfy
6. The one-A family: the f + 2 bipartitions obtained by moving the single
   A across the B columns

Outside the stored window every bit to the left is 0 and every bit to the
right is 1.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from bipartitions import Bipartition, as_partition
from parameters import ConsistencyError, HeckeTypeBError

SYMBOLS = {(0, 1): "A", (1, 0): "B", (0, 0): "C", (1, 1): "D"}
PAIRS = {symbol: pair for pair, symbol in SYMBOLS.items()}


@dataclass(frozen=True)
class PathSeq:
    """
    A doubly infinite 0/1 sequence.

    Attributes:
        bits (tuple): The volatile window; it starts with a 1 and ends with a 0.
        start (int): Position of bits[0]. For the all-zeros-then-ones
            sequence the window is empty and start is the first 1.
    """
    bits: Tuple[int, ...]
    start: int

    @classmethod
    def from_bits(cls, bits, start):
        """Build a path sequence from any window, trimming it to canonical form."""
        bits = list(bits)
        for bit in bits:
            if bit not in (0, 1):
                raise HeckeTypeBError(f"path sequences hold 0/1 bits, got {bit!r}")
        while bits and bits[0] == 0:
            bits.pop(0)
            start += 1
        while bits and bits[-1] == 1:
            bits.pop()
        return cls(tuple(bits), start)

    @property
    def end(self):
        """First position after the window."""
        return self.start + len(self.bits)

    def bit(self, position):
        if position < self.start:
            return 0
        if position >= self.end:
            return 1
        return self.bits[position - self.start]

    def window(self, low, high):
        """Bits at positions low, ..., high - 1."""
        return [self.bit(position) for position in range(low, high)]

    def is_balanced(self):
        """The number of 1s at positions <= 0 equals the number of 0s at positions >= 1."""
        ones_left = sum(self.bit(pos) for pos in range(self.start, 1))
        zeros_right = sum(1 - self.bit(pos) for pos in range(1, self.end))
        return ones_left == zeros_right

    def with_bits(self, changes):
        """A copy with the bits at the given positions replaced ({position: bit})."""
        positions = list(changes) + [self.start, self.end]
        low, high = min(positions), max(positions) + 1
        bits = [changes.get(pos, self.bit(pos)) for pos in range(low, high)]
        return PathSeq.from_bits(bits, low)

    def render(self, low, high):
        """The bits from low to high - 1 with a bar between positions 0 and 1."""
        left = "".join(str(bit) for bit in self.window(low, 1))
        right = "".join(str(bit) for bit in self.window(1, high))
        return f"...{left}|{right}..."


def partition_to_path(parts):
    """
    The path sequence of a partition.

    The 0s sit exactly at the positions lambda_i - i + 1 (i >= 1), so the
    positions <= -len(lambda) are all 0.

    Args:
        parts (tuple): A partition

    Returns:
        PathSeq: Its border path

    Example:
        >>> partition_to_path((1,)).render(-2, 4)
        '...001|011...'
    """
    parts = as_partition(parts)
    if not parts:
        return PathSeq((), 1)
    zeros = {part - row + 1 for row, part in enumerate(parts, start=1)}
    low = 1 - len(parts)
    high = parts[0] + 1
    return PathSeq.from_bits([0 if pos in zeros else 1 for pos in range(low, high)], low)


def path_to_partition(path):
    """
    Read a partition back from its path sequence.

    Raises:
        HeckeTypeBError: If the sequence is not balanced about the bar.
    """
    if not path.is_balanced():
        raise HeckeTypeBError("path sequence is unbalanced: 1s left of the bar do not match 0s right of it")
    zeros = sorted((pos for pos in range(path.start, path.end) if path.bit(pos) == 0), reverse=True)
    return as_partition(zero + row for row, zero in enumerate(zeros))


def content_counts(path):
    """
    c_k, the number of nodes of content k.

    c_k is the number of 1s at positions <= k minus the same count for the
    empty partition, which is max(k, 0).

    Returns:
        dict: content -> multiplicity, zero entries omitted
    """
    if not path.is_balanced():
        raise HeckeTypeBError("content counts need a balanced path sequence")
    counts = {}
    ones = 0
    for position in range(path.start, path.end + 1):
        ones += path.bit(position)
        count = ones - max(position, 0)
        if count:
            counts[position] = count
    return counts


def hook_count(path):
    """Number of (1 ... 0) pairs; equals the size of the partition."""
    total = 0
    ones_seen = 0
    for bit in path.bits:
        if bit == 1:
            ones_seen += 1
        else:
            total += ones_seen
    return total


@dataclass(frozen=True)
class PathHook:
    """A (1 ... 0) pair of a path sequence; swapping the two bits removes a rim hook."""
    one_position: int
    zero_position: int
    leg_length: int

    @property
    def length(self):
        return self.zero_position - self.one_position


def path_hooks(path):
    """Every (1 ... 0) pair with its length and its number of interior 0s."""
    hooks = []
    for one in range(path.start, path.end):
        if path.bit(one) != 1:
            continue
        zeros_inside = 0
        for zero in range(one + 1, path.end):
            if path.bit(zero) == 0:
                hooks.append(PathHook(one, zero, zeros_inside))
                zeros_inside += 1
    return hooks


def unwrap_hook(path, hook):
    """The path sequence after removing the rim hook of a (1 ... 0) pair."""
    return path.with_bits({hook.one_position: 0, hook.zero_position: 1})


@dataclass(frozen=True)
class BiPathSeq:
    """
    Two-row path sequence of a bipartition.

    Column i pairs top.bit(i) with bottom.bit(i - f), so column i sits at
    content i in both components. The two bars bound the left region
    (i <= 0), the middle region (1 <= i <= f) and the right region (i > f).
    """
    top: PathSeq
    bottom: PathSeq
    f: int

    def column(self, i):
        return (self.top.bit(i), self.bottom.bit(i - self.f))

    def symbol(self, i):
        return SYMBOLS[self.column(i)]

    def region(self, i):
        if i <= 0:
            return "L"
        if i <= self.f:
            return "M"
        return "R"

    def span(self):
        """A range of columns containing every column that is not C on the left or D on the right."""
        low = min(self.top.start, self.bottom.start + self.f, 1)
        high = max(self.top.end, self.bottom.end + self.f, self.f + 1)
        return range(low, high)

    def columns(self):
        """(column, symbol) pairs over span()."""
        return [(i, self.symbol(i)) for i in self.span()]

    def positions(self, symbols):
        return [i for i, symbol in self.columns() if symbol in symbols]


def bipartition_to_bipath(b, params):
    """
    The two-row path sequence of b: lambda^(1) on top, lambda^(2) below shifted f places.

    Example:
        For ((4,2,1),(2,2,1)) with f = 2 the rows read
        ...000101|01|1011... and ...000001|01|0011...
    """
    return BiPathSeq(partition_to_path(b.first), partition_to_path(b.second), params.f)


def bipath_to_bipartition(s):
    return Bipartition(path_to_partition(s.top), path_to_partition(s.bottom))


def render_bipath(s):
    """
    Two lines of bits with a bar before column 1 and another after column f.

    Returns:
        str: The top row and the bottom row separated by a newline
    """
    span = s.span()
    low, high = span.start - 1, span.stop + 1

    def row(bit_at):
        left = "".join(str(bit_at(i)) for i in range(low, 1))
        middle = "".join(str(bit_at(i)) for i in range(1, s.f + 1))
        right = "".join(str(bit_at(i)) for i in range(s.f + 1, high))
        return f"...{left}|{middle}|{right}..."

    return row(lambda i: s.column(i)[0]) + "\n" + row(lambda i: s.column(i)[1])


@dataclass(frozen=True)
class RegionCounts:
    """
    Finite symbol counts per region. C on the left and D on the right occur
    infinitely often and are not counted.
    """
    aL: int = 0
    aM: int = 0
    aR: int = 0
    bL: int = 0
    bM: int = 0
    bR: int = 0
    cM: int = 0
    cR: int = 0
    dL: int = 0
    dM: int = 0

    @property
    def total_a(self):
        return self.aL + self.aM + self.aR

    @property
    def total_b(self):
        return self.bL + self.bM + self.bR

    def as_dict(self):
        return {
            name: getattr(self, name)
            for name in ("aL", "aM", "aR", "bL", "bM", "bR", "cM", "cR", "dL", "dM")
        }


def region_counts(s):
    """Count A, B, C and D in each region of a two-row path sequence."""
    counts = {}
    for i, symbol in s.columns():
        key = symbol.lower() + s.region(i)
        if key in ("cL", "dR"):
            continue
        counts[key] = counts.get(key, 0) + 1
    return RegionCounts(**counts)


def hook_bound(rc):
    """
    A lower bound for n counting the rim hooks visible from the region counts.

    Every bipartition of n satisfies hook_bound(rc) <= n, so n <= 2f + 3
    forces hook_bound(rc) <= 2f + 3.
    """
    return (
        (rc.bL + rc.dL) * (rc.aM + rc.cM + rc.aR + rc.cR)
        + (rc.aL + rc.dL + rc.aM + rc.dM) * (rc.bR + rc.cR)
        + (rc.bM + rc.dM) * (rc.aR + rc.cR)
        + (rc.aL + rc.dL) * (rc.bM + rc.cM)
        + rc.aL * rc.bL
        + rc.aM * rc.bM
        + rc.aR * rc.bR
    )


def check_identities(rc, params, n):
    """
    Evaluate the region-count identities.

    The first four hold for every bipartition. The last two are only
    promised when n <= 2f + 3 and are reported as None otherwise.

    Args:
        rc (RegionCounts): Counts of a bipartition
        params (Params): Supplies f
        n (int): Size of the bipartition

    Returns:
        dict: identity name -> True, False or None (not evaluated)
    """
    f = params.f
    report: Dict[str, Optional[bool]] = {
        "top_bar_balance": rc.bL + rc.dL == rc.aM + rc.cM + rc.aR + rc.cR,
        "bottom_bar_balance": rc.bR + rc.cR == rc.aL + rc.dL + rc.aM + rc.dM,
        "middle_width": f == rc.aM + rc.bM + rc.cM + rc.dM,
        "b_excess": rc.total_b == f + rc.total_a,
        "hook_bound": None,
        "a_at_most_one": None,
    }
    if n <= 2 * f + 3:
        report["hook_bound"] = 2 * f + 3 >= hook_bound(rc)
        report["a_at_most_one"] = rc.total_a <= 1
    return report


def one_a_family(s):
    """
    The bipartitions sharing the C and D columns of s with exactly one A.

    s must contain a single A; with f + 1 B columns there are f + 2 places
    for it. Moving the A left gives a strictly more dominated bipartition, so
    the list runs lambda_0 ⊲ lambda_1 ⊲ ... ⊲ lambda_{f+1}.

    Args:
        s (BiPathSeq): A two-row path sequence with exactly one A

    Returns:
        list: Bipartitions ordered by the position of their A, leftmost first

    Raises:
        HeckeTypeBError: If s has no A or more than one.
        ConsistencyError: If a placement fails to decode to a bipartition.
    """
    a_positions = s.positions("A")
    if len(a_positions) != 1:
        raise HeckeTypeBError(f"one-A family needs exactly one A column, found {len(a_positions)}")
    slots = s.positions("AB")
    family = []
    for slot in slots:
        top_changes = {}
        bottom_changes = {}
        for column in slots:
            top_bit, bottom_bit = PAIRS["A" if column == slot else "B"]
            top_changes[column] = top_bit
            bottom_changes[column - s.f] = bottom_bit
        moved = BiPathSeq(s.top.with_bits(top_changes), s.bottom.with_bits(bottom_changes), s.f)
        try:
            family.append(bipath_to_bipartition(moved))
        except HeckeTypeBError as exc:
            raise ConsistencyError(f"A placed at column {slot} gives no bipartition: {exc}")
    return family
