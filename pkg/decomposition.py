"""
Decomposition Module - Block classification and decomposition matrices

For n < min(e, 2f + 4) every block of H(B_n) is either simple (one Specht
module, equal to its simple head) or a one-A block: f + 2 bipartitions
lambda_0 ⊲ ... ⊲ lambda_{f+1} whose two-row path sequences differ only in
where the single A sits. The decomposition matrix of a one-A block is
bidiagonal with ones on the diagonal and the subdiagonal.

Key features:
1. classify_block: missing-residue search, the case split on e - k > f and
   the renormalised frame (e, e - f) with swapped components
2. decomposition_matrix with unitriangularity and Kleshchev cross-checks
3. fixture_matrices: regenerate the printed tables from canonical basis
   candidates and compare them cell by cell
4. block_census and process_blocks for batch runs over every block of n

Example:
    >>> from parameters import Params
    >>> from jantzen import blocks
    >>> m = decomposition_matrix(blocks(2, Params(5, 1))[0])
    >>> m.entries
    [[1, 0], [1, 1], [0, 1]]
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import pandas as pd

from bipartitions import Bipartition, dominance_key, dominates, strictly_dominates
from fixture_tables import fixture_table
from fock_space import as_canonical_candidate, decomp_column, f_product, leading_terms
from jantzen import Block, blocks
from kleshchev import is_kleshchev, kleshchev_members
from maya_diagrams import bipartition_to_bipath, one_a_family
from parameters import ConsistencyError, HeckeTypeBError, OutOfScopeError, Params, format_order


class BlockKind(Enum):
    SIMPLE = "SIMPLE"
    ONE_A = "ONE_A"
    OUT_OF_REGIME = "OUT_OF_REGIME"


class CaseTag(Enum):
    CASE1 = "CASE1"
    CASE2_SWAPPED = "CASE2_SWAPPED"


@dataclass(frozen=True)
class BlockClass:
    """
    Result of classify_block.

    Attributes:
        kind (BlockKind): SIMPLE, ONE_A or OUT_OF_REGIME.
        case (CaseTag, optional): Frame used for the A count; None out of regime.
        family (tuple): For ONE_A, the family lambda_0, ..., lambda_{f'+1} in
            the order of the A position in the working frame, given as
            bipartitions of the original frame.
        k (int, optional): The missing residue is -k-1 (mod e); None for infinite e.
        frame (Params, optional): Parameters of the working frame.
    """
    kind: BlockKind
    case: Optional[CaseTag] = None
    family: Tuple[Bipartition, ...] = ()
    k: Optional[int] = None
    frame: Optional[Params] = None


def _missing_residue_k(block, k=None):
    e = block.params.e
    present = {r for r, _ in block.residue}
    if k is not None:
        if not isinstance(k, int) or not 0 <= k < e:
            raise HeckeTypeBError(f"k must satisfy 0 <= k < e, got {k!r}")
        if (-k - 1) % e in present:
            raise HeckeTypeBError(f"-k-1 = {(-k - 1) % e} is a residue of block {block.label}")
        return k
    for candidate in range(e):
        if (-candidate - 1) % e not in present:
            return candidate
    raise ConsistencyError(f"block {block.label} uses every residue modulo {e}")


def classify_block(block, k=None):
    """
    Classify a block as SIMPLE, ONE_A or OUT_OF_REGIME.

    For finite e a k with -k-1 (mod e) missing from the block residues is
    found (the first one, or the one supplied). When e - k > f the A
    count is read from the block's own path sequences; otherwise the
    components are swapped and f replaced by e - f first. At e - k = f the
    contents of lambda^(2) reach past the A window of the unswapped frame,
    so that boundary is read in the swapped frame too.

    Args:
        block (Block): The block
        k (int, optional): Use this k instead of searching

    Returns:
        BlockClass: The classification

    Raises:
        HeckeTypeBError: If a supplied k does not give a missing residue.
        ConsistencyError: If two or more A columns appear inside the regime,
            or the family found does not reproduce the block.
    """
    params = block.params
    if block.n >= params.finite_type_bound:
        return BlockClass(BlockKind.OUT_OF_REGIME)
    if params.is_finite:
        k = _missing_residue_k(block, k)
        swapped = params.e - k <= params.f
    else:
        k = None
        swapped = False
    if swapped:
        frame, case = params.renormalized(), CaseTag.CASE2_SWAPPED
        first = block.members[0].swapped()
    else:
        frame, case = params, CaseTag.CASE1
        first = block.members[0]
    path = bipartition_to_bipath(first, frame)
    a_count = len(path.positions("A"))
    if a_count == 0:
        if block.size != 1:
            raise ConsistencyError(
                f"block {block.label} has no A column but {block.size} members "
                f"({params}, k={k}, {case.value} frame {frame}, read from {first.display()})"
            )
        return BlockClass(BlockKind.SIMPLE, case, (block.members[0],), k, frame)
    if a_count > 1:
        raise ConsistencyError(
            f"{first.display()} has {a_count} A columns in block {block.label} ({params}, k={k}, "
            f"{case.value} frame {frame}) although n < {params.finite_type_bound}"
        )
    family = one_a_family(path)
    if swapped:
        family = [b.swapped() for b in family]
    if set(family) != set(block.members) or len(family) != frame.f + 2:
        raise ConsistencyError(
            f"one-A family of size {len(family)} read from {first.display()} does not reproduce block "
            f"{block.label} of size {block.size} ({params}, k={k}, {case.value} frame {frame})"
        )
    return BlockClass(BlockKind.ONE_A, case, tuple(family), k, frame)


class DecompMatrix:
    """
    Decomposition numbers d_{lambda mu} = [S^lambda : D^mu].

    Attributes:
        rows (list): Specht labels.
        cols (list): Simple (Kleshchev) labels.
        entries (list): entries[i][j] = d_{rows[i], cols[j]}.
    """

    def __init__(self, rows, cols, entries):
        self.rows = list(rows)
        self.cols = list(cols)
        self.entries = [list(row) for row in entries]
        if len(self.entries) != len(self.rows) or any(len(row) != len(self.cols) for row in self.entries):
            raise HeckeTypeBError("decomposition matrix entries do not match its labels")

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def entry(self, row, col):
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def column(self, col):
        """{row: d_{row, col}} over the non-zero entries."""
        j = self.cols.index(col)
        return {row: self.entries[i][j] for i, row in enumerate(self.rows) if self.entries[i][j]}

    def check_unitriangular(self):
        """
        Raise ConsistencyError unless d_{mu mu} = 1 for every column label that
        is also a row, and d_{lambda mu} != 0 only when lambda ⊵ mu.
        """
        for j, col in enumerate(self.cols):
            if col in self.rows and self.entries[self.rows.index(col)][j] != 1:
                raise ConsistencyError(f"diagonal entry at {col.display()} is not 1")
            for i, row in enumerate(self.rows):
                if self.entries[i][j] and not dominates(row, col):
                    raise ConsistencyError(
                        f"non-zero entry at ({row.display()}, {col.display()}) without dominance"
                    )
        return True

    def to_frame(self):
        """DataFrame with a "specht" column of row labels and one column per simple label."""
        frame = pd.DataFrame(self.entries, columns=[col.display() for col in self.cols])
        frame.insert(0, "specht", [row.display() for row in self.rows])
        return frame

    def __eq__(self, other):
        if not isinstance(other, DecompMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"DecompMatrix({len(self.rows)}x{len(self.cols)})"


def decomposition_matrix(block, classification=None):
    """
    The decomposition matrix of a block inside the finite-type regime.

    Rows run in increasing dominance, so the most dominated member comes
    first; columns are labelled by the Kleshchev members. In a one-A block
    consecutive family members share a column, labelled by the dominated
    one of the pair.

    Args:
        block (Block): The block
        classification (BlockClass, optional): A precomputed classify_block result

    Returns:
        DecompMatrix: The matrix

    Raises:
        OutOfScopeError: If n >= min(e, 2f + 4).
        ConsistencyError: If the matrix is not unitriangular or its column
            labels are not the Kleshchev members of the block.
    """
    classification = classification or classify_block(block)
    if classification.kind is BlockKind.OUT_OF_REGIME:
        raise OutOfScopeError(
            f"decomposition matrices need n < min(e, 2f+4) = {block.params.finite_type_bound}, "
            f"got n={block.n} with {block.params}"
        )
    if classification.kind is BlockKind.SIMPLE:
        member = block.members[0]
        return DecompMatrix([member], [member], [[1]])

    family = classification.family
    pairs = []
    for lower, upper in zip(family, family[1:]):
        label = upper if strictly_dominates(lower, upper) else lower
        pairs.append((label, {lower, upper}))
    rows = sorted(family, key=dominance_key)
    pairs.sort(key=lambda pair: rows.index(pair[0]))
    entries = [[1 if row in support else 0 for _, support in pairs] for row in rows]
    matrix = DecompMatrix(rows, [label for label, _ in pairs], entries)
    matrix.check_unitriangular()
    if set(matrix.cols) != set(kleshchev_members(block)):
        raise ConsistencyError(f"column labels of block {block.label} are not its Kleshchev members")
    return matrix


def _candidate_column(fixture, params):
    product = f_product(fixture.word, params)
    candidate = as_canonical_candidate(product)
    if candidate is None or candidate.leader != fixture.leader:
        raise ConsistencyError(f"F-word for {fixture.name} does not give a canonical basis element led by it")
    if fixture.expected is not None:
        shown = product if fixture.complete else leading_terms(product, fixture.expected.terms)
        if shown != fixture.expected:
            raise ConsistencyError(f"F-word for {fixture.name} gives {product}, expected {fixture.expected}")
    return decomp_column(candidate)


def fixture_matrices(tag, params):
    """
    Regenerate a printed decomposition table from canonical basis candidates.

    Each column with a printed F-word is read off the product of that word;
    a column without one is fixed by unitriangularity (its label is
    dominated by no other row). The result is compared cell by cell with
    the printed table.

    Args:
        tag (str): S4_CASE1, S4_F0, S5_CASE1 or S5_CASE2
        params (Params): Parameters in the range of the table

    Returns:
        DecompMatrix: Rows and columns in printed order

    Raises:
        OutOfScopeError: If the parameters are outside the range of the table.
        ConsistencyError: If a word fails candidacy or a cell differs from
            the printed value.
    """
    table = fixture_table(tag, params)
    columns = []
    for col in table.cols:
        fixture = table.words.get(col)
        if fixture is None:
            columns.append({col: 1})
        else:
            columns.append(_candidate_column(fixture, params))
    entries = [[column.get(row, 0) for column in columns] for row in table.rows]
    matrix = DecompMatrix(table.rows, table.cols, entries)
    for i, row in enumerate(table.rows):
        for j, col in enumerate(table.cols):
            if entries[i][j] != table.printed[i][j]:
                raise ConsistencyError(
                    f"{tag} at {params}: d({table.names[row]}, {table.names[col]}) = "
                    f"{entries[i][j]}, printed {table.printed[i][j]}"
                )
    matrix.check_unitriangular()
    return matrix


def _expected_sizes(params):
    sizes = {1, params.f + 2}
    if params.is_finite:
        sizes.add(params.e - params.f + 2)
    return sizes


def block_census(n, params, max_size=None):
    """
    One row per block of n: residues, size, classification and whether the
    size is 1, f + 2 or e - f + 2.

    Returns:
        pandas.DataFrame: Columns residue, size, kind, case, k, frame_f,
            kleshchev, size_ok
    """
    expected = _expected_sizes(params)
    records = []
    for block in blocks(n, params, max_size):
        classification = classify_block(block)
        in_regime = classification.kind is not BlockKind.OUT_OF_REGIME
        records.append({
            "residue": block.label,
            "size": block.size,
            "kind": classification.kind.value,
            "case": classification.case.value if classification.case else "",
            "k": classification.k if classification.k is not None else "",
            "frame_f": classification.frame.f if classification.frame else "",
            "kleshchev": len(kleshchev_members(block)),
            "size_ok": (block.size in expected) if in_regime else "",
        })
    return pd.DataFrame(records, columns=["residue", "size", "kind", "case", "k", "frame_f", "kleshchev", "size_ok"])


def census_frame(n, params, max_size=None):
    """block_census with the parameters prepended, ready for CSV output."""
    frame = block_census(n, params, max_size)
    frame.insert(0, "f", params.f)
    frame.insert(0, "e", format_order(params.e))
    frame.insert(0, "n", n)
    return frame


@dataclass
class BlockResult:
    """A processed block: its classification and, inside the regime, its matrix."""
    block: Block
    classification: BlockClass
    matrix: Optional[DecompMatrix]


def process_blocks(n, params, verbose=False, max_size=None) -> List[BlockResult]:
    """
    Classify every block of n and build its decomposition matrix.

    Args:
        n (int): Size of the bipartitions
        params (Params): Parameters
        verbose (bool): Print a progress line per block
        max_size (int, optional): Enumeration bound

    Returns:
        list: BlockResult per block, in block order; matrix is None out of regime
    """
    all_blocks = blocks(n, params, max_size)
    if verbose:
        print(f"Processing {len(all_blocks)} blocks of n={n} for {params}...")
    results = []
    for i, block in enumerate(all_blocks):
        if verbose:
            print(f"Processing {i+1}/{len(all_blocks)}: block {block.label} ({block.size} members)")
        classification = classify_block(block)
        matrix = None
        if classification.kind is not BlockKind.OUT_OF_REGIME:
            matrix = decomposition_matrix(block, classification)
        if verbose:
            print(f"  {classification.kind.value}" + (f" {classification.case.value}" if classification.case else ""))
        results.append(BlockResult(block, classification, matrix))
    return results


def kleshchev_labels_agree(block):
    """True when every one-A family member but the most dominant is Kleshchev."""
    classification = classify_block(block)
    if classification.kind is not BlockKind.ONE_A:
        return True
    ordered = sorted(classification.family, key=dominance_key)
    verdicts = [is_kleshchev(b, block.params)[0] for b in ordered]
    return all(verdicts[:-1]) and not verdicts[-1]
