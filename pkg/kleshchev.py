"""
Kleshchev Module - Normal nodes, good nodes and Kleshchev bipartitions

By Ariki's theorem the simple module D^mu is non-zero exactly when mu is a
Kleshchev bipartition, so this test decides which bipartitions label
columns of a decomposition matrix.

A removable r-node x is normal when, for every addable r-node y below x,
strictly more removable than addable r-nodes lie strictly between x and y,
and when the removable r-nodes below x are at least as many as the addable
ones. A good node is the highest normal node of its residue. A bipartition
is Kleshchev if it is empty or loses a good node to a Kleshchev bipartition.
"""
from functools import lru_cache

from bipartitions import EMPTY, addable_nodes, remove_node, removable_nodes, residue


def _signature(b, params, r):
    """Addable ("A") and removable ("R") r-nodes of b, top to bottom."""
    tagged = [("A", node) for node in addable_nodes(b, params, r)]
    tagged += [("R", node) for node in removable_nodes(b, params, r)]
    return sorted(tagged, key=lambda item: item[1].below_key())


def _is_normal(signature, position):
    removable_between = addable_between = 0
    for tag, _ in signature[position + 1:]:
        if tag == "A":
            if removable_between <= addable_between:
                return False
            addable_between += 1
        else:
            removable_between += 1
    return removable_between >= addable_between


def normal_nodes(b, params, r):
    """
    The normal r-nodes of b, ordered top to bottom.

    Example:
        With f = 0 the node (1,1,1) of ((1),(0)) is not normal: the addable
        0-node (1,1,2) lies below it with nothing in between.
    """
    signature = _signature(b, params, r)
    return [
        node for position, (tag, node) in enumerate(signature)
        if tag == "R" and _is_normal(signature, position)
    ]


def good_node(b, params, r):
    """The highest normal r-node of b, or None."""
    normal = normal_nodes(b, params, r)
    return normal[0] if normal else None


@lru_cache(maxsize=None)
def _kleshchev_witness(b, params):
    if b == EMPTY:
        return ()
    for r in sorted({residue(node, params) for node in removable_nodes(b, params)}):
        node = good_node(b, params, r)
        if node is None:
            continue
        rest = _kleshchev_witness(remove_node(b, node), params)
        if rest is not None:
            return ((r, node),) + rest
    return None


def is_kleshchev(b, params):
    """
    Decide whether b is a Kleshchev bipartition.

    Residues are tried in increasing order at every step, so the witness is
    deterministic. Results are cached per (bipartition, parameters).

    Args:
        b (Bipartition): The bipartition
        params (Params): Parameters fixing residues

    Returns:
        tuple: (True, [(residue, node), ...]) listing the good nodes removed
            from b down to the empty bipartition, or (False, [])

    Examples:
        ((0),(2,2)) is Kleshchev for e = 5, f = 0 and ((2,2),(0)) is not.
    """
    witness = _kleshchev_witness(b, params)
    if witness is None:
        return False, []
    return True, list(witness)


def kleshchev_members(block):
    """The Kleshchev members of a block, in block order."""
    return [b for b in block.members if is_kleshchev(b, block.params)[0]]
