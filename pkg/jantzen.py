"""
Jantzen Module - Blocks, hook linkage and the Jantzen sum formula for n < e

Two Specht modules lie in the same block exactly when their bipartitions
have the same residue multiset, and bipartitions in one block are linked by
hooks: a chain of moves that unwraps one rim hook and wraps another with the
same foot residue and the same remainder.

Key features:
1. Block values and the partition of all bipartitions of n into blocks
2. A networkx graph of residue-preserving hook moves, used to verify every
   block independently of the residue criterion
3. The valuations nu(g_{lambda mu}) for n < e, where every factor of
   g_{lambda mu} vanishes to first order or not at all
4. The right-hand side of the Jantzen sum formula as a SpechtCombination
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

import networkx as nx

from bipartitions import (
    Bipartition,
    dominance_key,
    enumerate_bipartitions,
    format_residues,
    residue,
    residue_multiset,
    rim_hooks,
    strictly_dominates,
)
from parameters import ConsistencyError, HeckeTypeBError, OutOfScopeError, Params


@dataclass(frozen=True)
class Block:
    """
    The bipartitions of n sharing one residue multiset.

    Attributes:
        params (Params): Parameters fixing the residues.
        n (int): Common size of the members.
        members (tuple): Members in decreasing dominance (enumeration order).
        residue (tuple): Sorted (residue, multiplicity) pairs.
    """
    params: Params
    n: int
    members: Tuple[Bipartition, ...]
    residue: Tuple[Tuple[int, int], ...]

    @property
    def size(self):
        return len(self.members)

    @property
    def label(self):
        return format_residues(self.residue)

    def __contains__(self, b):
        return b in self.members


def _hook_keys(b, params):
    """(remainder, foot residue) for every rim hook of b."""
    return {(hook.remainder, residue(hook.foot, params)) for hook in rim_hooks(b)}


def _linkage_graph(members, params):
    graph = nx.Graph()
    graph.add_nodes_from(members)
    holders: Dict[tuple, list] = {}
    for b in members:
        for key in _hook_keys(b, params):
            holders.setdefault(key, []).append(b)
    for linked in holders.values():
        for other in linked[1:]:
            graph.add_edge(linked[0], other)
    return graph


@lru_cache(maxsize=None)
def hook_linkage_graph(n, params, max_size=None):
    """
    Graph on the bipartitions of n joining a and b when one hook move turns a into b.

    A hook move removes a rim hook r_x from a and adds a rim hook r_y to the
    remainder, with res(foot of r_x) = res(foot of r_y). Two bipartitions are
    joined when they share a (remainder, foot residue) pair.

    Args:
        n (int): Size of the bipartitions
        params (Params): Parameters fixing the residues
        max_size (int, optional): Enumeration bound

    Returns:
        networkx.Graph: One node per bipartition of n
    """
    return _linkage_graph(enumerate_bipartitions(n, max_size), params)


def linked_by_hooks(a, b, params):
    """
    Decide whether a and b are joined by a chain of hook moves.

    Raises:
        HeckeTypeBError: If |a| != |b|.

    Example:
        ((1),(1)) and ((0),(1,1)) are linked for e = 5, f = 1.
    """
    if a.size != b.size:
        raise HeckeTypeBError(f"linkage needs equal sizes, got {a.size} and {b.size}")
    if a == b:
        return True
    return nx.has_path(hook_linkage_graph(a.size, params), a, b)


def hook_linkage_components(n, params, max_size=None):
    """
    Connected components of the hook-move graph.

    Each component is returned in decreasing dominance order and the
    components are ordered by their most dominant member, so the result is
    deterministic.
    """
    order = {b: position for position, b in enumerate(enumerate_bipartitions(n, max_size))}
    components = [
        sorted(component, key=order.__getitem__)
        for component in nx.connected_components(hook_linkage_graph(n, params, max_size))
    ]
    return sorted(components, key=lambda component: order[component[0]])


def blocks(n, params, max_size=None, check_linkage=True):
    """
    Partition the bipartitions of n into blocks.

    Bipartitions are grouped by residue multiset. Members keep enumeration
    order (strict dominators first) and blocks are ordered by the position
    of their first member.

    Args:
        n (int): Size of the bipartitions
        params (Params): Parameters fixing the residues
        max_size (int, optional): Enumeration bound
        check_linkage (bool): Also verify that every block is connected by hook moves

    Returns:
        list: Block values

    Raises:
        OutOfScopeError: If n exceeds the enumeration bound.
        ConsistencyError: If a block is not connected by hook moves.

    Example:
        For n = 2, e = 5, f = 1 there are three blocks, of sizes 3, 1 and 1.
    """
    grouped: Dict[tuple, list] = {}
    for b in enumerate_bipartitions(n, max_size):
        grouped.setdefault(residue_multiset(b, params), []).append(b)
    result = [Block(params, n, tuple(members), label) for label, members in grouped.items()]
    if check_linkage:
        for block in result:
            if not nx.is_connected(_linkage_graph(block.members, params)):
                raise ConsistencyError(f"block {block.label} is not linked by hooks for {params}")
    return result


def block_of(b, params, max_size=None):
    """The block containing b."""
    label = residue_multiset(b, params)
    members = tuple(
        other for other in enumerate_bipartitions(b.size, max_size)
        if residue_multiset(other, params) == label
    )
    return Block(params, b.size, members, label)


def _check_small(n, params):
    if params.is_finite and n >= params.e:
        raise OutOfScopeError(
            f"Jantzen valuations are only computed for n < e, got n={n} with {params}"
        )


def valuation(a, b, params):
    """
    The valuation nu(g_{ab}) for bipartitions of n < e.

    Zero unless a strictly dominates b. Otherwise every pair of nodes x of a
    and y of b with [a] minus r_x equal to [b] minus r_y and equal foot
    residues contributes (-1)^(ll(r_x) + ll(r_y)).

    Args:
        a (Bipartition): The dominating bipartition
        b (Bipartition): The dominated bipartition, |b| = |a|
        params (Params): Parameters fixing the residues

    Returns:
        int: The valuation

    Raises:
        HeckeTypeBError: If the sizes differ.
        OutOfScopeError: If n >= e.

    Example:
        valuation(((1),(1)), ((0),(1,1))) is 1 for e = 5, f = 1: the feet of
        the matching hooks both have residue 0.
    """
    if a.size != b.size:
        raise HeckeTypeBError(f"valuation needs equal sizes, got {a.size} and {b.size}")
    _check_small(a.size, params)
    if not strictly_dominates(a, b):
        return 0
    by_remainder: Dict[Bipartition, list] = {}
    for hook in rim_hooks(b):
        by_remainder.setdefault(hook.remainder, []).append(hook)
    total = 0
    for hook_x in rim_hooks(a):
        foot_residue = residue(hook_x.foot, params)
        for hook_y in by_remainder.get(hook_x.remainder, []):
            if residue(hook_y.foot, params) == foot_residue:
                total += (-1) ** (hook_x.leg_length + hook_y.leg_length)
    return total


class SpechtCombination:
    """
    An integer combination of Specht module classes [S^mu].

    Zero coefficients are dropped. Terms are listed in decreasing dominance.
    """

    def __init__(self, terms=None):
        self.terms = {b: c for b, c in (terms or {}).items() if c}

    def coefficient(self, b):
        return self.terms.get(b, 0)

    def items(self):
        return sorted(self.terms.items(), key=lambda item: dominance_key(item[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, SpechtCombination):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == {b: c for b, c in other.items() if c}
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"SpechtCombination({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        text = ""
        for b, c in self.items():
            sign = "-" if c < 0 else "+"
            body = f"[S{b.display()}]" if abs(c) == 1 else f"{abs(c)}[S{b.display()}]"
            if not text:
                text = ("-" if c < 0 else "") + body
            else:
                text += f" {sign} {body}"
        return text


def jantzen_sum(a, params):
    """
    Right-hand side of the Jantzen sum formula for S^a.

    Sums nu(g_{a mu})[S^mu] over the strictly dominated members mu of the
    block of a; bipartitions outside the block contribute nothing.

    Raises:
        OutOfScopeError: If |a| >= e.

    Examples:
        For e = 5, f = 1, jantzen_sum(((1),(1))) is [S((0),(1,1))], and the
        most dominated member of any block gives the empty combination.
    """
    _check_small(a.size, params)
    terms = {}
    for mu in block_of(a, params).members:
        if strictly_dominates(a, mu):
            terms[mu] = valuation(a, mu, params)
    return SpechtCombination(terms)
