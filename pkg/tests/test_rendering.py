import json

from bipartitions import EMPTY, Bipartition, Node
from decomposition import classify_block, decomposition_matrix
from fock_space import FockVector, V, apply_f
from jantzen import blocks, jantzen_sum
from maya_diagrams import bipartition_to_bipath, check_identities, region_counts
from parameters import Params
import rendering


def test_fock_vector_renderers():
    u = apply_f(FockVector.basis(EMPTY), 0, Params(5, 0))
    assert rendering.fock_vector_text(u) == "((0),(1)) + v ((1),(0))"
    assert json.loads(rendering.fock_vector_json(u)) == [
        {"bipartition": "|1", "coeff": [[0, 1]]},
        {"bipartition": "1|", "coeff": [[1, 1]]},
    ]


def test_specht_combination_renderers():
    params = Params(5, 1)
    combination = jantzen_sum(Bipartition((2,), ()), params)
    assert rendering.specht_combination_text(combination) == "[S((1),(1))] - [S((0),(1,1))]"
    assert json.loads(rendering.specht_combination_json(combination)) == [
        {"bipartition": "1|1", "coefficient": 1},
        {"bipartition": "|1,1", "coefficient": -1},
    ]


def test_matrix_renderers():
    matrix = decomposition_matrix(blocks(2, Params(5, 1))[0])
    lines = rendering.matrix_text(matrix).splitlines()
    assert len(lines) == 4
    assert lines[0].split() == ["S", "\\", "D", "|1,1", "1|1"]
    assert lines[1].split() == ["|1,1", "1", "0"]
    assert lines[3].split() == ["2|", "0", "1"]
    assert json.loads(rendering.matrix_json(matrix)) == {
        "rows": ["|1,1", "1|1", "2|"],
        "cols": ["|1,1", "1|1"],
        "entries": [[1, 0], [1, 1], [0, 1]],
    }


def test_block_renderers():
    block_list = blocks(2, Params(5, 1))
    classifications = [classify_block(block) for block in block_list]
    text = rendering.blocks_text(block_list, classifications)
    assert text.splitlines()[0] == "{0,1} size=3 ONE_A: 2| 1|1 |1,1"
    payload = json.loads(rendering.blocks_json(block_list, classifications))
    assert payload[0] == {
        "residue": [0, 1],
        "size": 3,
        "members": ["2|", "1|1", "|1,1"],
        "kind": "ONE_A",
        "case": "CASE1",
    }
    assert "kind" not in json.loads(rendering.blocks_json(block_list))[0]


def test_kleshchev_renderers():
    b = Bipartition((1,), (1,))
    witness = [(1, Node(1, 1, 2)), (0, Node(1, 1, 1))]
    assert rendering.kleshchev_text(b, True, witness) == "1|1: yes\nwitness: 1@(1,1,2) 0@(1,1,1)"
    assert rendering.kleshchev_text(Bipartition((2,), ()), False, []) == "2|: no"
    assert rendering.kleshchev_text(EMPTY, True, []) == "|: yes"
    assert json.loads(rendering.kleshchev_json(b, True, witness))["witness"][0] == {"residue": 1, "node": [1, 1, 2]}


def test_maya_renderers():
    params = Params(5, 1)
    b = Bipartition((1,), (1,))
    path = bipartition_to_bipath(b, params)
    counts = region_counts(path)
    identities = check_identities(counts, params, b.size)
    lines = rendering.maya_text(b, path, counts, identities).splitlines()
    assert lines[0] == "1|1"
    assert "aM=1" in lines[3]
    assert "top_bar_balance: ok" in lines
    payload = json.loads(rendering.maya_json(b, path, counts, identities))
    assert payload["region_counts"]["bL"] == 1
    assert payload["identities"]["a_at_most_one"] is True
    assert len(payload["rows"]) == 2


def test_rep_type_json():
    payload = json.loads(rendering.rep_type_json(4, float("inf"), "GENERIC", "FINITE"))
    assert payload == {"n": 4, "e": "inf", "charge": "GENERIC", "rep_type": "FINITE"}


def test_fock_vector_with_power_coefficient():
    u = FockVector({Bipartition((1,), ()): V * V + 1})
    assert rendering.fock_vector_text(u) == "(v^2 + 1) ((1),(0))"
