"""
Rendering Module - Text and JSON output for every command

Every renderer returns a string, so the command-line output is fixed by
the ordering rules of the underlying objects and is byte-deterministic.
Bipartitions are written with the literal syntax accepted on the command
line ("4,2,1|2,2,1"); JSON output uses the same literals.

Key features:
1. Fock vectors: "v^2 ((2,1),(0))"-style text, [exponent, coefficient] JSON
2. Specht combinations from the Jantzen sum formula
3. Decomposition matrices as space-separated tables
4. Block lists, Kleshchev witnesses and path-sequence reports
"""
import json

from bipartitions import format_bipartition
from maya_diagrams import render_bipath
from parameters import format_order


def _dump(payload):
    return json.dumps(payload, indent=2, ensure_ascii=False)


def fock_vector_text(u):
    return str(u)


def fock_vector_json(u):
    """[{"bipartition": literal, "coeff": [[exponent, coefficient], ...]}, ...] in display order."""
    return _dump([
        {"bipartition": format_bipartition(b), "coeff": coefficient.as_pairs()}
        for b, coefficient in u.items()
    ])


def specht_combination_text(combination):
    return str(combination)


def specht_combination_json(combination):
    return _dump([
        {"bipartition": format_bipartition(b), "coefficient": c}
        for b, c in combination.items()
    ])


def matrix_text(matrix):
    """
    Rows labelled by Specht literals, columns by Kleshchev literals, entries
    separated by spaces and right-aligned under their column label.
    """
    frame = matrix.to_frame()
    frame["specht"] = [format_bipartition(b) for b in matrix.rows]
    frame.columns = ["S \\ D"] + [format_bipartition(b) for b in matrix.cols]
    return frame.to_string(index=False)


def matrix_payload(matrix):
    return {
        "rows": [format_bipartition(b) for b in matrix.rows],
        "cols": [format_bipartition(b) for b in matrix.cols],
        "entries": matrix.entries,
    }


def matrix_json(matrix):
    return _dump(matrix_payload(matrix))


def block_payload(block, classification=None):
    payload = {
        "residue": [r for r, mult in block.residue for _ in range(mult)],
        "size": block.size,
        "members": [format_bipartition(b) for b in block.members],
    }
    if classification is not None:
        payload["kind"] = classification.kind.value
        payload["case"] = classification.case.value if classification.case else None
    return payload


def blocks_text(block_list, classifications=None):
    """One line per block: residue multiset, size and members."""
    lines = []
    for i, block in enumerate(block_list):
        line = f"{block.label} size={block.size}"
        if classifications is not None:
            line += f" {classifications[i].kind.value}"
        members = " ".join(format_bipartition(b) for b in block.members)
        lines.append(f"{line}: {members}")
    return "\n".join(lines)


def blocks_json(block_list, classifications=None):
    return _dump([
        block_payload(block, classifications[i] if classifications is not None else None)
        for i, block in enumerate(block_list)
    ])


def kleshchev_text(b, verdict, witness):
    """
    "yes" or "no" for b, followed on the next line by the good nodes
    removed on the way down to the empty bipartition.
    """
    if not verdict:
        return f"{format_bipartition(b)}: no"
    steps = " ".join(f"{r}@({node.row},{node.col},{node.comp})" for r, node in witness)
    return f"{format_bipartition(b)}: yes\nwitness: {steps}" if steps else f"{format_bipartition(b)}: yes"


def kleshchev_json(b, verdict, witness):
    return _dump({
        "bipartition": format_bipartition(b),
        "kleshchev": verdict,
        "witness": [{"residue": r, "node": list(node)} for r, node in witness],
    })


def maya_text(b, path, counts, identities):
    lines = [f"{format_bipartition(b)}", render_bipath(path)]
    lines.append(" ".join(f"{name}={value}" for name, value in counts.as_dict().items()))
    for name, verdict in identities.items():
        status = "n/a" if verdict is None else ("ok" if verdict else "FAILED")
        lines.append(f"{name}: {status}")
    return "\n".join(lines)


def maya_json(b, path, counts, identities):
    top, bottom = render_bipath(path).split("\n")
    return _dump({
        "bipartition": format_bipartition(b),
        "rows": [top, bottom],
        "region_counts": counts.as_dict(),
        "identities": identities,
    })


def rep_type_json(n, e, charge, verdict):
    return _dump({"n": n, "e": format_order(e), "charge": charge, "rep_type": verdict})