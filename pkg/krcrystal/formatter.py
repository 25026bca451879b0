__all__ = [
    "format_weight",
    "format_graph",
    "format_labels",
    "parse_graph",
    "dumps",
    "format_dot",
    "format_fermionic_rows",
    "format_fermionic_csv",
    "format_norm_checks",
]

import csv
import io
import json
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Sequence, Tuple, Union

from .branching import weight_label
from .cartan import AffineType, parse_type
from .exceptions import CrystalError, GraphFormatError
from .fermionic import FermionicRow
from .graph import CrystalGraph
from .kn_tableaux import letter_text, parse_letter
from .norms import NormCheck
from .typings import Json, Jsons

_GRAPH_KEYS = ("type", "rank", "r", "s", "vertices", "edges")

# graphviz X11 color names, cycled by crystal color
_DOT_COLORS = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan")


def format_weight(w: Iterable[Fraction]) -> List[Union[int, str]]:
    """Format weight coordinates; integers stay numbers, halves become ``"1/2"``."""
    return [int(x) if Fraction(x).denominator == 1 else str(Fraction(x)) for x in w]


def format_graph(g: CrystalGraph) -> Json:
    """Format a crystal graph as a JSON body.

    :param g: Crystal graph with an affine type.
    :type g: krcrystal.graph.CrystalGraph
    :return: Body with keys in schema order.
    :rtype: dict
    """
    t = g.affine_type
    return {
        "type": t.label if t else None,
        "rank": t.rank if t else None,
        "r": g.r,
        "s": g.s,
        "vertices": [
            {
                "id": vid,
                "word": [letter_text(x) for x in g.word(vid)],
                "weight": format_weight(g.weight(vid)),
            }
            for vid in range(len(g))
        ],
        "edges": [{"src": src, "color": color, "dst": dst} for src, color, dst in g.edges],
    }


def _field(body: Json, key: str) -> Any:
    try:
        return body[key]
    except (KeyError, TypeError):
        raise GraphFormatError(f"missing field {key!r}")


def parse_graph(body: Json) -> CrystalGraph:
    """Rebuild a crystal graph from its JSON body.

    :param body: Body produced by :func:`format_graph`.
    :type body: dict
    :return: Crystal graph.
    :rtype: krcrystal.graph.CrystalGraph
    :raise krcrystal.exceptions.GraphFormatError: If the body is malformed.
    """
    if not isinstance(body, dict):
        raise GraphFormatError("graph body must be an object")
    for key in _GRAPH_KEYS:
        _field(body, key)
    if not isinstance(body["type"], str):
        raise GraphFormatError("field 'type' must be a string")
    t: AffineType = parse_type(body["type"])
    if body["rank"] != t.rank:
        raise GraphFormatError(f"rank {body['rank']} does not match type {t}")
    words, weights = [], []
    for position, vertex in enumerate(_field(body, "vertices")):
        if _field(vertex, "id") != position:
            raise GraphFormatError(f"vertex ids must be 0..N-1 in order, got {vertex['id']}")
        words.append(tuple(parse_letter(x) for x in _field(vertex, "word")))
        try:
            weights.append([Fraction(x) for x in _field(vertex, "weight")])
        except (TypeError, ValueError, ZeroDivisionError):
            raise GraphFormatError(f"bad weight in vertex {position}")
    try:
        edges = [(int(e["src"]), int(e["color"]), int(e["dst"])) for e in body["edges"]]
    except (KeyError, TypeError, ValueError):
        raise GraphFormatError("edges must be objects with integer src, color, dst")
    try:
        return CrystalGraph(words, weights, edges, t, body["r"], body["s"])
    except CrystalError as err:
        raise GraphFormatError(err.message)


def dumps(body: Any, serializer: Callable[..., str] = json.dumps) -> str:
    """Serialize with fixed separators and without key sorting."""
    return serializer(body, separators=(",", ":"), sort_keys=False)


def format_dot(body: Json) -> str:
    """Render a JSON graph body as graphviz DOT.

    Nodes are labelled by their words; edges carry their color as label.
    """
    title = f"{body['type']} r={body['r']} s={body['s']}"
    lines = [f'digraph "{title}" {{', "\trankdir=TB;"]
    for vertex in body["vertices"]:
        label = " ".join(vertex["word"])
        lines.append(f'\t"{vertex["id"]}" [label="{label}"];')
    for edge in body["edges"]:
        color = _DOT_COLORS[edge["color"] % len(_DOT_COLORS)]
        lines.append(
            f'\t"{edge["src"]}" -> "{edge["dst"]}" [label="{edge["color"]}", color={color}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_labels(labels: Iterable[Tuple[int, int]]) -> str:
    """Render ((i, m_i), ...) as a sum such as ``2*w2 + w0``, largest node first."""
    pieces = []
    for node, m in sorted(labels, reverse=True):
        if m:
            pieces.append(f"w{node}" if m == 1 else f"{m}*w{node}")
    return " + ".join(pieces) or "0"


def format_fermionic_rows(t: AffineType, rows: Sequence[FermionicRow]) -> Jsons:
    return [
        {"lambda": weight_label(t, row.weight), "N": row.n, "M": row.m} for row in rows
    ]


def format_fermionic_csv(t: AffineType, rows: Sequence[FermionicRow]) -> str:
    """Format fermionic rows as CSV with header ``lambda,N,M``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["lambda", "N", "M"])
    for entry in format_fermionic_rows(t, rows):
        writer.writerow([entry["lambda"], entry["N"], entry["M"]])
    return buffer.getvalue()


def format_norm_checks(checks: Iterable[NormCheck]) -> Jsons:
    return [
        {
            "family": check.family,
            "r": check.r,
            "s": check.s,
            "c": list(check.c),
            "j": check.j,
            "check": check.check,
            "pass": check.passed,
        }
        for check in checks
    ]

