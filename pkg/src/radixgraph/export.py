"""Text renderings: expansions, census and trace tables, DOT and JSON graphs.

All output here is deterministic: same input, byte-identical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .digits import to_digit_string
from .errors import ValidationError
from .expansion import PeriodTrace, RadixExpansion
from .graph import FunctionalGraph, census


@dataclass(frozen=True)
class ExportOptions:
    """Rendering knobs for graph exports.

    format: "dot", "json" or "table"; label_base: "decimal" keeps vertex
    labels as plain integers, "base" renders them as base-B digit strings;
    highlight singles out one vertex.
    """

    format: str = "dot"
    label_base: str = "decimal"
    highlight: int | None = None


def format_expansion(x: RadixExpansion, ascii_style: bool = False) -> str:
    """One-line text form of an expansion.

    Default style marks the period with an overline, e.g. 0.4‾2497 (base 12);
    ascii_style wraps it in parentheses instead: 0.4(2497)_12. A bare integer
    renders with no point and no base suffix.
    """
    whole = x.integer_part.render() or "0"
    pre = x.preperiod.render()
    per = x.period.render()
    if not pre and not per:
        return whole
    if ascii_style:
        body = f"{whole}.{pre}({per})" if per else f"{whole}.{pre}"
        return f"{body}_{x.base}"
    body = f"{whole}.{pre}‾{per}" if per else f"{whole}.{pre}"
    return f"{body} (base {x.base})"


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = [" | ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append(" | ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def census_table(graph_census: list, base: int) -> str:
    """Cycle census as an aligned ASCII table, one row per divisor of M."""
    headers = ["d", f"ord_d({base})", "phi(d)", f"phi(d)/ord_d({base})"]
    rows = [[str(r.d), str(r.order), str(r.phi), str(r.cycle_count)] for r in graph_census]
    return _table(headers, rows)


def trace_table(trace: PeriodTrace) -> str:
    """Remainder walk as an aligned table; notes reading order when reversed."""
    headers = ["i", "remainder", "digit"]
    base = trace.params.base
    rows = [
        [str(s.index), str(s.remainder), to_digit_string(s.digit, base).render()]
        for s in trace.steps
    ]
    out = _table(headers, rows)
    if trace.right_to_left:
        out += "(digits read right to left)\n"
    return out


def cycle_table(graph: FunctionalGraph) -> str:
    """One row per cycle: index, length, vertices in successor order."""
    headers = ["cycle", "length", "vertices"]
    rows = []
    for i, cyc in enumerate(graph.cycles):
        rows.append([str(i), str(len(cyc)), " ".join(str(v) for v in cyc)])
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers[:2])]
    lines = [
        " | ".join([headers[0].rjust(widths[0]), headers[1].rjust(widths[1]), headers[2]])
    ]
    for row in rows:
        lines.append(" | ".join([row[0].rjust(widths[0]), row[1].rjust(widths[1]), row[2]]))
    return "\n".join(lines) + "\n"


def _vertex_label(v: int, base: int) -> str:
    return to_digit_string(v, base).render()


def graph_to_dot(graph: FunctionalGraph, options: ExportOptions = ExportOptions()) -> str:
    """DOT digraph with one edge statement per line, grouped by cycle.

    Vertices are numbered by residue; with label_base="base" each vertex gets
    an explicit base-B label. Exactly M edge lines are emitted since the map
    is a permutation.
    """
    base = graph.params.base
    m = graph.params.modulus
    lines = [f"digraph multiply_by_{base} {{"]
    if options.label_base == "base":
        for v in range(m):
            lines.append(f'  {v} [label="{_vertex_label(v, base)}"];')
    if options.highlight is not None:
        if not 0 <= options.highlight < m:
            raise ValidationError(f"highlight vertex {options.highlight} out of range [0, {m})")
        lines.append(f"  {options.highlight} [style=bold];")
    for cyc in graph.cycles:
        for i, v in enumerate(cyc):
            lines.append(f"  {v} -> {cyc[(i + 1) % len(cyc)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: FunctionalGraph, options: ExportOptions = ExportOptions()) -> str:
    """Versioned JSON document with params, cycles and the analytic census."""
    params = graph.params
    payload: dict = {
        "schema": 1,
        "params": {"base": params.base, "n": params.n},
        "modulus": params.modulus,
        "cycles": [list(c) for c in graph.cycles],
        "census": [
            {
                "d": r.d,
                "order": r.order,
                "phi": r.phi,
                "cycle_count": r.cycle_count,
                "cycle_length": r.cycle_length,
            }
            for r in census(params)
        ],
    }
    if options.label_base == "base":
        payload["labels"] = {str(v): _vertex_label(v, params.base) for v in range(params.modulus)}
    if options.highlight is not None:
        if not 0 <= options.highlight < params.modulus:
            raise ValidationError(
                f"highlight vertex {options.highlight} out of range [0, {params.modulus})"
            )
        payload["highlight"] = options.highlight
    return json.dumps(payload, indent=2) + "\n"
