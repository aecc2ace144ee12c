"""Pajek NET and CLU files, with multi-relational arc/edge sections.

The NET writer emits, in order: ``*vertices n``, one ``i "label"`` line per
node (coordinates optional), one ``*arcs :r "name"`` declaration per
relation in coding order, then plain ``*arcs`` / ``*edges`` sections whose
lines read ``r: n1 n2 w l "name"``. The reader tolerates ``%`` comments,
blank lines, CRLF endings, case-insensitive keywords, missing relation
prefixes (code 1), and missing ``l "name"`` suffixes.

Pajek carries no property maps, so only identity, label, coordinates,
weight, and relation survive a round trip; the edge-section grammar mirrors
the arc grammar (the format exemplar shows arcs only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO

from .coding import CodingTable, LevelPolicy, build_coding_table, encode
from .errors import CodingError, ExportError, ParseError
from .factorize import factorize_network
from .model import LinkKind, LinkRecord, Network, NodeRecord, make_network


def _quote(text: str) -> str:
    if "\n" in text or "\r" in text:
        raise ExportError(f"label {text!r} contains a line break and cannot be written")
    return '"' + text.replace('"', '""') + '"'


def _tokens(line: str, lineno: int) -> list[str]:
    """Split a line into whitespace-separated tokens honoring double quotes."""
    out = []
    i = 0
    n = len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        if line[i] == '"':
            i += 1
            buf = []
            while True:
                if i >= n:
                    raise ParseError("unterminated quoted token", line=lineno)
                if line[i] == '"':
                    if i + 1 < n and line[i + 1] == '"':
                        buf.append('"')
                        i += 2
                        continue
                    i += 1
                    break
                buf.append(line[i])
                i += 1
            out.append("".join(buf))
        else:
            j = i
            while j < n and not line[j].isspace():
                j += 1
            out.append(line[i:j])
            i = j
    return out


def _format_weight(w: float) -> str:
    if not math.isfinite(w):
        raise ExportError(f"non-finite link weight {w!r}")
    return str(int(w)) if w == int(w) else str(w)


def write_pajek_net(network: Network, base: int = 1, *, coordinates: bool = False) -> str:
    """Serialize a network as Pajek NET text (LF line endings).

    Pajek numbering is 1-based; labeled networks are factorized on the fly
    and base-0 networks are shifted up by one. Coordinates are emitted only
    when requested and both x and y are present.
    """
    if base != 1:
        raise ExportError("Pajek NET files are 1-based; base must be 1")
    net = network if network.is_factorized else factorize_network(network, 1)
    shift = 1 - net.info.org
    n = len(net.nodes)
    numbers = {node.id + shift for node in net.nodes}
    if net.nodes and numbers != set(range(1, n + 1)):
        raise ExportError("node codes do not form a contiguous 1-based range")

    lines = [f"*vertices {n}"]
    for node in net.nodes:
        lab = node.lab
        if not lab:
            try:
                lab = net.node_coding.value_of(node.id)
            except CodingError:
                lab = str(node.id + shift)
        line = f"{node.id + shift} {_quote(lab)}"
        if coordinates and node.x is not None and node.y is not None:
            line += f" {node.x} {node.y}"
        lines.append(line)

    for i, name in enumerate(net.relations.levels):
        lines.append(f"*arcs :{i + 1} {_quote(name)}")

    arcs = [l for l in net.links if l.kind is LinkKind.ARC]
    edges = [l for l in net.links if l.kind is LinkKind.EDGE]

    def link_line(link: LinkRecord) -> str:
        rel = link.rel + shift
        name = net.relations.value_of(link.rel)
        return (
            f"{rel}: {link.n1 + shift} {link.n2 + shift}"
            f" {_format_weight(link.weight)} l {_quote(name)}"
        )

    if arcs or not edges:
        lines.append("*arcs")
        lines.extend(link_line(l) for l in arcs)
    if edges:
        lines.append("*edges")
        lines.extend(link_line(l) for l in edges)
    return "\n".join(lines) + "\n"


def read_pajek_net(source: IO[str]) -> Network:
    """Parse Pajek NET text into a factorized network.

    The node coding is taken from the vertex labels (which must therefore be
    distinct); relation declarations become the relation coding table, with
    names synthesized from bare codes when a referenced relation was never
    declared.
    """
    n_declared = None
    labels: dict[int, str] = {}
    coords: dict[int, tuple[float, float]] = {}
    declarations: dict[int, str] = {}
    raw_links: list[tuple[int, int, int, float, LinkKind]] = []  # rel, n1, n2, w, kind
    section = None  # "vertices" | LinkKind

    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("%"):
            continue
        toks = _tokens(line, lineno)
        if toks[0].startswith("*"):
            keyword = toks[0].lower()
            if keyword == "*vertices":
                if len(toks) < 2:
                    raise ParseError("*vertices requires a count", line=lineno)
                try:
                    n_declared = int(toks[1])
                except ValueError:
                    raise ParseError(f"invalid vertex count {toks[1]!r}", line=lineno) from None
                section = "vertices"
            elif keyword in ("*arcs", "*edges"):
                if len(toks) >= 2 and toks[1].startswith(":"):
                    try:
                        code = int(toks[1][1:])
                    except ValueError:
                        raise ParseError(f"invalid relation code {toks[1]!r}", line=lineno) from None
                    name = toks[2] if len(toks) > 2 else str(code)
                    if declarations.get(code, name) != name:
                        raise ParseError(
                            f"relation code {code} redeclared as {name!r}"
                            f" (was {declarations[code]!r})",
                            line=lineno,
                        )
                    declarations[code] = name
                else:
                    section = LinkKind.ARC if keyword == "*arcs" else LinkKind.EDGE
            else:
                raise ParseError(f"unknown section keyword {toks[0]!r}", line=lineno)
            continue

        if n_declared is None:
            raise ParseError("data before *vertices header", line=lineno)
        if section == "vertices":
            try:
                vnum = int(toks[0])
            except ValueError:
                raise ParseError(f"invalid vertex number {toks[0]!r}", line=lineno) from None
            if not 1 <= vnum <= n_declared:
                raise ParseError(
                    f"vertex number {vnum} outside [1, {n_declared}]", line=lineno
                )
            if len(toks) > 1:
                labels[vnum] = toks[1]
            if len(toks) > 3:
                try:
                    coords[vnum] = (float(toks[2]), float(toks[3]))
                except ValueError:
                    pass  # shape parameters, not coordinates
        elif isinstance(section, LinkKind):
            rel, n1, n2, weight, name = _parse_link_tokens(toks, lineno)
            for v in (n1, n2):
                if not 1 <= v <= n_declared:
                    raise ParseError(
                        f"vertex number {v} outside [1, {n_declared}]", line=lineno
                    )
            if name is not None:
                if declarations.get(rel, name) != name:
                    raise ParseError(
                        f"relation code {rel} used as {name!r}"
                        f" (declared {declarations[rel]!r})",
                        line=lineno,
                    )
                declarations.setdefault(rel, name)
            raw_links.append((rel, n1, n2, weight, section))
        else:
            raise ParseError("link data before a section header", line=lineno)

    if n_declared is None:
        raise ParseError("missing *vertices header")

    nodes = []
    for i in range(1, n_declared + 1):
        lab = labels.get(i, str(i))
        xy = coords.get(i)
        nodes.append(
            NodeRecord(id=i, lab=lab, x=xy[0] if xy else None, y=xy[1] if xy else None)
        )
    node_levels = tuple(n.lab for n in nodes)
    if len(set(node_levels)) != len(node_levels):
        raise ParseError("duplicate vertex labels prevent building the node coding")
    node_coding = CodingTable("node", node_levels, base=1)

    codes = set(declarations) | {rel for rel, *_ in raw_links}
    if codes:
        lo, hi = min(codes), max(codes)
        if lo < 1:
            raise ParseError(f"relation code {lo} is below 1")
        levels = tuple(declarations.get(c, str(c)) for c in range(lo, hi + 1))
        try:
            relations = CodingTable("relation", levels, base=lo)
        except ValueError as exc:
            raise ParseError(f"relation names are not distinct: {exc}") from None
    else:
        relations = CodingTable("relation")

    links = tuple(
        LinkRecord(kind=kind, n1=n1, n2=n2, rel=rel, weight=weight)
        for rel, n1, n2, weight, kind in raw_links
    )
    directed = any(l.kind is LinkKind.ARC for l in links) or not links
    return make_network(
        nodes, links, org=1, directed=directed, relations=relations, node_coding=node_coding
    )


def _parse_link_tokens(toks: list[str], lineno: int):
    rel = 1
    i = 0
    if toks[0].endswith(":"):
        try:
            rel = int(toks[0][:-1])
        except ValueError:
            raise ParseError(f"invalid relation prefix {toks[0]!r}", line=lineno) from None
        i = 1
    if len(toks) < i + 2:
        raise ParseError("link line needs two vertex numbers", line=lineno)
    try:
        n1 = int(toks[i])
        n2 = int(toks[i + 1])
    except ValueError:
        raise ParseError("link endpoints must be vertex numbers", line=lineno) from None
    i += 2
    weight = 1.0
    if i < len(toks) and toks[i] != "l":
        try:
            weight = float(toks[i])
        except ValueError:
            raise ParseError(f"invalid link weight {toks[i]!r}", line=lineno) from None
        i += 1
    name = None
    if i < len(toks):
        if toks[i] != "l" or len(toks) < i + 2:
            raise ParseError("expected relation suffix of the form: l \"name\"", line=lineno)
        name = toks[i + 1]
    return rel, n1, n2, weight, name


@dataclass(frozen=True)
class Partition:
    """One integer class code per node, aligned with node order.

    ``name`` is descriptive metadata (the property partitioned on) and is
    excluded from equality; CLU files do not carry it.
    """

    name: str = field(compare=False)
    values: tuple[int, ...] = ()
    coding: CodingTable = field(default_factory=lambda: CodingTable(""))
    missing_code: int = 0


def partition_from_property(
    network: Network, property: str, base: int = 1, missing_code: int = 0
) -> Partition:
    """Build a partition from a categorical node property.

    Levels are sorted; nodes without the property get ``missing_code``.
    The property must be present on at least one node.
    """
    if base != 1:
        raise ValueError("partitions are 1-based; base must be 1")
    values = []
    for node in network.nodes:
        v = node.mode if property == "mode" else node.props.get(property)
        if v is None:
            values.append(None)
        elif isinstance(v, bool):
            values.append("true" if v else "false")
        elif isinstance(v, (int, float, str)):
            values.append(str(v))
        else:
            raise CodingError(f"property {property!r} holds structured values; not categorical")
    if all(v is None for v in values):
        raise CodingError(f"unknown property {property!r}: absent on every node")
    coding = build_coding_table(property, values, LevelPolicy.SORTED, base)
    return Partition(
        name=property,
        values=tuple(encode(values, coding, missing_code)),
        coding=coding,
        missing_code=missing_code,
    )


def _legend_token(level: str) -> str:
    if any(c.isspace() for c in level) or '"' in level:
        return _quote(level)
    return level


def write_pajek_clu(partition: Partition) -> str:
    """Serialize a partition as CLU text: legend comment, header, one value
    per line."""
    if len(partition.coding) and partition.coding.base != 1:
        raise ExportError("CLU files are 1-based; re-code the partition with base 1")
    lines = []
    if len(partition.coding):
        pairs = " ".join(
            f"{partition.coding.base + i} {_legend_token(level)}"
            for i, level in enumerate(partition.coding.levels)
        )
        lines.append(f"% {pairs}")
    lines.append(f"*vertices {len(partition.values)}")
    lines.extend(str(v) for v in partition.values)
    return "\n".join(lines) + "\n"


def read_pajek_clu(source: IO[str]) -> Partition:
    """Parse CLU text; the legend comment is optional (levels are then
    synthesized from the codes in use, with 0 read as the missing code)."""
    coding = None
    n_declared = None
    values: list[int] = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        if line.lstrip().startswith("%"):
            if coding is None and n_declared is None:
                coding = _parse_legend(line.lstrip()[1:], lineno)
            continue
        toks = _tokens(line, lineno)
        if toks[0].startswith("*"):
            if toks[0].lower() != "*vertices" or len(toks) < 2:
                raise ParseError(f"unexpected header {line!r}", line=lineno)
            n_declared = int(toks[1])
            continue
        if n_declared is None:
            raise ParseError("values before *vertices header", line=lineno)
        try:
            values.append(int(toks[0]))
        except ValueError:
            raise ParseError(f"invalid partition value {toks[0]!r}", line=lineno) from None

    if n_declared is None:
        raise ParseError("missing *vertices header")
    if len(values) != n_declared:
        raise ParseError(f"expected {n_declared} values, found {len(values)}")
    if coding is None:
        live = sorted(set(values) - {0})
        if live:
            coding = CodingTable("", tuple(str(c) for c in range(live[0], live[-1] + 1)), live[0])
        else:
            coding = CodingTable("")
    for i, v in enumerate(values):
        if v != 0 and not coding.in_range(v):
            raise ParseError(f"value {v} at position {i} outside the coded range")
    return Partition(name="", values=tuple(values), coding=coding, missing_code=0)


def _parse_legend(body: str, lineno: int) -> CodingTable | None:
    toks = _tokens(body, lineno)
    if not toks or len(toks) % 2 != 0:
        return None
    codes = []
    levels = []
    for i in range(0, len(toks), 2):
        try:
            codes.append(int(toks[i]))
        except ValueError:
            return None
        levels.append(toks[i + 1])
    if codes != list(range(codes[0], codes[0] + len(codes))):
        return None
    try:
        return CodingTable("", tuple(levels), codes[0])
    except ValueError:
        return None
