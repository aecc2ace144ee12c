"""In-memory network model shared by every reader and writer.

A network N = (V, L, P, W) is a list of node records with properties, a list
of link records with weights, an info block of metadata, and the coding
tables that make the integer-coded (factorized) representation invertible.

Networks are immutable after construction; transformations return new
instances. Property values are plain Python values: None stands for a
missing (absent) value, bool/int/float/str for scalars, lists for subsets
and series, dicts for opaque structured values, plus the two dedicated
types :class:`Interval` and :class:`TemporalQuantity`.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, NamedTuple, Optional, Sequence

from .coding import CodingTable, LevelPolicy, build_coding_table
from .errors import StructuralError

# Tagged union of supported property values. Absent is represented by None
# (in property maps: by the key not being present).
PropertyValue = Any


@dataclass(frozen=True)
class Interval:
    """Closed numeric interval [lo, hi]."""

    lo: float
    hi: float


@dataclass(frozen=True)
class TemporalQuantity:
    """A value defined piecewise over half-open integer time intervals.

    Each triple (s, f, v) means the value v holds on [s, f). Well-formed
    quantities have s < f, triples sorted by s, and no overlaps; violations
    are representable so validators can report them.
    """

    triples: tuple[tuple[int, int, PropertyValue], ...] = ()

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)


def tq_value_at(tq: TemporalQuantity, t: int) -> PropertyValue:
    """Value of a temporal quantity at time t; None when no interval covers t.

    Assumes the quantity is well-formed (sorted, disjoint) and binary-searches
    the interval starts.
    """
    starts = [s for s, _, _ in tq.triples]
    i = bisect.bisect_right(starts, t) - 1
    if i >= 0:
        s, f, v = tq.triples[i]
        if s <= t < f:
            return v
    return None


class LinkKind(str, Enum):
    ARC = "arc"
    EDGE = "edge"


@dataclass(frozen=True)
class TimeWindow:
    """Lifetime [t_min, t_max] of a temporal network with optional point labels."""

    t_min: int
    t_max: int
    t_labs: dict[int, str] = field(default_factory=dict)


@dataclass(frozen=True)
class EventRecord:
    """One entry of the dataset's life log (creation, release, publication, ...)."""

    date: str
    title: str
    author: Optional[str] = None
    desc: Optional[str] = None
    url: Optional[str] = None
    cite: Optional[str] = None
    copy: Optional[str] = None
    extra: dict[str, PropertyValue] = field(default_factory=dict)


@dataclass(frozen=True)
class InfoBlock:
    """Network-level metadata: counters, flags, provenance.

    ``org`` is the smallest index used by coded identifiers (0 or 1).
    The counters mirror the node and link lists; readers recompute them.
    """

    org: int = 1
    n_nodes: int = 0
    n_arcs: int = 0
    n_edges: int = 0
    simple: bool = False
    directed: bool = True
    multirel: bool = False
    mode: int = 1
    network: str = ""
    title: str = ""
    time: Optional[TimeWindow] = None
    meta: tuple[EventRecord, ...] = ()
    created: Optional[str] = None
    modified: Optional[str] = None
    extra: dict[str, PropertyValue] = field(default_factory=dict)


@dataclass(frozen=True)
class NodeRecord:
    """A node: identity, labels, coordinates, and a free property map.

    ``id`` is text in labeled form or an integer code in factorized form.
    """

    id: str | int
    lab: str = ""
    slab: Optional[str] = None
    x: Optional[float] = None
    y: Optional[float] = None
    mode: Optional[str] = None
    tq: Optional[TemporalQuantity] = None
    props: dict[str, PropertyValue] = field(default_factory=dict)


@dataclass(frozen=True)
class LinkRecord:
    """A link between two nodes; an arc is directed n1 -> n2, an edge is not."""

    kind: LinkKind
    n1: str | int
    n2: str | int
    rel: str | int
    weight: float = 1.0
    label: Optional[str] = None
    tq: Optional[TemporalQuantity] = None
    props: dict[str, PropertyValue] = field(default_factory=dict)


@dataclass(frozen=True)
class Network:
    """The complete model: info block, records, and coding tables."""

    info: InfoBlock = field(default_factory=InfoBlock)
    nodes: tuple[NodeRecord, ...] = ()
    links: tuple[LinkRecord, ...] = ()
    relations: CodingTable = field(default_factory=lambda: CodingTable("relation"))
    node_coding: CodingTable = field(default_factory=lambda: CodingTable("node"))
    property_codings: dict[str, CodingTable] = field(default_factory=dict)

    @property
    def is_factorized(self) -> bool:
        """True when node identities are integer codes. Empty networks count
        as labeled."""
        return bool(self.nodes) and isinstance(self.nodes[0].id, int)


class NetworkStats(NamedTuple):
    n_nodes: int
    n_arcs: int
    n_edges: int
    n_relations: int
    n_modes: int


def network_stats(network: Network) -> NetworkStats:
    """Counts computed from the node and link lists, never copied from info.

    n_relations counts distinct relation values referenced by links;
    n_modes counts distinct node modes, 1 when no node carries a mode.
    """
    ids = {n.id for n in network.nodes}
    n_arcs = 0
    n_edges = 0
    rels = set()
    for i, link in enumerate(network.links):
        if link.n1 not in ids or link.n2 not in ids:
            raise StructuralError(f"link {i} references unknown node ({link.n1!r}, {link.n2!r})")
        if link.kind is LinkKind.ARC:
            n_arcs += 1
        else:
            n_edges += 1
        rels.add(link.rel)
    modes = {n.mode for n in network.nodes if n.mode is not None}
    return NetworkStats(len(network.nodes), n_arcs, n_edges, len(rels), max(1, len(modes)))


def _parallel_links_exist(links: Sequence[LinkRecord]) -> bool:
    # Arcs compare ordered endpoint pairs, edges unordered.
    seen = set()
    for link in links:
        if link.kind is LinkKind.EDGE:
            ends = frozenset((link.n1, link.n2))
        else:
            ends = (link.n1, link.n2)
        key = (link.kind, link.rel, ends)
        if key in seen:
            return True
        seen.add(key)
    return False


def make_network(
    nodes: Sequence[NodeRecord],
    links: Sequence[LinkRecord],
    *,
    info: Optional[InfoBlock] = None,
    org: int = 1,
    directed: bool = True,
    relations: Optional[CodingTable] = None,
    node_coding: Optional[CodingTable] = None,
    property_codings: Optional[dict[str, CodingTable]] = None,
) -> Network:
    """Assemble a network, reconciling the info counters with the lists.

    When ``info`` is given its descriptive fields are kept and only the
    counters are recomputed; otherwise the simple/multirel/mode flags are
    computed from content. Missing coding tables are derived: relations
    sorted from the link relation names, node coding in file order from the
    node identifiers (labeled form only).
    """
    nodes = tuple(nodes)
    links = tuple(links)
    ids = [n.id for n in nodes]
    if len(set(ids)) != len(ids):
        dupes = sorted({str(i) for i in ids if ids.count(i) > 1})
        raise StructuralError(f"duplicate node identifier(s): {', '.join(dupes)}")

    labeled = not (nodes and isinstance(nodes[0].id, int))
    if relations is None:
        rel_names = [link.rel for link in links]
        if any(not isinstance(r, str) for r in rel_names):
            raise StructuralError("cannot derive relation names from coded links")
        base = info.org if info is not None else org
        relations = build_coding_table("relation", rel_names, LevelPolicy.SORTED, base)
    if node_coding is None:
        if labeled:
            base = info.org if info is not None else org
            node_coding = build_coding_table("node", [str(i) for i in ids], LevelPolicy.FILE_ORDER, base)
        else:
            node_coding = CodingTable("node")

    net = Network(
        info=info if info is not None else InfoBlock(org=org, directed=directed),
        nodes=nodes,
        links=links,
        relations=relations,
        node_coding=node_coding,
        property_codings=dict(property_codings or {}),
    )
    stats = network_stats(net)
    new_info = replace(
        net.info, n_nodes=stats.n_nodes, n_arcs=stats.n_arcs, n_edges=stats.n_edges
    )
    if info is None:
        new_info = replace(
            new_info,
            simple=not _parallel_links_exist(links),
            multirel=stats.n_relations > 1,
            mode=stats.n_modes,
        )
    return replace(net, info=new_info)


def canonical_order(network: Network) -> Network:
    """Normalize a network for deterministic emission.

    Relation levels are sorted by Unicode code point (coded links are
    remapped to the new codes); node and link order are preserved; the info
    counters are recomputed. Idempotent.
    """
    old = network.relations
    new_rel = CodingTable(old.name, tuple(sorted(old.levels)), old.base)
    links = network.links
    if new_rel.levels != old.levels and any(isinstance(l.rel, int) for l in links):
        links = tuple(
            replace(l, rel=new_rel.code_of(old.value_of(l.rel))) if isinstance(l.rel, int) else l
            for l in links
        )
    net = replace(network, relations=new_rel, links=links)
    stats = network_stats(net)
    return replace(
        net,
        info=replace(net.info, n_nodes=stats.n_nodes, n_arcs=stats.n_arcs, n_edges=stats.n_edges),
    )
