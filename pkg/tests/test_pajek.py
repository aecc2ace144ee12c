from __future__ import annotations

import io
import random
import re

import pytest

import oracles
from conftest import normalize_layout
from netconv import (
    CodingError,
    CodingTable,
    ExportError,
    LinkKind,
    LinkRecord,
    Network,
    NodeRecord,
    ParseError,
    Partition,
    canonical_order,
    defactorize_network,
    factorize_network,
    make_network,
    network_stats,
    partition_from_property,
    read_pajek_clu,
    read_pajek_net,
    write_pajek_clu,
    write_pajek_net,
)
from netgen import random_pajek_network

# Frozen from the brute-force oracle over the bundled node table.
SEX_VALUES = (2, 2, 1, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
MODE_VALUES = (4, 4, 4, 4, 4, 4, 3, 3, 3, 1, 2, 2, 2, 6, 5, 5)


class TestWriteNet:
    def test_matches_golden_reference(self, bib_canonical, bib_golden_net):
        ours = write_pajek_net(bib_canonical)
        assert normalize_layout(ours) == normalize_layout(bib_golden_net)

    def test_empty_network(self):
        assert write_pajek_net(Network()) == "*vertices 0\n*arcs\n"

    def test_single_undirected_edge(self):
        net = make_network(
            [NodeRecord(id="1", lab="1"), NodeRecord(id="2", lab="2")],
            [LinkRecord(kind=LinkKind.EDGE, n1="1", n2="2", rel="rel")],
            directed=False,
        )
        expected = (
            "*vertices 2\n"
            '1 "1"\n'
            '2 "2"\n'
            '*arcs :1 "rel"\n'
            "*edges\n"
            '1: 1 2 1 l "rel"\n'
        )
        assert write_pajek_net(net) == expected

    def test_relation_declarations_increase_from_one(self, bib_canonical):
        text = write_pajek_net(bib_canonical)
        codes = [int(m) for m in re.findall(r"^\*arcs :(\d+)", text, re.M)]
        assert codes == list(range(1, len(codes) + 1))

    def test_coordinates_flag(self, bib_canonical):
        off = write_pajek_net(bib_canonical)
        on = write_pajek_net(bib_canonical, coordinates=True)
        assert '1 "Batagelj, Vladimir"\n' in off
        assert '1 "Batagelj, Vladimir" 809.1 653.7\n' in on

    def test_embedded_quotes_doubled(self):
        net = make_network([NodeRecord(id='say "hi"', lab='say "hi"')], [])
        assert '1 "say ""hi"""' in write_pajek_net(net)

    def test_newline_in_label_rejected(self):
        net = make_network([NodeRecord(id="a\nb", lab="a\nb")], [])
        with pytest.raises(ExportError):
            write_pajek_net(net)

    def test_base_zero_network_shifted_up(self, bib_canonical):
        zero = factorize_network(bib_canonical, base=0)
        assert write_pajek_net(zero) == write_pajek_net(bib_canonical)

    def test_requested_base_zero_rejected(self, bib_canonical):
        with pytest.raises(ExportError):
            write_pajek_net(bib_canonical, base=0)

    def test_non_contiguous_codes_rejected(self):
        net = Network(
            nodes=(NodeRecord(id=1, lab="a"), NodeRecord(id=3, lab="b")),
            node_coding=CodingTable("node", ("a", "b"), 1),
        )
        with pytest.raises(ExportError, match="contiguous"):
            write_pajek_net(net)


class TestReadNet:
    def test_golden_text(self, bib_golden_net):
        net = read_pajek_net(io.StringIO(bib_golden_net))
        # NET files carry no node modes, so the mode count stays 1.
        assert network_stats(net) == (16, 19, 0, 5, 1)
        assert net.is_factorized
        assert net.node_coding.value_of(10) == "Generalized Blockmodeling"
        assert net.relations.levels == (
            "authorOf",
            "cites",
            "containedIn",
            "editorOf",
            "publishedBy",
        )

    def test_empty(self):
        net = read_pajek_net(io.StringIO("*vertices 0\n*arcs\n"))
        assert net == make_network([], [], org=1, directed=True)

    def test_arc_line_fields(self):
        text = '*vertices 10\n*arcs :2 "cites"\n*arcs\n2: 9 10 1 l "cites"\n'
        net = read_pajek_net(io.StringIO(text))
        link = net.links[0]
        assert link.kind is LinkKind.ARC
        assert (link.n1, link.n2, link.weight) == (9, 10, 1.0)
        assert net.relations.value_of(link.rel) == "cites"

    def test_vertex_out_of_range_reports_line(self):
        with pytest.raises(ParseError, match="line 3"):
            read_pajek_net(io.StringIO('*vertices 1\n1 "a"\n2 "b"\n'))

    def test_link_endpoint_out_of_range(self):
        with pytest.raises(ParseError, match="outside"):
            read_pajek_net(io.StringIO("*vertices 1\n*arcs\n1 2\n"))

    def test_unknown_section(self):
        with pytest.raises(ParseError, match="unknown section"):
            read_pajek_net(io.StringIO("*vertices 0\n*matrix\n"))

    def test_redeclared_relation_code_conflicts(self):
        text = '*vertices 0\n*arcs :1 "a"\n*arcs :1 "b"\n'
        with pytest.raises(ParseError, match="redeclared"):
            read_pajek_net(io.StringIO(text))

    def test_tolerances(self):
        text = (
            "% a comment\r\n"
            "\r\n"
            "*Vertices 2\r\n"
            ' 1 "a"\r\n'
            "\r\n"
            "*ARCS\r\n"
            "1 2\r\n"
        )
        net = read_pajek_net(io.StringIO(text))
        assert network_stats(net) == (2, 1, 0, 1, 1)
        assert net.links[0].rel == 1  # missing prefix defaults to relation 1
        assert net.nodes[1].lab == "2"  # synthesized label

    def test_undeclared_relation_name_synthesized(self):
        net = read_pajek_net(io.StringIO("*vertices 2\n*arcs\n3: 1 2\n"))
        assert net.relations.value_of(3) == "3"

    def test_empty_input(self):
        with pytest.raises(ParseError, match="vertices"):
            read_pajek_net(io.StringIO(""))
        with pytest.raises(ParseError, match="vertices"):
            read_pajek_clu(io.StringIO(""))

    def test_round_trip_random_property_free(self):
        rng = random.Random(4321)
        for _ in range(30):
            net, with_coords = random_pajek_network(rng, max_nodes=40, max_links=40)
            text = write_pajek_net(net, coordinates=with_coords)
            back = defactorize_network(read_pajek_net(io.StringIO(text)))
            assert back == canonical_order(net)


class TestPartition:
    def test_sex_partition_matches_oracle(self, bib_network, bib_node_table):
        column = bib_node_table.column("sex")
        levels = oracles.sorted_levels(column)
        expected = tuple(oracles.positional_encode(column, levels, 1, 0))
        part = partition_from_property(bib_network, "sex")
        assert part.values == expected == SEX_VALUES
        assert part.coding.levels == ("f", "m")

    def test_mode_partition_matches_oracle(self, bib_network, bib_node_table):
        column = bib_node_table.column("mode")
        levels = oracles.sorted_levels(column)
        expected = tuple(oracles.positional_encode(column, levels, 1, 0))
        part = partition_from_property(bib_network, "mode")
        assert part.values == expected == MODE_VALUES
        assert part.coding.levels == ("book", "journal", "paper", "person", "publisher", "series")
        assert part.values[0] == 4  # first node is a person

    def test_single_node(self):
        net = make_network([NodeRecord(id="a", lab="a", mode="m")], [])
        part = partition_from_property(net, "mode")
        assert part.values == (1,)

    def test_unknown_property(self, bib_network):
        with pytest.raises(CodingError, match="unknown property"):
            partition_from_property(bib_network, "shoe_size")


class TestCluFiles:
    def test_write_sex_partition(self, bib_network):
        part = partition_from_property(bib_network, "sex")
        text = write_pajek_clu(part)
        lines = text.splitlines()
        assert lines[0] == "% 1 f 2 m"
        assert lines[1] == "*vertices 16"
        assert len(lines) == 18
        assert tuple(int(v) for v in lines[2:]) == SEX_VALUES

    def test_write_mode_legend(self, bib_network):
        part = partition_from_property(bib_network, "mode")
        legend = write_pajek_clu(part).splitlines()[0]
        assert legend == "% 1 book 2 journal 3 paper 4 person 5 publisher 6 series"

    def test_empty_partition(self):
        assert write_pajek_clu(Partition(name="")) == "*vertices 0\n"

    def test_round_trip(self, bib_network):
        for prop in ("sex", "mode"):
            part = partition_from_property(bib_network, prop)
            back = read_pajek_clu(io.StringIO(write_pajek_clu(part)))
            assert back == part

    def test_read_bare_values(self):
        part = read_pajek_clu(io.StringIO("*vertices 2\n1\n1\n"))
        assert part.values == (1, 1)

    def test_count_mismatch(self):
        with pytest.raises(ParseError, match="expected 2 values"):
            read_pajek_clu(io.StringIO("*vertices 2\n1\n"))

    def test_legend_with_spaces_quoted(self):
        coding = CodingTable("kind", ("two words", "one"), 1)
        part = Partition(name="kind", values=(1, 2), coding=coding)
        text = write_pajek_clu(part)
        assert '"two words"' in text
        assert read_pajek_clu(io.StringIO(text)) == part

    def test_base_zero_coding_rejected(self):
        coding = CodingTable("p", ("a", "b"), 0)
        with pytest.raises(ExportError):
            write_pajek_clu(Partition(name="p", values=(0, 1), coding=coding))
