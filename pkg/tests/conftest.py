from __future__ import annotations

from pathlib import Path

import pytest

from netconv import (
    TableOptions,
    canonical_order,
    read_link_table,
    read_node_table,
    tables_to_network,
)

DATA = Path(__file__).parent / "data"


def normalize_layout(text: str) -> str:
    """Collapse token spacing and drop blank lines, keeping token content."""
    lines = []
    for line in text.splitlines():
        toks = line.split()
        if toks:
            lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def bib_node_table():
    with open(DATA / "bibNodes.csv", encoding="utf-8", newline="") as stream:
        return read_node_table(stream, TableOptions())


@pytest.fixture(scope="session")
def bib_link_table():
    with open(DATA / "bibLinks.csv", encoding="utf-8", newline="") as stream:
        return read_link_table(stream, TableOptions())


@pytest.fixture(scope="session")
def bib_network(bib_node_table, bib_link_table):
    return tables_to_network(bib_node_table, bib_link_table, directed=True, base=1)


@pytest.fixture(scope="session")
def bib_canonical(bib_network):
    return canonical_order(bib_network)


@pytest.fixture(scope="session")
def bib_golden_net():
    """Reference NET rendering of the bibliographic dataset (original
    layout: spacing runs and a leading space per line, normalized away by
    :func:`normalize_layout`)."""
    with open(DATA / "bib.golden.net", encoding="utf-8") as stream:
        return stream.read()
