from __future__ import annotations

import socket
from pathlib import Path

import pytest

from qmigrate.corpus import load_corpus
from qmigrate.pipeline import reference_cassette_path, reference_corpus_path, reference_taxonomy_path
from qmigrate.taxonomy import parse_taxonomy

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def taxonomy():
    return parse_taxonomy(reference_taxonomy_path().read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def corpus(taxonomy):
    return load_corpus(reference_corpus_path(), taxonomy)


@pytest.fixture(scope="session")
def cassette_dir():
    return reference_cassette_path()


@pytest.fixture
def no_network(monkeypatch):
    """Any attempt to open a socket fails the test."""

    def guard(*args, **kwargs):
        raise AssertionError("network access attempted")

    monkeypatch.setattr(socket.socket, "connect", guard)
    monkeypatch.setattr(socket, "create_connection", guard)
    monkeypatch.setattr(socket, "getaddrinfo", guard)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
