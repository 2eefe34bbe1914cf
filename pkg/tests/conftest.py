"""Shared fixtures: the standard corpus, built once per session."""

import pytest

from resmat import standard_corpus
from resmat.resistance import ResistanceWorkspace


@pytest.fixture(scope="session")
def corpus():
    """The 40 (descriptor, graph) pairs of the standard verification corpus."""
    return standard_corpus()


@pytest.fixture(scope="session")
def corpus_workspaces(corpus):
    """One prebuilt workspace per corpus graph, shared across tests."""
    return [(desc, g, ResistanceWorkspace(g)) for desc, g in corpus]
