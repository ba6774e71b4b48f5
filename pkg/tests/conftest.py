"""Shared helpers: conversion to networkx, which the tests use as an
independent oracle for isomorphism and the graph6 codec."""

import sys

import networkx as nx

from gammarho.graphs import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(G) -> Graph:
    relabel = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph.from_edges(
        G.number_of_nodes(),
        [(relabel[u], relabel[v]) for u, v in G.edges()],
    )


def pytest_terminal_summary(terminalreporter):
    # capture hides per-test prints on success; re-emit the acceptance lines
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.CRITERION_LINES:
            terminalreporter.write_line(line)
