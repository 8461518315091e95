"""Static and interactive pictures: census plots and partition/certificate views."""

import os
from typing import Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from pyvis.network import Network  # noqa: E402

from algorithms.census import BrooksReport, SweepReport  # noqa: E402
from algorithms.data_structures.hypergraph import Hypergraph  # noqa: E402
from algorithms.hardpair import HardPairCertificate  # noqa: E402

PALETTE = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45"]
TYPE_COLOURS = {"M": "#4363d8", "K": "#e6194b", "C": "#3cb44b"}


def _network(graph: Hypergraph, colours: Mapping[str, str], titles: Mapping[str, str]) -> Network:
    net = Network(height="750px", width="100%")
    for v in graph.vertices:
        net.add_node(v, label=v, color=colours.get(v, "#999999"), title=titles.get(v, v))
    for e in graph.edges:
        if e.arity == 2:
            a, b = sorted(e.members)
            net.add_edge(a, b, title=e.name)
        else:
            # hyperedges are drawn as a small hub joined to each member
            net.add_node(e.name, label="", shape="dot", size=4, color="#555555", title=e.name)
            for v in sorted(e.members):
                net.add_edge(e.name, v)
    return net


def partition_html(graph: Hypergraph, classes: Mapping[str, object], path: str) -> str:
    """Colour every vertex by its class or colour name and save an interactive HTML page."""
    keys = sorted({str(c) for c in classes.values()})
    colour_of = {k: PALETTE[i % len(PALETTE)] for i, k in enumerate(keys)}
    colours = {v: colour_of[str(c)] for v, c in classes.items()}
    titles = {v: f"{v}: class {c}" for v, c in classes.items()}
    return _write(_network(graph, colours, titles), path)


def certificate_html(graph: Hypergraph, certificates: Mapping[frozenset[str], HardPairCertificate], path: str) -> str:
    colours: dict[str, str] = {}
    titles: dict[str, str] = {}
    for certificate in certificates.values():
        for entry in certificate:
            for v in entry.vertices:
                colours.setdefault(v, TYPE_COLOURS[entry.tag.kind])
                titles[v] = titles.get(v, v) + f" | {entry.tag.kind} f_B={entry.function[v]}"
    return _write(_network(graph, colours, titles), path)


def _write(net: Network, path: str) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    net.write_html(path)
    return path


def plot_sweep(report: SweepReport, path: str) -> str:
    orders = sorted(report.rows)
    hard = [report.rows[n].hard for n in orders]
    partitionable = [report.rows[n].partitionable for n in orders]
    plt.bar(orders, partitionable, color="green", label="partitionable")
    plt.bar(orders, hard, bottom=partitionable, color="red", label="hard")
    plt.xlabel("n (Number of Vertices)")
    plt.ylabel("Instances")
    plt.title(f"Tight instances by order ({len(report.disagreements)} disagreements)")
    plt.legend()
    plt.tight_layout()
    return _save(path)


def plot_brooks(report: BrooksReport, path: str) -> str:
    orders = sorted(report.rows)
    plt.bar(orders, [report.rows[n].graphs for n in orders], color="blue", label="connected graphs")
    plt.bar(orders, [report.rows[n].extremal for n in orders], color="orange", label="list-chromatic = max degree + 1")
    plt.xlabel("n (Number of Vertices)")
    plt.ylabel("Graphs")
    plt.yscale("log")
    plt.title(f"Brooks census ({len(report.exceptions)} exceptions)")
    plt.legend()
    plt.tight_layout()
    return _save(path)


def _save(path: str) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    plt.savefig(path)
    plt.clf()
    return path
