from typing import Optional

import networkx as nx

from relation_core.pairs import IdealSet, SupportRelation

IDEAL_COLOR = "red"


def relation_graph(
    relation: SupportRelation, ideal: Optional[IdealSet] = None
) -> nx.DiGraph:
    """Digraph of the support relation: nodes 1..n, one edge per off-diagonal pair.

    Pairs of the ideal are coloured; diagonal ideal pairs colour their node.
    """
    graph = nx.DiGraph(name=f"P{relation.n}")
    for index in range(1, relation.n + 1):
        attributes = {}
        if ideal is not None and (index, index) in ideal:
            attributes = {"color": IDEAL_COLOR, "style": "filled"}
        graph.add_node(index, **attributes)

    for i, j in relation.pairs:
        if i == j:
            continue
        attributes = {}
        if ideal is not None and (i, j) in ideal:
            attributes = {"color": IDEAL_COLOR, "penwidth": "2"}
        graph.add_edge(i, j, **attributes)

    return graph


def relation_to_dot(
    relation: SupportRelation, ideal: Optional[IdealSet] = None
) -> str:
    return nx.nx_pydot.to_pydot(relation_graph(relation, ideal)).to_string()
