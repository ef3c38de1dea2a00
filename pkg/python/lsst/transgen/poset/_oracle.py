"""Maximum antichains computed without rank structure.

By Dilworth's theorem the width of a finite poset equals the size of a
minimum chain cover, and by Konig's theorem that is ``n`` minus a maximum
matching in the bipartite graph with an edge ``x -> y`` for every ``x < y``.
"""

from __future__ import annotations

__all__ = ("MAX_ORACLE_ELEMENTS", "MAX_ORACLE_PAIRS", "Poset", "width_oracle")

import logging
import random
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import product

import networkx as nx
from networkx.algorithms import bipartite

from ..errors import ResourceGuardError
from ._chains import ChainProduct

MAX_ORACLE_ELEMENTS = 10**4

MAX_ORACLE_PAIRS = 2 * 10**6

MAX_EXHAUSTIVE_ELEMENTS = 24


def _matching_width(n: int, pairs: Iterable[tuple[int, int]]) -> int:
    graph = nx.Graph()
    left = [("lo", i) for i in range(n)]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("hi", i) for i in range(n)), bipartite=1)
    graph.add_edges_from((("lo", x), ("hi", y)) for x, y in pairs)
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    # The matching dict holds each matched edge in both directions.
    return n - len(matching) // 2


def width_oracle(poset: ChainProduct) -> int:
    """Width of a chain product by maximum bipartite matching.

    Raises
    ------
    ResourceGuardError
        Raised if the poset has more than `MAX_ORACLE_ELEMENTS` elements or
        more than `MAX_ORACLE_PAIRS` comparable pairs.
    """
    logger = logging.getLogger(__name__)

    n = poset.cardinality
    if n > MAX_ORACLE_ELEMENTS or poset.comparable_pairs > MAX_ORACLE_PAIRS:
        raise ResourceGuardError(
            f"Width oracle limited to {MAX_ORACLE_ELEMENTS} elements and {MAX_ORACLE_PAIRS} comparable "
            f"pairs; chains {poset.sizes} give {n} and {poset.comparable_pairs}"
        )
    sizes = [k for k in poset.sizes if k > 1]
    elements = list(product(*(range(k) for k in sizes)))
    index = {x: i for i, x in enumerate(elements)}

    def pairs() -> Iterable[tuple[int, int]]:
        for x in elements:
            i = index[x]
            for y in product(*(range(xi, k) for xi, k in zip(x, sizes))):
                if y != x:
                    yield i, index[y]

    width = _matching_width(n, pairs())
    logger.debug("Matching width of chains %s is %d", poset.sizes, width)
    return width


@dataclass(frozen=True)
class Poset:
    """A finite poset on ``range(size)``."""

    size: int

    relation: frozenset[tuple[int, int]]
    """All pairs ``(x, y)`` with ``x < y``; transitively closed."""

    @classmethod
    def from_relation(cls, size: int, pairs: Iterable[tuple[int, int]]) -> Poset:
        """Build a poset from generating pairs, closing them transitively.

        Raises
        ------
        ValueError
            Raised if the pairs contain a cycle.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(size))
        graph.add_edges_from(pairs)
        if not nx.is_directed_acyclic_graph(graph):
            raise ValueError("Order relation contains a cycle")
        closure = nx.transitive_closure_dag(graph)
        return cls(size, frozenset(closure.edges()))

    @classmethod
    def random(cls, size: int, density: float, seed: int) -> Poset:
        """Random poset: each pair ``i < j`` of a hidden linear extension is
        a generating relation with probability ``density``.
        """
        rng = random.Random(seed)
        labels = list(range(size))
        rng.shuffle(labels)
        pairs = [
            (labels[i], labels[j]) for i in range(size) for j in range(i + 1, size) if rng.random() < density
        ]
        return cls.from_relation(size, pairs)

    def less(self, x: int, y: int) -> bool:
        return (x, y) in self.relation

    def comparable(self, x: int, y: int) -> bool:
        return (x, y) in self.relation or (y, x) in self.relation

    def longest_chain(self) -> int:
        """Number of elements in a longest chain."""
        if self.size == 0:
            return 0
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(self.relation)
        return nx.dag_longest_path_length(graph) + 1

    def width_matching(self) -> int:
        """Width by minimum chain cover."""
        return _matching_width(self.size, self.relation)

    def width_exhaustive(self) -> int:
        """Width by branch and bound over antichains.

        Raises
        ------
        ResourceGuardError
            Raised above `MAX_EXHAUSTIVE_ELEMENTS` elements.
        """
        if self.size > MAX_EXHAUSTIVE_ELEMENTS:
            raise ResourceGuardError(
                f"Exhaustive width limited to {MAX_EXHAUSTIVE_ELEMENTS} elements, got {self.size}"
            )
        incomparable = [
            frozenset(y for y in range(self.size) if y != x and not self.comparable(x, y))
            for x in range(self.size)
        ]
        best = 0

        def extend(chosen: int, candidates: frozenset[int]) -> None:
            nonlocal best
            if chosen + len(candidates) <= best:
                return
            if not candidates:
                best = chosen
                return
            x = min(candidates)
            extend(chosen + 1, candidates & incomparable[x])
            extend(chosen, candidates - {x})

        extend(0, frozenset(range(self.size)))
        return best
