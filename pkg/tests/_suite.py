"""Shared diagram suite for the cross-module and acceptance tests.

The fixed members are the triangle K3 (all pairs non-commuting), the path
P3, the star K13, and the cycle complements on 5..9 vertices.  On top of
those come twenty pseudorandom connected diagrams with n <= 7, generated
from a frozen seed: a random spanning tree keeps them connected, then each
remaining pair joins with probability one third.
"""

from __future__ import annotations

import random

from coxcert import CoxeterDiagram, cycle_complement

K3 = CoxeterDiagram(3, frozenset({(1, 2), (1, 3), (2, 3)}))
P3 = CoxeterDiagram(3, frozenset({(1, 2), (2, 3)}))
K13 = CoxeterDiagram(4, frozenset({(1, 2), (1, 3), (1, 4)}))

SUITE_SEED = 20260814


def random_connected_diagram(rng: random.Random, n: int) -> CoxeterDiagram:
    edges = set()
    for v in range(2, n + 1):
        u = rng.randrange(1, v)
        edges.add((u, v))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and rng.random() < 1 / 3:
                edges.add((i, j))
    return CoxeterDiagram(n, frozenset(edges))


def acceptance_suite() -> list[tuple[str, CoxeterDiagram]]:
    members = [("K3", K3), ("P3", P3), ("K13", K13)]
    for n in range(5, 10):
        members.append((f"cc{n}", cycle_complement(n)))
    rng = random.Random(SUITE_SEED)
    for idx in range(20):
        n = rng.randrange(3, 8)
        members.append((f"rand{idx:02d}", random_connected_diagram(rng, n)))
    return members


def probe_length(n: int) -> int | None:
    """Faithfulness probe depth per the acceptance schedule; None = skip."""
    if n <= 5:
        return 8
    if n <= 7:
        return 6
    return None
