import itertools

import pytest

from cliquecomm import (
    Graph,
    build_relation,
    enumerate_maximum_cliques,
    gen_nncc,
)

# The 5-vertex chain of two triangles sharing one vertex: cliques
# {1,2,3} and {3,4,5}.  Used throughout as the worked example.


@pytest.fixture(scope="session")
def chain5():
    g = gen_nncc(2, 3, 1)
    cliques = enumerate_maximum_cliques(g)
    rel = build_relation(g, cliques)
    return g, cliques, rel


# All sixteen admissible tuples of the worked example, frozen.
CHAIN5_RELATION = frozenset({
    (1, 0, 2, 1), (1, 0, 2, 2), (1, 1, 2, 1), (1, 1, 2, 2), (1, 2, 2, 0),
    (2, 1, 1, 0), (2, 1, 1, 1), (2, 2, 1, 0), (2, 2, 1, 1), (2, 0, 1, 2),
    (1, 0, 1, 0), (1, 1, 1, 1), (1, 2, 1, 2),
    (2, 0, 2, 0), (2, 1, 2, 1), (2, 2, 2, 2),
})


def consistency_oracle(g: Graph, cliques, x, a, y, b) -> bool:
    """Straight-from-the-rules check, independent of the library's shortcut.

    Build both binary colourings, then demand equal colours on shared
    vertices and no edge between the two cliques with both endpoints
    coloured 1.
    """
    cx, cy = cliques.clique(x), cliques.clique(y)
    fa = {v: int(i == a) for i, v in enumerate(cx)}
    fb = {v: int(i == b) for i, v in enumerate(cy)}
    for v in set(cx) & set(cy):
        if fa[v] != fb[v]:
            return False
    for u in cx:
        for v in cy:
            if u != v and g.adjacent(u, v) and fa[u] == 1 and fb[v] == 1:
                return False
    return True


def g1_oracle(g: Graph, cliques) -> bool:
    """Triple-loop form of the distinguishing-vertex condition."""
    for v in g.vertices:
        for w in g.vertices:
            if v == w:
                continue
            cross = False
            for ci in cliques.cliques_containing(v):
                for cj in cliques.cliques_containing(w):
                    if ci != cj:
                        cross = True
            if not cross:
                continue
            found = False
            for u in g.vertices:
                if g.adjacent(u, v) != g.adjacent(u, w):
                    found = True
                    break
            if not found:
                return False
    return True


def brute_force_max_cliques(g: Graph):
    """All maximum cliques by direct subset enumeration (small graphs only)."""
    best = []
    for size in range(g.order, 0, -1):
        for combo in itertools.combinations(g.vertices, size):
            if all(g.adjacent(u, v) for u, v in itertools.combinations(combo, 2)):
                best.append(combo)
        if best:
            return sorted(best)
    return best
