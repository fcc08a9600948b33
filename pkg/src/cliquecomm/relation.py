"""The relation induced by consistent pairwise clique labelling.

A label a of clique C picks out one vertex (the one at ascending position a)
and colours it 1, the rest 0.  Two labelled cliques are consistent when
shared vertices receive the same colour and no edge between the cliques has
both endpoints coloured 1.  The relation collects every consistent tuple
(C_x, a, C_y, b); clique indices are 1-based, labels 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InconsistentRelationError, InvalidParamsError
from .graphs import SCHEMA_VERSION, CliqueSet, Graph


def label_to_colouring(clique: tuple[int, ...], a: int) -> dict[int, int]:
    """Binary colouring of a clique's vertices with the 1 at position a."""
    if not 0 <= a < len(clique):
        raise InvalidParamsError(f"label {a} out of range for clique of size {len(clique)}")
    return {v: int(i == a) for i, v in enumerate(clique)}


def colouring_to_label(clique: tuple[int, ...], colouring: dict[int, int]) -> int:
    """Inverse of label_to_colouring."""
    ones = [i for i, v in enumerate(clique) if colouring.get(v, 0) == 1]
    if len(ones) != 1:
        raise InvalidParamsError("colouring must assign 1 to exactly one clique vertex")
    return ones[0]


def selected_vertex(clique: tuple[int, ...], a: int) -> int:
    if not 0 <= a < len(clique):
        raise InvalidParamsError(f"label {a} out of range")
    return clique[a]


def labels_consistent(
    g: Graph, cliques: CliqueSet, x: int, a: int, y: int, b: int
) -> bool:
    """Whether labelling clique x with a and clique y with b is consistent.

    Reduces to a condition on the two selected vertices: either they are the
    same vertex, or they are non-adjacent and neither lies inside the other
    party's clique (a selected vertex inside both cliques forces the other
    party's choice through the shared-colour rule).
    """
    cx, cy = cliques.clique(x), cliques.clique(y)
    va, vb = selected_vertex(cx, a), selected_vertex(cy, b)
    if va == vb:
        return True
    if va in cy or vb in cx:
        return False
    return not g.adjacent(va, vb)


@dataclass(frozen=True)
class Relation:
    """All consistent tuples (x, a, y, b), in lexicographic order."""

    n: int
    omega: int
    tuples: tuple[tuple[int, int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.tuples)

    def __contains__(self, t) -> bool:
        return tuple(t) in self._index

    @property
    def _index(self) -> frozenset:
        # built lazily; frozen dataclass so stash on the instance dict via object
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = frozenset(self.tuples)
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def valid_outputs(self, x: int, a: int, y: int) -> tuple[int, ...]:
        """All b with (x, a, y, b) in the relation."""
        return tuple(b for b in range(self.omega) if (x, a, y, b) in self)

    def row_support(self, x: int, a: int) -> frozenset[tuple[int, int]]:
        """The set of (y, b) the input (x, a) can be followed by."""
        return frozenset(
            (y, b)
            for y in range(1, self.n + 1)
            for b in self.valid_outputs(x, a, y)
        )

    def max_valid_outputs(self) -> int:
        """Largest number of admissible outputs over all input triples."""
        return max(
            len(self.valid_outputs(x, a, y))
            for x in range(1, self.n + 1)
            for a in range(self.omega)
            for y in range(1, self.n + 1)
        )

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "omega": self.omega,
            "tuples": [list(t) for t in self.tuples],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Relation":
        return cls(
            int(data["n"]),
            int(data["omega"]),
            tuple(tuple(t) for t in data["tuples"]),
        )


def build_relation(g: Graph, cliques: CliqueSet) -> Relation:
    """Enumerate every consistent tuple over the given maximum cliques.

    Raises if some input triple admits no output at all; the games here are
    only defined for relations that are total over the input set.
    """
    n, omega = cliques.count, cliques.omega
    tuples = []
    for x in range(1, n + 1):
        for a in range(omega):
            for y in range(1, n + 1):
                outs = [
                    b for b in range(omega) if labels_consistent(g, cliques, x, a, y, b)
                ]
                if not outs:
                    raise InconsistentRelationError(
                        f"input ({x},{a},{y}) admits no consistent output"
                    )
                tuples.extend((x, a, y, b) for b in outs)
    return Relation(n, omega, tuple(tuples))


def infer_graph(rel: Relation, n: int, omega: int) -> tuple[Graph, tuple[tuple[tuple[int, int], ...], ...]]:
    """Rebuild the host graph from the relation alone.

    Vertices are recovered as classes of (clique, position) pairs that force
    each other deterministically in both directions and have identical row
    supports; such pairs behave identically in every round, which is exactly
    the signature of a shared vertex.  Two recovered vertices are adjacent
    when some tuple between their representatives is excluded.

    Returns the graph (classes numbered by their least member in (clique,
    position) order) together with the member list of each class.
    """
    if n != rel.n or omega != rel.omega:
        raise InvalidParamsError("n/omega do not match the relation")
    slots = [(x, a) for x in range(1, n + 1) for a in range(omega)]
    for x, a in slots:
        if rel.valid_outputs(x, a, x) != (a,):
            raise InconsistentRelationError(
                f"diagonal determinism fails at clique {x}, label {a}"
            )
        for y in range(1, n + 1):
            if not rel.valid_outputs(x, a, y):
                raise InconsistentRelationError(
                    f"relation not total at input ({x},{a},{y})"
                )

    parent = {s: s for s in slots}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    def union(s, t):
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)

    supports = {s: rel.row_support(*s) for s in slots}
    for (x, a), (y, b) in itertools.combinations(slots, 2):
        if x == y:
            continue
        if (
            rel.valid_outputs(x, a, y) == (b,)
            and rel.valid_outputs(y, b, x) == (a,)
            and supports[(x, a)] == supports[(y, b)]
        ):
            union((x, a), (y, b))

    groups: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for s in slots:
        groups.setdefault(find(s), []).append(s)
    classes = [tuple(sorted(m)) for m in groups.values()]
    classes.sort(key=lambda m: m[0])

    edges = []
    for i, j in itertools.combinations(range(len(classes)), 2):
        verdicts = {
            (x, a, y, b) in rel
            for x, a in classes[i]
            for y, b in classes[j]
            if x != y
        }
        # same-clique representatives at different positions are excluded pairs
        same_clique = any(
            x == y for x, _ in classes[i] for y, _ in classes[j]
        )
        if same_clique:
            verdicts.add(False)
        if verdicts == {True, False}:
            raise InconsistentRelationError(
                f"ambiguous adjacency between recovered vertices {i + 1} and {j + 1}"
            )
        if verdicts == {False}:
            edges.append((i + 1, j + 1))
    return Graph(len(classes), edges), tuple(classes)
