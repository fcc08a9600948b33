"""Conditional-probability tables P(b | C_x, a, C_y) and their checks.

Rows are Alice inputs (clique, label), columns are Bob (clique, output),
both in (clique index, label) lexicographic order, giving an n*omega square
block layout with omega x omega blocks per clique pair.  Classical strategy
tables and their mixtures carry exact rationals; quantum tables carry
floats.  The three conditions checked against a relation are: zero outside
the relation (consistency), positive inside it (coverage), and payoff equal
to the algebraic bound (optimality).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidParamsError
from .graphs import SCHEMA_VERSION, CliqueSet, Graph
from .relation import Relation, selected_vertex

ZERO_TOL = 1e-9


class ProbTable:
    """Square table of conditional probabilities, exact or floating point."""

    def __init__(self, n: int, omega: int, entries, kind: str = "exact",
                 subnormalized: bool = False):
        if kind not in ("exact", "float"):
            raise InvalidParamsError(f"unknown table kind {kind!r}")
        self.n = n
        self.omega = omega
        self.kind = kind
        self.subnormalized = subnormalized
        size = n * omega
        if kind == "exact":
            rows = []
            for row in entries:
                row = tuple(Fraction(e) for e in row)
                if len(row) != size:
                    raise InvalidParamsError("bad row length")
                rows.append(row)
            if len(rows) != size:
                raise InvalidParamsError("bad row count")
            self.entries = tuple(rows)
        else:
            arr = np.asarray(entries, dtype=float)
            if arr.shape != (size, size):
                raise InvalidParamsError("bad table shape")
            self.entries = arr
        self._validate()

    def _validate(self):
        for r in range(self.n * self.omega):
            for y in range(1, self.n + 1):
                block = [self.entry_by_index(r, (y - 1) * self.omega + c)
                         for c in range(self.omega)]
                if any(e < 0 or e > 1 for e in map(float, block)):
                    raise InvalidParamsError("entries must lie in [0, 1]")
                total = sum(block)
                if self.kind == "exact":
                    if total != 1:
                        raise InvalidParamsError(
                            f"row {r}, clique {y}: block sums to {total}, not 1"
                        )
                else:
                    if self.subnormalized:
                        if float(total) > 1 + ZERO_TOL:
                            raise InvalidParamsError("block sum exceeds 1")
                    elif abs(float(total) - 1) > ZERO_TOL:
                        raise InvalidParamsError(
                            f"row {r}, clique {y}: block sums to {float(total)}"
                        )

    def row_index(self, x: int, a: int) -> int:
        return (x - 1) * self.omega + a

    def entry_by_index(self, r: int, c: int):
        if self.kind == "exact":
            return self.entries[r][c]
        return self.entries[r, c]

    def prob(self, x: int, a: int, y: int, b: int):
        """P(b | C_x, a, C_y)."""
        return self.entry_by_index(self.row_index(x, a), self.row_index(y, b))

    def rows(self):
        for x in range(1, self.n + 1):
            for a in range(self.omega):
                yield x, a

    def is_zero(self, value) -> bool:
        if self.kind == "exact":
            return value == 0
        return abs(value) <= ZERO_TOL

    def to_json(self) -> dict:
        if self.kind == "exact":
            data = [[f"{e.numerator}/{e.denominator}" for e in row]
                    for row in self.entries]
        else:
            data = [[float(e) for e in row] for row in self.entries]
        payload = {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "omega": self.omega,
            "kind": self.kind,
            "entries": data,
        }
        if self.subnormalized:
            payload["subnormalized"] = True
        return payload

    def to_csv(self) -> str:
        """Row-major CSV with an n/omega/kind header line."""
        lines = [f"# n={self.n} omega={self.omega} kind={self.kind}"]
        for r in range(self.n * self.omega):
            cells = []
            for c in range(self.n * self.omega):
                e = self.entry_by_index(r, c)
                if self.kind == "exact":
                    cells.append(f"{e.numerator}/{e.denominator}")
                else:
                    cells.append(format(float(e), ".17g"))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "ProbTable":
        kind = data["kind"]
        if kind == "exact":
            entries = [[Fraction(e) for e in row] for row in data["entries"]]
        else:
            entries = data["entries"]
        return cls(int(data["n"]), int(data["omega"]), entries, kind=kind,
                   subnormalized=bool(data.get("subnormalized", False)))


def mix_tables(weighted: list[tuple[ProbTable, Fraction]]) -> ProbTable:
    """Exact convex combination of exact tables."""
    if not weighted:
        raise InvalidParamsError("empty mixture")
    n, omega = weighted[0][0].n, weighted[0][0].omega
    weights = [Fraction(w) for _, w in weighted]
    if sum(weights) != 1 or any(w <= 0 for w in weights):
        raise InvalidParamsError("weights must be positive and sum to 1")
    size = n * omega
    acc = [[Fraction(0)] * size for _ in range(size)]
    for (t, _), w in zip(weighted, weights):
        if t.kind != "exact" or t.n != n or t.omega != omega:
            raise InvalidParamsError("mixture needs matching exact tables")
        for r in range(size):
            for c in range(size):
                acc[r][c] += w * t.entries[r][c]
    return ProbTable(n, omega, acc, kind="exact")


@dataclass(frozen=True)
class PayoffReport:
    """Minimum in-relation entry and the algebraic bound it is measured against."""

    value: object
    witness: tuple[int, int, int, int]
    max_valid_outputs: int
    upper_bound: Fraction
    consistent: bool


def check_consistency(table: ProbTable, rel: Relation):
    """Every entry outside the relation must be zero.  Returns (ok, violations)."""
    _require_match(table, rel)
    violations = []
    for x, a in table.rows():
        for y in range(1, rel.n + 1):
            valid = set(rel.valid_outputs(x, a, y))
            for b in range(rel.omega):
                if b not in valid and not table.is_zero(table.prob(x, a, y, b)):
                    violations.append((x, a, y, b, table.prob(x, a, y, b)))
    return not violations, violations


def check_coverage(table: ProbTable, rel: Relation):
    """Every entry inside the relation must be positive.  Returns (ok, missing)."""
    _require_match(table, rel)
    missing = [t for t in rel.tuples if table.is_zero(table.prob(*t))]
    return not missing, missing


def payoff(table: ProbTable, rel: Relation) -> PayoffReport:
    """Minimum conditional probability over tuples in the relation.

    The algebraic bound is one over the largest number of valid outputs any
    input pair admits; no table can exceed it on the relation's support.
    """
    _require_match(table, rel)
    best = None
    witness = None
    for t in rel.tuples:
        v = table.prob(*t)
        if best is None or v < best:
            best, witness = v, t
    eta = rel.max_valid_outputs()
    ok, _ = check_consistency(table, rel)
    return PayoffReport(best, witness, eta, Fraction(1, eta), ok)


def check_optimality(table: ProbTable, rel: Relation) -> bool:
    """Whether the payoff reaches the algebraic bound exactly."""
    report = payoff(table, rel)
    if table.kind == "exact":
        return report.value == report.upper_bound
    return abs(float(report.value) - float(report.upper_bound)) <= ZERO_TOL


def reconstruction_possible(table: ProbTable, rel: Relation) -> bool:
    """Zero outside the relation and positive inside it: the support is the
    relation itself, so enough rounds reveal every admissible tuple."""
    return check_consistency(table, rel)[0] and check_coverage(table, rel)[0]


@dataclass(frozen=True)
class CompressedTable:
    """Row-merged table keyed by selected vertex, plus the row-to-message map."""

    vertices: tuple[int, ...]
    row_to_message: dict
    entries: tuple


def compress_rows(table: ProbTable, g: Graph, cliques: CliqueSet) -> CompressedTable:
    """Merge rows whose labels select the same vertex.

    Two inputs that colour the same shared vertex 1 can always be encoded in
    the same message; with every vertex covered by some clique this leaves
    exactly one row per vertex.  Requires a consistent table whose mergeable
    rows are actually identical.
    """
    from .relation import build_relation  # local import to avoid cycle at import time

    rel = build_relation(g, cliques)
    ok, violations = check_consistency(table, rel)
    if not ok:
        raise InvalidParamsError(f"table violates consistency at {violations[0]}")
    by_vertex: dict[int, tuple] = {}
    row_to_message = {}
    order: list[int] = []
    for x, a in table.rows():
        v = selected_vertex(cliques.clique(x), a)
        row = tuple(table.entry_by_index(table.row_index(x, a), c)
                    for c in range(table.n * table.omega))
        if v in by_vertex:
            if by_vertex[v] != row:
                raise InvalidParamsError(
                    f"rows selecting vertex {v} differ; cannot merge"
                )
        else:
            by_vertex[v] = row
            order.append(v)
        row_to_message[(x, a)] = None
    vertices = tuple(sorted(order))
    index = {v: i for i, v in enumerate(vertices)}
    for x, a in table.rows():
        v = selected_vertex(cliques.clique(x), a)
        row_to_message[(x, a)] = index[v]
    entries = tuple(by_vertex[v] for v in vertices)
    return CompressedTable(vertices, row_to_message, entries)


def _require_match(table: ProbTable, rel: Relation):
    if table.n != rel.n or table.omega != rel.omega:
        raise InvalidParamsError("table dimensions do not match relation")
