"""Quantum strategies from faithful orthogonal representations.

A representation assigns each vertex a unit vector with orthogonality
exactly on edges.  Alice sends the vector selected by her labelled clique;
Bob measures in his clique's basis and answers with the outcome's label, so
the Born rule fills the conditional-probability table with squared overlaps.
The payoff of the representation itself is the smallest squared overlap
over non-adjacent vertex pairs, and maximizing it over representations of a
fixed dimension is the quantum figure of merit for reconstruction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize as sciopt

from .errors import (
    ConditionsNotMetError,
    ConstructionFailedError,
    InvalidParamsError,
    UnverifiedRepresentationError,
)
from .graphs import SCHEMA_VERSION, CliqueSet, Graph
from .relation import Relation, selected_vertex
from .tables import ProbTable, check_consistency
from .tables import payoff as table_payoff

ORTHO_TOL = 1e-9

GOLDEN_ANGLE = np.pi * (3 - np.sqrt(5))


@dataclass(frozen=True)
class OrthogonalRepresentation:
    """Unit complex vectors, one per vertex, in a common dimension."""

    d: int
    vectors: dict

    def vector(self, v: int) -> np.ndarray:
        return self.vectors[v]

    def overlap_sq(self, u: int, v: int) -> float:
        return float(abs(np.vdot(self.vectors[u], self.vectors[v])) ** 2)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "d": self.d,
            "vectors": {
                str(v): [[float(z.real), float(z.imag)] for z in vec]
                for v, vec in sorted(self.vectors.items())
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrthogonalRepresentation":
        vectors = {
            int(v): np.array([complex(re, im) for re, im in vec])
            for v, vec in data["vectors"].items()
        }
        return cls(int(data["d"]), vectors)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple = field(default_factory=tuple)


def verify_representation(
    rep: OrthogonalRepresentation, g: Graph, tol: float = ORTHO_TOL
) -> VerificationReport:
    """Check unit norms, orthogonality on edges, and faithfulness off edges.

    Faithfulness means non-adjacent distinct vertices have nonzero overlap;
    vectors equal up to a global phase also fail, since distinct vertices
    must carry distinct states.
    """
    violations = []
    for v in g.vertices:
        if v not in rep.vectors:
            violations.append(("missing", v, None, None))
            continue
        norm = float(np.linalg.norm(rep.vectors[v]))
        if abs(norm - 1) > tol:
            violations.append(("norm", v, None, norm))
    if violations:
        return VerificationReport(False, tuple(violations))
    for u, v in itertools.combinations(g.vertices, 2):
        ov = rep.overlap_sq(u, v)
        if g.adjacent(u, v):
            if ov > tol:
                violations.append(("edge_not_orthogonal", u, v, ov))
        else:
            if ov <= tol:
                violations.append(("nonedge_orthogonal", u, v, ov))
            elif abs(ov - 1) <= tol:
                violations.append(("duplicate_vector", u, v, ov))
    return VerificationReport(not violations, tuple(violations))


def representation_payoff(rep: OrthogonalRepresentation, g: Graph) -> float:
    """Smallest squared overlap over non-adjacent distinct vertex pairs."""
    values = [
        rep.overlap_sq(u, v)
        for u, v in itertools.combinations(g.vertices, 2)
        if not g.adjacent(u, v)
    ]
    return min(values) if values else 1.0


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _generic_unitary(dim: int, offset: int = 0) -> np.ndarray:
    """Deterministic unitary with irrational phase structure: golden-angle
    diagonal phases composed with a real rotation that mixes all coordinates."""
    phases = np.exp(1j * GOLDEN_ANGLE * (np.arange(dim) + 1 + offset))
    seedmat = np.cos(
        GOLDEN_ANGLE * (np.arange(1, dim + 1)[:, None] * np.arange(1, dim + 1)[None, :] + offset)
    ) + dim * np.eye(dim)
    rot, _ = np.linalg.qr(seedmat)
    return np.diag(phases) @ rot


def _partitioned(g: Graph, cliques: CliqueSet) -> bool:
    seen = set()
    for c in cliques.cliques:
        if seen & set(c):
            return False
        seen.update(c)
    if seen != set(g.vertices):
        return False
    blocks = {v: i for i, c in enumerate(cliques.cliques) for v in c}
    return all(blocks[u] == blocks[v] for u, v in g.edges)


def _chain_overlap(g: Graph, cliques: CliqueSet) -> int | None:
    """Shared-vertex count r if the cliques form a chain with overlaps only
    between consecutive cliques and no cross edges; None otherwise."""
    n = cliques.count
    if n < 2:
        return None
    sets = [set(c) for c in cliques.cliques]
    r = len(sets[0] & sets[1])
    if r == 0:
        return None
    for i in range(n - 1):
        if len(sets[i] & sets[i + 1]) != r:
            return None
    for i, j in itertools.combinations(range(n), 2):
        if j > i + 1 and sets[i] & sets[j]:
            return None
    within = set()
    for c in cliques.cliques:
        within.update(itertools.combinations(sorted(c), 2))
    if set(g.edges) != within:
        return None
    covered = set().union(*sets)
    return r if covered == set(g.vertices) else None


def _pad(vec: np.ndarray, d: int) -> np.ndarray:
    if len(vec) == d:
        return vec
    out = np.zeros(d, dtype=complex)
    out[: len(vec)] = vec
    return out


def _build_disconnected(g: Graph, cliques: CliqueSet, d: int, attempt: int,
                        rng: np.random.Generator) -> OrthogonalRepresentation:
    omega = cliques.omega
    if attempt == 0:
        u = _generic_unitary(omega)
    else:
        z = rng.standard_normal((omega, omega)) + 1j * rng.standard_normal((omega, omega))
        u, _ = np.linalg.qr(z)
    vectors = {}
    basis = np.eye(omega, dtype=complex)
    for k, c in enumerate(cliques.cliques):
        if k > 0:
            basis = u @ basis
        for pos, v in enumerate(c):
            vectors[v] = _pad(basis[:, pos].copy(), d)
    return OrthogonalRepresentation(d, vectors)


def _build_chain(g: Graph, cliques: CliqueSet, d: int, attempt: int,
                 rng: np.random.Generator) -> OrthogonalRepresentation:
    omega = cliques.omega
    vectors = {}
    first = cliques.cliques[0]
    for pos, v in enumerate(first):
        vectors[v] = np.eye(omega, dtype=complex)[:, pos]
    for k in range(1, cliques.count):
        c = cliques.cliques[k]
        shared = [v for v in c if v in vectors]
        new = [v for v in c if v not in vectors]
        span = np.column_stack([vectors[v] for v in shared])
        # orthonormal basis of the complement of the shared span
        q, _ = np.linalg.qr(np.column_stack([span, np.eye(omega, dtype=complex)]))
        comp = q[:, len(shared): omega]
        dim = comp.shape[1]
        if attempt == 0:
            w = _generic_unitary(dim, offset=7 * k)
        else:
            z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            w, _ = np.linalg.qr(z)
        fresh = comp @ w
        for pos, v in enumerate(new):
            vectors[v] = fresh[:, pos].copy()
    return OrthogonalRepresentation(d, {v: _pad(vec, d) for v, vec in vectors.items()})


def _build_by_optimization(g: Graph, cliques: CliqueSet, d: int, seed: int,
                           attempts: int = 16) -> OrthogonalRepresentation:
    """Penalty descent on raw vectors followed by local re-orthogonalization."""
    verts = list(g.vertices)
    vn = len(verts)
    pairs_e = [(verts.index(u), verts.index(v)) for u, v in g.edges]
    pairs_n = [
        (i, j)
        for i, j in itertools.combinations(range(vn), 2)
        if not g.adjacent(verts[i], verts[j])
    ]

    def unpack(x):
        m = x.reshape(vn, d, 2)
        vecs = m[..., 0] + 1j * m[..., 1]
        norms = np.linalg.norm(vecs, axis=1, keepdims=True)
        return vecs / norms

    def loss(x):
        vecs = unpack(x)
        gram = vecs @ vecs.conj().T
        p = np.abs(gram) ** 2
        edge = sum(p[i, j] for i, j in pairs_e)
        margin = sum(max(0.0, 0.02 - p[i, j]) for i, j in pairs_n)
        return edge + margin

    for attempt in range(attempts):
        rng = np.random.default_rng((seed, attempt))
        x0 = rng.standard_normal(vn * d * 2)
        res = sciopt.minimize(loss, x0, method="L-BFGS-B",
                              options={"maxiter": 2000, "ftol": 1e-16, "gtol": 1e-12})
        vecs = unpack(res.x)
        # Gauss-Seidel polish: project out neighbour components until edges
        # are orthogonal to machine precision
        for _ in range(200):
            worst = 0.0
            for i, j in pairs_e:
                ov = np.vdot(vecs[i], vecs[j])
                worst = max(worst, abs(ov))
                vecs[j] = vecs[j] - ov * vecs[i]
                vecs[j] /= np.linalg.norm(vecs[j])
            if worst < 1e-14:
                break
        rep = OrthogonalRepresentation(
            d, {verts[i]: vecs[i] for i in range(vn)}
        )
        if verify_representation(rep, g).ok:
            return rep
    raise ConstructionFailedError("optimization fallback found no certified representation")


def build_representation(
    g: Graph, cliques: CliqueSet, d: int | None = None, seed: int = 0
) -> OrthogonalRepresentation:
    """Faithful orthogonal representation, certified before it is returned.

    Disjoint cliques get one generic rotated basis per clique; chains of
    overlapping cliques reuse the shared vectors and complete each clique
    inside the orthogonal complement; anything else goes through a numeric
    search.  Every path re-verifies the result and retries with fresh
    generic choices before giving up.
    """
    omega = cliques.omega
    d = omega if d is None else d
    if d < omega:
        raise InvalidParamsError(f"dimension {d} below clique size {omega}")
    if _partitioned(g, cliques):
        builder = _build_disconnected
    elif _chain_overlap(g, cliques) is not None:
        builder = _build_chain
    else:
        return _build_by_optimization(g, cliques, d, seed)
    for attempt in range(8):
        rng = np.random.default_rng((seed, attempt))
        rep = builder(g, cliques, d, attempt, rng)
        if verify_representation(rep, g).ok:
            return rep
    raise ConstructionFailedError("no certified representation after retries")


# ---------------------------------------------------------------------------
# Strategy and table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuantumStrategy:
    """Representation plus per-clique projective measurements onto clique vectors."""

    rep: OrthogonalRepresentation
    cliques: CliqueSet
    verified: bool = False

    @classmethod
    def create(cls, rep: OrthogonalRepresentation, g: Graph,
               cliques: CliqueSet) -> "QuantumStrategy":
        report = verify_representation(rep, g)
        if not report.ok:
            raise UnverifiedRepresentationError(
                f"representation fails checks: {report.violations[:3]}"
            )
        return cls(rep, cliques, verified=True)


def quantum_table(strategy: QuantumStrategy, rel: Relation,
                  completion: str = "uniform") -> ProbTable:
    """Born-rule table of the prepare-and-measure protocol.

    In dimension omega the clique basis is complete and rows are exactly the
    squared overlaps.  Above omega some amplitude falls outside the clique
    span; 'uniform' completion hands that mass to a uniformly random
    admissible output (keeping rows normalized and zeros outside the
    relation), 'omit' records the raw overlaps and leaves rows subnormalized.
    """
    if not strategy.verified:
        raise UnverifiedRepresentationError("strategy representation not verified")
    if completion not in ("uniform", "omit"):
        raise InvalidParamsError(f"unknown completion {completion!r}")
    cliques = strategy.cliques
    n, omega = cliques.count, cliques.omega
    size = n * omega
    entries = np.zeros((size, size))
    subnormal = False
    for x in range(1, n + 1):
        for a in range(omega):
            u = strategy.rep.vector(selected_vertex(cliques.clique(x), a))
            r = (x - 1) * omega + a
            for y in range(1, n + 1):
                probs = np.array([
                    abs(np.vdot(u, strategy.rep.vector(w))) ** 2
                    for w in cliques.clique(y)
                ])
                probs = np.clip(probs, 0.0, 1.0)
                residual = 1.0 - probs.sum()
                if residual > 1e-12:
                    if completion == "uniform":
                        valid = rel.valid_outputs(x, a, y)
                        probs[list(valid)] += residual / len(valid)
                    else:
                        subnormal = True
                entries[r, (y - 1) * omega: y * omega] = probs
    return ProbTable(n, omega, entries, kind="float", subnormalized=subnormal)


# ---------------------------------------------------------------------------
# Payoff optimization over representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OptimizeResult:
    rep: OrthogonalRepresentation
    payoff: float
    restarts: int
    is_lower_bound: bool = True


def _bases_from_params(x: np.ndarray, n: int, d: int, omega: int) -> np.ndarray:
    m = x.reshape(n, d, omega, 2)
    q, _ = np.linalg.qr(m[..., 0] + 1j * m[..., 1])
    return q


def _cross_overlaps(bases: np.ndarray) -> np.ndarray:
    n = bases.shape[0]
    vals = []
    for k, l in itertools.combinations(range(n), 2):
        g = bases[k].conj().T @ bases[l]
        vals.append((np.abs(g) ** 2).ravel())
    return np.concatenate(vals)


def optimize_payoff(
    g: Graph,
    cliques: CliqueSet,
    d: int,
    restarts: int = 32,
    seed: int = 0,
    initial_reps: tuple = (),
) -> OptimizeResult:
    """Maximize the smallest non-adjacent squared overlap in dimension d.

    For vertex-disjoint cliques the variables are one orthonormal frame per
    clique; restarts run a smoothed max-min ascent (soft minimum with a
    hardening temperature schedule) and the best is polished by maximizing
    the epigraph variable under the overlap constraints.  The result is a
    certified representation and a lower bound on the true optimum.  Graphs
    with shared vertices fall back to the best verified starting point
    (constructed or supplied), so the bound is still sound.
    """
    if d < cliques.omega:
        raise InvalidParamsError("dimension below clique size")
    if cliques.count == 1:
        rep = build_representation(g, cliques, d, seed=seed)
        return OptimizeResult(rep, 1.0, 0)
    if not _partitioned(g, cliques):
        return _optimize_general(g, cliques, d, seed, initial_reps)
    n, omega = cliques.count, cliques.omega

    def exact_min(x):
        return float(np.min(_cross_overlaps(_bases_from_params(x, n, d, omega))))

    def neg_softmin(x, beta):
        vals = _cross_overlaps(_bases_from_params(x, n, d, omega))
        lo = vals.min()
        return -(lo - np.log(np.sum(np.exp(-beta * (vals - lo)))) / beta)

    size = n * d * omega * 2
    candidates = []
    for r in range(restarts):
        rng = np.random.default_rng((seed, r))
        x = rng.standard_normal(size)
        for beta in (50.0, 400.0, 3000.0):
            res = sciopt.minimize(neg_softmin, x, args=(beta,), method="L-BFGS-B",
                                  options={"maxiter": 500})
            x = res.x
        candidates.append((exact_min(x), r, x))
    candidates.sort(key=lambda c: (-c[0], c[1]))

    def polish(x):
        z0 = np.concatenate([x, [exact_min(x)]])
        cons = {
            "type": "ineq",
            "fun": lambda z: _cross_overlaps(
                _bases_from_params(z[:-1], n, d, omega)) - z[-1],
        }
        res = sciopt.minimize(lambda z: -z[-1], z0, method="SLSQP",
                              constraints=[cons],
                              options={"maxiter": 300, "ftol": 1e-12})
        return res.x[:-1]

    for value, ridx, x in candidates:
        xp = polish(x)
        if exact_min(xp) >= value - 1e-12:
            x = xp
        bases = _bases_from_params(x, n, d, omega)
        vectors = {}
        for k, c in enumerate(cliques.cliques):
            for pos, v in enumerate(c):
                vectors[v] = bases[k][:, pos].copy()
        rep = OrthogonalRepresentation(d, vectors)
        if verify_representation(rep, g).ok:
            return OptimizeResult(rep, representation_payoff(rep, g), restarts)
    raise ConstructionFailedError("no restart produced a certified representation")


def _optimize_general(g, cliques, d, seed, initial_reps) -> OptimizeResult:
    starts = list(initial_reps)
    if not starts:
        try:
            starts.append(build_representation(g, cliques, d, seed=seed))
        except ConstructionFailedError:
            pass
    best = None
    for rep in starts:
        if rep.d != d or not verify_representation(rep, g).ok:
            continue
        value = representation_payoff(rep, g)
        if best is None or value > best[0]:
            best = (value, rep)
    if best is None:
        raise ConstructionFailedError("no faithful starting representation found")
    return OptimizeResult(best[1], best[0], len(starts))


# ---------------------------------------------------------------------------
# MUB detection, remote state preparation, dimension witness
# ---------------------------------------------------------------------------

def check_mub(bases, d: int, tol: float = ORTHO_TOL) -> bool:
    """All cross squared overlaps between the orthonormal bases equal 1/d."""
    mats = [np.asarray(b, dtype=complex) for b in bases]
    for b in mats:
        if b.shape != (d, d):
            raise InvalidParamsError("each basis must be d x d with column vectors")
        if np.max(np.abs(b.conj().T @ b - np.eye(d))) > 1e-9:
            raise InvalidParamsError("basis is not orthonormal")
    for b1, b2 in itertools.combinations(mats, 2):
        cross = np.abs(b1.conj().T @ b2) ** 2
        if np.max(np.abs(cross - 1.0 / d)) > tol:
            return False
    return True


def detect_mub(table: ProbTable, rel: Relation, g: Graph, cliques: CliqueSet,
               tol: float = ORTHO_TOL) -> bool:
    """On vertex-disjoint cliques, an optimal payoff certifies unbiased bases.

    With two or more disjoint cliques the bound is 1/omega and reaching it
    forces every cross overlap to 1/omega, which is the mutual-unbiasedness
    condition; a single clique meets its bound of 1 vacuously.
    """
    if not _partitioned(g, cliques):
        raise ConditionsNotMetError("MUB detection needs vertex-disjoint cliques")
    report = table_payoff(table, rel)
    return abs(float(report.value) - float(report.upper_bound)) <= tol


@dataclass(frozen=True)
class RspReport:
    payoff: float
    duplicate_pair: tuple | None = None


def symmetric_equatorial_angles(n: int) -> tuple[float, ...]:
    """n equally spaced antipodal directions on the Bloch equator."""
    return tuple(k * math.pi / n for k in range(n))


def rsp_payoff(angles, tol: float = 1e-9) -> RspReport:
    """Payoff of the entanglement-assisted protocol on equatorial qubit bases.

    Angles are Bloch-equator directions, one orthogonal state pair each (a
    basis repeats with period pi).  Remote state preparation delivers the
    selected state exactly, so cross probabilities between bases at angular
    distance delta are cos^2(delta/2) and sin^2(delta/2), and the payoff is
    the smallest of those over distinct basis pairs.  Coinciding bases leave
    a zero entry inside the relation, so the payoff collapses to zero.
    """
    angles = [float(t) for t in angles]
    if not angles:
        raise InvalidParamsError("need at least one direction")
    if len(angles) == 1:
        return RspReport(1.0)
    best = 1.0
    for i, j in itertools.combinations(range(len(angles)), 2):
        delta = angles[i] - angles[j]
        if abs(math.remainder(delta, math.pi)) < tol:
            return RspReport(0.0, (i, j))
        c, s = math.cos(delta / 2) ** 2, math.sin(delta / 2) ** 2
        best = min(best, c, s)
    return RspReport(best)


@dataclass(frozen=True)
class WitnessReport:
    claimed_dimension: int | None

    @property
    def message(self) -> str:
        if self.claimed_dimension is None:
            return "no claim"
        return f"operational dimension >= {self.claimed_dimension}"


def dimension_witness(table: ProbTable, rel: Relation, omega: int) -> WitnessReport:
    """Claim a dimension bound exactly when the table vanishes outside the relation.

    Any zero-error protocol must separate the omega labels of a single
    clique, so a table with exact zeros on every excluded tuple witnesses an
    operational dimension of at least omega, whatever produced it.
    """
    ok, _ = check_consistency(table, rel)
    return WitnessReport(omega if ok else None)
