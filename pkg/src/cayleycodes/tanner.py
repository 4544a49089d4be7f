"""The code on the edges of a Cayley graph, and its verification.

A word indexed by the undirected edges is a codeword when, at every
vertex g, the local view (the q+1 incident edge bits read in generator
order, position i at the edge toward g*s_i) lies in the inner cyclic
code B.  The parity-check matrix H therefore has one row per vertex per
dual-basis word of B: the row places the dual word's bits on the star
of the vertex.  Rows are a spanning set of the dual, possibly
redundant; the rank of H, not its row count, defines the code.

Reading the view in generator order, with S ordered by torus powers, is
the one convention that turns the torus action on views into the
cyclic coordinate shift of B; every check below breaks if the ordering
drifts, which is exactly what makes them worth running.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from random import Random
from typing import Optional, Sequence

import numpy as np

from . import gf2poly
from .cyclic import CyclicCode, DistanceReport, dual_basis_rows, dual_generator
from .errors import CheckFailure, ConstructionError
from .gf2 import Gf2Matrix, int_rank, unpack_int
from .graphs import CayleyGraph

EXACT_EDGE_DISTANCE_MAX_DIM = 22
BRUTE_FORCE_MAX_EDGES = 24


@dataclass
class CayleyCodeInstance:
    graph: CayleyGraph
    inner: CyclicCode
    dual_gen: int
    dual_rows: list[int]                 # basis of B-dual, integer words
    matrix: Gf2Matrix                    # H, one row per (vertex, dual word)
    row_meta: list[tuple[int, int]]      # (vertex, dual shift index)

    @property
    def n(self) -> int:
        return self.graph.n_edges

    @cached_property
    def echelon(self):
        return self.matrix.echelon()

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def dim(self) -> int:
        return self.n - self.rank

    def row_support(self, idx: int) -> list[int]:
        return self.matrix.row_support(idx)


def build_parity_check(graph: CayleyGraph, inner: CyclicCode) -> CayleyCodeInstance:
    """Vertex-local constraint rows from the dual basis of the inner code."""
    if inner.n != graph.degree:
        raise ConstructionError(
            f"inner code length {inner.n} != graph degree {graph.degree}"
        )
    d = dual_generator(inner)
    rows = dual_basis_rows(inner)
    supports = []
    meta = []
    for v in range(graph.n_vertices):
        star = graph.star_edge_ids(v)
        for j, word in enumerate(rows):
            supports.append([star[i] for i in range(inner.n) if (word >> i) & 1])
            meta.append((v, j))
    matrix = Gf2Matrix.from_supports(graph.n_edges, supports)
    inst = CayleyCodeInstance(graph, inner, d, rows, matrix, meta)
    for sup in supports:
        if len(sup) > graph.degree:
            raise AssertionError("row locality violated")
    return inst


def local_view(inst: CayleyCodeInstance, word: int, vertex: int) -> int:
    """The inner-code-length word read off the star of a vertex."""
    view = 0
    for i, e in enumerate(inst.graph.star_edge_ids(vertex)):
        if (word >> e) & 1:
            view |= 1 << i
    return view


def all_views_in_inner(inst: CayleyCodeInstance, word: int) -> bool:
    return all(
        inst.inner.contains(local_view(inst, word, v))
        for v in range(inst.graph.n_vertices)
    )


# ---------------------------------------------------------------------------
# Rate and the unconditional counting bound
# ---------------------------------------------------------------------------

def measured_rate(inst: CayleyCodeInstance) -> Fraction:
    """1 - rank(H)/|E|, asserted against the counting bound
    2 r(B) - 1, which no correct construction can violate."""
    rate = Fraction(inst.n - inst.rank, inst.n)
    bound = 2 * inst.inner.rate - 1
    if rate < bound:
        raise CheckFailure(
            f"measured rate {rate} violates the counting bound {bound}"
        )
    return rate


def edge_code_bounds(rate_b: Fraction, delta_b: Fraction, lam: float,
                     lam_tol: float = 1e-6) -> tuple[Fraction, Fraction]:
    """Guaranteed rate and normalized-distance lower bounds of the edge
    code in terms of the inner code and the expansion lambda.

    lambda is only known to +-lam_tol, so the distance bound is
    evaluated at the unfavorable end of the interval (exact rational
    arithmetic on the float endpoints); a reported pass is never a
    rounding accident.  The bound is vacuous (0) unless delta_b exceeds
    the interval's upper end.
    """
    if not -1.0 <= lam < 1.0:
        raise ValueError("lambda must lie in [-1, 1)")
    rate_lb = 2 * rate_b - 1
    lam_hi = Fraction(lam) + Fraction(lam_tol)
    if delta_b <= lam_hi:
        return rate_lb, Fraction(0)
    dist_lb = ((delta_b - lam_hi) / (1 - lam_hi)) ** 2
    return rate_lb, dist_lb


# ---------------------------------------------------------------------------
# Invariance of the row space under the symmetry generators
# ---------------------------------------------------------------------------

@dataclass
class InvarianceReport:
    passed: bool
    trials: int
    perm_names: list[str]
    failures: list[tuple[str, int]]      # (perm name, row index)

    def require(self) -> None:
        if not self.passed:
            name, row = self.failures[0]
            raise CheckFailure(
                f"invariance failed: permuted row {row} under {name!r} "
                f"left the row space ({len(self.failures)} failures total)"
            )


def verify_invariance(inst: CayleyCodeInstance, perms: dict[str, np.ndarray],
                      trials: int, seed: int = 0) -> InvarianceReport:
    """Sampled rows of H, pushed through each edge permutation, must
    stay inside the row space of H (membership by elimination against
    the cached echelon basis)."""
    rng = Random(seed)
    n_rows = inst.matrix.nrows
    count = min(trials, n_rows)
    sample = rng.sample(range(n_rows), count) if count < n_rows else list(range(n_rows))
    failures = []
    names = sorted(perms)
    for name in names:
        perm = perms[name]
        batch = np.zeros((len(sample), inst.matrix.data.shape[1]), dtype=np.uint64)
        for bi, ri in enumerate(sample):
            for c in inst.row_support(ri):
                img = int(perm[c])
                batch[bi, img >> 6] |= np.uint64(1 << (img & 63))
        residual = inst.echelon.reduce_batch(batch)
        bad = np.nonzero(residual.any(axis=1))[0]
        failures.extend((name, sample[int(b)]) for b in bad)
    return InvarianceReport(not failures, count, names, failures)


# ---------------------------------------------------------------------------
# Single-orbit generation of the dual
# ---------------------------------------------------------------------------

@dataclass
class SingleOrbitReport:
    passed: bool
    orbit_size: int
    rank_h: int
    orbit_rank: int
    membership_ok: bool                  # every orbit row in rowspace(H)
    local_spans_ok: bool                 # per-vertex span equality
    start_weight: int

    def require(self) -> None:
        if not self.passed:
            raise CheckFailure(
                f"single-orbit check failed: rank(orbit) = {self.orbit_rank}, "
                f"rank(H) = {self.rank_h}, membership_ok={self.membership_ok}, "
                f"local_spans_ok={self.local_spans_ok}"
            )


def row_orbit(inst: CayleyCodeInstance, perms: Sequence[np.ndarray],
              start_row: int = 0) -> list[tuple[int, ...]]:
    """Orbit of one constraint row under the edge permutations, as
    deduplicated support tuples, in BFS discovery order."""
    plists = [perm.tolist() for perm in perms]
    start = tuple(sorted(inst.row_support(start_row)))
    seen = {start}
    queue = [start]
    head = 0
    while head < len(queue):
        sup = queue[head]
        head += 1
        for plist in plists:
            img = tuple(sorted(plist[c] for c in sup))
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return queue


def _locate_row_vertex(inst: CayleyCodeInstance, support: tuple[int, ...]
                       ) -> Optional[tuple[int, int]]:
    """(vertex, local mask) when the support lies in one vertex's star."""
    graph = inst.graph
    ends = [set(graph.endpoint_vertices(e)) for e in support[:2]]
    candidates = ends[0] if len(ends) == 1 else ends[0] & ends[1]
    for v in candidates:
        star = graph.star_edge_ids(v)
        positions = {e: i for i, e in enumerate(star)}
        if all(e in positions for e in support):
            mask = 0
            for e in support:
                mask |= 1 << positions[e]
            return v, mask
    return None


def _local_basis(masks: list[int]) -> list[int]:
    """Row-reduce small integer masks; returns an independent basis of
    the same span."""
    pivots: dict[int, int] = {}
    for mask in masks:
        while mask:
            low = (mask & -mask).bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = mask
                break
            mask ^= p
    return [pivots[k] for k in sorted(pivots)]


def verify_single_orbit(inst: CayleyCodeInstance, perms: Sequence[np.ndarray],
                        start_row: int = 0) -> SingleOrbitReport:
    """The orbit of the single starting constraint must span the whole
    row space: rank(orbit rows) == rank(H).

    Three certificates are computed: per-vertex local span equality
    (each orbit row is vertex-local; at every vertex the orbit's local
    words must span the same subspace as the dual basis of B, which
    localizes any coordinate-convention failure to a vertex), the rank
    of the orbit rows, and membership of the orbit rows in the row
    space of H.  The rank and membership computations go through a
    span-preserving reduction: orbit rows at one vertex are supported
    entirely inside that vertex's star, so eliminating them against
    each other locally leaves at most deg - k rows per vertex with the
    same overall span.  When a row fails to be vertex-local, the raw
    orbit matrix is used directly instead.
    """
    orbit = row_orbit(inst, perms, start_row)
    start_weight = len(orbit[0])
    rank_h = inst.rank

    # locate every orbit row at its vertex
    local_masks: dict[int, list[int]] = {}
    all_local = True
    for sup in orbit:
        located = _locate_row_vertex(inst, sup)
        if located is None:
            all_local = False
            break
        v, mask = located
        local_masks.setdefault(v, []).append(mask)

    local_spans_ok = all_local
    if all_local:
        target = inst.dual_rows
        target_rank = int_rank(target)
        for v in range(inst.graph.n_vertices):
            masks = local_masks.get(v)
            if masks is None or not (
                int_rank(masks) == target_rank == int_rank(masks + target)
            ):
                local_spans_ok = False
                break

    if all_local:
        # span-preserving per-vertex reduction, then one global elimination
        supports = []
        for v, masks in sorted(local_masks.items()):
            star = inst.graph.star_edge_ids(v)
            for mask in _local_basis(masks):
                supports.append([star[i] for i in range(len(star)) if (mask >> i) & 1])
        reduced = Gf2Matrix.from_supports(inst.n, supports)
    else:
        reduced = Gf2Matrix.from_supports(inst.n, orbit)
    orbit_rank = reduced.rank()

    membership_ok = True
    chunk = 8192
    for lo in range(0, reduced.nrows, chunk):
        residual = inst.echelon.reduce_batch(reduced.data[lo:lo + chunk])
        if residual.any():
            membership_ok = False
            break

    passed = membership_ok and orbit_rank == rank_h and local_spans_ok
    return SingleOrbitReport(passed, len(orbit), rank_h, orbit_rank,
                             membership_ok, local_spans_ok, start_weight)


# ---------------------------------------------------------------------------
# Distance of the edge code
# ---------------------------------------------------------------------------

def code_distance(inst: CayleyCodeInstance, mode: str = "sampled",
                  trials: int = 10000, seed: int = 0) -> DistanceReport:
    """Minimum nonzero codeword weight: exhaustive for dimension up to
    EXACT_EDGE_DISTANCE_MAX_DIM, otherwise a sampled upper bound.
    The zero code reports value None (no nonzero codeword)."""
    from .gf2 import nullspace

    k = inst.dim
    if mode == "exact" and k > EXACT_EDGE_DISTANCE_MAX_DIM:
        raise ValueError(
            f"exact distance capped at dim {EXACT_EDGE_DISTANCE_MAX_DIM}, code has {k}"
        )
    if k == 0:
        return DistanceReport(mode, None, None)
    basis = nullspace(inst.matrix)
    assert basis.nrows == k
    if mode == "exact":
        best = None
        witness = None
        word = np.zeros(basis.data.shape[1], dtype=np.uint64)
        for i in range(1, 1 << k):
            word ^= basis.data[(i & -i).bit_length() - 1]
            w = int(np.bitwise_count(word).sum())
            if best is None or w < best:
                best, witness = w, unpack_int(word)
        return DistanceReport("exact", best, witness)
    if mode == "sampled":
        best = None
        witness = None
        for t in range(trials):
            rng = Random((seed << 20) ^ t)
            mask = rng.getrandbits(k)
            if mask == 0:
                continue
            sel = [i for i in range(k) if (mask >> i) & 1]
            word = np.bitwise_xor.reduce(basis.data[sel], axis=0)
            w = int(np.bitwise_count(word).sum())
            if best is None or w < best:
                best, witness = w, unpack_int(word)
        return DistanceReport("sampled", best, witness, trials=trials)
    raise ValueError(f"unknown mode {mode!r}")


def codeword_set_from_nullspace(inst: CayleyCodeInstance, max_dim: int = 20) -> set[int]:
    """All codewords by spanning the nullspace of H (small codes only)."""
    from .gf2 import nullspace

    basis = nullspace(inst.matrix)
    if basis.nrows > max_dim:
        raise ValueError(f"nullspace dimension {basis.nrows} exceeds {max_dim}")
    ints = basis.to_ints()
    out = {0}
    word = 0
    for i in range(1, 1 << len(ints)):
        word ^= ints[(i & -i).bit_length() - 1]
        out.add(word)
    return out


def codeword_set_brute_force(inst: CayleyCodeInstance) -> set[int]:
    """All codewords by filtering every edge vector through the
    per-vertex local-view definition; the independent oracle for the
    parity-check construction."""
    n_e = inst.n
    if n_e > BRUTE_FORCE_MAX_EDGES:
        raise ValueError(f"brute force capped at {BRUTE_FORCE_MAX_EDGES} edges")
    inner_words = {0}
    word = 0
    basis = inst.inner.basis()
    for i in range(1, 1 << inst.inner.dim):
        word ^= basis[(i & -i).bit_length() - 1]
        inner_words.add(word)
    stars = [inst.graph.star_edge_ids(v) for v in range(inst.graph.n_vertices)]
    out = set()
    for cand in range(1 << n_e):
        ok = True
        for star in stars:
            view = 0
            for i, e in enumerate(star):
                if (cand >> e) & 1:
                    view |= 1 << i
            if view not in inner_words:
                ok = False
                break
        if ok:
            out.add(cand)
    return out


# ---------------------------------------------------------------------------
# The aggregated verification report
# ---------------------------------------------------------------------------

def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


@dataclass
class VerificationReport:
    params: dict
    graph: dict
    spectrum: dict
    bounds: dict
    checks: dict
    distance: dict

    def to_json(self) -> str:
        payload = {
            "params": self.params,
            "graph": self.graph,
            "spectrum": self.spectrum,
            "bounds": self.bounds,
            "checks": self.checks,
            "distance": self.distance,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        payload = json.loads(text)
        return cls(**{k: payload[k] for k in
                      ("params", "graph", "spectrum", "bounds", "checks", "distance")})

    @property
    def all_passed(self) -> bool:
        return all(self.checks[k] for k in
                   ("regular", "ramanujan", "edge_transitive", "rate_bound",
                    "invariance", "single_orbit", "classification"))


def run_verification(gens, graph: CayleyGraph, inner: CyclicCode,
                     spectrum_mode: str = "auto", seed: int = 0,
                     invariance_trials: int = 200,
                     distance_trials: int = 0,
                     inner_d_lower: int | None = None
                     ) -> tuple[VerificationReport, CayleyCodeInstance]:
    """Full pipeline on a built graph: classification, spectrum and the
    expansion certificate, edge transitivity, the code's rate bound,
    invariance and single-orbit checks, optional sampled distance.

    inner_d_lower, when given, is a proven distance bound for the inner
    code (e.g. its designed distance); otherwise the exact distance is
    computed when the inner dimension permits, and the distance bound
    of the edge code is reported as vacuous when no bound is known.
    """
    from .cyclic import EXACT_DISTANCE_MAX_DIM, min_distance
    from .graphs import symmetry_edge_permutations, verify_edge_transitive
    from .quaternion import classify, expected_group_order
    from .spectra import is_ramanujan, ramanujan_bound, spectrum

    params = gens.params
    q = params.q

    variant = classify(gens)
    order_ok = graph.n_vertices == expected_group_order(q, params.e, variant)
    regular_ok = graph.degree == q + 1 and 2 * graph.n_edges == graph.n_vertices * (q + 1)
    bip_ok = graph.bipartite == (variant == "pgl")

    spec = spectrum(graph, mode=spectrum_mode, seed=seed)
    ram = is_ramanujan(spec, q)

    et_ok, orbit_edges = verify_edge_transitive(graph, gens)

    inst = build_parity_check(graph, inner)
    rate = measured_rate(inst)
    if inner_d_lower is not None:
        delta_b = Fraction(inner_d_lower, inner.n)
        delta_source = "designed"
    elif inner.dim <= EXACT_DISTANCE_MAX_DIM:
        delta_b = Fraction(min_distance(inner, "exact").value, inner.n)
        delta_source = "exact"
    else:
        delta_b = Fraction(0)
        delta_source = "unknown"
    rate_lb, dist_lb = edge_code_bounds(inner.rate, delta_b, spec.lambda2)

    perms = symmetry_edge_permutations(graph, gens)
    inv = verify_invariance(
        inst, {"left_gamma": perms["left_s0"], "torus_t0": perms["torus_t0"]},
        trials=invariance_trials, seed=seed)
    orbit_rep = verify_single_orbit(inst, list(perms.values()))

    dist: dict = {"mode": "skipped"}
    if distance_trials > 0:
        rep = code_distance(inst, "sampled", trials=distance_trials, seed=seed)
        dist = {"mode": rep.mode, "best_weight_upper": rep.value,
                "trials": rep.trials}
        if dist_lb > 0 and rep.value is not None:
            # sampled weights are upper bounds; the guarantee says they
            # cannot undercut the proven floor
            dist["respects_lower_bound"] = Fraction(rep.value, inst.n) >= dist_lb

    report = VerificationReport(
        params={
            "q": q, "e": params.e, "variant": variant,
            "delta": params.delta.to_coeff_list(),
            "residue_poly": list(params.residue_poly),
            "ybar": params.ybar.to_coeff_list(),
            "gamma": gens.gamma.to_ints(),
            "inner": {"n": inner.n, "k": inner.dim,
                      "h_hex": gf2poly.to_hex(inner.h)},
            "seed": seed,
        },
        graph={
            "vertices": graph.n_vertices, "edges": graph.n_edges,
            "degree": graph.degree, "bipartite": graph.bipartite,
            "order_matches_formula": order_ok,
        },
        spectrum={
            "method": spec.method, "lambda2": spec.lambda2,
            "lambda_min": spec.lambda_min, "tolerance": spec.tolerance,
            "ramanujan_bound": ramanujan_bound(q),
            "iterations": spec.iterations,
        },
        bounds={
            "rate_lower": _frac(rate_lb),
            "measured_rate": _frac(rate),
            "rank": inst.rank,
            "inner_delta": _frac(delta_b),
            "inner_delta_source": delta_source,
            "distance_lower": _frac(dist_lb),
        },
        checks={
            "classification": bip_ok and order_ok,
            "regular": regular_ok,
            "ramanujan": ram,
            "edge_transitive": et_ok,
            "edge_orbit_size": orbit_edges,
            "rate_bound": rate >= rate_lb,
            "invariance": inv.passed,
            "single_orbit": orbit_rep.passed,
            "single_orbit_rank": orbit_rep.orbit_rank,
        },
        distance=dist,
    )
    return report, inst
