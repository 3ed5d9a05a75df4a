"""Executable catalog of the structural claims about level graphs.

Every claim is instantiated over a parameter grid, checked hypothesis-first,
and reported with a deterministic status:

* VERIFIED    -- hypotheses held and the conclusion checked out exhaustively.
* REFUTED     -- hypotheses held and a concrete counterexample was found;
                 the witness replays through the public graph operations.
* VACUOUS     -- the hypotheses select nothing on this instance.
* UNSUPPORTED -- the instance needs ring machinery we do not enumerate.

Throughout, the ideal is required to be proper and non-maximal before any
claim-specific hypothesis runs; a maximal ideal empties the vertex set and
makes every statement about the graphs degenerate.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import analysis
from .analysis import (
    PartitionWitness,
    check_partition_claim,
    complete_multipartite_parts,
    induced_subgraph,
    is_complete,
    is_empty_graph,
    zpnq_parts,
)
from .conilpotency import ring_conilpotency_index
from .graphs import (
    COZERO,
    EXTENDED,
    ZERO,
    GraphLevel,
    build_level,
    level_context,
    stabilization_bound,
)
from .ideals import (
    IdealSet,
    UnsupportedRingFamily,
    ideal_sum,
    is_maximal,
    is_prime,
    is_semiprime,
    jacobson_radical,
    maximal_ideals,
    span,
    span_from_labels,
)
from .rings import ModularRing, Ring, build_ring, descriptor_string

VERIFIED = "VERIFIED"
REFUTED = "REFUTED"
VACUOUS = "VACUOUS"
UNSUPPORTED = "UNSUPPORTED"


@dataclass(frozen=True)
class ClaimInstance:
    claim: str
    ring: str
    ideal: str = "0"
    params: tuple[tuple[str, object], ...] = ()
    expected: Optional[str] = None

    def param(self, key: str, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "ring": self.ring,
            "ideal": self.ideal,
            "params": dict(self.params),
            "expected": self.expected,
        }

    @staticmethod
    def from_dict(d: dict) -> "ClaimInstance":
        params = tuple(sorted((d.get("params") or {}).items()))
        return ClaimInstance(
            claim=d["claim"],
            ring=d["ring"],
            ideal=d.get("ideal", "0"),
            params=params,
            expected=d.get("expected"),
        )


@dataclass
class ClaimReport:
    instance: ClaimInstance
    status: str
    witness: Optional[dict] = None
    detail: str = ""
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        # elapsed is intentionally left out: reports must be byte-identical
        # across runs and worker counts
        d = self.instance.as_dict()
        d["status"] = self.status
        d["witness"] = self.witness
        d["detail"] = self.detail
        return d


class _Resolved:
    """Lazy per-instance handles onto the shared ring/ideal/graph caches."""

    def __init__(self, inst: ClaimInstance):
        self.instance = inst
        self.ring: Ring = build_ring(inst.ring)
        self.J: IdealSet = span_from_labels(self.ring, inst.ideal)
        self.ctx = level_context(self.ring, self.J)

    def level(self, i) -> int:
        if i == EXTENDED or i == "ext":
            return self.ctx.stabilization_bound()
        return int(i)

    def graph(self, i, kind: str = COZERO) -> GraphLevel:
        return build_level(self.ring, self.J, self.level(i), kind)

    def label(self, x: int) -> str:
        return self.ring.label(x)

    def vertex_bits(self, kind: str = COZERO) -> int:
        bits = 0
        for v in self.ctx.vertices(kind):
            bits |= 1 << v
        return bits


_STANDING_CACHE: dict[tuple[int, int], bool] = {}


def _standing_ok(r: _Resolved) -> bool:
    """The blanket assumption: the ideal is proper and not maximal."""
    key = (id(r.ring), r.J.bits)
    got = _STANDING_CACHE.get(key)
    if got is None:
        got = r.J.is_proper() and not is_maximal(r.J)
        _STANDING_CACHE[key] = got
    return got


def _first_edge(g: GraphLevel) -> Optional[tuple[int, int]]:
    return next(iter(g.edges()), None)


def _first_missing_pair(g: GraphLevel) -> Optional[tuple[int, int]]:
    verts = g.vertices
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if not g.has_edge(x, y):
                return (x, y)
    return None


# ---------------------------------------------------------------------------
# Claim runners
# ---------------------------------------------------------------------------

def _run_empty(r: _Resolved):
    desc = r.ring.descriptor
    if not isinstance(desc, ModularRing) or len(_prime_factorization(desc.modulus)) != 1:
        return VACUOUS, None, "ring is not Z_{p^n}"
    if r.J.bits != 1:
        return VACUOUS, None, "ideal is not 0"
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    g = r.graph(r.instance.param("i", 1))
    if is_empty_graph(g):
        return VERIFIED, None, f"|V|={len(g.vertices)}, no edges"
    x, y = _first_edge(g)
    witness = {
        "kind": "edge",
        "graph": COZERO,
        "level": g.level,
        "x": r.label(x),
        "y": r.label(y),
    }
    return REFUTED, witness, "an edge exists"


def _run_grow(r: _Resolved):
    p = r.instance.param("p")
    q = r.instance.param("q")
    n = r.instance.param("n")
    desc = r.ring.descriptor
    if (
        p is None
        or q is None
        or n is None
        or n <= 1
        or not isinstance(desc, ModularRing)
        or desc.modulus != p**n * q
        or r.J.bits != 1
    ):
        return VACUOUS, None, "instance does not match Z_{p^n q} with n > 1 and ideal 0"
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    g_lo = r.graph(n - 1)
    g_hi = r.graph(n)
    if analysis.graph_equals(g_lo, g_hi):
        return REFUTED, {
            "kind": "graphs_equal",
            "graph": COZERO,
            "levels": [n - 1, n],
        }, "levels n-1 and n coincide"
    u = (p ** (n - 1) * q) % desc.modulus
    v = p % desc.modulus
    pair_ok = (not g_lo.has_edge(u, v)) and g_hi.has_edge(u, v)
    if pair_ok:
        witness = {
            "kind": "edge",
            "graph": COZERO,
            "level": n,
            "x": r.label(u),
            "y": r.label(v),
            "absent_at_level": n - 1,
        }
        return VERIFIED, witness, "levels differ; the expected pair is the new edge"
    new = sorted(set(g_hi.edges()) - set(g_lo.edges()))
    x, y = new[0]
    witness = {
        "kind": "edge",
        "graph": COZERO,
        "level": n,
        "x": r.label(x),
        "y": r.label(y),
        "absent_at_level": n - 1,
    }
    return VERIFIED, witness, "levels differ (expected pair did not witness it)"


def _run_prime(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    if not is_prime(r.J):
        return VACUOUS, None, "ideal is not prime"
    g = r.graph(r.instance.param("i", 1))
    if not is_complete(g):
        x, y = _first_missing_pair(g)
        witness = {
            "kind": "non_edge",
            "graph": COZERO,
            "level": g.level,
            "x": r.label(x),
            "y": r.label(y),
        }
        return VERIFIED, witness, "graph is not complete"
    witness = {
        "kind": "complete_graph",
        "graph": COZERO,
        "level": g.level,
        "vertices": [r.label(v) for v in g.vertices],
    }
    return REFUTED, witness, "graph is complete"


def _run_filtration(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    bound = r.ctx.stabilization_bound()
    levels = sorted({1, 2, 3, bound, bound + 1})
    graphs = [r.graph(i) for i in levels]
    for g_lo, g_hi in zip(graphs, graphs[1:]):
        if g_lo.vertices != g_hi.vertices:
            return REFUTED, {
                "kind": "vertex_mismatch",
                "levels": [g_lo.level, g_hi.level],
            }, "vertex set changed across levels"
        if not analysis.is_subgraph(g_lo, g_hi):
            extra = sorted(set(g_lo.edges()) - set(g_hi.edges()))[0]
            witness = {
                "kind": "edge",
                "graph": COZERO,
                "level": g_lo.level,
                "x": r.label(extra[0]),
                "y": r.label(extra[1]),
                "absent_at_level": g_hi.level,
            }
            return REFUTED, witness, "edge lost at a higher level"
    return VERIFIED, None, f"chain verified across levels {levels}"


def _run_tripartite(r: _Resolved):
    n = r.instance.param("n")
    desc = r.ring.descriptor
    if n is None or not isinstance(desc, ModularRing) or r.J.bits != 1:
        return VACUOUS, None, "instance does not match Z_{p^n q} with ideal 0"
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    try:
        parts = zpnq_parts(r.ring)
    except analysis.NotZpnqForm:
        return VACUOUS, None, "modulus is not of the p^n q shape"
    g = r.graph(n)
    part_labels = [[r.label(v) for v in part] for part in parts.parts]
    if parts.arity != 3:
        return REFUTED, {
            "kind": "arity",
            "arity": parts.arity,
            "parts": part_labels,
        }, "valuation split does not have three nonempty parts"
    verdict = check_partition_claim(g, parts)
    if verdict.holds:
        return VERIFIED, {
            "kind": "partition",
            "graph": COZERO,
            "level": g.level,
            "parts": part_labels,
        }, "complete tripartite with the valuation parts"
    x, y = verdict.witness
    witness = {
        "kind": "partition_pair",
        "graph": COZERO,
        "level": g.level,
        "x": r.label(x),
        "y": r.label(y),
        "reason": verdict.reason,
        "parts": part_labels,
    }
    return REFUTED, witness, f"partition claim fails: {verdict.reason}"


def _run_xi_parity(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    if not analysis.graph_equals(r.graph(1), r.graph(2)):
        return VACUOUS, None, "levels 1 and 2 differ"
    xi = ring_conilpotency_index(r.ring, r.J)
    if xi is None:
        return VERIFIED, None, "no conilpotent element; index undefined"
    if xi % 2 == 1:
        return VERIFIED, None, f"ring index {xi} is odd"
    from .conilpotency import conilpotency_record

    for x in range(r.ring.size):
        rec = conilpotency_record(r.ring, r.J, x)
        if rec.is_conilpotent and rec.index == xi:
            witness = {"kind": "element", "x": r.label(x), "n": xi}
            return REFUTED, witness, f"ring index {xi} is even"
    return REFUTED, {"kind": "element", "x": "?", "n": xi}, "even index, no witness found"


def _stable_power_exponents(ring: Ring, x: int) -> Iterable[int]:
    t, p = ring.power_rho(x)
    for n in range(1, t + p + 1):
        if ring.pow(x, n) == ring.pow(x, n + 1):
            yield n


def _run_conilpotent_elements(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    ring, J = r.ring, r.J
    jac = jacobson_radical(ring)
    if not J.issubset(jac):
        return VACUOUS, None, "ideal is not inside the radical"
    checked = 0
    for x in range(ring.size):
        if ring.is_unit(x) or jac.contains(x):
            continue
        one_minus = ring.sub(ring.one, x)
        complement = ideal_sum(J, (one_minus,))
        for n in _stable_power_exponents(ring, x):
            checked += 1
            power_ideal = r.ctx.ideal_of_power(x, n)
            if power_ideal.contains(one_minus):
                witness = {
                    "kind": "element",
                    "x": r.label(x),
                    "n": n,
                    "condition": "1-x inside x^n R + J",
                }
                return REFUTED, witness, "first non-membership fails"
            if complement.contains(ring.pow(x, n)):
                witness = {
                    "kind": "element",
                    "x": r.label(x),
                    "n": n,
                    "condition": "x^n inside R(1-x) + J",
                }
                return REFUTED, witness, "second non-membership fails"
    if checked == 0:
        return VACUOUS, None, "no non-unit outside the radical has a stable power"
    return VERIFIED, None, f"{checked} stable-power cases verified"


def _run_vertex_membership(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    ring, J = r.ring, r.J
    vbits = r.vertex_bits(COZERO)
    one = ring.one
    checked = 0
    # stable power in the vertex set forces 1 - x in
    for x in range(ring.size):
        for n in _stable_power_exponents(ring, x):
            xn = ring.pow(x, n)
            if not vbits >> xn & 1:
                continue
            checked += 1
            if not vbits >> ring.sub(one, x) & 1:
                witness = {
                    "kind": "element",
                    "x": r.label(x),
                    "n": n,
                    "condition": "1-x not a vertex despite stable vertex power",
                }
                return REFUTED, witness, "forward membership fails"
    # with J inside the radical, 1 - x a vertex forces every power in
    jac = jacobson_radical(ring)
    if J.issubset(jac):
        for x in range(ring.size):
            if ring.is_unit(x):
                continue
            if not vbits >> ring.sub(one, x) & 1:
                continue
            traj = r.ctx.trajectory(x)
            for n in range(1, traj.preperiod + traj.period + 1):
                checked += 1
                if not vbits >> ring.pow(x, n) & 1:
                    witness = {
                        "kind": "element",
                        "x": r.label(x),
                        "n": n,
                        "condition": "x^n not a vertex despite 1-x being one",
                    }
                    return REFUTED, witness, "reverse membership fails"
    if checked == 0:
        return VACUOUS, None, "no element satisfies either hypothesis"
    return VERIFIED, None, f"{checked} membership cases verified"


def _run_stable_adjacency(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    ring, J = r.ring, r.J
    jac = jacobson_radical(ring)
    if not J.issubset(jac):
        return VACUOUS, None, "ideal is not inside the radical"
    vbits = r.vertex_bits(COZERO)
    checked = 0
    for x in range(ring.size):
        if ring.is_unit(x) or jac.contains(x):
            continue
        for n in _stable_power_exponents(ring, x):
            checked += 1
            u = ring.pow(x, n)
            v = ring.sub(ring.one, x)
            witness = {
                "kind": "element",
                "x": r.label(x),
                "n": n,
                "pair": [r.label(u), r.label(v)],
            }
            if u == v:
                witness["condition"] = "x^n equals 1-x"
                return REFUTED, witness, "pair collapses to one element"
            if not (vbits >> u & 1 and vbits >> v & 1):
                witness["condition"] = "pair not inside the vertex set"
                return REFUTED, witness, "pair leaves the vertex set"
            if not r.ctx.adjacent(u, v, 1, COZERO):
                witness["condition"] = "pair not adjacent at level 1"
                return REFUTED, witness, "adjacency fails at level 1"
    if checked == 0:
        return VACUOUS, None, "no non-unit outside the radical has a stable power"
    return VERIFIED, None, f"{checked} adjacency cases verified"


def _run_power_descent(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    ring = r.ring
    verts = r.ctx.vertices(COZERO)
    vbits = r.vertex_bits(COZERO)
    g1 = r.graph(1)
    pos = {v: k for k, v in enumerate(verts)}
    rows = g1.rows
    mul = ring.mul
    checked = 0
    for x in range(ring.size):
        t, p = ring.power_rho(x)
        horizon = t + p
        if horizon < 2:
            continue
        powers = [ring.pow(x, n) for n in range(1, horizon + 1)]
        for n in range(2, horizon + 1):
            xn = powers[n - 1]
            for y in verts:
                w = mul(xn, y)
                if w == y or not vbits >> w & 1:
                    continue
                if not rows[pos[w]] >> pos[y] & 1:
                    continue
                checked += 1
                for k in range(1, n):
                    w2 = mul(powers[n - k - 1], y)
                    witness = {
                        "kind": "descent",
                        "x": r.label(x),
                        "y": r.label(y),
                        "n": n,
                        "k": k,
                        "pair": [r.label(w2), r.label(y)],
                    }
                    if w2 == y:
                        witness["condition"] = "x^(n-k) y collapses onto y"
                        return REFUTED, witness, "descent pair collapses"
                    if not vbits >> w2 & 1:
                        witness["condition"] = "x^(n-k) y is not a vertex"
                        return REFUTED, witness, "descent leaves the vertex set"
                    if not rows[pos[w2]] >> pos[y] & 1:
                        witness["condition"] = "pair not adjacent at level 1"
                        return REFUTED, witness, "descent adjacency fails"
    if checked == 0:
        return VACUOUS, None, "no adjacent power-multiple pair at level 1"
    return VERIFIED, None, f"{checked} descent chains verified"


def _run_idempotent_descent(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    ring = r.ring
    ctx = r.ctx
    verts = ctx.vertices(COZERO)
    vbits = r.vertex_bits(COZERO)
    bound = ctx.stabilization_bound()
    g_top = r.graph(bound)
    g_one = r.graph(1)
    pos = {v: k for k, v in enumerate(verts)}
    checked = 0
    for y in verts:
        if ring.mul(y, y) != y:
            continue
        ypos = pos[y]
        for x in range(ring.size):
            u = ring.mul(x, y)
            if u == y or not vbits >> u & 1:
                continue
            if not g_top.rows[pos[u]] >> ypos & 1:
                continue
            checked += 1
            if not g_one.rows[pos[u]] >> ypos & 1:
                witness = {
                    "kind": "non_edge",
                    "graph": COZERO,
                    "level": 1,
                    "x": r.label(u),
                    "y": r.label(y),
                    "adjacent_at_level": bound,
                }
                return REFUTED, witness, "adjacency does not descend to level 1"
    if checked == 0:
        return VACUOUS, None, "no idempotent vertex with an adjacent multiple"
    return VERIFIED, None, f"{checked} idempotent descents verified"


def _run_bipartite(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    try:
        maxima = maximal_ideals(r.ring)
    except UnsupportedRingFamily:
        return UNSUPPORTED, None, "maximal ideals are not enumerated for this ring"
    if len(maxima) != 2:
        return VACUOUS, None, f"ring has {len(maxima)} maximal ideals, not 2"
    report = check_bipartite_iff(
        r.ring, r.J, maxima[0], maxima[1], r.level(r.instance.param("i", 1))
    )
    return report


def check_bipartite_iff(
    ring: Ring, J: IdealSet, m1: IdealSet, m2: IdealSet, i: int
):
    """Both directions of the two-maximal-ideal bipartiteness equivalence.

    Side A: the level graph with radical vertices removed is complete
    bipartite with parts m1 and m2 minus the radical. Side B: power ideals
    of same-part vertices are pairwise comparable for all exponents <= i.
    Returns (status, witness, detail).
    """
    jac = jacobson_radical(ring)
    if not J.issubset(jac):
        return VACUOUS, None, "ideal is not inside the radical"
    if not (is_maximal(m1) and is_maximal(m2)) or m1.bits == m2.bits:
        return VACUOUS, None, "supplied ideals are not two distinct maximal ideals"
    ctx = level_context(ring, J)
    part1 = tuple(x for x in m1.members() if not jac.contains(x))
    part2 = tuple(x for x in m2.members() if not jac.contains(x))
    g = build_level(ring, J, i, COZERO)
    keep = {v for v in g.vertices if not jac.contains(v)}
    restricted = induced_subgraph(g, keep)
    side_a = True
    witness_a: Optional[dict] = None
    expected = set(part1) | set(part2)
    if set(restricted.vertices) != expected:
        stray = sorted(set(restricted.vertices) ^ expected)[0]
        side_a = False
        witness_a = {
            "kind": "vertex_mismatch",
            "x": ring.label(stray),
            "level": i,
        }
    else:
        verdict = check_partition_claim(restricted, PartitionWitness((part1, part2)))
        if not verdict.holds:
            side_a = False
            x, y = verdict.witness
            witness_a = {
                "kind": "partition_pair",
                "graph": COZERO,
                "level": i,
                "x": ring.label(x),
                "y": ring.label(y),
                "reason": verdict.reason,
                "parts": [
                    [ring.label(v) for v in part1],
                    [ring.label(v) for v in part2],
                ],
            }
    side_b = True
    witness_b: Optional[dict] = None
    for part in (part1, part2):
        for ai, x in enumerate(part):
            for y in part[ai:]:
                for n in range(1, i + 1):
                    for m in range(1, i + 1):
                        ix = ctx.ideal_of_power(x, n)
                        iy = ctx.ideal_of_power(y, m)
                        if not ix.comparable(iy):
                            side_b = False
                            witness_b = {
                                "kind": "incomparable_ideals",
                                "x": ring.label(x),
                                "n": n,
                                "y": ring.label(y),
                                "m": m,
                            }
                            break
                    if not side_b:
                        break
                if not side_b:
                    break
            if not side_b:
                break
        if not side_b:
            break
    if side_a == side_b:
        verdict_word = "hold" if side_a else "fail"
        return (
            VERIFIED,
            None,
            f"both sides {verdict_word}: equivalence confirmed at level {i}",
        )
    if side_b:
        witness = dict(witness_a or {})
        witness["direction"] = "ordered ideals but not complete bipartite"
    else:
        witness = dict(witness_b or {})
        witness["direction"] = "complete bipartite but ideals not ordered"
    return REFUTED, witness, "the two sides disagree"


def _run_zero_divisor_completeness(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    i = r.instance.param("i", 1)
    g_co = r.graph(i, COZERO)
    if not is_complete(g_co):
        return VACUOUS, None, "the cozero graph is not complete at this level"
    g_z = r.graph(i, ZERO)
    if is_complete(g_z):
        return VERIFIED, None, f"both graphs complete at level {g_z.level}"
    x, y = _first_missing_pair(g_z)
    witness = {
        "kind": "non_edge",
        "graph": ZERO,
        "level": g_z.level,
        "x": r.label(x),
        "y": r.label(y),
    }
    return REFUTED, witness, "zero-divisor graph is not complete"


def _run_semiprime_incompleteness(r: _Resolved):
    if not _standing_ok(r):
        return VACUOUS, None, "ideal is maximal or improper"
    if not is_semiprime(r.J):
        return VACUOUS, None, "ideal is not semiprime"
    if r.ctx.vertices(ZERO) != r.ctx.vertices(COZERO):
        return VACUOUS, None, "zero and cozero vertex sets differ"
    i = r.instance.param("i", 1)
    g_z = r.graph(i, ZERO)
    if is_complete(g_z) and len(g_z.vertices) > 0:
        witness = {
            "kind": "complete_graph",
            "graph": ZERO,
            "level": g_z.level,
            "vertices": [r.label(v) for v in g_z.vertices],
        }
        return REFUTED, witness, "zero-divisor graph is complete"
    g_co = r.graph(i, COZERO)
    if is_complete(g_co) and len(g_co.vertices) > 0:
        witness = {
            "kind": "complete_graph",
            "graph": COZERO,
            "level": g_co.level,
            "vertices": [r.label(v) for v in g_co.vertices],
        }
        return REFUTED, witness, "cozero graph is complete"
    return VERIFIED, None, f"neither graph is complete at level {g_z.level}"


def _prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class ClaimDef:
    claim_id: str
    summary: str
    runner: Callable[[_Resolved], tuple]
    default_expected: str = VERIFIED


CATALOG: dict[str, ClaimDef] = {
    c.claim_id: c
    for c in [
        ClaimDef(
            "C-EMPTY",
            "prime-power modulus with the zero ideal gives an edgeless graph at every level",
            _run_empty,
        ),
        ClaimDef(
            "C-GROW",
            "over Z_{p^n q} with the zero ideal, levels n-1 and n differ",
            _run_grow,
        ),
        ClaimDef(
            "C-PRIME",
            "a prime ideal never yields a complete graph",
            _run_prime,
        ),
        ClaimDef(
            "C-FILT",
            "edge sets only grow with the level over a fixed vertex set",
            _run_filtration,
        ),
        ClaimDef(
            "C-TRI",
            "over Z_{p^n q} at level n the graph is complete tripartite on the valuation parts",
            _run_tripartite,
            default_expected=REFUTED,
        ),
        ClaimDef(
            "C-XI",
            "when levels 1 and 2 coincide the ring conilpotency index is never even",
            _run_xi_parity,
        ),
        ClaimDef(
            "C-CONIL",
            "non-units outside the radical with a stable power are conilpotent at that exponent",
            _run_conilpotent_elements,
        ),
        ClaimDef(
            "C-VMEM",
            "stable powers and 1-x trade vertex membership in both directions",
            _run_vertex_membership,
        ),
        ClaimDef(
            "C-ADJ17",
            "a stable power x^n and 1-x are adjacent at level 1",
            _run_stable_adjacency,
        ),
        ClaimDef(
            "C-DESC",
            "adjacency of x^n y to y at level 1 descends to every smaller power",
            _run_power_descent,
        ),
        ClaimDef(
            "C-IDEM",
            "adjacency of x y to an idempotent y descends to level 1",
            _run_idempotent_descent,
        ),
        ClaimDef(
            "C-BIP",
            "with two maximal ideals, complete bipartiteness off the radical is equivalent to totally ordered power ideals",
            _run_bipartite,
        ),
        ClaimDef(
            "C-ZDGC",
            "a complete cozero level forces a complete zero-divisor level",
            _run_zero_divisor_completeness,
        ),
        ClaimDef(
            "C-SEMI",
            "a semiprime ideal with matching vertex sets never yields a complete zero-divisor level",
            _run_semiprime_incompleteness,
        ),
    ]
}

CLAIM_ORDER = list(CATALOG)


def run_claim(instance: ClaimInstance) -> ClaimReport:
    """Evaluate one claim instance; failures become UNSUPPORTED reports."""
    start = time.perf_counter()
    claim = CATALOG.get(instance.claim)
    if claim is None:
        raise ValueError(f"unknown claim id {instance.claim!r}")
    try:
        resolved = _Resolved(instance)
        status, witness, detail = claim.runner(resolved)
    except UnsupportedRingFamily as exc:
        status, witness, detail = UNSUPPORTED, None, str(exc)
    elapsed = time.perf_counter() - start
    return ClaimReport(instance, status, witness, detail, elapsed)


@dataclass
class SuiteResult:
    reports: list[ClaimReport]
    summary: dict[str, dict[str, int]]
    mismatches: list[ClaimReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _is_mismatch(report: ClaimReport) -> bool:
    expected = report.instance.expected
    if expected == VERIFIED and report.status == REFUTED:
        return True
    if expected == REFUTED and report.status == VERIFIED:
        return True
    return False


def run_suite(instances: list[ClaimInstance], workers: Optional[int] = None) -> SuiteResult:
    """Run all instances in order; output is independent of worker count."""
    # resolve rings and ideals sequentially so shared caches have one writer
    for inst in instances:
        ring = build_ring(inst.ring)
        span_from_labels(ring, inst.ideal)
    if workers is None or workers <= 1:
        reports = [run_claim(inst) for inst in instances]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_claim, instances))
    summary: dict[str, dict[str, int]] = {}
    for rep in reports:
        per = summary.setdefault(rep.instance.claim, {})
        per[rep.status] = per.get(rep.status, 0) + 1
    mismatches = [rep for rep in reports if _is_mismatch(rep)]
    return SuiteResult(reports, summary, mismatches)


def suite_to_json(result: SuiteResult) -> str:
    obj = {
        "reports": [rep.as_dict() for rep in result.reports],
        "summary": result.summary,
        "mismatches": len(result.mismatches),
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------

GRID_RINGS = [
    "Z2", "Z4", "Z8", "Z16",
    "Z3", "Z9", "Z27", "Z81",
    "Z5", "Z25", "Z125", "Z625",
    "Z6", "Z12", "Z18", "Z20", "Z24", "Z36", "Z50",
    "Z2[x,y]/(x^3,y^2)", "Z4[x]/(x^2)",
    "Z4xZ9", "Z2xZ2",
]

PNQ_CASES = [
    ("Z12", 2, 3, 2),
    ("Z24", 2, 3, 3),
    ("Z18", 3, 2, 2),
    ("Z20", 2, 5, 2),
    ("Z50", 5, 2, 2),
]

LEVELS = [1, 2, 3, "ext"]


def grid_ideals(ring_name: str) -> list[str]:
    """The ideal axis for one ring: 0, the radical, one non-radical principal."""
    ring = build_ring(ring_name)
    out = ["0"]
    seen = {1}
    jac = jacobson_radical(ring)
    if jac.bits not in seen:
        out.append(",".join(jac.generator_labels()))
        seen.add(jac.bits)
    for g in range(1, ring.size):
        ideal = span(ring, (g,))
        if ideal.bits in seen or not ideal.is_proper():
            continue
        if not is_semiprime(ideal):
            out.append(ring.label(g))
            seen.add(ideal.bits)
            break
    return out


def _expected_for(claim_id: str, ring_name: str, ideal_label: str) -> str:
    if claim_id == "C-TRI":
        return REFUTED
    if claim_id == "C-SEMI" and ring_name == "Z2xZ2" and ideal_label == "0":
        # the zero-divisor level of Z2xZ2 is the complete graph on the two
        # nontrivial idempotents even though the zero ideal is semiprime
        return REFUTED
    return VERIFIED


def default_grid() -> list[ClaimInstance]:
    """The built-in verification grid; fully deterministic."""
    instances: list[ClaimInstance] = []
    ideals_by_ring = {name: grid_ideals(name) for name in GRID_RINGS}
    prime_powers = [
        name
        for name in GRID_RINGS
        if isinstance(build_ring(name).descriptor, ModularRing)
        and len(_prime_factorization(build_ring(name).descriptor.modulus)) == 1
    ]

    def add(claim, ring_name, ideal_label, **params):
        instances.append(
            ClaimInstance(
                claim=claim,
                ring=ring_name,
                ideal=ideal_label,
                params=tuple(sorted(params.items())),
                expected=_expected_for(claim, ring_name, ideal_label),
            )
        )

    for name in prime_powers:
        for i in LEVELS:
            add("C-EMPTY", name, "0", i=i)
    for ring_name, p, q, n in PNQ_CASES:
        add("C-GROW", ring_name, "0", p=p, q=q, n=n)
        add("C-TRI", ring_name, "0", p=p, q=q, n=n)
    for name in GRID_RINGS:
        for ideal_label in ideals_by_ring[name]:
            for i in LEVELS:
                add("C-PRIME", name, ideal_label, i=i)
                add("C-ZDGC", name, ideal_label, i=i)
                add("C-SEMI", name, ideal_label, i=i)
            for i in LEVELS:
                add("C-BIP", name, ideal_label, i=i)
            add("C-FILT", name, ideal_label)
            add("C-XI", name, ideal_label)
            add("C-CONIL", name, ideal_label)
            add("C-VMEM", name, ideal_label)
            add("C-ADJ17", name, ideal_label)
            add("C-DESC", name, ideal_label)
            add("C-IDEM", name, ideal_label)
    return instances


def load_grid(path: str) -> list[ClaimInstance]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("grid file must be a JSON array of instances")
    return [ClaimInstance.from_dict(d) for d in data]


def dump_grid(instances: list[ClaimInstance]) -> str:
    return json.dumps([i.as_dict() for i in instances], indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Witness replay
# ---------------------------------------------------------------------------

def replay_witness(report: ClaimReport) -> bool:
    """Re-check a report's witness through the public graph operations."""
    w = report.witness
    if w is None:
        return True
    from . import graphs as graph_ops

    ring = build_ring(report.instance.ring)
    J = span_from_labels(ring, report.instance.ideal)
    kind = w.get("graph", COZERO)
    level = w.get("level")
    wkind = w.get("kind")
    if wkind == "edge":
        x, y = ring.parse_label(w["x"]), ring.parse_label(w["y"])
        ok = graph_ops.adjacent(ring, J, x, y, level, kind)
        if "absent_at_level" in w:
            ok = ok and not graph_ops.adjacent(
                ring, J, x, y, w["absent_at_level"], kind
            )
        return ok
    if wkind in ("non_edge", "partition_pair"):
        x, y = ring.parse_label(w["x"]), ring.parse_label(w["y"])
        edge = graph_ops.adjacent(ring, J, x, y, level, kind)
        if wkind == "partition_pair" and w.get("reason") == "edge inside a part":
            return edge
        return not edge
    if wkind == "complete_graph":
        g = build_level(ring, J, level, kind)
        return is_complete(g) and [ring.label(v) for v in g.vertices] == w["vertices"]
    if wkind == "incomparable_ideals":
        ctx = level_context(ring, J)
        ix = ctx.ideal_of_power(ring.parse_label(w["x"]), w["n"])
        iy = ctx.ideal_of_power(ring.parse_label(w["y"]), w["m"])
        return not ix.comparable(iy)
    if wkind == "partition":
        g = build_level(ring, J, level, kind)
        parts = PartitionWitness(
            tuple(tuple(ring.parse_label(v) for v in part) for part in w["parts"])
        )
        return check_partition_claim(g, parts).holds
    # element-style witnesses document hypothesis data; nothing graph-level
    return True
