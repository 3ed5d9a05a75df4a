"""Level graphs of a ring relative to an ideal.

Two kinds are built over the same machinery:

* ``cozero`` -- vertices are elements x outside J with xR + J proper; x and y
  are adjacent at level i when x^m lies outside y^nR + J and y^n lies outside
  x^mR + J for a common exponent pair m, n <= i.
* ``zero``   -- vertices are elements x outside J annihilated into J by some
  y outside J; adjacency at level i asks for x^n * y^m in J with both powers
  outside J, n, m <= i.

Membership of any element in any ideal depends only on the ideal the element
generates, so both adjacency tests factor through the interned ideals
x^mR + J. The per-element sequence of those ideals is eventually periodic,
which bounds every exponent search and yields the stabilization level at
which the graphs stop growing.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .ideals import IdealSet, ideal_sum, principal_plus, zero_ideal
from .rings import Ring, descriptor_string

COZERO = "cozero"
ZERO = "zero"
EXTENDED = "extended"

Level = Union[int, str]


class NotAVertex(Exception):
    """Adjacency was queried for an element outside the vertex set."""


@dataclass(frozen=True)
class PowerTrajectory:
    """Ideal ids of x^m R + J for m = 1, 2, ... with its eventual cycle.

    ``ideal_ids`` covers m = 1 .. preperiod + period; entries beyond the
    preperiod repeat with the stated period forever.
    """

    element: int
    ideal_ids: tuple[int, ...]
    preperiod: int
    period: int

    def id_at(self, m: int) -> int:
        if m < 1:
            raise ValueError("exponent must be >= 1")
        t, p = self.preperiod, self.period
        if m <= t + p:
            return self.ideal_ids[m - 1]
        return self.ideal_ids[t + (m - t - 1) % p]

    def ids_up_to(self, i: int) -> frozenset[int]:
        return frozenset(self.ideal_ids[: min(i, len(self.ideal_ids))])


@dataclass(frozen=True, eq=False)
class GraphLevel:
    """A level graph: sorted vertices plus a symmetric adjacency bitset."""

    ring: Ring
    ideal: IdealSet
    kind: str
    level: int
    requested_extended: bool
    vertices: tuple[int, ...]
    rows: tuple[int, ...]  # rows[k] bit j set iff vertices[k] ~ vertices[j]

    def position_of(self, x: int) -> int:
        pos = self._positions().get(x)
        if pos is None:
            raise NotAVertex(f"{self.ring.label(x)} is not a vertex")
        return pos

    def _positions(self) -> dict[int, int]:
        pos = getattr(self, "_pos_cache", None)
        if pos is None:
            pos = {v: k for k, v in enumerate(self.vertices)}
            object.__setattr__(self, "_pos_cache", pos)
        return pos

    def has_edge(self, x: int, y: int) -> bool:
        i, j = self.position_of(x), self.position_of(y)
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Unordered edges as element pairs, sorted by carrier index."""
        for i, v in enumerate(self.vertices):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    yield (v, self.vertices[j])
                row >>= 1
                j += 1

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, x: int) -> int:
        return self.rows[self.position_of(x)].bit_count()

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def __repr__(self):
        ring = descriptor_string(self.ring.descriptor)
        lvl = EXTENDED if self.requested_extended else self.level
        return (
            f"GraphLevel({ring}, kind={self.kind}, i={lvl}, "
            f"|V|={len(self.vertices)}, |E|={self.edge_count})"
        )


# ---------------------------------------------------------------------------
# Per (ring, ideal) context
# ---------------------------------------------------------------------------

class LevelContext:
    """Shared trajectory and comparability caches for one (ring, J) pair.

    Built by a single writer on first use; afterwards every query is
    read-only, so the pair loops can fan out freely.
    """

    def __init__(self, ring: Ring, J: IdealSet):
        self.ring = ring
        self.J = J
        self._traj: dict[int, PowerTrajectory] = {}
        self._cmp: dict[tuple[int, int], bool] = {}
        self._ideal_by_id: dict[int, IdealSet] = {}
        self._vertices: dict[str, tuple[int, ...]] = {}
        self._graphs: dict[tuple[int, str], GraphLevel] = {}
        self._lock = threading.Lock()

    # vertex sets ---------------------------------------------------------

    def vertices(self, kind: str) -> tuple[int, ...]:
        got = self._vertices.get(kind)
        if got is not None:
            return got
        with self._lock:
            got = self._vertices.get(kind)
            if got is not None:
                return got
            ring, J = self.ring, self.J
            out = []
            if kind == COZERO:
                one = ring.one
                for x in range(ring.size):
                    if J.contains(x):
                        continue
                    if not ideal_sum(J, (x,)).contains(one):
                        out.append(x)
            elif kind == ZERO:
                cand = [x for x in range(ring.size) if not J.contains(x)]
                for x in cand:
                    if any(J.contains(ring.mul(x, y)) for y in cand):
                        out.append(x)
            else:
                raise ValueError(f"unknown graph kind {kind!r}")
            got = tuple(out)
            self._vertices[kind] = got
            return got

    # trajectories --------------------------------------------------------

    def trajectory(self, x: int) -> PowerTrajectory:
        got = self._traj.get(x)
        if got is not None:
            return got
        ring, J = self.ring, self.J
        t_val, p_val = ring.power_rho(x)
        horizon = t_val + p_val
        ideals = [principal_plus(x, m, J) for m in range(1, horizon + 1)]
        ids = [I.ideal_id for I in ideals]
        for I in ideals:
            self._ideal_by_id.setdefault(I.ideal_id, I)
        # minimal period of the eventual cycle divides the value period
        cycle = ids[t_val:]
        period = p_val
        for cand in range(1, p_val + 1):
            if p_val % cand == 0 and all(
                cycle[k] == cycle[k % cand] for k in range(len(cycle))
            ):
                period = cand
                break
        pre = t_val
        while pre > 0 and ids[pre - 1] == ids[pre - 1 + period]:
            pre -= 1
        traj = PowerTrajectory(
            element=x,
            ideal_ids=tuple(ids[: pre + period]),
            preperiod=pre,
            period=period,
        )
        self._traj[x] = traj
        return traj

    def ideal_of_power(self, x: int, m: int) -> IdealSet:
        return self._ideal_by_id[self.trajectory(x).id_at(m)]

    # adjacency -----------------------------------------------------------

    def _incomparable(self, a: int, b: int) -> bool:
        if a == b:
            return False
        key = (a, b) if a < b else (b, a)
        got = self._cmp.get(key)
        if got is None:
            got = not self._ideal_by_id[a].comparable(self._ideal_by_id[b])
            self._cmp[key] = got
        return got

    def adjacent(self, x: int, y: int, i: int, kind: str) -> bool:
        if x == y:
            return False
        if kind == COZERO:
            sx = self.trajectory(x).ids_up_to(i)
            sy = self.trajectory(y).ids_up_to(i)
            return any(self._incomparable(a, b) for a in sx for b in sy)
        ring, J = self.ring, self.J
        tx = self.trajectory(x)
        ty = self.trajectory(y)
        nx = min(i, len(tx.ideal_ids))
        ny = min(i, len(ty.ideal_ids))
        jid = self.J.ideal_id
        for n in range(1, nx + 1):
            if tx.id_at(n) == jid:
                continue
            xn = ring.pow(x, n)
            for m in range(1, ny + 1):
                if ty.id_at(m) == jid:
                    continue
                if J.contains(ring.mul(xn, ring.pow(y, m))):
                    return True
        return False

    def stabilization_bound(self) -> int:
        verts = self.vertices(COZERO)
        bound = 1
        for x in verts:
            t = self.trajectory(x)
            bound = max(bound, t.preperiod + t.period)
        return bound


_CONTEXTS: dict[tuple[int, int], LevelContext] = {}
_CONTEXT_LOCK = threading.Lock()


def level_context(ring: Ring, J: IdealSet) -> LevelContext:
    key = (id(ring), J.bits)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        with _CONTEXT_LOCK:
            ctx = _CONTEXTS.get(key)
            if ctx is None:
                ctx = LevelContext(ring, J)
                _CONTEXTS[key] = ctx
    return ctx


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def vertex_set(ring: Ring, J: IdealSet, kind: str = COZERO) -> tuple[int, ...]:
    """Sorted vertex list; empty when J is maximal or not proper."""
    return level_context(ring, J).vertices(kind)


def power_trajectory(ring: Ring, J: IdealSet, x: int) -> PowerTrajectory:
    """Eventually periodic sequence of ideals x^m R + J."""
    return level_context(ring, J).trajectory(x)


def stabilization_bound(ring: Ring, J: IdealSet) -> int:
    """A level at and beyond which every level graph is the same.

    Takes the max of preperiod + period over the vertex trajectories: past
    that exponent no new power ideal (hence no new adjacency witness) exists.
    """
    return level_context(ring, J).stabilization_bound()


def adjacent(ring: Ring, J: IdealSet, x: int, y: int, i: Level, kind: str = COZERO) -> bool:
    """Adjacency of two vertices at a level (or at the stabilized limit)."""
    ctx = level_context(ring, J)
    verts = ctx.vertices(kind)
    if x not in verts:
        raise NotAVertex(f"{ring.label(x)} is not a vertex")
    if y not in verts:
        raise NotAVertex(f"{ring.label(y)} is not a vertex")
    lvl = ctx.stabilization_bound() if i == EXTENDED else int(i)
    if lvl < 1:
        raise ValueError("level must be >= 1 or EXTENDED")
    return ctx.adjacent(x, y, lvl, kind)


def build_level(ring: Ring, J: IdealSet, i: Level, kind: str = COZERO) -> GraphLevel:
    """Materialize the full level graph with a symmetric adjacency matrix."""
    ctx = level_context(ring, J)
    requested_extended = i == EXTENDED
    lvl = ctx.stabilization_bound() if requested_extended else int(i)
    if lvl < 1:
        raise ValueError("level must be >= 1 or EXTENDED")
    concrete = ctx._graphs.get((lvl, kind))
    if concrete is None:
        verts = ctx.vertices(kind)
        # warm the per-vertex ideal caches before the pair loop
        for v in verts:
            ctx.trajectory(v)
        n = len(verts)
        rows = [0] * n
        if kind == COZERO:
            id_sets = [tuple(ctx.trajectory(v).ids_up_to(lvl)) for v in verts]
            incomparable = ctx._incomparable
            for a in range(n):
                sa = id_sets[a]
                for b in range(a + 1, n):
                    if any(incomparable(p, q) for p in sa for q in id_sets[b]):
                        rows[a] |= 1 << b
                        rows[b] |= 1 << a
        else:
            for a in range(n):
                for b in range(a + 1, n):
                    if ctx.adjacent(verts[a], verts[b], lvl, kind):
                        rows[a] |= 1 << b
                        rows[b] |= 1 << a
        concrete = GraphLevel(
            ring=ring,
            ideal=J,
            kind=kind,
            level=lvl,
            requested_extended=False,
            vertices=verts,
            rows=tuple(rows),
        )
        concrete = ctx._graphs.setdefault((lvl, kind), concrete)
    if requested_extended:
        return GraphLevel(
            ring=ring,
            ideal=J,
            kind=kind,
            level=lvl,
            requested_extended=True,
            vertices=concrete.vertices,
            rows=concrete.rows,
        )
    return concrete


def build_extended(ring: Ring, J: IdealSet, kind: str = COZERO) -> GraphLevel:
    return build_level(ring, J, EXTENDED, kind)


def same_edges(g1: GraphLevel, g2: GraphLevel) -> bool:
    return g1.vertices == g2.vertices and g1.rows == g2.rows


def minimal_stabilization_index(ring: Ring, J: IdealSet, kind: str = COZERO) -> int:
    """Smallest level whose graph already equals the stabilized limit."""
    bound = stabilization_bound(ring, J)
    limit = build_level(ring, J, bound, kind)
    sharp = bound
    for i in range(bound - 1, 0, -1):
        if same_edges(build_level(ring, J, i, kind), limit):
            sharp = i
        else:
            break
    return sharp


def zero_ideal_of(ring: Ring) -> IdealSet:
    return zero_ideal(ring)
