"""The four partial orders on weights.

* dominance: x <= x' iff x' - x is a non-negative integer combination of
  simple roots.
* excellent: compare dominant orbit representatives by strict dominance;
  within one orbit, compare the minimal-length transporters in Bruhat
  order (van der Kallen's order in the variant that keys the highest
  weight category structure used here).
* antipodal excellent: x <= x' iff -x <= -x' in the excellent order.
* strong linkage: the order generated by downward affine reflections
  s_{beta, np} . x <= x.

Each relation has a scalar decision procedure and a batch routine that
computes the full relation matrix on a list of weights; the batch routines
feed the ideal checks and Hasse-diagram export.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels, root_data, weyl
from .affine_weyl import AffineContext
from .errors import ConfigurationError, DomainError, ResourceCapError
from .root_data import (
    RootSystem,
    Weight,
    add,
    chamber_descent,
    check_weight,
    neg,
    root_coords,
    sub,
)

ORDER_TAGS = ("dominance", "excellent", "antipodal-excellent", "strong-linkage")

DEFAULT_BFS_BUDGET = 1_000_000
DEFAULT_CLOSURE_NODE_CAP = 200_000


@dataclass(frozen=True)
class OrderKind:
    """An order tag, carrying an affine context when the order needs one."""

    tag: str
    ctx: AffineContext | None = None

    def __post_init__(self) -> None:
        if self.tag not in ORDER_TAGS:
            raise ConfigurationError(
                f"unknown order {self.tag!r}; expected one of {', '.join(ORDER_TAGS)}"
            )
        if self.tag == "strong-linkage" and self.ctx is None:
            raise ConfigurationError("strong-linkage requires an AffineContext")


def dominance_leq(rs: RootSystem, x, x2) -> bool:
    """x <= x2 iff x2 - x has non-negative integer simple-root coordinates."""
    diff = sub(check_weight(rs, x2), check_weight(rs, x))
    rc = root_coords(rs, diff)
    return rc is not None and all(c >= 0 for c in rc)


def excellent_leq(rs: RootSystem, x, x2, *, cross_orbit_bruhat: bool = False) -> bool:
    """The excellent order.

    Same W-orbit: compare minimal-length transporters in Bruhat order.
    Different orbits: strict dominance of the dominant representatives.
    ``cross_orbit_bruhat`` flips to the exploratory reading in which the
    Bruhat clause also applies across orbits; no correctness claims are
    attached to that mode.
    """
    x = check_weight(rs, x)
    x2 = check_weight(rs, x2)
    xp, _ = chamber_descent(rs, x)
    yp, _ = chamber_descent(rs, x2)
    if xp == yp:
        return weyl.bruhat_leq(
            rs, weyl.minimal_orbit_element(rs, x), weyl.minimal_orbit_element(rs, x2)
        )
    dom = dominance_leq(rs, xp, yp)
    if cross_orbit_bruhat and not dom:
        return weyl.bruhat_leq(
            rs, weyl.minimal_orbit_element(rs, x), weyl.minimal_orbit_element(rs, x2)
        )
    return dom


def antipodal_excellent_leq(rs: RootSystem, x, x2) -> bool:
    """x <= x2 iff -x <= -x2 in the excellent order."""
    return excellent_leq(rs, neg(check_weight(rs, x)), neg(check_weight(rs, x2)))


def _downward_steps(
    ctx: AffineContext,
    x: Weight,
    rc_floor: tuple[int, ...],
    rc_x: tuple[int, ...],
):
    """All s_{beta, np} . x strictly below x whose root coordinates stay
    componentwise >= rc_floor."""
    rs = ctx.rs
    p = ctx.p
    shifted = add(x, rs.rho)
    for b in range(len(rs.positive_roots)):
        cv = rs.pos_coroot_coords[b]
        rcb = rs.pos_root_coords[b]
        beta = rs.positive_roots[b]
        c = sum(s * v for s, v in zip(shifted, cv))
        tmax = min(
            (rc_x[j] - rc_floor[j]) // rcb[j] for j in range(rs.rank) if rcb[j] > 0
        )
        t = c % p
        if t == 0:
            t = p
        while t <= tmax:
            yield (
                tuple(x[k] - t * beta[k] for k in range(rs.rank)),
                tuple(rc_x[j] - t * rcb[j] for j in range(rs.rank)),
            )
            t += p


def strong_linkage_leq(
    ctx: AffineContext, lam, mu, *, budget: int = DEFAULT_BFS_BUDGET
) -> bool:
    """lam is below mu in the strong linkage order.

    Decided by breadth-first search downward from mu through affine
    reflections, pruned to the dominance interval [lam, mu]; every chain
    stays inside that interval, so the pruning is lossless.
    """
    rs = ctx.rs
    lam = check_weight(rs, lam)
    mu = check_weight(rs, mu)
    if lam == mu:
        return True
    span = root_coords(rs, sub(mu, lam))
    if span is None or any(c < 0 for c in span):
        return False  # strong linkage refines dominance
    floor = tuple(0 for _ in range(rs.rank))  # coordinates relative to lam
    queue = deque([(mu, span)])
    seen = {mu}
    expanded = 0
    while queue:
        x, rc_x = queue.popleft()
        expanded += 1
        if expanded > budget:
            raise ResourceCapError(
                f"strong-linkage search exceeded the node budget {budget}"
            )
        for nu, rc_nu in _downward_steps(ctx, x, floor, rc_x):
            if nu == lam:
                return True
            if nu not in seen:
                seen.add(nu)
                queue.append((nu, rc_nu))
    return False


def leq(kind: OrderKind, rs: RootSystem, x, x2) -> bool:
    """Decide x <= x2 in the order named by ``kind``."""
    if kind.tag == "dominance":
        return dominance_leq(rs, x, x2)
    if kind.tag == "excellent":
        return excellent_leq(rs, x, x2)
    if kind.tag == "antipodal-excellent":
        return antipodal_excellent_leq(rs, x, x2)
    ctx = kind.ctx
    if ctx is None or ctx.rs != rs:
        raise ConfigurationError("strong-linkage context does not match the root system")
    return strong_linkage_leq(ctx, x, x2)


# ---------------------------------------------------------------------------
# Batch machinery


def _unique_rows(arr: np.ndarray):
    uniq, inv = np.unique(arr, axis=0, return_inverse=True)
    return uniq, inv.reshape(-1)


def orbit_transport(rs: RootSystem, points: np.ndarray):
    """Orbit bookkeeping for a batch of weights.

    Returns ``(orbit_inv, dominant_reps, w_idx, table)``: for row k,
    ``dominant_reps[orbit_inv[k]]`` is the dominant representative of its
    orbit and ``w_idx[k]`` indexes (in the group table) the minimal-length
    w with w(antidominant rep) == row k.
    """
    table = weyl.group_table(rs)
    cartan = np.array(rs.cartan, dtype=np.int64)
    reps, comps, _ = _kernels.descend(points, cartan, False)
    uniq_c, inv_c = _unique_rows(comps)
    w_of_uniq = np.empty(len(uniq_c), dtype=np.int64)
    for r, row in enumerate(uniq_c):
        winv = table.index[tuple(int(v) for v in row)]
        w_of_uniq[r] = table.inverse_index[winv]
    w_idx = w_of_uniq[inv_c]
    uniq_r, orbit_inv = _unique_rows(reps)
    dom_reps, _, _ = _kernels.descend(uniq_r, cartan, True)
    return orbit_inv, dom_reps, w_idx, table


def dominance_matrix(rs: RootSystem, points: np.ndarray, block: int = 512) -> np.ndarray:
    """M[i, j] = points[i] <= points[j] in dominance, computed blockwise."""
    pts = np.asarray(points, dtype=np.int64)
    n = len(pts)
    det = abs(rs.cartan_det)
    scaled = pts @ rs.adjugate_matrix.T  # det * root coordinates
    out = np.zeros((n, n), dtype=bool)
    for lo in range(0, n, block):
        hi = min(lo + block, n)
        diff = scaled[None, lo:hi, :] - scaled[:, None, :]  # [i, j-lo, :]
        ok = (diff % det == 0).all(axis=2) & (diff >= 0).all(axis=2)
        out[:, lo:hi] = ok
    return out


def excellent_matrix(
    rs: RootSystem, points: np.ndarray, *, antipodal: bool = False
) -> np.ndarray:
    """Full excellent (or antipodal excellent) relation on ``points``."""
    pts = np.asarray(points, dtype=np.int64)
    work = -pts if antipodal else pts
    orbit_inv, dom_reps, w_idx, table = orbit_transport(rs, work)
    bruhat = table.bruhat_matrix  # bruhat[w, u] = u <= w
    same = orbit_inv[:, None] == orbit_inv[None, :]
    bruhat_part = bruhat[w_idx[None, :], w_idx[:, None]]  # [i, j] = w_i <= w_j
    dom_orbits = dominance_matrix(rs, dom_reps)
    dom_part = dom_orbits[orbit_inv[:, None], orbit_inv[None, :]]
    return (same & bruhat_part) | (~same & dom_part)


def strong_linkage_matrix(
    ctx: AffineContext,
    points,
    *,
    node_cap: int = DEFAULT_CLOSURE_NODE_CAP,
) -> np.ndarray:
    """Full strong-linkage relation on ``points`` by one global closure.

    All points must lie in a single coset of the root lattice (affine
    reflections never leave a coset).  Chains between two points stay in
    their dominance interval, so reachability inside the bounding box of
    the points' root coordinates decides the relation exactly.
    """
    rs = ctx.rs
    pts = [check_weight(rs, x) for x in points]
    n = len(pts)
    if n == 0:
        return np.zeros((0, 0), dtype=bool)
    base = pts[0]
    rel = []
    for x in pts:
        rc = root_coords(rs, sub(x, base))
        if rc is None:
            raise DomainError(
                "strong-linkage batch requires all points in one root-lattice coset"
            )
        rel.append(rc)
    rel_arr = np.array(rel, dtype=np.int64)
    cmin = rel_arr.min(axis=0)
    cmax = rel_arr.max(axis=0)
    dims = cmax - cmin + 1
    volume = int(np.prod(dims))
    if volume > node_cap:
        raise ResourceCapError(
            f"strong-linkage closure box has {volume} nodes, above the cap {node_cap}"
        )

    # Node id: mixed radix over rc - cmin, first coordinate fastest.
    radix = np.cumprod(np.concatenate(([1], dims[:-1])))

    def node_id(rc_vec) -> int:
        return int(sum((rc_vec[j] - cmin[j]) * radix[j] for j in range(rs.rank)))

    grid = (
        np.stack(np.unravel_index(np.arange(volume), dims, order="F"), axis=-1)
        + cmin
    )  # grid[node_id(rc)] == rc
    cols = np.array(rs.cartan, dtype=np.int64).T  # row j = alpha_j in omega coords
    omegas = np.asarray(base, dtype=np.int64) + grid @ cols
    heights = grid.sum(axis=1)
    floor = tuple(int(c) for c in cmin)
    point_bit: dict[int, int] = {}
    for i, rc in enumerate(rel):
        v = node_id(rc)
        point_bit[v] = point_bit.get(v, 0) | (1 << i)

    # Downward edges strictly decrease height, so one pass in increasing
    # height order accumulates full reachability.
    reach = [0] * volume
    for v in np.argsort(heights, kind="stable"):
        v = int(v)
        x = tuple(int(c) for c in omegas[v])
        rc_x = tuple(int(c) for c in grid[v])
        bits = point_bit.get(v, 0)
        for _, rc_nu in _downward_steps(ctx, x, floor, rc_x):
            bits |= reach[node_id(rc_nu)]
        reach[v] = bits

    out = np.zeros((n, n), dtype=bool)
    for j, rc in enumerate(rel):
        bits = reach[node_id(rc)]
        for i in range(n):
            if bits >> i & 1:
                out[i, j] = True
    return out


def relation_matrix(kind: OrderKind, rs: RootSystem, points) -> np.ndarray:
    """Full <= relation of the chosen order on a list of weights."""
    pts = np.array([check_weight(rs, x) for x in points], dtype=np.int64).reshape(
        -1, rs.rank
    )
    if kind.tag == "dominance":
        return dominance_matrix(rs, pts)
    if kind.tag == "excellent":
        return excellent_matrix(rs, pts)
    if kind.tag == "antipodal-excellent":
        return excellent_matrix(rs, pts, antipodal=True)
    ctx = kind.ctx
    if ctx is None or ctx.rs != rs:
        raise ConfigurationError("strong-linkage context does not match the root system")
    return strong_linkage_matrix(ctx, [tuple(int(c) for c in row) for row in pts])


def cover_edges(relation: np.ndarray) -> list[tuple[int, int]]:
    """Transitive reduction of a finite partial order given as a matrix.

    Returns the cover pairs (i, j) with i < j in the order, i.e. the Hasse
    diagram edge set, sorted for deterministic output.
    """
    strict = relation & ~np.eye(len(relation), dtype=bool)
    via = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
    covers = strict & ~via
    return sorted((int(i), int(j)) for i, j in zip(*np.nonzero(covers)))
