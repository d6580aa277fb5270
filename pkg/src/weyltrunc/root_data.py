"""Exact root-system data for the finite irreducible types.

Every weight is stored in fundamental-weight coordinates: ``coords[i]`` is
the integer pairing of the weight with the i-th simple coroot, in Bourbaki
numbering.  In this basis dominance is a sign check, the simple root
``alpha_j`` is the j-th column of the Cartan matrix, and pairing against an
arbitrary positive coroot is a dot product with that coroot's coordinates
in the simple-coroot basis.  All arithmetic is exact (Python integers).
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import (
    ConfigurationError,
    DomainError,
    InvariantViolationError,
    LargeRankWarning,
    OverflowGuardError,
)

# A weight in fundamental-weight coordinates.
Weight = tuple[int, ...]

DEFAULT_RANK_CAP = 4
HARD_RANK_CAP = 6
RANK_CAP_ENV = "WEYLTRUNC_CAP"

# Magnitude guard for checked arithmetic.  Orbit descents multiply a
# coordinate by at most a Cartan entry per step and stay inside the orbit,
# so anything below this bound is safe in 64-bit kernels.
COORD_LIMIT = 1 << 40

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class RootSystemSpec:
    """A finite irreducible type: a letter A..G and a rank."""

    type_letter: str
    rank: int

    def __post_init__(self) -> None:
        if self.type_letter not in _RANK_RANGE:
            raise ConfigurationError(
                f"unknown type {self.type_letter!r}: expected one of A,B,C,D,E,F,G"
            )
        lo, hi = _RANK_RANGE[self.type_letter]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise ConfigurationError(
                f"invalid type/rank pair ({self.type_letter}, {self.rank}): "
                f"type {self.type_letter} requires rank {bound}"
            )

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"


def _weyl_order(spec: RootSystemSpec) -> int:
    n = spec.rank
    if spec.type_letter == "A":
        return math.factorial(n + 1)
    if spec.type_letter in ("B", "C"):
        return (1 << n) * math.factorial(n)
    if spec.type_letter == "D":
        return (1 << (n - 1)) * math.factorial(n)
    if spec.type_letter == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if spec.type_letter == "F":
        return 1152
    return 12  # G2


def _cartan_matrix(spec: RootSystemSpec) -> tuple[tuple[int, ...], ...]:
    """Standard Cartan matrix, entry (i, j) = <alpha_j, alpha_i^vee>."""
    n = spec.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, ij: int = -1, ji: int = -1) -> None:
        a[i][j] = ij
        a[j][i] = ji

    t = spec.type_letter
    if t in ("A", "B", "C"):
        for i in range(n - 2):
            bond(i, i + 1)
        if t == "A":
            if n >= 2:
                bond(n - 2, n - 1)
        elif t == "B":
            bond(n - 2, n - 1, -1, -2)  # alpha_n is the short root
        else:
            bond(n - 2, n - 1, -2, -1)  # alpha_n is the long root
    elif t == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif t == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]:
            bond(i, j)
        bond(1, 3)
    elif t == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(2, 3)
    else:  # G2, alpha_1 short
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def _det(m: list[list[int]]) -> int:
    # Cofactor expansion; ranks are tiny.
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def _adjugate(m: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(m)
    if n == 1:
        return ((1,),)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            adj[j][i] = (-1) ** (i + j) * _det(minor)
    return tuple(tuple(row) for row in adj)


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Relatively prime positive d_i with d_i * c[i][j] == d_j * c[j][i]."""
    n = len(cartan)
    num = [0] * n
    den = [0] * n
    num[0], den[0] = 1, 1
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and num[j] == 0:
                # d_j / d_i = c[i][j] / c[j][i]
                nj = num[i] * cartan[i][j]
                dj = den[i] * cartan[j][i]
                if nj * dj < 0:
                    nj, dj = -nj, -dj
                g = math.gcd(abs(nj), abs(dj))
                num[j], den[j] = nj // g, dj // g
                stack.append(j)
    scale = math.lcm(*den)
    d = [num[i] * (scale // den[i]) for i in range(n)]
    g = math.gcd(*d)
    return tuple(x // g for x in d)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one finite irreducible type.

    ``positive_roots`` holds fundamental-weight coordinates; the parallel
    tuples ``pos_root_coords`` / ``pos_coroot_coords`` hold the same roots
    in the simple-root basis and their coroots in the simple-coroot basis.
    """

    spec: RootSystemSpec
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    alpha0: Weight
    coxeter_number: int
    weyl_order: int
    pos_root_coords: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    pos_coroot_coords: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    alpha0_index: int = field(repr=False, compare=False)
    cartan_det: int = field(repr=False, compare=False)
    cartan_adjugate: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @cached_property
    def simple_root_columns(self) -> tuple[Weight, ...]:
        """alpha_j in fundamental-weight coordinates, for each j."""
        n = self.rank
        return tuple(
            tuple(self.cartan[i][j] for i in range(n)) for j in range(n)
        )

    @cached_property
    def coroot_matrix(self) -> np.ndarray:
        """(num positive roots, rank) int64 coroot coordinates."""
        return np.array(self.pos_coroot_coords, dtype=np.int64)

    @cached_property
    def adjugate_matrix(self) -> np.ndarray:
        return np.array(self.cartan_adjugate, dtype=np.int64)

    @cached_property
    def cartan_columns_matrix(self) -> np.ndarray:
        """(rank, rank) int64; row i is alpha_i in fundamental-weight coords."""
        return np.array(self.simple_root_columns, dtype=np.int64)

    @property
    def alpha0_coroot(self) -> tuple[int, ...]:
        return self.pos_coroot_coords[self.alpha0_index]


def _resolve_rank_cap(rank_cap: int | None) -> int:
    if rank_cap is None:
        env = os.environ.get(RANK_CAP_ENV)
        if env is not None:
            try:
                rank_cap = int(env)
            except ValueError as exc:
                raise ConfigurationError(
                    f"{RANK_CAP_ENV} must be an integer, got {env!r}"
                ) from exc
        else:
            rank_cap = DEFAULT_RANK_CAP
    if rank_cap < 1 or rank_cap > HARD_RANK_CAP:
        raise ConfigurationError(
            f"rank cap must lie in 1..{HARD_RANK_CAP}, got {rank_cap}"
        )
    return rank_cap


def _generate_roots(
    cartan: tuple[tuple[int, ...], ...],
) -> list[tuple[Weight, tuple[int, ...], tuple[int, ...]]]:
    """BFS closure of the simple roots under all simple reflections.

    Returns (omega coords, root coords, coroot coords) triples for the full
    root set.  Valid because every root is W-conjugate to a simple root.
    """
    n = len(cartan)
    cols = [tuple(cartan[i][j] for i in range(n)) for j in range(n)]
    seen: dict[Weight, tuple[Weight, tuple[int, ...], tuple[int, ...]]] = {}
    frontier = []
    for j in range(n):
        e = tuple(1 if k == j else 0 for k in range(n))
        entry = (cols[j], e, e)
        seen[cols[j]] = entry
        frontier.append(entry)
    while frontier:
        nxt = []
        for v, c, cv in frontier:
            for i in range(n):
                vi = v[i]
                v2 = tuple(v[k] - vi * cols[i][k] for k in range(n))
                if v2 in seen:
                    continue
                c2 = tuple(c[k] - vi if k == i else c[k] for k in range(n))
                # <alpha_i, beta^vee> drives the coroot-side reflection
                pr = sum(cartan[j][i] * cv[j] for j in range(n))
                cv2 = tuple(cv[k] - pr if k == i else cv[k] for k in range(n))
                entry = (v2, c2, cv2)
                seen[v2] = entry
                nxt.append(entry)
        frontier = nxt
    return list(seen.values())


def build_root_system(
    spec: RootSystemSpec | None = None,
    *,
    type_letter: str | None = None,
    rank: int | None = None,
    rank_cap: int | None = None,
) -> RootSystem:
    """Construct the full immutable root-system record for ``spec``.

    The rank cap defaults to 4 and may be raised to at most 6 (explicitly or
    via the WEYLTRUNC_CAP environment variable); ranks above 4 warn because
    exhaustive Weyl-group work grows quickly.
    """
    if spec is None:
        if type_letter is None or rank is None:
            raise ConfigurationError("either spec or type_letter+rank is required")
        spec = RootSystemSpec(type_letter, rank)
    cap = _resolve_rank_cap(rank_cap)
    if spec.rank > cap:
        raise ConfigurationError(
            f"rank {spec.rank} exceeds the enumeration cap {cap} "
            f"(raise it explicitly, at most {HARD_RANK_CAP})"
        )
    if spec.rank > DEFAULT_RANK_CAP:
        warnings.warn(
            f"{spec.name}: exhaustive Weyl-group enumeration at rank "
            f"{spec.rank} is expensive (|W| = {_weyl_order(spec)})",
            LargeRankWarning,
            stacklevel=2,
        )

    n = spec.rank
    cartan = _cartan_matrix(spec)
    roots = _generate_roots(cartan)
    positive = [r for r in roots if all(c >= 0 for c in r[1])]
    if 2 * len(positive) != len(roots):
        raise InvariantViolationError(f"{spec.name}: root set is not symmetric")

    # Deterministic order: by height, then root coordinates.
    positive.sort(key=lambda r: (sum(r[1]), r[1]))

    d = _symmetrizer(cartan)

    def half_length(entry) -> tuple[int, int]:
        _, c, cv = entry
        for j in range(n):
            if c[j]:
                return d[j] * c[j], cv[j]  # ratio num/den
        raise InvariantViolationError("zero root generated")

    def is_short(entry) -> bool:
        num, den = half_length(entry)
        return num == den * min(d)

    dominant_short = [
        i
        for i, r in enumerate(positive)
        if is_short(r) and all(x >= 0 for x in r[0])
    ]
    if len(dominant_short) != 1:
        raise InvariantViolationError(
            f"{spec.name}: expected a unique dominant short root, "
            f"found {len(dominant_short)}"
        )
    a0_index = dominant_short[0]

    h, rem = divmod(len(roots), n)
    if rem:
        raise InvariantViolationError(f"{spec.name}: |R| not divisible by rank")

    rho = tuple(1 for _ in range(n))
    rs = RootSystem(
        spec=spec,
        cartan=cartan,
        positive_roots=tuple(r[0] for r in positive),
        rho=rho,
        alpha0=positive[a0_index][0],
        coxeter_number=h,
        weyl_order=_weyl_order(spec),
        pos_root_coords=tuple(r[1] for r in positive),
        pos_coroot_coords=tuple(r[2] for r in positive),
        alpha0_index=a0_index,
        cartan_det=_det([list(row) for row in cartan]),
        cartan_adjugate=_adjugate(cartan),
    )
    # Construction-time self checks; failure means a broken table.
    if 2 * len(rs.positive_roots) != h * n:
        raise InvariantViolationError(f"{spec.name}: |R+| != h * rank / 2")
    if sum(rs.alpha0_coroot) != h - 1:
        raise InvariantViolationError(f"{spec.name}: <rho, alpha0^vee> != h - 1")
    return rs


def check_weight(rs: RootSystem, x) -> Weight:
    """Validate and normalize a weight to a tuple of bounded Python ints."""
    coords = tuple(x)
    if len(coords) != rs.rank:
        raise DomainError(
            f"weight has {len(coords)} coordinates, expected {rs.rank}"
        )
    out = []
    for c in coords:
        if not isinstance(c, (int, np.integer)) or isinstance(c, bool):
            raise DomainError(f"weight coordinates must be integers, got {c!r}")
        c = int(c)
        if abs(c) > COORD_LIMIT:
            raise OverflowGuardError(
                f"coordinate {c} exceeds the checked-arithmetic bound {COORD_LIMIT}"
            )
        out.append(c)
    return tuple(out)


def pairing(rs: RootSystem, x, alpha: int) -> int:
    """Exact pairing <x, alpha^vee> with the alpha-th positive coroot."""
    coords = check_weight(rs, x)
    if not 0 <= alpha < len(rs.positive_roots):
        raise DomainError(
            f"positive-root index {alpha} out of range 0..{len(rs.positive_roots) - 1}"
        )
    cv = rs.pos_coroot_coords[alpha]
    return sum(c * v for c, v in zip(coords, cv))


def alpha0_pairing(rs: RootSystem, x) -> int:
    """<x, alpha0^vee> against the maximal short root's coroot."""
    coords = check_weight(rs, x)
    return sum(c * v for c, v in zip(coords, rs.alpha0_coroot))


def root_coords(rs: RootSystem, x) -> tuple[int, ...] | None:
    """Coordinates of x in the simple-root basis, or None if x is not in
    the root lattice."""
    coords = check_weight(rs, x)
    det = rs.cartan_det
    out = []
    for row in rs.cartan_adjugate:
        s = sum(r * c for r, c in zip(row, coords))
        q, rem = divmod(s, det)
        if rem:
            return None
        out.append(q)
    return tuple(out)


def in_root_lattice(rs: RootSystem, x) -> bool:
    """True iff x lies in the integer span of the simple roots."""
    return root_coords(rs, x) is not None


def reflect(rs: RootSystem, x: Weight, i: int) -> Weight:
    """Simple reflection s_i(x) = x - <x, alpha_i^vee> alpha_i."""
    col = rs.simple_root_columns[i]
    xi = x[i]
    return tuple(x[k] - xi * col[k] for k in range(rs.rank))


def chamber_descent(
    rs: RootSystem, x: Weight, *, antidominant: bool = False
) -> tuple[Weight, tuple[int, ...]]:
    """Greedy descent of x into the (anti)dominant chamber.

    Returns ``(rep, word)`` where ``rep`` is the unique (anti)dominant
    orbit representative and ``word`` (read left to right as a product of
    simple reflections) is the minimal-length w with ``w(rep) == x``.
    Ties break at the smallest simple index, so the word is deterministic.
    """
    word: list[int] = []
    v = x
    while True:
        i = next(
            (
                k
                for k in range(rs.rank)
                if (v[k] > 0 if antidominant else v[k] < 0)
            ),
            None,
        )
        if i is None:
            return v, tuple(word)
        v = reflect(rs, v, i)
        word.append(i)


def dominant_rep(rs: RootSystem, x, *, antidominant: bool = False):
    """The unique dominant (or antidominant) member of the W-orbit of x.

    Returns ``(rep, w)`` with ``apply(rs, w, rep) == x`` and w of minimal
    length among all transporters.
    """
    from .weyl import element_from_word  # runtime import avoids a cycle

    coords = check_weight(rs, x)
    rep, word = chamber_descent(rs, coords, antidominant=antidominant)
    return rep, element_from_word(rs, word)


def add(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Weight) -> Weight:
    return tuple(-a for a in x)


def is_dominant(x: Weight) -> bool:
    return all(c >= 0 for c in x)
