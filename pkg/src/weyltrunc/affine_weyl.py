"""The affine Weyl group at level p: dot action and principal orbit.

The group is the semidirect product of the finite Weyl group W with
translations by p times the root lattice; it acts through the dot action
w . y = w(y + rho) - rho.  Affine elements are kept factored as a pair
(w, z) with z in the root lattice, which is all the combinatorics here
needs; no alcove geometry is implemented.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from . import root_data, weyl
from .errors import ConfigurationError, DomainError, InvariantViolationError, NonPrimeWarning
from .root_data import RootSystem, Weight, add, check_weight, is_dominant, sub
from .weyl import WeylElement


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class AffineContext:
    """A root system together with the translation level p > h.

    p is normally a prime; a composite p is accepted with a warning and
    recorded in ``p_is_prime``.
    """

    rs: RootSystem
    p: int
    p_is_prime: bool = None  # type: ignore[assignment]  # filled in post-init

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p <= self.rs.coxeter_number:
            raise ConfigurationError(
                f"p must be an integer greater than the Coxeter number "
                f"h = {self.rs.coxeter_number} for {self.rs.spec.name}, got {self.p}"
            )
        prime = _is_prime(self.p)
        if not prime:
            warnings.warn(
                f"p = {self.p} is not prime; proceeding anyway",
                NonPrimeWarning,
                stacklevel=2,
            )
        object.__setattr__(self, "p_is_prime", prime)

    @property
    def coxeter_number(self) -> int:
        return self.rs.coxeter_number


def dot(ctx: AffineContext, w: WeylElement, y, *, translation: Weight | None = None) -> Weight:
    """w . y = w(y + rho) - rho, plus p*z for an affine element (w, z)."""
    rs = ctx.rs
    y = check_weight(rs, y)
    out = sub(weyl.apply(rs, w, add(y, rs.rho)), rs.rho)
    if translation is not None:
        z = check_weight(rs, translation)
        if not root_data.in_root_lattice(rs, z):
            raise DomainError("affine translation part must lie in the root lattice")
        out = tuple(o + ctx.p * c for o, c in zip(out, z))
    return out


def in_p_root_lattice(ctx: AffineContext, x) -> bool:
    """True iff x = p*z for some root-lattice z."""
    coords = check_weight(ctx.rs, x)
    rc = root_data.root_coords(ctx.rs, coords)
    return rc is not None and all(c % ctx.p == 0 for c in rc)


@lru_cache(maxsize=None)
def _orbit_residues(ctx: AffineContext) -> frozenset[tuple[int, ...]]:
    """Residues of w(rho) modulo p*(root lattice), via the adjugate map."""
    rs = ctx.rs
    modulus = abs(rs.cartan_det) * ctx.p
    table = weyl.group_table(rs)
    out = set()
    for key in table.keys:
        row = tuple(
            sum(r * c for r, c in zip(adj_row, key)) % modulus
            for adj_row in rs.cartan_adjugate
        )
        out.add(row)
    return frozenset(out)


def in_principal_orbit(ctx: AffineContext, y) -> bool:
    """Membership in the dot orbit of 0.

    y lies in the orbit iff y + rho is congruent to some w(rho) modulo
    p times the root lattice; the congruence is tested exactly through
    the adjugate of the Cartan matrix.
    """
    rs = ctx.rs
    coords = check_weight(rs, y)
    shifted = add(coords, rs.rho)
    modulus = abs(rs.cartan_det) * ctx.p
    row = tuple(
        sum(r * c for r, c in zip(adj_row, shifted)) % modulus
        for adj_row in rs.cartan_adjugate
    )
    return row in _orbit_residues(ctx)


def is_regular(ctx: AffineContext, x) -> bool:
    """True iff x pairs nonzero with every positive coroot."""
    rs = ctx.rs
    coords = check_weight(rs, x)
    return all(
        sum(c * v for c, v in zip(coords, cv)) != 0
        for cv in rs.pos_coroot_coords
    )


def dominant_dot_rep(ctx: AffineContext, nu) -> tuple[WeylElement, Weight]:
    """The unique w in W with w . nu dominant, for nu in p*(root lattice).

    Scans all of W, which doubles as a uniqueness check: for p > h there
    must be exactly one such w, and for it both w(nu) and w . nu are
    dominant while nu + rho is regular.  Any failure of those facts raises
    InvariantViolationError rather than returning a best guess.
    """
    rs = ctx.rs
    nu = check_weight(rs, nu)
    if not in_p_root_lattice(ctx, nu):
        raise DomainError(
            f"dominant_dot_rep requires nu in p*(root lattice); got {nu} with p = {ctx.p}"
        )
    hits: list[tuple[WeylElement, Weight]] = []
    for w in weyl.enumerate_group(rs):
        image = dot(ctx, w, nu)
        if is_dominant(image):
            hits.append((w, image))
    if len(hits) != 1:
        raise InvariantViolationError(
            f"expected exactly one w with w . nu dominant for nu = {nu}, "
            f"found {len(hits)}"
        )
    w, image = hits[0]
    if not is_dominant(weyl.apply(rs, w, nu)):
        raise InvariantViolationError(
            f"w(nu) is not dominant for the dot-dominant transporter; nu = {nu}"
        )
    if not is_regular(ctx, add(nu, rs.rho)):
        raise InvariantViolationError(f"nu + rho is not regular for nu = {nu}")
    return w, image
