"""The finite Weyl group: words, action, Bruhat order, enumeration.

Elements are canonical reduced words (the lexicographically least reduced
word).  Internally every element is keyed by the vector w(rho): rho is
regular, so the key is faithful, its negative coordinates are exactly the
left descents, and the canonical word falls out of a greedy descent of the
key back to rho.  No enumeration is needed for the basic operations; a
cached index table is built only for exhaustive work.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from . import root_data
from .errors import DomainError, ResourceCapError
from .root_data import RootSystem, Weight, check_weight, reflect

DEFAULT_GROUP_CAP = 200_000


@dataclass(frozen=True)
class WeylElement:
    """A Weyl-group element as its canonical reduced word."""

    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def to_json(self) -> list[int]:
        return list(self.word)


IDENTITY = WeylElement(())


def _key_from_word(rs: RootSystem, word: tuple[int, ...]) -> Weight:
    """w(rho) for w given by ``word`` (letters act right to left)."""
    v = rs.rho
    for i in reversed(word):
        v = reflect(rs, v, i)
    return v


def _word_from_key(rs: RootSystem, key: Weight) -> tuple[int, ...]:
    """Canonical (lex-least reduced) word of the element with key w(rho).

    The minimal left descent of w is the smallest i with key[i] < 0;
    peeling it off and recursing yields the lex-least reduced word.
    """
    word = []
    v = key
    while True:
        i = next((k for k in range(rs.rank) if v[k] < 0), None)
        if i is None:
            return tuple(word)
        word.append(i)
        v = reflect(rs, v, i)


def element_from_word(rs: RootSystem, word) -> WeylElement:
    """Canonicalize an arbitrary word in the simple reflections."""
    word = tuple(word)
    for i in word:
        if not 0 <= i < rs.rank:
            raise DomainError(f"simple-reflection index {i} out of range for {rs.spec.name}")
    return WeylElement(_word_from_key(rs, _key_from_word(rs, word)))


def apply(rs: RootSystem, w: WeylElement, x) -> Weight:
    """Linear action of w on a weight, composed along the reduced word."""
    v = check_weight(rs, x)
    for i in reversed(w.word):
        v = reflect(rs, v, i)
    return v


def multiply(rs: RootSystem, u: WeylElement, v: WeylElement) -> WeylElement:
    key = _key_from_word(rs, u.word + v.word)
    return WeylElement(_word_from_key(rs, key))


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    key = _key_from_word(rs, tuple(reversed(w.word)))
    return WeylElement(_word_from_key(rs, key))


def length(w: WeylElement) -> int:
    return w.length


def longest_element(rs: RootSystem) -> WeylElement:
    # w0 is the unique element sending rho to -rho.
    return WeylElement(_word_from_key(rs, root_data.neg(rs.rho)))


def bruhat_leq(rs: RootSystem, u: WeylElement, w: WeylElement) -> bool:
    """Bruhat-Chevalley order via the descent recursion.

    For a left descent s of w: u <= w iff su <= sw when su < u, else
    u <= sw.  Runs on the rho-keys, so no enumeration is required.
    """
    ku = _key_from_word(rs, u.word)
    kw = _key_from_word(rs, w.word)
    lu, lw = u.length, w.length
    while True:
        if lu > lw:
            return False
        if lu == 0 or ku == kw:
            return True
        i = next(k for k in range(rs.rank) if kw[k] < 0)
        kw = reflect(rs, kw, i)
        lw -= 1
        if ku[i] < 0:
            ku = reflect(rs, ku, i)
            lu -= 1


def minimal_orbit_element(rs: RootSystem, x) -> WeylElement:
    """The unique minimal-length w with x = w(antidominant rep of x)."""
    coords = check_weight(rs, x)
    _, word = root_data.chamber_descent(rs, coords, antidominant=True)
    return WeylElement(_word_from_key(rs, _key_from_word(rs, word)))


class GroupTable:
    """Indexed enumeration of W with multiplication and Bruhat tables.

    Index order is (length, canonical word) lexicographic, so index 0 is
    the identity and the order is reproducible across runs.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        seen = {rs.rho: ()}
        frontier = [rs.rho]
        while frontier:
            nxt = []
            for key in frontier:
                for i in range(n):
                    k2 = reflect(rs, key, i)
                    if k2 not in seen:
                        seen[k2] = None
                        nxt.append(k2)
            frontier = nxt
        if len(seen) != rs.weyl_order:
            raise DomainError(
                f"{rs.spec.name}: enumerated {len(seen)} elements, "
                f"expected {rs.weyl_order}"
            )
        decorated = sorted(
            (len(word := _word_from_key(rs, key)), word, key) for key in seen
        )
        self.words: list[tuple[int, ...]] = [w for _, w, _ in decorated]
        self.keys: list[Weight] = [k for _, _, k in decorated]
        self.lengths: list[int] = [l for l, _, _ in decorated]
        self.index: dict[Weight, int] = {k: i for i, (_, _, k) in enumerate(decorated)}
        self.size = len(decorated)

    @cached_property
    def left_mult(self) -> list[list[int]]:
        """left_mult[i][w] = index of s_i * w."""
        rs = self.rs
        return [
            [self.index[reflect(rs, key, i)] for key in self.keys]
            for i in range(rs.rank)
        ]

    @cached_property
    def inverse_index(self) -> list[int]:
        out = []
        for word in self.words:
            key = _key_from_word(self.rs, tuple(reversed(word)))
            out.append(self.index[key])
        return out

    @cached_property
    def bruhat_matrix(self) -> np.ndarray:
        """Boolean matrix B with B[w, u] = (u <= w in Bruhat order).

        Built bottom-up by word length with the same descent recursion as
        ``bruhat_leq``; the two routes are cross-checked in the tests.
        """
        n = self.size
        mat = np.zeros((n, n), dtype=bool)
        mat[0, 0] = True
        all_idx = np.arange(n)
        keysign = np.array(self.keys, dtype=np.int64) < 0  # (n, rank)
        lmult = np.array(self.left_mult, dtype=np.int64)  # (rank, n)
        for w in range(1, n):
            i = self.words[w][0]  # a left descent of w
            sw = self.left_mult[i][w]
            reduced = np.where(keysign[:, i], lmult[i], all_idx)
            mat[w] = mat[sw][reduced]
        return mat

    def element(self, idx: int) -> WeylElement:
        return WeylElement(self.words[idx])


_TABLE_CACHE: dict[RootSystem, GroupTable] = {}
_TABLE_LOCK = threading.Lock()


def group_table(rs: RootSystem, *, cap: int | None = None) -> GroupTable:
    """Cached enumeration table; refuses groups above ``cap`` elements.

    The build is idempotent, so a race on first use at worst builds the
    table twice; the last writer wins and both copies are equivalent.
    """
    limit = DEFAULT_GROUP_CAP if cap is None else cap
    if rs.weyl_order > limit:
        raise ResourceCapError(
            f"|W| = {rs.weyl_order} for {rs.spec.name} exceeds the "
            f"enumeration cap {limit}"
        )
    table = _TABLE_CACHE.get(rs)
    if table is None:
        built = GroupTable(rs)
        with _TABLE_LOCK:
            table = _TABLE_CACHE.setdefault(rs, built)
    return table


def enumerate_group(rs: RootSystem, *, cap: int | None = None) -> Iterator[WeylElement]:
    """Yield every element exactly once, by (length, word) order."""
    table = group_table(rs, cap=cap)
    for word in table.words:
        yield WeylElement(word)
