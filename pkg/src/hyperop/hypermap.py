"""
Oriented and unoriented hypermaps as transitive permutation representations.

An oriented hypermap (``OMap``) is a pair of permutations ``rho0``, ``rho2``
of the darts generating a transitive group; ``rho1`` is derived from
``rho0 rho1 rho2 = 1``.  An unoriented hypermap (``UMap``) is a triple of
involutions ``r0``, ``r1``, ``r2`` of the flags generating a transitive group.
Permutations compose left to right (see ``hyperop.perm``).

An operation given by an automorphism ``alpha`` sends the representation
``theta`` to ``alpha^-1 . theta``: the new image of a generator ``g`` is
``theta(alpha^-1(g))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from . import perm as P
from .freegroup import (
    RHO0,
    RHO2,
    DEndo,
    Endo,
    inverse_endo_from_opword,
    inverse_extend_named,
)
from .genwords import GenWord


@dataclass(frozen=True)
class OMap:
    rho0: tuple
    rho2: tuple

    def __post_init__(self):
        n = len(self.rho0)
        if n == 0 or len(self.rho2) != n:
            raise ValueError("rho0 and rho2 must be permutations of the same positive degree")
        if not (P.is_perm(self.rho0) and P.is_perm(self.rho2)):
            raise ValueError("rho0 and rho2 must be permutations")
        if not P.is_transitive(n, (self.rho0, self.rho2)):
            raise ValueError("<rho0, rho2> is not transitive")

    @property
    def n(self) -> int:
        return len(self.rho0)

    @property
    def rho1(self) -> tuple:
        return derive_rho1(self)


@dataclass(frozen=True)
class UMap:
    r0: tuple
    r1: tuple
    r2: tuple

    def __post_init__(self):
        m = len(self.r0)
        if m == 0 or not len(self.r1) == len(self.r2) == m:
            raise ValueError("r0, r1, r2 must be permutations of the same positive degree")
        for r in self.gens:
            if not P.is_perm(r) or not P.is_identity(P.mul(r, r)):
                raise ValueError("each r_i must be an involution")
        if not P.is_transitive(m, self.gens):
            raise ValueError("<r0, r1, r2> is not transitive")

    @property
    def m(self) -> int:
        return len(self.r0)

    @property
    def gens(self) -> tuple:
        return (self.r0, self.r1, self.r2)


@dataclass(frozen=True)
class MapInfo:
    type: tuple
    counts: tuple  # hypervertices, hyperedges, hyperfaces
    euler: int
    genus: int
    orientable: bool = True

    def __str__(self) -> str:
        t = ",".join(map(str, self.type))
        v, e, f = self.counts
        return (f"type=({t}) vertices={v} edges={e} faces={f} "
                f"euler={self.euler} genus={self.genus} orientable={str(self.orientable).lower()}")


def derive_rho1(M: OMap) -> tuple:
    return P.mul(P.inverse(M.rho0), P.inverse(M.rho2))


def info(M: OMap) -> MapInfo:
    rs = (M.rho0, derive_rho1(M), M.rho2)
    counts = tuple(P.num_cycles(r) for r in rs)
    euler = sum(counts) - M.n
    return MapInfo(tuple(P.order(r) for r in rs), counts, euler, (2 - euler) // 2)


def eval_fword(w: Sequence[int], g2: tuple, g0: tuple) -> tuple:
    """Image of a free-group word under rho2 -> g2, rho0 -> g0."""
    n = len(g2)
    imgs = {RHO2: g2, -RHO2: P.inverse(g2), RHO0: g0, -RHO0: P.inverse(g0)}
    r = P.identity(n)
    for x in w:
        r = P.mul(r, imgs[x])
    return r


def apply_inverse_endo(M: OMap, inv: Endo) -> OMap:
    """Replace theta by theta . inv, where ``inv`` is alpha^-1."""
    return OMap(rho0=eval_fword(inv.img0, M.rho2, M.rho0),
                rho2=eval_fword(inv.img2, M.rho2, M.rho0))


def apply_operation(M: OMap, w: GenWord | Sequence | str) -> OMap:
    """The image of ``M`` under the operation named by a GL-context word."""
    if isinstance(w, GenWord) and w.projective:
        raise ValueError("oriented hypermaps take GL-context (uppercase) words")
    return apply_inverse_endo(M, inverse_endo_from_opword(w))


def _bfs_relabel(n: int, gens: Sequence[tuple], base: int) -> list[int]:
    label = [-1] * n
    label[base] = 0
    order = [base]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for g in gens:
            y = g[x]
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
    return label


def _relabeled(gens: Sequence[tuple], label: list[int]) -> tuple:
    out = []
    for g in gens:
        img = [0] * len(g)
        for x, y in enumerate(g):
            img[label[x]] = label[y]
        out.append(tuple(img))
    return tuple(out)


def _gens_isomorphism(gens1: Sequence[tuple], gens2: Sequence[tuple]) -> list[int] | None:
    n = len(gens1[0])
    if n != len(gens2[0]):
        return None
    for b in range(n):
        phi = [-1] * n
        phi[0] = b
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            for g1, g2 in zip(gens1, gens2):
                y, z = g1[x], g2[phi[x]]
                if phi[y] < 0:
                    phi[y] = z
                    stack.append(y)
                elif phi[y] != z:
                    ok = False
                    break
        if ok and sorted(phi) == list(range(n)):
            return phi
    return None


def isomorphism(M1: OMap, M2: OMap) -> list[int] | None:
    """A dart bijection ``phi`` (0-based) with ``phi(x rho) = phi(x) rho'``, or None."""
    return _gens_isomorphism((M1.rho0, M1.rho2), (M2.rho0, M2.rho2))


def are_isomorphic(M1: OMap, M2: OMap) -> bool:
    return isomorphism(M1, M2) is not None


def canonical_key(M: OMap, regular: bool = False) -> tuple:
    """Relabeling-invariant key: least breadth-first relabeled image arrays.

    For a regular map every base dart gives the same relabeling, so
    ``regular=True`` uses base dart 0 only.
    """
    gens = (M.rho0, M.rho2)
    bases = [0] if regular else range(M.n)
    return min(_relabeled(gens, _bfs_relabel(M.n, gens, b)) for b in bases)


def relabel(M: OMap, s: Sequence[int]) -> OMap:
    """Transport ``M`` along the dart bijection ``s``."""
    s = tuple(s)
    return OMap(P.conjugate(M.rho0, s), P.conjugate(M.rho2, s))


def is_reflexible(M: OMap) -> bool:
    return are_isomorphic(M, apply_operation(M, [("-I", 1)]))


def is_regular(M: OMap) -> bool:
    """Whether the automorphism group acts transitively on darts."""
    gens = (M.rho0, M.rho2)
    ref = _relabeled(gens, _bfs_relabel(M.n, gens, 0))
    return all(_relabeled(gens, _bfs_relabel(M.n, gens, b)) == ref for b in range(M.n))


# --- unoriented hypermaps ---------------------------------------------------

def underlying_flags(M: OMap) -> UMap:
    """Flags (d,+) -> d and (d,-) -> n + d."""
    n = M.n
    i0, i2 = P.inverse(M.rho0), P.inverse(M.rho2)
    r0 = [0] * (2 * n)
    r1 = [0] * (2 * n)
    r2 = [0] * (2 * n)
    for d in range(n):
        r1[d], r1[n + d] = n + d, d
        r0[d], r0[n + d] = n + M.rho2[d], i2[d]
        r2[d], r2[n + d] = n + i0[d], M.rho0[d]
    return UMap(tuple(r0), tuple(r1), tuple(r2))


def eval_dword(w: Sequence[int], U: UMap) -> tuple:
    r = P.identity(U.m)
    for x in w:
        r = P.mul(r, U.gens[x])
    return r


def apply_inverse_dendo(U: UMap, inv: DEndo) -> UMap:
    return UMap(*(eval_dword(inv.image(i), U) for i in range(3)))


def apply_operation_u(U: UMap, w: GenWord | Sequence | str) -> UMap:
    """The image of ``U`` under the operation named by a PGL-context word."""
    if isinstance(w, GenWord) and not w.projective:
        raise ValueError("unoriented hypermaps take PGL-context (lowercase) words")
    return apply_inverse_dendo(U, inverse_extend_named(w))


def _even_gens(U: UMap) -> tuple:
    r0, r1, r2 = U.gens
    return (P.mul(r1, r2), P.mul(r2, r0), P.mul(r0, r1))


def umap_info(U: UMap) -> MapInfo:
    """Counts are orbits of <r1,r2>, <r2,r0>, <r0,r1>.

    The Euler characteristic is half that of the orientation double cover,
    whose darts are the flags and whose rotations are the even products.
    """
    r0, r1, r2 = U.gens
    pairs = ((r1, r2), (r2, r0), (r0, r1))
    counts = tuple(len(P.orbits(U.m, pr)) for pr in pairs)
    even = _even_gens(U)
    euler2 = sum(P.num_cycles(r) for r in even) - U.m
    euler = euler2 // 2
    orientable = len(P.orbits(U.m, even)) == 2
    genus = (2 - euler) // 2 if orientable else 2 - euler
    return MapInfo(tuple(P.order(r) for r in even), counts, euler, genus, orientable)


def umap_isomorphism(U1: UMap, U2: UMap) -> list[int] | None:
    return _gens_isomorphism(U1.gens, U2.gens)


def umap_iso(U1: UMap, U2: UMap) -> bool:
    return umap_isomorphism(U1, U2) is not None


def associates(U: UMap) -> list[UMap]:
    """Images under the six automorphisms permuting r0, r1, r2."""
    return [UMap(*(U.gens[i] for i in p)) for p in permutations(range(3))]


def orientation_lift(U: UMap) -> OMap | None:
    """The oriented hypermap whose flag cover is ``U``; None if non-orientable."""
    r0, r1, r2 = U.gens
    rho0, rho2 = P.mul(r1, r2), P.mul(r0, r1)
    orbs = P.orbits(U.m, (rho0, rho2, P.mul(r2, r0)))
    if len(orbs) != 2:
        return None
    darts = sorted(orbs[0] if 0 in orbs[0] else orbs[1])
    idx = {f: i for i, f in enumerate(darts)}
    return OMap(tuple(idx[rho0[f]] for f in darts), tuple(idx[rho2[f]] for f in darts))


# --- file formats -------------------------------------------------------------

def to_json(M: OMap | UMap) -> dict:
    if isinstance(M, OMap):
        return {"kind": "oriented", "darts": M.n,
                "rho0": P.to_images(M.rho0), "rho2": P.to_images(M.rho2)}
    return {"kind": "unoriented", "flags": M.m,
            "r0": P.to_images(M.r0), "r1": P.to_images(M.r1), "r2": P.to_images(M.r2)}


def from_json(data: dict | str) -> OMap | UMap:
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind == "oriented":
        M = OMap(P.from_images(data["rho0"]), P.from_images(data["rho2"]))
        if data.get("darts", M.n) != M.n:
            raise ValueError("dart count does not match the permutations")
        return M
    if kind == "unoriented":
        U = UMap(*(P.from_images(data[k]) for k in ("r0", "r1", "r2")))
        if data.get("flags", U.m) != U.m:
            raise ValueError("flag count does not match the permutations")
        return U
    raise ValueError(f"unknown hypermap kind {kind!r}")


def from_cycles(rho0: str, rho2: str, n: int | None = None) -> OMap:
    if n is None:
        n = max(len(P.parse_cycles(rho0)), len(P.parse_cycles(rho2)))
    return OMap(P.parse_cycles(rho0, n), P.parse_cycles(rho2, n))
