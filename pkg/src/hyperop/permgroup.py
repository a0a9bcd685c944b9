"""
Finite permutation groups: a deterministic Schreier-Sims stabilizer chain,
element enumeration, and a few structural tests used for group descriptors.
"""

from __future__ import annotations

import os
from math import prod
from typing import Iterable, Sequence

from . import perm as P

DEFAULT_MAX_ORDER = 10**7


def max_order() -> int:
    """Subgroup-order guard; ``HYPEROP_MAX_ORDER`` overrides the default."""
    v = os.environ.get("HYPEROP_MAX_ORDER")
    return int(v) if v else DEFAULT_MAX_ORDER


class OrderBoundExceeded(RuntimeError):
    pass


class StabChain:
    """Base and strong generating set for the group generated so far.

    ``trans[i]`` maps each point of the orbit of ``base[i]`` under the
    ``i``-th stabilizer to a group element sending ``base[i]`` there.
    """

    def __init__(self, degree: int, gens: Iterable[tuple] = ()):
        self.n = degree
        self.base: list[int] = []
        self.gens: list[list[tuple]] = []
        self.trans: list[dict[int, tuple]] = []
        for g in gens:
            self.add(g)

    def _orbit(self, i: int) -> None:
        b = self.base[i]
        t = {b: P.identity(self.n)}
        queue = [b]
        k = 0
        while k < len(queue):
            p = queue[k]
            k += 1
            for s in self.gens[i]:
                q = s[p]
                if q not in t:
                    t[q] = P.mul(t[p], s)
                    queue.append(q)
        self.trans[i] = t

    def strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(self.base)):
            u = self.trans[i].get(g[self.base[i]])
            if u is None:
                return g, i
            g = P.mul(g, P.inverse(u))
        return g, len(self.base)

    def __contains__(self, g: tuple) -> bool:
        h, j = self.strip(g)
        return j == len(self.base) and P.is_identity(h)

    def _new_level(self, h: tuple) -> None:
        b = next(i for i, x in enumerate(h) if x != i)
        self.base.append(b)
        self.gens.append([])
        self.trans.append({b: P.identity(self.n)})

    def _insert(self, h: tuple, j: int) -> None:
        # h fixes base[:j]; record it as a strong generator on levels 0..j
        if j == len(self.base):
            self._new_level(h)
        for l in range(j + 1):
            self.gens[l].append(h)
            self._orbit(l)

    def add(self, g: tuple) -> bool:
        """Add a generator; return False if it was already a member."""
        if len(g) != self.n:
            raise ValueError("generator degree mismatch")
        h, j = self.strip(g)
        if j == len(self.base) and P.is_identity(h):
            return False
        self._insert(h, j)
        self._complete(j)
        return True

    def _complete(self, i: int) -> None:
        bound = max_order()
        while i >= 0:
            restart = False
            for p, u in list(self.trans[i].items()):
                for s in self.gens[i]:
                    g = P.mul(P.mul(u, s), P.inverse(self.trans[i][s[p]]))
                    if P.is_identity(g):
                        continue
                    h, j = self.strip(g, i + 1)
                    if j < len(self.base) or not P.is_identity(h):
                        self._insert(h, j)
                        if self.order() > bound:
                            raise OrderBoundExceeded(f"group order exceeds {bound}")
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self) -> int:
        return prod(len(t) for t in self.trans)


def reduced_generators(gens: Iterable[tuple], degree: int) -> tuple[StabChain, list[tuple]]:
    """Stabilizer chain and the subsequence of ``gens`` that enlarged it."""
    chain = StabChain(degree)
    kept = [g for g in gens if chain.add(g)]
    return chain, kept


def group_order(gens: Sequence[tuple], degree: int | None = None) -> int:
    if degree is None:
        degree = len(gens[0])
    return StabChain(degree, gens).order()


def elements(gens: Sequence[tuple], degree: int, limit: int | None = None) -> list[tuple]:
    """All group elements, breadth first from the identity over ``gens``."""
    e = P.identity(degree)
    out = [e]
    seen = {e}
    k = 0
    while k < len(out):
        x = out[k]
        k += 1
        for g in gens:
            y = P.mul(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if limit is not None and len(out) > limit:
                    raise OrderBoundExceeded(f"group has more than {limit} elements")
    return out


def is_abelian(gens: Sequence[tuple]) -> bool:
    return all(P.mul(a, b) == P.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_invariants(gens: Sequence[tuple], degree: int) -> list[int]:
    """Invariant factors d1 | d2 | ... of a finite abelian group.

    For each prime p the p-primary part is read off from the number of
    elements killed by p^j, j = 1, 2, ...
    """
    elts = elements(gens, degree)
    orders = [P.order(g) for g in elts]
    primary: dict[int, list[int]] = {}
    for p, e in _factor(len(elts)).items():
        # r_j = log_p #{g : g^(p^j) = 1}; partition conjugate differences
        logs = [0]
        for j in range(1, e + 1):
            cnt = sum(1 for o in orders if (p ** j) % o == 0)
            logs.append(_log(cnt, p))
        ranks = [logs[j] - logs[j - 1] for j in range(1, e + 1)]  # #cyclic factors of order >= p^j
        parts = []
        for j in range(1, e + 1):
            nxt = ranks[j] if j < e else 0
            parts += [p ** j] * (ranks[j - 1] - nxt)
        primary[p] = sorted(parts, reverse=True)
    width = max((len(v) for v in primary.values()), default=0)
    inv = []
    for k in range(width):
        d = 1
        for parts in primary.values():
            if k < len(parts):
                d *= parts[k]
        inv.append(d)
    return sorted(inv)


def _log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def normal_closure(gens: Sequence[tuple], ambient: Sequence[tuple], degree: int) -> StabChain:
    chain = StabChain(degree)
    queue = [g for g in gens if not P.is_identity(g)]
    for g in queue:
        chain.add(g)
    k = 0
    while k < len(queue):
        x = queue[k]
        k += 1
        for s in ambient:
            c = P.conjugate(x, s)
            if chain.add(c):
                queue.append(c)
    return chain


def is_normal(sub_gens: Sequence[tuple], ambient: Sequence[tuple], degree: int) -> bool:
    chain = StabChain(degree, sub_gens)
    return all(P.conjugate(x, s) in chain for x in sub_gens for s in ambient)


def is_simple(gens: Sequence[tuple], degree: int) -> bool:
    """Whether the group is simple (the trivial group is not)."""
    gens = [g for g in gens if not P.is_identity(g)]
    if not gens:
        return False
    order = group_order(gens, degree)
    if is_abelian(gens):
        return len(_factor(order)) == 1 and sum(_factor(order).values()) == 1
    seen = set()
    for g in elements(gens, degree):
        if P.is_identity(g) or g in seen:
            continue
        # conjugacy class of g
        cls = [g]
        seen.add(g)
        k = 0
        while k < len(cls):
            x = cls[k]
            k += 1
            for s in gens:
                c = P.conjugate(x, s)
                if c not in seen:
                    seen.add(c)
                    cls.append(c)
        if normal_closure([g], gens, degree).order() != order:
            return False
    return True
