"""
Permutations stored as tuples of images on 0..n-1.

Composition is left to right: ``mul(p, q)`` applies ``p`` first, then ``q``,
so ``mul(p, q)[i] == q[p[i]]``.  Text input and output (cycle notation,
JSON image arrays) use 1-based labels.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Sequence

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(map(q.__getitem__, p))


def mul_all(perms: Iterable[Perm], n: int) -> Perm:
    r = identity(n)
    for p in perms:
        r = mul(r, p)
    return r


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    r = identity(len(p))
    base = p
    while k:
        if k & 1:
            r = mul(r, base)
        base = mul(base, base)
        k >>= 1
    return r


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """All cycles (fixed points included), each starting at its least point."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(j)
            j = p[j]
        out.append(tuple(c))
    return out


def num_cycles(p: Perm) -> int:
    return len(cycles(p))


def order(p: Perm) -> int:
    return lcm(*(len(c) for c in cycles(p))) if p else 1


def orbits(n: int, gens: Sequence[Perm]) -> list[list[int]]:
    """Orbits of the group generated by ``gens`` on 0..n-1."""
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        orb = [start]
        k = 0
        while k < len(orb):
            x = orb[k]
            k += 1
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
        out.append(orb)
    return out


def is_transitive(n: int, gens: Sequence[Perm]) -> bool:
    return n == 0 or len(orbits(n, gens)) == 1


def conjugate(p: Perm, s: Perm) -> Perm:
    """``s^-1 p s``: relabel ``p`` through the bijection ``s``."""
    return mul(mul(inverse(s), p), s)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse 1-based cycle notation such as ``(1,2,3)(4,5)``.

    ``()`` or an empty string is the identity.  The degree is ``n`` when given,
    otherwise the largest point mentioned.
    """
    text = text.strip()
    stripped = _CYCLE.sub("", text).strip()
    if stripped:
        raise ValueError(f"malformed cycle notation: {text!r}")
    cyc = []
    for body in _CYCLE.findall(text):
        body = body.strip()
        if not body:
            continue
        pts = [int(s) for s in re.split(r"[,\s]+", body) if s]
        if any(x < 1 for x in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"malformed cycle: ({body})")
        cyc.append([x - 1 for x in pts])
    top = max((max(c) + 1 for c in cyc), default=1 if n is None else 0)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"cycle point {top} exceeds degree {n}")
    img = list(range(n))
    used = set()
    for c in cyc:
        if used.intersection(c):
            raise ValueError("cycles are not disjoint")
        used.update(c)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


def format_cycles(p: Perm) -> str:
    """1-based cycle notation without fixed points; ``()`` for the identity."""
    parts = [c for c in cycles(p) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in parts)


def from_images(images: Sequence[int]) -> Perm:
    """Convert a 1-based image array to a permutation."""
    p = tuple(int(x) - 1 for x in images)
    if not is_perm(p):
        raise ValueError(f"not a permutation: {list(images)}")
    return p


def to_images(p: Perm) -> list[int]:
    return [x + 1 for x in p]


def extend(p: Perm, n: int) -> Perm:
    """Extend ``p`` by fixed points up to degree ``n``."""
    return tuple(p) + tuple(range(len(p), n))
