"""
Orientably regular hypermaps as finite groups with generating pairs.

A generating pair ``(g2, g0)`` of a permutation group G is the image of
``(rho2, rho0)`` under an epimorphism from F2 onto G.  Its Cayley map has the
elements of G as darts with rho0, rho2 acting by right multiplication by
``g0``, ``g2``.  Two pairs give isomorphic Cayley maps exactly when they
differ by an automorphism of G, so bucketing pairs by the canonical key of
their Cayley maps yields the Aut(G)-orbits without computing Aut(G).
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from . import perm as P
from .genwords import GenWord
from .hypermap import OMap, apply_operation, canonical_key, info
from .permgroup import StabChain, elements


class NotGenerating(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


@dataclass
class FinGroup:
    degree: int
    gens: list
    _elements: list | None = field(default=None, repr=False, compare=False)
    _chain: StabChain | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.gens = [tuple(g) for g in self.gens]
        for g in self.gens:
            if len(g) != self.degree or not P.is_perm(g):
                raise ValueError(f"generator {g!r} is not a permutation of degree {self.degree}")

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain(self.degree, self.gens)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def elements(self) -> list:
        """Elements in breadth-first order from the identity (deterministic)."""
        if self._elements is None:
            self._elements = elements(self.gens, self.degree)
        return self._elements

    def __contains__(self, g) -> bool:
        return tuple(g) in self.chain


@dataclass(frozen=True)
class GenPair:
    g2: tuple
    g0: tuple

    @property
    def g1(self) -> tuple:
        return P.mul(P.inverse(self.g0), P.inverse(self.g2))

    def __str__(self) -> str:
        return f"{P.format_cycles(self.g2)};{P.format_cycles(self.g0)}"


def parse_pair(text: str, degree: int) -> GenPair:
    """``<cycles of g2>;<cycles of g0>`` in 1-based cycle notation."""
    parts = text.split(";")
    if len(parts) != 2:
        raise ValueError(f"expected '<g2>;<g0>', got {text!r}")
    return GenPair(P.parse_cycles(parts[0], degree), P.parse_cycles(parts[1], degree))


# --- named groups ----------------------------------------------------------

def cyclic(n: int) -> FinGroup:
    return FinGroup(n, [tuple((i + 1) % n for i in range(n))])


def dihedral(n: int) -> FinGroup:
    """Dihedral group of order 2n acting on n points."""
    if n < 3:
        # D1 = C2, D2 = C2 x C2 as regular-ish actions on 2 and 4 points
        return FinGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)]) if n == 2 else cyclic(2)
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FinGroup(n, [rot, ref])


def symmetric(n: int) -> FinGroup:
    if n < 2:
        return FinGroup(1, [(0,)])
    return FinGroup(n, [P.parse_cycles("(1,2)", n), tuple((i + 1) % n for i in range(n))])


def alternating(n: int) -> FinGroup:
    if n < 3:
        return FinGroup(max(n, 1), [P.identity(max(n, 1))])
    gens = [P.parse_cycles("(1,2,3)", n)]
    if n > 3:
        pts = range(1, n + 1) if n % 2 else range(2, n + 1)
        gens.append(P.parse_cycles("(" + ",".join(map(str, pts)) + ")", n))
    return FinGroup(n, gens)


def trivial() -> FinGroup:
    return FinGroup(1, [(0,)])


_NAMED = {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}


def parse_group(spec: str) -> FinGroup:
    """``A5``, ``S4``, ``C7``, ``D6`` or a JSON object / file path with
    ``{"degree": n, "generators": [[...], ...]}`` (1-based image arrays)."""
    spec = spec.strip()
    m = re.fullmatch(r"([ACDS])(\d+)", spec)
    if m:
        return _NAMED[m.group(1)](int(m.group(2)))
    if spec in ("1", "trivial"):
        return trivial()
    if not spec.startswith("{"):
        with open(spec) as fh:
            spec = fh.read()
    data = json.loads(spec)
    n = int(data["degree"])
    return FinGroup(n, [P.from_images(g) for g in data["generators"]] or [P.identity(n)])


# --- Cayley maps -------------------------------------------------------------

def _closure(pair: GenPair) -> list:
    return elements([pair.g2, pair.g0], len(pair.g2))


def generates(G: FinGroup, pair: GenPair) -> bool:
    return pair.g2 in G and pair.g0 in G and len(_closure(pair)) == G.order()


def cayley(G: FinGroup, pair: GenPair) -> OMap:
    """Regular hypermap of a generating pair; darts are ``G.elements()``."""
    elts = G.elements()
    idx = {g: i for i, g in enumerate(elts)}
    try:
        rho0 = tuple(idx[P.mul(g, pair.g0)] for g in elts)
        rho2 = tuple(idx[P.mul(g, pair.g2)] for g in elts)
    except KeyError:
        raise NotGenerating("pair does not lie in the group") from None
    try:
        return OMap(rho0, rho2)
    except ValueError:
        raise NotGenerating("pair does not generate the group") from None


def pair_key(pair: GenPair) -> tuple:
    """Canonical key of the Cayley map of ``pair`` on the group it generates."""
    gens = (pair.g0, pair.g2)
    elts = _closure(pair)
    idx = {g: i for i, g in enumerate(elts)}
    M = OMap(*(tuple(idx[P.mul(g, s)] for g in elts) for s in gens))
    return canonical_key(M, regular=True)


def pair_of(M: OMap) -> GenPair:
    """A generating pair for the monodromy group of an oriented hypermap."""
    return GenPair(M.rho2, M.rho0)


@dataclass(frozen=True)
class RegularClass:
    key: tuple = field(repr=False)
    pair: GenPair
    type: tuple
    genus: int
    size: int
    reflexible: bool | None = None


def _key_if_generating(args):
    pair, order = args
    elts = _closure(pair)
    if len(elts) != order:
        return None
    idx = {g: i for i, g in enumerate(elts)}
    M = OMap(*(tuple(idx[P.mul(g, s)] for g in elts) for s in (pair.g0, pair.g2)))
    return canonical_key(M, regular=True)


def enumerate_classes(G: FinGroup, bound: int = 120, threads: int = 1,
                      check_reflexible: bool = False) -> list[RegularClass]:
    """Equivalence classes of generating pairs of G, in order of first appearance."""
    order = G.order()
    if order > bound:
        raise BoundExceeded(f"|G| = {order} exceeds the enumeration bound {bound}")
    elts = G.elements()
    pairs = [GenPair(g2, g0) for g2, g0 in product(elts, repeat=2)]
    jobs = [(p, order) for p in pairs]
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            keys = list(ex.map(_key_if_generating, jobs, chunksize=64))
    else:
        keys = [_key_if_generating(j) for j in jobs]
    buckets: dict = {}
    for pair, key in zip(pairs, keys):
        if key is not None:
            buckets.setdefault(key, []).append(pair)
    out = []
    for key, members in buckets.items():
        rep = members[0]
        M = cayley(G, rep)
        mi = info(M)
        refl = None
        if check_reflexible:
            inv = GenPair(P.inverse(rep.g2), P.inverse(rep.g0))
            refl = pair_key(inv) == key
        out.append(RegularClass(key, rep, mi.type, mi.genus, len(members), refl))
    return out


def operation_orbits(G: FinGroup, classes: Sequence[RegularClass],
                     ops: Sequence[GenWord | str]) -> list[list[int]]:
    """Orbits of the class list under the group generated by ``ops``.

    Returns blocks of class indices, each sorted, ordered by least member.
    """
    index = {c.key: i for i, c in enumerate(classes)}
    image = []  # image[j][i]: class index of op j applied to class i
    for op in ops:
        row = []
        for c in classes:
            M = apply_operation(cayley(G, c.pair), op)
            k = canonical_key(M, regular=True)
            if k not in index:
                raise RuntimeError("operation image left the class list")
            row.append(index[k])
        image.append(row)
    seen = [False] * len(classes)
    blocks = []
    for start in range(len(classes)):
        if seen[start]:
            continue
        seen[start] = True
        block = [start]
        k = 0
        while k < len(block):
            i = block[k]
            k += 1
            for row in image:
                j = row[i]
                if not seen[j]:
                    seen[j] = True
                    block.append(j)
        blocks.append(sorted(block))
    return blocks


def format_class_table(classes: Sequence[RegularClass]) -> str:
    lines = ["class\ttype\tgenus\tsize\tpair"]
    for i, c in enumerate(classes):
        t = "(" + ",".join(map(str, c.type)) + ")"
        lines.append(f"{i}\t{t}\t{c.genus}\t{c.size}\t{c.pair}")
    return "\n".join(lines)
