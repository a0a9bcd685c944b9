"""
Generalised chirality groups of orientably regular hypermaps.

Let theta: F2 -> G be the epimorphism of a generating pair, H its kernel and
alpha an automorphism whose outer class has finite order k.  Since alpha^k is
inner and H is normal, the images alpha^i(H) repeat with period k.

* upper group: theta(<alpha^i(H) : i>) = H^<alpha> / H, a normal subgroup of G;
* lower group: H / H_<alpha> with H_<alpha> the intersection of the
  alpha^i(H), realised as the image of H under
  phi = (theta . alpha^-i)_{i < k} in G^k acting on k disjoint copies of the
  points of G.

Images of the Schreier generators of H are computed from permutation images
of the transversal words, never by expanding words.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from . import perm as P
from .freegroup import (
    RHO0,
    RHO2,
    Endo,
    endo_from_opword,
    finv,
    fmul,
    inverse_endo_from_opword,
)
from .genwords import GenWord, eval_word, normalize
from .gl2 import classify_gl
from .hypermap import eval_fword
from .permgroup import (
    StabChain,
    abelian_invariants,
    is_abelian,
    is_normal,
    is_simple,
    reduced_generators,
)
from .regular import FinGroup, GenPair, NotGenerating, generates

_LETTERS = (RHO2, RHO0, -RHO2, -RHO0)


def _letter_perm(pair: GenPair, x: int) -> tuple:
    g = pair.g2 if abs(x) == RHO2 else pair.g0
    return g if x > 0 else P.inverse(g)


def transversal(pair: GenPair) -> dict:
    """Breadth-first tree transversal: element of <pair> -> free word.

    Prefix closed, with the empty word for the identity.
    """
    n = len(pair.g2)
    e = P.identity(n)
    words = {e: ()}
    queue = [e]
    k = 0
    while k < len(queue):
        g = queue[k]
        k += 1
        for x in _LETTERS:
            h = P.mul(g, _letter_perm(pair, x))
            if h not in words:
                words[h] = words[g] + (x,)
                queue.append(h)
    return words


def _check(G: FinGroup, pair: GenPair) -> None:
    if not generates(G, pair):
        raise NotGenerating("pair does not generate the group")


def schreier_generators(G: FinGroup, pair: GenPair) -> list:
    """Nontrivial Schreier generators of the kernel of theta, freely reduced."""
    _check(G, pair)
    u = transversal(pair)
    out = []
    for g, ug in u.items():
        for s in (RHO2, RHO0):
            h = P.mul(g, _letter_perm(pair, s))
            w = fmul(ug, (s,), finv(u[h]))
            if w:
                out.append(w)
    return out


def _rep_after(pair: GenPair, e: Endo) -> GenPair:
    """The representation v -> pair(e(v))."""
    return GenPair(eval_fword(e.img2, pair.g2, pair.g0), eval_fword(e.img0, pair.g2, pair.g0))


def _schreier_images(pair: GenPair, rep: GenPair) -> list:
    """Nontrivial images of the Schreier generators of ker(pair) under the
    representation ``rep`` of F2."""
    u = transversal(pair)
    n = len(rep.g2)
    cache = {P.identity(len(pair.g2)): P.identity(n)}
    # images of transversal words, built along the tree (dict order is BFS order)
    for g, w in u.items():
        if w:
            parent = P.mul(g, P.inverse(_letter_perm(pair, w[-1])))
            cache[g] = P.mul(cache[parent], _letter_perm(rep, w[-1]))
    out = []
    for g in u:
        for s in (RHO2, RHO0):
            h = P.mul(g, _letter_perm(pair, s))
            img = P.mul(P.mul(cache[g], _letter_perm(rep, s)), P.inverse(cache[h]))
            if not P.is_identity(img):
                out.append(img)
    return out


def _block_diagonal(reps: Sequence[GenPair]) -> GenPair:
    """Pair acting on len(reps) disjoint copies of the points."""
    n = len(reps[0].g2)

    def glue(perms):
        return tuple(j * n + x for j, p in enumerate(perms) for x in p)

    return GenPair(glue([r.g2 for r in reps]), glue([r.g0 for r in reps]))


def operation_period(w: GenWord | Sequence | str) -> int:
    if isinstance(w, str):
        w = normalize(w, projective=False)
    elif not isinstance(w, GenWord):
        w = normalize(list(w), projective=False)
    label = classify_gl(eval_word(w))
    if not label.periodic:
        raise ValueError(f"operation {w} has infinite order")
    return label.order


def _power_reps(pair: GenPair, step: Endo, k: int) -> list:
    """[pair . step^i for i in range(k)]."""
    reps = [pair]
    for _ in range(k - 1):
        reps.append(_rep_after(reps[-1], step))
    return reps


@dataclass
class GroupDescriptor:
    order: int
    abelian: bool
    invariants: list | None
    simple: bool


@dataclass
class ChiralityReport:
    word: str
    period: int
    upper_order: int
    lower_order: int
    full_lower_order: int
    upper_group: GroupDescriptor
    upper_normal: bool

    def lines(self) -> list[str]:
        d = self.upper_group
        inv = "-" if d.invariants is None else ",".join(map(str, d.invariants)) or "1"
        return [
            f"word: {self.word}",
            f"period: {self.period}",
            f"upper_order: {self.upper_order}",
            f"lower_order: {self.lower_order}",
            f"full_lower_order: {self.full_lower_order}",
            f"upper_abelian: {str(d.abelian).lower()}",
            f"upper_invariants: {inv}",
            f"upper_simple: {str(d.simple).lower()}",
            f"upper_normal: {str(self.upper_normal).lower()}",
        ]

    def to_dict(self) -> dict:
        return asdict(self)


def _describe(gens: list, degree: int, order: int) -> GroupDescriptor:
    gens = gens or [P.identity(degree)]
    ab = is_abelian(gens)
    return GroupDescriptor(order, ab, abelian_invariants(gens, degree) if ab else None,
                           is_simple(gens, degree))


def _as_word(w) -> GenWord:
    if isinstance(w, GenWord):
        return w
    if isinstance(w, str):
        return normalize(w, projective=False)
    return normalize(list(w), projective=False)


def upper_generators(G: FinGroup, pair: GenPair, w) -> tuple[list, int]:
    w = _as_word(w)
    k = operation_period(w)
    alpha = endo_from_opword(w)
    reps = _power_reps(pair, alpha, k)[1:]  # theta . alpha^i, i = 1..k-1
    gens = []
    for r in reps:
        gens += _schreier_images(pair, r)
    return gens, k


def chirality(G: FinGroup, pair: GenPair, w) -> ChiralityReport:
    _check(G, pair)
    w = _as_word(w)
    k = operation_period(w)
    n = G.degree
    upper_chain, upper = reduced_generators(upper_generators(G, pair, w)[0], n)
    upper_order = upper_chain.order()
    normal = is_normal(upper, [pair.g2, pair.g0], n) if upper else True
    if not normal:
        raise RuntimeError("upper chirality group is not normal")  # internal fault

    phi = _block_diagonal(_power_reps(pair, inverse_endo_from_opword(w), k))
    lower_chain = StabChain(k * n, _schreier_images(pair, phi))
    full_chain = StabChain(k * n, [phi.g2, phi.g0])
    return ChiralityReport(
        word=str(w),
        period=k,
        upper_order=upper_order,
        lower_order=lower_chain.order(),
        full_lower_order=full_chain.order(),
        upper_group=_describe(upper, n, upper_order),
        upper_normal=normal,
    )


def intersection_cover(G: FinGroup, pair: GenPair, w, depth: int | None = None) -> tuple[FinGroup, GenPair]:
    """Regular cover for the intersection of alpha^i(H), 0 <= i < depth.

    ``depth`` defaults to the period, giving the smallest invariant cover.
    """
    _check(G, pair)
    w = _as_word(w)
    k = operation_period(w)
    depth = k if depth is None else depth
    phi = _block_diagonal(_power_reps(pair, inverse_endo_from_opword(w), depth))
    return FinGroup(depth * G.degree, [phi.g2, phi.g0]), phi


def invariant_cover(G: FinGroup, pair: GenPair, w) -> tuple[FinGroup, GenPair]:
    return intersection_cover(G, pair, w)


def invariant_quotient(G: FinGroup, pair: GenPair, w) -> tuple[FinGroup, GenPair]:
    """G / N for the upper group N, acting on the right cosets of N."""
    _check(G, pair)
    upper, _ = upper_generators(G, pair, w)
    n = G.degree
    chain = StabChain(n, upper)
    elts = G.elements()
    coset_of: dict = {}
    reps = []
    for g in elts:
        if g in coset_of:
            continue
        c = len(reps)
        reps.append(g)
        # Ng = {x g : x in N}; enumerate via membership of g' g^-1
        gi = P.inverse(g)
        for h in elts:
            if h not in coset_of and P.mul(h, gi) in chain:
                coset_of[h] = c
    m = len(reps)

    def act(s):
        return tuple(coset_of[P.mul(r, s)] for r in reps)

    q2, q0 = act(pair.g2), act(pair.g0)
    return FinGroup(m, [q2, q0]), GenPair(q2, q0)
