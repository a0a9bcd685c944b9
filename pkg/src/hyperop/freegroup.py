"""
Words and endomorphisms of the free group F2 = <rho2, rho0> and of the
triangle reflection group C2*C2*C2 = <r0, r1, r2>.

Letters of F2 are the integers ``1`` (rho2), ``2`` (rho0) and their
negatives for inverses; text form uses ``a`` for rho2 and ``b`` for rho0,
with an apostrophe for inverses.  Letters of the reflection group are the
integers 0, 1, 2.

Automorphisms act on the right and compose left to right:
``compose(e, f)`` applies ``e`` first, then ``f``, and
``abelianize(compose(e, f)) == abelianize(e) @ abelianize(f)``.
Inner automorphisms use right conjugation ``w -> g^-1 w g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .genwords import GenWord, normalize
from .gl2 import Mat2

FWord = tuple
DWord = tuple

RHO2, RHO0 = 1, 2
A2 = (RHO2,)
A0 = (RHO0,)
RHO1 = (-RHO0, -RHO2)  # rho0 rho1 rho2 = 1


def reduce_word(w: Iterable[int]) -> FWord:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def fmul(*words: Sequence[int]) -> FWord:
    return reduce_word(x for w in words for x in w)


def finv(w: Sequence[int]) -> FWord:
    return tuple(-x for x in reversed(w))


def fpow(w: Sequence[int], k: int) -> FWord:
    if k < 0:
        w, k = finv(w), -k
    return reduce_word(tuple(w) * k)


def exponent_sums(w: Sequence[int]) -> tuple[int, int]:
    s2 = sum(1 if x == RHO2 else -1 for x in w if abs(x) == RHO2)
    s0 = sum(1 if x == RHO0 else -1 for x in w if abs(x) == RHO0)
    return s2, s0


def parse_fword(text: str) -> FWord:
    out = []
    for tok in text.split():
        inv = tok.endswith("'")
        s = tok.rstrip("'")
        if s not in ("a", "b") or tok.count("'") > 1:
            raise ValueError(f"unknown free-group letter {tok!r}")
        x = RHO2 if s == "a" else RHO0
        out.append(-x if inv else x)
    return reduce_word(out)


def format_fword(w: Sequence[int]) -> str:
    return " ".join(("a" if abs(x) == RHO2 else "b") + ("'" if x < 0 else "") for x in w)


@dataclass(frozen=True)
class Endo:
    """Endomorphism of F2, given by the images of rho2 and rho0."""

    img2: FWord
    img0: FWord

    def __post_init__(self):
        object.__setattr__(self, "img2", reduce_word(self.img2))
        object.__setattr__(self, "img0", reduce_word(self.img0))

    def __call__(self, w: Sequence[int]) -> FWord:
        return apply_endo(self, w)

    def __str__(self) -> str:
        return f"rho2 -> {format_fword(self.img2)}; rho0 -> {format_fword(self.img0)}"


def parse_endo(text: str) -> Endo:
    imgs = {}
    for part in text.split(";"):
        lhs, sep, rhs = part.partition("->")
        if not sep or lhs.strip() not in ("rho2", "rho0"):
            raise ValueError(f"malformed endomorphism {text!r}")
        imgs[lhs.strip()] = parse_fword(rhs)
    if set(imgs) != {"rho2", "rho0"}:
        raise ValueError(f"malformed endomorphism {text!r}")
    return Endo(imgs["rho2"], imgs["rho0"])


def apply_endo(e: Endo, w: Sequence[int]) -> FWord:
    out: list[int] = []
    for x in w:
        img = e.img2 if abs(x) == RHO2 else e.img0
        if x < 0:
            img = finv(img)
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def compose(*endos: Endo) -> Endo:
    """Left-to-right composite: the first argument is applied first."""
    r = IDENTITY
    for f in endos:
        r = Endo(apply_endo(f, r.img2), apply_endo(f, r.img0))
    return r


def endo_power(e: Endo, k: int, inverse: Endo | None = None) -> Endo:
    if k < 0:
        if inverse is None:
            raise ValueError("negative power needs the inverse")
        e, k = inverse, -k
    return compose(*([e] * k))


def abelianize(e: Endo) -> Mat2:
    (a, b), (c, d) = exponent_sums(e.img2), exponent_sums(e.img0)
    return Mat2(a, b, c, d)


def inner(g: Sequence[int]) -> Endo:
    """Right conjugation ``w -> g^-1 w g``."""
    gi = finv(g)
    return Endo(fmul(gi, A2, g), fmul(gi, A0, g))


def same_operation(e: Endo, f: Endo) -> bool:
    """Whether two automorphisms induce the same operation on hypermaps.

    Out(F2) is faithfully represented on the abelianisation, so this is
    equality of abelianisations.
    """
    return abelianize(e) == abelianize(f)


IDENTITY = Endo(A2, A0)

ALPHA_X = Endo((-RHO0,), (RHO2,))
ALPHA_X_INV = Endo((RHO0,), (-RHO2,))
ALPHA_Y = Endo((-RHO0,), (RHO2, RHO0))
ALPHA_Y_INV = Endo((RHO0, RHO2), (-RHO2,))
ALPHA_T = Endo((RHO0,), (RHO2,))
ALPHA_R = Endo((-RHO2,), (-RHO0,))  # = alpha_{-I}
ALPHA_XT = Endo((-RHO2,), (RHO0,))
ALPHA_Y2 = Endo(RHO1, (RHO2,))
ALPHA_Y2_INV = Endo((RHO0,), (-RHO0, -RHO2))
ALPHA_MINUS_T = Endo((-RHO0,), (-RHO2,))

# (symbol, exponent) -> (automorphism, its inverse)
ATLAS = {
    ("X", 1): (ALPHA_X, ALPHA_X_INV),
    ("X", -1): (ALPHA_X_INV, ALPHA_X),
    ("Y", 1): (ALPHA_Y, ALPHA_Y_INV),
    ("Y", -1): (ALPHA_Y_INV, ALPHA_Y),
    ("T", 1): (ALPHA_T, ALPHA_T),
    ("T", -1): (ALPHA_T, ALPHA_T),
    ("-I", 1): (ALPHA_R, ALPHA_R),
    ("-I", -1): (ALPHA_R, ALPHA_R),
}


def _opword_tokens(w: GenWord | Sequence | str) -> list:
    if isinstance(w, str):
        w = normalize(w, projective=False)
    if isinstance(w, GenWord):
        return w.tokens()
    toks = list(w)
    for t in toks:
        if t not in ATLAS:
            raise ValueError(f"malformed operation token {t!r}")
    return toks


def endo_from_opword(w: GenWord | Sequence | str) -> Endo:
    """Replace each letter of an operation word by its atlas automorphism.

    Accepts a canonical word, a token list or word text; text is put in
    canonical form first.
    """
    return compose(*(ATLAS[t][0] for t in _opword_tokens(w)))


def inverse_endo_from_opword(w: GenWord | Sequence | str) -> Endo:
    return compose(*(ATLAS[t][1] for t in reversed(_opword_tokens(w))))


# --- the reflection group C2*C2*C2 ---------------------------------------

def reduce_dword(w: Iterable[int]) -> DWord:
    out: list[int] = []
    for x in w:
        if x not in (0, 1, 2):
            raise ValueError(f"bad reflection letter {x!r}")
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def dmul(*words: Sequence[int]) -> DWord:
    return reduce_dword(x for w in words for x in w)


def dinv(w: Sequence[int]) -> DWord:
    return tuple(reversed(w))


def parse_dword(text: str) -> DWord:
    try:
        return reduce_dword(int(t) for t in text.split())
    except ValueError:
        raise ValueError(f"malformed reflection word {text!r}") from None


def format_dword(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)


@dataclass(frozen=True)
class DEndo:
    """Endomorphism of C2*C2*C2, given by the images of r0, r1, r2."""

    img0: DWord
    img1: DWord
    img2: DWord

    def __post_init__(self):
        for k in ("img0", "img1", "img2"):
            object.__setattr__(self, k, reduce_dword(getattr(self, k)))

    def image(self, i: int) -> DWord:
        return (self.img0, self.img1, self.img2)[i]

    def __call__(self, w: Sequence[int]) -> DWord:
        return apply_dendo(self, w)

    def __str__(self) -> str:
        return "; ".join(f"r{i} -> {format_dword(self.image(i))}" for i in range(3))


def apply_dendo(d: DEndo, w: Sequence[int]) -> DWord:
    return dmul(*(d.image(x) for x in w))


def dcompose(*ds: DEndo) -> DEndo:
    r = DIDENTITY
    for f in ds:
        r = DEndo(*(apply_dendo(f, r.image(i)) for i in range(3)))
    return r


def inner_delta(g: Sequence[int]) -> DEndo:
    gi = dinv(g)
    return DEndo(*(dmul(gi, (i,), g) for i in range(3)))


DIDENTITY = DEndo((0,), (1,), (2,))
DALPHA_X = DEndo((2,), (1,), (1, 0, 1))
DALPHA_X_INV = DEndo((1, 2, 1), (1,), (0,))
DALPHA_Y = DEndo((2, 1, 2), (2,), (2, 0, 2))
DALPHA_Y_INV = DEndo((1, 2, 1), (1, 0, 1), (1,))
DALPHA_T = DEndo((1, 2, 1), (1,), (1, 0, 1))
DALPHA_XT = DEndo((1, 0, 1), (1,), (2,))


def permutation_dendo(images: Sequence[int]) -> DEndo:
    """The automorphism sending r_i to r_{images[i]}."""
    return DEndo(*((images[i],) for i in range(3)))


DALPHA_02 = permutation_dendo((2, 1, 0))
DALPHA_01 = permutation_dendo((1, 0, 2))
DALPHA_12 = permutation_dendo((0, 2, 1))

DATLAS = {
    ("X", 1): (DALPHA_X, DALPHA_X_INV),
    ("X", -1): (DALPHA_X_INV, DALPHA_X),
    ("Y", 1): (DALPHA_Y, DALPHA_Y_INV),
    ("Y", -1): (DALPHA_Y_INV, DALPHA_Y),
    ("T", 1): (DALPHA_T, DALPHA_T),
    ("T", -1): (DALPHA_T, DALPHA_T),
}

# r_i r_j (i != j) as words in rho2, rho0
_PAIRS = {
    (0, 1): A2,
    (1, 2): A0,
    (2, 0): RHO1,
    (1, 0): (-RHO2,),
    (2, 1): (-RHO0,),
    (0, 2): (RHO2, RHO0),
}


def rewrite_even(w: Sequence[int]) -> FWord:
    """Rewrite an even-length reflection word in rho2, rho0."""
    w = reduce_dword(w)
    if len(w) % 2:
        raise ValueError(f"odd-length word {format_dword(w)!r} is not in the even subgroup")
    return fmul(*(_PAIRS[w[i], w[i + 1]] for i in range(0, len(w), 2)))


def restrict(d: DEndo) -> Endo:
    """Restriction of an automorphism of C2*C2*C2 to the even subgroup."""
    return Endo(rewrite_even(dmul(d.img0, d.img1)), rewrite_even(dmul(d.img1, d.img2)))


def _projective_tokens(w: GenWord | Sequence | str) -> list:
    if isinstance(w, str):
        w = normalize(w, projective=True)
    toks = w.tokens() if isinstance(w, GenWord) else list(w)
    toks = [t for t in toks if t[0] != "-I"]
    for t in toks:
        if t not in DATLAS:
            raise ValueError(f"malformed operation token {t!r}")
    return toks


def extend_named(w: GenWord | Sequence | str) -> DEndo:
    """Automorphism of C2*C2*C2 composed from the atlas for x, y, t."""
    return dcompose(*(DATLAS[t][0] for t in _projective_tokens(w)))


def inverse_extend_named(w: GenWord | Sequence | str) -> DEndo:
    return dcompose(*(DATLAS[t][1] for t in reversed(_projective_tokens(w))))
