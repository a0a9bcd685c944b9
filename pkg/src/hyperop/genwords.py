"""
Words in the generators X, Y, T of GL2(Z) and x, y, t of PGL2(Z).

Every element has a unique canonical form ``sign * w(X, Y) * T^eta`` where
``w`` is a reduced word in the free product <x> * <y> = C2 * C3, written
with letters ``x`` and ``y^{+-1}``.  In projective context the sign is
always +1.

Text grammar: whitespace separated tokens ``X X' Y Y' T -I`` (GL context)
or ``x x' y y' t`` (PGL context); an apostrophe marks an inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gl2 import (
    I,
    MINUS_I,
    T,
    X,
    Y,
    ClassLabel,
    InvalidElement,
    Mat2,
    gl_label,
    mat_mul,
    mat_pow,
    pgl_label,
)

Token = tuple  # (symbol, exponent) with symbol in "X", "Y", "T", "-I"

_MATS = {("X", 1): X, ("X", -1): X.inverse(), ("Y", 1): Y, ("Y", -1): Y.inverse(),
         ("T", 1): T, ("T", -1): T, ("-I", 1): MINUS_I, ("-I", -1): MINUS_I}


@dataclass(frozen=True)
class GenWord:
    """A canonical word ``sign * body * T^eta``.

    ``body`` is a tuple of ``("x", 1)`` and ``("y", +-1)`` letters with no two
    adjacent letters on the same generator.
    """

    sign: int = 1
    body: tuple = ()
    eta: int = 0
    projective: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1) or self.eta not in (0, 1):
            raise ValueError("sign must be +-1 and eta 0 or 1")
        if self.projective and self.sign != 1:
            raise ValueError("projective words carry no sign")
        for i, (s, e) in enumerate(self.body):
            if (s, e) not in (("x", 1), ("y", 1), ("y", -1)):
                raise ValueError(f"bad letter {(s, e)!r}")
            if i and self.body[i - 1][0] == s:
                raise ValueError("body is not reduced")

    def tokens(self) -> list:
        """Token list (GL symbols) spelling this word."""
        out = [("-I", 1)] if self.sign == -1 else []
        out += [(s.upper(), e) for s, e in self.body]
        if self.eta:
            out.append(("T", 1))
        return out

    def is_identity(self) -> bool:
        return self.sign == 1 and not self.body and not self.eta

    def __len__(self) -> int:
        return len(self.body) + self.eta

    def __str__(self) -> str:
        return format_tokens(self.tokens(), self.projective)


def parse_tokens(text: str) -> tuple[list, bool | None]:
    """Parse word text into GL tokens.

    Returns the tokens and the context: True for lowercase (projective),
    False for uppercase, None for the empty word.  Mixing cases is an error.
    """
    toks = []
    cases = set()
    for raw in text.split():
        if raw in ("-I", "-i"):
            if raw == "-i":
                raise ValueError("-I has no projective counterpart")
            toks.append(("-I", 1))
            cases.add(False)
            continue
        inv = raw.endswith("'")
        sym = raw[:-1] if inv else raw
        if sym not in ("X", "Y", "T", "x", "y", "t") or raw.count("'") > 1:
            raise ValueError(f"unknown token {raw!r}")
        cases.add(sym.islower())
        toks.append((sym.upper(), -1 if inv else 1))
    if len(cases) > 1:
        raise ValueError(f"mixed upper and lower case tokens in {text!r}")
    return toks, (cases.pop() if cases else None)


def format_tokens(tokens: Iterable[Token], projective: bool = False) -> str:
    out = []
    for s, e in tokens:
        if s == "-I":
            if not projective:
                out.append("-I")
            continue
        if s == "T":
            e = 1
        t = s.lower() if projective else s
        out.append(t + ("'" if e == -1 else ""))
    return " ".join(out)


def eval_tokens(tokens: Iterable[Token]) -> Mat2:
    A = I
    for tok in tokens:
        A = mat_mul(A, _MATS[tok])
    return A


def eval_word(w: GenWord) -> Mat2:
    return eval_tokens(w.tokens())


def _reduce_projective(tokens: Iterable[Token]) -> tuple[list, int]:
    body: list[list] = []
    eta = 0

    def push(s, e):
        if body and body[-1][0] == s:
            if s == "x":
                body.pop()
                return
            k = (body[-1][1] + e) % 3
            if k == 0:
                body.pop()
            else:
                body[-1][1] = 1 if k == 1 else -1
        else:
            body.append([s, e])

    for s, e in tokens:
        if s == "T":
            eta ^= 1
        elif s == "X":
            push("x", 1)  # x = x^-1 projectively; t commutes with x
        elif s == "Y":
            push("y", -e if eta else e)  # t y = y^-1 t
        elif s != "-I":
            raise ValueError(f"unknown token {(s, e)!r}")
    return body, eta


def normalize(tokens: Sequence[Token] | str, projective: bool | None = None) -> GenWord:
    """Canonical word equal to the token product in GL2(Z) (or PGL2(Z))."""
    if isinstance(tokens, str):
        tokens, ctx = parse_tokens(tokens)
        if projective is None:
            projective = bool(ctx)
    tokens = list(tokens)
    body, eta = _reduce_projective(tokens)
    w = GenWord(1, tuple((s, e) for s, e in body), eta, bool(projective))
    if projective:
        return w
    target = eval_tokens(tokens)
    got = eval_word(w)
    if got == target:
        return w
    if -got == target:
        return GenWord(-1, w.body, eta)
    raise AssertionError("normal form does not evaluate to the input")  # pragma: no cover


# left multipliers used for row reduction, with the tokens of their inverses
_U = Mat2(1, 1, 0, 1)  # = -XY
_L = Mat2(1, 0, 1, 1)  # = XY^-1
_INV_TOKENS = {
    ("U", 1): [("-I", 1), ("Y", -1), ("X", -1)],
    ("U", -1): [("-I", 1), ("X", 1), ("Y", 1)],
    ("L", 1): [("Y", 1), ("X", -1)],
    ("L", -1): [("X", 1), ("Y", -1)],
}
_TERMINAL = {
    Mat2(1, 0, 0, 1): [],
    Mat2(0, 1, 1, 0): [("T", 1)],
    Mat2(0, -1, 1, 0): [("X", 1)],
    Mat2(-1, 0, 0, 1): [("X", 1), ("T", 1)],
}


def _trunc_div(a: int, c: int) -> int:
    q = abs(a) // abs(c)
    return q if (a >= 0) == (c >= 0) else -q


def reduction_tokens(A: Mat2) -> list:
    """Token word for ``A`` obtained by Euclidean row reduction.

    Left multiplication by powers of [[1,1],[0,1]] and [[1,0],[1,1]] reduces the
    first column to a unit vector and then clears the remaining off-diagonal
    entry, leaving a signed permutation matrix +-X^d T^e.
    """
    det = A.det
    if det not in (1, -1):
        raise InvalidElement(f"determinant {det} is not +1 or -1")
    steps = []  # (multiplier, power), in the order applied

    def left(name, k):
        nonlocal A
        if k == 0:
            return
        M = mat_pow(_U if name == "U" else _L, k)
        A = mat_mul(M, A)
        steps.append((name, k))

    while A.a != 0 and A.c != 0:
        if abs(A.a) >= abs(A.c):
            left("U", -_trunc_div(A.a, A.c))
        else:
            left("L", -_trunc_div(A.c, A.a))
    if A.c == 0:
        left("U", -_trunc_div(A.b, A.d))
    else:
        left("L", -_trunc_div(A.d, A.b))
    # W A = S  =>  A = W^-1 S with W^-1 = M_1^-1 ... M_k^-1
    out = []
    for name, k in steps:
        out += _INV_TOKENS[(name, 1 if k > 0 else -1)] * abs(k)
    S = A
    if S in _TERMINAL:
        out += _TERMINAL[S]
    else:
        out += [("-I", 1)] + _TERMINAL[-S]
    return out


def canonical_form(A: Mat2, projective: bool = False) -> GenWord:
    w = normalize(reduction_tokens(A), projective=projective)
    if not projective:
        assert eval_word(w) == A
    return w


def _cyclic_core(body: list) -> tuple[list, int]:
    """Cyclically reduce; return the core and how many x letters were peeled
    off the front."""
    body = list(body)
    peeled_x = 0
    while len(body) >= 2:
        (s1, e1), (s2, e2) = body[0], body[-1]
        if s1 != s2 or (s1 == "y" and e1 + e2 != 0):
            break
        if s1 == "x":
            peeled_x += 1
        body = body[1:-1]
    return body, peeled_x


def word_class(w: GenWord, group: str = "GL") -> ClassLabel:
    """Conjugacy class of a canonical word, decided on the word alone."""
    body = list(w.body)
    if w.eta == 0:
        core, peeled_x = _cyclic_core(body)
        if not core:
            pname = "1"
        elif len(core) == 1:
            pname = core[0][0]
        else:
            pname = "infinite"
        if group == "PGL":
            return pgl_label(pname)
        if pname == "1":
            return gl_label("I" if w.sign == 1 else "-I")
        if pname == "x":
            return gl_label("X")
        if pname == "y":
            # w = u y^e u^-1 up to the sign picked up rewriting X^-1 = -X in u^-1
            s = w.sign * (-1) ** peeled_x
            return gl_label("Y" if s == 1 else "Y2")
        return gl_label("infinite")
    if body != body[::-1]:
        return ClassLabel(group, "infinite", None)
    odd_x = len(body) % 2 == 1 and body[len(body) // 2][0] == "x"
    if group == "PGL":
        return pgl_label("xt" if odd_x else "t")
    return gl_label("XT" if odd_x else "T")


def inverse_word(w: GenWord) -> GenWord:
    toks = [(s, -e) for s, e in reversed(w.tokens())]
    return normalize(toks, projective=w.projective)


def multiply(u: GenWord, v: GenWord) -> GenWord:
    return normalize(u.tokens() + v.tokens(), projective=u.projective and v.projective)


def lift(w: GenWord) -> GenWord:
    """The GL word with the same letters as a projective word (sign +1)."""
    return GenWord(1, w.body, w.eta, False)


def project(w: GenWord) -> GenWord:
    return GenWord(1, w.body, w.eta, True)
