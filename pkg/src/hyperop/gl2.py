"""
Exact arithmetic in GL2(Z) and classification of its periodic elements.

Matrices act on integer row vectors from the right, with respect to the
basis (rho2, rho0) of the abelianised free group.  Entries are kept inside
the signed 64-bit range; leaving it raises ``OverflowError``.
"""

from __future__ import annotations

from dataclasses import dataclass

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class InvalidElement(ValueError):
    """A matrix whose determinant is not +1 or -1."""


def _checked(v: int) -> int:
    if not INT64_MIN <= v <= INT64_MAX:
        raise OverflowError(f"matrix entry {v} exceeds 64-bit range")
    return v


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c, self.d):
            _checked(v)

    @property
    def det(self) -> int:
        return _checked(_checked(self.a * self.d) - _checked(self.b * self.c))

    @property
    def trace(self) -> int:
        return _checked(self.a + self.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2":
        det = self.det
        if det not in (1, -1):
            raise InvalidElement(f"determinant {det} is not a unit")
        return Mat2(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def act(self, v: tuple[int, int]) -> tuple[int, int]:
        """Right action on a row vector."""
        x, y = v
        return (_checked(x * self.a + y * self.c), _checked(x * self.b + y * self.d))

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"


I = Mat2(1, 0, 0, 1)
MINUS_I = Mat2(-1, 0, 0, -1)
X = Mat2(0, -1, 1, 0)
Y = Mat2(0, -1, 1, 1)
T = Mat2(0, 1, 1, 0)
XT = Mat2(-1, 0, 0, 1)
Y2 = Mat2(-1, -1, 1, 0)


def mat_mul(l: Mat2, r: Mat2) -> Mat2:
    c = _checked
    return Mat2(
        c(c(l.a * r.a) + c(l.b * r.c)),
        c(c(l.a * r.b) + c(l.b * r.d)),
        c(c(l.c * r.a) + c(l.d * r.c)),
        c(c(l.c * r.b) + c(l.d * r.d)),
    )


def mat_pow(A: Mat2, k: int) -> Mat2:
    if k < 0:
        A, k = A.inverse(), -k
    r = I
    while k:
        if k & 1:
            r = mat_mul(r, A)
        A = mat_mul(A, A)
        k >>= 1
    return r


def parse_matrix(text: str) -> Mat2:
    """Parse ``a,b;c,d``."""
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise ValueError(f"expected two rows in {text!r}")
    try:
        (a, b), (c, d) = ([int(x) for x in r.split(",")] for r in rows)
    except ValueError:
        raise ValueError(f"malformed matrix {text!r}") from None
    return Mat2(a, b, c, d)


@dataclass(frozen=True)
class ClassLabel:
    """A conjugacy class of GL2(Z) or PGL2(Z); ``order`` is None when infinite."""

    group: str
    name: str
    order: int | None

    @property
    def periodic(self) -> bool:
        return self.order is not None

    def __str__(self) -> str:
        return f"class={self.name} order={'infinite' if self.order is None else self.order}"


GL_ORDERS = {"I": 1, "-I": 2, "T": 2, "XT": 2, "Y2": 3, "X": 4, "Y": 6}
PGL_ORDERS = {"1": 1, "x": 2, "t": 2, "xt": 2, "y": 3}

# class representatives, for tests and the CLI
GL_REPS = {"I": I, "-I": MINUS_I, "T": T, "XT": XT, "Y2": Y2, "X": X, "Y": Y}
PGL_REPS = {"1": I, "x": X, "t": T, "xt": XT, "y": Y}


def gl_label(name: str) -> ClassLabel:
    return ClassLabel("GL", name, GL_ORDERS.get(name))


def pgl_label(name: str) -> ClassLabel:
    return ClassLabel("PGL", name, PGL_ORDERS.get(name))


def _require_unit(A: Mat2) -> int:
    det = A.det
    if det not in (1, -1):
        raise InvalidElement(f"determinant {det} is not +1 or -1")
    return det


def _reflection_class(A: Mat2) -> str:
    # the level-2 congruence subgroup contains XT but not T
    return "XT" if A.b % 2 == 0 and A.c % 2 == 0 else "T"


def classify_gl(A: Mat2) -> ClassLabel:
    det = _require_unit(A)
    if A == I:
        return gl_label("I")
    if A == MINUS_I:
        return gl_label("-I")
    tr = A.trace
    if det == 1:
        name = {-1: "Y2", 0: "X", 1: "Y"}.get(tr, "infinite")
    else:
        name = _reflection_class(A) if tr == 0 else "infinite"
    return gl_label(name)


def classify_pgl(A: Mat2) -> ClassLabel:
    det = _require_unit(A)
    if A in (I, MINUS_I):
        return pgl_label("1")
    tr = A.trace
    if det == 1:
        name = {-1: "y", 0: "x", 1: "y"}.get(tr, "infinite")
    else:
        name = _reflection_class(A).lower() if tr == 0 else "infinite"
    return pgl_label(name)


def classify(A: Mat2, group: str = "GL") -> ClassLabel:
    return classify_gl(A) if group == "GL" else classify_pgl(A)
