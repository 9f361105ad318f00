"""Exact univariate polynomials in the parameter q with integer coefficients.

A polynomial is stored sparsely as a dict mapping exponent -> coefficient,
with zero coefficients never stored.  Coefficients are arbitrary-precision
Python ints, so every computation in the package is exact.

The QPoly class is immutable by convention: no method mutates self, and the
internal dict is never handed out for writing.  Hot loops elsewhere in the
package accumulate into raw exponent dicts and wrap them in QPoly at the end;
the raw-dict helpers for that live here as module functions.
"""

from __future__ import annotations


class QPoly:
    __slots__ = ("m",)

    def __init__(self, m: dict[int, int] | None = None):
        self.m = {e: c for e, c in (m or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls({0: c})

    @classmethod
    def q_power(cls, e: int, c: int = 1) -> "QPoly":
        if e < 0:
            raise ValueError("negative q exponent")
        return cls({e: c})

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    def is_zero(self) -> bool:
        return not self.m

    def __bool__(self) -> bool:
        return bool(self.m)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.m == ({0: other} if other else {})
        if isinstance(other, QPoly):
            return self.m == other.m
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.m.items()))

    def __add__(self, other: "QPoly") -> "QPoly":
        return QPoly(qp_add(self.m, other.m))

    def __sub__(self, other: "QPoly") -> "QPoly":
        out = dict(self.m)
        for e, c in other.m.items():
            nc = out.get(e, 0) - c
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self.m.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self.m.items()})
        return QPoly(qp_mul(self.m, other.m))

    __rmul__ = __mul__

    def shift(self, e: int) -> "QPoly":
        """Multiply by q^e."""
        if e == 0:
            return self
        return QPoly({ex + e: c for ex, c in self.m.items()})

    def eval(self, q: int):
        return qp_eval(self.m, q)

    def degree(self) -> int:
        """Largest exponent, or -1 for the zero polynomial."""
        return max(self.m) if self.m else -1

    def items_sorted(self) -> list[tuple[int, int]]:
        return sorted(self.m.items())

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [exponent, coefficient] pairs sorted by exponent."""
        return [[e, c] for e, c in sorted(self.m.items())]

    @classmethod
    def from_pairs(cls, pairs) -> "QPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out)

    def __str__(self) -> str:
        return render_qpoly(self)

    def __repr__(self) -> str:
        return f"QPoly({self.m!r})"


def qp_add(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for e, c in b.items():
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        elif e in out:
            del out[e]
    return out


def qp_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            nc = out.get(e, 0) + ca * cb
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
    return out


def qp_eval(m: dict[int, int], q: int) -> int:
    """Horner evaluation over the sparse exponent list."""
    if not m:
        return 0
    acc = 0
    prev = None
    for e in sorted(m, reverse=True):
        if prev is not None:
            acc *= q ** (prev - e)
        acc += m[e]
        prev = e
    return acc * q ** prev


def acc_add(dst: dict[int, int], src: dict[int, int], shift: int = 0, scale: int = 1) -> None:
    """dst += q^shift * scale * src, in place on a raw exponent dict."""
    for e, c in src.items():
        k = e + shift
        nc = dst.get(k, 0) + c * scale
        if nc:
            dst[k] = nc
        elif k in dst:
            del dst[k]


def acc_mul_add(dst: dict[int, int], a: dict[int, int], b: dict[int, int]) -> None:
    """dst += a * b, in place on a raw exponent dict."""
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = ea + eb
            nc = dst.get(k, 0) + ca * cb
            if nc:
                dst[k] = nc
            elif k in dst:
                del dst[k]


def term_text(c: int, e: int) -> str:
    """Render one monomial c*q^e without a leading sign for c > 0."""
    if e == 0:
        return str(c)
    q = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return q
    if c == -1:
        return f"-{q}"
    return f"{c}*{q}"


def render_qpoly(p: QPoly) -> str:
    if not p.m:
        return "0"
    parts = []
    for e, c in sorted(p.m.items(), reverse=True):
        t = term_text(c, e)
        if not parts:
            parts.append(t)
        elif t.startswith("-"):
            parts.append("- " + t[1:])
        else:
            parts.append("+ " + t)
    return " ".join(parts)
