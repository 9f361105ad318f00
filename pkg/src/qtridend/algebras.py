"""Uniform handles over the four bialgebras and element-level operations.

An AlgebraHandle bundles the basis enumerator, degree, the basis-level
products (by kind) and the coproduct of one family behind a common
signature, so the brace/projector layer and the verification harness can
be written once.  qval = None means symbolic coefficients in q; an int
specializes every weight at that value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import mperm, pqsym, st, trees
from .linear import (
    MIDDLE,
    RIGHT,
    STAR,
    UNIT,
    Element,
    Tensor2,
    bilinear_extend,
    tensor_of,
)
from .qpoly import QPoly


@dataclass(frozen=True)
class AlgebraHandle:
    name: str
    basis: Callable
    degree: Callable
    product: Callable      # (kind, x, y, qval) -> Element
    coproduct: Callable    # (x, qval) -> Tensor2
    validate: Callable
    product_oracle: Callable | None = None
    graded: bool = True


def _st_handle() -> AlgebraHandle:
    return AlgebraHandle(
        name="st",
        basis=st.st_basis,
        degree=st.st_degree,
        product=lambda kind, x, y, qval=None: st.st_product(kind, x, y, qval),
        coproduct=lambda x, qval=None: st.st_coproduct(x),
        validate=st.st_validate,
        product_oracle=lambda kind, x, y, qval=None: st.st_product_oracle(
            kind, x, y, qval
        ),
    )


def _pqsym_handle() -> AlgebraHandle:
    return AlgebraHandle(
        name="pqsym",
        basis=pqsym.pf_basis,
        degree=pqsym.pf_degree,
        product=lambda kind, x, y, qval=None: pqsym.pf_product(kind, x, y, qval),
        coproduct=lambda x, qval=None: pqsym.pf_coproduct(x),
        validate=pqsym.pf_validate,
        product_oracle=lambda kind, x, y, qval=None: pqsym.pf_product_oracle(
            kind, x, y, qval
        ),
    )


def _tree_handle() -> AlgebraHandle:
    return AlgebraHandle(
        name="tree",
        basis=trees.tree_basis,
        degree=trees.tree_degree,
        product=lambda kind, x, y, qval=None: trees.tree_product(kind, x, y, qval),
        coproduct=lambda x, qval=None: trees.tree_coproduct(x, qval),
        validate=trees.tree_validate,
    )


def _mperm_handle() -> AlgebraHandle:
    return AlgebraHandle(
        name="mperm",
        basis=mperm.mperm_basis,
        degree=mperm.mperm_degree,
        product=lambda kind, x, y, qval=None: mperm.mperm_product(kind, x, y, qval),
        coproduct=lambda x, qval=None: mperm.mperm_coproduct(x),
        validate=mperm.mperm_validate,
        product_oracle=lambda kind, x, y, qval=None: mperm.mperm_product_oracle(
            kind, x, y, qval
        ),
        graded=False,
    )


_REGISTRY: dict[str, AlgebraHandle] = {}


def get_algebra(name: str) -> AlgebraHandle:
    if name not in _REGISTRY:
        maker = {
            "st": _st_handle,
            "pqsym": _pqsym_handle,
            "tree": _tree_handle,
            "mperm": _mperm_handle,
        }.get(name)
        if maker is None:
            raise ValueError(f"unknown algebra {name!r}")
        _REGISTRY[name] = maker()
    return _REGISTRY[name]


ALGEBRA_NAMES = ("st", "pqsym", "tree", "mperm")


def q_scalar(qval: int | None) -> QPoly:
    """The scalar q itself, under the current specialization."""
    return QPoly.q_power(1) if qval is None else QPoly.const(qval)


def el_product(
    h: AlgebraHandle, kind: str, a: Element, b: Element, qval: int | None = None
) -> Element:
    return bilinear_extend(lambda x, y: h.product(kind, x, y, qval), kind, a, b)


def el_star(h: AlgebraHandle, a: Element, b: Element, qval: int | None = None) -> Element:
    return el_product(h, STAR, a, b, qval)


def el_rtilde(h: AlgebraHandle, a: Element, b: Element, qval: int | None = None) -> Element:
    """The dendriform right half > + q. with unit conventions of >."""
    out = el_product(h, RIGHT, a, b, qval)
    mid = el_product(h, MIDDLE, a, b, qval)
    if not mid.is_zero():
        out = out + mid.scale(q_scalar(qval))
    return out


def slot_element(h: AlgebraHandle, slot) -> Element:
    if slot is UNIT:
        return Element.unit_element(h.name)
    return Element.basis(h.name, slot)


def el_coproduct(h: AlgebraHandle, el: Element, qval: int | None = None) -> Tensor2:
    """Linear extension of the coproduct, with Delta(1) = 1 (x) 1."""
    raw: dict = {}
    for o, c in el.terms.items():
        for k2, c2 in h.coproduct(o, qval).terms.items():
            m = raw.setdefault(k2, {})
            for e, cc in (c * c2).m.items():
                m[e] = m.get(e, 0) + cc
    if el.unit:
        m = raw.setdefault((UNIT, UNIT), {})
        for e, cc in el.unit.m.items():
            m[e] = m.get(e, 0) + cc
    return Tensor2.from_raw(h.name, raw)


def reduced_coproduct(h: AlgebraHandle, obj, qval: int | None = None) -> Tensor2:
    """Interior terms of the coproduct of a basis object."""
    return h.coproduct(obj, qval).interior()


def compat_rhs(
    h: AlgebraHandle, kind: str, x, y, qval: int | None = None
) -> Tensor2:
    """(x_(1) * y_(1)) (x) (x_(2) o y_(2)) with the boundary convention
    (x * y) (x) (1 o 1) := (x o y) (x) 1, for basis objects x, y."""
    dx = h.coproduct(x, qval)
    dy = h.coproduct(y, qval)
    acc = Tensor2(h.name)
    for (x1, x2), cx in dx.terms.items():
        for (y1, y2), cy in dy.terms.items():
            c = cx * cy
            if x2 is UNIT and y2 is UNIT:
                left = el_product(h, kind, slot_element(h, x1), slot_element(h, y1), qval)
                acc = acc + tensor_of(left, Element.unit_element(h.name)).scale(c)
            else:
                left = el_star(h, slot_element(h, x1), slot_element(h, y1), qval)
                right = el_product(
                    h, kind, slot_element(h, x2), slot_element(h, y2), qval
                )
                if left.is_zero() or right.is_zero():
                    continue
                acc = acc + tensor_of(left, right).scale(c)
    return acc
