"""The q-tridendriform algebra of planar rooted trees.

A tree is the leaf LEAF = () or a tuple of >= 2 subtrees (the unique
decomposition t = graft(t1, ..., tr)).  The degree is leaves - 1; the
degree-n basis has 1, 3, 11, 45, 197, ... elements (super-Catalan).

Products are defined by mutual recursion with the total product
* = < + q. + > acting on child slots, where a leaf slot is absorbing:
| * x = x, x * | = x, | * | = |.  For t = graft(t1..tr), w = graft(w1..wl):

    t < w = graft(t1, ..., t_{r-1}, tr * w)
    t . w = graft(t1, ..., t_{r-1}, tr * w1, w2, ..., wl)
    t > w = graft(t * w1, w2, ..., wl)

The coproduct picks a coproduct term for every child (a leaf child
contributes 1 (x) leaf), multiplies the left parts with *, grafts the
right parts (a unit right part becomes a leaf), and adds t (x) 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from .linear import LEFT, MIDDLE, RIGHT, STAR, UNIT, Element, Tensor2
from .qpoly import QPoly, acc_add, acc_mul_add

FAMILY = "tree"

LEAF: tuple = ()

Tree = tuple

_prod_cache: dict = {}
_star_cache: dict = {}
_cop_cache: dict = {}


def is_tree(t) -> bool:
    if t == LEAF:
        return True
    return isinstance(t, tuple) and len(t) >= 2 and all(is_tree(c) for c in t)


def graft(*children: Tree) -> Tree:
    if len(children) < 2:
        raise ValueError("graft needs at least two subtrees")
    return tuple(children)


def leaves(t: Tree) -> int:
    return 1 if t == LEAF else sum(leaves(c) for c in t)


def tree_degree(t: Tree) -> int:
    return leaves(t) - 1


def corolla(n: int) -> Tree:
    """The degree-n tree with all n+1 leaves on the root."""
    if n < 1:
        raise ValueError("corolla degree must be >= 1")
    return (LEAF,) * (n + 1)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All trees of degree n (leaf alone for n = 0), deterministic order."""
    if n == 0:
        return (LEAF,)
    out: list[Tree] = []
    for r in range(2, n + 2):
        for parts in _compositions(n - r + 1, r):
            for kids in iproduct(*(enumerate_trees(p) for p in parts)):
                out.append(tuple(kids))
    return tuple(out)


def _compositions(total: int, parts: int):
    """Weak compositions of total into parts parts, lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _scale_q(raw: dict, qval: int | None) -> dict:
    if qval is None:
        return {e + 1: c for e, c in raw.items()}
    return {e: c * qval for e, c in raw.items()}


def _star_raw(u: Tree, v: Tree, qval: int | None) -> dict:
    """u * v on child slots; returns dict tree-or-leaf -> raw coeff dict."""
    if u == LEAF:
        return {v: {0: 1}}
    if v == LEAF:
        return {u: {0: 1}}
    key = (u, v, qval)
    hit = _star_cache.get(key)
    if hit is not None:
        return hit
    out: dict = {}
    for t2, c in _prod_raw(LEFT, u, v, qval).items():
        acc_add(out.setdefault(t2, {}), c)
    for t2, c in _prod_raw(RIGHT, u, v, qval).items():
        acc_add(out.setdefault(t2, {}), c)
    for t2, c in _prod_raw(MIDDLE, u, v, qval).items():
        acc_add(out.setdefault(t2, {}), _scale_q(c, qval))
    out = {t2: m for t2, m in out.items() if any(m.values())}
    _star_cache[key] = out
    return out


def _prod_raw(kind: str, t: Tree, w: Tree, qval: int | None) -> dict:
    """Partial product of real trees; dict tree -> raw coeff dict."""
    key = (kind, t, w, qval)
    hit = _prod_cache.get(key)
    if hit is not None:
        return hit
    out: dict = {}
    if kind == LEFT:
        for s, c in _star_raw(t[-1], w, qval).items():
            acc_add(out.setdefault(t[:-1] + (s,), {}), c)
    elif kind == MIDDLE:
        for s, c in _star_raw(t[-1], w[0], qval).items():
            acc_add(out.setdefault(t[:-1] + (s,) + w[1:], {}), c)
    elif kind == RIGHT:
        for s, c in _star_raw(t, w[0], qval).items():
            acc_add(out.setdefault((s,) + w[1:], {}), c)
    else:
        raise ValueError(f"unknown kind {kind}")
    _prod_cache[key] = out
    return out


def tree_product(kind: str, t: Tree, w: Tree, qval: int | None = None) -> Element:
    if t == LEAF or w == LEAF:
        raise ValueError("tree products take trees of degree >= 1")
    if kind == STAR:
        return Element.from_raw(FAMILY, _star_raw(t, w, qval))
    return Element.from_raw(FAMILY, _prod_raw(kind, t, w, qval))


def tree_coproduct(t: Tree, qval: int | None = None) -> Tensor2:
    """Recursive coproduct; includes both boundary terms."""
    key = (t, qval)
    hit = _cop_cache.get(key)
    if hit is not None:
        return hit
    per_child = []
    for c in t:
        if c == LEAF:
            per_child.append([(UNIT, LEAF, QPoly.one())])
        else:
            choices = []
            for (l, r), coeff in tree_coproduct(c, qval).terms.items():
                choices.append((l, LEAF if r is UNIT else r, coeff))
            per_child.append(choices)
    raw: dict = {}
    for combo in iproduct(*per_child):
        lefts = [l for (l, _, _) in combo if l is not UNIT]
        coeff = QPoly.one()
        for (_, _, c) in combo:
            coeff = coeff * c
        right = tuple(r for (_, r, _) in combo)
        left_el = _star_elements(lefts, qval)
        for obj, cl in left_el.terms.items():
            m = raw.setdefault((obj, right), {})
            for e, cc in (cl * coeff).m.items():
                m[e] = m.get(e, 0) + cc
        if left_el.unit:
            m = raw.setdefault((UNIT, right), {})
            for e, cc in (left_el.unit * coeff).m.items():
                m[e] = m.get(e, 0) + cc
    m = raw.setdefault((t, UNIT), {})
    m[0] = m.get(0, 0) + 1
    out = Tensor2.from_raw(FAMILY, raw)
    _cop_cache[key] = out
    return out


def _star_elements(ts: list, qval: int | None) -> Element:
    """Fold the * product over a list of basis trees (empty -> unit)."""
    if not ts:
        return Element.unit_element(FAMILY)
    acc = {ts[0]: {0: 1}}
    for nxt in ts[1:]:
        new: dict = {}
        for obj, c in acc.items():
            for o2, c2 in _star_raw(obj, nxt, qval).items():
                m = new.setdefault(o2, {})
                acc_mul_add(m, c, c2)
        acc = new
    return Element.from_raw(FAMILY, acc)


def tree_basis(n: int) -> tuple[Tree, ...]:
    return enumerate_trees(n)


def tree_validate(t) -> Tree:
    if t == LEAF or not is_tree(t):
        raise ValueError(f"not a tree of degree >= 1: {t!r}")
    return t
