"""Textual and JSON forms for scalars, basis objects, elements, tensors.

Grammar summary:
  * scalars: sums of integer monomials  3*q^2 + q - 1
  * words: (2,1,3)
  * trees: | for a leaf, V(t1,...,tr) for a graft
  * multipermutations: [(1,4,6),(2,7),(3,5)]; singleton blocks may be
    bare integers on input, canonical output parenthesizes every block
  * elements: q-monomial-scaled basis terms joined by + and -, the unit
    spelled 1, e.g.  3*q^2*(1,2,1) + (2,1,1) + q*1
  * rank-2 tensors: terms  coeff*left # right  with ' # ' the separator.

Terms of an element render sorted by the text form of the basis object,
exponents descending inside one basis term.
"""

from __future__ import annotations

import re

from .linear import UNIT, Element, Tensor2
from .mperm import mperm_validate
from .qpoly import QPoly
from .st import st_validate
from .pqsym import pf_validate
from .trees import LEAF, tree_validate
from .words import Word


def render_word(w: Word) -> str:
    return "(" + ",".join(str(v) for v in w) + ")"


def render_tree(t) -> str:
    if t == LEAF:
        return "|"
    return "V(" + ",".join(render_tree(c) for c in t) + ")"


def render_mperm(w) -> str:
    return "[" + ",".join(
        "(" + ",".join(str(v) for v in sorted(b)) + ")" for b in w
    ) + "]"


def render_basis(family: str, obj) -> str:
    if family in ("st", "pqsym"):
        return render_word(obj)
    if family == "tree":
        return render_tree(obj)
    if family == "mperm":
        return render_mperm(obj)
    raise ValueError(f"unknown family {family!r}")


def _coeff_basis_text(c: int, e: int, basis_text: str) -> str:
    """One rendered monomial term; never carries a leading +."""
    parts = []
    if e == 0:
        if abs(c) != 1 or basis_text is None:
            parts.append(str(abs(c)))
    else:
        if abs(c) != 1:
            parts.append(str(abs(c)))
        parts.append("q" if e == 1 else f"q^{e}")
    if basis_text is not None:
        parts.append(basis_text)
    if not parts:
        parts.append("1")
    body = "*".join(parts)
    return "-" + body if c < 0 else body


def render_element(el: Element) -> str:
    pieces: list[str] = []
    keyed = sorted(
        el.terms.items(), key=lambda kv: render_basis(el.family, kv[0])
    )
    for obj, coeff in keyed:
        text = render_basis(el.family, obj)
        for e, c in sorted(coeff.m.items(), reverse=True):
            pieces.append(_coeff_basis_text(c, e, text))
    for e, c in sorted(el.unit.m.items(), reverse=True):
        pieces.append(_coeff_basis_text(c, e, "1"))
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


def render_tensor2(t: Tensor2) -> str:
    def slot_text(s):
        return "1" if s is UNIT else render_basis(t.family, s)

    pieces: list[str] = []
    keyed = sorted(
        t.terms.items(),
        key=lambda kv: (slot_text(kv[0][0]), slot_text(kv[0][1])),
    )
    for (l, r), coeff in keyed:
        pair = f"{slot_text(l)} # {slot_text(r)}"
        for e, c in sorted(coeff.m.items(), reverse=True):
            pieces.append(_coeff_basis_text(c, e, pair))
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


# ---------------------------------------------------------------- parsing

_WORD_RE = re.compile(r"\(\s*\d+(?:\s*,\s*\d+)*\s*\)$")


def parse_word(text: str) -> Word:
    text = text.strip()
    if not _WORD_RE.match(text):
        raise ValueError(f"bad word literal: {text!r}")
    return tuple(int(v) for v in text[1:-1].split(","))


def parse_tree(text: str):
    t, rest = _parse_tree_at(text.strip())
    if rest.strip():
        raise ValueError(f"trailing input after tree: {rest!r}")
    return t


def _parse_tree_at(s: str):
    s = s.lstrip()
    if s.startswith("|"):
        return LEAF, s[1:]
    if not s.startswith("V("):
        raise ValueError(f"bad tree literal near {s[:20]!r}")
    s = s[2:]
    kids = []
    while True:
        kid, s = _parse_tree_at(s)
        kids.append(kid)
        s = s.lstrip()
        if s.startswith(","):
            s = s[1:]
            continue
        if s.startswith(")"):
            return tuple(kids), s[1:]
        raise ValueError(f"bad tree literal near {s[:20]!r}")


def parse_mperm(text: str):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad multipermutation literal: {text!r}")
    body = text[1:-1].strip()
    if not body:
        raise ValueError("empty multipermutation")
    blocks = []
    i = 0
    while i < len(body):
        if body[i] == "(":
            j = body.index(")", i)
            blocks.append(frozenset(int(v) for v in body[i + 1 : j].split(",")))
            i = j + 1
        elif body[i].isdigit():
            j = i
            while j < len(body) and body[j].isdigit():
                j += 1
            blocks.append(frozenset({int(body[i:j])}))
            i = j
        elif body[i] in ", ":
            i += 1
        else:
            raise ValueError(f"bad multipermutation literal near {body[i:]!r}")
    return tuple(blocks)


_VALIDATORS = {
    "st": st_validate,
    "pqsym": pf_validate,
    "tree": tree_validate,
    "mperm": mperm_validate,
}


def parse_basis(family: str, text: str):
    if family in ("st", "pqsym"):
        obj = parse_word(text)
    elif family == "tree":
        obj = parse_tree(text)
    elif family == "mperm":
        obj = parse_mperm(text)
    else:
        raise ValueError(f"unknown family {family!r}")
    return _VALIDATORS[family](obj)


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split on +/- at bracket depth 0; returns (sign, chunk) pairs."""
    out = []
    depth = 0
    cur = []
    sign = "+"
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps:
            if "".join(cur).strip():
                out.append((sign, "".join(cur).strip()))
            sign = ch
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        out.append((sign, "".join(cur).strip()))
    return out


def _split_factors(text: str) -> list[str]:
    out = []
    depth = 0
    cur = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch == "*":
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return out


_QPOW_RE = re.compile(r"q(?:\^(\d+))?$")


def _parse_term(family: str, chunk: str):
    """One signed term -> (QPoly coefficient, basis object or None).

    A term with no basis literal is a scalar multiple of the unit, so
    both `q*1` and a bare integer parse as unit terms.
    """
    coeff = QPoly.one()
    obj = None
    for f in _split_factors(chunk):
        if not f:
            raise ValueError(f"empty factor in {chunk!r}")
        m = _QPOW_RE.match(f)
        if m:
            coeff = coeff * QPoly.q_power(int(m.group(1) or 1))
        elif re.fullmatch(r"\d+", f):
            coeff = coeff * QPoly.const(int(f))
        else:
            if obj is not None:
                raise ValueError(f"two basis literals in {chunk!r}")
            obj = parse_basis(family, f)
    return coeff, obj


def parse_element(family: str, text: str) -> Element:
    text = text.strip()
    if text == "0":
        return Element.zero(family)
    terms: dict = {}
    unit = QPoly.zero()
    for sign, chunk in _split_top(text, "+-"):
        coeff, obj = _parse_term(family, chunk)
        if sign == "-":
            coeff = -coeff
        if obj is None:
            unit = unit + coeff
        else:
            terms[obj] = terms.get(obj, QPoly.zero()) + coeff
    return Element(family, terms, unit)


def parse_tensor2(family: str, text: str) -> Tensor2:
    text = text.strip()
    if text == "0":
        return Tensor2(family)
    terms: dict = {}
    for sign, chunk in _split_top(text, "+-"):
        if " # " not in chunk:
            raise ValueError(f"tensor term without separator: {chunk!r}")
        lpart, rpart = chunk.split(" # ", 1)
        coeff, obj = _parse_term(family, lpart.strip())
        left = UNIT if obj is None else obj
        rtext = rpart.strip()
        right = UNIT if rtext == "1" else parse_basis(family, rtext)
        if sign == "-":
            coeff = -coeff
        key = (left, right)
        terms[key] = terms.get(key, QPoly.zero()) + coeff
    return Tensor2(family, terms)


def parse_qpoly(text: str) -> QPoly:
    text = text.strip()
    if text == "0":
        return QPoly.zero()
    out = QPoly.zero()
    for sign, chunk in _split_top(text, "+-"):
        coeff = QPoly.one()
        for f in _split_factors(chunk):
            m = _QPOW_RE.match(f)
            if m:
                coeff = coeff * QPoly.q_power(int(m.group(1) or 1))
            elif re.fullmatch(r"\d+", f):
                coeff = coeff * QPoly.const(int(f))
            else:
                raise ValueError(f"bad scalar factor {f!r}")
        out = out + (-coeff if sign == "-" else coeff)
    return out


def element_to_json(el: Element) -> dict:
    return {
        "algebra": el.family,
        "terms": [
            {"basis": render_basis(el.family, o), "coeff": c.to_pairs()}
            for o, c in sorted(
                el.terms.items(), key=lambda kv: render_basis(el.family, kv[0])
            )
        ],
        "unit": el.unit.to_pairs(),
    }


def tensor2_to_json(t: Tensor2) -> dict:
    def slot_text(s):
        return "1" if s is UNIT else render_basis(t.family, s)

    return {
        "algebra": t.family,
        "terms": [
            {
                "left": slot_text(l),
                "right": slot_text(r),
                "coeff": c.to_pairs(),
            }
            for (l, r), c in sorted(
                t.terms.items(),
                key=lambda kv: (slot_text(kv[0][0]), slot_text(kv[0][1])),
            )
        ],
    }
