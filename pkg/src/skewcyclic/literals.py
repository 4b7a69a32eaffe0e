"""Text grammars for fields, elements, polynomials, skew polynomials,
automorphisms, and matrices, as used by the CLI and fixture files.

    field:        GF(4):y^2+y+1         (modulus optional for prime q)
    element:      0 | 1 | 7 | a | a^3
    polynomial:   1+x^2+x^3+x^4 | a^2*z+1   ('*' optional, any term order)
    skew poly:    1+x^2 + z*(x+x^5) + z^2*(1+x^4)
    sigma:        x^5 | sigma:x^5 | perm:(1)(2,3)
    matrix JSON:  {"rows": k, "cols": n, "entries": [["1+z^2", ...], ...]}
"""

from __future__ import annotations

import re

from .automorphisms import (
    Automorphism,
    find_automorphism_for_permutation,
    permutation_from_cycles,
)
from .convolutional import PolyMatrix
from .errors import ParseError, SkewCyclicError
from .fields import FieldSpec, FieldElement, Poly, make_field
from .ring import RingContext, RingElement
from .skew import SkewPoly

_FIELD_RE = re.compile(r"^GF\((\d+)\)(?::(.+))?$")
_ELEM_RE = re.compile(r"^(\d+|a(?:\^(\d+))?)$")
_TERM_RE = re.compile(
    r"^(?P<coeff>\d+|a(?:\^\d+)?)?\s*\*?\s*(?:(?P<var>[a-z])(?:\^(?P<exp>\d+))?)?$"
)


def _prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            deg = 0
            while q % p == 0:
                q //= p
                deg += 1
            if q != 1:
                raise ParseError(f"field size must be a prime power")
            return p, deg
    raise ParseError("field size must be >= 2")


def parse_field(text: str) -> FieldSpec:
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad field literal {text!r}; expected GF(q)[:modulus]")
    q = int(m.group(1))
    p, deg = _prime_power(q)
    if m.group(2) is None:
        return make_field(p, deg)
    mod_poly = _parse_prime_poly(m.group(2), p, "y")
    if len(mod_poly) != deg + 1:
        raise ParseError(f"modulus degree must be {deg} for GF({q})")
    try:
        return make_field(p, deg, mod_poly)
    except SkewCyclicError as exc:
        raise ParseError(str(exc)) from exc


def _parse_prime_poly(text: str, p: int, var: str):
    """Coefficient list over F_p from a string like y^2+y+1."""
    coeffs = {}
    for sign, term in _split_terms(text):
        m = _TERM_RE.match(term)
        if not m or (m.group("var") not in (None, var)):
            raise ParseError(f"bad modulus term {term!r}")
        c = m.group("coeff")
        if c is None:
            c = 1
        elif c.startswith("a"):
            raise ParseError("modulus coefficients must be prime-field integers")
        else:
            c = int(c)
        e = 0
        if m.group("var"):
            e = int(m.group("exp") or 1)
        coeffs[e] = (coeffs.get(e, 0) + sign * c) % p
    out = [0] * (max(coeffs) + 1 if coeffs else 1)
    for e, c in coeffs.items():
        out[e] = c
    return out


def _split_terms(text: str):
    """Top-level '+'/'-' split, honouring parentheses; yields (sign, term)."""
    text = "".join(text.split())
    if not text:
        raise ParseError("empty expression")
    out = []
    depth = 0
    cur = []
    sign = 1
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0:
            if cur:
                out.append((sign, "".join(cur)))
                cur = []
                sign = 1 if ch == "+" else -1
            else:
                sign = sign * (1 if ch == "+" else -1)
            continue
        cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    if cur:
        out.append((sign, "".join(cur)))
    if not out:
        raise ParseError(f"no terms in {text!r}")
    return out


def parse_element(field: FieldSpec, text: str) -> FieldElement:
    m = _ELEM_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad element literal {text!r}")
    tok = m.group(1)
    if tok.isdigit():
        return field.from_int(int(tok))
    k = int(m.group(2)) if m.group(2) else 1
    return field.gen ** k


def parse_poly(field: FieldSpec, text: str, var: str = "x") -> Poly:
    acc = Poly.zero(field)
    for sign, term in _split_terms(text):
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ParseError(f"bad term {term!r}")
        if m.group("var") not in (None, var):
            raise ParseError(f"unexpected variable in {term!r}; wanted {var!r}")
        coeff = (
            parse_element(field, m.group("coeff"))
            if m.group("coeff") is not None
            else field.one
        )
        if sign < 0:
            coeff = -coeff
        exp = 0
        if m.group("var"):
            exp = int(m.group("exp") or 1)
        acc = acc + Poly(field, (0,) * exp + (coeff.code,))
    return acc


def parse_ring_element(ctx: RingContext, text: str) -> RingElement:
    return ctx.from_poly(parse_poly(ctx.field, text, "x"))


def parse_skew(sigma: Automorphism, text: str) -> SkewPoly:
    """Skew-polynomial literal: z^j terms carry parenthesized ring elements."""
    ctx = sigma.context
    parts = {}
    const_terms = []
    for sign, term in _split_terms(text):
        if term.startswith("z"):
            m = re.match(r"^z(?:\^(\d+))?\s*\*?\s*(?:\((?P<inner>.*)\))?$", term)
            if not m:
                raise ParseError(f"bad skew term {term!r}")
            j = int(m.group(1) or 1)
            inner = m.group("inner")
            coeff = ctx.one if inner is None else parse_ring_element(ctx, inner)
            if sign < 0:
                coeff = -coeff
            parts[j] = parts.get(j, ctx.zero) + coeff
        else:
            const_terms.append((sign, term))
    if const_terms:
        expr = "".join(
            ("+" if s > 0 else "-") + t for s, t in const_terms
        ).lstrip("+")
        stripped = expr
        if stripped.startswith("(") and stripped.endswith(")"):
            stripped = stripped[1:-1]
        parts[0] = parts.get(0, ctx.zero) + parse_ring_element(ctx, stripped)
    depth = max(parts) + 1 if parts else 0
    coeffs = [parts.get(j, ctx.zero) for j in range(depth)]
    return SkewPoly(sigma, coeffs)


_PERM_RE = re.compile(r"\(([^()]*)\)")


def parse_sigma(ctx: RingContext, text: str) -> Automorphism:
    text = text.strip()
    if text.startswith("sigma:"):
        text = text[len("sigma:") :]
    if text.startswith("perm:"):
        body = text[len("perm:") :].strip()
        if not re.fullmatch(r"(\([\d,\s]*\))+", body):
            raise ParseError(f"bad permutation literal {body!r}")
        cycles = []
        for grp in _PERM_RE.findall(body):
            items = [int(t) for t in grp.replace(",", " ").split()]
            if items:
                cycles.append(tuple(items))
        perm = permutation_from_cycles(ctx.r, cycles)
        return find_automorphism_for_permutation(ctx, perm)
    image = parse_ring_element(ctx, text)
    return Automorphism(ctx, image)


def matrix_to_dict(M: PolyMatrix) -> dict:
    return {"rows": M.nrows, "cols": M.ncols, "entries": M.to_strings()}


def matrix_from_dict(field: FieldSpec, data: dict) -> PolyMatrix:
    try:
        entries = data["entries"]
        rows, cols = int(data["rows"]), int(data["cols"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix JSON: {exc}") from exc
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ParseError("matrix JSON shape mismatch")
    return PolyMatrix(
        field, [[parse_poly(field, e, "z") for e in row] for row in entries]
    )


def field_to_str(field: FieldSpec) -> str:
    if field.deg == 1:
        return f"GF({field.q})"
    terms = []
    for i, c in enumerate(field.modulus):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}y" if i == 1 else f"{head}y^{i}")
    return f"GF({field.q}):" + "+".join(terms)
