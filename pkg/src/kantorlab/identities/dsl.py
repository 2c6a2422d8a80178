"""Text syntax for identities.

::

    identity := expr ('=' expr)?
    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := (coeff '*')* factor | '0'
    factor   := var | prod '(' expr ',' expr ')' | '(' expr ')'
              | 'assoc' '(' prod ';' expr ',' expr ',' expr ')'
              | 'comm' '(' prod ';' expr ',' expr ')'
              | 'cyc' '(' var ',' var ',' var ')' '{' expr '}'
    coeff    := int ('/' int)? | '@' param

Products are bilinear, so ``m(x + y, z)`` expands.  ``cyc(a,b,c){e}`` is the
cyclic sum ``e + e[a->b,b->c,c->a] + e[a->c,b->a,c->b]``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Tuple

from ..poly import Poly
from .expr import PARAM_PREFIX, IdentityExpr, Prod, Term, Var, param_symbol, rename

__all__ = ["parse_identity", "format_identity", "IdentitySyntaxError"]

_RESERVED = {"assoc", "comm", "cyc"}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[@()+\-*/=,;{}])|(?P<bad>\S))"
)


class IdentitySyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


Expansion = Dict[Term, object]


def _add(a: Expansion, b: Expansion, sign=1) -> Expansion:
    out = dict(a)
    for t, c in b.items():
        out[t] = out.get(t, 0) + sign * c
        if not out[t]:
            del out[t]
    return out


def _scale(a: Expansion, k) -> Expansion:
    return {t: c * k for t, c in a.items() if c * k}


def _product(op: str, a: Expansion, b: Expansion) -> Expansion:
    out: Expansion = {}
    for t1, c1 in a.items():
        for t2, c2 in b.items():
            t = Prod(op, t1, t2)
            out[t] = out.get(t, 0) + c1 * c2
            if not out[t]:
                del out[t]
    return out


def _rename_exp(a: Expansion, mapping) -> Expansion:
    out: Expansion = {}
    for t, c in a.items():
        nt = rename(t, mapping)
        out[nt] = out.get(nt, 0) + c
        if not out[nt]:
            del out[nt]
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            if m.group("bad"):
                raise IdentitySyntaxError(f"unexpected character {m.group('bad')!r}", m.start("bad"), text)
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else ("eof", "", len(self.text))

    def error(self, msg):
        raise IdentitySyntaxError(msg, self.peek()[2], self.text)

    def expect(self, sym):
        kind, val, _ = self.peek()
        if kind != "sym" or val != sym:
            self.error(f"expected {sym!r}, found {val or 'end of input'!r}")
        self.i += 1

    def accept(self, sym) -> bool:
        kind, val, _ = self.peek()
        if kind == "sym" and val == sym:
            self.i += 1
            return True
        return False

    def ident(self) -> str:
        kind, val, _ = self.peek()
        if kind != "id":
            self.error(f"expected a name, found {val or 'end of input'!r}")
        self.i += 1
        return val

    def identity(self) -> Expansion:
        lhs = self.expr()
        if self.accept("="):
            rhs = self.expr()
            lhs = _add(lhs, rhs, -1)
        if self.peek()[0] != "eof":
            self.error(f"unexpected {self.peek()[1]!r}")
        return lhs

    def expr(self) -> Expansion:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        total = _scale(self.term(), sign)
        while True:
            if self.accept("+"):
                total = _add(total, self.term())
            elif self.accept("-"):
                total = _add(total, self.term(), -1)
            else:
                return total

    def coeff(self):
        kind, val, _ = self.peek()
        if kind == "num":
            self.i += 1
            num = int(val)
            if self.peek()[1] == "/" and self.peek(1)[0] == "num":
                self.i += 1
                den = int(self.peek()[1])
                self.i += 1
                if den == 0:
                    self.error("zero denominator")
                return Fraction(num, den)
            return num
        if kind == "sym" and val == "@":
            self.i += 1
            return param_symbol(self.ident())
        return None

    def term(self) -> Expansion:
        k = 1
        while True:
            save = self.i
            c = self.coeff()
            if c is None:
                break
            if self.accept("*"):
                k = k * c
                continue
            if c == 0 and not isinstance(c, Poly):
                return {}
            self.i = save
            self.error("coefficient must be followed by '*'")
        return _scale(self.factor(), k)

    def factor(self) -> Expansion:
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        name = self.ident()
        if name == "assoc" and self.peek()[1] == "(":
            self.expect("(")
            p = self.ident()
            self.expect(";")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(",")
            c = self.expr()
            self.expect(")")
            return _add(_product(p, _product(p, a, b), c), _product(p, a, _product(p, b, c)), -1)
        if name == "comm" and self.peek()[1] == "(":
            self.expect("(")
            p = self.ident()
            self.expect(";")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return _add(_product(p, a, b), _product(p, b, a), -1)
        if name == "cyc" and self.peek()[1] == "(":
            self.expect("(")
            a = self.ident()
            self.expect(",")
            b = self.ident()
            self.expect(",")
            c = self.ident()
            self.expect(")")
            self.expect("{")
            body = self.expr()
            self.expect("}")
            out = _add(body, _rename_exp(body, {a: b, b: c, c: a}))
            return _add(out, _rename_exp(body, {a: c, b: a, c: b}))
        if self.peek()[1] == "(" and self.peek()[0] == "sym":
            if name in _RESERVED:
                self.error(f"{name!r} is reserved")
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return _product(name, a, b)
        if name in _RESERVED:
            self.error(f"{name!r} is reserved")
        return {Var(name): 1}


def parse_identity(text: str, name: str = "", variables=None) -> IdentityExpr:
    """Parse the identity DSL into an expanded :class:`IdentityExpr`."""
    p = _Parser(text)
    if not p.toks:
        raise IdentitySyntaxError("empty identity", 0, text)
    exp = p.identity()
    return IdentityExpr([(c, t) for t, c in exp.items()], variables, name=name)


def _coeff_parts(c):
    """Split a coefficient into ``(rational, [param names])`` monomials."""
    if isinstance(c, Poly):
        out = []
        for m, q in c.sorted_terms():
            names = []
            for pname, e in sorted(_poly_monomial(c, m).items()):
                names += [pname[len(PARAM_PREFIX):]] * e
            out.append((q, names))
        return out
    return [(c, [])]


def _poly_monomial(p: Poly, mono: int):
    from ..poly import _NAMES, _exponents

    return {_NAMES[i]: e for i, e in _exponents(mono).items()}


def format_identity(e: IdentityExpr) -> str:
    if not e.terms:
        return "0"
    parts: List[str] = []
    for c, t in e.terms:
        for q, names in _coeff_parts(c):
            neg = q < 0
            mag = -q if neg else q
            factors = ([] if mag == 1 else [str(mag)]) + [f"@{n}" for n in names]
            body = "*".join(factors + [str(t)])
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
