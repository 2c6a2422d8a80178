"""Sparse multivariate polynomials with exact coefficients.

Indeterminates live in one process-wide registry so that polynomials built
by unrelated code (a generic seed ``u0..u7`` and generic arguments
``x0..x7``) multiply without any ring bookkeeping.  A monomial is packed into
a single Python int, ``_BITS`` bits of exponent per registered variable, so
monomial multiplication is integer addition.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping

from .fields import ModP, QQ, Field

__all__ = ["Poly", "var", "variables", "is_poly", "parse_poly", "natural_key"]

_BITS = 16
_MASK = (1 << _BITS) - 1

_NAMES: list = []
_INDEX: Dict[str, int] = {}


def _register(name: str) -> int:
    idx = _INDEX.get(name)
    if idx is None:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ValueError(f"bad indeterminate name {name!r}")
        idx = len(_NAMES)
        _NAMES.append(name)
        _INDEX[name] = idx
    return idx


def natural_key(name: str):
    """Sort key putting ``u2`` before ``u10``."""
    m = re.fullmatch(r"(.*?)(\d*)", name)
    head, digits = m.group(1), m.group(2)
    return (head, int(digits) if digits else -1, name)


def _exponents(mono: int) -> Dict[int, int]:
    out = {}
    idx = 0
    while mono:
        e = mono & _MASK
        if e:
            out[idx] = e
        mono >>= _BITS
        idx += 1
    return out


def _mono_from(exps: Mapping[str, int]) -> int:
    mono = 0
    for name, e in exps.items():
        if e < 0 or e > _MASK:
            raise ValueError("exponent out of range")
        if e:
            mono += e << (_BITS * _register(name))
    return mono


def _mono_degree(mono: int) -> int:
    return sum(_exponents(mono).values())


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, ModP)) and not isinstance(x, bool)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps packed monomials to coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[int, object] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name: str, one=1) -> "Poly":
        return cls._raw({1 << (_BITS * _register(name)): one})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> "Poly":
        return cls._raw({_mono_from(exps): coeff} if coeff else {})

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _terms_of(x) -> dict | None:
        if isinstance(x, Poly):
            return x.terms
        if _is_scalar(x):
            return {0: x} if x else {}
        return None

    def __add__(self, other):
        ot = self._terms_of(other)
        if ot is None:
            return NotImplemented
        if not ot:
            return self
        out = dict(self.terms)
        for m, c in ot.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        ot = self._terms_of(other)
        if ot is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in ot.items():
            v = out.get(m)
            if v is None:
                out[m] = -c
            else:
                v = v - c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return Poly._raw({})
            out = {}
            for m, c in self.terms.items():
                v = c * other
                if v:
                    out[m] = v
            return Poly._raw(out)
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = {}
        addmul_into(out, self.terms, other.terms)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        if isinstance(other, ModP):
            return self * (1 / other)
        return Poly._raw({m: QQ(Fraction(c) / other) if not isinstance(c, ModP) else c / other
                          for m, c in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        one = next(iter(self.terms.values()), 1)
        result = Poly.const(one / one if isinstance(one, ModP) else 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        ot = self._terms_of(other)
        if ot is None:
            return NotImplemented
        return self.terms == ot

    def __hash__(self):
        if self._hash is None:
            if len(self.terms) == 0:
                self._hash = hash(0)
            elif len(self.terms) == 1 and 0 in self.terms:
                self._hash = hash(self.terms[0])
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self, zero=0):
        return self.terms.get(0, zero)

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=-1)

    def variables(self) -> set:
        seen = 0
        for m in self.terms:
            seen |= m
        names = set()
        for idx in _exponents(_spread(seen)):
            names.add(_NAMES[idx])
        return names

    def items(self):
        """``(exponent dict by name, coefficient)`` pairs."""
        for m, c in self.terms.items():
            yield {_NAMES[i]: e for i, e in _exponents(m).items()}, c

    # -- substitution -------------------------------------------------------
    def subs(self, values: Mapping[str, object]):
        """Substitute scalars or polynomials for some indeterminates."""
        idx_values = {_INDEX[n]: v for n, v in values.items() if n in _INDEX}
        out = Poly._raw({})
        cache: dict = {}
        for m, c in self.terms.items():
            rest = 0
            factor = None
            for i, e in _exponents(m).items():
                if i in idx_values:
                    key = (i, e)
                    val = cache.get(key)
                    if val is None:
                        base = idx_values[i]
                        val = base ** e if e > 1 else base
                        cache[key] = val
                    factor = val if factor is None else factor * val
                else:
                    rest += e << (_BITS * i)
            term = Poly._raw({rest: c})
            if factor is not None:
                term = term * factor
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, object], zero=0):
        """Full substitution; returns a scalar."""
        res = self.subs(values)
        if not res.is_constant():
            missing = sorted(res.variables(), key=natural_key)
            raise ValueError(f"unassigned indeterminates {missing}")
        return res.constant_value(zero)

    def split(self, names: Iterable[str]) -> Dict[int, "Poly"]:
        """Group terms by their monomial in ``names``.

        Returns packed monomial in ``names`` -> coefficient polynomial in the
        remaining indeterminates.
        """
        sel = 0
        for n in names:
            if n in _INDEX:
                sel |= _MASK << (_BITS * _INDEX[n])
        groups: Dict[int, dict] = {}
        for m, c in self.terms.items():
            key = m & sel
            groups.setdefault(key, {})[m & ~sel] = c
        return {k: Poly._raw(v) for k, v in groups.items()}

    # -- printing -------------------------------------------------------------
    def sorted_terms(self):
        """Terms in graded-lexicographic order (highest first)."""

        def key(item):
            exps = _exponents(item[0])
            names = sorted(((_NAMES[i], e) for i, e in exps.items()), key=lambda t: natural_key(t[0]))
            total = sum(exps.values())
            # grlex: higher total degree first, then lex with earlier variables dominant
            return (-total, tuple((natural_key(n), -e) for n, e in names))

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            exps = _exponents(m)
            names = sorted(((_NAMES[i], e) for i, e in exps.items()), key=lambda t: natural_key(t[0]))
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in names)
            cval = c.v if isinstance(c, ModP) else c
            neg = cval < 0 if not isinstance(c, ModP) else False
            mag = -cval if neg else cval
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r})"


def _spread(mask: int) -> int:
    # turn any nonzero exponent field into exponent 1, for index extraction
    out = 0
    idx = 0
    while mask:
        if mask & _MASK:
            out |= 1 << (_BITS * idx)
        mask >>= _BITS
        idx += 1
    return out


def addmul_into(acc: dict, a: dict, b: dict, scale=None) -> None:
    """``acc += a * b (* scale)`` on raw term dicts, dropping cancelled terms."""
    get = acc.get
    for m1, c1 in a.items():
        if scale is not None:
            c1 = c1 * scale
        for m2, c2 in b.items():
            k = m1 + m2
            v = get(k)
            if v is None:
                acc[k] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    acc[k] = v
                else:
                    del acc[k]


def var(name: str, one=1) -> Poly:
    return Poly.var(name, one)


def variables(prefix: str, n: int, one=1) -> list:
    return [Poly.var(f"{prefix}{i}", one) for i in range(n)]


def is_poly(x) -> bool:
    return isinstance(x, Poly)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-])|(.))")


def parse_poly(text: str, field: Field = QQ):
    """Parse ``"2*u0*u1^2 - 1/3*u2 + 5"``; returns a scalar if constant."""
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.group(6) is not None:
            raise ValueError(f"bad polynomial syntax at {pos}: {text!r}")
        tokens.append(m)
        pos = m.end()
    total = Poly._raw({})
    sign = 1
    i = 0
    expect_term = True
    while i < len(tokens):
        t = tokens[i]
        if t.group(5):
            sign = -sign if t.group(5) == "-" else sign
            i += 1
            expect_term = True
            continue
        if not expect_term:
            raise ValueError(f"missing operator in {text!r}")
        coeff = field(1)
        exps: Dict[str, int] = {}
        while True:
            t = tokens[i]
            if t.group(1):
                coeff = coeff * field(Fraction(t.group(1)))
                i += 1
            elif t.group(2):
                name = t.group(2)
                e = 1
                i += 1
                if i < len(tokens) and tokens[i].group(3):
                    e = int(tokens[i + 1].group(1))
                    i += 2
                exps[name] = exps.get(name, 0) + e
            else:
                raise ValueError(f"bad polynomial syntax in {text!r}")
            if i < len(tokens) and tokens[i].group(4):
                i += 1
                continue
            break
        total = total + Poly.monomial(exps, coeff * sign if sign == 1 else -coeff)
        sign = 1
        expect_term = False
    if total.is_constant():
        return field(total.constant_value(0)) if total.terms else field.zero
    return total
