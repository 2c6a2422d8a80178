"""Exact ground fields: the rationals and prime fields F_p.

Rational scalars are plain Python ``int`` or ``fractions.Fraction`` values.
Integral values are kept as ``int`` (``Fraction(n, 1)`` is normalised away),
which keeps the hot loops of identity checking on fast integer arithmetic
while still comparing and hashing consistently with ``Fraction``.
Prime-field scalars are :class:`ModP` instances.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Any

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "ModP",
    "QQ",
    "field_from_json",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Residue class modulo a prime, stored canonically in ``0..p-1``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return f"{self.v} mod {self.p}"


class Field:
    """Common interface of the exact ground fields."""

    characteristic: int
    zero: Any
    one: Any

    def __call__(self, value) -> Any:
        raise NotImplementedError

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return self(self.one / x) if self.characteristic == 0 else self.one / x

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return self(a * self.inv(b))

    def random(self, rng: random.Random, bound: int = 5) -> Any:
        """Small random element (integers in ``[-bound, bound]`` mapped in)."""
        return self(rng.randint(-bound, bound))

    def contains(self, x) -> bool:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0
    zero = 0
    one = 1

    def __call__(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, ModP):
            raise TypeError("cannot coerce a prime-field element into QQ")
        f = Fraction(value)
        return f.numerator if f.denominator == 1 else f

    def parse(self, text: str):
        text = text.strip()
        if "mod" in text:
            raise ValueError(f"not a rational: {text!r}")
        try:
            return self(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {text!r}") from exc

    def format(self, x) -> str:
        x = self(x)
        return str(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return self(Fraction(1) / x)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return self(Fraction(a) / b)

    def to_json(self) -> dict:
        return {"type": "rational"}

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __call__(self, value):
        if isinstance(value, ModP):
            if value.p != self.p:
                raise ValueError(f"element of F_{value.p} given to F_{self.p}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return ModP(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            return ModP(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def parse(self, text: str):
        text = text.strip()
        if "mod" in text:
            left, _, right = text.partition("mod")
            if int(right) != self.p:
                raise ValueError(f"{text!r} is not in F_{self.p}")
            text = left
        try:
            return self(Fraction(text.strip()))
        except ValueError as exc:
            raise ValueError(f"not an element of F_{self.p}: {text!r}") from exc

    def format(self, x) -> str:
        return f"{self(x).v} mod {self.p}"

    def random(self, rng: random.Random, bound: int = 5):
        return ModP(rng.randrange(self.p), self.p)

    def to_json(self) -> dict:
        return {"type": "prime", "p": self.p}

    def contains(self, x) -> bool:
        return isinstance(x, ModP) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("FF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_json(data: dict) -> Field:
    kind = data.get("type")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return PrimeField(int(data["p"]))
    raise ValueError(f"unknown field spec {data!r}")
