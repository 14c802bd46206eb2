"""Exact scalars over the rationals and over prime fields GF(p).

Rationals are ``gmpy2.mpq`` values, which are always stored in lowest terms
with a positive denominator.  Elements of GF(p) are :class:`Residue`
instances holding the canonical representative ``0 <= value < p``.

Both kinds support the ordinary arithmetic operators, so the rest of the
package is written once against ``+ - * /`` and works over either field.
Python ints are accepted as operands and interpreted in the prime subfield.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable

import gmpy2
import numpy as np

from .errors import FieldMismatchError, ScalarParseError

mpq = gmpy2.mpq
_MPQ = type(mpq(0))

_new = object.__new__

_LITERAL = re.compile(r"^\s*(-?)(\d+)(?:\s*/\s*(\d+))?\s*$")


class Residue:
    """Element of GF(p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    @staticmethod
    def _raw(value: int, p: int) -> "Residue":
        r = _new(Residue)
        r.value = value
        r.p = p
        return r

    def _other(self, other: Any) -> int:
        if type(other) is Residue:
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) and GF({other.p}) elements cannot be combined")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, (_MPQ, Fraction, float)):
            raise FieldMismatchError(f"cannot combine GF({self.p}) element with {type(other).__name__}")
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        if type(other) is Residue and other.p == self.p:
            v = self.value + other.value
            r = _new(Residue)
            r.value = v - self.p if v >= self.p else v
            r.p = self.p
            return r
        o = self._other(other)
        if o is NotImplemented:
            return o
        v = self.value + o
        return Residue._raw(v - self.p if v >= self.p else v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        v = self.value - o
        return Residue._raw(v + self.p if v < 0 else v, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        v = o - self.value
        return Residue._raw(v + self.p if v < 0 else v, self.p)

    def __mul__(self, other):
        if type(other) is Residue and other.p == self.p:
            r = _new(Residue)
            r.value = self.value * other.value % self.p
            r.p = self.p
            return r
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue._raw(self.value * o % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Residue._raw(self.value * pow(o, -1, self.p) % self.p, self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue._raw(o, self.p) / self

    def __neg__(self):
        return Residue._raw((-self.value) % self.p, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            if self.value == 0:
                raise ZeroDivisionError(f"division by zero in GF({self.p})")
            return Residue._raw(pow(pow(self.value, -1, self.p), -k, self.p), self.p)
        return Residue._raw(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if type(other) is Residue:
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p))


@dataclass(frozen=True)
class FieldSpec:
    """Which field the scalars live in: ``rational`` or ``prime`` with modulus ``p``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not a prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # construction helpers

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``rational`` / ``Q`` / ``prime:P`` / ``GF(P)``."""
        t = text.strip()
        if t.lower() in ("rational", "q", "qq"):
            return QQ
        m = re.fullmatch(r"(?:prime:|GF\()\s*(\d+)\s*\)?", t, flags=re.IGNORECASE)
        if m:
            return GF(int(m.group(1)))
        raise ValueError(f"cannot parse field {text!r}; expected 'rational' or 'prime:P'")

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        kind = obj.get("kind")
        if kind == "rational":
            return QQ
        if kind == "prime":
            return GF(obj.get("p"))
        raise ValueError(f"unknown field kind {kind!r}")

    def to_json(self) -> dict:
        return {"kind": "rational"} if self.kind == "rational" else {"kind": "prime", "p": self.p}

    def __str__(self) -> str:
        return "rational" if self.kind == "rational" else f"prime:{self.p}"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p  # type: ignore[return-value]

    # elements

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    def __call__(self, value: Any):
        """Coerce an int, Fraction, mpq, literal string or field element into this field."""
        if isinstance(value, str):
            return parse_scalar(value, self)
        if self.kind == "rational":
            if isinstance(value, Residue):
                raise FieldMismatchError(f"GF({value.p}) element is not rational")
            if isinstance(value, float):
                raise TypeError("floating point values are not accepted")
            if isinstance(value, Fraction):
                return mpq(value.numerator, value.denominator)
            return mpq(value)
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) element is not in GF({self.p})")
            return value
        if isinstance(value, (_MPQ, Fraction)):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator {den} is not invertible mod {self.p}")
            return Residue(num * pow(den, -1, self.p), self.p)
        if isinstance(value, float):
            raise TypeError("floating point values are not accepted")
        return Residue(int(value), self.p)

    def contains(self, x: Any) -> bool:
        if self.kind == "rational":
            return isinstance(x, _MPQ)
        return isinstance(x, Residue) and x.p == self.p

    def format(self, x: Any) -> str:
        """Render a scalar in the literal grammar (``int`` or ``int/posint``)."""
        return str(self(x))

    def random(self, rng: random.Random, bound: int = 5):
        """Small random element, for tests and randomized identity checks."""
        if self.kind == "rational":
            return mpq(rng.randint(-bound, bound), rng.randint(1, bound))
        return Residue(rng.randrange(self.p), self.p)  # type: ignore[arg-type]

    def elements(self) -> list:
        if self.kind != "prime":
            raise ValueError("only finite fields can be enumerated")
        return [Residue(v, self.p) for v in range(self.p)]  # type: ignore[arg-type]

    # arrays

    def array(self, values: Iterable) -> np.ndarray:
        """Object array of field elements built from a (nested) sequence."""
        raw = np.array(values, dtype=object)
        out = np.empty(raw.shape, dtype=object)
        for idx, v in np.ndenumerate(raw):
            out[idx] = self(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def coerce_array(self, arr: np.ndarray) -> np.ndarray:
        """Replace stray Python ints (e.g. from empty sums) by field elements."""
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = v if self.contains(v) else self(v)
        return out


QQ = FieldSpec("rational")


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


def field_of(x: Any) -> FieldSpec:
    if isinstance(x, Residue):
        return GF(x.p)
    if isinstance(x, _MPQ):
        return QQ
    raise TypeError(f"{x!r} is not a field element")


def parse_scalar(text: str, field: FieldSpec):
    """Parse ``int`` or ``int/posint`` (optional leading ``-``) into ``field``."""
    m = _LITERAL.match(text)
    if not m:
        raise ScalarParseError(f"malformed scalar literal {text!r}")
    sign, num, den = m.group(1), int(m.group(2)), m.group(3)
    if sign:
        num = -num
    d = int(den) if den is not None else 1
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    if field.kind == "rational":
        return mpq(num, d)
    p = field.p
    if d % p == 0:  # type: ignore[operator]
        raise ZeroDivisionError(f"denominator {d} is not invertible mod {p}")
    return Residue(num * pow(d, -1, p), p)  # type: ignore[arg-type]


def format_scalar(x: Any) -> str:
    return str(x)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arithmetic(a, b, op: str):
    """Apply ``op`` (add, sub, mul, div, neg, inv) after checking both operands share a field.

    ``neg`` and ``inv`` are unary and ignore ``b`` (pass ``None``).
    """
    fa = field_of(a)
    if op == "neg":
        return -a
    if op == "inv":
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return fa.one / a
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    fb = field_of(b)
    if fa != fb:
        raise FieldMismatchError(f"operands from {fa} and {fb}")
    if op == "div" and b == 0:
        raise ZeroDivisionError("division by zero")
    return _OPS[op](a, b)
