"""Exact coefficient fields: the rationals, cyclotomic fields and a rational
function field in one variable.

Every scalar in the library lives in one of these three fields.  Arithmetic is
exact, equality is structural equality of canonical forms, and elements of
different fields (or of cyclotomic fields of different order) never coerce
into one another: mixing them raises :class:`MixedFields`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Scalar = Union[int, Fraction, str]


class FieldError(Exception):
    pass


class MixedFields(FieldError):
    """Arithmetic between elements of different fields is a usage error."""


class DivisionByZero(FieldError):
    pass


class LiteralError(FieldError):
    """A textual or JSON literal does not parse in the declared field."""


# ---------------------------------------------------------------------------
# Dense polynomials over Q: tuples of Fractions, constant term first, no
# trailing zeros.  The empty tuple is the zero polynomial.
# ---------------------------------------------------------------------------

def _trim(coeffs) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _padd(f, g):
    n = max(len(f), len(g))
    return _trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def _pneg(f):
    return tuple(-c for c in f)


def _psub(f, g):
    return _padd(f, _pneg(g))


def _pmul(f, g):
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return _trim(out)


def _pdivmod(f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    lead = g[-1]
    while len(r) >= len(g) and _trim(r):
        r = list(_trim(r))
        if len(r) < len(g):
            break
        k = len(r) - len(g)
        c = r[-1] / lead
        q[k] = c
        for j, b in enumerate(g):
            r[k + j] -= c * b
        r = r[:-1]
    return _trim(q), _trim(r)


def _pmonic(f):
    if not f:
        return f
    lead = f[-1]
    return tuple(c / lead for c in f)


def _pgcd(f, g):
    a, b = f, g
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _pxgcd(f, g):
    """Return (s, t, d) with s*f + t*g = d, d monic."""
    old_r, r = f, g
    old_s, s = (Fraction(1),), ()
    old_t, t = (), (Fraction(1),)
    while r:
        q, rem = _pdivmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _psub(old_s, _pmul(q, s))
        old_t, t = t, _psub(old_t, _pmul(q, t))
    if not old_r:
        return old_s, old_t, old_r
    lead = old_r[-1]
    scale = ((Fraction(1) / lead),)
    return _pmul(scale, old_s), _pmul(scale, old_t), _pmonic(old_r)


def _pstr(f, var: str) -> str:
    if not f:
        return "0"
    parts = []
    for i, c in enumerate(f):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """The n-th cyclotomic polynomial over Q, by exact division of x^n - 1
    by the cyclotomic polynomials of the proper divisors of n."""
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    if n == 1:
        return (Fraction(-1), Fraction(1))
    xn1 = tuple(
        Fraction(-1) if i == 0 else (Fraction(1) if i == n else Fraction(0))
        for i in range(n + 1)
    )
    quot = xn1
    for d in range(1, n):
        if n % d == 0:
            quot, rem = _pdivmod(quot, cyclotomic_polynomial(d))
            assert not rem
    return quot


def _parse_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise LiteralError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise LiteralError(f"not a rational literal: {value!r}") from exc
    raise LiteralError(f"not a rational literal: {value!r}")


class FieldElement:
    """An immutable scalar attached to its field.  Supports +, -, *, /, **
    with other elements of the same field (or plain int / Fraction)."""

    __slots__ = ("field", "payload")

    def __init__(self, field: "Field", payload):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"cannot mix {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.payload, o.payload))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.payload, o.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.payload))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        acc = self.field.one
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero(f"zero has no inverse in {self.field}")
        return FieldElement(self.field, self.field._inv(self.payload))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.payload)

    def is_one(self) -> bool:
        return self == self.field.one

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.payload == other.payload

    def __hash__(self):
        return hash((self.field, self.payload))

    def to_literal(self):
        """Canonical JSON-serializable literal for this element."""
        return self.field._literal(self.payload)

    def __str__(self):
        return self.field._str(self.payload)

    def __repr__(self):
        return f"<{self} in {self.field}>"


class Field:
    """Base class of the three supported coefficient fields."""

    kind: str = ""

    def element(self, value) -> FieldElement:
        """Build an element from an int, Fraction, string or JSON literal."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"literal belongs to {value.field}, not {self}")
            return value
        return FieldElement(self, self._parse(value))

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    def to_json(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_json(desc: dict) -> "Field":
        if not isinstance(desc, dict) or "kind" not in desc:
            raise LiteralError("field descriptor must be an object with a 'kind'")
        kind = desc["kind"]
        if kind == "rational":
            return RationalField()
        if kind == "cyclotomic":
            order = desc.get("order")
            if not isinstance(order, int) or isinstance(order, bool) or order < 1:
                raise LiteralError("cyclotomic field needs a positive integer 'order'")
            return CyclotomicField(order)
        if kind == "rational_function":
            var = desc.get("variable", "q")
            if not isinstance(var, str) or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", var):
                raise LiteralError("rational_function field needs an identifier 'variable'")
            return RationalFunctionField(var)
        raise LiteralError(f"unknown field kind {kind!r}")

    # payload-level operations implemented by subclasses
    def _parse(self, value):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _literal(self, a):
        raise NotImplementedError

    def _str(self, a) -> str:
        raise NotImplementedError


class RationalField(Field):
    """Q, with Fraction payloads (always in lowest terms, denominator > 0)."""

    kind = "rational"

    def _parse(self, value):
        return _parse_fraction(value)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _literal(self, a):
        return str(a)

    def _str(self, a):
        return str(a)

    def to_json(self):
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __str__(self):
        return "Q"

    __repr__ = __str__


class CyclotomicField(Field):
    """Q(zeta_N): payloads are coefficient tuples of length deg(Phi_N) on the
    power basis 1, zeta, ..., zeta^(d-1), reduced modulo the N-th cyclotomic
    polynomial."""

    kind = "cyclotomic"

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1

    def generator(self) -> FieldElement:
        """zeta_N, the chosen primitive N-th root of unity (x reduced mod Phi_N)."""
        return FieldElement(self, self._reduce_poly((Fraction(0), Fraction(1))))

    def _reduce_poly(self, poly) -> tuple:
        reduced = _pdivmod(_trim(poly), self.modulus)[1]
        return tuple(reduced[i] if i < len(reduced) else Fraction(0) for i in range(self.degree))

    def _parse(self, value):
        if isinstance(value, (list, tuple)):
            return self._reduce_poly(tuple(_parse_fraction(c) for c in value))
        return self._reduce_poly((_parse_fraction(value),))

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _mul(self, a, b):
        return self._reduce_poly(_pmul(_trim(a), _trim(b)))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _inv(self, a):
        s, _, d = _pxgcd(_trim(a), self.modulus)
        # Phi_N is irreducible over Q, so the gcd with a nonzero residue is 1
        assert d == (Fraction(1),), "cyclotomic modulus is irreducible"
        return self._reduce_poly(s)

    def _is_zero(self, a):
        return all(c == 0 for c in a)

    def _literal(self, a):
        return [str(c) for c in a]

    def _str(self, a):
        return _pstr(_trim(a), "z")

    def to_json(self):
        return {"kind": "cyclotomic", "order": self.order}

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def __str__(self):
        return f"Q(zeta_{self.order})"

    __repr__ = __str__


class RationalFunctionField(Field):
    """Q(q): payloads are (num, den) pairs of coprime polynomial tuples over Q
    with den monic and nonzero; the zero element is ((), (1,))."""

    kind = "rational_function"

    def __init__(self, variable: str = "q"):
        self.variable = variable

    def generator(self) -> FieldElement:
        return FieldElement(self, ((Fraction(0), Fraction(1)), (Fraction(1),)))

    def _normalize(self, num, den):
        num, den = _trim(num), _trim(den)
        if not den:
            raise DivisionByZero(f"zero denominator in {self}")
        if not num:
            return ((), (Fraction(1),))
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return (num, den)

    _MONO = None  # compiled lazily, depends on the variable name

    def _parse(self, value):
        if isinstance(value, dict):
            extra = set(value) - {"num", "den"}
            if extra or "num" not in value:
                raise LiteralError("rational function literal needs 'num' (and optional 'den') lists")
            num = tuple(_parse_fraction(c) for c in value["num"])
            den = tuple(_parse_fraction(c) for c in value.get("den", [1]))
            return self._normalize(num, den)
        if isinstance(value, str):
            text = value.strip()
            m = re.fullmatch(rf"{re.escape(self.variable)}(?:\^(-?\d+))?", text)
            if m:
                k = int(m.group(1)) if m.group(1) is not None else 1
                mono = tuple(Fraction(0) for _ in range(abs(k))) + (Fraction(1),)
                if k >= 0:
                    return self._normalize(mono, (Fraction(1),))
                return self._normalize((Fraction(1),), mono)
        return self._normalize((_parse_fraction(value),), (Fraction(1),))

    def _add(self, a, b):
        (n1, d1), (n2, d2) = a, b
        return self._normalize(_padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    def _mul(self, a, b):
        (n1, d1), (n2, d2) = a, b
        return self._normalize(_pmul(n1, n2), _pmul(d1, d2))

    def _neg(self, a):
        return (_pneg(a[0]), a[1])

    def _inv(self, a):
        return self._normalize(a[1], a[0])

    def _is_zero(self, a):
        return not a[0]

    def _literal(self, a):
        return {"num": [str(c) for c in a[0]], "den": [str(c) for c in a[1]]}

    def _str(self, a):
        num, den = a
        if den == (Fraction(1),):
            return _pstr(num, self.variable)
        return f"({_pstr(num, self.variable)})/({_pstr(den, self.variable)})"

    def to_json(self):
        return {"kind": "rational_function", "variable": self.variable}

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.variable == self.variable

    def __hash__(self):
        return hash(("rational_function", self.variable))

    def __str__(self):
        return f"Q({self.variable})"

    __repr__ = __str__


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Exact field arithmetic dispatch; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def primitive_root(n: int) -> FieldElement:
    """A primitive n-th root of unity.  For n <= 2 the cyclotomic field is Q
    itself, so 1 and -1 are returned as rationals; otherwise zeta_n in
    Q(zeta_n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return RationalField().one
    if n == 2:
        return -RationalField().one
    return CyclotomicField(n).generator()


def is_nth_root_of_unity(e: FieldElement, n: int) -> bool:
    """Whether e**n == 1, by exact exponentiation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if e.is_zero():
        return False
    return (e ** n).is_one()


def is_primitive_root(e: FieldElement, n: int) -> bool:
    """Whether e has exact multiplicative order n."""
    if not is_nth_root_of_unity(e, n):
        return False
    return all(not (e ** k).is_one() for k in range(1, n))
