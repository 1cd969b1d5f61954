"""Arithmetic in F_{p^m} for the curve-enumeration oracle.

Polynomials over F_p are tuples of ints, lowest degree first, with no trailing
zeros (the zero polynomial is the empty tuple). Field elements are residues
modulo a monic irreducible of degree m, stored as a length-m coefficient tuple.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterator, Optional, Tuple, Union

from .config import DEFAULT_CONFIG
from .errors import FieldZeroDivision, MixedFields, NotPrimePower, RangeExceeded

Poly = Tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def prime_factors(n: int) -> Tuple[int, ...]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    while n > 1:
        p = smallest_prime_factor(n)
        out.append(p)
        while n % p == 0:
            n //= p
    return tuple(out)


@dataclass(frozen=True)
class PrimePower:
    p: int
    m: int
    q: int = field(init=False)

    def __post_init__(self) -> None:
        if not is_prime(int(self.p)):
            raise NotPrimePower(f"p = {self.p} is not prime")
        if int(self.m) < 1:
            raise NotPrimePower(f"exponent m = {self.m} must be positive")
        q = int(self.p) ** int(self.m)
        if q > DEFAULT_CONFIG.limits.prime_power_max:
            raise RangeExceeded(f"q = {self.p}^{self.m} exceeds the supported range")
        object.__setattr__(self, "q", q)

    @classmethod
    def of(cls, q: int, max_q: Optional[int] = None) -> "PrimePower":
        q = int(q)
        if q < 2:
            raise NotPrimePower(f"q = {q} is not a prime power")
        if q > (DEFAULT_CONFIG.limits.prime_power_max if max_q is None else max_q):
            raise RangeExceeded(f"q = {q} exceeds the supported range")
        p = smallest_prime_factor(q)
        m, rest = 0, q
        while rest % p == 0:
            rest //= p
            m += 1
        if rest != 1:
            raise NotPrimePower(f"q = {q} is not a prime power")
        return cls(p, m)

    @property
    def is_square(self) -> bool:
        return self.m % 2 == 0

    @property
    def sqrt(self) -> Optional[int]:
        """Exact integer square root of q, or None when q is not a square."""
        r = isqrt(self.q)
        return r if r * r == self.q else None

    def __int__(self) -> int:
        return self.q

    def __str__(self) -> str:
        return f"{self.p}^{self.m}" if self.m > 1 else str(self.p)


def prime_power(q: Union[int, PrimePower], max_q: Optional[int] = None) -> PrimePower:
    order = q if isinstance(q, PrimePower) else PrimePower.of(q, max_q)
    if max_q is not None and order.q > max_q:
        raise RangeExceeded(f"q = {order.q} exceeds the supported range")
    return order


# --- polynomials over F_p ---

def _trim(a) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return _trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n))


def _mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(c % p for c in out)


def _divmod(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    if not b:
        raise FieldZeroDivision("polynomial division by zero")
    r = list(a)
    inv_lead = pow(b[-1], -1, p)
    quo = [0] * max(0, len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        c = (r[shift + len(b) - 1] * inv_lead) % p
        if c:
            quo[shift] = c
            for j, y in enumerate(b):
                r[shift + j] = (r[shift + j] - c * y) % p
    return _trim(quo), _trim(r)


def _mod(a: Poly, b: Poly, p: int) -> Poly:
    return _divmod(a, b, p)[1]


def _gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, _mod(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple((c * inv) % p for c in a)


def _powmod(a: Poly, e: int, f: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = _mod(a, f, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), f, p)
        base = _mod(_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f: Poly, p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    f = _trim(f)
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x: Poly = (0, 1)
    if _powmod(x, p ** m, f, p) != _mod(x, f, p):
        return False
    for r in prime_factors(m):
        h = _sub(_powmod(x, p ** (m // r), f, p), x, p)
        if len(_gcd(h, f, p)) != 1:
            return False
    return True


def _digits(n: int, base: int, width: int) -> Tuple[int, ...]:
    out = []
    for _ in range(width):
        n, d = divmod(n, base)
        out.append(d)
    return tuple(out)


def smallest_irreducible(p: int, m: int) -> Poly:
    """Lexicographically smallest monic irreducible of degree m over F_p."""
    for idx in range(p ** m):
        f = _digits(idx, p, m) + (1,)
        if is_irreducible(f, p):
            return f
    raise RuntimeError(f"no irreducible polynomial of degree {m} over F_{p}")  # unreachable


# --- fields ---

@dataclass(frozen=True)
class FiniteField:
    order: PrimePower
    modulus: Poly

    @property
    def p(self) -> int:
        return self.order.p

    @property
    def m(self) -> int:
        return self.order.m

    @property
    def q(self) -> int:
        return self.order.q

    def __call__(self, value: Union[int, "FieldElement", Tuple[int, ...]]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.parent != self:
                raise MixedFields("element belongs to another field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.m - 1))
        coeffs = tuple(c % self.p for c in value)
        if len(coeffs) > self.m:
            coeffs = _mod(_trim(coeffs), self.modulus, self.p)
        return FieldElement(self, tuple(coeffs) + (0,) * (self.m - len(coeffs)))

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def generator(self) -> "FieldElement":
        """The class of x (for m = 1 this is 0, since the modulus is x)."""
        return self((0, 1))

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, _digits(index, self.p, self.m))

    def elements(self) -> Iterator["FieldElement"]:
        for idx in range(self.q):
            yield self.element(idx)

    def random_element(self, rng: Optional[random.Random] = None) -> "FieldElement":
        rng = rng or random
        return self.element(rng.randrange(self.q))

    def __str__(self) -> str:
        return f"F_{self.q}"


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int = 1, max_order: Optional[int] = None) -> FiniteField:
    """F_{p^m} with the lexicographically smallest monic irreducible modulus."""
    order = PrimePower(p, m)
    cap = DEFAULT_CONFIG.limits.field_max_order if max_order is None else max_order
    if order.q > cap:
        raise RangeExceeded(f"field order {order.q} exceeds the construction cap {cap}")
    return FiniteField(order, smallest_irreducible(p, m))


def field_of_order(q: Union[int, PrimePower], max_order: Optional[int] = None) -> FiniteField:
    order = prime_power(q)
    return make_field(order.p, order.m, max_order)


Operand = Union["FieldElement", int]


@dataclass(frozen=True)
class FieldElement:
    parent: FiniteField
    coeffs: Tuple[int, ...]

    def _coerce(self, other: Operand) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.parent != self.parent:
                raise MixedFields(f"cannot combine elements of {self.parent} and {other.parent}")
            return other
        if isinstance(other, int):
            return self.parent(other)
        return NotImplemented

    @property
    def index(self) -> int:
        """Base-p encoding of the coefficients; the position in FiniteField.elements()."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.parent.p + c
        return n

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: Operand) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.parent.p
        return FieldElement(self.parent, tuple((x + y) % p for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        p = self.parent.p
        return FieldElement(self.parent, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, other: Operand) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Operand) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: Operand) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        f = self.parent
        prod = _mod(_mul(_trim(self.coeffs), _trim(o.coeffs), f.p), f.modulus, f.p)
        return f(prod)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise FieldZeroDivision(f"zero has no inverse in {self.parent}")
        f = self.parent
        p = f.p
        # extended Euclid in F_p[x]: track s with s*self = r (mod modulus)
        r0, r1 = f.modulus, _trim(self.coeffs)
        s0, s1 = (), (1,)
        while r1:
            quo, rem = _divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _sub(s0, _mul(quo, s1, p), p)
        inv_lead = pow(r0[-1], -1, p)
        return f(tuple((c * inv_lead) % p for c in s0))

    def __truediv__(self, other: Operand) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Operand) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.parent.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"
