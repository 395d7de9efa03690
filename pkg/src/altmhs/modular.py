"""Arithmetic in Z/p^kZ and on p-adic numbers p^v * u with a tracked precision."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from . import kernels

__all__ = [
    "PrecisionError",
    "Residue",
    "PadicScaled",
    "mod_inverse",
    "batch_inverses",
    "mod_pow",
    "padic_arith",
    "central_binomial_stream",
    "binom_mod",
]


class PrecisionError(ArithmeticError):
    """A p-adic value is not known to the precision a caller asked for."""


@dataclass(frozen=True, slots=True)
class Residue:
    """An element of Z/p^kZ."""

    value: int
    p: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("exponent must be >= 1")
        if not 0 <= self.value < self.p**self.k:
            raise ValueError(f"{self.value} is not reduced mod {self.p}^{self.k}")

    @classmethod
    def of(cls, x: int, p: int, k: int) -> "Residue":
        return cls(x % p**k, p, k)

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if (other.p, other.k) != (self.p, self.k):
                raise ValueError(
                    f"cannot combine residues mod {self.p}^{self.k} and {other.p}^{other.k}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue.of(self.value + o, self.p, self.k)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue.of(self.value - o, self.p, self.k)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue.of(o - self.value, self.p, self.k)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue.of(self.value * o, self.p, self.k)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue.of(-self.value, self.p, self.k)

    def __pow__(self, e: int):
        return mod_pow(self, e)

    def inverse(self) -> "Residue":
        return mod_inverse(self)

    def __str__(self) -> str:
        return f"{self.value} mod {self.p}^{self.k}"


def mod_inverse(a: Residue) -> Residue:
    if a.value % a.p == 0:
        raise ZeroDivisionError(f"{a.value} is not a unit mod {a.p}^{a.k}")
    return Residue(pow(a.value, -1, a.modulus), a.p, a.k)


def batch_inverses(n: int, p: int, k: int) -> list[Residue]:
    """Inverses of 1..n modulo p^k with a single extended-gcd inversion."""
    if n >= p:
        raise ValueError(f"n={n} must be < p={p} so that 1..n are units")
    return [Residue(v, p, k) for v in kernels.batch_inverses(n, p**k)]


def mod_pow(a: Residue, e: int) -> Residue:
    if e < 0:
        raise ValueError("negative exponent; invert explicitly")
    m = a.modulus
    result, base = 1 % m, a.value
    while e:
        if e & 1:
            result = result * base % m
        base = base * base % m
        e >>= 1
    return Residue(result, a.p, a.k)


def _split(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


Number = Union[int, Fraction, "PadicScaled"]


class PadicScaled:
    """The p-adic number p**valuation * unit, with unit known mod p**k.

    A nonzero value is known modulo p**(valuation + k), its absolute
    precision.  Zero is a separate marker (``unit is None``): it is either an
    exact zero (``zero_precision is None``) or a value only known to be
    divisible by p**zero_precision.
    """

    __slots__ = ("p", "valuation", "unit", "k", "zero_precision")

    def __init__(self, p: int, valuation: int, unit: int | None, k: int,
                 zero_precision: int | None = None):
        self.p = p
        self.valuation = valuation
        self.unit = unit
        self.k = k
        self.zero_precision = zero_precision
        if unit is not None:
            if k < 1:
                raise PrecisionError("relative precision must be >= 1")
            if unit % p == 0 or not 0 < unit < p**k:
                raise ValueError(f"unit {unit} is not a reduced unit mod {p}^{k}")

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, p: int, precision: int | None = None) -> "PadicScaled":
        return cls(p, 0, None, 0, precision)

    @classmethod
    def from_rational(cls, r: int | Fraction, p: int, k: int) -> "PadicScaled":
        """Exact rational as a p-adic value with k digits of relative precision."""
        r = Fraction(r)
        if r == 0:
            return cls.zero(p)
        va, a = _split(r.numerator, p)
        vb, b = _split(r.denominator, p)
        m = p**k
        return cls(p, va - vb, a * pow(b, -1, m) % m, k)

    @classmethod
    def from_residue(cls, value: int | Residue, p: int | None = None,
                     k: int | None = None) -> "PadicScaled":
        """A value known only modulo p**k."""
        if isinstance(value, Residue):
            value, p, k = value.value, value.p, value.k
        value %= p**k
        if value == 0:
            return cls.zero(p, k)
        v, u = _split(value, p)
        return cls(p, v, u % p ** (k - v), k - v)

    # inspection -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.unit is None

    @property
    def absolute_precision(self) -> int | None:
        """Exponent N with the value known mod p**N; None for an exact zero."""
        if self.unit is None:
            return self.zero_precision
        return self.valuation + self.k

    def to_residue(self, k: int) -> Residue:
        """Reduce to Z/p^kZ, refusing if fewer than k digits are known."""
        ap = self.absolute_precision
        if ap is not None and ap < k:
            raise PrecisionError(
                f"value known mod {self.p}^{ap} only, {self.p}^{k} requested"
            )
        if self.unit is None:
            return Residue(0, self.p, k)
        if self.valuation < 0:
            raise ValueError(f"value has negative {self.p}-adic valuation")
        m = self.p**k
        return Residue(self.p**self.valuation * self.unit % m, self.p, k)

    def __repr__(self) -> str:
        if self.unit is None:
            tail = "exact" if self.zero_precision is None else f"mod {self.p}^{self.zero_precision}"
            return f"PadicScaled(0, {tail})"
        return f"PadicScaled({self.p}^{self.valuation} * ({self.unit} mod {self.p}^{self.k}))"

    def same(self, other: "PadicScaled") -> bool:
        """Field-by-field identity (not p-adic equality)."""
        return (self.p, self.valuation, self.unit, self.k, self.zero_precision) == (
            other.p, other.valuation, other.unit, other.k, other.zero_precision)

    # arithmetic -------------------------------------------------------

    def _lift(self, c) -> "PadicScaled":
        if isinstance(c, PadicScaled):
            if c.p != self.p:
                raise ValueError("mixed primes")
            return c
        if isinstance(c, (int, Fraction)):
            ap = self.absolute_precision
            c = Fraction(c)
            if c == 0:
                return PadicScaled.zero(self.p)
            # enough digits that the constant never limits the result
            v = _split(c.numerator, self.p)[0] - _split(c.denominator, self.p)[0]
            k = max(1, self.k, (ap if ap is not None else 1) - v)
            return PadicScaled.from_rational(c, self.p, k)
        return NotImplemented

    def __add__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return b
        a = self
        if a.unit is None and a.zero_precision is None:
            return b
        if b.unit is None and b.zero_precision is None:
            return a
        precs = [x for x in (a.absolute_precision, b.absolute_precision)]
        cap = min(precs)
        live = [x for x in (a, b) if x.unit is not None]
        if not live:
            return PadicScaled.zero(a.p, cap)
        vmin = min(x.valuation for x in live)
        if cap <= vmin:
            return PadicScaled.zero(a.p, cap)
        m = a.p ** (cap - vmin)
        s = sum(x.unit * a.p ** (x.valuation - vmin) for x in live) % m
        if s == 0:
            return PadicScaled.zero(a.p, cap)
        t, u = _split(s, a.p)
        v = vmin + t
        return PadicScaled(a.p, v, u % a.p ** (cap - v), cap - v)

    __radd__ = __add__

    def __neg__(self):
        if self.unit is None:
            return self
        return PadicScaled(self.p, self.valuation, (-self.unit) % self.p**self.k, self.k)

    def __sub__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return b
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return b
        a = self
        if (a.unit is None and a.zero_precision is None) or (
            b.unit is None and b.zero_precision is None
        ):
            return PadicScaled.zero(a.p)
        if a.unit is None or b.unit is None:
            # zero marker times something: divisibility bounds add
            za, zb = (a, b) if a.unit is None else (b, a)
            bound = za.zero_precision + (zb.zero_precision if zb.unit is None else zb.valuation)
            return PadicScaled.zero(a.p, bound)
        k = min(a.k, b.k)
        return PadicScaled(a.p, a.valuation + b.valuation,
                           a.unit * b.unit % a.p**k, k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return b
        if b.unit is None:
            raise ZeroDivisionError("division by a p-adic zero")
        a = self
        if a.unit is None:
            if a.zero_precision is None:
                return a
            return PadicScaled.zero(a.p, a.zero_precision - b.valuation)
        k = min(a.k, b.k)
        m = a.p**k
        return PadicScaled(a.p, a.valuation - b.valuation,
                           a.unit * pow(b.unit, -1, m) % m, k)

    def __rtruediv__(self, other):
        a = self._lift(other)
        if a is NotImplemented:
            return a
        return a / self

    def __pow__(self, e: int):
        if e < 0:
            return PadicScaled.from_rational(1, self.p, self.k) / self ** (-e)
        if self.unit is None:
            if e == 0:
                return PadicScaled.from_rational(1, self.p, max(self.k, 1))
            if self.zero_precision is None:
                return self
            return PadicScaled.zero(self.p, self.zero_precision * e)
        return PadicScaled(self.p, self.valuation * e,
                           pow(self.unit, e, self.p**self.k), self.k)


def padic_arith(op: str, a: PadicScaled, b: PadicScaled) -> PadicScaled:
    """Apply ``op`` in {"add", "mul", "div"} to two p-adic values."""
    if a.p != b.p:
        raise ValueError("operands live over different primes")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def central_binomial_stream(p: int, k: int) -> Iterator[PadicScaled]:
    """Yield C(2j, j) for j = 1 .. p-1 as p-adic values with k digits.

    Uses C(2j, j) = C(2j-2, j-1) * 2(2j-1) / j; the only multiple of p among
    the factors is 2j - 1 = p, whose p goes into the valuation.
    """
    if p == 2:
        raise ValueError("p must be odd")
    m = p**k
    v, u = 0, 1
    for j in range(1, p):
        f = 2 * j - 1
        if f % p == 0:
            v += 1
            f //= p
        u = u * 2 * f % m * pow(j, -1, m) % m
        yield PadicScaled(p, v, u, k)


def _digit_sum(n: int, p: int) -> int:
    s = 0
    while n:
        n, d = divmod(n, p)
        s += d
    return s


def binom_mod(n: int, r: int, p: int, k: int) -> PadicScaled:
    """C(n, r) for 0 <= r <= n <= 2p as a p-adic value with k digits.

    The valuation comes from Legendre's digit-sum formula; the unit is the
    running product of (n - r + i) / i with p-parts stripped.
    """
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    if n > 2 * p:
        raise ValueError(f"n={n} exceeds 2p={2 * p}")
    v = (_digit_sum(r, p) + _digit_sum(n - r, p) - _digit_sum(n, p)) // (p - 1)
    m = p**k
    num, den = 1, 1
    for i in range(1, r + 1):
        num = num * _split(n - r + i, p)[1] % m
        den = den * _split(i, p)[1] % m
    return PadicScaled(p, v, num * pow(den, -1, m) % m, k)
