import functools
from dataclasses import dataclass, field

import galois
import numpy as np

from .config import resolve
from .errors import (
    CapExceededError,
    FieldMismatchError,
    FieldSpecError,
    ZeroInversionError,
)
from .registry import ConwayTable


@functools.lru_cache(maxsize=None)
def _field_class(characteristic, degree, modulus):
    if degree == 1:
        return galois.GF(characteristic)
    poly = galois.Poly(list(modulus), field=galois.GF(characteristic))
    return galois.GF(characteristic**degree, irreducible_poly=poly)


@dataclass(frozen=True)
class FieldSpec:
    """
    GF(p^k) with a pinned modulus.

    The modulus is stored highest degree first and is absent for prime
    fields. Elements are canonical integers in [0, q): for k > 1 the integer
    whose base-p digits are the reduced coefficient vector.

    >>> FieldSpec(2, 2)
    <FieldSpec> -- GF(2^2) mod (1, 1, 1)
    """

    characteristic: int
    degree: int = 1
    modulus: tuple = field(default=None)

    def __post_init__(self):
        p, k = self.characteristic, self.degree
        if not isinstance(p, (int, np.integer)) or p < 2 or not galois.is_prime(int(p)):
            raise FieldSpecError(f"characteristic must be prime, got {p}")
        if not isinstance(k, (int, np.integer)) or k < 1:
            raise FieldSpecError(f"degree must be a positive integer, got {k}")
        if p**k >= 2**31:
            raise FieldSpecError(f"field order {p}^{k} does not fit a machine word")
        if k == 1:
            if self.modulus is not None:
                raise FieldSpecError("prime fields carry no modulus")
            return
        modulus = self.modulus
        if modulus is None:
            modulus = ConwayTable.get(p, k)
        if modulus is None:
            modulus = tuple(int(c) for c in galois.GF(p**k).irreducible_poly.coeffs)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[0] != 1:
            raise FieldSpecError(f"modulus must be monic of degree {k}: {modulus}")
        if any(c < 0 or c >= p for c in modulus):
            raise FieldSpecError(f"modulus coefficients must lie in [0, {p}): {modulus}")
        if not galois.Poly(list(modulus), field=galois.GF(p)).is_irreducible():
            raise FieldSpecError(f"modulus {modulus} is reducible over GF({p})")
        object.__setattr__(self, "modulus", modulus)

    def __repr__(self):
        suffix = f" mod {self.modulus}" if self.modulus is not None else ""
        return f"<{self.__class__.__name__}> -- GF({format_field_spec(self)}){suffix}"

    def __str__(self):
        return format_field_spec(self)

    @property
    def order(self):
        return self.characteristic**self.degree

    @property
    def GF(self):
        return _field_class(self.characteristic, self.degree, self.modulus)

    def element(self, value):
        return FieldElement(int(value), self)

    @property
    def zero(self):
        return FieldElement(0, self)

    @property
    def one(self):
        return FieldElement(1, self)

    def array(self, values):
        """Field array over this spec from canonical integers (or FieldElements)."""
        raw = np.asarray(_as_ints(values), dtype=np.int64)
        if raw.size and (raw.min() < 0 or raw.max() >= self.order):
            raise ValueError(f"entries outside GF({self}): {raw.min()}..{raw.max()}")
        return self.GF(raw)

    def zeros(self, shape):
        return self.GF.Zeros(shape)

    def identity(self, n):
        return self.GF.Identity(n)


def _as_ints(values):
    if isinstance(values, FieldElement):
        return values.value
    if isinstance(values, (list, tuple)):
        return [_as_ints(v) for v in values]
    return values


@dataclass(frozen=True)
class FieldElement:
    value: int
    spec: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.spec.order:
            raise ValueError(f"{self.value} is not a canonical element of GF({self.spec})")

    def __repr__(self):
        return f"{self.value}"

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    @property
    def coefficients(self):
        """Reduced coefficient vector, highest degree first (length k)."""
        digits = []
        v = self.value
        for _ in range(self.spec.degree):
            v, d = divmod(v, self.spec.characteristic)
            digits.append(d)
        return tuple(reversed(digits))

    def _lift(self):
        return self.spec.GF(self.value)

    def _same(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec != self.spec:
            raise FieldMismatchError(self.spec, other.spec)
        return other

    def _wrap(self, arr):
        return FieldElement(int(arr), self.spec)

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self._wrap(self._lift() + other._lift())

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self._wrap(self._lift() - other._lift())

    def __mul__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self._wrap(self._lift() * other._lift())

    def __neg__(self):
        return self._wrap(-self._lift())

    def inverse(self):
        if self.value == 0:
            raise ZeroInversionError(f"inversion of zero in GF({self.spec})")
        return self._wrap(np.reciprocal(self._lift()))

    def __truediv__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return self._wrap(self._lift() ** n)


def make_field(characteristic, degree=1, modulus=None):
    return FieldSpec(characteristic, degree, modulus)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def inv(a):
    return a.inverse()


def from_signed_int(n, spec):
    """
    Embed {-1, 0, 1} into GF(q).

    >>> from_signed_int(-1, make_field(5))
    4
    """
    if n not in (-1, 0, 1):
        raise ValueError(f"signed entry must be -1, 0 or 1, got {n}")
    if n == 0:
        return spec.zero
    return spec.one if n == 1 else -spec.one


def enumerate_elements(spec, cap=None):
    cap = resolve(cap, "field_cap")
    if spec.order > cap:
        raise CapExceededError(f"GF({spec}) has {spec.order} elements, cap is {cap}")
    return tuple(FieldElement(v, spec) for v in range(spec.order))


def parse_field_spec(text):
    """
    "5" -> GF(5), "2^2" -> GF(4), "9" -> GF(3^2).
    """
    text = str(text).strip()
    try:
        if "^" in text:
            base, exponent = text.split("^", 1)
            p, k = int(base), int(exponent)
        else:
            q = int(text)
            if q < 2 or not galois.is_prime_power(q):
                raise FieldSpecError(f"not a prime power: {text}")
            primes, exponents = galois.factors(q)
            p, k = int(primes[0]), int(exponents[0])
    except ValueError as e:
        if isinstance(e, FieldSpecError):
            raise
        raise FieldSpecError(f"malformed field spec: {text!r}") from e
    return FieldSpec(p, k)


def format_field_spec(spec):
    if spec.degree == 1:
        return f"{spec.characteristic}"
    return f"{spec.characteristic}^{spec.degree}"


GF2 = FieldSpec(2)
