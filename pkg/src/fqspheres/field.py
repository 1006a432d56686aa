"""Exact arithmetic in prime fields of odd characteristic.

Values are canonical residues in ``range(p)``. Every element carries
its field spec, and mixing elements of different fields raises
ContextMismatchError rather than silently coercing.
"""

from __future__ import annotations

from .errors import ContextMismatchError


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y == g == gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qt, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    return a, x0, y0


def inv_mod(a: int, p: int) -> int:
    """Inverse of a mod p via extended Euclid; a must not be 0 mod p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    g, x, _ = _xgcd(a, p)
    if g != 1:
        raise ValueError(f"{a} is not invertible mod {p}")
    return x % p


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1}, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return -1 if e == p - 1 else 1


class FieldSpec:
    """The prime field F_p for an odd prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError("field order must be an int")
        if p == 2:
            raise ValueError("characteristic 2 excluded")
        if not _is_odd_prime(p):
            raise ValueError(f"prime fields only: {p} is not an odd prime")
        self.p = p

    def element(self, value) -> FieldElement:
        return FieldElement(self, value)

    def legendre(self, value) -> int:
        if isinstance(value, FieldElement):
            value = value.value
        return legendre_symbol(value, self.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldSpec):
            return self.p == other.p
        return NotImplemented

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self) -> str:
        return f"FieldSpec({self.p})"


def make_field(p: int) -> FieldSpec:
    """Validate p and build the field F_p. Rejects 2, composites, p < 3."""
    return FieldSpec(p)


def _coerce(spec: FieldSpec, other) -> int:
    """Canonical residue of ``other`` in ``spec``; guards mixed fields."""
    if isinstance(other, FieldElement):
        if other.spec != spec:
            raise ContextMismatchError(
                f"mixed fields F_{spec.p} and F_{other.spec.p}"
            )
        return other.value
    if isinstance(other, int) and not isinstance(other, bool):
        return other % spec.p
    raise TypeError(f"cannot coerce {type(other).__name__} into F_{spec.p}")


class FieldElement:
    """A canonical residue tied to one FieldSpec."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        if isinstance(value, FieldElement):
            value = _coerce(spec, value)
        elif isinstance(value, int) and not isinstance(value, bool):
            value = value % spec.p
        else:
            raise TypeError("field elements are built from ints")
        self.spec = spec
        self.value = value

    def __add__(self, other) -> FieldElement:
        return FieldElement(self.spec, self.value + _coerce(self.spec, other))

    __radd__ = __add__

    def __sub__(self, other) -> FieldElement:
        return FieldElement(self.spec, self.value - _coerce(self.spec, other))

    def __rsub__(self, other) -> FieldElement:
        return FieldElement(self.spec, _coerce(self.spec, other) - self.value)

    def __mul__(self, other) -> FieldElement:
        return FieldElement(self.spec, self.value * _coerce(self.spec, other))

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, -self.value)

    def __pow__(self, n: int) -> FieldElement:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponents must be nonnegative ints")
        return FieldElement(self.spec, pow(self.value, n, self.spec.p))

    def inv(self) -> FieldElement:
        return FieldElement(self.spec, inv_mod(self.value, self.spec.p))

    def __truediv__(self, other) -> FieldElement:
        o = _coerce(self.spec, other)
        return FieldElement(self.spec, self.value * inv_mod(o, self.spec.p))

    def legendre(self) -> int:
        return legendre_symbol(self.value, self.spec.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.spec == other.spec
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.value} mod {self.spec.p})"
