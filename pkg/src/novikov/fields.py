"""Exact scalar arithmetic: the rationals and prime fields F_p.

Scalars are plain Python values (``fractions.Fraction`` over Q, canonical
``int`` in ``[0, p)`` over F_p).  A ``Field`` object carries the arithmetic
and the canonicalization; containers (vectors, matrices, tensors, algebras)
keep a reference to their field and refuse to mix fields.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch, NoHalf, NovikovError

_PRIME_CACHE: dict[int, "PrimeField"] = {}


def _is_prime(n: int) -> bool:
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


class Field:
    """Abstract field descriptor; scalars are plain values canonical for it."""

    char: int

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def coerce(self, x):
        """Turn an int / string / exact value into a canonical scalar."""
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def half(self):
        """Return 1/2, raising NoHalf in characteristic 2."""
        if self.char == 2:
            raise NoHalf(f"1/2 does not exist in {self}")
        return self.inv(self.coerce(2))

    def scalar_to_json(self, a):
        raise NotImplementedError

    def scalar_from_json(self, obj):
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def sample(self, rng):
        """Draw a scalar uniformly (F_p) or a small rational (Q)."""
        raise NotImplementedError


class Rationals(Field):
    """The field Q; scalars are Fractions (lowest terms, positive denominator)."""

    char = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.strip())
        raise NovikovError(f"cannot coerce {x!r} into Q")

    def is_zero(self, a) -> bool:
        return a == 0

    def scalar_to_json(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def scalar_from_json(self, obj):
        if isinstance(obj, (int, str)):
            return self.coerce(obj)
        raise NovikovError(f"bad rational scalar {obj!r}")

    def to_json(self) -> dict:
        return {"kind": "rational"}

    def sample(self, rng):
        num = rng.randrange(-6, 7)
        den = rng.randrange(1, 4)
        return Fraction(num, den)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("QQ")


class PrimeField(Field):
    """F_p for a prime p < 2**31; scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if not (2 <= p < 2**31):
            raise NovikovError(f"prime field modulus out of range: {p}")
        if not _is_prime(p):
            raise NovikovError(f"{p} is not prime")
        self.p = p
        self.char = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return int(x.strip()) % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise NovikovError(f"denominator divisible by {self.p}")
            return (x.numerator * self.inv(x.denominator % self.p)) % self.p
        raise NovikovError(f"cannot coerce {x!r} into F_{self.p}")

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def scalar_to_json(self, a):
        return int(a)

    def scalar_from_json(self, obj):
        if isinstance(obj, int):
            return obj % self.p
        if isinstance(obj, str):
            return int(obj) % self.p
        raise NovikovError(f"bad prime-field scalar {obj!r}")

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def sample(self, rng):
        return rng.randrange(self.p)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))


QQ = Rationals()


def GF(p: int) -> PrimeField:
    """The prime field F_p (cached)."""
    if p not in _PRIME_CACHE:
        _PRIME_CACHE[p] = PrimeField(p)
    return _PRIME_CACHE[p]


def field_from_json(obj: dict) -> Field:
    kind = obj.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return GF(int(obj["p"]))
    raise NovikovError(f"unknown field descriptor {obj!r}")


def field_by_name(name: str) -> Field:
    """Resolve CLI-style field names: Q, F2, F3, F5, F7, ..."""
    name = name.strip().upper()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise NovikovError(f"unknown field name {name!r}")


def check_same_field(a: Field, b: Field) -> Field:
    if a != b:
        raise FieldMismatch(f"mixed fields: {a} vs {b}")
    return a
