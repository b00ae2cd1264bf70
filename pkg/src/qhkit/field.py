"""Exact coefficient fields: the rationals and prime fields F_p."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _rational = Fraction

RATIONALS = "Q"
PRIME = "Fp"


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
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


@dataclass(frozen=True)
class FieldSpec:
    kind: str = RATIONALS
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise FieldError("the rationals take no characteristic")
        elif self.kind == PRIME:
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise FieldError("prime field needs an integer p")
            if self.p >= 2**31:
                raise FieldError(f"p = {self.p} is too large (need p < 2^31)")
            if not is_prime(self.p):
                raise FieldError(f"p = {self.p} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    def __str__(self):
        return "Q" if self.kind == RATIONALS else f"F_{self.p}"

    # element handling

    def __call__(self, x):
        """Coerce an int, Fraction, mpq or 'a/b' string into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == RATIONALS:
            return _rational(x)
        if isinstance(x, int):
            return x % self.p
        x = Fraction(x)
        den = x.denominator % self.p
        if den == 0:
            raise FieldError(f"{x} has no image in F_{self.p}")
        return x.numerator * pow(den, -1, self.p) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def reduce(self, a):
        return a % self.p if self.kind == PRIME else a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == PRIME:
            return pow(a, -1, self.p)
        return 1 / a

    def vector(self, values) -> list:
        return [self(v) for v in values]

    def zeros(self, n: int) -> list:
        return [self(0)] * n

    def unit_vector(self, n: int, i: int) -> list:
        v = self.zeros(n)
        v[i] = self(1)
        return v

    def to_str(self, a) -> str:
        if self.kind == PRIME:
            return str(a)
        a = Fraction(int(a.numerator), int(a.denominator)) if not isinstance(a, Fraction) else a
        return str(a)

    @property
    def name(self) -> str:
        return str(self)

    def to_json(self) -> dict:
        return {"type": "Q"} if self.kind == RATIONALS else {"type": "Fp", "p": self.p}
