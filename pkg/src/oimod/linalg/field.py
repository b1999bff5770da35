from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# residues are multiplied as int64, so p - 1 squared must stay below 2**63
MAX_PRIME = 3037000493


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals or a prime field F_p."""

    kind: str = "rationals"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p is not None:
                raise ValueError("the rationals take no characteristic")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"prime field needs a prime characteristic, got {self.p}")
            if self.p > MAX_PRIME:
                raise ValueError(f"characteristic {self.p} exceeds supported maximum {MAX_PRIME}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def characteristic(self) -> int:
        return self.p if self.is_prime else 0

    @property
    def dtype(self):
        return np.int64 if self.is_prime else object

    def __call__(self, x):
        """Coerce an int, Fraction or scalar string into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.is_prime:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ValueError(f"{x} has no value in F_{self.p}")
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def parse(self, s: str):
        s = s.strip()
        if self.is_prime:
            if "/" in s:
                return self(Fraction(s))
            return int(s) % self.p
        return Fraction(s)

    def format(self, x) -> str:
        if self.is_prime:
            return str(int(x) % self.p)
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"

    def zeros(self, shape) -> np.ndarray:
        if self.is_prime:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def array(self, data) -> np.ndarray:
        """A 1-d or 2-d array of field elements built from nested sequences."""
        if self.is_prime:
            arr = np.array(data, dtype=object)
            if arr.size == 0:
                return np.zeros(arr.shape, dtype=np.int64)
            return np.vectorize(self, otypes=[np.int64])(arr)
        arr = np.array(data, dtype=object)
        if arr.size == 0:
            return arr
        return np.vectorize(Fraction, otypes=[object])(arr)

    def describe(self) -> dict:
        if self.is_prime:
            return {"kind": "prime", "p": self.p}
        return {"kind": "rationals"}

    def __str__(self):
        return f"GF({self.p})" if self.is_prime else "QQ"


QQ = Field("rationals")


def GF(p: int) -> Field:
    return Field("prime", p)
