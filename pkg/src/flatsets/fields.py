"""Finite fields F_p and GF(2^e).

Extension-field elements are integers whose bits are polynomial coefficients
(bit i is the coefficient of x^i), reduced modulo a fixed Conway polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Conway polynomials for p = 2, as bitmasks (bit i <-> x^i).
CONWAY_POLYNOMIALS_2: dict[int, int] = {
    1: 0b11,                     # x + 1
    2: 0b111,                    # x^2 + x + 1
    3: 0b1011,                   # x^3 + x + 1
    4: 0b10011,                  # x^4 + x + 1
    5: 0b100101,                 # x^5 + x^2 + 1
    6: 0b1011011,                # x^6 + x^4 + x^3 + x + 1
    7: 0b10000011,               # x^7 + x + 1
    8: 0b100011101,              # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,             # x^9 + x^4 + 1
    10: 0b10001101111,           # x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    11: 0b100000000101,          # x^11 + x^2 + 1
    12: 0b1000011101011,         # x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
}


def _poly_str(mask: int) -> str:
    terms = []
    for i in range(mask.bit_length() - 1, -1, -1):
        if mask >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms)


@dataclass(frozen=True)
class FiniteField:
    """F_{p^degree}; only degree 1 (any prime p) or p = 2 (any listed degree)."""

    characteristic: int
    degree: int = 1
    modulus: int = field(init=False)
    _exp: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _log: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p, deg = self.characteristic, self.degree
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"characteristic must be prime, got {p}")
        if deg < 1:
            raise ValueError("degree must be positive")
        if deg > 1 and p != 2:
            raise ValueError("extension fields are only supported in characteristic 2")
        if deg > 1 and deg not in CONWAY_POLYNOMIALS_2:
            raise ValueError(f"no Conway polynomial recorded for GF(2^{deg})")
        modulus = CONWAY_POLYNOMIALS_2[deg] if deg > 1 else 0
        object.__setattr__(self, "modulus", modulus)
        exp, log = self._tables()
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    def _tables(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Power table of a primitive element, and its inverse."""
        q = self.order
        if self.degree == 1:
            gen = next(g for g in range(1, q) if len({pow(g, i, q) for i in range(q - 1)}) == q - 1)
            exp = [pow(gen, i, q) for i in range(q - 1)]
        else:
            exp, x = [], 1
            for _ in range(q - 1):
                exp.append(x)
                x <<= 1
                if x >> self.degree:
                    x ^= self.modulus
        log = [-1] * q
        for i, a in enumerate(exp):
            if log[a] != -1:
                raise ValueError(f"modulus {_poly_str(self.modulus)} is not primitive")
            log[a] = i
        return tuple(exp), tuple(log)

    @property
    def order(self) -> int:
        return self.characteristic**self.degree

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        if self.degree > 1:
            return a ^ b
        return (a + b) % self.characteristic

    def neg(self, a: int) -> int:
        return a if self.degree > 1 else -a % self.characteristic

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        return self._exp[self._log[a] * n % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[-self._log[a] % (self.order - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.characteristic)

    def primitive_element(self) -> int:
        return self._exp[1 % (self.order - 1)] if self.order > 2 else 1

    def bits(self, a: int) -> list[int]:
        """Coordinates of ``a`` over the prime field, lowest power first."""
        if self.degree == 1:
            return [a]
        return [a >> i & 1 for i in range(self.degree)]

    def modulus_str(self) -> str:
        return _poly_str(self.modulus) if self.degree > 1 else f"prime field F_{self.characteristic}"


def gf2(degree: int) -> FiniteField:
    return FiniteField(2, degree)
