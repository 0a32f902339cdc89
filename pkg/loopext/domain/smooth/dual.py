"""
Forward-mode dual numbers.

A DualScalar a + bδ with δ² = 0 carries a value and a directional derivative
through closed-form arithmetic; plain floats mix in as constants.
"""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class DualScalar:
    value: float
    deriv: float = 0.0

    # numpy scalars must defer to the reflected operators below
    __array_ufunc__ = None

    @staticmethod
    def lift(other: "Scalar") -> "DualScalar":
        if isinstance(other, DualScalar):
            return other
        return DualScalar(float(other), 0.0)

    def __add__(self, other: "Scalar") -> "DualScalar":
        o = DualScalar.lift(other)
        return DualScalar(self.value + o.value, self.deriv + o.deriv)

    __radd__ = __add__

    def __sub__(self, other: "Scalar") -> "DualScalar":
        o = DualScalar.lift(other)
        return DualScalar(self.value - o.value, self.deriv - o.deriv)

    def __rsub__(self, other: "Scalar") -> "DualScalar":
        return DualScalar.lift(other) - self

    def __mul__(self, other: "Scalar") -> "DualScalar":
        o = DualScalar.lift(other)
        return DualScalar(
            self.value * o.value, self.value * o.deriv + self.deriv * o.value
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "Scalar") -> "DualScalar":
        o = DualScalar.lift(other)
        if o.value == 0:
            raise ZeroDivisionError("dual division by a zero value")
        return DualScalar(
            self.value / o.value,
            (self.deriv * o.value - self.value * o.deriv) / (o.value * o.value),
        )

    def __rtruediv__(self, other: "Scalar") -> "DualScalar":
        return DualScalar.lift(other) / self

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.value, -self.deriv)

    def __pos__(self) -> "DualScalar":
        return self

    def __pow__(self, exponent: int) -> "DualScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return 1.0 / (self ** (-exponent))
        if exponent == 0:
            return DualScalar(1.0, 0.0)
        return DualScalar(
            self.value**exponent,
            exponent * self.value ** (exponent - 1) * self.deriv,
        )


Scalar = float | DualScalar


def value_of(x: Scalar) -> float:
    return x.value if isinstance(x, DualScalar) else float(x)


def deriv_of(x: Scalar) -> float:
    return x.deriv if isinstance(x, DualScalar) else 0.0
