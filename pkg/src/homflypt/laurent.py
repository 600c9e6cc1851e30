"""Exact sparse Laurent-polynomial arithmetic in the variables z and t.

Coefficients are exact rationals: plain `int` while integral (the common
case, and much faster), `fractions.Fraction` otherwise.  The two mix
transparently and there is no floating point anywhere.  Terms are stored
sparsely and every public view is emitted in a fixed canonical order
(ascending z exponent, then ascending t exponent), so two equal
polynomials always serialize byte-identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "BivarLaurent",
    "UnivarLaurentT",
    "NotDivisible",
    "PoleAtZero",
    "Z",
    "T",
]

Rational = Fraction | int


class NotDivisible(ArithmeticError):
    """No Laurent-polynomial quotient exists for the requested division."""


class PoleAtZero(ZeroDivisionError):
    """A negative exponent was evaluated at zero."""


def _coerce(value: Rational) -> Rational:
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _ratio(a: Rational, b: Rational) -> Rational:
    """Exact quotient of two rationals (never a float)."""
    return _coerce(Fraction(a) / Fraction(b))


def _format_t_terms(items: list[tuple[int, Rational]]) -> str:
    # Human-readable form uses descending powers of t (math convention);
    # the canonical serialization order stays ascending.
    parts: list[str] = []
    for et, c in sorted(items, reverse=True):
        mag = abs(c)
        base = "" if et == 0 else ("t" if et == 1 else f"t^{et}")
        if base and mag == 1:
            body = base
        elif base:
            body = f"{mag}*{base}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts) if parts else "0"


class UnivarLaurentT:
    """A Laurent polynomial in t alone, with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        data: dict[int, Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for et, c in items:
            c = _coerce(c)
            if not c:
                continue
            key = int(et)
            total = data.get(key, 0) + c
            if total:
                data[key] = total
            else:
                data.pop(key, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "UnivarLaurentT":
        return cls()

    @classmethod
    def one(cls) -> "UnivarLaurentT":
        return cls({0: 1})

    @classmethod
    def monomial(cls, et: int, coeff: Rational = 1) -> "UnivarLaurentT":
        return cls({et: coeff})

    def terms(self) -> Iterator[tuple[int, Rational]]:
        """Terms in canonical order (ascending t exponent)."""
        for et in sorted(self._terms):
            yield et, self._terms[et]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, et: int) -> Rational:
        return self._terms.get(et, 0)

    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def __add__(self, other: "UnivarLaurentT | Rational") -> "UnivarLaurentT":
        if isinstance(other, (int, Fraction)):
            other = UnivarLaurentT({0: other})
        if not isinstance(other, UnivarLaurentT):
            return NotImplemented
        data = dict(self._terms)
        for et, c in other._terms.items():
            total = data.get(et, 0) + c
            if total:
                data[et] = total
            else:
                data.pop(et, None)
        out = UnivarLaurentT.__new__(UnivarLaurentT)
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self) -> "UnivarLaurentT":
        out = UnivarLaurentT.__new__(UnivarLaurentT)
        out._terms = {et: -c for et, c in self._terms.items()}
        return out

    def __sub__(self, other: "UnivarLaurentT | Rational") -> "UnivarLaurentT":
        if isinstance(other, (int, Fraction)):
            other = UnivarLaurentT({0: other})
        return self + (-other)

    def __rsub__(self, other: Rational) -> "UnivarLaurentT":
        return (-self) + other

    def __mul__(self, other: "UnivarLaurentT | Rational") -> "UnivarLaurentT":
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return UnivarLaurentT()
            out = UnivarLaurentT.__new__(UnivarLaurentT)
            out._terms = {et: v * c for et, v in self._terms.items()}
            return out
        if not isinstance(other, UnivarLaurentT):
            return NotImplemented
        data: dict[int, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = e1 + e2
                total = data.get(key, 0) + c1 * c2
                if total:
                    data[key] = total
                else:
                    data.pop(key, None)
        out = UnivarLaurentT.__new__(UnivarLaurentT)
        out._terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UnivarLaurentT":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to a negative power")
            ((et, c),) = self._terms.items()
            return UnivarLaurentT({et * n: Fraction(c) ** n})
        result = UnivarLaurentT.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, et: int) -> "UnivarLaurentT":
        """Multiply by the monomial t**et."""
        out = UnivarLaurentT.__new__(UnivarLaurentT)
        out._terms = {e + et: c for e, c in self._terms.items()}
        return out

    def reciprocal_t(self) -> "UnivarLaurentT":
        """Substitute t -> 1/t."""
        out = UnivarLaurentT.__new__(UnivarLaurentT)
        out._terms = {-e: c for e, c in self._terms.items()}
        return out

    def to_bivar(self, ez: int = 0) -> "BivarLaurent":
        """Embed as a bivariate polynomial, optionally times z**ez."""
        return BivarLaurent({(ez, et): c for et, c in self._terms.items()})

    def to_triples(self) -> list[list[int]]:
        """Canonical serialization: [e_t, numerator, denominator] per term."""
        return [[et, c.numerator, c.denominator] for et, c in self.terms()]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> "UnivarLaurentT":
        return cls({int(et): Fraction(int(num), int(den)) for et, num, den in triples})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UnivarLaurentT({0: other})
        if not isinstance(other, UnivarLaurentT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms()))

    def __str__(self) -> str:
        return _format_t_terms(list(self._terms.items()))

    def __repr__(self) -> str:
        return f"UnivarLaurentT({self})"


class BivarLaurent:
    """A Laurent polynomial in (z, t) over the rationals, stored sparsely.

    Exponent pairs may be negative in either variable.  Values are immutable
    after construction; all operations return new polynomials.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[tuple[int, int], Rational] | Iterable[tuple[tuple[int, int], Rational]] = (),
    ):
        data: dict[tuple[int, int], Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (ez, et), c in items:
            c = _coerce(c)
            if not c:
                continue
            key = (int(ez), int(et))
            total = data.get(key, 0) + c
            if total:
                data[key] = total
            else:
                data.pop(key, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "BivarLaurent":
        return cls()

    @classmethod
    def one(cls) -> "BivarLaurent":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, ez: int = 0, et: int = 0, coeff: Rational = 1) -> "BivarLaurent":
        return cls({(ez, et): coeff})

    def terms(self) -> Iterator[tuple[tuple[int, int], Rational]]:
        """Terms in canonical order (ascending e_z, then ascending e_t)."""
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "BivarLaurent | Rational") -> "BivarLaurent":
        if isinstance(other, (int, Fraction)):
            other = BivarLaurent({(0, 0): other})
        if not isinstance(other, BivarLaurent):
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            total = data.get(key, 0) + c
            if total:
                data[key] = total
            else:
                data.pop(key, None)
        out = BivarLaurent.__new__(BivarLaurent)
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self) -> "BivarLaurent":
        out = BivarLaurent.__new__(BivarLaurent)
        out._terms = {key: -c for key, c in self._terms.items()}
        return out

    def __sub__(self, other: "BivarLaurent | Rational") -> "BivarLaurent":
        if isinstance(other, (int, Fraction)):
            other = BivarLaurent({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other: Rational) -> "BivarLaurent":
        return (-self) + other

    def __mul__(self, other: "BivarLaurent | Rational") -> "BivarLaurent":
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return BivarLaurent()
            out = BivarLaurent.__new__(BivarLaurent)
            out._terms = {key: v * c for key, v in self._terms.items()}
            return out
        if not isinstance(other, BivarLaurent):
            return NotImplemented
        data: dict[tuple[int, int], Rational] = {}
        for (z1, t1), c1 in self._terms.items():
            for (z2, t2), c2 in other._terms.items():
                key = (z1 + z2, t1 + t2)
                total = data.get(key, 0) + c1 * c2
                if total:
                    data[key] = total
                else:
                    data.pop(key, None)
        out = BivarLaurent.__new__(BivarLaurent)
        out._terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivarLaurent":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to a negative power")
            (((ez, et), c),) = self._terms.items()
            return BivarLaurent({(ez * n, et * n): Fraction(c) ** n})
        result = BivarLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, ez: int, et: int = 0) -> "BivarLaurent":
        """Multiply by the monomial z**ez * t**et."""
        out = BivarLaurent.__new__(BivarLaurent)
        out._terms = {(z + ez, t + et): c for (z, t), c in self._terms.items()}
        return out

    def coeff_of_z(self, k: int) -> UnivarLaurentT:
        """The coefficient of z**k, as a polynomial in t (zero if absent)."""
        return UnivarLaurentT({et: c for (ez, et), c in self._terms.items() if ez == k})

    def by_z(self) -> Iterator[tuple[int, UnivarLaurentT]]:
        """Nonzero z-levels in ascending order with their t-coefficients."""
        for ez in sorted({ez for ez, _ in self._terms}):
            yield ez, self.coeff_of_z(ez)

    def min_z_degree(self) -> int | None:
        """Lowest z exponent over nonzero terms, or None for the zero polynomial."""
        if not self._terms:
            return None
        return min(ez for ez, _ in self._terms)

    def max_z_degree(self) -> int | None:
        if not self._terms:
            return None
        return max(ez for ez, _ in self._terms)

    def is_even_nonneg_in_z(self) -> bool:
        """True iff every nonzero term has an even, nonnegative z exponent."""
        return all(ez >= 0 and ez % 2 == 0 for ez, _ in self._terms)

    def divide_exact(self, divisor: "BivarLaurent") -> "BivarLaurent":
        """Exact division: return q with q * divisor == self.

        Raises NotDivisible when no Laurent-polynomial quotient exists, and
        ZeroDivisionError for a zero divisor.
        """
        if not isinstance(divisor, BivarLaurent):
            divisor = BivarLaurent({(0, 0): divisor})
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return BivarLaurent()
        # Strip monomial units so both operands become honest polynomials
        # in Q[z, t]; divisibility is unchanged and the quotient of honest
        # polynomials is honest (lowest-degree slices multiply).
        a_z = min(ez for ez, _ in self._terms)
        a_t = min(et for _, et in self._terms)
        d_z = min(ez for ez, _ in divisor._terms)
        d_t = min(et for _, et in divisor._terms)
        rem = {(ez - a_z, et - a_t): c for (ez, et), c in self._terms.items()}
        den = {(ez - d_z, et - d_t): c for (ez, et), c in divisor._terms.items()}
        lead = max(den)
        lead_c = den[lead]
        quot: dict[tuple[int, int], Rational] = {}
        while rem:
            top = max(rem)  # lexicographic on (e_z, e_t) is a well-order on N^2
            qz, qt = top[0] - lead[0], top[1] - lead[1]
            if qz < 0 or qt < 0:
                raise NotDivisible(f"{self} is not divisible by {divisor}")
            qc = _ratio(rem[top], lead_c)
            quot[(qz, qt)] = qc
            for (ez, et), c in den.items():
                key = (ez + qz, et + qt)
                total = rem.get(key, 0) - qc * c
                if total:
                    rem[key] = total
                else:
                    rem.pop(key, None)
        out = BivarLaurent.__new__(BivarLaurent)
        out._terms = quot
        return out.shift(a_z - d_z, a_t - d_t)

    def evaluate(self, z0: Rational, t0: Rational) -> Fraction:
        """Exact value of the substitution z -> z0, t -> t0."""
        z0 = Fraction(_coerce(z0))
        t0 = Fraction(_coerce(t0))
        total = Fraction(0)
        for (ez, et), c in self._terms.items():
            if z0 == 0 and ez < 0:
                raise PoleAtZero("negative power of z evaluated at z = 0")
            if t0 == 0 and et < 0:
                raise PoleAtZero("negative power of t evaluated at t = 0")
            total += c * z0**ez * t0**et
        return total

    def to_quadruples(self) -> list[list[int]]:
        """Canonical serialization: [e_z, e_t, numerator, denominator] per term."""
        return [[ez, et, c.numerator, c.denominator] for (ez, et), c in self.terms()]

    @classmethod
    def from_quadruples(cls, quadruples: Iterable[Iterable[int]]) -> "BivarLaurent":
        return cls(
            {(int(ez), int(et)): Fraction(int(num), int(den)) for ez, et, num, den in quadruples}
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivarLaurent({(0, 0): other})
        if not isinstance(other, BivarLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for ez, ct in self.by_z():
            t_str = str(ct)
            if ez == 0:
                parts.append(t_str)
            else:
                z_str = "z" if ez == 1 else f"z^{ez}"
                parts.append(f"({t_str})*{z_str}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BivarLaurent({self})"


Z = BivarLaurent.monomial(1, 0)
T = BivarLaurent.monomial(0, 1)
