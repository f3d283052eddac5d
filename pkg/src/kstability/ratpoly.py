"""Exact rational scalars and small dense/sparse polynomials.

``Rational`` is :class:`fractions.Fraction`.  ``UniPoly`` holds a dense
coefficient tuple in ``t``; ``BiPoly`` holds a sparse map of exponent pairs
``(i, j) -> coeff`` for the term ``coeff * a**i * b**j``.  Both are
immutable and canonical on construction, so ``==`` is structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

Rational = Fraction
Number = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Raised when a linear factor does not divide a polynomial exactly."""

    def __init__(self, factor: str, remainder: "UniPoly | BiPoly"):
        self.factor = factor
        self.remainder = remainder
        super().__init__(f"{factor} does not divide; remainder {remainder}")


def as_rational(x: Number | str) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or 'p/q'")
    return Fraction(x)


def fraction_str(x: Fraction) -> str:
    """Canonical lowest-terms string, ``"p/q"`` or ``"p"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------
# univariate


class UniPoly:
    """Dense polynomial in one variable; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def __reduce__(self):
        return (UniPoly, (self.coeffs,))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: Number) -> "UniPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({[fraction_str(c) for c in self.coeffs]})"

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        p = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        q = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(p, q))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_uni(other))

    def __rsub__(self, other):
        return _uni(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _uni(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: Number) -> "UniPoly":
        return UniPoly(c * x for x in self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def antiderivative(self) -> "UniPoly":
        """Antiderivative with zero constant term."""
        return UniPoly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def compose_linear(self, lin: "BiPoly") -> "BiPoly":
        """Substitute ``t := lin`` where ``lin`` is a BiPoly; Horner form."""
        acc = BiPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + BiPoly.constant(c)
        return acc


def _uni(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to UniPoly")


T = UniPoly([0, 1])


def uni_arith(p: UniPoly, q: UniPoly | Number, op: str) -> UniPoly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (``q`` a scalar)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown op {op!r}")


def definite_integral(p: UniPoly, lower: Number, upper: Number) -> Fraction:
    """Exact ``∫_lower^upper p(t) dt``."""
    prim = p.antiderivative()
    return prim(Fraction(upper)) - prim(Fraction(lower))


# --------------------------------------------------------------------------
# bivariate


class BiPoly:
    """Sparse polynomial in ``(a, b)``; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Number] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __reduce__(self):
        return (BiPoly, (self.terms,))

    @classmethod
    def constant(cls, c: Number) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_uni(cls, p: UniPoly, var: str) -> "BiPoly":
        if var == "a":
            return cls({(i, 0): c for i, c in enumerate(p.coeffs)})
        if var == "b":
            return cls({(0, i): c for i, c in enumerate(p.coeffs)})
        raise ValueError(f"unknown variable {var!r}")

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: str) -> int:
        k = 0 if var == "a" else 1
        return max((e[k] for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(("BiPoly", tuple(self.terms.items())))

    def __repr__(self):
        return f"BiPoly({ {k: fraction_str(v) for k, v in self.terms.items()} })"

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        other = _bi(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_bi(other))

    def __rsub__(self, other):
        return _bi(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        other = _bi(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), x in self.terms.items():
            for (i2, j2), y in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + x * y
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BiPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, a: Number, b: Number) -> Fraction:
        return bipoly_eval(self, a, b)


def _bi(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to BiPoly")


A = BiPoly({(1, 0): 1})
B = BiPoly({(0, 1): 1})


def bipoly_eval(f: BiPoly, a: Number, b: Number) -> Fraction:
    """Exact evaluation of ``f`` at ``(a, b)``."""
    a, b = Fraction(a), Fraction(b)
    # Horner in b per a-power, then Horner in a.
    rows: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in f.terms.items():
        rows.setdefault(i, {})[j] = c
    acc = Fraction(0)
    for i in range(f.degree_in("a"), -1, -1):
        row = rows.get(i, {})
        inner = Fraction(0)
        for j in range(max(row, default=-1), -1, -1):
            inner = inner * b + row.get(j, 0)
        acc = acc * a + inner
    return acc


def symbolic_integral_ab(p: UniPoly, weight: str | int = 1) -> BiPoly:
    """``∫_{-b}^{-a} w(t) p(t) dt`` as a BiPoly, with ``w`` either ``1`` or ``t``."""
    if weight in (1, "1"):
        integrand = p
    elif weight == "t":
        integrand = p * T
    else:
        raise ValueError(f"weight must be 1 or 't', got {weight!r}")
    prim = integrand.antiderivative()
    return prim.compose_linear(-A) - prim.compose_linear(-B)


LINEAR_FACTORS = ("b-a", "a", "b", "1-b", "1-2a", "1-2b")


def substitute_line(f: BiPoly, which: str, value: Number | None = None) -> UniPoly:
    """Restrict ``f`` to ``b := value``, ``a := value`` or ``b := a``.

    The result is a UniPoly in the remaining variable.
    """
    if which == "b=a":
        out: dict[int, Fraction] = {}
        for (i, j), c in f.terms.items():
            out[i + j] = out.get(i + j, 0) + c
        n = max(out, default=-1) + 1
        return UniPoly(out.get(k, 0) for k in range(n))
    if value is None:
        raise ValueError(f"{which} needs a value")
    v = Fraction(value)
    if which == "b":
        out = {}
        for (i, j), c in f.terms.items():
            out[i] = out.get(i, 0) + c * v**j
        return UniPoly(out.get(k, 0) for k in range(max(out, default=-1) + 1))
    if which == "a":
        out = {}
        for (i, j), c in f.terms.items():
            out[j] = out.get(j, 0) + c * v**i
        return UniPoly(out.get(k, 0) for k in range(max(out, default=-1) + 1))
    raise ValueError(f"unknown line {which!r}")


def _factor_poly(factor: str) -> BiPoly:
    return {
        "b-a": B - A,
        "a": A,
        "b": B,
        "1-b": 1 - B,
        "1-2a": 1 - 2 * A,
        "1-2b": 1 - 2 * B,
    }[factor]


def _divide_by_shifted(f: BiPoly, var: str, root: Fraction, slope: Fraction) -> tuple[BiPoly, BiPoly]:
    """Synthetic division of f by ``slope * (var - root)`` in the named variable.

    Returns ``(quotient, remainder)``; the remainder does not involve ``var``.
    """
    k = 0 if var == "a" else 1
    # group coefficients by power of var: f = sum_d f_d(other) var**d
    groups: dict[int, dict[int, Fraction]] = {}
    for e, c in f.terms.items():
        groups.setdefault(e[k], {})[e[1 - k]] = c
    top = max(groups, default=-1)
    quotient: dict[tuple[int, int], Fraction] = {}
    carry: dict[int, Fraction] = {}
    for d in range(top, -1, -1):
        cur = dict(groups.get(d, {}))
        for m, c in carry.items():
            cur[m] = cur.get(m, 0) + c
        if d == 0:
            rem = {((0, m) if k == 0 else (m, 0)): c for m, c in cur.items()}
            q = {e: c / slope for e, c in quotient.items()}
            return BiPoly(q), BiPoly(rem)
        for m, c in cur.items():
            e = (d - 1, m) if k == 0 else (m, d - 1)
            quotient[e] = c
        carry = {m: c * root for m, c in cur.items()}
    return BiPoly(), BiPoly()


def divide_linear_factor(f: BiPoly, factor: str) -> BiPoly:
    """Exact quotient ``f / factor`` for one of :data:`LINEAR_FACTORS`.

    ``b - a`` is treated as ``b - root`` with ``root = a`` by dividing in
    ``b`` over the ring of polynomials in ``a``.  Raises :class:`NotDivisible`
    with the remainder when the division is not exact.
    """
    if factor not in LINEAR_FACTORS:
        raise ValueError(f"unsupported factor {factor!r}")
    if factor == "b-a":
        q, r = _divide_b_minus_a(f)
    elif factor == "a":
        q, r = _divide_by_shifted(f, "a", Fraction(0), Fraction(1))
    elif factor == "b":
        q, r = _divide_by_shifted(f, "b", Fraction(0), Fraction(1))
    elif factor == "1-b":
        q, r = _divide_by_shifted(f, "b", Fraction(1), Fraction(-1))
    elif factor == "1-2a":
        q, r = _divide_by_shifted(f, "a", Fraction(1, 2), Fraction(-2))
    else:
        q, r = _divide_by_shifted(f, "b", Fraction(1, 2), Fraction(-2))
    if not r.is_zero():
        raise NotDivisible(factor, r)
    if q * _factor_poly(factor) != f:
        raise AssertionError("division round trip failed")
    return q


def _divide_b_minus_a(f: BiPoly) -> tuple[BiPoly, BiPoly]:
    # Horner in b with the root a: coefficients are polynomials in a.
    groups: dict[int, BiPoly] = {}
    for (i, j), c in f.terms.items():
        groups[j] = groups.get(j, BiPoly()) + BiPoly({(i, 0): c})
    top = max(groups, default=-1)
    quotient = BiPoly()
    carry = BiPoly()
    for d in range(top, -1, -1):
        cur = groups.get(d, BiPoly()) + carry
        if d == 0:
            return quotient, cur
        quotient = quotient + cur * BiPoly({(0, d - 1): 1})
        carry = cur * A
    return BiPoly(), BiPoly()


def multinomial(n: int, alpha: tuple[int, ...]) -> int:
    out, rest = 1, n
    for k in alpha:
        out *= comb(rest, k)
        rest -= k
    return out
