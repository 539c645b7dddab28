"""Sparse multivariate polynomials with exact rational coefficients.

Elements of Sym X*(T) ~ H*(BT): variables x1..xr are the coordinate
characters, so a character becomes a homogeneous linear form.
"""

import re
from fractions import Fraction

from .errors import InputError


class SymPolynomial:
    """Polynomial in ``nvars`` variables stored as ``{exponents: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise InputError(f"exponent vector {exps} has wrong length")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def linear(cls, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    def _coerce(self, other):
        if isinstance(other, SymPolynomial):
            if other.nvars != self.nvars:
                raise InputError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return SymPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return SymPolynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SymPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SymPolynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InputError("only non-negative integer powers are supported")
        out = SymPolynomial.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPolynomial.constant(self.nvars, other)
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return {sum(e) for e in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """Total degree; ``None`` for the zero polynomial."""
        return max(self.degrees()) if self.terms else None

    def sorted_terms(self):
        # graded lexicographic, highest first: x1 > x2 > ...
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}**{e}"
                            for i, e in enumerate(exps) if e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"SymPolynomial({self.nvars}, {str(self)!r})"

    @classmethod
    def parse(cls, text, nvars):
        """Inverse of ``str``: sums of ``c*x1**a*x2**b`` terms with p/q coefficients."""
        src = text.replace(" ", "")
        if src in ("", "0"):
            return cls.zero(nvars)
        if src[0] not in "+-":
            src = "+" + src
        terms = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", src):
            coeff = Fraction(1)
            exps = [0] * nvars
            for token in body.replace("**", "^").split("*"):
                num = re.fullmatch(r"\d+(?:/\d+)?", token)
                var = re.fullmatch(r"x(\d+)(?:\^(\d+))?", token)
                if num:
                    coeff *= Fraction(token)
                elif var:
                    i = int(var.group(1)) - 1
                    if not 0 <= i < nvars:
                        raise InputError(f"variable x{i + 1} out of range in {text!r}")
                    exps[i] += int(var.group(2) or 1)
                else:
                    raise InputError(f"cannot parse polynomial {text!r}")
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + (coeff if sign == "+" else -coeff)
        return cls(nvars, terms)


def char_to_linear(chi):
    """First Chern class of the character: the linear form with chi's coordinates."""
    return SymPolynomial.linear(list(chi))
