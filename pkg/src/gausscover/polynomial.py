"""Sparse integer Laurent polynomials in one variable ``t``."""
from __future__ import annotations

from typing import Iterable, Mapping

from .errors import GaussSyntaxError


class LaurentPolynomial:
    """Immutable exponent -> coefficient map with no stored zeros.

    >>> p = LaurentPolynomial({2: 1, 1: -2, 0: 1})
    >>> p(1), p.derivative()(1)
    (0, 0)
    >>> str(p)
    '2:1 1:-2 0:1'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return LaurentPolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        return LaurentPolynomial(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._terms.items()
            for e2, c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __call__(self, t):
        """Evaluate at ``t``; at ``t = 1`` this is exact for any exponents."""
        if t == 1:
            return sum(self._terms.values())
        return sum(c * t**e for e, c in self._terms.items())

    def derivative(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e - 1: e * c for e, c in self._terms.items()})

    def __str__(self):
        return " ".join(f"{e}:{c}" for e, c in sorted(self._terms.items(), reverse=True))

    def __repr__(self):
        return f"LaurentPolynomial({self.pretty()})"

    def pretty(self) -> str:
        """Human-readable form such as ``t^-1 + t - 2``."""
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def parse_polynomial(text: str) -> LaurentPolynomial:
    """Parse whitespace-separated ``<exp>:<coeff>`` pairs; empty text is zero."""
    terms: dict[int, int] = {}
    for tok in text.split():
        exp, sep, coeff = tok.partition(":")
        try:
            if not sep:
                raise ValueError
            e, c = int(exp), int(coeff)
        except ValueError:
            raise GaussSyntaxError(f"bad polynomial term {tok!r}; expected <exp>:<coeff>") from None
        if e in terms:
            raise GaussSyntaxError(f"exponent {e} appears twice")
        if c == 0:
            raise GaussSyntaxError(f"zero coefficient for exponent {e}")
        terms[e] = c
    return LaurentPolynomial(terms)


def format_polynomial(p: LaurentPolynomial) -> str:
    return str(p)
